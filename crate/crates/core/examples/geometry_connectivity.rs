// β, β_Z and β_ρ: the number of independent nonnegative eigenvectors
// certified per connected component.

use std::error::Error;

use geoconn::spectral::{geometry_connectivity, rho_connectivity, z_geometry_connectivity};
use geoconn::{ConnectivityOptions, Hypergraph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = ConnectivityOptions::default();
    let g = Hypergraph::new(7, 3, [[1, 2, 3], [4, 5, 6], [4, 6, 7]])?;

    let r = geometry_connectivity(&g, &opts)?;
    println!("beta = {} (components {:?})", r.beta, r.components);
    for c in &r.certificates {
        let x: Vec<String> = c.x.iter().map(ToString::to_string).collect();
        println!("  ({}) accepted = {} exact = {}", x.join(","), c.accepted, c.exact);
    }
    println!("  maximality: {:?}", r.maximality);

    let z = z_geometry_connectivity(&g, &opts)?;
    println!("beta_z = {}", z.beta_z);
    for c in &z.certificates {
        let norm: f64 = c.x_f64().iter().map(|v| v * v).sum();
        println!("  |x|^2 = {norm:.15}, residual = {:.1e}", c.residual);
    }

    // β_ρ needs a regular hypergraph: three disjoint copies of K_4^(3)
    let k = Hypergraph::complete(4, 3)?;
    let edges = (0..3).flat_map(|c| k.edges().iter().map(move |e| e.iter().map(|v| v + 4 * c).collect::<Vec<_>>()));
    let regular = Hypergraph::new(12, 3, edges)?;
    let rho = rho_connectivity(&regular, &opts)?;
    println!("beta_rho = {:?} at rho = {:?}", rho.beta_rho, rho.spectral_radius);
    assert_eq!(rho.beta_rho, Some(3));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
