// Spectral radius and Perron vector of nonnegative weakly irreducible
// tensors.

use std::error::Error;

use geoconn::spectral::{cosine_with_ones, perron, PerronOptions};
use geoconn::{Hypergraph, TensorView};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = PerronOptions::default();

    // regular: ρ(A) equals the degree and the Perron vector is constant
    let g = Hypergraph::complete(6, 3)?;
    let r = perron(&TensorView::adjacency(&g), &opts)?;
    println!("K_6^(3): rho = {:.10}, cos(x, e) = {:.12}, {} iterations", r.rho, cosine_with_ones(&r.vector), r.iterations);
    assert!((r.rho - 10.0).abs() < 1e-8);

    // irregular: two 3-edges sharing a vertex, ρ = 2^{1/3}
    let g = Hypergraph::new(5, 3, [[1, 2, 3], [1, 4, 5]])?;
    let r = perron(&TensorView::adjacency(&g), &opts)?;
    println!("linked pair: rho = {:.10} (bounds [{:.10}, {:.10}])", r.rho, r.lower, r.upper);
    println!("  vector = {:?}", r.vector);
    assert!((r.rho - 2f64.powf(1.0 / 3.0)).abs() < 1e-8);

    // shifted Laplacian of a connected graph: (max degree, constant vector)
    let r = perron(&TensorView::shifted_laplacian(&g), &opts)?;
    println!("shifted laplacian: rho = {:.10}, max degree = {}", r.rho, g.max_degree());

    // a reducible tensor is refused
    let split = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]])?;
    let err = perron(&TensorView::adjacency(&split), &opts).unwrap_err();
    println!("two triangles: {err}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
