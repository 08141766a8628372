// Exact and floating-point H- and Z-eigenpair checks.

use std::error::Error;

use geoconn::spectral::{verify_h_eigenpair, verify_z_eigenpair};
use geoconn::{Hypergraph, Scalar, TensorView};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Hypergraph::new(4, 4, [[1, 2, 3, 4]])?;
    let l = TensorView::laplacian(&g);
    let zero = Scalar::from(0);

    // exact rational check: the all-ones vector is a null vector
    let ones = Scalar::ints(&[1, 1, 1, 1]);
    let c = verify_h_eigenpair(&l, &zero, &ones, 1e-9)?;
    println!("H, ones:    accepted = {}, exact = {}, residual = {}", c.accepted, c.exact, c.residual);
    assert!(c.accepted && c.exact);

    // a basis vector is not
    let e1 = Scalar::ints(&[1, 0, 0, 0]);
    let c = verify_h_eigenpair(&l, &zero, &e1, 1e-9)?;
    println!("H, e1:      accepted = {}, residual = {}", c.accepted, c.residual);
    assert!(!c.accepted);

    // Z-check of the unit vector (1/2, 1/2, 1/2, 1/2), exactly
    let half: Vec<Scalar> = (0..4).map(|_| "1/2".parse()).collect::<Result<_, _>>()?;
    let c = verify_z_eigenpair(&l, &zero, &half, 1e-9)?;
    println!("Z, halves:  accepted = {}, exact = {}", c.accepted, c.exact);
    assert!(c.accepted && c.exact);

    // decimal input stays in floating point
    let approx = Scalar::floats(&[0.5, 0.5, 0.5, 0.5 + 1e-13]);
    let c = verify_z_eigenpair(&l, &zero, &approx, 1e-9)?;
    println!("Z, perturbed: accepted = {}, exact = {}, residual = {:.1e}", c.accepted, c.exact, c.residual);
    assert!(c.accepted && !c.exact);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
