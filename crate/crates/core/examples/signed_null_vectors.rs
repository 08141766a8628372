// A single 4-uniform edge: its Laplacian has four ±1 null vectors, yet only
// one of them is nonnegative, so β = 1.

use std::error::Error;

use geoconn::fixtures;
use geoconn::spectral::signed_null_vectors_demo;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = fixtures::single_edge_k4();
    let demo = signed_null_vectors_demo(&g)?;
    for c in &demo.accepted {
        let x: Vec<String> = c.x.iter().map(ToString::to_string).collect();
        println!("null vector ({}) residual {} exact {}", x.join(","), c.residual, c.exact);
    }
    println!("signed null vectors: {}, beta: {}", demo.accepted.len(), demo.beta);
    println!(
        "Laplacian spectrum (eigenvalue, multiplicity): {:?}",
        fixtures::SINGLE_EDGE_K4_LAPLACIAN_SPECTRUM
    );
    assert_eq!((demo.accepted.len(), demo.beta), (4, 1));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
