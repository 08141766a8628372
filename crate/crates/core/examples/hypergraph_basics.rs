// Building hypergraphs, degrees, components and induced pieces.

use std::error::Error;

use geoconn::Hypergraph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // three edges joined through vertices 2 and 3, plus an isolated vertex 8
    let g = Hypergraph::new(8, 3, [[1, 2, 3], [3, 4, 5], [6, 7, 2]])?;
    println!("n = {}, k = {}, m = {}", g.n(), g.k(), g.m());
    println!("degrees = {:?}, max degree = {}", g.degrees(), g.max_degree());

    let parts = g.connected_components();
    for (i, p) in parts.parts.iter().enumerate() {
        let ind = g.induced(p)?;
        println!("component {}: {:?} ({} edges)", i + 1, p, ind.graph.m());
    }
    assert_eq!(parts.count(), 2);

    // invalid input is rejected with a typed error
    let err = Hypergraph::new(4, 3, [[1, 2, 2]]).unwrap_err();
    println!("rejected: {err}");

    let k4 = Hypergraph::complete(5, 4)?;
    assert_eq!(k4.is_regular(), Some(4));
    println!("complete 4-uniform on 5 vertices is {}-regular", k4.max_degree());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
