// The support digraph of the adjacency tensor is strongly connected exactly
// when the hypergraph is connected.

use std::error::Error;

use geoconn::{Hypergraph, TensorView};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let connected = Hypergraph::new(5, 3, [[1, 2, 3], [3, 4, 5]])?;
    let split = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]])?;

    for (name, g) in [("linked pair", &connected), ("two triangles", &split)] {
        let a = TensorView::adjacency(g);
        let digraph = a.support_digraph()?;
        let sccs = digraph.strongly_connected_components();
        println!(
            "{name}: {} arcs, SCCs {:?}, weakly irreducible = {}",
            digraph.arcs().len(),
            sccs,
            a.is_weakly_irreducible()?
        );
        assert_eq!(a.is_weakly_irreducible()?, g.is_connected());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
