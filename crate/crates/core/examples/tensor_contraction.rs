// Computing `T x^{k-1}` implicitly from the edge list and checking it
// against the materialized sparse tensor.

use std::error::Error;

use geoconn::{Hypergraph, TensorView};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Hypergraph::new(5, 3, [[1, 2, 3], [1, 4, 5]])?;
    let x = [1.0, 2.0, 0.5, -1.0, 3.0];

    for (name, view) in [
        ("adjacency", TensorView::adjacency(&g)),
        ("laplacian", TensorView::laplacian(&g)),
        ("shifted laplacian", TensorView::shifted_laplacian(&g)),
    ] {
        let implicit = view.apply(&x)?;
        let dense = view.materialize();
        let explicit = dense.apply(&x)?;
        let err = implicit
            .iter()
            .zip(&explicit)
            .fold(0.0f64, |a, (p, q)| a.max((p - q).abs()));
        println!("{name:>17}: {implicit:?} ({} stored entries, max diff {err:.1e})", dense.nnz());
        assert!(err < 1e-12);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
