//! Small named hypergraphs used throughout the tests and examples.

use crate::hypergraph::Hypergraph;

/// Eigenvalues of the Laplacian tensor of [`single_edge_k4`] as
/// `(real, imaginary)` parts, paired with their algebraic multiplicities.
/// These are quoted constants; nothing in this crate recomputes them.
pub const SINGLE_EDGE_K4_LAPLACIAN_SPECTRUM: [((f64, f64), usize); 5] = [
    ((1.0, 0.0), 36),
    ((2.0, 0.0), 16),
    ((0.0, 0.0), 16),
    ((1.0, 1.0), 16),
    ((1.0, -1.0), 16),
];

/// Algebraic multiplicity of the Laplacian eigenvalue 0 of [`single_edge_k4`].
pub const SINGLE_EDGE_K4_NULL_MULTIPLICITY: usize = 16;

/// One 4-uniform edge on four vertices.
pub fn single_edge_k4() -> Hypergraph {
    Hypergraph::new(4, 4, [[1, 2, 3, 4]]).expect("valid fixture")
}

/// Two disjoint 3-uniform edges `{1,2,3}` and `{4,5,6}`.
pub fn two_triangles() -> Hypergraph {
    Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).expect("valid fixture")
}

/// Two 3-uniform edges sharing vertex 3; connected but not regular.
pub fn linked_pair() -> Hypergraph {
    Hypergraph::new(5, 3, [[1, 2, 3], [3, 4, 5]]).expect("valid fixture")
}
