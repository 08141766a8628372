//! Geometry connectivity of k-uniform hypergraphs.
//!
//! The number of connected components of a k-uniform hypergraph equals the
//! largest number of linearly independent *nonnegative* null vectors of its
//! Laplacian tensor `L_G = D_G - A_G`. This crate computes that number
//! together with certificates you can check independently:
//!
//! * [`hypergraph`]: construction, degrees, components, induced sub-hypergraphs.
//! * [`tensor`]: implicit contractions `T x^{k-1}` for adjacency and Laplacian
//!   tensors, explicit sparse tensors, support digraphs and weak irreducibility.
//! * [`spectral`]: H- and Z-eigenpair checks (exact in rational arithmetic
//!   where possible), shifted Perron iteration, and β, β_Z, β_ρ reports.
//! * [`cli`]: the `geoconn` command-line front end and its file formats.
//!
//! ```
//! use geoconn::hypergraph::Hypergraph;
//! use geoconn::spectral::{geometry_connectivity, ConnectivityOptions};
//!
//! let g = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).unwrap();
//! let report = geometry_connectivity(&g, &ConnectivityOptions::default()).unwrap();
//! assert_eq!(report.beta, 2);
//! assert!(report.certificates.iter().all(|c| c.exact && c.residual == 0.0));
//! ```

pub mod cli;
pub mod fixtures;
pub mod hypergraph;
pub mod scalar;
pub mod spectral;
pub mod tensor;

pub use hypergraph::{ComponentDecomposition, Hypergraph, HypergraphError};
pub use scalar::Scalar;
pub use spectral::{ConnectivityOptions, ConnectivityReport, EigenpairCertificate};
pub use tensor::{SparseTensor, TensorView};
