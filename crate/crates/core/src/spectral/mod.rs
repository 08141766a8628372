//! Eigenpair certificates, Perron iteration and the connectivity counts
//! β(G), β_Z(G) and β_ρ(G).
//!
//! The connectivity routines never search the spectrum. They build the
//! component indicator vectors, certify each one exactly, and then pin down
//! maximality component by component: on a connected piece the shifted
//! Laplacian `∇I - L` is nonnegative and weakly irreducible, so its positive
//! eigenvector is unique up to scale. Perron iteration landing on `(∇, e)`
//! is the evidence that `e` spans the nonnegative null vectors there.

mod connectivity;
mod eigenpair;
mod perron;

use thiserror::Error;

use crate::hypergraph::HypergraphError;
use crate::tensor::TensorError;

pub use connectivity::{
    geometry_connectivity, indicator, rho_connectivity, sign_pattern_candidates,
    signed_null_vectors, signed_null_vectors_demo, unit_indicator, z_geometry_connectivity,
    ConnectivityOptions, ConnectivityReport, Maximality, SignedNullVectors, DEFAULT_EIGENPAIR_TOL,
};
pub use eigenpair::{verify_h_eigenpair, verify_z_eigenpair, EigenpairCertificate, Variant};
pub use perron::{
    cosine_with_ones, perron, PerronOptions, PerronResult, DEFAULT_MAX_ITER, DEFAULT_PERRON_TOL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("candidate eigenvector is the zero vector")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionError { expected: usize, found: usize },
    #[error("tensor is not weakly irreducible")]
    NotIrreducible,
    #[error("power iteration did not converge in {iterations} iterations (bounds [{lower}, {upper}])")]
    NoConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },
    #[error("starting vector must be finite and entrywise positive")]
    InvalidStart,
    #[error("Perron pair failed its eigenpair check (residual {residual})")]
    CertificateRejected { residual: f64 },
    #[error("hypergraph is not regular (degrees {degrees:?})")]
    NotRegular { degrees: Vec<usize> },
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}
