//! Machine-readable JSON report, schema version "1".
//!
//! Reals and rationals are serialized as strings (see [`Scalar`]) so exact
//! certificates survive a round trip unchanged. Field order is fixed by the
//! struct declarations below.

use serde::{Deserialize, Serialize};

use crate::hypergraph::Hypergraph;
use crate::scalar::Scalar;
use crate::spectral::{
    geometry_connectivity, perron, ConnectivityOptions, EigenpairCertificate, PerronOptions,
    SpectralError, Variant,
};
use crate::tensor::TensorView;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub input: InputSummary,
    pub components: Vec<Vec<usize>>,
    pub beta: usize,
    pub beta_z: usize,
    pub beta_rho: Option<usize>,
    pub connected: bool,
    pub weakly_irreducible: bool,
    pub regular_degree: Option<usize>,
    pub certificates: Vec<CertificateEntry>,
    pub perron: Option<PerronEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputSummary {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub vector: Vec<Scalar>,
    pub lambda: Scalar,
    pub variant: Variant,
    pub residual: Scalar,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronEntry {
    pub rho: Scalar,
    pub vector: Vec<Scalar>,
    pub iterations: usize,
    pub tolerance: Scalar,
}

impl From<&EigenpairCertificate> for CertificateEntry {
    fn from(c: &EigenpairCertificate) -> Self {
        let residual = if c.exact && c.residual == 0.0 {
            Scalar::from(0)
        } else {
            Scalar::Float(c.residual)
        };
        Self {
            vector: c.x.clone(),
            lambda: c.lambda.clone(),
            variant: c.variant,
            residual,
            exact: c.exact,
        }
    }
}

/// Full analysis of `g`. The Perron section is present when the adjacency
/// tensor is weakly irreducible.
pub fn build_report(
    g: &Hypergraph,
    source: &str,
    opts: &ConnectivityOptions,
) -> Result<ReportDocument, SpectralError> {
    let report = geometry_connectivity(g, opts)?;
    let perron = if report.weakly_irreducible {
        let r = perron(&TensorView::adjacency(g), &opts.perron)?;
        Some(PerronEntry {
            rho: Scalar::Float(r.rho),
            vector: Scalar::floats(&r.vector),
            iterations: r.iterations,
            tolerance: Scalar::Float(opts.perron.tol),
        })
    } else {
        None
    };
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        input: InputSummary {
            k: g.k(),
            n: g.n(),
            m: g.m(),
            source: source.to_string(),
        },
        connected: report.component_count == 1,
        components: report.components,
        beta: report.beta,
        beta_z: report.beta_z,
        beta_rho: report.beta_rho,
        weakly_irreducible: report.weakly_irreducible,
        regular_degree: report.regular_degree,
        certificates: report.certificates.iter().map(CertificateEntry::from).collect(),
        perron,
    })
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// PerronOptions with the CLI's overrides applied.
pub(crate) fn perron_options(tol: Option<f64>, max_iter: usize) -> PerronOptions {
    PerronOptions {
        tol: tol.unwrap_or(crate::spectral::DEFAULT_PERRON_TOL),
        max_iter,
        ..PerronOptions::default()
    }
}
