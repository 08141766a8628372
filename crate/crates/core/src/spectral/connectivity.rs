use num_bigint::BigInt;
use num_rational::BigRational;

use crate::hypergraph::{ComponentDecomposition, Hypergraph};
use crate::scalar::Scalar;
use crate::tensor::TensorView;

use super::perron::{cosine_with_ones, perron, PerronOptions};
use super::{verify_h_eigenpair, verify_z_eigenpair, EigenpairCertificate, SpectralError};

pub const DEFAULT_EIGENPAIR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivityOptions {
    /// Acceptance threshold for floating-point eigenpair checks and for the
    /// Perron-vector alignment test.
    pub tol: f64,
    pub perron: PerronOptions,
}

impl Default for ConnectivityOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_EIGENPAIR_TOL,
            perron: PerronOptions::default(),
        }
    }
}

/// Per-component evidence that the indicator vector is the only nonnegative
/// null vector up to scale.
#[derive(Debug, Clone, PartialEq)]
pub enum Maximality {
    /// Single vertex, no edges: the one-dimensional zero tensor.
    Isolated,
    /// Perron iteration on the component's shifted tensor returned a positive
    /// vector aligned with the all-ones vector.
    Verified {
        rho: f64,
        expected_rho: f64,
        cosine: f64,
        iterations: usize,
    },
    Unverified { reason: String },
}

impl Maximality {
    pub fn is_verified(&self) -> bool {
        !matches!(self, Maximality::Unverified { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivityReport {
    pub component_count: usize,
    pub components: Vec<Vec<usize>>,
    pub beta: usize,
    pub beta_z: usize,
    /// Present iff the hypergraph is regular.
    pub beta_rho: Option<usize>,
    /// One per component, in component order.
    pub certificates: Vec<EigenpairCertificate>,
    pub maximality: Vec<Maximality>,
    pub weakly_irreducible: bool,
    pub regular_degree: Option<usize>,
    pub spectral_radius: Option<f64>,
}

impl ConnectivityReport {
    pub fn maximality_verified(&self) -> bool {
        self.maximality.iter().all(Maximality::is_verified)
    }
}

/// 0/1 indicator of `part` in `1..=n`.
pub fn indicator(n: usize, part: &[usize]) -> Vec<Scalar> {
    let mut v = vec![Scalar::from(0); n];
    for &i in part {
        v[i - 1] = Scalar::from(1);
    }
    v
}

/// Indicator of `part` scaled to unit Euclidean norm; exact when `|part|` is
/// a perfect square.
pub fn unit_indicator(n: usize, part: &[usize]) -> Vec<Scalar> {
    let size = part.len() as u64;
    let root = (size as f64).sqrt().round() as u64;
    let value = if root * root == size {
        Scalar::Exact(BigRational::new(BigInt::from(1), BigInt::from(root)))
    } else {
        Scalar::Float(1.0 / (size as f64).sqrt())
    };
    let mut v = vec![Scalar::from(0); n];
    for &i in part {
        v[i - 1] = value.clone();
    }
    v
}

struct Basis {
    decomposition: ComponentDecomposition,
    h: Vec<EigenpairCertificate>,
    z: Vec<EigenpairCertificate>,
    /// Adjacency certificates at `d`, when regular.
    rho: Option<(usize, Vec<EigenpairCertificate>)>,
    weakly_irreducible: bool,
}

impl Basis {
    fn build(g: &Hypergraph, tol: f64) -> Result<Self, SpectralError> {
        let decomposition = g.connected_components();
        let n = g.n();
        let lap = TensorView::laplacian(g);
        let zero = Scalar::from(0);
        let mut h = Vec::with_capacity(decomposition.count());
        let mut z = Vec::with_capacity(decomposition.count());
        for part in &decomposition.parts {
            h.push(verify_h_eigenpair(&lap, &zero, &indicator(n, part), tol)?);
            z.push(verify_z_eigenpair(&lap, &zero, &unit_indicator(n, part), tol)?);
        }
        let rho = match g.is_regular() {
            Some(d) => {
                let adj = TensorView::adjacency(g);
                let lambda = Scalar::from(d as i64);
                let certs = decomposition
                    .parts
                    .iter()
                    .map(|part| verify_h_eigenpair(&adj, &lambda, &indicator(n, part), tol))
                    .collect::<Result<Vec<_>, _>>()?;
                Some((d, certs))
            }
            None => None,
        };
        let weakly_irreducible = TensorView::adjacency(g).is_weakly_irreducible()?;
        Ok(Self {
            decomposition,
            h,
            z,
            rho,
            weakly_irreducible,
        })
    }

    fn report(
        self,
        certificates: Vec<EigenpairCertificate>,
        maximality: Vec<Maximality>,
        spectral_radius: Option<f64>,
    ) -> ConnectivityReport {
        let accepted = |c: &[EigenpairCertificate]| c.iter().filter(|c| c.accepted).count();
        ConnectivityReport {
            component_count: self.decomposition.count(),
            beta: accepted(&self.h),
            beta_z: accepted(&self.z),
            beta_rho: self.rho.as_ref().map(|(_, c)| accepted(c)),
            regular_degree: self.rho.as_ref().map(|(d, _)| *d),
            components: self.decomposition.parts,
            certificates,
            maximality,
            weakly_irreducible: self.weakly_irreducible,
            spectral_radius,
        }
    }
}

/// Runs Perron iteration on `view` (a connected component's nonnegative
/// tensor) and checks the result against `(expected_rho, e)`.
fn perron_alignment(
    view: &TensorView,
    expected_rho: f64,
    opts: &ConnectivityOptions,
) -> Result<Maximality, SpectralError> {
    match perron(view, &opts.perron) {
        Ok(r) => {
            let cosine = cosine_with_ones(&r.vector);
            let rho_ok = (r.rho - expected_rho).abs() <= opts.tol * expected_rho.max(1.0);
            if cosine >= 1.0 - opts.tol && rho_ok {
                Ok(Maximality::Verified {
                    rho: r.rho,
                    expected_rho,
                    cosine,
                    iterations: r.iterations,
                })
            } else {
                Ok(Maximality::Unverified {
                    reason: format!(
                        "Perron pair ({}, cos {}) does not match ({expected_rho}, e)",
                        r.rho, cosine
                    ),
                })
            }
        }
        Err(e @ SpectralError::NoConvergence { .. }) => Ok(Maximality::Unverified {
            reason: e.to_string(),
        }),
        Err(e) => Err(e),
    }
}

/// For each component with edges, the Perron pair of `∇_i I - L[V_i]` must be
/// `(∇_i, e)`.
fn laplacian_maximality(
    g: &Hypergraph,
    parts: &[Vec<usize>],
    opts: &ConnectivityOptions,
) -> Result<Vec<Maximality>, SpectralError> {
    let lap = TensorView::laplacian(g);
    parts
        .iter()
        .map(|part| {
            let TensorView::Laplacian(sub) = lap.subtensor(part)? else {
                unreachable!("components never straddle an edge");
            };
            if sub.m() == 0 {
                return Ok(Maximality::Isolated);
            }
            let shifted = TensorView::shifted_laplacian(&sub);
            perron_alignment(&shifted, sub.max_degree() as f64, opts)
        })
        .collect()
}

/// Geometry connectivity β(G): the indicator vectors of the components,
/// each certified exactly as a nonnegative H-eigenvector of `L_G` at 0.
pub fn geometry_connectivity(
    g: &Hypergraph,
    opts: &ConnectivityOptions,
) -> Result<ConnectivityReport, SpectralError> {
    let basis = Basis::build(g, opts.tol)?;
    let maximality = laplacian_maximality(g, &basis.decomposition.parts, opts)?;
    let certificates = basis.h.clone();
    Ok(basis.report(certificates, maximality, None))
}

/// Z-geometry connectivity β_Z(G): the same basis normalized to unit length
/// and checked as Z-eigenvectors of `L_G` at 0.
pub fn z_geometry_connectivity(
    g: &Hypergraph,
    opts: &ConnectivityOptions,
) -> Result<ConnectivityReport, SpectralError> {
    let basis = Basis::build(g, opts.tol)?;
    let maximality = laplacian_maximality(g, &basis.decomposition.parts, opts)?;
    let certificates = basis.z.clone();
    Ok(basis.report(certificates, maximality, None))
}

/// β_ρ(G) for a d-regular hypergraph: indicator vectors certified as
/// H-eigenvectors of `A_G` at `d`, with per-component Perron checks on
/// `A[V_i]`.
pub fn rho_connectivity(
    g: &Hypergraph,
    opts: &ConnectivityOptions,
) -> Result<ConnectivityReport, SpectralError> {
    let d = g.is_regular().ok_or_else(|| SpectralError::NotRegular {
        degrees: g.degrees(),
    })?;
    let basis = Basis::build(g, opts.tol)?;
    let adj = TensorView::adjacency(g);
    let maximality = basis
        .decomposition
        .parts
        .iter()
        .map(|part| {
            let sub = adj.subtensor(part)?;
            if sub.graph().is_none_or(|h| h.m() == 0) {
                return Ok(Maximality::Isolated);
            }
            perron_alignment(&sub, d as f64, opts)
        })
        .collect::<Result<Vec<_>, SpectralError>>()?;
    let certificates = basis.rho.as_ref().map(|(_, c)| c.clone()).unwrap_or_default();
    Ok(basis.report(certificates, maximality, Some(d as f64)))
}

/// Outcome of checking candidate signed null vectors of `L_G`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedNullVectors {
    pub accepted: Vec<EigenpairCertificate>,
    pub rejected: Vec<EigenpairCertificate>,
    pub beta: usize,
}

/// The four ±1 vectors on four vertices that are null vectors of the
/// Laplacian of a single 4-uniform edge. Only the first is nonnegative.
pub fn sign_pattern_candidates() -> Vec<Vec<Scalar>> {
    [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
        .iter()
        .map(|v| Scalar::ints(v))
        .collect()
}

/// Checks each candidate as an H-eigenvector of `L_G` at 0 and reports them
/// next to β(G). Failing candidates are listed, not raised.
pub fn signed_null_vectors(
    g: &Hypergraph,
    candidates: &[Vec<Scalar>],
    opts: &ConnectivityOptions,
) -> Result<SignedNullVectors, SpectralError> {
    let lap = TensorView::laplacian(g);
    let zero = Scalar::from(0);
    let (accepted, rejected) = candidates
        .iter()
        .map(|x| verify_h_eigenpair(&lap, &zero, x, opts.tol))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .partition(|c| c.accepted);
    let beta = geometry_connectivity(g, opts)?.beta;
    Ok(SignedNullVectors {
        accepted,
        rejected,
        beta,
    })
}

/// [`signed_null_vectors`] with the four sign-pattern candidates.
pub fn signed_null_vectors_demo(g: &Hypergraph) -> Result<SignedNullVectors, SpectralError> {
    signed_null_vectors(g, &sign_pattern_candidates(), &ConnectivityOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure_one() -> Hypergraph {
        Hypergraph::new(4, 4, [[1, 2, 3, 4]]).unwrap()
    }

    fn opts() -> ConnectivityOptions {
        ConnectivityOptions::default()
    }

    #[test]
    fn single_edge_has_beta_one() {
        let r = geometry_connectivity(&figure_one(), &opts()).unwrap();
        assert_eq!((r.beta, r.beta_z, r.component_count), (1, 1, 1));
        assert_eq!(r.certificates[0].x, Scalar::ints(&[1, 1, 1, 1]));
        assert!(r.certificates[0].exact);
        assert_eq!(r.certificates[0].residual, 0.0);
        assert!(r.weakly_irreducible);
        assert_eq!(r.beta_rho, Some(1));
        assert!(matches!(r.maximality[0], Maximality::Verified { .. }));
    }

    #[test]
    fn disjoint_edges() {
        let g = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).unwrap();
        let r = geometry_connectivity(&g, &opts()).unwrap();
        assert_eq!(r.beta, 2);
        assert_eq!(r.certificates[0].x, Scalar::ints(&[1, 1, 1, 0, 0, 0]));
        assert_eq!(r.certificates[1].x, Scalar::ints(&[0, 0, 0, 1, 1, 1]));
        assert!(r.certificates.iter().all(|c| c.residual == 0.0 && c.exact));
        assert!(!r.weakly_irreducible);
    }

    #[test]
    fn edgeless() {
        let g = Hypergraph::edgeless(3, 3).unwrap();
        let r = geometry_connectivity(&g, &opts()).unwrap();
        assert_eq!(r.beta, 3);
        assert_eq!(r.certificates[1].x, Scalar::ints(&[0, 1, 0]));
        assert!(r.maximality.iter().all(|m| *m == Maximality::Isolated));
        let z = z_geometry_connectivity(&g, &opts()).unwrap();
        assert_eq!(z.beta_z, 3);
        assert_eq!(z.certificates[2].x, Scalar::ints(&[0, 0, 1]));
    }

    #[test]
    fn z_certificates() {
        let r = z_geometry_connectivity(&figure_one(), &opts()).unwrap();
        assert_eq!(r.beta_z, 1);
        let half: Scalar = "1/2".parse().unwrap();
        assert_eq!(r.certificates[0].x, vec![half; 4]);
        assert!(r.certificates[0].exact);

        let g = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).unwrap();
        let r = z_geometry_connectivity(&g, &opts()).unwrap();
        assert_eq!(r.beta_z, 2);
        let s = 1.0 / 3f64.sqrt();
        assert_eq!(r.certificates[1].x_f64(), vec![0.0, 0.0, 0.0, s, s, s]);
        assert!(r.certificates.iter().all(|c| c.residual <= 1e-12));
    }

    #[test]
    fn rho_connectivity_cases() {
        let r = rho_connectivity(&Hypergraph::complete(4, 3).unwrap(), &opts()).unwrap();
        assert_eq!((r.beta_rho, r.spectral_radius), (Some(1), Some(3.0)));
        assert!(r.maximality_verified());

        let g = Hypergraph::new(8, 4, [[1, 2, 3, 4], [5, 6, 7, 8]]).unwrap();
        let r = rho_connectivity(&g, &opts()).unwrap();
        assert_eq!((r.beta_rho, r.spectral_radius), (Some(2), Some(1.0)));
        assert_eq!(r.certificates[1].lambda, Scalar::from(1));

        let g = Hypergraph::new(5, 3, [[1, 2, 3], [3, 4, 5]]).unwrap();
        assert!(matches!(
            rho_connectivity(&g, &opts()),
            Err(SpectralError::NotRegular { .. })
        ));
        assert_eq!(geometry_connectivity(&g, &opts()).unwrap().beta_rho, None);
    }

    #[test]
    fn unconverged_perron_downgrades_maximality() {
        let g = Hypergraph::new(5, 3, [[1, 2, 3], [3, 4, 5]]).unwrap();
        // the all-ones start converges at once, so force a skewed one
        let o = ConnectivityOptions {
            perron: PerronOptions {
                max_iter: 1,
                start: Some(vec![1.0, 2.0, 3.0, 4.0, 5.0]),
                ..PerronOptions::default()
            },
            ..opts()
        };
        let r = geometry_connectivity(&g, &o).unwrap();
        assert_eq!(r.beta, 1);
        assert!(!r.maximality_verified());
    }

    #[test]
    fn sign_patterns() {
        let demo = signed_null_vectors_demo(&figure_one()).unwrap();
        assert_eq!((demo.accepted.len(), demo.rejected.len(), demo.beta), (4, 0, 1));

        let mut cands = sign_pattern_candidates();
        cands.push(Scalar::ints(&[1, 0, 0, 0]));
        let r = signed_null_vectors(&figure_one(), &cands, &opts()).unwrap();
        assert_eq!((r.accepted.len(), r.rejected.len()), (4, 1));
        assert_eq!(r.rejected[0].residual, 1.0);

        let path = Hypergraph::new(2, 2, [[1, 2]]).unwrap();
        let r = signed_null_vectors(&path, &[Scalar::ints(&[1, 1]), Scalar::ints(&[1, -1])], &opts())
            .unwrap();
        assert_eq!(r.accepted[0].x, Scalar::ints(&[1, 1]));
        assert_eq!(r.rejected[0].x, Scalar::ints(&[1, -1]));
    }
}
