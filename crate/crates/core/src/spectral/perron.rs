use crate::scalar::Scalar;
use crate::tensor::TensorView;

use super::{verify_h_eigenpair, EigenpairCertificate, SpectralError};

pub const DEFAULT_PERRON_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct PerronOptions {
    /// Stop once the Collatz–Wielandt bounds are closer than this.
    pub tol: f64,
    pub max_iter: usize,
    /// Diagonal shift σ; the iteration runs on `T + σI`.
    pub shift: f64,
    /// Positive starting vector; all-ones when absent.
    pub start: Option<Vec<f64>>,
}

impl Default for PerronOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_PERRON_TOL,
            max_iter: DEFAULT_MAX_ITER,
            shift: 1.0,
            start: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerronResult {
    pub rho: f64,
    /// Strictly positive, scaled to unit max-norm.
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub lower: f64,
    pub upper: f64,
    /// H-eigenpair check of `(rho, vector)` at `10 * tol`.
    pub certificate: EigenpairCertificate,
}

/// Shifted power iteration for the spectral radius of a nonnegative weakly
/// irreducible tensor.
///
/// Each step evaluates `y = (T + σI) x^{m-1}`; the ratios `y_i / x_i^{m-1}`
/// bracket `ρ(T) + σ` from below and above. The next iterate is
/// `y^{[1/(m-1)]}` rescaled to unit max-norm.
pub fn perron(t: &TensorView, opts: &PerronOptions) -> Result<PerronResult, SpectralError> {
    if !t.is_weakly_irreducible()? {
        return Err(SpectralError::NotIrreducible);
    }
    let n = t.dim();
    let m1 = (t.order() - 1) as i32;
    let sigma = opts.shift;

    let mut x = match &opts.start {
        Some(s) => {
            if s.len() != n {
                return Err(SpectralError::DimensionError {
                    expected: n,
                    found: s.len(),
                });
            }
            if s.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
                return Err(SpectralError::InvalidStart);
            }
            s.clone()
        }
        None => vec![1.0; n],
    };
    normalize_max(&mut x);

    let (mut lower, mut upper) = (f64::NAN, f64::NAN);
    for iteration in 1..=opts.max_iter {
        let mut y = t.apply(&x)?;
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yi, xi) in y.iter_mut().zip(&x) {
            let p = xi.powi(m1);
            *yi += sigma * p;
            let r = *yi / p;
            lo = lo.min(r);
            hi = hi.max(r);
        }
        lower = lo - sigma;
        upper = hi - sigma;
        if hi - lo < opts.tol {
            let rho = 0.5 * (lower + upper);
            let certificate = verify_h_eigenpair(
                t,
                &Scalar::Float(rho),
                &Scalar::floats(&x),
                10.0 * opts.tol,
            )?;
            if !certificate.accepted {
                return Err(SpectralError::CertificateRejected {
                    residual: certificate.residual,
                });
            }
            return Ok(PerronResult {
                rho,
                vector: x,
                iterations: iteration,
                lower,
                upper,
                certificate,
            });
        }
        let inv = 1.0 / f64::from(m1);
        x = y.into_iter().map(|v| v.powf(inv)).collect();
        normalize_max(&mut x);
        if x.iter().any(|&v| v.is_nan() || v <= 0.0) {
            // positivity lost to underflow
            break;
        }
    }
    Err(SpectralError::NoConvergence {
        iterations: opts.max_iter,
        lower,
        upper,
    })
}

fn normalize_max(x: &mut [f64]) {
    let m = x.iter().fold(0.0f64, |a, &b| a.max(b));
    if m > 0.0 {
        x.iter_mut().for_each(|v| *v /= m);
    }
}

/// Cosine of the angle between `x` and the all-ones vector.
pub fn cosine_with_ones(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().sum();
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    sum / (norm * (x.len() as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::tensor::SparseTensor;

    #[test]
    fn complete_three_uniform_on_four() {
        let g = Hypergraph::complete(4, 3).unwrap();
        let r = perron(&TensorView::adjacency(&g), &PerronOptions::default()).unwrap();
        assert!((r.rho - 3.0).abs() < 1e-12);
        assert!(r.vector.iter().all(|&v| (v - 1.0).abs() < 1e-12));
        assert!(r.certificate.accepted);
    }

    #[test]
    fn shifted_laplacian_of_single_edge() {
        let g = Hypergraph::new(4, 4, [[1, 2, 3, 4]]).unwrap();
        let r = perron(&TensorView::shifted_laplacian(&g), &PerronOptions::default()).unwrap();
        assert!((r.rho - 1.0).abs() < 1e-12);
        assert!(cosine_with_ones(&r.vector) > 1.0 - 1e-12);
    }

    #[test]
    fn permutation_matrix() {
        let t = SparseTensor::from_entries(2, 2, [([1, 2], 1.0), ([2, 1], 1.0)]).unwrap();
        let r = perron(&TensorView::Explicit(t), &PerronOptions::default()).unwrap();
        assert!((r.rho - 1.0).abs() < 1e-12);
        assert!((r.vector[0] - r.vector[1]).abs() < 1e-12);
    }

    #[test]
    fn converges_from_skewed_start() {
        // nonregular: star-like 3-uniform hypergraph, ρ strictly between degrees
        let g = Hypergraph::new(5, 3, [[1, 2, 3], [1, 4, 5]]).unwrap();
        let opts = PerronOptions {
            start: Some(vec![0.1, 5.0, 1.0, 2.0, 0.3]),
            ..PerronOptions::default()
        };
        let r = perron(&TensorView::adjacency(&g), &opts).unwrap();
        assert!(r.vector.iter().all(|&v| v > 0.0));
        assert!(r.lower <= r.rho && r.rho <= r.upper);
        // x2..x5 = b, x1 = a: 2b^2 = ρa^2 and ab = ρb^2, so ρ^3 = 2
        assert!((r.rho - 2f64.cbrt()).abs() < 1e-9, "rho = {}", r.rho);
    }

    #[test]
    fn reducible_inputs_rejected() {
        let g = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6]]).unwrap();
        assert!(matches!(
            perron(&TensorView::adjacency(&g), &PerronOptions::default()),
            Err(SpectralError::NotIrreducible)
        ));
        let g = Hypergraph::new(4, 4, [[1, 2, 3, 4]]).unwrap();
        assert!(matches!(
            perron(&TensorView::laplacian(&g), &PerronOptions::default()),
            Err(SpectralError::Tensor(_))
        ));
    }

    #[test]
    fn iteration_budget() {
        let g = Hypergraph::new(5, 3, [[1, 2, 3], [1, 4, 5]]).unwrap();
        let opts = PerronOptions {
            max_iter: 2,
            start: Some(vec![0.1, 5.0, 1.0, 2.0, 0.3]),
            ..PerronOptions::default()
        };
        let err = perron(&TensorView::adjacency(&g), &opts).unwrap_err();
        let SpectralError::NoConvergence { lower, upper, .. } = err else {
            panic!("expected NoConvergence, got {err:?}");
        };
        assert!(lower < upper);
    }

    #[test]
    fn bad_start() {
        let g = Hypergraph::complete(4, 3).unwrap();
        let opts = PerronOptions {
            start: Some(vec![1.0, 0.0, 1.0, 1.0]),
            ..PerronOptions::default()
        };
        assert!(matches!(
            perron(&TensorView::adjacency(&g), &opts),
            Err(SpectralError::InvalidStart)
        ));
    }
}
