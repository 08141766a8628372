use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::tensor::TensorView;

use super::SpectralError;

/// Which eigen-equation a certificate witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// `T x^{m-1} = λ x^{[m-1]}`.
    H,
    /// `T x^{m-1} = λ x` with `xᵀx = 1`.
    Z,
}

/// Outcome of checking a candidate eigenpair.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenpairCertificate {
    pub lambda: Scalar,
    pub x: Vec<Scalar>,
    pub variant: Variant,
    /// Max-norm defect; exactly zero for an exact eigenpair checked in
    /// rational arithmetic.
    pub residual: f64,
    /// Whether the check ran in rational arithmetic.
    pub exact: bool,
    pub accepted: bool,
}

impl EigenpairCertificate {
    pub fn x_f64(&self) -> Vec<f64> {
        self.x.iter().map(Scalar::to_f64).collect()
    }
}

fn to_exact_all(lambda: &Scalar, x: &[Scalar]) -> Option<(BigRational, Vec<BigRational>)> {
    let l = lambda.to_exact()?;
    let xs = x.iter().map(Scalar::to_exact).collect::<Option<Vec<_>>>()?;
    Some((l, xs))
}

fn check_input(t: &TensorView, x: &[Scalar]) -> Result<(), SpectralError> {
    if x.len() != t.dim() {
        return Err(SpectralError::DimensionError {
            expected: t.dim(),
            found: x.len(),
        });
    }
    if x.iter().all(Scalar::is_zero) {
        return Err(SpectralError::ZeroVector);
    }
    Ok(())
}

fn qpow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

fn qmax_abs(it: impl Iterator<Item = BigRational>) -> BigRational {
    it.map(|v| v.abs()).fold(BigRational::zero(), |a, b| if b > a { b } else { a })
}

fn fmax_abs(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, |a, b| a.max(b.abs()))
}

/// Checks `T x^{m-1} = λ x^{[m-1]}`.
///
/// The residual is `‖T x^{m-1} - λ x^{[m-1]}‖_∞ / max(1, ‖x‖_∞^{m-1})`. The
/// check runs in rational arithmetic when `T` is hypergraph-derived and `λ`
/// and every entry of `x` are exact (or integral floats).
pub fn verify_h_eigenpair(
    t: &TensorView,
    lambda: &Scalar,
    x: &[Scalar],
    tol: f64,
) -> Result<EigenpairCertificate, SpectralError> {
    check_input(t, x)?;
    let m1 = t.order() - 1;
    if t.is_hypergraph_derived() {
        if let Some((l, xs)) = to_exact_all(lambda, x) {
            let y = t.apply_exact(&xs)?;
            let defect = qmax_abs(y.iter().zip(&xs).map(|(yi, xi)| yi - &l * qpow(xi, m1)));
            let scale = qpow(&qmax_abs(xs.iter().cloned()), m1).max(BigRational::one());
            let residual = (defect / scale).to_f64().unwrap_or(f64::INFINITY);
            return Ok(EigenpairCertificate {
                lambda: Scalar::Exact(l),
                x: xs.into_iter().map(Scalar::Exact).collect(),
                variant: Variant::H,
                residual,
                exact: true,
                accepted: residual <= tol,
            });
        }
    }
    let l = lambda.to_f64();
    let xs: Vec<f64> = x.iter().map(Scalar::to_f64).collect();
    let y = t.apply(&xs)?;
    let defect = fmax_abs(y.iter().zip(&xs).map(|(yi, xi)| yi - l * xi.powi(m1 as i32)));
    let scale = fmax_abs(xs.iter().copied()).powi(m1 as i32).max(1.0);
    let residual = defect / scale;
    Ok(EigenpairCertificate {
        lambda: Scalar::Float(l),
        x: Scalar::floats(&xs),
        variant: Variant::H,
        residual,
        exact: false,
        accepted: residual <= tol,
    })
}

/// Checks `T x^{m-1} = λ x` together with `xᵀx = 1`; the residual is the
/// larger of the two max-norm defects.
pub fn verify_z_eigenpair(
    t: &TensorView,
    lambda: &Scalar,
    x: &[Scalar],
    tol: f64,
) -> Result<EigenpairCertificate, SpectralError> {
    check_input(t, x)?;
    if t.is_hypergraph_derived() {
        if let Some((l, xs)) = to_exact_all(lambda, x) {
            let y = t.apply_exact(&xs)?;
            let defect = qmax_abs(y.iter().zip(&xs).map(|(yi, xi)| yi - &l * xi));
            let norm: BigRational = xs.iter().map(|v| v * v).sum();
            let residual = defect
                .max((norm - BigRational::one()).abs())
                .to_f64()
                .unwrap_or(f64::INFINITY);
            return Ok(EigenpairCertificate {
                lambda: Scalar::Exact(l),
                x: xs.into_iter().map(Scalar::Exact).collect(),
                variant: Variant::Z,
                residual,
                exact: true,
                accepted: residual <= tol,
            });
        }
    }
    let l = lambda.to_f64();
    let xs: Vec<f64> = x.iter().map(Scalar::to_f64).collect();
    let y = t.apply(&xs)?;
    let defect = fmax_abs(y.iter().zip(&xs).map(|(yi, xi)| yi - l * xi));
    let norm: f64 = xs.iter().map(|v| v * v).sum();
    let residual = defect.max((norm - 1.0).abs());
    Ok(EigenpairCertificate {
        lambda: Scalar::Float(l),
        x: Scalar::floats(&xs),
        variant: Variant::Z,
        residual,
        exact: false,
        accepted: residual <= tol,
    })
}
