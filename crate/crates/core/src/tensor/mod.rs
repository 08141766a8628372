//! Tensor engine.
//!
//! Hypergraph-derived tensors (adjacency, Laplacian, shifted Laplacian) are
//! never materialized: contractions walk the edge list directly. The
//! `1/(k-1)!` adjacency weight cancels against the `(k-1)!` orderings of each
//! edge, so for an edge `e` containing `i` the contribution to
//! `(A x^{k-1})_i` is just the product of `x_j` over `j in e \ {i}`. That
//! keeps integer inputs integral, which is what the exact path relies on.

mod digraph;
mod sparse;

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};
use thiserror::Error;

use crate::hypergraph::Hypergraph;

pub use digraph::SupportDigraph;
pub use sparse::SparseTensor;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TensorError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionError { expected: usize, found: usize },
    #[error("tensor needs order >= 2 and dimension >= 1 (got order {order}, dim {dim})")]
    InvalidShape { order: usize, dim: usize },
    #[error("index {index:?} invalid for order {order}, dimension {dim}")]
    InvalidIndex {
        index: Vec<usize>,
        order: usize,
        dim: usize,
    },
    #[error("non-finite value at {index:?}")]
    NonFinite { index: Vec<usize> },
    #[error("tensor has negative entry {value} at {index:?}")]
    NotNonnegative { index: Vec<usize>, value: f64 },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("exact arithmetic requires a hypergraph-derived tensor")]
    ExactUnsupported,
}

/// A tensor that can be contracted against vectors.
#[derive(Debug, Clone, PartialEq)]
pub enum TensorView {
    /// `A_G`.
    Adjacency(Hypergraph),
    /// `L_G = D_G - A_G`.
    Laplacian(Hypergraph),
    /// `shift * I - L_G`; nonnegative once `shift` reaches the maximum degree.
    ShiftedLaplacian { graph: Hypergraph, shift: usize },
    Explicit(SparseTensor),
}

/// Scalars the implicit hypergraph contraction can run in.
pub trait Field: Clone + Num + FromPrimitive {}

impl<T: Clone + Num + FromPrimitive> Field for T {}

impl TensorView {
    pub fn adjacency(g: &Hypergraph) -> Self {
        TensorView::Adjacency(g.clone())
    }

    pub fn laplacian(g: &Hypergraph) -> Self {
        TensorView::Laplacian(g.clone())
    }

    /// `∇I - L_G` with `∇` the maximum degree of `g`.
    pub fn shifted_laplacian(g: &Hypergraph) -> Self {
        TensorView::ShiftedLaplacian {
            graph: g.clone(),
            shift: g.max_degree(),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            TensorView::Explicit(t) => t.order(),
            _ => self.graph().unwrap().k(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            TensorView::Explicit(t) => t.dim(),
            _ => self.graph().unwrap().n(),
        }
    }

    pub fn graph(&self) -> Option<&Hypergraph> {
        match self {
            TensorView::Adjacency(g) | TensorView::Laplacian(g) => Some(g),
            TensorView::ShiftedLaplacian { graph, .. } => Some(graph),
            TensorView::Explicit(_) => None,
        }
    }

    pub fn is_hypergraph_derived(&self) -> bool {
        self.graph().is_some()
    }

    /// Diagonal coefficient per vertex and sign on the adjacency part.
    fn hypergraph_form(&self) -> Option<(&Hypergraph, Vec<i64>, i64)> {
        match self {
            TensorView::Adjacency(g) => Some((g, vec![0; g.n()], 1)),
            TensorView::Laplacian(g) => {
                Some((g, g.degrees().into_iter().map(|d| d as i64).collect(), -1))
            }
            TensorView::ShiftedLaplacian { graph, shift } => Some((
                graph,
                graph
                    .degrees()
                    .into_iter()
                    .map(|d| *shift as i64 - d as i64)
                    .collect(),
                1,
            )),
            TensorView::Explicit(_) => None,
        }
    }

    fn check_len(&self, len: usize) -> Result<(), TensorError> {
        if len != self.dim() {
            return Err(TensorError::DimensionError {
                expected: self.dim(),
                found: len,
            });
        }
        Ok(())
    }

    /// `T x^{m-1}` in floating point.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>, TensorError> {
        self.check_len(x.len())?;
        match self {
            TensorView::Explicit(t) => t.apply(x),
            _ => Ok(self.apply_implicit(x)),
        }
    }

    /// `T x^{m-1}` over the rationals; only for hypergraph-derived views.
    pub fn apply_exact(&self, x: &[BigRational]) -> Result<Vec<BigRational>, TensorError> {
        self.check_len(x.len())?;
        if !self.is_hypergraph_derived() {
            return Err(TensorError::ExactUnsupported);
        }
        Ok(self.apply_implicit(x))
    }

    fn apply_implicit<T: Field>(&self, x: &[T]) -> Vec<T> {
        let (g, diag, sign) = self.hypergraph_form().expect("hypergraph-derived view");
        let k = g.k();
        let mut out: Vec<T> = diag
            .iter()
            .zip(x)
            .map(|(&c, xi)| {
                if c == 0 {
                    T::zero()
                } else {
                    T::from_i64(c).unwrap() * pow(xi, k - 1)
                }
            })
            .collect();
        for edge in g.edges() {
            for (pos, &i) in edge.iter().enumerate() {
                let prod = edge
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != pos)
                    .fold(T::one(), |acc, (_, &j)| acc * x[j - 1].clone());
                let slot = &mut out[i - 1];
                *slot = if sign < 0 {
                    slot.clone() - prod
                } else {
                    slot.clone() + prod
                };
            }
        }
        out
    }

    /// Explicit coordinate form of this view.
    pub fn materialize(&self) -> SparseTensor {
        match self {
            TensorView::Adjacency(g) => SparseTensor::adjacency(g),
            TensorView::Laplacian(g) => SparseTensor::laplacian(g),
            TensorView::ShiftedLaplacian { graph, shift } => {
                SparseTensor::shifted_laplacian(graph, *shift)
            }
            TensorView::Explicit(t) => t.clone(),
        }
    }

    /// Restriction `T[S]` with all indices in `subset`, relabeled to
    /// `1..=|S|`. Stays implicit when no edge straddles the boundary of `S`
    /// (always the case for adjacency views); otherwise the degree diagonal
    /// no longer matches the induced hypergraph and the result is explicit.
    pub fn subtensor(&self, subset: &[usize]) -> Result<TensorView, TensorError> {
        let g = match self {
            TensorView::Explicit(t) => return t.subtensor(subset).map(TensorView::Explicit),
            _ => self.graph().unwrap(),
        };
        let induced = g
            .induced(subset)
            .map_err(|e| TensorError::InvalidSubset(e.to_string()))?;
        if let TensorView::Adjacency(_) = self {
            return Ok(TensorView::Adjacency(induced.graph));
        }
        let inside: BTreeSet<usize> = induced.labels.iter().copied().collect();
        let straddles = g.edges().iter().any(|e| {
            let hits = e.iter().filter(|v| inside.contains(v)).count();
            hits != 0 && hits != e.len()
        });
        if straddles {
            return self
                .materialize()
                .subtensor(&induced.labels)
                .map(TensorView::Explicit);
        }
        Ok(match self {
            TensorView::Laplacian(_) => TensorView::Laplacian(induced.graph),
            TensorView::ShiftedLaplacian { shift, .. } => TensorView::ShiftedLaplacian {
                graph: induced.graph,
                shift: *shift,
            },
            _ => unreachable!(),
        })
    }

    /// Errors with `NotNonnegative` when some entry is negative.
    pub fn check_nonnegative(&self) -> Result<(), TensorError> {
        match self {
            TensorView::Adjacency(_) => Ok(()),
            TensorView::Laplacian(g) => match g.edges().first() {
                None => Ok(()),
                Some(e) => Err(TensorError::NotNonnegative {
                        index: e.clone(),
                        value: -1.0 / (1..g.k()).map(|i| i as f64).product::<f64>(),
                    }),
            },
            TensorView::ShiftedLaplacian { graph, shift } => {
                match graph.degrees().iter().position(|&d| d > *shift) {
                    None => Ok(()),
                    Some(i) => Err(TensorError::NotNonnegative {
                        index: vec![i + 1; graph.k()],
                        value: *shift as f64 - graph.degrees()[i] as f64,
                    }),
                }
            }
            TensorView::Explicit(t) => match t.first_negative() {
                None => Ok(()),
                Some((idx, v)) => Err(TensorError::NotNonnegative {
                    index: idx.to_vec(),
                    value: v,
                }),
            },
        }
    }

    /// Support digraph of a nonnegative tensor.
    pub fn support_digraph(&self) -> Result<SupportDigraph, TensorError> {
        self.check_nonnegative()?;
        let mut arcs = BTreeSet::new();
        match self {
            TensorView::Explicit(t) => {
                for (idx, v) in t.iter() {
                    if v > 0.0 {
                        arcs.extend(idx[1..].iter().map(|&j| (idx[0], j)));
                    }
                }
            }
            _ => {
                let (g, diag, _) = self.hypergraph_form().unwrap();
                for (i, &c) in diag.iter().enumerate() {
                    if c > 0 {
                        arcs.insert((i + 1, i + 1));
                    }
                }
                // a Laplacian that passed the sign check has no edges
                if !matches!(self, TensorView::Laplacian(_)) {
                    for e in g.edges() {
                        for &i in e {
                            arcs.extend(e.iter().filter(|&&j| j != i).map(|&j| (i, j)));
                        }
                    }
                }
            }
        }
        Ok(SupportDigraph::new(self.dim(), arcs))
    }

    /// True iff the support digraph is strongly connected.
    pub fn is_weakly_irreducible(&self) -> Result<bool, TensorError> {
        Ok(self.support_digraph()?.is_strongly_connected())
    }
}

fn pow<T: Field>(x: &T, e: usize) -> T {
    (0..e).fold(T::one(), |acc, _| acc * x.clone())
}
