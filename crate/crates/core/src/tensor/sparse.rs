use std::collections::BTreeMap;

use crate::hypergraph::{validate_subset, Hypergraph};

use super::TensorError;

/// Coordinate-form real tensor of order `m` and dimension `n`.
///
/// Index tuples are 1-based. Absent tuples are zero and explicit zeros are
/// never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseTensor {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, f64>,
}

impl SparseTensor {
    pub fn zeros(order: usize, dim: usize) -> Result<Self, TensorError> {
        if order < 2 || dim == 0 {
            return Err(TensorError::InvalidShape { order, dim });
        }
        Ok(Self {
            order,
            dim,
            entries: BTreeMap::new(),
        })
    }

    pub fn from_entries<I, T>(order: usize, dim: usize, entries: I) -> Result<Self, TensorError>
    where
        I: IntoIterator<Item = (T, f64)>,
        T: AsRef<[usize]>,
    {
        let mut t = Self::zeros(order, dim)?;
        for (idx, v) in entries {
            t.add_to(idx.as_ref(), v)?;
        }
        Ok(t)
    }

    /// Identity tensor: 1 on every all-equal index tuple.
    pub fn identity(order: usize, dim: usize) -> Result<Self, TensorError> {
        Self::diagonal(order, &vec![1.0; dim])
    }

    pub fn diagonal(order: usize, values: &[f64]) -> Result<Self, TensorError> {
        let mut t = Self::zeros(order, values.len())?;
        for (i, &v) in values.iter().enumerate() {
            t.set(&vec![i + 1; order], v)?;
        }
        Ok(t)
    }

    /// Explicit adjacency tensor: `1/(k-1)!` on each of the `k!` orderings of
    /// every edge.
    pub fn adjacency(g: &Hypergraph) -> Self {
        let k = g.k();
        let weight = 1.0 / factorial(k - 1);
        let perms = permutations(k);
        let mut entries = BTreeMap::new();
        for edge in g.edges() {
            for p in &perms {
                let idx: Vec<usize> = p.iter().map(|&i| edge[i]).collect();
                entries.insert(idx, weight);
            }
        }
        Self {
            order: k,
            dim: g.n(),
            entries,
        }
    }

    /// `D_G - A_G` materialized.
    pub fn laplacian(g: &Hypergraph) -> Self {
        let degrees: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
        let d = Self::diagonal(g.k(), &degrees).expect("hypergraph shape is valid");
        d.add_scaled(&Self::adjacency(g), -1.0)
            .expect("matching shapes")
    }

    /// `shift * I - L_G` materialized.
    pub fn shifted_laplacian(g: &Hypergraph, shift: usize) -> Self {
        let diag: Vec<f64> = g
            .degrees()
            .into_iter()
            .map(|d| shift as f64 - d as f64)
            .collect();
        let d = Self::diagonal(g.k(), &diag).expect("hypergraph shape is valid");
        d.add_scaled(&Self::adjacency(g), 1.0).expect("matching shapes")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.entries.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn get(&self, idx: &[usize]) -> f64 {
        self.entries.get(idx).copied().unwrap_or(0.0)
    }

    fn check_index(&self, idx: &[usize]) -> Result<(), TensorError> {
        if idx.len() != self.order || idx.iter().any(|&i| i == 0 || i > self.dim) {
            return Err(TensorError::InvalidIndex {
                index: idx.to_vec(),
                order: self.order,
                dim: self.dim,
            });
        }
        Ok(())
    }

    /// Overwrites one entry; a zero value removes it.
    pub fn set(&mut self, idx: &[usize], value: f64) -> Result<(), TensorError> {
        self.check_index(idx)?;
        if !value.is_finite() {
            return Err(TensorError::NonFinite { index: idx.to_vec() });
        }
        if value == 0.0 {
            self.entries.remove(idx);
        } else {
            self.entries.insert(idx.to_vec(), value);
        }
        Ok(())
    }

    pub fn add_to(&mut self, idx: &[usize], value: f64) -> Result<(), TensorError> {
        let current = self.get(idx);
        self.set(idx, current + value)
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, other: &SparseTensor, factor: f64) -> Result<Self, TensorError> {
        if (self.order, self.dim) != (other.order, other.dim) {
            return Err(TensorError::DimensionError {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = self.clone();
        for (idx, v) in other.iter() {
            out.add_to(idx, factor * v)?;
        }
        Ok(out)
    }

    /// Averages every entry over all `m!` permutations of its index tuple.
    pub fn symmetrized(&self) -> Self {
        let perms = permutations(self.order);
        let weight = 1.0 / perms.len() as f64;
        let mut acc: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
        for (idx, v) in self.iter() {
            for p in &perms {
                let q: Vec<usize> = p.iter().map(|&i| idx[i]).collect();
                *acc.entry(q).or_insert(0.0) += v * weight;
            }
        }
        acc.retain(|_, v| *v != 0.0);
        Self {
            order: self.order,
            dim: self.dim,
            entries: acc,
        }
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let perms = permutations(self.order);
        self.iter().all(|(idx, v)| {
            perms.iter().all(|p| {
                let q: Vec<usize> = p.iter().map(|&i| idx[i]).collect();
                (self.get(&q) - v).abs() <= tol
            })
        })
    }

    /// First negative entry, if any.
    pub fn first_negative(&self) -> Option<(&[usize], f64)> {
        self.iter().find(|(_, v)| *v < 0.0)
    }

    /// `(T x^{m-1})_i = sum a_{i i2..im} x_{i2} ... x_{im}`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>, TensorError> {
        if x.len() != self.dim {
            return Err(TensorError::DimensionError {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut out = vec![0.0; self.dim];
        for (idx, v) in self.iter() {
            let prod: f64 = idx[1..].iter().map(|&j| x[j - 1]).product();
            out[idx[0] - 1] += v * prod;
        }
        Ok(out)
    }

    /// Restriction to index set `subset`, relabeled to `1..=|subset|`.
    pub fn subtensor(&self, subset: &[usize]) -> Result<Self, TensorError> {
        let labels = validate_subset(self.dim, subset)
            .map_err(|e| TensorError::InvalidSubset(e.to_string()))?;
        let mut relabel = vec![0usize; self.dim + 1];
        for (i, &v) in labels.iter().enumerate() {
            relabel[v] = i + 1;
        }
        let entries = self
            .iter()
            .filter(|(idx, _)| idx.iter().all(|&i| relabel[i] != 0))
            .map(|(idx, v)| (idx.iter().map(|&i| relabel[i]).collect(), v))
            .collect();
        Ok(Self {
            order: self.order,
            dim: labels.len(),
            entries,
        })
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// All permutations of `0..m` in lexicographic order.
pub(crate) fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..m).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}
