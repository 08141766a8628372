//! k-uniform hypergraphs and their combinatorics.
//!
//! Vertices are exposed as 1-based labels `1..=n` everywhere in the public
//! surface. Internally edges are stored as sorted label lists.

use std::collections::{BTreeSet, HashSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("hypergraph needs n >= 1 and k >= 2 (got n = {n}, k = {k})")]
    InvalidShape { n: usize, k: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    MalformedEdge { edge: usize, vertex: usize },
    #[error("edge {edge} has {found} vertices, expected {expected}")]
    WrongUniformity {
        edge: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {edge} contains label {label} outside 1..={n}")]
    LabelOutOfRange { edge: usize, label: usize, n: usize },
    #[error("edge {edge} duplicates edge {first}")]
    DuplicateEdge { edge: usize, first: usize },
    #[error("invalid vertex subset: {0}")]
    InvalidSubset(String),
}

/// An immutable k-uniform hypergraph on the vertex set `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

/// Partition of the vertex set into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    /// Parts ordered by smallest member; each part is sorted ascending.
    pub parts: Vec<Vec<usize>>,
    /// `edge_assignment[e]` is the index into `parts` holding edge `e`.
    pub edge_assignment: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.parts.len()
    }

    /// Index of the part holding the 1-based vertex label `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts
            .iter()
            .position(|p| p.binary_search(&v).is_ok())
    }
}

/// An induced sub-hypergraph together with the labels it was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Hypergraph,
    /// `labels[i]` is the original label of new vertex `i + 1`.
    pub labels: Vec<usize>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Edge members are sorted ascending.
    pub fn new<E, I>(n: usize, k: usize, edges: E) -> Result<Self, HypergraphError>
    where
        E: IntoIterator<Item = I>,
        I: AsRef<[usize]>,
    {
        if n == 0 || k < 2 {
            return Err(HypergraphError::InvalidShape { n, k });
        }
        let mut seen: std::collections::HashMap<Vec<usize>, usize> = Default::default();
        let mut out = Vec::new();
        for (idx, edge) in edges.into_iter().enumerate() {
            let mut edge = edge.as_ref().to_vec();
            if let Some(&label) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(HypergraphError::LabelOutOfRange { edge: idx, label, n });
            }
            edge.sort_unstable();
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::MalformedEdge {
                    edge: idx,
                    vertex: w[0],
                });
            }
            if edge.len() != k {
                return Err(HypergraphError::WrongUniformity {
                    edge: idx,
                    expected: k,
                    found: edge.len(),
                });
            }
            if let Some(&first) = seen.get(&edge) {
                return Err(HypergraphError::DuplicateEdge { edge: idx, first });
            }
            seen.insert(edge.clone(), idx);
            out.push(edge);
        }
        Ok(Self { n, k, edges: out })
    }

    /// The edgeless hypergraph on `n` vertices.
    pub fn edgeless(n: usize, k: usize) -> Result<Self, HypergraphError> {
        Self::new(n, k, std::iter::empty::<Vec<usize>>())
    }

    /// All `C(n, k)` k-subsets of `1..=n` as edges.
    pub fn complete(n: usize, k: usize) -> Result<Self, HypergraphError> {
        let mut edges = Vec::new();
        if k <= n {
            let mut idx: Vec<usize> = (1..=k).collect();
            loop {
                edges.push(idx.clone());
                // advance to the next combination in lexicographic order
                let mut i = k;
                while i > 0 && idx[i - 1] == n - k + i {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                for j in i..k {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        Self::new(n, k, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `d_i` = number of edges containing vertex `i`, indexed from 0.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for v in self.edges.iter().flatten() {
            d[v - 1] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degrees();
        let first = d[0];
        d.iter().all(|&x| x == first).then_some(first)
    }

    /// For each vertex (0-based), the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (e, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v - 1].push(e);
            }
        }
        inc
    }

    /// Breadth-first search over the vertex/edge incidence.
    pub fn connected_components(&self) -> ComponentDecomposition {
        let incidence = self.incidence();
        let mut part_of = vec![usize::MAX; self.n];
        let mut edge_seen = vec![false; self.edges.len()];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();

        for start in 0..self.n {
            if part_of[start] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = vec![start + 1];
            part_of[start] = id;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &e in &incidence[v] {
                    if std::mem::replace(&mut edge_seen[e], true) {
                        continue;
                    }
                    for &w in &self.edges[e] {
                        if part_of[w - 1] == usize::MAX {
                            part_of[w - 1] = id;
                            part.push(w);
                            queue.push_back(w - 1);
                        }
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }

        let edge_assignment = self.edges.iter().map(|e| part_of[e[0] - 1]).collect();
        ComponentDecomposition {
            parts,
            edge_assignment,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count() == 1
    }

    /// Sub-hypergraph induced by `subset`, relabeled to `1..=|subset|` in
    /// ascending label order.
    pub fn induced(&self, subset: &[usize]) -> Result<Induced, HypergraphError> {
        let labels = validate_subset(self.n, subset)?;
        let mut relabel = vec![0usize; self.n + 1];
        for (i, &v) in labels.iter().enumerate() {
            relabel[v] = i + 1;
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| relabel[v] != 0))
            .map(|e| e.iter().map(|&v| relabel[v]).collect())
            .collect();
        let graph = Hypergraph {
            n: labels.len(),
            k: self.k,
            edges,
        };
        Ok(Induced { graph, labels })
    }

    /// Relabels vertex `v` as `perm[v - 1]`; `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, HypergraphError> {
        let check: BTreeSet<usize> = perm.iter().copied().collect();
        if perm.len() != self.n || check.len() != self.n || check.iter().any(|&v| v == 0 || v > self.n) {
            return Err(HypergraphError::InvalidSubset(
                "relabeling is not a permutation of 1..=n".into(),
            ));
        }
        Self::new(
            self.n,
            self.k,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&v| perm[v - 1]).collect::<Vec<_>>()),
        )
    }
}

/// Sorted, deduplicated copy of `subset` after range checking.
pub(crate) fn validate_subset(n: usize, subset: &[usize]) -> Result<Vec<usize>, HypergraphError> {
    if subset.is_empty() {
        return Err(HypergraphError::InvalidSubset("empty vertex set".into()));
    }
    if let Some(&bad) = subset.iter().find(|&&v| v == 0 || v > n) {
        return Err(HypergraphError::InvalidSubset(format!(
            "label {bad} outside 1..={n}"
        )));
    }
    let set: HashSet<usize> = subset.iter().copied().collect();
    let mut labels: Vec<usize> = set.into_iter().collect();
    labels.sort_unstable();
    Ok(labels)
}
