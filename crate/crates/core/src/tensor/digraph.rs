use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

/// Directed graph on vertices `1..=n` with arc `(i, j)` whenever some entry
/// `a_{i i2 .. im}` is positive and `j` is among `i2 .. im`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportDigraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl SupportDigraph {
    pub(crate) fn new(n: usize, arcs: BTreeSet<(usize, usize)>) -> Self {
        Self { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs.contains(&(from, to))
    }

    /// Strongly connected components, each sorted, ordered by smallest member.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(self.n, self.arcs.len());
        for _ in 0..self.n {
            g.add_node(());
        }
        for &(i, j) in &self.arcs {
            g.add_edge(NodeIndex::new(i - 1), NodeIndex::new(j - 1), ());
        }
        let mut sccs: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|v| v.index() + 1).collect();
                c.sort_unstable();
                c
            })
            .collect();
        sccs.sort_unstable_by_key(|c| c[0]);
        sccs
    }

    /// A single vertex without arcs counts as strongly connected.
    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_components().len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_cycle_vs_path() {
        let cycle = SupportDigraph::new(3, [(1, 2), (2, 3), (3, 1)].into_iter().collect());
        assert!(cycle.is_strongly_connected());
        let path = SupportDigraph::new(3, [(1, 2), (2, 3)].into_iter().collect());
        assert!(!path.is_strongly_connected());
        assert_eq!(path.strongly_connected_components(), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn single_vertex() {
        assert!(SupportDigraph::new(1, BTreeSet::new()).is_strongly_connected());
        assert!(!SupportDigraph::new(2, BTreeSet::new()).is_strongly_connected());
    }
}
