//! Random hypergraph generators and independent oracles shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use geoconn::Hypergraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn random_subset(rng: &mut TestRng, pool: &[usize], k: usize) -> Vec<usize> {
    let mut e: Vec<usize> = pool.choose_multiple(rng, k).copied().collect();
    e.sort_unstable();
    e
}

/// Up to `m` distinct uniformly random k-subsets of `1..=n`.
pub fn random_hypergraph(rng: &mut TestRng, n: usize, k: usize, m: usize) -> Hypergraph {
    let pool: Vec<usize> = (1..=n).collect();
    let m = m.min(binomial(n, k));
    let mut edges = BTreeSet::new();
    while edges.len() < m {
        edges.insert(random_subset(rng, &pool, k));
    }
    Hypergraph::new(n, k, edges).unwrap()
}

/// Connected hypergraph: grows a spanning structure edge by edge, each new
/// edge touching the covered set, then adds random extras.
pub fn random_connected(rng: &mut TestRng, n: usize, k: usize, extra: usize) -> Hypergraph {
    assert!(n >= k);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut covered: Vec<usize> = order[..k].to_vec();
    let mut edges = BTreeSet::new();
    edges.insert({
        let mut e = covered.clone();
        e.sort_unstable();
        e
    });
    let mut next = k;
    while next < n {
        // one old vertex plus up to k-1 new ones, topped up with old ones
        let take_new = (k - 1).min(n - next);
        let mut e = vec![*covered.choose(rng).unwrap()];
        e.extend_from_slice(&order[next..next + take_new]);
        while e.len() < k {
            let v = *covered.choose(rng).unwrap();
            if !e.contains(&v) {
                e.push(v);
            }
        }
        covered.extend_from_slice(&order[next..next + take_new]);
        next += take_new;
        e.sort_unstable();
        edges.insert(e);
    }
    let pool: Vec<usize> = (1..=n).collect();
    let target = (edges.len() + extra).min(binomial(n, k));
    while edges.len() < target {
        edges.insert(random_subset(rng, &pool, k));
    }
    let g = Hypergraph::new(n, k, edges).unwrap();
    debug_assert!(g.is_connected());
    g
}

/// Disjoint union on `1..=sum(n_i)`, relabeled by a random permutation.
pub fn disjoint_union(rng: &mut TestRng, parts: &[Hypergraph]) -> Hypergraph {
    let k = parts[0].k();
    let n: usize = parts.iter().map(Hypergraph::n).sum();
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    let mut offset = 0;
    for p in parts {
        edges.extend(
            p.edges()
                .iter()
                .map(|e| e.iter().map(|&v| perm[offset + v - 1]).collect::<Vec<_>>()),
        );
        offset += p.n();
    }
    Hypergraph::new(n, k, edges).unwrap()
}

/// Mixed random suite: k in {2,3,4}, n in [1,12], m in [0,15], covering
/// connected, multi-component and edgeless inputs.
pub fn random_suite(seed: u64, count: usize) -> Vec<Hypergraph> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = rng.gen_range(2..=4);
        let g = match out.len() % 4 {
            0 => {
                let n = rng.gen_range(1..=12);
                Hypergraph::edgeless(n, k).unwrap()
            }
            1 => {
                let n = rng.gen_range(k..=12);
                let spanning = (n - 1).div_ceil(k - 1);
                if spanning > 15 {
                    continue;
                }
                let extra = rng.gen_range(0..=15 - spanning);
                random_connected(&mut rng, n, k, extra)
            }
            2 => {
                // 2-4 pieces, some possibly isolated vertices
                let pieces = rng.gen_range(2..=4);
                let mut parts = Vec::new();
                let (mut n, mut m) = (0, 0);
                for _ in 0..pieces {
                    let size = rng.gen_range(1..=5);
                    if n + size > 12 {
                        break;
                    }
                    let piece = if size >= k {
                        let extra = rng.gen_range(0..=2);
                        random_connected(&mut rng, size, k, extra)
                    } else {
                        Hypergraph::edgeless(size, k).unwrap()
                    };
                    if m + piece.m() > 15 {
                        break;
                    }
                    n += piece.n();
                    m += piece.m();
                    parts.push(piece);
                }
                if parts.len() < 2 {
                    continue;
                }
                disjoint_union(&mut rng, &parts)
            }
            _ => {
                let n = rng.gen_range(1..=12);
                let m = rng.gen_range(0..=15);
                random_hypergraph(&mut rng, n, k, m)
            }
        };
        assert!(g.n() <= 12 && g.m() <= 15);
        out.push(g);
    }
    out
}

/// Union of orbits of random base blocks under the cyclic shift on `1..=n`.
/// The cyclic group acts transitively on vertices, so any union of orbits
/// is regular.
pub fn cyclic_design(rng: &mut TestRng, n: usize, k: usize, blocks: usize) -> Hypergraph {
    let pool: Vec<usize> = (0..n).collect();
    let mut edges = BTreeSet::new();
    for _ in 0..blocks {
        let base = random_subset(rng, &pool, k);
        for t in 0..n {
            let mut e: Vec<usize> = base.iter().map(|&v| (v + t) % n + 1).collect();
            e.sort_unstable();
            edges.insert(e);
        }
    }
    Hypergraph::new(n, k, edges).unwrap()
}

/// Union of distinct random perfect matchings of `1..=n` into k-blocks
/// (requires `k | n`); each matching adds one to every degree.
pub fn matching_union(rng: &mut TestRng, n: usize, k: usize, matchings: usize) -> Option<Hypergraph> {
    let mut edges = BTreeSet::new();
    for _ in 0..matchings {
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(rng);
        let blocks: Vec<Vec<usize>> = order
            .chunks(k)
            .map(|c| {
                let mut c = c.to_vec();
                c.sort_unstable();
                c
            })
            .collect();
        if blocks.iter().any(|b| edges.contains(b)) {
            return None;
        }
        edges.extend(blocks);
    }
    Some(Hypergraph::new(n, k, edges).unwrap())
}

/// Random connected regular hypergraphs with k in {3,4} and n <= 10.
pub fn regular_connected_suite(seed: u64, count: usize) -> Vec<Hypergraph> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 100_000, "regular generator stalled");
        let k = rng.gen_range(3..=4);
        let g = match rng.gen_range(0..3) {
            0 => {
                let n = rng.gen_range(k..=(if k == 3 { 9 } else { 8 }));
                Hypergraph::complete(n, k).unwrap()
            }
            1 => {
                let n = rng.gen_range(k + 1..=10);
                let blocks = rng.gen_range(1..=2);
                cyclic_design(&mut rng, n, k, blocks)
            }
            _ => {
                let multiples: Vec<usize> = (2..=10 / k).map(|c| c * k).collect();
                let n = *multiples.choose(&mut rng).unwrap();
                let count = rng.gen_range(2..=4);
                let Some(g) = matching_union(&mut rng, n, k, count) else {
                    continue;
                };
                g
            }
        };
        if g.m() > 0 && g.is_connected() && g.is_regular().is_some() {
            out.push(g);
        }
    }
    out
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pivot) = (rank..n_rows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for r in 0..n_rows {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone() * &inv;
                let pivot_row = rows[rank].clone();
                for (dst, src) in rows[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *dst -= &factor * src;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nullity of the graph Laplacian matrix `D - A` for a 2-uniform hypergraph.
pub fn graph_laplacian_nullity(g: &Hypergraph) -> usize {
    assert_eq!(g.k(), 2);
    let n = g.n();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for e in g.edges() {
        let (a, b) = (e[0] - 1, e[1] - 1);
        let one = BigRational::from_integer(BigInt::from(1));
        m[a][a] += &one;
        m[b][b] += &one;
        m[a][b] -= &one;
        m[b][a] -= &one;
    }
    n - rational_rank(m)
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |a, b| a.max(b.abs()))
}

pub fn random_vector(rng: &mut TestRng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect()
}

pub fn random_positive_vector(rng: &mut TestRng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(0.05..1.0)).collect()
}
