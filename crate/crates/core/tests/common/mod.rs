//! Test-side oracles written straight from the definitions, on a boolean
//! adjacency matrix, sharing no code with the library's kernels.

#![allow(dead_code)]

use avd_core::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct Matrix {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Graph) -> Matrix {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Matrix { n, adj }
    }

    pub fn members(&self, code: u64) -> Vec<bool> {
        (0..self.n).map(|v| code >> v & 1 == 1).collect()
    }

    /// Number of members of `s` in the closed neighbourhood of `v`.
    pub fn hits(&self, s: &[bool], v: usize) -> usize {
        (0..self.n).filter(|&u| s[u] && (u == v || self.adj[u][v])).count()
    }

    pub fn dominates(&self, s: &[bool]) -> bool {
        (0..self.n).all(|v| self.hits(s, v) >= 1)
    }

    /// d_0..d_n by looking at every subset.
    pub fn tally(&self) -> Vec<u64> {
        let mut d = vec![0u64; self.n + 1];
        for code in 0..1u64 << self.n {
            let s = self.members(code);
            if self.dominates(&s) {
                d[s.iter().filter(|&&b| b).count()] += 1;
            }
        }
        d
    }

    /// (|a|, |a1|, |a2|, |N1|, |N2|) for a dominating `s`.
    pub fn profile_sizes(&self, s: &[bool]) -> [usize; 5] {
        let n1: Vec<bool> = (0..self.n).map(|v| !s[v] && self.hits(s, v) == 1).collect();
        let n2 = (0..self.n).filter(|&v| !s[v] && self.hits(s, v) >= 2).count();
        let mut a = 0;
        let mut a1 = 0;
        for v in (0..self.n).filter(|&v| s[v]) {
            let mut t = s.to_vec();
            t[v] = false;
            if !self.dominates(&t) {
                a += 1;
                if (0..self.n).any(|u| self.adj[v][u] && n1[u]) {
                    a1 += 1;
                }
            }
        }
        [a, a1, a - a1, n1.iter().filter(|&&b| b).count(), n2]
    }
}

/// Γ and Γ′ from a tally.
pub fn totals(d: &[u64]) -> (u64, u64) {
    let total = d.iter().sum();
    let weighted = d.iter().enumerate().map(|(k, c)| k as u64 * c).sum();
    (total, weighted)
}

/// Erdős–Rényi graph with an edge probability drawn per graph.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
