//! Exhaustive extremal search for avd over constrained graph streams, the
//! built-in small-order generator, and the desk-scale bound verification.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::canon::{canonical_code, canonical_form};
use crate::domination::{avd, avd_upper_bound, CountError};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::vertex_set::VertexSet;

/// Largest order the built-in generator enumerates.
pub const MAX_GENERATED_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConstraint {
    pub n: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub no_isolated: bool,
}

impl SearchConstraint {
    pub fn new(n: usize) -> SearchConstraint {
        SearchConstraint { n, min_degree: 0, connected: false, no_isolated: false }
    }

    pub fn with_min_degree(mut self, d: usize) -> SearchConstraint {
        self.min_degree = d;
        self.no_isolated |= d >= 1;
        self
    }

    pub fn connected(mut self) -> SearchConstraint {
        self.connected = true;
        self
    }

    pub fn no_isolated(mut self) -> SearchConstraint {
        self.no_isolated = true;
        self
    }

    pub fn admits(&self, g: &Graph) -> bool {
        if g.order() != self.n || g.order() == 0 {
            return false;
        }
        let min_degree = g.min_degree().unwrap_or(0);
        if min_degree < self.min_degree || (self.no_isolated && min_degree == 0) {
            return false;
        }
        !self.connected || g.component_of(0) == g.vertices()
    }
}

impl fmt::Display for SearchConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}, min degree >= {}", self.n, self.min_degree)?;
        if self.connected {
            f.write_str(", connected")?;
        }
        if self.no_isolated {
            f.write_str(", no isolated vertices")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    EmptyStream(SearchConstraint),
    Count(CountError),
    OrderTooLarge { n: usize, max: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::EmptyStream(c) => write!(f, "no graph in the stream satisfies {c}"),
            SearchError::Count(e) => e.fmt(f),
            SearchError::OrderTooLarge { n, max } => write!(
                f,
                "the built-in generator stops at order {max} (asked for {n}); supply a graph6 stream instead"
            ),
        }
    }
}

impl From<CountError> for SearchError {
    fn from(e: CountError) -> Self {
        SearchError::Count(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub constraint: SearchConstraint,
    pub best_avd: BigRational,
    /// graph6 strings of all maximisers, sorted and deduplicated.
    pub argmax: Vec<String>,
    pub examined: u64,
}

/// Running maximum; `merge` is associative and commutative after `finish`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchAccumulator {
    pub best: Option<(BigRational, Vec<String>)>,
    pub examined: u64,
}

impl SearchAccumulator {
    /// Records one admitted graph with its avd.
    pub fn offer(&mut self, value: BigRational, graph6: String) {
        self.examined += 1;
        match &mut self.best {
            Some((b, arg)) if value == *b => arg.push(graph6),
            Some((b, _)) if value < *b => {}
            _ => self.best = Some((value, vec![graph6])),
        }
    }

    /// Computes avd for `g` if the constraint admits it.
    pub fn offer_graph(&mut self, g: &Graph, constraint: &SearchConstraint) -> Result<(), CountError> {
        if constraint.admits(g) {
            self.offer(avd(g)?.avd, encode_graph6(g));
        }
        Ok(())
    }

    pub fn merge(mut self, other: SearchAccumulator) -> SearchAccumulator {
        self.examined += other.examined;
        self.best = match (self.best, other.best) {
            (None, b) | (b, None) => b,
            (Some((a, mut x)), Some((b, y))) => {
                if a == b {
                    x.extend(y);
                    Some((a, x))
                } else if a > b {
                    Some((a, x))
                } else {
                    Some((b, y))
                }
            }
        };
        self
    }

    pub fn finish(self, constraint: SearchConstraint) -> Result<ExtremalResult, SearchError> {
        let (best_avd, mut argmax) = self.best.ok_or(SearchError::EmptyStream(constraint))?;
        argmax.sort();
        argmax.dedup();
        Ok(ExtremalResult { constraint, best_avd, argmax, examined: self.examined })
    }
}

/// All maximisers of avd among the graphs of `stream` admitted by `constraint`.
pub fn search<I>(stream: I, constraint: SearchConstraint) -> Result<ExtremalResult, SearchError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut acc = SearchAccumulator::default();
    for g in stream {
        acc.offer_graph(&g, &constraint)?;
    }
    acc.finish(constraint)
}

/// One representative per isomorphism class of graphs of order `n ≤ 7`,
/// in canonical form, ordered by canonical code.
///
/// Every graph of order `n` arises from one of order `n − 1` by adding a
/// vertex, so extending every class representative in every way and keeping
/// one graph per canonical code is exhaustive.
pub fn generate_all_nonisomorphic(n: usize) -> Result<Vec<Graph>, SearchError> {
    if n > MAX_GENERATED_ORDER {
        return Err(SearchError::OrderTooLarge { n, max: MAX_GENERATED_ORDER });
    }
    let mut level = vec![Graph::empty(0).expect("order 0 is valid")];
    for m in 0..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 0..(1u64 << m) {
                let mut adj = base.adjacency().to_vec();
                let nbrs = VertexSet::from_bits(mask);
                for u in nbrs.iter() {
                    adj[u].insert(m);
                }
                adj.push(nbrs);
                let g = Graph::from_adjacency_unchecked(adj);
                let code = canonical_code(&g);
                if seen.insert(code) {
                    next.push((code, canonical_form(&g)));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub n: usize,
    /// Graphs of order `n` without isolated vertices.
    pub examined: u64,
    /// graph6 of every graph with avd = 2n/3, sorted.
    pub equality: Vec<String>,
    pub star_like: u64,
    /// graph6 of graphs where equality and star-likeness disagree.
    pub mismatches: Vec<String>,
    /// graph6 of graphs with avd > 2n/3.
    pub violations: Vec<String>,
}

impl TheoremReport {
    pub fn new(n: usize) -> TheoremReport {
        TheoremReport {
            n,
            examined: 0,
            equality: Vec::new(),
            star_like: 0,
            mismatches: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.violations.is_empty()
    }

    /// Checks one graph; graphs of the wrong order or with isolated vertices are skipped.
    pub fn record(&mut self, g: &Graph) -> Result<(), CountError> {
        if g.order() != self.n || self.n == 0 || !g.isolated_vertices().is_empty() {
            return Ok(());
        }
        self.examined += 1;
        let value = avd(g)?.avd;
        let bound = avd_upper_bound(self.n, 0);
        let star_like = g.is_star_like();
        self.star_like += u64::from(star_like);
        let code = encode_graph6(g);
        if value > bound {
            self.violations.push(code.clone());
        }
        let equal = value == bound;
        if equal != star_like {
            self.mismatches.push(code.clone());
        }
        if equal {
            self.equality.push(code);
        }
        Ok(())
    }

    pub fn merge(mut self, other: TheoremReport) -> TheoremReport {
        self.examined += other.examined;
        self.star_like += other.star_like;
        self.equality.extend(other.equality);
        self.mismatches.extend(other.mismatches);
        self.violations.extend(other.violations);
        self
    }

    pub fn finish(mut self) -> TheoremReport {
        self.equality.sort();
        self.mismatches.sort();
        self.violations.sort();
        self
    }
}

/// avd ≤ 2n/3 with equality exactly on star-like graphs, over every graph of
/// order `n ≤ 7` without isolated vertices.
pub fn verify_main_theorem(n: usize) -> Result<TheoremReport, SearchError> {
    let mut report = TheoremReport::new(n);
    for g in generate_all_nonisomorphic(n)? {
        report.record(&g)?;
    }
    Ok(report.finish())
}
