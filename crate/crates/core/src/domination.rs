//! Dominating-set tallies `d_0..d_n`, their totals, and the average order of
//! a dominating set as an exact rational.
//!
//! Two independent routes produce the same [`DominationTally`]:
//!
//! * [`tally_bruteforce`] walks every subset of `V` and tests `N[S] = V`.
//! * [`tally_fast`] never enumerates dominating sets. It runs
//!   inclusion–exclusion over sets `T` of vertices forced to stay undominated:
//!   `d_k = Σ_T (-1)^{|T|} C(n - |N[T]|, k)`, grouped by `|N[T]|`, on each
//!   connected component, and convolves the component polynomials.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Range;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Default vertex limit for exhaustive subset enumeration.
pub const DEFAULT_ORACLE_CAP: usize = 24;
/// Default vertex limit for the inclusion–exclusion path.
pub const DEFAULT_FAST_CAP: usize = MAX_VERTICES;

const LOW_BITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountError {
    OracleCapExceeded { n: usize, cap: usize },
    FastCapExceeded { n: usize, cap: usize },
    /// The average is undefined for the order-0 graph.
    EmptyGraph,
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::OracleCapExceeded { n, cap } => write!(
                f,
                "refusing exhaustive enumeration of 2^{n} subsets (oracle cap is {cap} vertices)"
            ),
            CountError::FastCapExceeded { n, cap } => {
                write!(f, "graph of order {n} exceeds the fast-path cap of {cap} vertices")
            }
            CountError::EmptyGraph => f.write_str("avd is undefined for the order-0 graph"),
        }
    }
}

/// Number of dominating sets of each cardinality `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominationTally {
    counts: Vec<BigUint>,
}

impl DominationTally {
    /// `counts[k]` is the number of dominating sets of size `k`; the length is `n + 1`.
    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "a tally has at least the d_0 entry");
        DominationTally { counts }
    }

    pub fn from_u64_counts(counts: &[u64]) -> Self {
        DominationTally::from_counts(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    /// Γ: the number of dominating sets.
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Γ′: the summed cardinality of all dominating sets.
    pub fn weighted_total(&self) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigUint::from(k))
            .sum()
    }

    /// γ: smallest `k` with `d_k > 0`.
    pub fn domination_number(&self) -> usize {
        self.counts
            .iter()
            .position(|c| !c.is_zero())
            .expect("the full vertex set always dominates")
    }

    /// Coefficient-wise product; the tally of a disjoint union.
    pub fn convolve(&self, other: &DominationTally) -> DominationTally {
        let mut out = vec![BigUint::zero(); self.counts.len() + other.counts.len() - 1];
        for (i, a) in self.counts.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.counts.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DominationTally { counts: out }
    }
}

/// True iff `N[set] = V`.
#[inline]
pub fn is_dominating(g: &Graph, set: VertexSet) -> bool {
    g.closed_neighborhood_of_set(set) == g.vertices()
}

/// Exhaustive tally with the default oracle cap.
pub fn tally_bruteforce(g: &Graph) -> Result<DominationTally, CountError> {
    tally_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn tally_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<DominationTally, CountError> {
    let n = g.order();
    check_oracle_cap(n, cap)?;
    let counts = bruteforce_counts(g, 0..subset_space(n));
    Ok(DominationTally::from_u64_counts(&counts))
}

pub(crate) fn check_oracle_cap(n: usize, cap: usize) -> Result<(), CountError> {
    if n > cap || n >= 64 {
        Err(CountError::OracleCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Number of subsets of an `n`-set, `n < 64`.
pub fn subset_space(n: usize) -> u64 {
    1u64 << n
}

/// Table of `N[S]` for every `S ⊆ {0, .., bits-1}`.
pub(crate) fn low_cover_table(g: &Graph, bits: usize) -> Vec<VertexSet> {
    let closed = g.closed_adjacency();
    let mut table = vec![VertexSet::EMPTY; 1 << bits];
    for m in 1..table.len() {
        table[m] = table[m & (m - 1)] | closed[m.trailing_zeros() as usize];
    }
    table
}

/// Per-cardinality counts of dominating sets among subset codes in `range`.
///
/// A subset code is the bitmask of the subset. Disjoint ranges give partial
/// tallies that add element-wise.
pub fn bruteforce_counts(g: &Graph, range: Range<u64>) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; n + 1];
    let low_bits = n.min(LOW_BITS);
    let low_mask = (1u64 << low_bits) - 1;
    let table = low_cover_table(g, low_bits);
    let full = g.vertices();
    let end = range.end.min(subset_space(n));
    let mut code = range.start;
    while code < end {
        let high = code >> low_bits;
        let block_end = end.min((high + 1) << low_bits);
        let high_cover = g.closed_neighborhood_of_set(VertexSet::from_bits(high << low_bits));
        for c in code..block_end {
            if (table[(c & low_mask) as usize] | high_cover) == full {
                counts[c.count_ones() as usize] += 1;
            }
        }
        code = block_end;
    }
    counts
}

/// Inclusion–exclusion tally with the default cap.
pub fn tally_fast(g: &Graph) -> Result<DominationTally, CountError> {
    tally_fast_with_cap(g, DEFAULT_FAST_CAP)
}

pub fn tally_fast_with_cap(g: &Graph, cap: usize) -> Result<DominationTally, CountError> {
    let n = g.order();
    if n > cap.min(MAX_VERTICES) {
        return Err(CountError::FastCapExceeded { n, cap });
    }
    let mut tally = DominationTally::from_counts(vec![BigUint::one()]);
    for component in g.components() {
        let signed = signed_cover_counts(g, component, 0, 0);
        tally = tally.convolve(&tally_from_cover_counts(component.len(), &signed));
    }
    Ok(tally)
}

/// `c[m] = Σ (-1)^{|T|}` over `T ⊆ component` with `|N[T]| = m`.
///
/// The first `prefix_len` vertices of `component` (ascending) have their
/// membership in `T` fixed by the low bits of `prefix`; summing the results
/// over every prefix gives the unrestricted counts. `component` must be a
/// union of connected components so that `N[T]` stays inside it.
pub fn signed_cover_counts(
    g: &Graph,
    component: VertexSet,
    prefix_len: usize,
    prefix: u64,
) -> Vec<i128> {
    let order: Vec<usize> = component.iter().collect();
    let prefix_len = prefix_len.min(order.len());
    let closed = g.closed_adjacency();
    let mut covered = VertexSet::EMPTY;
    let mut odd = false;
    for (i, &v) in order[..prefix_len].iter().enumerate() {
        if (prefix >> i) & 1 == 1 {
            covered |= closed[v];
            odd = !odd;
        }
    }
    let mut acc = vec![0i128; order.len() + 1];
    let walk = CoverWalk {
        closed,
        order: &order,
        target: component,
    };
    walk.descend(prefix_len, covered, odd, &mut acc);
    acc
}

struct CoverWalk<'a> {
    closed: &'a [VertexSet],
    order: &'a [usize],
    target: VertexSet,
}

impl CoverWalk<'_> {
    fn descend(&self, idx: usize, covered: VertexSet, odd: bool, acc: &mut [i128]) {
        if idx == self.order.len() {
            acc[covered.len()] += if odd { -1 } else { 1 };
            return;
        }
        // Once N[T] is everything, the remaining r > 0 free vertices contribute
        // Σ_j C(r, j)(-1)^j = 0 at m = |target|.
        if covered == self.target {
            return;
        }
        let v = self.order[idx];
        self.descend(idx + 1, covered, odd, acc);
        self.descend(idx + 1, covered | self.closed[v], !odd, acc);
    }
}

/// Turns signed cover counts of an `size`-vertex component into its tally.
pub fn tally_from_cover_counts(size: usize, signed: &[i128]) -> DominationTally {
    debug_assert_eq!(signed.len(), size + 1);
    let binom = binomial_rows(size);
    let counts = (0..=size)
        .map(|k| {
            let d: i128 = signed
                .iter()
                .enumerate()
                .filter(|&(m, _)| size - m >= k)
                .map(|(m, &c)| c * binom[size - m][k] as i128)
                .sum();
            assert!(d >= 0, "inclusion-exclusion produced a negative count");
            BigUint::from(d as u128)
        })
        .collect();
    DominationTally::from_counts(counts)
}

fn binomial_rows(n: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    for a in 0..=n {
        let mut row = vec![1u64; a + 1];
        for k in 1..a {
            row[k] = rows[a - 1][k - 1] + rows[a - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Γ, Γ′ and their ratio for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvdSummary {
    pub order: usize,
    pub domination_number: usize,
    /// Γ
    pub total: BigUint,
    /// Γ′
    pub weighted_total: BigUint,
    /// Γ′/Γ in lowest terms.
    pub avd: BigRational,
}

impl AvdSummary {
    pub fn from_tally(tally: &DominationTally) -> Result<AvdSummary, CountError> {
        if tally.order() == 0 {
            return Err(CountError::EmptyGraph);
        }
        let total = tally.total();
        let weighted_total = tally.weighted_total();
        let avd = BigRational::new(
            BigInt::from(weighted_total.clone()),
            BigInt::from(total.clone()),
        );
        Ok(AvdSummary {
            order: tally.order(),
            domination_number: tally.domination_number(),
            total,
            weighted_total,
            avd,
        })
    }
}

/// avd(G) via the inclusion–exclusion path.
pub fn avd(g: &Graph) -> Result<AvdSummary, CountError> {
    if g.order() == 0 {
        return Err(CountError::EmptyGraph);
    }
    AvdSummary::from_tally(&tally_fast(g)?)
}

/// `n·2^{n-1} / (2^n - 1)`, the value taken by the complete graph.
pub fn complete_graph_avd(n: usize) -> BigRational {
    let two_n = BigInt::one() << n;
    BigRational::new(BigInt::from(n) * (&two_n >> 1usize), two_n - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    HoldsStrict,
    HoldsEquality,
    Violated,
    NotApplicable,
}

/// Outcome of comparing avd(G) with `(2n + r)/3`, `r` the number of isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub verdict: BoundVerdict,
    pub isolated: usize,
    pub star_like: bool,
    pub avd: Option<BigRational>,
    pub bound: Option<BigRational>,
    /// With no isolated vertices, equality must coincide with star-likeness.
    /// Always true when the graph has isolated vertices or n < 2.
    pub classification_consistent: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.verdict != BoundVerdict::Violated && self.classification_consistent
    }
}

/// `(2n + r)/3`.
pub fn avd_upper_bound(n: usize, isolated: usize) -> BigRational {
    BigRational::new(BigInt::from(2 * n + isolated), BigInt::from(3))
}

pub fn check_bound(g: &Graph) -> Result<BoundCheck, CountError> {
    if g.order() < 2 {
        return Ok(BoundCheck {
            verdict: BoundVerdict::NotApplicable,
            isolated: g.isolated_vertices().len(),
            star_like: g.is_star_like(),
            avd: None,
            bound: None,
            classification_consistent: true,
        });
    }
    let summary = avd(g)?;
    Ok(check_bound_with(g, &summary))
}

/// Bound check against a precomputed summary of the same graph.
pub fn check_bound_with(g: &Graph, summary: &AvdSummary) -> BoundCheck {
    let n = g.order();
    let isolated = g.isolated_vertices().len();
    let star_like = g.is_star_like();
    if n < 2 {
        return BoundCheck {
            verdict: BoundVerdict::NotApplicable,
            isolated,
            star_like,
            avd: None,
            bound: None,
            classification_consistent: true,
        };
    }
    let bound = avd_upper_bound(n, isolated);
    let verdict = match summary.avd.cmp(&bound) {
        Ordering::Less => BoundVerdict::HoldsStrict,
        Ordering::Equal => BoundVerdict::HoldsEquality,
        Ordering::Greater => BoundVerdict::Violated,
    };
    let classification_consistent =
        isolated > 0 || (verdict == BoundVerdict::HoldsEquality) == star_like;
    BoundCheck {
        verdict,
        isolated,
        star_like,
        avd: Some(summary.avd.clone()),
        bound: Some(bound),
        classification_consistent,
    }
}

/// Exact rational as `f64`, for human-readable output only.
pub fn approximate(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(t: &DominationTally) -> Vec<u64> {
        t.coefficients().iter().map(|c| c.to_u64().unwrap()).collect()
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    // Independent of both production paths: test every subset with `is_dominating`.
    fn naive_counts(g: &Graph) -> Vec<u64> {
        let n = g.order();
        let mut c = vec![0u64; n + 1];
        for code in 0..(1u64 << n) {
            let s = VertexSet::from_bits(code);
            if is_dominating(g, s) {
                c[s.len()] += 1;
            }
        }
        c
    }

    #[test]
    fn dominating_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_dominating(&c4, set(&[0, 1])));
        assert!(!is_dominating(&c4, set(&[0])));
        assert!(is_dominating(&c4, c4.vertices()));
    }

    #[test]
    fn bruteforce_examples() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(counts(&tally_bruteforce(&p3).unwrap()), [0, 1, 3, 1]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(counts(&tally_bruteforce(&c4).unwrap()), [0, 0, 6, 4, 1]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(counts(&tally_bruteforce(&k1).unwrap()), [0, 1]);
        assert_eq!(counts(&tally_bruteforce(&Graph::empty(0).unwrap()).unwrap()), [1]);
        for g in [p3, c4, Graph::star(4).unwrap(), Graph::complete(5).unwrap()] {
            assert_eq!(counts(&tally_bruteforce(&g).unwrap()), naive_counts(&g));
        }
    }

    #[test]
    fn oracle_cap() {
        let g = Graph::empty(25).unwrap();
        assert_eq!(
            tally_bruteforce(&g),
            Err(CountError::OracleCapExceeded { n: 25, cap: 24 })
        );
        assert!(tally_bruteforce_with_cap(&Graph::empty(10).unwrap(), 9).is_err());
    }

    #[test]
    fn ranges_add_up() {
        let g = Graph::from_edges(14, &[(0, 1), (1, 2), (2, 3), (5, 6), (6, 13), (13, 0), (8, 9)])
            .unwrap();
        let whole = bruteforce_counts(&g, 0..subset_space(14));
        let mut parts = vec![0u64; 15];
        for (lo, hi) in [(0u64, 777u64), (777, 4096), (4096, 9001), (9001, 16384)] {
            for (p, c) in parts.iter_mut().zip(bruteforce_counts(&g, lo..hi)) {
                *p += c;
            }
        }
        assert_eq!(whole, parts);
        assert_eq!(whole, naive_counts(&g));
    }

    #[test]
    fn fast_matches_oracle() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(tally_fast(&p3).unwrap(), tally_bruteforce(&p3).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        let two = c4.disjoint_union(&c4).unwrap();
        let t4 = tally_bruteforce(&c4).unwrap();
        assert_eq!(tally_fast(&two).unwrap(), t4.convolve(&t4));
        assert_eq!(tally_bruteforce(&two).unwrap(), t4.convolve(&t4));
    }

    #[test]
    fn empty_graph_has_one_dominating_set() {
        for n in [1usize, 5, 40, 64] {
            let t = tally_fast(&Graph::empty(n).unwrap()).unwrap();
            assert_eq!(t.total(), BigUint::one());
            assert_eq!(t.domination_number(), n);
            assert_eq!(avd(&Graph::empty(n).unwrap()).unwrap().avd, ratio(n as i64, 1));
        }
    }

    #[test]
    fn prefix_partition_sums() {
        let g = Graph::cycle(9).unwrap();
        let whole = signed_cover_counts(&g, g.vertices(), 0, 0);
        let mut sum = vec![0i128; 10];
        for prefix in 0..8u64 {
            for (s, c) in sum.iter_mut().zip(signed_cover_counts(&g, g.vertices(), 3, prefix)) {
                *s += c;
            }
        }
        assert_eq!(whole, sum);
    }

    #[test]
    fn avd_values() {
        assert_eq!(avd(&Graph::complete(2).unwrap()).unwrap().avd, ratio(4, 3));
        assert_eq!(avd(&Graph::complete(3).unwrap()).unwrap().avd, ratio(12, 7));
        for n in 1..=16 {
            assert_eq!(avd(&Graph::complete(n).unwrap()).unwrap().avd, complete_graph_avd(n));
        }
        let p3 = avd(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.total, BigUint::from(5u32));
        assert_eq!(p3.weighted_total, BigUint::from(10u32));
        assert_eq!(p3.avd, ratio(2, 1));
        assert_eq!(avd(&Graph::empty(0).unwrap()), Err(CountError::EmptyGraph));
    }

    #[test]
    fn bound_examples() {
        let p4 = check_bound(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.verdict, BoundVerdict::HoldsEquality);
        assert!(p4.holds());

        let k13 = check_bound(&Graph::star(4).unwrap()).unwrap();
        assert_eq!(k13.verdict, BoundVerdict::HoldsStrict);
        assert_eq!(k13.avd, Some(ratio(23, 9)));
        assert!(k13.holds());

        let k1_k2 = Graph::empty(1).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let c = check_bound(&k1_k2).unwrap();
        assert_eq!(c.isolated, 1);
        assert_eq!(c.bound, Some(ratio(7, 3)));
        assert!(c.holds());

        assert_eq!(
            check_bound(&Graph::empty(1).unwrap()).unwrap().verdict,
            BoundVerdict::NotApplicable
        );
    }
}
