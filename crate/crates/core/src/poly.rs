//! Domination polynomial analytics: mode, unimodality and exact real-rootedness.
//!
//! Real-rootedness is decided with a Sturm chain over exact rationals. A
//! second route counts real roots with multiplicity through a square-free
//! decomposition; both are exposed so they can be checked against each other.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::domination::{
    tally_bruteforce_with_cap, tally_fast, AvdSummary, CountError, DominationTally,
    DEFAULT_ORACLE_CAP,
};
use crate::graph::Graph;
use crate::graph6::encode_graph6;

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn new(mut c: Vec<BigRational>) -> Poly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    fn from_ints(c: &[BigInt]) -> Poly {
        Poly::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has none.
    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("non-zero polynomial")
    }

    fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn sub(&self, o: &Poly) -> Poly {
        let len = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        Poly::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    /// Quotient and remainder of division by a non-zero `d`.
    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(rd) = Poly::new(rem.clone()).degree() {
            if rd < dd {
                break;
            }
            rem.truncate(rd + 1);
            let factor = &rem[rd] / d.lead();
            let shift = rd - dd;
            for (i, c) in d.0.iter().enumerate() {
                rem[i + shift] = &rem[i + shift] - &factor * c;
            }
            quot[shift] = factor;
            rem.truncate(rd);
        }
        (Poly::new(quot), Poly::new(rem))
    }

    fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &l).collect())
    }

    fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Sign at +∞ (`positive = true`) or −∞.
    fn sign_at_infinity(&self, positive: bool) -> i8 {
        let s = if self.lead().is_positive() { 1 } else { -1 };
        let odd = self.degree().unwrap_or(0) % 2 == 1;
        if positive || !odd {
            s
        } else {
            -s
        }
    }
}

fn sign_changes(signs: &[i8]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1.neg();
        chain.push(r);
    }
    chain.pop();
    chain
}

fn distinct_real_roots_poly(p: &Poly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    let at = |pos: bool| -> Vec<i8> { chain.iter().map(|q| q.sign_at_infinity(pos)).collect() };
    sign_changes(&at(false)) - sign_changes(&at(true))
}

/// Number of distinct real roots of a non-zero integer polynomial (lowest degree first).
pub fn distinct_real_roots(coeffs: &[BigInt]) -> usize {
    let p = Poly::from_ints(coeffs);
    assert!(!p.is_zero(), "the zero polynomial has no finite root count");
    distinct_real_roots_poly(&p)
}

/// Real roots counted with multiplicity, via Yun's square-free decomposition
/// `p = Π a_i^i` and a Sturm count on each factor.
pub fn real_roots_with_multiplicity(coeffs: &[BigInt]) -> usize {
    let p = Poly::from_ints(coeffs);
    assert!(!p.is_zero(), "the zero polynomial has no finite root count");
    if p.degree() == Some(0) {
        return 0;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = c.sub(&b.derivative());
    let mut total = 0;
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        total += i * distinct_real_roots_poly(&a);
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = c.sub(&b.derivative());
        i += 1;
    }
    total
}

/// True iff every complex root is real. Constant polynomials count as real-rooted.
///
/// Compares the Sturm count of distinct real roots with the number of
/// distinct roots, `deg p − deg gcd(p, p′)`.
pub fn is_real_rooted(coeffs: &[BigInt]) -> bool {
    let p = Poly::from_ints(coeffs);
    assert!(!p.is_zero(), "the zero polynomial has no finite root count");
    let deg = p.degree().unwrap();
    if deg == 0 {
        return true;
    }
    let g = p.gcd(&p.derivative());
    let distinct = deg - g.degree().unwrap_or(0);
    distinct_real_roots_poly(&p) == distinct
}

/// Every index attaining the maximum coefficient, ascending.
pub fn mode_indices(coeffs: &[BigUint]) -> Vec<usize> {
    let Some(max) = coeffs.iter().max() else {
        return Vec::new();
    };
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| *c == max)
        .map(|(k, _)| k)
        .collect()
}

/// Non-decreasing then non-increasing (no strict dip followed by a strict rise).
pub fn is_unimodal(coeffs: &[BigUint]) -> bool {
    let mut falling = false;
    for w in coeffs.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyReport {
    pub coefficients: DominationTally,
    pub avd: BigRational,
    pub mode_indices: Vec<usize>,
    pub unimodal: bool,
    pub real_rooted: bool,
    /// Whether the mode meets `{⌊avd⌋, ⌈avd⌉}`; only computed when real-rooted.
    pub darroch_consistent: Option<bool>,
}

impl PolyReport {
    pub fn largest_mode(&self) -> usize {
        *self.mode_indices.last().expect("mode set is non-empty")
    }
}

/// Analysis of a tally of order at least one.
pub fn analyze_tally(tally: &DominationTally) -> Result<PolyReport, CountError> {
    let summary = AvdSummary::from_tally(tally)?;
    let coeffs = tally.coefficients();
    let modes = mode_indices(coeffs);
    // x^γ only contributes real roots at zero.
    let gamma = tally.domination_number();
    let trimmed: Vec<BigInt> = coeffs[gamma..].iter().map(|c| BigInt::from(c.clone())).collect();
    let real_rooted = is_real_rooted(&trimmed);
    let darroch_consistent = real_rooted.then(|| {
        let (floor, ceil) = (summary.avd.floor(), summary.avd.ceil());
        modes.iter().any(|&k| {
            let k = BigRational::from_integer(BigInt::from(k));
            k == floor || k == ceil
        })
    });
    Ok(PolyReport {
        coefficients: tally.clone(),
        avd: summary.avd,
        mode_indices: modes,
        unimodal: is_unimodal(coeffs),
        real_rooted,
        darroch_consistent,
    })
}

pub fn analyze(g: &Graph) -> Result<PolyReport, CountError> {
    analyze_tally(&tally_fast(g)?)
}

/// `D′(G,1)/D(G,1)` from the oracle tally equals the avd summary of the fast tally.
pub fn avd_equals_logderivative(g: &Graph) -> Result<bool, CountError> {
    let oracle = tally_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)?;
    let (mut value, mut slope) = (BigInt::zero(), BigInt::zero());
    for (k, c) in oracle.coefficients().iter().enumerate() {
        let c = BigInt::from(c.clone());
        slope += &c * BigInt::from(k);
        value += c;
    }
    if value.is_zero() || g.order() == 0 {
        return Err(CountError::EmptyGraph);
    }
    let logderivative = BigRational::new(slope, value);
    Ok(crate::domination::avd(g)?.avd == logderivative)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurveyError {
    EmptyStream { n: usize },
    Count(CountError),
}

impl fmt::Display for SurveyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurveyError::EmptyStream { n } => {
                write!(f, "no graphs of order {n} without isolated vertices in the stream")
            }
            SurveyError::Count(e) => e.fmt(f),
        }
    }
}

impl From<CountError> for SurveyError {
    fn from(e: CountError) -> Self {
        SurveyError::Count(e)
    }
}

/// One surveyed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub graph6: alloc::string::String,
    pub mode_indices: Vec<usize>,
    pub largest_mode: usize,
    pub star_like: bool,
}

/// Running maximum of the largest mode index; merges associatively.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModeSurvey {
    pub examined: u64,
    pub max_mode_index: Option<usize>,
    /// graph6 strings of attaining graphs, sorted.
    pub attaining: Vec<alloc::string::String>,
    pub star_like_attains: bool,
}

impl ModeSurvey {
    pub fn row(g: &Graph) -> Result<SurveyRow, CountError> {
        let report = analyze(g)?;
        Ok(SurveyRow {
            graph6: encode_graph6(g),
            largest_mode: report.largest_mode(),
            mode_indices: report.mode_indices,
            star_like: g.is_star_like(),
        })
    }

    pub fn offer(&mut self, row: &SurveyRow) {
        self.examined += 1;
        match self.max_mode_index {
            Some(m) if row.largest_mode < m => {}
            Some(m) if row.largest_mode == m => {
                self.attaining.push(row.graph6.clone());
                self.star_like_attains |= row.star_like;
            }
            _ => {
                self.max_mode_index = Some(row.largest_mode);
                self.attaining = vec![row.graph6.clone()];
                self.star_like_attains = row.star_like;
            }
        }
    }

    pub fn merge(mut self, other: ModeSurvey) -> ModeSurvey {
        self.examined += other.examined;
        match (self.max_mode_index, other.max_mode_index) {
            (_, None) => {}
            (None, Some(_)) => {
                let examined = self.examined;
                self = other;
                self.examined = examined;
            }
            (Some(a), Some(b)) if b > a => {
                self.max_mode_index = Some(b);
                self.attaining = other.attaining;
                self.star_like_attains = other.star_like_attains;
            }
            (Some(a), Some(b)) if b == a => {
                self.attaining.extend(other.attaining);
                self.star_like_attains |= other.star_like_attains;
            }
            _ => {}
        }
        self
    }

    fn normalize(mut self) -> ModeSurvey {
        self.attaining.sort();
        self.attaining.dedup();
        self
    }

    pub fn finish(self, n: usize) -> Result<ModeSurvey, SurveyError> {
        if self.max_mode_index.is_none() {
            return Err(SurveyError::EmptyStream { n });
        }
        Ok(self.normalize())
    }
}

/// Whether a graph takes part in an order-`n` survey.
pub fn survey_admits(g: &Graph, n: usize) -> bool {
    g.order() == n && g.isolated_vertices().is_empty()
}

/// Largest mode index over the order-`n` graphs without isolated vertices in
/// `graphs`, and whether a star-like graph attains it.
pub fn max_mode_survey<I>(graphs: I, n: usize) -> Result<ModeSurvey, SurveyError>
where
    I: IntoIterator<Item = Graph>,
{
    let mut survey = ModeSurvey::default();
    for g in graphs {
        if survey_admits(&g, n) {
            survey.offer(&ModeSurvey::row(&g)?);
        }
    }
    survey.finish(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn uints(c: &[u64]) -> Vec<BigUint> {
        c.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn sturm_counts() {
        // x^2 - 2
        assert_eq!(distinct_real_roots(&ints(&[-2, 0, 1])), 2);
        // x^2 + 1
        assert_eq!(distinct_real_roots(&ints(&[1, 0, 1])), 0);
        // (x - 1)^2 (x + 2)
        let p = ints(&[2, -3, 0, 1]);
        assert_eq!(distinct_real_roots(&p), 2);
        assert_eq!(real_roots_with_multiplicity(&p), 3);
        assert!(is_real_rooted(&p));
        // (x^2 + 1)^2
        let q = ints(&[1, 0, 2, 0, 1]);
        assert!(!is_real_rooted(&q));
        assert_eq!(real_roots_with_multiplicity(&q), 0);
        assert!(is_real_rooted(&ints(&[5])));
    }

    #[test]
    fn modes_and_unimodality() {
        assert_eq!(mode_indices(&uints(&[0, 3, 3, 1])), [1, 2]);
        assert!(is_unimodal(&uints(&[0, 1, 3, 3, 1])));
        assert!(!is_unimodal(&uints(&[1, 3, 2, 4])));
        assert!(is_unimodal(&uints(&[0, 0, 6, 4, 1])));
    }

    #[test]
    fn analyze_examples() {
        let p3 = analyze(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3.mode_indices, [2]);
        assert!(p3.unimodal);
        assert!(p3.real_rooted);
        assert_eq!(p3.darroch_consistent, Some(true));

        let c4 = analyze(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.mode_indices, [2]);

        let k1 = analyze(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k1.mode_indices, [1]);
        assert!(k1.real_rooted);
    }

    #[test]
    fn logderivative_examples() {
        for g in [
            Graph::path(3).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::empty(4).unwrap(),
        ] {
            assert!(avd_equals_logderivative(&g).unwrap());
        }
    }

    #[test]
    fn survey_examples() {
        let s = max_mode_survey([Graph::path(3).unwrap(), Graph::complete(3).unwrap()], 3).unwrap();
        assert_eq!(s.max_mode_index, Some(2));
        assert_eq!(s.attaining.len(), 2);
        assert!(s.star_like_attains);

        let s = max_mode_survey([Graph::complete(2).unwrap()], 2).unwrap();
        assert_eq!(s.max_mode_index, Some(1));
        assert!(s.star_like_attains);

        assert_eq!(
            max_mode_survey([Graph::empty(3).unwrap()], 3),
            Err(SurveyError::EmptyStream { n: 3 })
        );
    }
}
