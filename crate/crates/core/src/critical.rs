//! Critical vertices and outside-neighbour classes of dominating sets, and
//! exhaustive checks of the counting identities and inequalities built on them.
//!
//! For a dominating set `S`:
//!
//! * `a(S)`: members `v` with `S - v` no longer dominating;
//! * `N1(S)` / `N2(S)`: outsiders with exactly one / at least two members of `S` in `N[v]`;
//! * `a1(S)` / `a2(S)`: critical vertices with / without a neighbour in `N1(S)`.
//!
//! Sums of these sizes over a family of dominating sets, restricted to a vertex
//! set `X`, are the pair counts `|A_X,i|` and `|N_X,i|`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Range};

use num_bigint::BigInt;

use crate::domination::{
    avd_upper_bound, check_oracle_cap, is_dominating, low_cover_table,
    subset_space, tally_fast, AvdSummary, CountError, DominationTally, DEFAULT_ORACLE_CAP,
};
use crate::graph::{Graph, StemStructure};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalError {
    NotDominating(VertexSet),
    Count(CountError),
    NotAStem(usize),
    StemNotInFamily { stem: usize },
    /// `I` contains a vertex that is not a stem.
    InvalidStemSubset(VertexSet),
}

impl fmt::Display for CriticalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriticalError::NotDominating(s) => write!(f, "{s} is not a dominating set"),
            CriticalError::Count(e) => e.fmt(f),
            CriticalError::NotAStem(v) => write!(f, "vertex {v} is not a stem"),
            CriticalError::StemNotInFamily { stem } => {
                write!(f, "stem {stem} is not in the chosen stem subset")
            }
            CriticalError::InvalidStemSubset(s) => write!(f, "{s} contains non-stem vertices"),
        }
    }
}

impl From<CountError> for CriticalError {
    fn from(e: CountError) -> Self {
        CriticalError::Count(e)
    }
}

/// The six derived sets of one dominating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetProfile {
    pub set: VertexSet,
    /// a(S)
    pub critical: VertexSet,
    /// a1(S)
    pub critical_one: VertexSet,
    /// a2(S)
    pub critical_two: VertexSet,
    /// N1(S)
    pub outside_one: VertexSet,
    /// N2(S)
    pub outside_two: VertexSet,
}

impl SetProfile {
    /// N(S) = V - S for a dominating set.
    pub fn outside(&self) -> VertexSet {
        self.outside_one | self.outside_two
    }
}

/// Profile of `set`, computed straight from the definitions.
pub fn profile(g: &Graph, set: VertexSet) -> Result<SetProfile, CriticalError> {
    if !set.is_subset(g.vertices()) || !is_dominating(g, set) {
        return Err(CriticalError::NotDominating(set));
    }
    let critical: VertexSet = set
        .iter()
        .filter(|&v| !is_dominating(g, set.without(v)))
        .collect();
    let outside = g.vertices() - set;
    let outside_one: VertexSet = outside
        .iter()
        .filter(|&v| (g.closed_neighbors(v) & set).len() == 1)
        .collect();
    let outside_two: VertexSet = outside
        .iter()
        .filter(|&v| (g.closed_neighbors(v) & set).len() >= 2)
        .collect();
    let critical_one: VertexSet = critical
        .iter()
        .filter(|&v| g.neighbors(v).intersects(outside_one))
        .collect();
    Ok(SetProfile {
        set,
        critical,
        critical_one,
        critical_two: critical - critical_one,
        outside_one,
        outside_two,
    })
}

/// Bit-parallel profile of a known dominating set.
///
/// A member `v` is critical iff some `u ∈ N[v]` is dominated exactly once,
/// since `v` is then `u`'s only dominator.
#[inline]
pub(crate) fn profile_dominating(closed: &[VertexSet], adj: &[VertexSet], set: VertexSet) -> SetProfile {
    let mut once = 0u64;
    let mut more = 0u64;
    for v in set.iter() {
        let c = closed[v].bits();
        more |= once & c;
        once |= c;
    }
    let exactly_once = VertexSet::from_bits(once & !more);
    let outside_one = exactly_once - set;
    let outside_two = VertexSet::from_bits(more) - set;
    let mut critical = VertexSet::EMPTY;
    let mut critical_one = VertexSet::EMPTY;
    for v in set.iter() {
        if closed[v].intersects(exactly_once) {
            critical.insert(v);
            if adj[v].intersects(outside_one) {
                critical_one.insert(v);
            }
        }
    }
    SetProfile {
        set,
        critical,
        critical_one,
        critical_two: critical - critical_one,
        outside_one,
        outside_two,
    }
}

/// Which dominating sets to sum over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Every dominating set.
    All,
    /// `X_I`: dominating sets `S` with `L[s] ⊄ S` exactly for the stems `s ∈ I`.
    Stem(VertexSet),
}

/// Sums of profile sizes, each intersected with a restriction set `X`, over a family.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CriticalAggregates {
    pub sum_a: u128,
    pub sum_a1: u128,
    pub sum_a2: u128,
    pub sum_n1: u128,
    pub sum_n2: u128,
    pub sum_n: u128,
    pub family_size: u128,
}

impl CriticalAggregates {
    #[inline]
    pub fn record(&mut self, p: &SetProfile, restrict: VertexSet) {
        let a1 = (p.critical_one & restrict).len() as u128;
        let a2 = (p.critical_two & restrict).len() as u128;
        let n1 = (p.outside_one & restrict).len() as u128;
        let n2 = (p.outside_two & restrict).len() as u128;
        self.sum_a1 += a1;
        self.sum_a2 += a2;
        self.sum_a += a1 + a2;
        self.sum_n1 += n1;
        self.sum_n2 += n2;
        self.sum_n += n1 + n2;
        self.family_size += 1;
    }
}

impl AddAssign for CriticalAggregates {
    fn add_assign(&mut self, o: CriticalAggregates) {
        self.sum_a += o.sum_a;
        self.sum_a1 += o.sum_a1;
        self.sum_a2 += o.sum_a2;
        self.sum_n1 += o.sum_n1;
        self.sum_n2 += o.sum_n2;
        self.sum_n += o.sum_n;
        self.family_size += o.family_size;
    }
}

impl Add for CriticalAggregates {
    type Output = CriticalAggregates;
    fn add(mut self, o: CriticalAggregates) -> CriticalAggregates {
        self += o;
        self
    }
}

/// Precomputed `L[s]` for every stem, used to place a set in its family `X_I`.
#[derive(Debug, Clone)]
pub struct StemIndex {
    pub structure: StemStructure,
    closed_leaves: Vec<(usize, VertexSet)>,
}

impl StemIndex {
    pub fn new(g: &Graph) -> StemIndex {
        let structure = g.stem_structure();
        let closed_leaves = structure
            .stems
            .iter()
            .map(|s| (s.vertex, s.closed_leaves()))
            .collect();
        StemIndex {
            structure,
            closed_leaves,
        }
    }

    /// The unique `I = {s : L[s] ⊄ S}`.
    #[inline]
    pub fn family_of(&self, set: VertexSet) -> VertexSet {
        let mut i = VertexSet::EMPTY;
        for &(s, ls) in &self.closed_leaves {
            if !ls.is_subset(set) {
                i.insert(s);
            }
        }
        i
    }

    /// `V_I = V - ∪_{s ∈ I} L[s]`.
    pub fn remaining_vertices(&self, n: usize, stems: VertexSet) -> VertexSet {
        self.closed_leaves
            .iter()
            .filter(|(s, _)| stems.contains(*s))
            .fold(VertexSet::full(n), |acc, &(_, ls)| acc - ls)
    }

    fn validate(&self, stems: VertexSet) -> Result<(), CriticalError> {
        if stems.is_subset(self.structure.stem_vertices()) {
            Ok(())
        } else {
            Err(CriticalError::InvalidStemSubset(stems))
        }
    }
}

/// Walks every dominating set whose subset code lies in `range`.
pub fn for_each_dominating_in_range(g: &Graph, range: Range<u64>, mut f: impl FnMut(VertexSet)) {
    let n = g.order();
    let low_bits = n.min(12);
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
                f(VertexSet::from_bits(c));
            }
        }
        code = block_end;
    }
}

/// Partial aggregates over the subset codes in `range`.
pub fn aggregates_in_range(
    g: &Graph,
    stems: &StemIndex,
    family: Family,
    restrict: VertexSet,
    range: Range<u64>,
) -> CriticalAggregates {
    let closed = g.closed_adjacency();
    let adj = g.adjacency();
    let mut agg = CriticalAggregates::default();
    for_each_dominating_in_range(g, range, |s| {
        if let Family::Stem(i) = family {
            if stems.family_of(s) != i {
                return;
            }
        }
        agg.record(&profile_dominating(closed, adj, s), restrict);
    });
    agg
}

/// Pair counts over `family` restricted to `restrict`, by exhaustive enumeration.
pub fn aggregates(
    g: &Graph,
    family: Family,
    restrict: VertexSet,
) -> Result<CriticalAggregates, CriticalError> {
    check_oracle_cap(g.order(), DEFAULT_ORACLE_CAP)?;
    let stems = StemIndex::new(g);
    if let Family::Stem(i) = family {
        stems.validate(i)?;
    }
    Ok(aggregates_in_range(
        g,
        &stems,
        family,
        restrict,
        0..subset_space(g.order()),
    ))
}

/// One member of the partition `{X_I}` of the dominating sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemFamily {
    /// I
    pub stems: VertexSet,
    /// V_I
    pub remaining: VertexSet,
    pub size: u128,
}

/// Every `X_I` (including empty ones), ordered by the bitmask of `I`.
pub fn stem_families(g: &Graph) -> Result<Vec<StemFamily>, CriticalError> {
    let n = g.order();
    check_oracle_cap(n, DEFAULT_ORACLE_CAP)?;
    let index = StemIndex::new(g);
    let mut sizes: BTreeMap<VertexSet, u128> = BTreeMap::new();
    for_each_dominating_in_range(g, 0..subset_space(n), |s| {
        *sizes.entry(index.family_of(s)).or_default() += 1;
    });
    let stem_list: Vec<usize> = index.structure.stems.iter().map(|s| s.vertex).collect();
    let families = (0..1u64 << stem_list.len())
        .map(|code| {
            let stems: VertexSet = stem_list
                .iter()
                .enumerate()
                .filter(|(b, _)| (code >> b) & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            StemFamily {
                stems,
                remaining: index.remaining_vertices(n, stems),
                size: sizes.get(&stems).copied().unwrap_or(0),
            }
        })
        .collect();
    Ok(families)
}

/// The relation a check asserts between its two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    LessOrEqual,
    Less,
    /// Both sides are truth values (1 or 0) that must agree.
    Equivalent,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::LessOrEqual => "<=",
            Relation::Less => "<",
            Relation::Equivalent => "<=>",
        }
    }

    fn test(self, lhs: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Relation::Equal | Relation::Equivalent => lhs == rhs,
            Relation::LessOrEqual => lhs <= rhs,
            Relation::Less => lhs < rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// Σ|a(S)| = 2Γ′ − nΓ
    CriticalSum,
    /// Σ|N(S)| = nΓ − Γ′
    OutsideSum,
    /// Σ|a(S)| ≤ Σ|N(S)| ⇔ avd ≤ 2n/3
    AverageEquivalence,
    /// |a1(S)| ≤ |N1(S)| for every dominating S
    CriticalOneBound,
    /// (2^d − d − 1)·|A_v,2| < |N_v,2| for deg(v) = d ≥ 2
    DegreeTwo { vertex: usize },
    /// |A_L[s]| ≤ |N_L[s]| over X_I, strict when k ≥ 3
    StemLeaves { stems: VertexSet, stem: usize, k: usize },
    /// |A_V_I,1| ≤ |N_V_I,1| over X_I
    RestrictedCriticalOne { stems: VertexSet },
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::CriticalSum => "critical_sum",
            Check::OutsideSum => "outside_sum",
            Check::AverageEquivalence => "average_equivalence",
            Check::CriticalOneBound => "critical_one_bound",
            Check::DegreeTwo { .. } => "degree_two",
            Check::StemLeaves { .. } => "stem_leaves",
            Check::RestrictedCriticalOne { .. } => "restricted_critical_one",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

/// Evidence attached to a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Profile(SetProfile),
    PairCounts(CriticalAggregates),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub relation: Relation,
    pub verdict: Verdict,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub witness: Option<Witness>,
}

impl CheckReport {
    fn compare(check: Check, relation: Relation, lhs: BigInt, rhs: BigInt) -> CheckReport {
        let verdict = if relation.test(&lhs, &rhs) {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        CheckReport {
            check,
            relation,
            verdict,
            lhs,
            rhs,
            witness: None,
        }
    }

    fn not_applicable(check: Check, relation: Relation) -> CheckReport {
        CheckReport {
            check,
            relation,
            verdict: Verdict::NotApplicable,
            lhs: BigInt::default(),
            rhs: BigInt::default(),
            witness: None,
        }
    }

    fn with_witness(mut self, w: Witness) -> CheckReport {
        if self.verdict == Verdict::Violated {
            self.witness = Some(w);
        }
        self
    }

    /// False only for a violated check.
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Violated
    }
}

fn big(x: u128) -> BigInt {
    BigInt::from(x)
}

/// Checks both sum identities and the average equivalence from precomputed
/// whole-graph aggregates and a tally obtained independently of them.
pub fn lemma_sum_reports(
    n: usize,
    all: &CriticalAggregates,
    tally: &DominationTally,
) -> [CheckReport; 3] {
    let total = BigInt::from(tally.total());
    let weighted = BigInt::from(tally.weighted_total());
    let nn = BigInt::from(n);
    let critical = CheckReport::compare(
        Check::CriticalSum,
        Relation::Equal,
        big(all.sum_a),
        &weighted * 2 - &nn * &total,
    )
    .with_witness(Witness::PairCounts(*all));
    let outside = CheckReport::compare(
        Check::OutsideSum,
        Relation::Equal,
        big(all.sum_n),
        &nn * &total - &weighted,
    )
    .with_witness(Witness::PairCounts(*all));
    let equivalence = if n == 0 {
        CheckReport::not_applicable(Check::AverageEquivalence, Relation::Equivalent)
    } else {
        let summary = AvdSummary::from_tally(tally).expect("n > 0");
        let sums_ordered = all.sum_a <= all.sum_n;
        let below = summary.avd <= avd_upper_bound(n, 0);
        CheckReport::compare(
            Check::AverageEquivalence,
            Relation::Equivalent,
            BigInt::from(u8::from(sums_ordered)),
            BigInt::from(u8::from(below)),
        )
        .with_witness(Witness::PairCounts(*all))
    };
    [critical, outside, equivalence]
}

/// Σ|a(S)| = 2Γ′ − nΓ and Σ|N(S)| = nΓ − Γ′, plus the equivalence with avd ≤ 2n/3.
///
/// The left sides come from enumerated profiles, the right sides from the
/// inclusion–exclusion tally.
pub fn verify_lemma_sum(g: &Graph) -> Result<[CheckReport; 3], CriticalError> {
    let all = aggregates(g, Family::All, g.vertices())?;
    let tally = tally_fast(g)?;
    Ok(lemma_sum_reports(g.order(), &all, &tally))
}

/// Per-set check of |a1(S)| ≤ |N1(S)| over the codes in `range`.
///
/// Returns the summed sides and the first violating profile, if any.
pub fn critical_one_bound_in_range(
    g: &Graph,
    range: Range<u64>,
) -> (u128, u128, Option<SetProfile>) {
    let closed = g.closed_adjacency();
    let adj = g.adjacency();
    let (mut lhs, mut rhs, mut bad) = (0u128, 0u128, None);
    for_each_dominating_in_range(g, range, |s| {
        let p = profile_dominating(closed, adj, s);
        let (a1, n1) = (p.critical_one.len(), p.outside_one.len());
        lhs += a1 as u128;
        rhs += n1 as u128;
        if a1 > n1 && bad.is_none() {
            bad = Some(p);
        }
    });
    (lhs, rhs, bad)
}

pub fn critical_one_report(lhs: u128, rhs: u128, bad: Option<SetProfile>) -> CheckReport {
    let verdict = if bad.is_some() {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    CheckReport {
        check: Check::CriticalOneBound,
        relation: Relation::LessOrEqual,
        verdict,
        lhs: big(lhs),
        rhs: big(rhs),
        witness: bad.map(Witness::Profile),
    }
}

/// |a1(S)| ≤ |N1(S)| for every dominating set; the sides reported are the sums.
pub fn verify_a1_le_n1(g: &Graph) -> Result<CheckReport, CriticalError> {
    check_oracle_cap(g.order(), DEFAULT_ORACLE_CAP)?;
    let (lhs, rhs, bad) = critical_one_bound_in_range(g, 0..subset_space(g.order()));
    Ok(critical_one_report(lhs, rhs, bad))
}

/// Report for the degree inequality at `vertex` from its `X = {vertex}` aggregates.
pub fn degree_two_report(g: &Graph, vertex: usize, agg: &CriticalAggregates) -> CheckReport {
    let d = g.degree(vertex);
    let check = Check::DegreeTwo { vertex };
    if d < 2 {
        return CheckReport::not_applicable(check, Relation::Less);
    }
    let multiplier = (BigInt::from(1u8) << d) - d - 1;
    CheckReport::compare(check, Relation::Less, multiplier * big(agg.sum_a2), big(agg.sum_n2))
        .with_witness(Witness::PairCounts(*agg))
}

/// (2^deg(v) − deg(v) − 1)·|A_v,2| < |N_v,2| over all dominating sets.
pub fn verify_deg2_inequality(g: &Graph, vertex: usize) -> Result<CheckReport, CriticalError> {
    if g.degree(vertex) < 2 {
        return Ok(CheckReport::not_applicable(
            Check::DegreeTwo { vertex },
            Relation::Less,
        ));
    }
    let agg = aggregates(g, Family::All, VertexSet::singleton(vertex))?;
    Ok(degree_two_report(g, vertex, &agg))
}

/// |A_L[s]| ≤ |N_L[s]| over `X_I`, strictly when `s` has three or more leaves.
pub fn verify_kstem_inequality(
    g: &Graph,
    stems: VertexSet,
    stem: usize,
) -> Result<CheckReport, CriticalError> {
    let index = StemIndex::new(g);
    index.validate(stems)?;
    let s = index
        .structure
        .stem(stem)
        .ok_or(CriticalError::NotAStem(stem))?
        .clone();
    if !stems.contains(stem) {
        return Err(CriticalError::StemNotInFamily { stem });
    }
    let agg = aggregates(g, Family::Stem(stems), s.closed_leaves())?;
    Ok(kstem_report(stems, stem, s.k(), &agg))
}

/// An empty `X_I` (possible only with a `K2` component, whose two vertices
/// are each other's stem and leaf) makes both sides zero; it is reported as
/// not applicable rather than as a failed strict comparison.
pub fn kstem_report(stems: VertexSet, stem: usize, k: usize, agg: &CriticalAggregates) -> CheckReport {
    let relation = if k >= 3 {
        Relation::Less
    } else {
        Relation::LessOrEqual
    };
    let check = Check::StemLeaves { stems, stem, k };
    if agg.family_size == 0 {
        return CheckReport::not_applicable(check, relation);
    }
    CheckReport::compare(
        check,
        relation,
        big(agg.sum_a),
        big(agg.sum_n),
    )
    .with_witness(Witness::PairCounts(*agg))
}

/// |A_V_I,1| ≤ |N_V_I,1| over `X_I`.
pub fn verify_restricted_a1(g: &Graph, stems: VertexSet) -> Result<CheckReport, CriticalError> {
    let index = StemIndex::new(g);
    index.validate(stems)?;
    let remaining = index.remaining_vertices(g.order(), stems);
    let agg = aggregates(g, Family::Stem(stems), remaining)?;
    Ok(restricted_report(stems, &agg))
}

pub fn restricted_report(stems: VertexSet, agg: &CriticalAggregates) -> CheckReport {
    CheckReport::compare(
        Check::RestrictedCriticalOne { stems },
        Relation::LessOrEqual,
        big(agg.sum_a1),
        big(agg.sum_n1),
    )
    .with_witness(Witness::PairCounts(*agg))
}

/// All subsets `I` of the stems, ordered by bitmask.
pub fn stem_subsets(index: &StemIndex) -> Vec<VertexSet> {
    let list: Vec<usize> = index.structure.stems.iter().map(|s| s.vertex).collect();
    (0..1u64 << list.len())
        .map(|code| {
            list.iter()
                .enumerate()
                .filter(|(b, _)| (code >> b) & 1 == 1)
                .map(|(_, &s)| s)
                .collect()
        })
        .collect()
}

/// Which families of checks [`verify_all`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    Sum,
    CriticalOne,
    DegreeTwo,
    StemLeaves,
    Restricted,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::Sum,
        Lemma::CriticalOne,
        Lemma::DegreeTwo,
        Lemma::StemLeaves,
        Lemma::Restricted,
    ];
}

/// Runs the selected checks in a single pass over the dominating sets.
///
/// Stem-family checks are emitted for every pair `(I, s)` with `s ∈ I`, and
/// for every `I`; degree checks for every vertex of degree at least two.
pub fn verify_all(g: &Graph, lemmas: &[Lemma]) -> Result<Vec<CheckReport>, CriticalError> {
    verify_all_with_cap(g, lemmas, DEFAULT_ORACLE_CAP)
}

/// [`verify_all`] with an explicit limit on the order for exhaustive enumeration.
pub fn verify_all_with_cap(
    g: &Graph,
    lemmas: &[Lemma],
    cap: usize,
) -> Result<Vec<CheckReport>, CriticalError> {
    let n = g.order();
    check_oracle_cap(n, cap)?;
    let index = StemIndex::new(g);
    let subsets = stem_subsets(&index);
    let closed = g.closed_adjacency();
    let adj = g.adjacency();

    let mut all = CriticalAggregates::default();
    let mut per_vertex = alloc::vec![CriticalAggregates::default(); n];
    // Per family: aggregates restricted to V_I and to each L[s].
    let mut per_family: BTreeMap<VertexSet, (CriticalAggregates, Vec<CriticalAggregates>)> =
        BTreeMap::new();
    let remaining: BTreeMap<VertexSet, VertexSet> = subsets
        .iter()
        .map(|&i| (i, index.remaining_vertices(n, i)))
        .collect();
    let stems = &index.structure.stems;
    let mut first_bad: Option<SetProfile> = None;
    let (mut a1_total, mut n1_total) = (0u128, 0u128);

    for_each_dominating_in_range(g, 0..subset_space(n), |s| {
        let p = profile_dominating(closed, adj, s);
        all.record(&p, g.vertices());
        let (a1, n1) = (p.critical_one.len(), p.outside_one.len());
        a1_total += a1 as u128;
        n1_total += n1 as u128;
        if a1 > n1 && first_bad.is_none() {
            first_bad = Some(p);
        }
        for (v, agg) in per_vertex.iter_mut().enumerate() {
            agg.record(&p, VertexSet::singleton(v));
        }
        let i = index.family_of(s);
        let entry = per_family
            .entry(i)
            .or_insert_with(|| (CriticalAggregates::default(), alloc::vec![CriticalAggregates::default(); stems.len()]));
        entry.0.record(&p, remaining[&i]);
        for (agg, st) in entry.1.iter_mut().zip(stems) {
            agg.record(&p, st.closed_leaves());
        }
    });

    let mut reports = Vec::new();
    for lemma in lemmas {
        match lemma {
            Lemma::Sum => {
                let tally = tally_fast(g)?;
                reports.extend(lemma_sum_reports(n, &all, &tally));
            }
            Lemma::CriticalOne => reports.push(critical_one_report(a1_total, n1_total, first_bad)),
            Lemma::DegreeTwo => {
                for (v, agg) in per_vertex.iter().enumerate() {
                    if g.degree(v) >= 2 {
                        reports.push(degree_two_report(g, v, agg));
                    }
                }
            }
            Lemma::StemLeaves => {
                for &i in &subsets {
                    let empty = (CriticalAggregates::default(), alloc::vec![CriticalAggregates::default(); stems.len()]);
                    let fam = per_family.get(&i).unwrap_or(&empty);
                    for (agg, st) in fam.1.iter().zip(stems) {
                        if i.contains(st.vertex) {
                            reports.push(kstem_report(i, st.vertex, st.k(), agg));
                        }
                    }
                }
            }
            Lemma::Restricted => {
                for &i in &subsets {
                    let agg = per_family.get(&i).map(|f| f.0).unwrap_or_default();
                    reports.push(restricted_report(i, &agg));
                }
            }
        }
    }
    Ok(reports)
}
