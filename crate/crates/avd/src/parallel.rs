//! Parallel drivers over a fixed-size worker pool.
//!
//! Work is split into pieces whose boundaries depend only on the input, never
//! on the number of workers, and partial results are combined with exact,
//! associative reductions. Outputs are therefore identical for every worker
//! count.

use avd_core::critical::{
    aggregates_in_range, critical_one_bound_in_range, critical_one_report, lemma_sum_reports,
    CheckReport, CriticalAggregates, CriticalError, Family, StemIndex,
};
use avd_core::domination::{
    bruteforce_counts, signed_cover_counts, subset_space, tally_from_cover_counts,
    DEFAULT_FAST_CAP, DEFAULT_ORACLE_CAP,
};
use avd_core::extremal::{SearchAccumulator, TheoremReport};
use avd_core::poly::{survey_admits, ModeSurvey, SurveyError, SurveyRow};
use avd_core::vertex_set::MAX_VERTICES;
use avd_core::{
    CountError, DominationTally, ExtremalResult, Graph, SearchConstraint, SearchError, VertexSet,
};
use num_bigint::BigUint;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

/// Subset codes per enumeration job.
pub const SUBSET_CHUNK: u64 = 1 << 14;
/// Vertices whose membership is fixed per inclusion–exclusion job.
pub const PREFIX_BITS: usize = 8;
/// Graphs per job when mapping over a stream.
pub const GRAPH_CHUNK: usize = 64;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "AVD_WORKERS";

/// Vertex limits for the two counting paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub oracle: usize,
    pub fast: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { oracle: DEFAULT_ORACLE_CAP, fast: DEFAULT_FAST_CAP }
    }
}

impl Caps {
    pub fn check_oracle(&self, n: usize) -> Result<(), CountError> {
        if n > self.oracle || n >= MAX_VERTICES {
            Err(CountError::OracleCapExceeded { n, cap: self.oracle })
        } else {
            Ok(())
        }
    }

    pub fn check_fast(&self, n: usize) -> Result<(), CountError> {
        if n > self.fast || n > MAX_VERTICES {
            Err(CountError::FastCapExceeded { n, cap: self.fast })
        } else {
            Ok(())
        }
    }
}

/// A dedicated pool of `count` worker threads.
pub struct Workers {
    pool: ThreadPool,
    count: usize,
}

impl Workers {
    pub fn new(count: usize) -> Result<Workers, rayon::ThreadPoolBuildError> {
        let count = count.max(1);
        let pool = ThreadPoolBuilder::new()
            .num_threads(count)
            .thread_name(|i| format!("avd-worker-{i}"))
            .build()?;
        Ok(Workers { pool, count })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }
}

fn add_vectors<T: Copy + std::ops::AddAssign>(mut a: Vec<T>, b: Vec<T>) -> Vec<T> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Inclusion–exclusion tally; each component is split into `2^PREFIX_BITS` jobs.
pub fn tally_fast(workers: &Workers, g: &Graph, caps: Caps) -> Result<DominationTally, CountError> {
    caps.check_fast(g.order())?;
    workers.install(|| {
        let mut tally = DominationTally::from_counts(vec![BigUint::from(1u8)]);
        for component in g.components() {
            let size = component.len();
            let prefix_len = size.min(PREFIX_BITS);
            let signed = (0..1u64 << prefix_len)
                .into_par_iter()
                .map(|prefix| signed_cover_counts(g, component, prefix_len, prefix))
                .reduce(|| vec![0i128; size + 1], add_vectors);
            tally = tally.convolve(&tally_from_cover_counts(size, &signed));
        }
        Ok(tally)
    })
}

fn chunks(n: usize) -> Vec<std::ops::Range<u64>> {
    let space = subset_space(n);
    (0..space.div_ceil(SUBSET_CHUNK))
        .map(|i| i * SUBSET_CHUNK..((i + 1) * SUBSET_CHUNK).min(space))
        .collect()
}

/// Exhaustive tally over fixed subset-code ranges.
pub fn tally_bruteforce(workers: &Workers, g: &Graph, caps: Caps) -> Result<DominationTally, CountError> {
    caps.check_oracle(g.order())?;
    let n = g.order();
    let counts = workers.install(|| {
        chunks(n)
            .into_par_iter()
            .map(|r| bruteforce_counts(g, r))
            .reduce(|| vec![0u64; n + 1], add_vectors)
    });
    Ok(DominationTally::from_u64_counts(&counts))
}

/// Pair counts over `family` restricted to `restrict`.
pub fn aggregates(
    workers: &Workers,
    g: &Graph,
    family: Family,
    restrict: VertexSet,
    caps: Caps,
) -> Result<CriticalAggregates, CriticalError> {
    caps.check_oracle(g.order())?;
    let index = StemIndex::new(g);
    if let Family::Stem(i) = family {
        if !i.is_subset(index.structure.stem_vertices()) {
            return Err(CriticalError::InvalidStemSubset(i));
        }
    }
    Ok(workers.install(|| {
        chunks(g.order())
            .into_par_iter()
            .map(|r| aggregates_in_range(g, &index, family, restrict, r))
            .reduce(CriticalAggregates::default, |a, b| a + b)
    }))
}

/// Both sum identities and the average equivalence, with profile sums from
/// enumeration and the right-hand sides from the inclusion–exclusion tally.
pub fn lemma_sum(workers: &Workers, g: &Graph, caps: Caps) -> Result<[CheckReport; 3], CriticalError> {
    let all = aggregates(workers, g, Family::All, g.vertices(), caps)?;
    let tally = tally_fast(workers, g, caps)?;
    Ok(lemma_sum_reports(g.order(), &all, &tally))
}

/// Per-set |a1(S)| ≤ |N1(S)|; the witness is the violation with the smallest subset code.
pub fn critical_one(workers: &Workers, g: &Graph, caps: Caps) -> Result<CheckReport, CriticalError> {
    caps.check_oracle(g.order())?;
    let (lhs, rhs, bad) = workers.install(|| {
        chunks(g.order())
            .into_par_iter()
            .map(|r| critical_one_bound_in_range(g, r))
            .reduce(
                || (0, 0, None),
                |a, b| (a.0 + b.0, a.1 + b.1, a.2.or(b.2)),
            )
    });
    Ok(critical_one_report(lhs, rhs, bad))
}

/// Applies `f` to every graph, keeping input order.
pub fn map_graphs<T, F>(workers: &Workers, graphs: &[Graph], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Graph) -> T + Sync,
{
    workers.install(|| graphs.par_iter().with_min_len(GRAPH_CHUNK).map(&f).collect())
}

/// Extremal search over a stream; ties are all reported.
pub fn search(
    workers: &Workers,
    graphs: &[Graph],
    constraint: SearchConstraint,
    caps: Caps,
) -> Result<ExtremalResult, SearchError> {
    let acc = workers.install(|| {
        graphs
            .par_chunks(GRAPH_CHUNK)
            .map(|chunk| -> Result<SearchAccumulator, CountError> {
                let mut acc = SearchAccumulator::default();
                for g in chunk.iter().filter(|g| constraint.admits(g)) {
                    caps.check_fast(g.order())?;
                    acc.offer_graph(g, &constraint)?;
                }
                Ok(acc)
            })
            .try_reduce(SearchAccumulator::default, |a, b| Ok(a.merge(b)))
    })?;
    acc.finish(constraint)
}

/// Per-graph survey rows (input order) and the merged summary.
pub fn survey(
    workers: &Workers,
    graphs: &[Graph],
    n: usize,
    caps: Caps,
) -> Result<(Vec<SurveyRow>, ModeSurvey), SurveyError> {
    let admitted: Vec<&Graph> = graphs.iter().filter(|g| survey_admits(g, n)).collect();
    let rows = workers.install(|| {
        admitted
            .par_iter()
            .with_min_len(GRAPH_CHUNK)
            .map(|g| {
                caps.check_fast(g.order())?;
                ModeSurvey::row(g)
            })
            .collect::<Result<Vec<_>, CountError>>()
    })?;
    let mut summary = ModeSurvey::default();
    for row in &rows {
        summary.offer(row);
    }
    Ok((rows, summary.finish(n)?))
}

/// avd ≤ 2n/3 and the equality classification over a stream of order-`n` graphs.
pub fn main_theorem(
    workers: &Workers,
    graphs: &[Graph],
    n: usize,
    caps: Caps,
) -> Result<TheoremReport, CountError> {
    let report = workers.install(|| {
        graphs
            .par_chunks(GRAPH_CHUNK)
            .map(|chunk| -> Result<TheoremReport, CountError> {
                let mut r = TheoremReport::new(n);
                for g in chunk {
                    caps.check_fast(g.order())?;
                    r.record(g)?;
                }
                Ok(r)
            })
            .try_reduce(|| TheoremReport::new(n), |a, b| Ok(a.merge(b)))
    })?;
    Ok(report.finish())
}
