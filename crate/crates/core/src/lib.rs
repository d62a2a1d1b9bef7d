//! Exact dominating-set counting, average domination order (avd), critical
//! vertex statistics and domination polynomial analysis for graphs of up to
//! 64 vertices.
//!
//! Every count is an arbitrary-precision integer and every average is a
//! reduced rational; nothing on the computation path uses floating point.
//!
//! ```
//! use avd_core::{avd, Graph};
//! use num_rational::BigRational;
//!
//! let p3 = Graph::path(3).unwrap();
//! assert_eq!(avd(&p3).unwrap().avd, BigRational::from_integer(2.into()));
//! ```

#![no_std]

extern crate alloc;

pub mod canon;
pub mod critical;
pub mod domination;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod vertex_set;

pub use critical::{
    profile, verify_all, CheckReport, CriticalAggregates, CriticalError, Family, Lemma, SetProfile,
    StemIndex,
};
pub use domination::{
    avd, avd_upper_bound, check_bound, complete_graph_avd, is_dominating, tally_bruteforce,
    tally_fast, AvdSummary, BoundCheck, BoundVerdict, CountError, DominationTally,
};
pub use extremal::{
    generate_all_nonisomorphic, search, verify_main_theorem, ExtremalResult, SearchConstraint,
    SearchError,
};
pub use graph::{Graph, GraphError, GraphKind, StemStructure};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
pub use poly::{analyze, max_mode_survey, PolyReport};
pub use vertex_set::VertexSet;
