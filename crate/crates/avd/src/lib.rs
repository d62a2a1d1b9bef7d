//! File formats, parallel drivers and the command-line front end for
//! `avd-core`.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
