//! Fixture-backed identity checks.

pub mod checks;
pub mod exceptional;
pub mod fixture;
pub mod report;
pub mod suite;

pub use exceptional::{series_entry, ExceptionalSeriesEntry, EXCEPTIONAL_SERIES};
pub use fixture::{knot_dir, Fixture, FixtureColor, FixtureKind, FixtureSet, Integrity};
pub use report::{CheckReport, Status, SuiteReport};
pub use suite::{run_suite, Suite};

use crate::qexact::QExactError;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Parse { path: String, source: QExactError },
    #[error("{path}: {message}")]
    Header { path: String, message: String },
    #[error("missing fixtures: {}", .0.join(", "))]
    Missing(Vec<String>),
}
