//! Command-line driver, JSON formats and seeded verification suites on top of
//! [`verlinde_core`].

pub mod cli;
pub mod error;
pub mod format;
pub mod inline;
pub mod suites;

pub use error::InputError;
pub use suites::{run_suite, Suite, SuiteResult};
