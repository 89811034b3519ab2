//! Certificates, fixtures and the command-line front end for
//! `grouplabel-core`.

pub mod app;
pub mod cert;
pub mod error;
pub mod fixtures;
pub mod parallel;

pub use app::{run, Cli, Format, Report};
pub use cert::{Certificate, GraphDoc, Property, SequenceCertificate, VerdictDoc};
pub use error::{CliError, CliResult};
pub use parallel::run_parallel;
