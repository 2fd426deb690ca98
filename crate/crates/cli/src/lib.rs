//! Support library for the `lrtree` binary: the exhaustive check suites
//! and the text formats shared between the CLI and its tests.

pub mod formats;
pub mod oracle;
