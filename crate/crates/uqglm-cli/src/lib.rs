//! Library surface of the CLI: suite orchestration and report types,
//! shared between the binary and the acceptance test target.

pub mod report;
pub mod suites;
