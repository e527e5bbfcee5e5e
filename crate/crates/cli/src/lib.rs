//! Front end for the `nonassoc` library: expressions, tables, verification
//! suites and the command dispatcher behind the `nonassoc` binary.

pub mod app;
pub mod expr;
pub mod suites;
pub mod tables;
