//! Verification front end: single computations, the table of published
//! values, and exhaustive property suites.

pub mod compute;
pub mod props;
pub mod report;
pub mod source;
pub mod table;
