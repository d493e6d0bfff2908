//! Exact arithmetic for hybrid numbers, hybrid Fibonacci/Lucas spinors, and a
//! harness that checks printed identities about them against exact ground
//! truth.

pub mod audit;
pub mod cli;
pub mod hybrid;
pub mod rings;
pub mod sequences;
pub mod spinor;
