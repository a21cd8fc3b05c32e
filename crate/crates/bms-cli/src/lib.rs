//! IO, sampling and verification machinery behind the `bms` binary,
//! exposed as a library so integration tests can drive the same suites.

pub mod io;
pub mod sampling;
pub mod verify;
