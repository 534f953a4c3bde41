//! Command-line surface, wire formats and the verification harness for the
//! exact six-oscillator SU(3) construction in `schwinger-core`.

pub mod cli;
pub mod format;
pub mod json;
pub mod labels;
pub mod table;
pub mod verify;
