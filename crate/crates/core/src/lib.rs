//! Exact six-oscillator (Schwinger) construction of SU(3) × Sp(2,R).
//!
//! Everything here is pure computation over exact rationals (extended by √3
//! where λ₈ requires it), plus a small floating-point layer for the finite
//! group action. No IO; the `schwinger` crate carries the CLI and file formats.
#![no_std]
extern crate alloc;

pub mod algebra;
pub mod basis;
pub mod catalog;
pub mod error;
pub mod factorial;
pub mod induced;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use poly::{ComplexPoly, Mode, Monomial, Polynomial};
pub use scalar::{ComplexScalar, Scalar};
