//! Exact invariants of lens spaces: Heegaard Floer correction terms by
//! three independent algorithms, Dedekind and Dedekind-Rademacher sums,
//! the Casson-Walker invariant, divisibility obstructions on equal or
//! opposite correction terms, and knot-surgery extensions driven by
//! Alexander-polynomial torsion coefficients.
//!
//! Everything is computed over arbitrary-precision rationals; there is
//! no floating point anywhere, so every comparison in the verification
//! sweeps is bit-exact.
//!
//! ```
//! use lensd::{LensSpace, Rational};
//!
//! let lens = LensSpace::new(5, 2)?;
//! let table = lens.d_table();
//! assert_eq!(table.values()[0], Rational::new(2, 5));
//! assert_eq!(table.values()[3], Rational::zero());
//! assert_eq!(lensd::invariants::casson_walker(&lens), table.average());
//! # Ok::<(), lensd::Error>(())
//! ```

pub mod arith;
pub mod dedekind;
mod error;
pub mod invariants;
pub mod lens;
mod rational;
pub mod sweeps;

pub use error::{Error, Result};
pub use invariants::{AlexanderPolynomial, DivisibilityCheck, ObstructionReport};
pub use lens::{CorrectionTable, LensSpace, SpinC, reciprocity_rhs};
pub use rational::{ParseRationalError, Rational};
pub use sweeps::SweepReport;
