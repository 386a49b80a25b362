//! Exact and Monte Carlo machinery for random integer partitions and
//! standard Young tableaux.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! partitions ─ measures ─┐
//!      │                 ├─ series ─ harness ─ cli
//! group_algebra          │
//!      │                 │
//! cumulants ─ characters ┘            samplers
//! ```
//!
//! * [`partitions`] — integer partitions, hook lengths, corner data and
//!   Russian-notation profiles, all over exact integers.
//! * [`measures`] — transition / co-transition / diagram measures of a
//!   partition and the formal-series bridges between their moments.
//! * [`cumulants`] — the set-partition lattice, classical and permutation
//!   cumulants, non-crossing partitions and the Kreweras complement.
//! * [`group_algebra`] — sparse exact arithmetic in the rational group
//!   algebra of the symmetric group; conjugacy-class sums and the trace
//!   operators used to extract moments of transition measures.
//! * [`characters`] — irreducible characters, induced distributions
//!   (Plancherel, Gelfand, Schur–Weyl, Thoma) and their central functionals.
//! * [`series`] — truncated Laurent series over exact rationals and the
//!   coefficient-extraction formulas for limiting moments and covariances.
//! * [`samplers`] — seeded growth-process samplers (corner growth, RSK,
//!   mixed-alphabet RSK, hook walk, downward chains).
//! * [`harness`] — Monte Carlo estimation of height-function fluctuation
//!   moments and comparison against conditioned-Gaussian-field predictions.
//! * [`cli`] — the command-line front end (`sample`, `predict`, `verify`).
//!
//! Everything upstream of the samplers is exact: rationals are
//! arbitrary-precision, and floating point appears only in Monte Carlo
//! estimation, quadrature and the numeric Stieltjes inversion.

pub mod characters;
pub mod cli;
pub mod cumulants;
pub mod group_algebra;
pub mod harness;
pub mod measures;
pub mod partitions;
pub mod samplers;
pub mod series;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// `n` as an exact rational.
pub fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// `n/d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}
