//! Exact arithmetic for extremal quasimodular forms of depth at most 4.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point appears anywhere. The crate provides:
//!
//! - [`series`]: a truncated q-expansion ring over [`BigRational`], with
//!   Eisenstein series as constructors,
//! - [`mdo`]: Serre derivatives, modular differential operators, their
//!   lower-triangular matrix representations, indicial polynomials, and a
//!   Frobenius solver for normalized solutions at the cusp,
//! - [`extremal`]: the depth-specific operators, weight ladders,
//!   closed-form coefficient formulas, bounded integrality sweeps with
//!   mechanical domination certificates, and assembly of the candidate
//!   weight sets,
//! - [`identities`]: divisor-sum closed forms, Ramanujan identities, and
//!   positivity/divisibility certificates for the explicit examples.

pub mod divisor;
pub mod extremal;
pub mod identities;
pub mod mdo;
pub mod poly;
pub mod report;
pub mod series;
pub mod span;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational `num/den`; reduced, with positive denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
