//! Truncated q-expansions with exact rational coefficients.
//!
//! A [`PowerSeries`] stores a leading exponent `lead` and a coefficient
//! vector `c`, and stands for
//!
//! ```text
//! q^lead * (c[0] + c[1] q + ... + c[N-1] q^(N-1)) + O(q^(lead + N))
//! ```
//!
//! The absolute truncation order `lead + N` is tracked through every
//! operation; in particular multiplying by a series with positive leading
//! exponent *gains* absolute precision, which the weight ladders rely on.
//! Equality and all predicates compare coefficients up to the smaller of
//! the two truncation orders.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::divisor::sigma;

#[derive(Clone, Debug)]
pub struct PowerSeries {
    /// Every coefficient below this exponent is zero. After normalization
    /// the first stored coefficient is nonzero unless the series is zero
    /// to its truncation order (empty coefficient vector).
    lead: usize,
    /// Coefficient of `q^(lead + i)` at index `i`.
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// The zero series known modulo `q^order`.
    pub fn zero(order: usize) -> Self {
        Self {
            lead: order,
            coeffs: Vec::new(),
        }
    }

    /// The constant-one series with `rel_order` known coefficients.
    pub fn one(rel_order: usize) -> Self {
        Self::monomial(0, rel_order)
    }

    pub fn constant(c: BigRational, rel_order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); rel_order];
        if rel_order > 0 {
            coeffs[0] = c;
        }
        Self::from_coeffs(0, coeffs)
    }

    /// `q^exponent`, known through `q^(exponent + rel_order)` exclusive.
    pub fn monomial(exponent: usize, rel_order: usize) -> Self {
        assert!(
            rel_order >= 1,
            "monomial needs at least one known coefficient"
        );
        let mut coeffs = vec![BigRational::zero(); rel_order];
        coeffs[0] = BigRational::one();
        Self {
            lead: exponent,
            coeffs,
        }
    }

    /// Series `q^lead * sum coeffs[i] q^i`; leading zeros are folded into
    /// the exponent so that predicates see a canonical form.
    pub fn from_coeffs(lead: usize, coeffs: Vec<BigRational>) -> Self {
        let mut s = Self { lead, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            self.coeffs.drain(..zeros);
            self.lead += zeros;
        }
    }

    /// Absolute truncation order: coefficients of `q^m` are known exactly
    /// for all `m < order()`.
    pub fn order(&self) -> usize {
        self.lead + self.coeffs.len()
    }

    /// Number of known coefficients from the leading exponent on.
    pub fn rel_order(&self) -> usize {
        self.coeffs.len()
    }

    /// Exponent of the first nonzero coefficient; `None` if the series is
    /// zero to its truncation order.
    pub fn leading_exponent(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lead)
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Coefficient of `q^m`. Panics beyond the truncation order: reading
    /// unknown coefficients is always a precision bug.
    pub fn coeff(&self, m: usize) -> BigRational {
        assert!(
            m < self.order(),
            "coefficient of q^{m} requested but series is only known mod q^{}",
            self.order()
        );
        if m < self.lead {
            BigRational::zero()
        } else {
            self.coeffs[m - self.lead].clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// First exponent below the common truncation order where the two
    /// series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..order).find(|&m| self.coeff(m) != other.coeff(m))
    }

    /// First non-integral coefficient (exponent and value), if any.
    pub fn first_non_integral(&self) -> Option<(usize, BigRational)> {
        self.coeffs
            .iter()
            .position(|c| !c.is_integer())
            .map(|i| (self.lead + i, self.coeffs[i].clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.first_non_integral().is_none()
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let lead = self.lead.min(other.lead).min(order);
        let coeffs = (lead..order)
            .map(|m| self.coeff_or_zero(m) + other.coeff_or_zero(m))
            .collect();
        Self::from_coeffs(lead, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn coeff_or_zero(&self, m: usize) -> BigRational {
        if m < self.lead {
            BigRational::zero()
        } else {
            self.coeffs
                .get(m - self.lead)
                .cloned()
                .unwrap_or_else(BigRational::zero)
        }
    }

    /// Cauchy product. The result keeps `min` of the two relative orders,
    /// so leading exponents add to the absolute precision.
    pub fn mul(&self, other: &Self) -> Self {
        let rel = self.coeffs.len().min(other.coeffs.len());
        let lead = self.lead + other.lead;
        let mut out = vec![BigRational::zero(); rel];
        for (i, a) in self.coeffs.iter().take(rel).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(rel - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(lead, out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        Self {
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one(self.coeffs.len().max(1));
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse; the series must be a unit, i.e. have a
    /// nonzero constant term.
    pub fn invert(&self) -> Self {
        assert_eq!(
            self.leading_exponent(),
            Some(0),
            "cannot invert: series has no nonzero constant term"
        );
        let n = self.coeffs.len();
        let c0_inv = BigRational::one() / &self.coeffs[0];
        let mut out = vec![BigRational::zero(); n];
        out[0] = c0_inv.clone();
        for m in 1..n {
            let mut acc = BigRational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() && !out[m - i].is_zero() {
                    acc += &self.coeffs[i] * &out[m - i];
                }
            }
            out[m] = -acc * &c0_inv;
        }
        Self::from_coeffs(0, out)
    }

    /// Exact quotient `self / other` for a unit `other`.
    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.invert())
    }

    /// Euler derivative `q d/dq`: multiplies the coefficient of `q^m` by `m`.
    pub fn euler_derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(self.lead + i)))
            .collect();
        Self::from_coeffs(self.lead, coeffs)
    }
}

/// Two series are equal when they agree coefficient-by-coefficient up to
/// the smaller truncation order.
impl PartialEq for PowerSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.lead + i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || exp == 0;
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({})", mag)?;
                }
            }
            match exp {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{exp}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Eisenstein q-expansion with `rel_order` known coefficients.
///
/// Weights 2, 4, 6 use the classical expansions with prefactors -24, 240,
/// -504; weights 8 and 10 are produced as `E4^2` and `E4*E6`, which they
/// classically equal and which is all the operators here ever consume.
pub fn eisenstein(weight: u32, rel_order: usize) -> PowerSeries {
    assert!(rel_order >= 1, "eisenstein needs rel_order >= 1");
    let prefactor_power = match weight {
        2 => (-24i64, 1u32),
        4 => (240, 3),
        6 => (-504, 5),
        8 => {
            let e4 = eisenstein(4, rel_order);
            return e4.mul(&e4);
        }
        10 => return eisenstein(4, rel_order).mul(&eisenstein(6, rel_order)),
        w => panic!("Eisenstein weight {w} not supported (only 2, 4, 6, 8, 10)"),
    };
    let (prefactor, power) = prefactor_power;
    let mut coeffs = Vec::with_capacity(rel_order);
    coeffs.push(BigRational::one());
    for n in 1..rel_order {
        coeffs.push(BigRational::from_integer(
            BigInt::from(prefactor) * sigma(power, n as u64),
        ));
    }
    PowerSeries::from_coeffs(0, coeffs)
}
