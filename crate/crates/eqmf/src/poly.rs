//! Dense univariate polynomials and rational functions over `BigRational`.
//!
//! Used for indicial polynomials, the closed-form coefficient formulas in
//! the class parameter `k`, and the domination certificates behind the
//! integrality sweeps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// Ascending integer coefficients: `from_ints(&[1, 2]) = 1 + 2x`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `p(x + shift)` by Horner expansion.
    pub fn compose_shift(&self, shift: &BigInt) -> Self {
        let linear = Self::new(vec![
            BigRational::from_integer(shift.clone()),
            BigRational::one(),
        ]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// All coefficients nonnegative and the constant term strictly positive.
    /// Implies `p(x) > 0` for every `x >= 0`.
    pub fn is_positive_dominated(&self) -> bool {
        !self.coeffs.is_empty()
            && self.coeffs.iter().all(|c| !c.is_negative())
            && self.coeff(0).is_positive()
    }

    /// Euclidean division: `(quotient, remainder)` with `self = q * div + r`
    /// and `deg r < deg div`.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let exp = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lead;
            if !q.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let idx = exp + i;
                    let v = &rem[idx] - &q * c;
                    rem[idx] = v;
                }
            }
            quot[exp] = q;
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }
}

/// Quotient of two polynomials; the denominator is kept as constructed
/// (no polynomial gcd reduction, which nothing here needs).
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Self { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::new(p, Polynomial::from_ints(&[1]))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.num.neg(), self.den.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Exact value at an integer point; panics if the denominator vanishes
    /// there (the formula registry guarantees it never does for `k >= 1`).
    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        let d = self.den.eval_int(x);
        assert!(!d.is_zero(), "denominator vanishes at {x}");
        self.num.eval_int(x) / d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    #[test]
    fn eval_and_arith() {
        // (x+1)(x+2) = x^2 + 3x + 2
        let p = Polynomial::from_ints(&[1, 1]).mul(&Polynomial::from_ints(&[2, 1]));
        assert_eq!(p, Polynomial::from_ints(&[2, 3, 1]));
        assert_eq!(p.eval(&rat_int(3)), rat_int(20));
        assert_eq!(p.derivative(), Polynomial::from_ints(&[3, 2]));
    }

    #[test]
    fn shift_composition() {
        // p(x) = x^2 - 3x; p(x+2) = x^2 + x - 2
        let p = Polynomial::from_ints(&[0, -3, 1]);
        assert_eq!(
            p.compose_shift(&BigInt::from(2)),
            Polynomial::from_ints(&[-2, 1, 1])
        );
    }

    #[test]
    fn division_with_remainder() {
        // 48k^2 - 12k = (48k - 60)(k + 1) + 60
        let num = Polynomial::from_ints(&[0, -12, 48]);
        let den = Polynomial::from_ints(&[1, 1]);
        let (q, r) = num.div_rem(&den);
        assert_eq!(q, Polynomial::from_ints(&[-60, 48]));
        assert_eq!(r, Polynomial::from_ints(&[60]));
        assert_eq!(q.mul(&den).add(&r), num);
    }

    #[test]
    fn rational_function_eval() {
        // 48k - 60k/(k+1) at k = 1 is 18
        let f = RationalFunction::from_poly(Polynomial::from_ints(&[0, 48])).sub(
            &RationalFunction::new(
                Polynomial::from_ints(&[0, 60]),
                Polynomial::from_ints(&[1, 1]),
            ),
        );
        assert_eq!(f.eval_int(&BigInt::from(1)), rat_int(18));
        assert_eq!(f.eval_int(&BigInt::from(2)), rat_int(56));
        assert_eq!(f.eval_int(&BigInt::from(6)), rat(1656, 7));
    }
}
