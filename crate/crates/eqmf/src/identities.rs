//! Divisor-sum closed forms, Ramanujan identities, and the positivity and
//! divisibility certificates behind the explicit examples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::divisor::sigma;
use crate::extremal::extremal_expansion;
use crate::rat;
use crate::report::Check;
use crate::series::{eisenstein, PowerSeries};

/// `Delta = (E4^3 - E6^2)/1728` with `rel_order` known coefficients.
pub fn delta_series(rel_order: usize) -> PowerSeries {
    let e4 = eisenstein(4, rel_order);
    let e6 = eisenstein(6, rel_order);
    e4.pow(3).sub(&e6.pow(2)).scale(&rat(1, 1728))
}

/// Ramanujan tau, read off the discriminant expansion.
pub fn tau(n: u64) -> BigInt {
    assert!(n >= 1, "tau(n) requires n >= 1");
    let series = delta_series(n as usize + 1);
    let c = series.coeff(n as usize);
    assert!(c.is_integer());
    c.to_integer()
}

/// The divisor-sum q-expansions verified here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorFormId {
    /// `f_4^(2) = sum n sigma_1(n) q^n`
    F4D2,
    /// `f_6^(3) = (1/6) sum (n sigma_3(n) - n^2 sigma_1(n)) q^n`
    F6D3,
    /// `f_8^(2) = (1/30) sum (n sigma_5(n) - n^2 sigma_3(n)) q^n`
    F8D2,
    /// `f_12^(1) = (1/1050) sum (n sigma_9(n) - tau(n)) q^n`
    F12D1,
    /// `f_14^(1) = (1/4146) sum (n sigma_11(n) - n tau(n)) q^n`
    F14D1,
}

impl DivisorFormId {
    pub fn as_str(&self) -> &'static str {
        match self {
            DivisorFormId::F4D2 => "f4d2",
            DivisorFormId::F6D3 => "f6d3",
            DivisorFormId::F8D2 => "f8d2",
            DivisorFormId::F12D1 => "f12d1",
            DivisorFormId::F14D1 => "f14d1",
        }
    }

    pub fn all() -> &'static [DivisorFormId] {
        &[
            DivisorFormId::F4D2,
            DivisorFormId::F6D3,
            DivisorFormId::F8D2,
            DivisorFormId::F12D1,
            DivisorFormId::F14D1,
        ]
    }
}

impl fmt::Display for DivisorFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DivisorFormId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DivisorFormId::all()
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown divisor form: {s}"))
    }
}

/// The divisor-sum expansion, exact to absolute order `order`.
///
/// The two divisor/tau displays are taken literally: `f12d1` subtracts
/// a bare `tau(n)`, `f14d1` subtracts `n tau(n)`.
pub fn divisor_form(id: DivisorFormId, order: usize) -> PowerSeries {
    assert!(order >= 1);
    let tau_table: Option<PowerSeries> = match id {
        DivisorFormId::F12D1 | DivisorFormId::F14D1 => Some(delta_series(order)),
        _ => None,
    };
    let coeff = |n: u64| -> BigRational {
        let n_int = BigInt::from(n);
        let (num, prefactor) = match id {
            DivisorFormId::F4D2 => (&n_int * sigma(1, n), 1),
            DivisorFormId::F6D3 => (&n_int * sigma(3, n) - &n_int * &n_int * sigma(1, n), 6),
            DivisorFormId::F8D2 => (&n_int * sigma(5, n) - &n_int * &n_int * sigma(3, n), 30),
            DivisorFormId::F12D1 => {
                let t = tau_table.as_ref().unwrap().coeff(n as usize).to_integer();
                (&n_int * sigma(9, n) - t, 1050)
            }
            DivisorFormId::F14D1 => {
                let t = tau_table.as_ref().unwrap().coeff(n as usize).to_integer();
                (&n_int * sigma(11, n) - &n_int * t, 4146)
            }
        };
        BigRational::new(num, BigInt::from(prefactor))
    };
    let mut coeffs = vec![BigRational::zero()];
    for n in 1..order as u64 {
        coeffs.push(coeff(n));
    }
    PowerSeries::from_coeffs(0, coeffs)
}

/// All representations of a divisor form compared to a common order.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: DivisorFormId,
    pub order: usize,
    pub representations: Vec<&'static str>,
    /// First mismatching exponent between representation 0 and a later
    /// one, if any.
    pub first_mismatch: Option<(&'static str, usize)>,
}

impl IdentityReport {
    pub fn agree(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Check, to absolute order `order`, that every known representation of
/// the form agrees: the Eisenstein polynomial, the Euler-derivative
/// decomposition, the divisor sum, and the extremal expansion.
pub fn verify_divisor_identity(id: DivisorFormId, order: usize) -> IdentityReport {
    let rel = order; // all these forms have small leading exponents
    let e2 = eisenstein(2, rel);
    let e4 = eisenstein(4, rel);
    let e6 = eisenstein(6, rel);
    let d = |f: &PowerSeries| f.euler_derivative();
    let mut reps: Vec<(&'static str, PowerSeries)> = Vec::new();
    match id {
        DivisorFormId::F4D2 => {
            reps.push(("(E4 - E2^2)/288", e4.sub(&e2.pow(2)).scale(&rat(1, 288))));
            reps.push(("-delta(E2)/24", d(&e2).scale(&rat(-1, 24))));
            reps.push(("divisor sum", divisor_form(id, order)));
            reps.push(("extremal expansion", extremal_expansion(2, 4, rel).unwrap()));
        }
        DivisorFormId::F6D3 => {
            reps.push((
                "(5E2^3 - 3E4E2 - 2E6)/51840",
                e2.pow(3)
                    .scale(&rat(5, 1))
                    .sub(&e4.mul(&e2).scale(&rat(3, 1)))
                    .sub(&e6.scale(&rat(2, 1)))
                    .scale(&rat(1, 51840)),
            ));
            reps.push((
                "delta(E4)/1440 + delta^2(E2)/144",
                d(&e4)
                    .scale(&rat(1, 1440))
                    .add(&d(&d(&e2)).scale(&rat(1, 144))),
            ));
            reps.push(("divisor sum", divisor_form(id, order)));
            reps.push(("extremal expansion", extremal_expansion(3, 6, rel).unwrap()));
        }
        DivisorFormId::F8D2 => {
            reps.push((
                "(5E4^2 + 2E6E2 - 7E4E2^2)/362880",
                e4.pow(2)
                    .scale(&rat(5, 1))
                    .add(&e6.mul(&e2).scale(&rat(2, 1)))
                    .sub(&e4.mul(&e2.pow(2)).scale(&rat(7, 1)))
                    .scale(&rat(1, 362880)),
            ));
            reps.push((
                "-delta(E6)/15120 - delta^2(E4)/7200",
                d(&e6)
                    .scale(&rat(-1, 15120))
                    .sub(&d(&d(&e4)).scale(&rat(1, 7200))),
            ));
            reps.push(("divisor sum", divisor_form(id, order)));
            reps.push(("extremal expansion", extremal_expansion(2, 8, rel).unwrap()));
        }
        DivisorFormId::F12D1 => {
            reps.push(("divisor/tau sum", divisor_form(id, order)));
            reps.push((
                "extremal expansion",
                extremal_expansion(1, 12, rel).unwrap(),
            ));
        }
        DivisorFormId::F14D1 => {
            reps.push(("divisor/tau sum", divisor_form(id, order)));
            reps.push((
                "extremal expansion",
                extremal_expansion(1, 14, rel).unwrap(),
            ));
        }
    }
    let (_, reference) = &reps[0];
    let mut first_mismatch = None;
    for (name, series) in &reps[1..] {
        if let Some(m) = reference.first_mismatch(series) {
            first_mismatch = Some((*name, m));
            break;
        }
    }
    IdentityReport {
        id,
        order,
        representations: reps.iter().map(|(n, _)| *n).collect(),
        first_mismatch,
    }
}

/// Positivity and divisibility certificate for one coefficient: the
/// factorizations `n = d1 d2` with `d1^2 <= n` and the nonnegative
/// summands `d1 d2 (d1-d2)^2 (d1+d2)`, times `(d1^2+d2^2)` in the
/// weight-8 case, which add up to the divisor-sum coefficient.
#[derive(Clone, Debug)]
pub struct FactorizationCertificate {
    pub n: u64,
    /// `(d1, d2, summand)` with `d1 <= d2`, `d1` ascending.
    pub pairs: Vec<(u64, u64, BigInt)>,
    pub total: BigInt,
    /// The certified divisor of every summand: 6 or 30.
    pub divisor: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificates exist only for f6d3 and f8d2, not {0}")]
    UnsupportedForm(DivisorFormId),
    #[error("certificate range starts at n = 2, got {0}")]
    RangeTooSmall(u64),
    #[error("summand ({d1}, {d2}) of n = {n} is not divisible by {divisor}")]
    IndivisibleSummand {
        n: u64,
        d1: u64,
        d2: u64,
        divisor: u64,
    },
    #[error("certificate total for n = {n} misses the divisor-sum coefficient")]
    TotalMismatch { n: u64 },
    #[error("certificate total for n = {n} is not positive")]
    NotPositive { n: u64 },
}

/// Certificates for `2 <= n <= max_n`, each checked against the
/// divisor-sum coefficient, for strict positivity, and for summand-wise
/// divisibility by 6 (`f6d3`) or 30 (`f8d2`).
pub fn positivity_divisibility(
    id: DivisorFormId,
    max_n: u64,
) -> Result<Vec<FactorizationCertificate>, CertificateError> {
    let (weight8, divisor) = match id {
        DivisorFormId::F6D3 => (false, 6u64),
        DivisorFormId::F8D2 => (true, 30u64),
        other => return Err(CertificateError::UnsupportedForm(other)),
    };
    if max_n < 2 {
        return Err(CertificateError::RangeTooSmall(max_n));
    }
    let mut out = Vec::with_capacity(max_n as usize - 1);
    for n in 2..=max_n {
        let mut pairs = Vec::new();
        let mut total = BigInt::zero();
        let mut d1 = 1u64;
        while d1 * d1 <= n {
            if n % d1 == 0 {
                let d2 = n / d1;
                let (b1, b2) = (BigInt::from(d1), BigInt::from(d2));
                let diff = &b2 - &b1;
                let mut summand = &b1 * &b2 * (&diff * &diff) * (&b1 + &b2);
                if weight8 {
                    summand *= &b1 * &b1 + &b2 * &b2;
                }
                if summand.is_negative() {
                    return Err(CertificateError::NotPositive { n });
                }
                if (&summand % BigInt::from(divisor)) != BigInt::zero() {
                    return Err(CertificateError::IndivisibleSummand { n, d1, d2, divisor });
                }
                total += &summand;
                pairs.push((d1, d2, summand));
            }
            d1 += 1;
        }
        let n_int = BigInt::from(n);
        let expect = if weight8 {
            &n_int * sigma(5, n) - &n_int * &n_int * sigma(3, n)
        } else {
            &n_int * sigma(3, n) - &n_int * &n_int * sigma(1, n)
        };
        if total != expect {
            return Err(CertificateError::TotalMismatch { n });
        }
        if !total.is_positive() {
            return Err(CertificateError::NotPositive { n });
        }
        out.push(FactorizationCertificate {
            n,
            pairs,
            total,
            divisor,
        });
    }
    Ok(out)
}

/// The five Ramanujan identities between `E2`, `E4`, `E6` and their Euler
/// derivatives, each checked to absolute order `order`.
pub fn ramanujan_checks(order: usize) -> Vec<Check> {
    let e2 = eisenstein(2, order);
    let e4 = eisenstein(4, order);
    let e6 = eisenstein(6, order);
    let d = |f: &PowerSeries| f.euler_derivative();
    let cases: Vec<(&str, PowerSeries, PowerSeries)> = vec![
        (
            "12 delta(E2) = E2^2 - E4",
            d(&e2).scale(&rat(12, 1)),
            e2.pow(2).sub(&e4),
        ),
        (
            "3 delta(E4) = E2 E4 - E6",
            d(&e4).scale(&rat(3, 1)),
            e2.mul(&e4).sub(&e6),
        ),
        (
            "2 delta(E6) = E2 E6 - E4^2",
            d(&e6).scale(&rat(2, 1)),
            e2.mul(&e6).sub(&e4.pow(2)),
        ),
        (
            "72 delta^2(E2) = E2^3 - 3 E2 E4 + 2 E6",
            d(&d(&e2)).scale(&rat(72, 1)),
            e2.pow(3)
                .sub(&e2.mul(&e4).scale(&rat(3, 1)))
                .add(&e6.scale(&rat(2, 1))),
        ),
        (
            "36 delta^2(E4) = 5(E2^2 E4 - 2 E2 E6 + E4^2)",
            d(&d(&e4)).scale(&rat(36, 1)),
            e2.pow(2)
                .mul(&e4)
                .sub(&e2.mul(&e6).scale(&rat(2, 1)))
                .add(&e4.pow(2))
                .scale(&rat(5, 1)),
        ),
    ];
    cases
        .into_iter()
        .map(|(name, lhs, rhs)| Check::from_bool(name, lhs == rhs, format!("to order {order}")))
        .collect()
}
