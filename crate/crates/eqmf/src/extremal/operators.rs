//! The depth-specific operators and the weight ladders between residue
//! classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{DepthWeight, ExtremalError};
use crate::mdo::{serre_derivative, MdoTerm, ModularDifferentialOperator};
use crate::rat;
use crate::series::{eisenstein, PowerSeries};

/// Default relative truncation order for expansions and operators.
pub const DEFAULT_ORDER: usize = 64;

fn ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The normalized operator annihilating the extremal form of the base
/// residue class (weights 6k, 4k, 6k, 12k for depths 1, 2, 3, 4), with
/// coefficient series carrying [`DEFAULT_ORDER`] known coefficients.
pub fn extremal_mdo(depth: u32, weight: u64) -> Result<ModularDifferentialOperator, ExtremalError> {
    extremal_mdo_with_order(depth, weight, DEFAULT_ORDER)
}

/// Same as [`extremal_mdo`] with an explicit relative truncation order.
pub fn extremal_mdo_with_order(
    depth: u32,
    weight: u64,
    rel_order: usize,
) -> Result<ModularDifferentialOperator, ExtremalError> {
    let dw = DepthWeight::new(depth, weight)?;
    if !dw.is_base_class() {
        return Err(ExtremalError::NotBaseClass { depth, weight });
    }
    let w = weight as i128;
    let base = weight as i64 - i64::from(depth);
    let one = PowerSeries::one(rel_order);
    let e4 = eisenstein(4, rel_order);
    let e6 = eisenstein(6, rel_order);
    let term = |coefficient: PowerSeries, serre_order: u32| MdoTerm {
        coefficient,
        serre_order,
    };
    let op = match depth {
        1 => ModularDifferentialOperator::new(
            base,
            1,
            vec![term(one, 2), term(e4.scale(&ratio(-(w * w - 1), 144)), 0)],
        ),
        2 => ModularDifferentialOperator::new(
            base,
            2,
            vec![
                term(one, 3),
                term(e4.scale(&ratio(-(3 * w * w - 4), 144)), 1),
                term(e6.scale(&ratio(-((w + 1) * (w - 2) * (w - 2)), 864)), 0),
            ],
        ),
        3 => ModularDifferentialOperator::new(
            base,
            3,
            vec![
                term(one, 4),
                term(e4.scale(&ratio(-(3 * w * w - 5), 72)), 2),
                term(e6.scale(&ratio(-(w * w * w - 3 * w * w + 5), 216)), 1),
                term(
                    e4.mul(&e4).scale(&ratio(-((w + 1) * (w - 3).pow(3)), 6912)),
                    0,
                ),
            ],
        ),
        _ => ModularDifferentialOperator::new(
            base,
            4,
            vec![
                term(one, 5),
                term(e4.scale(&ratio(-5 * (w * w - 2), 72)), 3),
                term(e6.scale(&ratio(-5 * (w * w * w - 3 * w * w + 6), 432)), 2),
                term(
                    e4.mul(&e4).scale(&ratio(
                        -(15 * w.pow(4) - 120 * w.pow(3) + 280 * w * w - 496),
                        20736,
                    )),
                    1,
                ),
                term(
                    e4.mul(&e6)
                        .scale(&ratio(-((w - 4).pow(4) * (w + 1)), 62208)),
                    0,
                ),
            ],
        ),
    };
    Ok(op)
}

/// Normalized q-expansion of the extremal form, with `terms` coefficients
/// from the leading exponent on.
///
/// Base classes are solved by the Frobenius recurrence; the other residue
/// classes are reached by the ladders
/// `f_(6k+2) = (12/(6k+1)) serre_(6k-1) f_(6k)` and `f_(6k+4) = E4 f_(6k)`
/// in depth 1, `f_(4k+2) = (6/(4k+1)) serre_(4k-2) f_(4k)` in depth 2, and
/// `f_(6k+2) = (4/(6k+1)) serre_(6k-3) f_(6k)` together with the
/// `E4`/second-derivative combination for `f_(6k+4)` in depth 3. Weight 2
/// in depth 1 is `E2` itself. Depth-4 weights not divisible by 12 are
/// unsupported.
pub fn extremal_expansion(
    depth: u32,
    weight: u64,
    terms: usize,
) -> Result<PowerSeries, ExtremalError> {
    assert!(terms >= 1, "expansion needs at least one term");
    let dw = DepthWeight::new(depth, weight)?;
    let k = dw.k() as i64;
    if dw.is_base_class() {
        let op = extremal_mdo_with_order(depth, weight, terms)?;
        let sol = op
            .frobenius_solve(dw.vanishing_order(), terms)
            .expect("base-class operator has the expected characteristic exponent");
        return Ok(sol.series);
    }
    let series = match (depth, dw.residue()) {
        (1, 2) if dw.k() == 0 => eisenstein(2, terms),
        (1, 2) => {
            let base = extremal_expansion(1, weight - 2, terms)?;
            normalized_ladder(serre_derivative(&base, 6 * k - 1), rat(12, 6 * k + 1))
        }
        (1, 4) => {
            let base = extremal_expansion(1, weight - 4, terms)?;
            eisenstein(4, terms).mul(&base)
        }
        (2, 2) => {
            let base = extremal_expansion(2, weight - 2, terms)?;
            normalized_ladder(serre_derivative(&base, 4 * k - 2), rat(6, 4 * k + 1))
        }
        (3, 2) => {
            let base = extremal_expansion(3, weight - 2, terms)?;
            normalized_ladder(serre_derivative(&base, 6 * k - 3), rat(4, 6 * k + 1))
        }
        (3, 4) => {
            // the combination cancels the leading term, so expand one deeper
            let base = extremal_expansion(3, weight - 4, terms + 1)?;
            let e4_part = eisenstein(4, terms + 1)
                .mul(&base)
                .scale(&rat((6 * k + 1) * (18 * k + 1), 48));
            let second = serre_derivative(&serre_derivative(&base, 6 * k - 3), 6 * k - 1);
            let prefactor =
                rat(2 * (6 * k + 3) * (6 * k + 3), 27 * (6 * k + 1)) * rat(1, (6 * k + 2).pow(3));
            normalized_ladder(e4_part.sub(&second), prefactor)
        }
        (4, _) => return Err(ExtremalError::UnsupportedDepth4Class { weight }),
        _ => unreachable!("all residue classes of depths 1-3 are covered"),
    };
    Ok(series)
}

/// Apply the ladder prefactor and insist the result is normalized; the
/// prefactors are exactly the reciprocals of the leading coefficients the
/// ladders produce, so anything else is a transcription bug.
fn normalized_ladder(series: PowerSeries, prefactor: BigRational) -> PowerSeries {
    let out = series.scale(&prefactor);
    assert!(
        out.leading_coeff().is_some_and(BigRational::is_one),
        "ladder output is not normalized"
    );
    out
}
