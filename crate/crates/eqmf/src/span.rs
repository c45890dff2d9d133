//! Monomial bases of quasimodular-form spaces and exact linear solves.
//!
//! `QMF^r_w = sum of E2^j M_(w-2j)` for `j <= r`, and the monomials
//! `E4^a E6^b` of weight `w - 2j` give a basis of each modular summand, so
//! the whole space has the monomial basis enumerated here. Solving the
//! vanishing conditions of maximal order against that basis is a second,
//! Frobenius-independent route to an extremal expansion.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::{eisenstein, PowerSeries};

/// A basis monomial `E2^e2 E4^e4 E6^e6` with its expansion.
#[derive(Clone, Debug)]
pub struct QmfMonomial {
    pub e2: u32,
    pub e4: u32,
    pub e6: u32,
    pub series: PowerSeries,
}

impl QmfMonomial {
    pub fn label(&self) -> String {
        let mut label = String::new();
        for (name, exp) in [("E2", self.e2), ("E4", self.e4), ("E6", self.e6)] {
            if exp > 0 {
                if !label.is_empty() {
                    label.push('*');
                }
                label.push_str(name);
                if exp > 1 {
                    label.push_str(&format!("^{exp}"));
                }
            }
        }
        if label.is_empty() {
            label.push('1');
        }
        label
    }
}

/// Monomial basis of `QMF^depth_weight`, each member expanded to relative
/// order `rel_order`.
pub fn qmf_basis(depth: u32, weight: u64, rel_order: usize) -> Vec<QmfMonomial> {
    let e2 = eisenstein(2, rel_order);
    let e4 = eisenstein(4, rel_order);
    let e6 = eisenstein(6, rel_order);
    let mut basis = Vec::new();
    for j in 0..=u64::from(depth) {
        if 2 * j > weight {
            break;
        }
        let u = weight - 2 * j;
        for b in 0..=(u / 6) {
            let rest = u - 6 * b;
            if !rest.is_multiple_of(4) {
                continue;
            }
            let a = rest / 4;
            let series = e2
                .pow(j as u32)
                .mul(&e4.pow(a as u32))
                .mul(&e6.pow(b as u32));
            basis.push(QmfMonomial {
                e2: j as u32,
                e4: a as u32,
                e6: b as u32,
                series,
            });
        }
    }
    basis
}

/// Solve the square system `A x = rhs` by exact Gaussian elimination.
/// Returns `None` if the matrix is singular.
#[allow(clippy::needless_range_loop)] // elimination reads row `col` while writing row `r`
pub fn solve_square(matrix: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    assert!(matrix.len() == n && matrix.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = BigRational::one() / &m[col][col];
        for cell in &mut m[col][col..=n] {
            *cell = &*cell * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n {
                    let v = &m[r][c] - &factor * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    Some(
        m.into_iter()
            .map(|row| row[row.len() - 1].clone())
            .collect(),
    )
}

/// Extremal expansion through the monomial basis: impose vanishing of the
/// first `dim - 1` coefficients and leading coefficient 1, then assemble.
/// Independent of the differential-operator machinery. Returns the series
/// and the solved combination.
pub fn extremal_from_basis(
    depth: u32,
    weight: u64,
    rel_order: usize,
) -> Option<(PowerSeries, Vec<(String, BigRational)>)> {
    let dim = qmf_basis(depth, weight, 1).len();
    if dim == 0 {
        return None;
    }
    let vanishing = dim - 1;
    let basis = qmf_basis(depth, weight, vanishing + rel_order);
    let matrix: Vec<Vec<BigRational>> = (0..dim)
        .map(|m| basis.iter().map(|mono| mono.series.coeff(m)).collect())
        .collect();
    let mut rhs = vec![BigRational::zero(); dim];
    rhs[dim - 1] = BigRational::one();
    let x = solve_square(&matrix, &rhs)?;
    let mut series = PowerSeries::zero(vanishing + rel_order);
    for (mono, c) in basis.iter().zip(&x) {
        series = series.add(&mono.series.scale(c));
    }
    let combination = basis.iter().map(QmfMonomial::label).zip(x).collect();
    Some((series, combination))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    #[test]
    fn basis_dimensions() {
        // dim QMF^r_w = floor(w(r+1)/12) + 1, except r = 4, w = 10 mod 12
        for (r, w, dim) in [
            (1u32, 6u64, 2usize),
            (1, 8, 2),
            (1, 12, 3),
            (2, 4, 2),
            (2, 8, 3),
            (3, 6, 3),
            (4, 8, 4),
            (4, 12, 6),
            (4, 10, 4),
        ] {
            assert_eq!(qmf_basis(r, w, 1).len(), dim, "dim QMF^{r}_{w}");
        }
    }

    #[test]
    fn solves_known_combination() {
        // f_4^(2) = (E4 - E2^2)/288
        let (series, combo) = extremal_from_basis(2, 4, 6).unwrap();
        assert_eq!(series.coeff(1), rat_int(1));
        assert_eq!(series.coeff(2), rat_int(6));
        assert_eq!(series.coeff(3), rat_int(12));
        let coeff_of = |label: &str| {
            combo
                .iter()
                .find(|(l, _)| l == label)
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(coeff_of("E4"), crate::rat(1, 288));
        assert_eq!(coeff_of("E2^2"), crate::rat(-1, 288));
    }
}
