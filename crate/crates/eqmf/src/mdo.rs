//! Modular differential operators, their matrix representations, indicial
//! polynomials, and the Frobenius solver.
//!
//! An operator is a sum of terms `B * serre^m` with modular-form
//! coefficients `B` and iterated Serre derivatives based at a common
//! weight. For computation every operator is rewritten once into the
//! canonical form `sum_i A_i * delta^i` with fixed coefficient series
//! `A_i` and `delta = q d/dq`; matrix entries, the indicial polynomial,
//! and the forward recurrence all read off that form directly, which keeps
//! solving to relative order `N` at `O(N^2)` coefficient operations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::Polynomial;
use crate::rat;
use crate::series::{eisenstein, PowerSeries};

/// Serre derivative of a weight-`w` form: `q d/dq - (w/12) E2`.
pub fn serre_derivative(f: &PowerSeries, w: i64) -> PowerSeries {
    let e2 = eisenstein(2, f.rel_order().max(1));
    f.euler_derivative().sub(&e2.mul(f).scale(&rat(w, 12)))
}

/// `r`-fold iterated Serre derivative, raising the weight by 2 per step;
/// `r = 0` is the identity.
pub fn iterated_serre(f: &PowerSeries, w: i64, r: u32) -> PowerSeries {
    let mut out = f.clone();
    for step in 0..r {
        out = serre_derivative(&out, w + 2 * i64::from(step));
    }
    out
}

/// One term `coefficient * serre^serre_order` of an operator.
#[derive(Clone, Debug)]
pub struct MdoTerm {
    pub coefficient: PowerSeries,
    pub serre_order: u32,
}

/// A normalized modular differential operator
/// `serre^(r+1) + B_4 serre^(r-1) + ... + B_(2r+2)`,
/// all Serre derivatives based at `base_weight = w - r`.
///
/// The weights of the coefficient series are bookkeeping only; the
/// constructor does not check that they are genuinely modular.
#[derive(Clone, Debug)]
pub struct ModularDifferentialOperator {
    base_weight: i64,
    depth: u32,
    terms: Vec<MdoTerm>,
}

pub type Mdo = ModularDifferentialOperator;

impl ModularDifferentialOperator {
    /// Build from terms with strictly decreasing Serre orders starting at
    /// `depth + 1`; the leading coefficient must have constant term 1.
    pub fn new(base_weight: i64, depth: u32, terms: Vec<MdoTerm>) -> Self {
        assert!(!terms.is_empty(), "operator needs at least one term");
        assert_eq!(
            terms[0].serre_order,
            depth + 1,
            "leading term must be the (depth+1)-fold Serre derivative"
        );
        assert_eq!(
            terms[0].coefficient.coeff(0),
            BigRational::one(),
            "leading coefficient series must have constant term 1"
        );
        for pair in terms.windows(2) {
            assert!(
                pair[0].serre_order > pair[1].serre_order,
                "Serre orders must strictly decrease"
            );
        }
        Self {
            base_weight,
            depth,
            terms,
        }
    }

    pub fn base_weight(&self) -> i64 {
        self.base_weight
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Total weight `w` of the forms the operator acts on.
    pub fn weight(&self) -> i64 {
        self.base_weight + i64::from(self.depth)
    }

    pub fn terms(&self) -> &[MdoTerm] {
        &self.terms
    }

    /// Smallest relative order among the coefficient series; everything
    /// derived from the operator is limited to it.
    pub fn coefficient_order(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.coefficient.rel_order())
            .min()
            .unwrap()
    }

    /// Apply the operator literally, term by term.
    pub fn apply(&self, f: &PowerSeries) -> PowerSeries {
        let mut acc = PowerSeries::zero(f.order());
        for term in &self.terms {
            let derived = iterated_serre(f, self.base_weight, term.serre_order);
            acc = acc.add(&term.coefficient.mul(&derived));
        }
        acc
    }

    /// Canonical coefficients `A_0, ..., A_(depth+1)` with
    /// `D = sum_i A_i delta^i`, each to relative order `rel_order`.
    ///
    /// Built from the recursion `serre^(m+1) = (delta - ((v+2m)/12) E2) serre^m`,
    /// expanding each `serre^m` over powers of `delta`.
    pub fn delta_form(&self, rel_order: usize) -> Vec<PowerSeries> {
        assert!(
            rel_order <= self.coefficient_order(),
            "operator coefficients only known to relative order {}",
            self.coefficient_order()
        );
        let e2 = eisenstein(2, rel_order);
        let top = (self.depth + 1) as usize;
        // expansions[m][i] is the delta^i coefficient of serre^m
        let mut expansions: Vec<Vec<PowerSeries>> = vec![vec![PowerSeries::one(rel_order)]];
        for m in 0..top {
            let weight_factor = rat(self.base_weight + 2 * m as i64, 12);
            let prev = &expansions[m];
            let mut next = Vec::with_capacity(m + 2);
            for i in 0..=m + 1 {
                let mut s = PowerSeries::zero(rel_order);
                if i >= 1 {
                    s = s.add(&prev[i - 1]);
                }
                if i <= m {
                    s = s
                        .add(&prev[i].euler_derivative())
                        .sub(&e2.mul(&prev[i]).scale(&weight_factor));
                }
                next.push(s);
            }
            expansions.push(next);
        }
        let mut out = vec![PowerSeries::zero(rel_order); top + 1];
        for term in &self.terms {
            let m = term.serre_order as usize;
            for i in 0..=m {
                out[i] = out[i].add(&term.coefficient.mul(&expansions[m][i]));
            }
        }
        out
    }

    /// The indicial polynomial from the constant terms of the coefficient
    /// series and the falling products
    /// `q_l(x) = prod_(j<l) (x - (base_weight + 2j)/12)`.
    pub fn indicial_polynomial(&self) -> IndicialPolynomial {
        let mut p = Polynomial::zero();
        for term in &self.terms {
            let l = term.serre_order as usize;
            let mut q = Polynomial::constant(BigRational::one());
            for j in 0..l {
                let root = rat(self.base_weight + 2 * j as i64, 12);
                q = q.mul(&Polynomial::new(vec![-root, BigRational::one()]));
            }
            p = p.add(&q.scale(&term.coefficient.coeff(0)));
        }
        IndicialPolynomial(p)
    }

    /// Dense `n x n` lower-triangular matrix of the operator on the basis
    /// `q^lambda, ..., q^(lambda+n-1)`.
    pub fn matrix(&self, lambda: usize, n: usize) -> OperatorMatrix {
        assert!(n >= 1);
        let a = self.delta_form(n);
        let mut entries = vec![BigRational::zero(); n * n];
        for j in 0..n {
            let powers = integer_powers(lambda + j, a.len());
            for i in j..n {
                let mut v = BigRational::zero();
                for (s, pw) in a.iter().zip(&powers) {
                    let c = s.coeff(i - j);
                    if !c.is_zero() {
                        v += c * pw;
                    }
                }
                entries[i * n + j] = v;
            }
        }
        OperatorMatrix {
            origin: lambda,
            n,
            entries,
        }
    }

    /// Unique normalized solution `q^lambda0 (1 + a(1) q + ...)` by the
    /// forward recurrence against the lower-triangular matrix.
    pub fn frobenius_solve(
        &self,
        lambda0: usize,
        rel_order: usize,
    ) -> Result<FrobeniusSolution, FrobeniusError> {
        self.check_exponent(lambda0, rel_order)?;
        let a = self.delta_form(rel_order);
        let mut coeffs = vec![BigRational::one()];
        // diagonal at row n equals the indicial polynomial at lambda0 + n
        let diag = |powers: &[BigRational]| -> BigRational {
            a.iter().zip(powers).map(|(s, pw)| s.coeff(0) * pw).sum()
        };
        let powers: Vec<Vec<BigRational>> = (0..rel_order)
            .map(|j| integer_powers(lambda0 + j, a.len()))
            .collect();
        for n in 1..rel_order {
            let mut acc = BigRational::zero();
            for (j, cj) in coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let mut entry = BigRational::zero();
                for (s, pw) in a.iter().zip(&powers[j]) {
                    let c = s.coeff(n - j);
                    if !c.is_zero() {
                        entry += c * pw;
                    }
                }
                acc += entry * cj;
            }
            coeffs.push(-acc / diag(&powers[n]));
        }
        Ok(FrobeniusSolution {
            exponent: lambda0,
            series: PowerSeries::from_coeffs(lambda0, coeffs),
        })
    }

    /// Literal path-sum for `a(n)`: the alternating sum over all increasing
    /// integer chains `0 = i_0 < ... < i_(s+1) = n` of products of matrix
    /// entries over diagonal entries. Exponentially many terms, so this is
    /// capped at `n <= 12` and kept purely as a cross-check oracle for the
    /// forward recurrence.
    pub fn frobenius_path_sum(
        &self,
        lambda0: usize,
        n: usize,
    ) -> Result<BigRational, FrobeniusError> {
        const MAX_PATH_INDEX: usize = 12;
        if n > MAX_PATH_INDEX {
            return Err(FrobeniusError::PathSumTooLarge {
                requested: n,
                max: MAX_PATH_INDEX,
            });
        }
        if n == 0 {
            return Ok(BigRational::one());
        }
        self.check_exponent(lambda0, n + 1)?;
        let m = self.matrix(lambda0, n + 1);
        let interior = n - 1;
        let mut total = BigRational::zero();
        for mask in 0u32..(1 << interior) {
            let mut chain = Vec::with_capacity(n + 1);
            chain.push(0);
            for b in 0..interior {
                if mask & (1 << b) != 0 {
                    chain.push(b + 1);
                }
            }
            chain.push(n);
            let mut product = BigRational::one();
            for pair in chain.windows(2) {
                let (lo, hi) = (pair[0], pair[1]);
                product *= m.entry(hi, lo) / m.entry(hi, hi);
            }
            // s + 1 edges in the chain; sign is (-1)^(s+1)
            if chain.len() % 2 == 0 {
                total -= product;
            } else {
                total += product;
            }
        }
        Ok(total)
    }

    fn check_exponent(&self, lambda0: usize, rel_order: usize) -> Result<(), FrobeniusError> {
        let p = self.indicial_polynomial();
        let at = |m: usize| p.eval_int(&BigInt::from(m));
        if !at(lambda0).is_zero() {
            return Err(FrobeniusError::NotACharacteristicExponent(lambda0));
        }
        if p.0.derivative().eval_int(&BigInt::from(lambda0)).is_zero() {
            return Err(FrobeniusError::NotSimpleRoot(lambda0));
        }
        if let Some(n) = (1..rel_order).find(|&n| at(lambda0 + n).is_zero()) {
            return Err(FrobeniusError::ResonantExponent(n));
        }
        Ok(())
    }
}

fn integer_powers(base: usize, count: usize) -> Vec<BigRational> {
    let b = BigRational::from_integer(BigInt::from(base));
    let mut out = Vec::with_capacity(count);
    let mut acc = BigRational::one();
    for _ in 0..count {
        out.push(acc.clone());
        acc *= &b;
    }
    out
}

/// Degree-(depth+1) polynomial whose value at `lambda + n` is the `(n, n)`
/// matrix entry; its roots are the characteristic exponents at the cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicialPolynomial(Polynomial);

impl IndicialPolynomial {
    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.eval(x)
    }

    pub fn eval_int(&self, n: &BigInt) -> BigRational {
        self.0.eval_int(n)
    }
}

/// Lower-triangular matrix block of an operator at origin exponent `lambda`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    origin: usize,
    n: usize,
    entries: Vec<BigRational>,
}

impl OperatorMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    /// Upper-left `m x m` block.
    pub fn top_left(&self, m: usize) -> OperatorMatrix {
        assert!(m <= self.n);
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                entries.push(self.entry(i, j).clone());
            }
        }
        OperatorMatrix {
            origin: self.origin,
            n: m,
            entries,
        }
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..=i).map(|j| self.entry(i, j) * &v[j]).sum())
            .collect()
    }
}

/// Matrix of multiplication by a fixed series on the basis
/// `q^lambda, ..., q^(lambda+n-1)`: Toeplitz with entries `b(i-j)`.
pub fn multiplication_matrix(b: &PowerSeries, lambda: usize, n: usize) -> OperatorMatrix {
    assert!(
        b.order() >= n,
        "series too short for an n x n multiplication block"
    );
    let mut entries = vec![BigRational::zero(); n * n];
    for i in 0..n {
        for j in 0..=i {
            entries[i * n + j] = b.coeff(i - j);
        }
    }
    OperatorMatrix {
        origin: lambda,
        n,
        entries,
    }
}

/// Normalized series solution produced by the Frobenius method.
#[derive(Clone, Debug)]
pub struct FrobeniusSolution {
    pub series: PowerSeries,
    pub exponent: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrobeniusError {
    #[error("{0} is not a root of the indicial polynomial")]
    NotACharacteristicExponent(usize),
    #[error("{0} is a repeated root of the indicial polynomial")]
    NotSimpleRoot(usize),
    #[error(
        "indicial polynomial vanishes again {0} steps above the exponent; recurrence breaks down"
    )]
    ResonantExponent(usize),
    #[error("path-sum oracle limited to n <= {max}, requested n = {requested}")]
    PathSumTooLarge { requested: usize, max: usize },
}
