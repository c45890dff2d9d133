//! Extremal quasimodular forms of depth 1 through 4: the depth-specific
//! operators, weight ladders, closed-form coefficient formulas, bounded
//! integrality sweeps, and assembly of the candidate weight sets.

mod esets;
mod formulas;
mod operators;
mod sweep;

pub use esets::{sign_regression, verify_e_sets, ESetReport, SignRegressionReport};
pub use formulas::{
    coeff_formula, formula, formula_ids, CoefficientFormula, FormulaId, FormulaReference,
    ScaledDisplay,
};
pub use operators::{extremal_expansion, extremal_mdo, extremal_mdo_with_order, DEFAULT_ORDER};
pub use sweep::{
    candidate_weights, integrality_sweep, screen_depth, sweep_certificate, ClassScreen,
    DepthScreen, ScreenStage, SweepCertificate, SweepError, SweepReport,
};

use thiserror::Error;

/// A valid (depth, weight) pair together with its residue class, class
/// parameter `k`, and the maximal vanishing order
/// `lambda = dim QMF^r_w - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthWeight {
    depth: u32,
    weight: u64,
    residue: u64,
    modulus: u64,
    k: u64,
    vanishing_order: usize,
}

impl DepthWeight {
    /// Classify a pair, rejecting depths outside 1..=4, odd or nonpositive
    /// weights, and the pairs for which no quasimodular form of that exact
    /// depth exists (`w < 2r` or `w = 2r + 2`).
    pub fn new(depth: u32, weight: u64) -> Result<Self, ExtremalError> {
        if !(1..=4).contains(&depth) {
            return Err(ExtremalError::InvalidDepth(depth));
        }
        if weight == 0 || !weight.is_multiple_of(2) {
            return Err(ExtremalError::InvalidWeight(weight));
        }
        let r = u64::from(depth);
        if weight < 2 * r || weight == 2 * r + 2 {
            return Err(ExtremalError::NonexistentForm { depth, weight });
        }
        let modulus = match depth {
            1 | 3 => 6,
            2 => 4,
            _ => 12,
        };
        let residue = weight % modulus;
        let k = (weight - residue) / modulus;
        let vanishing_order = match depth {
            1 => weight / 6,
            2 => weight / 4,
            3 => weight / 3,
            _ => {
                // floor(5w/12), one less in the deficient class w = 10 mod 12
                let v = 5 * weight / 12;
                if weight % 12 == 10 {
                    v - 1
                } else {
                    v
                }
            }
        } as usize;
        Ok(Self {
            depth,
            weight,
            residue,
            modulus,
            k,
            vanishing_order,
        })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Weight residue mod 6, 4, 6, 12 for depths 1, 2, 3, 4.
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Class parameter: `weight = modulus * k + residue`.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Order of vanishing of the extremal form at the cusp.
    pub fn vanishing_order(&self) -> usize {
        self.vanishing_order
    }

    /// Whether the weight sits in the class solved directly by a modular
    /// differential operator (rather than by a ladder).
    pub fn is_base_class(&self) -> bool {
        self.residue == 0 && self.k >= 1
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("depth must be between 1 and 4, got {0}")]
    InvalidDepth(u32),
    #[error("weight must be a positive even integer, got {0}")]
    InvalidWeight(u64),
    #[error("no quasimodular form of weight {weight} and depth {depth}")]
    NonexistentForm { depth: u32, weight: u64 },
    #[error("weight {weight} is not in the base residue class of depth {depth}; use the ladder expansion")]
    NotBaseClass { depth: u32, weight: u64 },
    #[error("depth-4 expansions are implemented only for weights divisible by 12; weight {weight} needs a ladder that is out of scope")]
    UnsupportedDepth4Class { weight: u64 },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_orders_follow_case_tables() {
        assert_eq!(DepthWeight::new(1, 6).unwrap().vanishing_order(), 1);
        assert_eq!(DepthWeight::new(1, 8).unwrap().vanishing_order(), 1);
        assert_eq!(DepthWeight::new(1, 10).unwrap().vanishing_order(), 1);
        assert_eq!(DepthWeight::new(1, 2).unwrap().vanishing_order(), 0);
        assert_eq!(DepthWeight::new(2, 4).unwrap().vanishing_order(), 1);
        assert_eq!(DepthWeight::new(2, 10).unwrap().vanishing_order(), 2);
        assert_eq!(DepthWeight::new(3, 6).unwrap().vanishing_order(), 2);
        assert_eq!(DepthWeight::new(3, 10).unwrap().vanishing_order(), 3);
        for (w, lam) in [(12u64, 5), (14, 5), (16, 6), (18, 7), (20, 8), (22, 8)] {
            assert_eq!(
                DepthWeight::new(4, w).unwrap().vanishing_order(),
                lam,
                "depth 4 weight {w}"
            );
        }
    }

    #[test]
    fn nonexistent_pairs_are_rejected() {
        for (r, w) in [
            (1u32, 4u64),
            (2, 6),
            (3, 8),
            (4, 10),
            (2, 2),
            (3, 4),
            (4, 6),
        ] {
            assert_eq!(
                DepthWeight::new(r, w).unwrap_err(),
                ExtremalError::NonexistentForm {
                    depth: r,
                    weight: w
                }
            );
        }
        assert_eq!(
            DepthWeight::new(0, 6).unwrap_err(),
            ExtremalError::InvalidDepth(0)
        );
        assert_eq!(
            DepthWeight::new(5, 6).unwrap_err(),
            ExtremalError::InvalidDepth(5)
        );
        assert_eq!(
            DepthWeight::new(1, 7).unwrap_err(),
            ExtremalError::InvalidWeight(7)
        );
        assert_eq!(
            DepthWeight::new(1, 0).unwrap_err(),
            ExtremalError::InvalidWeight(0)
        );
        // boundary pairs w = 2r all exist
        for (r, w) in [(1u32, 2u64), (2, 4), (3, 6), (4, 8)] {
            assert!(DepthWeight::new(r, w).is_ok());
        }
    }

    #[test]
    fn class_parameters() {
        let dw = DepthWeight::new(1, 20).unwrap();
        assert_eq!((dw.modulus(), dw.residue(), dw.k()), (6, 2, 3));
        let dw = DepthWeight::new(4, 24).unwrap();
        assert_eq!((dw.modulus(), dw.residue(), dw.k()), (12, 0, 2));
        assert!(dw.is_base_class());
        assert!(!DepthWeight::new(1, 2).unwrap().is_base_class());
    }
}
