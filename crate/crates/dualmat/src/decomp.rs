//! Rank decomposition of dual matrices.
//!
//! A dual matrix `A = A0 + eps A1` with `r = rank(A0) >= 1` factors as
//! `A = L R` where `L = A2 + eps A3` has column-full-rank real part and
//! `R = A4 + eps A5` has row-full-rank real part, both of rank `r`. Such a
//! factorization exists exactly when
//!
//! ```text
//! (I - A2 pinv(A2)) A1 (I - pinv(A4) A4) = 0
//! ```
//!
//! (the projectors equal `I - A0 pinv(A0)` and `I - pinv(A0) A0`, so the
//! test does not depend on the chosen real factors). Given existence, the
//! dual parts solve `A2 X + Y A4 = A1`, and the solution set is swept by a
//! free `r x r` parameter `P`:
//!
//! ```text
//! A3 = (I - A2 pinv(A2)) A1 pinv(A4) - A2 P
//! A5 = pinv(A2) A1 + P A4
//! ```
//!
//! Distinct parameters give distinct factor pairs, so the decomposition is
//! never unique; `P = 0` is the canonical choice.

use crate::dual::DualMatrix;
use crate::error::Error;
use crate::matrix::{RealMatrix, ResidualCheck};
use crate::sylvester::{self, SylvesterParams};

/// A validated dual rank decomposition: `left` is m x r with
/// column-full-rank real part, `right` is r x n with row-full-rank real
/// part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualRankFactors {
    left: DualMatrix,
    right: DualMatrix,
}

impl DualRankFactors {
    /// Validates the rank conditions and pairs the factors.
    ///
    /// # Errors
    ///
    /// Dimension error when the inner dimensions disagree;
    /// [`Error::NotColumnFullRank`] / [`Error::NotRowFullRank`] when a real
    /// part is rank deficient.
    pub fn new(left: DualMatrix, right: DualMatrix) -> Result<Self, Error> {
        if left.cols() != right.rows() {
            return Err(Error::dim(format!(
                "left factor is {}x{} but right factor is {}x{}",
                left.rows(),
                left.cols(),
                right.rows(),
                right.cols()
            )));
        }
        let r = left.cols();
        if left.real().rank() != r {
            return Err(Error::NotColumnFullRank);
        }
        if right.real().rank() != r {
            return Err(Error::NotRowFullRank);
        }
        Ok(DualRankFactors { left, right })
    }

    pub fn left(&self) -> &DualMatrix {
        &self.left
    }

    pub fn right(&self) -> &DualMatrix {
        &self.right
    }

    pub fn rank(&self) -> usize {
        self.left.cols()
    }

    /// The dual matrix the factors multiply to.
    pub fn product(&self) -> DualMatrix {
        &self.left * &self.right
    }
}

/// Existence test with diagnostic residual.
///
/// # Errors
///
/// [`Error::RankZero`] when the real part is zero; rank-zero dual matrices
/// have no rank decomposition.
pub fn exists(a: &DualMatrix) -> Result<ResidualCheck, Error> {
    let fr = a.real().full_rank_decompose()?;
    let left = &RealMatrix::identity(a.rows()) - &(&fr.f * &fr.f.pinv());
    let right = &RealMatrix::identity(a.cols()) - &(&fr.g.pinv() * &fr.g);
    Ok(ResidualCheck::of(&(&left * a.dual()) * &right))
}

/// Decomposes `a` using the canonical real factors and parameter `p`.
///
/// # Errors
///
/// [`Error::RankZero`] on a zero real part; dimension error unless `p` is
/// `r x r`; [`Error::NoDecomposition`] (with residual) when the existence
/// test fails.
pub fn decompose(a: &DualMatrix, p: &RealMatrix) -> Result<DualRankFactors, Error> {
    let fr = a.real().full_rank_decompose()?;
    let r = fr.rank();
    if p.shape() != (r, r) {
        return Err(Error::dim(format!(
            "parameter must be {r}x{r}, got {}x{}",
            p.rows(),
            p.cols()
        )));
    }
    // The factor dual parts solve A2 X + Y A4 = A1; U is the free P, and
    // the V/W terms vanish because A2 and A4 have full column/row rank.
    let params = SylvesterParams {
        u: p.clone(),
        v: RealMatrix::zeros(r, a.cols()),
        w: RealMatrix::zeros(a.rows(), r),
    };
    let sol = sylvester::solve(&fr.f, &fr.g, a.dual(), &params).map_err(|e| match e {
        Error::Inconsistent { residual } => Error::NoDecomposition { residual },
        other => other,
    })?;
    let left = DualMatrix::new(fr.f, sol.y).expect("factor parts share a shape");
    let right = DualMatrix::new(fr.g, sol.x).expect("factor parts share a shape");
    Ok(DualRankFactors::new(left, right).expect("constructed factors satisfy rank conditions"))
}

/// [`decompose`] with `P = 0`.
///
/// # Errors
///
/// Same as [`decompose`].
pub fn decompose_canonical(a: &DualMatrix) -> Result<DualRankFactors, Error> {
    let r = a.real().rank();
    if r == 0 {
        return Err(Error::RankZero);
    }
    decompose(a, &RealMatrix::zeros(r, r))
}

/// True when `factors` is a rank decomposition of `a`: shapes line up and
/// the product reproduces `a` exactly. (Rank conditions hold for every
/// constructed [`DualRankFactors`].)
pub fn verify(a: &DualMatrix, factors: &DualRankFactors) -> bool {
    factors.left().rows() == a.rows()
        && factors.right().cols() == a.cols()
        && factors.product() == *a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn consistent_fixture() -> DualMatrix {
        DualMatrix::new(
            RealMatrix::from_ints(&[&[1, 2, 1], &[2, 1, 1], &[3, 3, 2]]),
            RealMatrix::from_ints(&[&[1, 4, 7], &[2, 5, 8], &[3, 6, 14]]),
        )
        .unwrap()
    }

    fn inconsistent_fixture() -> DualMatrix {
        DualMatrix::new(
            RealMatrix::from_ints(&[&[1, 0], &[0, 0]]),
            RealMatrix::from_ints(&[&[1, 1], &[1, 1]]),
        )
        .unwrap()
    }

    #[test]
    fn existence_residuals() {
        let check = exists(&inconsistent_fixture()).unwrap();
        assert!(!check.holds);
        assert_eq!(check.residual, RealMatrix::from_ints(&[&[0, 0], &[0, 1]]));

        assert!(exists(&consistent_fixture()).unwrap().holds);

        // A real matrix always decomposes.
        let real = DualMatrix::from_real(RealMatrix::from_ints(&[&[1, 2], &[2, 4]]));
        assert!(exists(&real).unwrap().holds);

        assert_eq!(exists(&DualMatrix::zeros(2, 2)), Err(Error::RankZero));
    }

    #[test]
    fn decomposition_with_explicit_parameter() {
        let p = RealMatrix::parse(&[&["1/2", "1/2"], &["-1", "1/2"]]);
        let f = decompose(&consistent_fixture(), &p).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(f.left().real(), &RealMatrix::from_ints(&[&[1, 2], &[2, 1], &[3, 3]]));
        assert_eq!(
            f.left().dual(),
            &RealMatrix::parse(&[&["3/2", "-1/2"], &["0", "-1/2"], &["3/2", "-4"]])
        );
        assert_eq!(
            f.right().real(),
            &RealMatrix::parse(&[&["1", "0", "1/3"], &["0", "1", "1/3"]])
        );
        assert_eq!(
            f.right().dual(),
            &RealMatrix::parse(&[&["3/2", "13/6", "29/9"], &["-1", "7/6", "31/18"]])
        );
        assert_eq!(f.product(), consistent_fixture());
        assert!(verify(&consistent_fixture(), &f));
    }

    #[test]
    fn canonical_decomposition_uses_zero_parameter() {
        let a = consistent_fixture();
        let f = decompose_canonical(&a).unwrap();
        let a2 = f.left().real();
        let a4 = f.right().real();
        // With P = 0 the dual parts are the particular Sylvester solution.
        assert_eq!(
            f.left().dual(),
            &(&(&(&RealMatrix::identity(3) - &(a2 * &a2.pinv())) * a.dual()) * &a4.pinv())
        );
        assert_eq!(f.right().dual(), &(&a2.pinv() * a.dual()));
        assert!(verify(&a, &f));
    }

    #[test]
    fn real_matrices_get_real_factors() {
        let a = DualMatrix::from_real(RealMatrix::from_ints(&[&[1, 2, 1], &[2, 1, 1], &[3, 3, 2]]));
        let f = decompose_canonical(&a).unwrap();
        assert!(f.left().dual().is_zero());
        assert!(f.right().dual().is_zero());
        assert!(verify(&a, &f));
    }

    #[test]
    fn distinct_parameters_give_distinct_factors() {
        let a = consistent_fixture();
        let p1 = RealMatrix::zeros(2, 2);
        let p2 = RealMatrix::from_ints(&[&[1, 0], &[0, 0]]);
        let f1 = decompose(&a, &p1).unwrap();
        let f2 = decompose(&a, &p2).unwrap();
        assert_ne!(f1, f2);
        // Both still reproduce the matrix.
        assert!(verify(&a, &f1));
        assert!(verify(&a, &f2));
    }

    #[test]
    fn decomposition_failure_modes() {
        let residual = RealMatrix::from_ints(&[&[0, 0], &[0, 1]]);
        assert_eq!(
            decompose(&inconsistent_fixture(), &RealMatrix::zeros(1, 1)),
            Err(Error::NoDecomposition { residual })
        );
        assert!(matches!(
            decompose(&consistent_fixture(), &RealMatrix::zeros(3, 3)),
            Err(Error::Dimension(_))
        ));
        assert_eq!(decompose_canonical(&DualMatrix::zeros(2, 2)), Err(Error::RankZero));
    }

    #[test]
    fn factor_validation() {
        let tall = DualMatrix::from_real(RealMatrix::from_ints(&[&[1, 2], &[2, 4], &[0, 0]]));
        let wide = DualMatrix::from_real(RealMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0]]));
        // rank(tall real) = 1 < 2 columns
        assert_eq!(
            DualRankFactors::new(tall.clone(), wide.clone()),
            Err(Error::NotColumnFullRank)
        );
        let good_left = DualMatrix::from_real(RealMatrix::from_ints(&[&[1, 0], &[0, 1], &[1, 1]]));
        let bad_right = DualMatrix::from_real(RealMatrix::from_ints(&[&[1, 0, 0], &[2, 0, 0]]));
        assert_eq!(DualRankFactors::new(good_left.clone(), bad_right), Err(Error::NotRowFullRank));
        assert!(matches!(
            DualRankFactors::new(good_left, DualMatrix::identity(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn verify_rejects_wrong_products() {
        let a = consistent_fixture();
        let f = decompose_canonical(&a).unwrap();
        let other = DualMatrix::new(
            RealMatrix::from_ints(&[&[1, 2, 1], &[2, 1, 1], &[3, 3, 2]]),
            RealMatrix::zeros(3, 3),
        )
        .unwrap();
        assert!(!verify(&other, &f));
        assert!(!verify(&DualMatrix::identity(2), &f));
    }
}
