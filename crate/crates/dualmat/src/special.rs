//! Dual idempotent and dual EP matrices.
//!
//! An idempotent dual matrix squares to itself; that forces the real part
//! to be a projector and ties the dual part to it linearly. EP dual
//! matrices are the square ones that commute with their Moore-Penrose
//! inverse. Both notions come with several equivalent formulations, and
//! every predicate here is checked against an independent route in the
//! test suites.

use crate::decomp::DualRankFactors;
use crate::dmpgi;
use crate::dual::DualMatrix;
use crate::error::Error;

fn require_square(a: &DualMatrix) -> Result<(), Error> {
    if a.is_square() {
        Ok(())
    } else {
        let (m, n) = a.shape();
        Err(Error::dim(format!("expected a square matrix, got {m}x{n}")))
    }
}

/// Definition-level test: does the matrix square to itself?
///
/// # Errors
///
/// `Error::Dimension` when the matrix is not square.
pub fn is_dual_idempotent(a: &DualMatrix) -> Result<bool, Error> {
    require_square(a)?;
    Ok(&(a * a) == a)
}

/// Part-level characterization of idempotency: the real part is a real
/// idempotent and the dual part satisfies `A1 = A0 A1 + A1 A0`. Agrees
/// with [`is_dual_idempotent`] on every square matrix.
///
/// # Errors
///
/// `Error::Dimension` when the matrix is not square.
pub fn idempotent_characterization(a: &DualMatrix) -> Result<bool, Error> {
    require_square(a)?;
    let (a0, a1) = (a.real(), a.dual());
    Ok(&(a0 * a0) == a0 && &(&(a0 * a1) + &(a1 * a0)) == a1)
}

/// Rank decomposition of an idempotent dual matrix, built directly from a
/// full rank decomposition `A0 = A2 A4` of the real part: the left factor
/// is `A2 + eps A1 A2` and the right factor is `A4 + eps A4 A1`.
///
/// # Errors
///
/// `Error::Dimension` when the matrix is not square, `Error::NotIdempotent`
/// when it does not square to itself, `Error::RankZero` for the zero
/// matrix.
pub fn idempotent_decompose(a: &DualMatrix) -> Result<DualRankFactors, Error> {
    if !is_dual_idempotent(a)? {
        return Err(Error::NotIdempotent);
    }
    if a.real().is_zero() {
        return Err(Error::RankZero);
    }
    let f = a.real().full_rank_decompose()?;
    let a1 = a.dual();
    let left = DualMatrix::new(f.f.clone(), a1 * &f.f)?;
    let right = DualMatrix::new(f.g.clone(), &f.g * a1)?;
    DualRankFactors::new(left, right)
}

/// True when the factors commute to the identity, `right * left = I_r`.
/// For a valid rank decomposition this happens exactly when the product
/// `left * right` is idempotent.
pub fn factor_commute_is_identity(f: &DualRankFactors) -> bool {
    let r = f.rank();
    f.right() * f.left() == DualMatrix::identity(r)
}

/// Moore-Penrose inverse of an idempotent dual matrix via the closed form
///
/// ```text
/// A0+ + eps (A0+ A1^T + A1^T A0+
///            - A0+ (A1 + A1^T) A0 A0+ - A0+ A0 (A1^T + A1) A0+)
/// ```
///
/// The result is cross-checked against the general direct formula; a
/// mismatch would mean one of the two routes is implemented wrong and is
/// reported as an error rather than silently returned.
///
/// # Errors
///
/// `Error::Dimension` when the matrix is not square, `Error::NotIdempotent`
/// when it does not square to itself, `Error::FormulaDiscrepancy` if the
/// two routes disagree.
pub fn idempotent_dmpgi(a: &DualMatrix) -> Result<DualMatrix, Error> {
    if !is_dual_idempotent(a)? {
        return Err(Error::NotIdempotent);
    }
    let (a0, a1) = (a.real(), a.dual());
    let p = a0.pinv();
    let a1t = a1.transpose();
    let sum = a1 + &a1t;
    let dual = &(&(&p * &a1t) + &(&a1t * &p))
        - &(&(&(&(&p * &sum) * a0) * &p) + &(&(&(&p * a0) * &sum) * &p));
    let closed = DualMatrix::new(p, dual)?;
    let general = dmpgi::direct(a)?;
    if closed != general {
        return Err(Error::FormulaDiscrepancy(
            "idempotent closed form vs direct Moore-Penrose formula",
        ));
    }
    Ok(closed)
}

/// Definition-level EP test: the matrix commutes with its Moore-Penrose
/// inverse.
///
/// # Errors
///
/// `Error::Dimension` when the matrix is not square, `Error::NoDmpgi` when
/// the Moore-Penrose inverse does not exist.
pub fn is_dual_ep(a: &DualMatrix) -> Result<bool, Error> {
    require_square(a)?;
    let x = dmpgi::direct(a)?;
    Ok(a * &x == &x * a)
}

/// Part-level EP characterization: the real part commutes with its own
/// pseudoinverse and the dual part satisfies
/// `(I - A0+ A0) A1 A0+ = (A0+ A1 (I - A0+ A0))^T`.
///
/// # Errors
///
/// Same as [`is_dual_ep`]; existence of the Moore-Penrose inverse is a
/// hypothesis of this characterization, so inconsistent instances are
/// rejected rather than classified.
pub fn ep_via_parts(a: &DualMatrix) -> Result<bool, Error> {
    require_square(a)?;
    let check = dmpgi::exists(a);
    if !check.holds {
        return Err(Error::NoDmpgi { residual: check.residual });
    }
    let (a0, a1) = (a.real(), a.dual());
    let p = a0.pinv();
    if (a0 * &p) != (&p * a0) {
        return Ok(false);
    }
    let n = a0.shape().0;
    let co_proj = &crate::matrix::RealMatrix::identity(n) - &(&p * a0);
    let lhs = &(&co_proj * a1) * &p;
    let rhs = (&(&p * a1) * &co_proj).transpose();
    Ok(lhs == rhs)
}

fn require_square_product(f: &DualRankFactors) -> Result<(), Error> {
    let (m, _) = f.left().shape();
    let (_, n) = f.right().shape();
    if m == n {
        Ok(())
    } else {
        Err(Error::dim(format!("factors multiply to a {m}x{n} matrix, need square")))
    }
}

/// EP test through the factor pseudoinverses: the product `left * right`
/// is EP exactly when `left * left+ = right+ * right`.
///
/// # Errors
///
/// `Error::Dimension` when the factor product is not square.
pub fn ep_via_factors(f: &DualRankFactors) -> Result<bool, Error> {
    require_square_product(f)?;
    let lp = dmpgi::pinv_col_full(f.left())?;
    let rp = dmpgi::pinv_row_full(f.right())?;
    Ok(f.left() * &lp == &rp * f.right())
}

/// EP test on the factor parts alone, avoiding dual arithmetic: with
/// `left = A2 + eps A3` and `right = A4 + eps A5`, the product is EP
/// exactly when the real projectors agree,
///
/// ```text
/// A2 (A2^T A2)^-1 A2^T = A4^T (A4 A4^T)^-1 A4
/// ```
///
/// and the dual parts satisfy
///
/// ```text
/// (I - A4^T (A4 A4^T)^-1 A4) A3 A2+ = (A4+ A5 (I - A4^T (A4 A4^T)^-1 A4))^T.
/// ```
///
/// # Errors
///
/// `Error::Dimension` when the factor product is not square,
/// `Error::Singular` if a Gram matrix fails to invert (impossible for
/// validated factors).
pub fn ep_via_decomposition(f: &DualRankFactors) -> Result<bool, Error> {
    require_square_product(f)?;
    let (a2, a3) = (f.left().real(), f.left().dual());
    let (a4, a5) = (f.right().real(), f.right().dual());
    let gram_col = (&a2.transpose() * a2).inverse()?;
    let gram_row = (a4 * &a4.transpose()).inverse()?;
    let a2p = &gram_col * &a2.transpose();
    let a4p = &a4.transpose() * &gram_row;
    let col_proj = a2 * &a2p;
    let row_proj = &a4p * a4;
    if col_proj != row_proj {
        return Ok(false);
    }
    let n = row_proj.shape().0;
    let co_proj = &crate::matrix::RealMatrix::identity(n) - &row_proj;
    let lhs = &(&co_proj * a3) * &a2p;
    let rhs = (&(&a4p * a5) * &co_proj).transpose();
    Ok(lhs == rhs)
}
