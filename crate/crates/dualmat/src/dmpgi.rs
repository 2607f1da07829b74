//! The dual Moore-Penrose generalized inverse, by three independent routes.
//!
//! A dual matrix `A = A0 + eps A1` has a (then unique) matrix satisfying
//! all four dual Penrose equations exactly when
//!
//! ```text
//! (I - A0 pinv(A0)) A1 (I - pinv(A0) A0) = 0
//! ```
//!
//! The three routes:
//!
//! * [`direct`] works on the parts alone:
//!   `pinv(A) = pinv(A0) - eps (pinv(A0) A1 pinv(A0)
//!       - pinv(A0^T A0) A1^T (I - A0 pinv(A0))
//!       - (I - pinv(A0) A0) A1^T pinv(A0 A0^T))`.
//! * [`factor`] multiplies full-rank-factor pseudoinverses:
//!   `pinv(A) = pinv(R) pinv(L)` for any rank decomposition `A = L R`.
//! * [`explicit`] expands [`factor`] into a closed form over the factor
//!   parts.
//!
//! All three agree exactly, and the factor routes do not depend on which
//! decomposition parameter produced the factors. [`pinv_col_full`] and
//! [`pinv_row_full`] are the full-rank building blocks; each computes its
//! answer twice (compact and expanded form) and insists on agreement.

use crate::decomp::DualRankFactors;
use crate::dual::DualMatrix;
use crate::error::Error;
use crate::matrix::{RealMatrix, ResidualCheck};

/// Existence test with diagnostic residual. Total: every shape, rank zero
/// included, has a well-defined answer.
pub fn exists(a: &DualMatrix) -> ResidualCheck {
    let p = a.real().pinv();
    let left = &RealMatrix::identity(a.rows()) - &(a.real() * &p);
    let right = &RealMatrix::identity(a.cols()) - &(&p * a.real());
    ResidualCheck::of(&(&left * a.dual()) * &right)
}

/// Computes the inverse from the parts of `a` alone.
///
/// # Errors
///
/// [`Error::NoDmpgi`] (carrying the residual) when no inverse exists.
pub fn direct(a: &DualMatrix) -> Result<DualMatrix, Error> {
    let check = exists(a);
    if !check.holds {
        return Err(Error::NoDmpgi { residual: check.residual });
    }
    let a0 = a.real();
    let a1 = a.dual();
    let a1t = a1.transpose();
    let p = a0.pinv();
    let left_null = &RealMatrix::identity(a.rows()) - &(a0 * &p); // I - A0 pinv(A0)
    let right_null = &RealMatrix::identity(a.cols()) - &(&p * a0); // I - pinv(A0) A0
    let col_gram = (&a0.transpose() * a0).pinv(); // pinv(A0^T A0)
    let row_gram = (a0 * &a0.transpose()).pinv(); // pinv(A0 A0^T)
    let dual = -(&(&(&(&p * a1) * &p) - &(&(&col_gram * &a1t) * &left_null))
        - &(&(&right_null * &a1t) * &row_gram));
    Ok(DualMatrix::new(p, dual).expect("parts share a shape"))
}

/// Pseudoinverse of a dual matrix whose real part has full column rank:
/// `pinv(A) = (A^T A)^-1 A^T`, a left inverse.
///
/// Computed both compactly (dual Gram inverse) and in expanded per-part
/// form; the two must agree.
///
/// # Errors
///
/// [`Error::NotColumnFullRank`] when the rank condition fails;
/// [`Error::FormulaDiscrepancy`] if the two computations differ (an
/// implementation bug, never expected).
pub fn pinv_col_full(a: &DualMatrix) -> Result<DualMatrix, Error> {
    if a.real().rank() != a.cols() {
        return Err(Error::NotColumnFullRank);
    }
    let at = a.transpose();
    let compact = &(&at * a).inverse().expect("dual Gram has invertible real part") * &at;

    let a2 = a.real();
    let a3 = a.dual();
    let gram = (&a2.transpose() * a2).inverse().expect("real Gram is invertible");
    let real = &gram * &a2.transpose();
    let q = &(&a2.transpose() * a3) + &(&a3.transpose() * a2);
    let dual = &(&gram * &a3.transpose()) - &(&(&(&gram * &q) * &gram) * &a2.transpose());
    let expanded = DualMatrix::new(real, dual).expect("parts share a shape");

    if compact != expanded {
        return Err(Error::FormulaDiscrepancy("column-full-rank pseudoinverse"));
    }
    Ok(compact)
}

/// Pseudoinverse of a dual matrix whose real part has full row rank:
/// `pinv(A) = A^T (A A^T)^-1`, a right inverse.
///
/// Computed both compactly and in expanded per-part form; the two must
/// agree.
///
/// # Errors
///
/// [`Error::NotRowFullRank`] when the rank condition fails;
/// [`Error::FormulaDiscrepancy`] if the two computations differ (an
/// implementation bug, never expected).
pub fn pinv_row_full(a: &DualMatrix) -> Result<DualMatrix, Error> {
    if a.real().rank() != a.rows() {
        return Err(Error::NotRowFullRank);
    }
    let at = a.transpose();
    let compact = &at * &(a * &at).inverse().expect("dual Gram has invertible real part");

    let a4 = a.real();
    let a5 = a.dual();
    let gram = (a4 * &a4.transpose()).inverse().expect("real Gram is invertible");
    let real = &a4.transpose() * &gram;
    let q = &(a4 * &a5.transpose()) + &(a5 * &a4.transpose());
    let dual = &(&a5.transpose() * &gram) - &(&(&(&a4.transpose() * &gram) * &q) * &gram);
    let expanded = DualMatrix::new(real, dual).expect("parts share a shape");

    if compact != expanded {
        return Err(Error::FormulaDiscrepancy("row-full-rank pseudoinverse"));
    }
    Ok(compact)
}

/// Computes the inverse of the factors' product as
/// `pinv(R) pinv(L)`.
///
/// # Errors
///
/// Same as the two full-rank pseudoinverses it chains.
pub fn factor(f: &DualRankFactors) -> Result<DualMatrix, Error> {
    Ok(&pinv_row_full(f.right())? * &pinv_col_full(f.left())?)
}

/// Closed form of [`factor`] expanded over the factor parts
/// `L = A2 + eps A3`, `R = A4 + eps A5`:
///
/// ```text
/// real = pinv(A4) pinv(A2)
/// dual = pinv(A4) (A2^T A2)^-1 (A3^T - Q23 pinv(A2))
///      + (A5^T - pinv(A4) Q45) (A4 A4^T)^-1 pinv(A2)
/// ```
///
/// with the symmetrized cross terms `Q23 = A2^T A3 + A3^T A2` and
/// `Q45 = A4 A5^T + A5 A4^T`.
///
/// # Errors
///
/// None beyond construction: valid factors always yield the inverse.
pub fn explicit(f: &DualRankFactors) -> Result<DualMatrix, Error> {
    let a2 = f.left().real();
    let a3 = f.left().dual();
    let a4 = f.right().real();
    let a5 = f.right().dual();
    let col_gram = (&a2.transpose() * a2).inverse().expect("real Gram is invertible");
    let row_gram = (a4 * &a4.transpose()).inverse().expect("real Gram is invertible");
    let a2p = &col_gram * &a2.transpose();
    let a4p = &a4.transpose() * &row_gram;
    let q23 = &(&a2.transpose() * a3) + &(&a3.transpose() * a2);
    let q45 = &(a4 * &a5.transpose()) + &(a5 * &a4.transpose());
    let real = &a4p * &a2p;
    let dual = &(&(&a4p * &col_gram) * &(&a3.transpose() - &(&q23 * &a2p)))
        + &(&(&(&a5.transpose() - &(&a4p * &q45)) * &row_gram) * &a2p);
    Ok(DualMatrix::new(real, dual).expect("parts share a shape"))
}
