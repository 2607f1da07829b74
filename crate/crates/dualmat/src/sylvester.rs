//! The coupled linear matrix equation `A X + Y B = C`.
//!
//! For `A` of shape m x p, `B` of shape q x n, and `C` of shape m x n, the
//! equation is solvable exactly when
//!
//! ```text
//! (I - A pinv(A)) C (I - pinv(B) B) = 0
//! ```
//!
//! and then every solution pair is
//!
//! ```text
//! X = pinv(A) C + U B + (I - pinv(A) A) V
//! Y = (I - A pinv(A)) C pinv(B) - A U + W (I - B pinv(B))
//! ```
//!
//! over free parameters `U` (p x q), `V` (p x n), `W` (m x q). The dual
//! rank decomposition reduces to this equation, with the free `U` becoming
//! the decomposition's parameter matrix.

use crate::error::Error;
use crate::matrix::{RealMatrix, ResidualCheck};

/// Free parameters selecting one solution from the affine solution set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterParams {
    pub u: RealMatrix,
    pub v: RealMatrix,
    pub w: RealMatrix,
}

impl SylvesterParams {
    /// Zero parameters sized for coefficient matrices `a` and `b`, giving
    /// the particular solution `X = pinv(A) C`, `Y = (I - A pinv(A)) C pinv(B)`.
    pub fn zeros_for(a: &RealMatrix, b: &RealMatrix) -> Self {
        SylvesterParams {
            u: RealMatrix::zeros(a.cols(), b.rows()),
            v: RealMatrix::zeros(a.cols(), b.cols()),
            w: RealMatrix::zeros(a.rows(), b.rows()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterSolution {
    pub x: RealMatrix,
    pub y: RealMatrix,
}

fn check_equation_shapes(a: &RealMatrix, b: &RealMatrix, c: &RealMatrix) -> Result<(), Error> {
    if c.rows() != a.rows() || c.cols() != b.cols() {
        return Err(Error::dim(format!(
            "C must be {}x{} for A {}x{} and B {}x{}, got {}x{}",
            a.rows(),
            b.cols(),
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols(),
            c.rows(),
            c.cols()
        )));
    }
    Ok(())
}

/// Tests solvability of `A X + Y B = C` and returns the residual.
///
/// # Errors
///
/// Dimension error when `C` is not `a.rows() x b.cols()`.
pub fn consistent(
    a: &RealMatrix,
    b: &RealMatrix,
    c: &RealMatrix,
) -> Result<ResidualCheck, Error> {
    check_equation_shapes(a, b, c)?;
    let left = &RealMatrix::identity(a.rows()) - &(a * &a.pinv());
    let right = &RealMatrix::identity(b.cols()) - &(&b.pinv() * b);
    Ok(ResidualCheck::of(&(&left * c) * &right))
}

/// Solves `A X + Y B = C` for the solution selected by `params`.
///
/// # Errors
///
/// Dimension error on malformed inputs; [`Error::Inconsistent`] (carrying
/// the residual) when no solution exists.
pub fn solve(
    a: &RealMatrix,
    b: &RealMatrix,
    c: &RealMatrix,
    params: &SylvesterParams,
) -> Result<SylvesterSolution, Error> {
    check_equation_shapes(a, b, c)?;
    let (m, p) = a.shape();
    let (q, n) = b.shape();
    for (name, got, want) in [
        ("U", params.u.shape(), (p, q)),
        ("V", params.v.shape(), (p, n)),
        ("W", params.w.shape(), (m, q)),
    ] {
        if got != want {
            return Err(Error::dim(format!(
                "parameter {name} must be {}x{}, got {}x{}",
                want.0, want.1, got.0, got.1
            )));
        }
    }
    let check = consistent(a, b, c)?;
    if !check.holds {
        return Err(Error::Inconsistent { residual: check.residual });
    }
    let ap = a.pinv();
    let bp = b.pinv();
    let left_null = &RealMatrix::identity(p) - &(&ap * a); // I - pinv(A) A
    let right_null = &RealMatrix::identity(q) - &(b * &bp); // I - B pinv(B)
    let co_null = &RealMatrix::identity(m) - &(a * &ap); // I - A pinv(A)
    let x = &(&(&ap * c) + &(&params.u * b)) + &(&left_null * &params.v);
    let y = &(&(&(&co_null * c) * &bp) - &(a * &params.u)) + &(&params.w * &right_null);
    Ok(SylvesterSolution { x, y })
}

/// [`solve`] with all free parameters zero.
///
/// # Errors
///
/// Same as [`solve`].
pub fn solve_particular(
    a: &RealMatrix,
    b: &RealMatrix,
    c: &RealMatrix,
) -> Result<SylvesterSolution, Error> {
    solve(a, b, c, &SylvesterParams::zeros_for(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RealMatrix {
        RealMatrix::from_ints(&[&[1, 2], &[2, 1], &[3, 3]])
    }

    fn a4() -> RealMatrix {
        RealMatrix::parse(&[&["1", "0", "1/3"], &["0", "1", "1/3"]])
    }

    fn a1() -> RealMatrix {
        RealMatrix::from_ints(&[&[1, 4, 7], &[2, 5, 8], &[3, 6, 14]])
    }

    fn substitutes(a: &RealMatrix, b: &RealMatrix, c: &RealMatrix, s: &SylvesterSolution) -> bool {
        &(a * &s.x) + &(&s.y * b) == *c
    }

    #[test]
    fn detects_inconsistency() {
        let a = RealMatrix::from_ints(&[&[1], &[0]]);
        let b = RealMatrix::from_ints(&[&[1, 0]]);
        let c = RealMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        let check = consistent(&a, &b, &c).unwrap();
        assert!(!check.holds);
        assert_eq!(check.residual, RealMatrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert_eq!(
            solve_particular(&a, &b, &c),
            Err(Error::Inconsistent { residual: check.residual })
        );
    }

    #[test]
    fn solves_rank_deficient_instance() {
        // Coefficients of rank 2 with a consistent right-hand side; the
        // chosen U matches a known solution pair.
        let u = RealMatrix::parse(&[&["1/2", "1/2"], &["-1", "1/2"]]);
        let params = SylvesterParams {
            u,
            v: RealMatrix::zeros(2, 3),
            w: RealMatrix::zeros(3, 2),
        };
        let sol = solve(&a2(), &a4(), &a1(), &params).unwrap();
        assert_eq!(
            sol.x,
            RealMatrix::parse(&[&["3/2", "13/6", "29/9"], &["-1", "7/6", "31/18"]])
        );
        assert_eq!(
            sol.y,
            RealMatrix::parse(&[&["3/2", "-1/2"], &["0", "-1/2"], &["3/2", "-4"]])
        );
        assert!(substitutes(&a2(), &a4(), &a1(), &sol));
    }

    #[test]
    fn zero_rhs_gives_homogeneous_solutions() {
        let c = RealMatrix::zeros(3, 3);
        assert!(consistent(&a2(), &a4(), &c).unwrap().holds);

        let sol = solve_particular(&a2(), &a4(), &c).unwrap();
        assert!(sol.x.is_zero());
        assert!(sol.y.is_zero());

        let u = RealMatrix::from_ints(&[&[1, -2], &[0, 3]]);
        let params = SylvesterParams {
            u: u.clone(),
            v: RealMatrix::zeros(2, 3),
            w: RealMatrix::zeros(3, 2),
        };
        let sol = solve(&a2(), &a4(), &c, &params).unwrap();
        assert_eq!(sol.x, &u * &a4());
        assert_eq!(sol.y, -(&a2() * &u));
        assert!(substitutes(&a2(), &a4(), &c, &sol));
    }

    #[test]
    fn full_rank_coefficients_absorb_parameters() {
        // A of full column rank kills the V term; B of full row rank kills
        // the W term.
        let c = a1();
        let v = RealMatrix::from_ints(&[&[7, -3, 2], &[1, 1, 4]]);
        let w = RealMatrix::from_ints(&[&[5, 5], &[-2, 0], &[1, 9]]);
        let zero = SylvesterParams::zeros_for(&a2(), &a4());
        let with_vw = SylvesterParams { u: zero.u.clone(), v, w };
        assert_eq!(
            solve(&a2(), &a4(), &c, &zero).unwrap(),
            solve(&a2(), &a4(), &c, &with_vw).unwrap()
        );
    }

    #[test]
    fn rejects_malformed_shapes() {
        let c_bad = RealMatrix::zeros(2, 3);
        assert!(consistent(&a2(), &a4(), &c_bad).is_err());
        assert!(solve_particular(&a2(), &a4(), &c_bad).is_err());

        let mut params = SylvesterParams::zeros_for(&a2(), &a4());
        params.u = RealMatrix::zeros(3, 3);
        assert!(matches!(solve(&a2(), &a4(), &a1(), &params), Err(Error::Dimension(_))));
    }

    #[test]
    fn square_invertible_coefficients() {
        // With invertible A the equation is solvable for any C, and with
        // zero parameters Y = 0.
        let a = RealMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let b = RealMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        let c = RealMatrix::from_ints(&[&[5, 6], &[7, 8]]);
        let sol = solve_particular(&a, &b, &c).unwrap();
        assert_eq!(sol.x, &a.inverse().unwrap() * &c);
        assert!(sol.y.is_zero());
        assert!(substitutes(&a, &b, &c, &sol));
    }
}
