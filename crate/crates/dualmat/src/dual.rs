//! Dual matrices `A + eps B` and the four dual Penrose equations.
//!
//! The product rule follows from `eps^2 = 0`:
//!
//! ```text
//! (A0 + eps A1)(B0 + eps B1) = A0 B0 + eps (A0 B1 + A1 B0)
//! ```
//!
//! For a dual matrix `A` and a candidate inverse `X`, the four Penrose
//! equations are
//!
//! ```text
//! (1) A X A = A      (2) X A X = X
//! (3) (A X)^T = A X  (4) (X A)^T = X A
//! ```
//!
//! and [`penrose_profile`] reports exactly which of them hold. A candidate
//! satisfying all four is the dual Moore-Penrose inverse, which is unique
//! when it exists but does not exist for every dual matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::matrix::RealMatrix;

/// A dual matrix: a pair of equally shaped rational matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct DualMatrix {
    real: RealMatrix,
    dual: RealMatrix,
}

impl DualMatrix {
    /// Pairs a real and a dual part.
    ///
    /// # Errors
    ///
    /// Dimension error when the parts have different shapes.
    pub fn new(real: RealMatrix, dual: RealMatrix) -> Result<Self, Error> {
        if real.shape() != dual.shape() {
            return Err(Error::dim(format!(
                "real part is {}x{} but dual part is {}x{}",
                real.rows(),
                real.cols(),
                dual.rows(),
                dual.cols()
            )));
        }
        Ok(DualMatrix { real, dual })
    }

    /// Embeds a real matrix with zero dual part.
    pub fn from_real(real: RealMatrix) -> Self {
        let dual = RealMatrix::zeros(real.rows(), real.cols());
        DualMatrix { real, dual }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DualMatrix::from_real(RealMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        DualMatrix::from_real(RealMatrix::identity(n))
    }

    pub fn real(&self) -> &RealMatrix {
        &self.real
    }

    pub fn dual(&self) -> &RealMatrix {
        &self.dual
    }

    pub fn rows(&self) -> usize {
        self.real.rows()
    }

    pub fn cols(&self) -> usize {
        self.real.cols()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.real.shape()
    }

    pub fn is_square(&self) -> bool {
        self.real.is_square()
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.dual.is_zero()
    }

    /// True when both parts are symmetric, i.e. the dual matrix equals its
    /// transpose.
    pub fn is_symmetric(&self) -> bool {
        self.real.is_symmetric() && self.dual.is_symmetric()
    }

    /// Transpose acts on each part.
    pub fn transpose(&self) -> DualMatrix {
        DualMatrix { real: self.real.transpose(), dual: self.dual.transpose() }
    }

    /// Dual sum.
    ///
    /// # Errors
    ///
    /// Dimension error when shapes differ.
    pub fn try_add(&self, rhs: &DualMatrix) -> Result<DualMatrix, Error> {
        Ok(DualMatrix {
            real: self.real.try_add(&rhs.real)?,
            dual: self.dual.try_add(&rhs.dual)?,
        })
    }

    /// Dual difference.
    ///
    /// # Errors
    ///
    /// Dimension error when shapes differ.
    pub fn try_sub(&self, rhs: &DualMatrix) -> Result<DualMatrix, Error> {
        Ok(DualMatrix {
            real: self.real.try_sub(&rhs.real)?,
            dual: self.dual.try_sub(&rhs.dual)?,
        })
    }

    /// Dual product `(A0 B0, A0 B1 + A1 B0)`.
    ///
    /// # Errors
    ///
    /// Dimension error when inner dimensions disagree.
    pub fn try_mul(&self, rhs: &DualMatrix) -> Result<DualMatrix, Error> {
        let real = self.real.try_mul(&rhs.real)?;
        let dual = &self.real * &rhs.dual + &self.dual * &rhs.real;
        Ok(DualMatrix { real, dual })
    }

    /// Inverse of a square dual matrix with invertible real part:
    ///
    /// ```text
    /// (A0 + eps A1)^-1 = A0^-1 - eps A0^-1 A1 A0^-1
    /// ```
    ///
    /// # Errors
    ///
    /// Dimension error when not square; [`Error::Singular`] when the real
    /// part is singular (such dual matrices have no inverse).
    pub fn inverse(&self) -> Result<DualMatrix, Error> {
        let r = self.real.inverse()?;
        let dual = -(&(&r * &self.dual) * &r);
        Ok(DualMatrix { real: r, dual })
    }
}

impl fmt::Display for DualMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + eps {}", self.real, self.dual)
    }
}

impl fmt::Debug for DualMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows(), self.cols(), self)
    }
}

macro_rules! dual_binops {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&DualMatrix> for &DualMatrix {
            type Output = DualMatrix;
            fn $method(self, rhs: &DualMatrix) -> DualMatrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<DualMatrix> for &DualMatrix {
            type Output = DualMatrix;
            fn $method(self, rhs: DualMatrix) -> DualMatrix {
                self.$method(&rhs)
            }
        }
        impl $trait<&DualMatrix> for DualMatrix {
            type Output = DualMatrix;
            fn $method(self, rhs: &DualMatrix) -> DualMatrix {
                (&self).$method(rhs)
            }
        }
        impl $trait<DualMatrix> for DualMatrix {
            type Output = DualMatrix;
            fn $method(self, rhs: DualMatrix) -> DualMatrix {
                (&self).$method(&rhs)
            }
        }
    };
}

dual_binops!(Add, add, try_add);
dual_binops!(Sub, sub, try_sub);
dual_binops!(Mul, mul, try_mul);

impl Neg for &DualMatrix {
    type Output = DualMatrix;
    fn neg(self) -> DualMatrix {
        DualMatrix { real: -&self.real, dual: -&self.dual }
    }
}

impl Neg for DualMatrix {
    type Output = DualMatrix;
    fn neg(self) -> DualMatrix {
        -&self
    }
}

/// Subset of the dual Penrose equations {1,2,3,4} satisfied by a candidate.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PenroseProfile {
    mask: u8,
}

impl PenroseProfile {
    pub const FULL: PenroseProfile = PenroseProfile { mask: 0b1111 };

    pub fn from_flags(flags: [bool; 4]) -> Self {
        let mask = flags
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |m, (i, _)| m | 1 << i);
        PenroseProfile { mask }
    }

    /// Whether equation `eq` (one of 1..=4) holds.
    ///
    /// # Panics
    ///
    /// Panics when `eq` is outside 1..=4.
    pub fn satisfies(self, eq: u8) -> bool {
        assert!((1..=4).contains(&eq), "Penrose equations are numbered 1..=4");
        self.mask >> (eq - 1) & 1 == 1
    }

    pub fn contains_all(self, eqs: &[u8]) -> bool {
        eqs.iter().all(|&e| self.satisfies(e))
    }

    pub fn is_full(self) -> bool {
        self.mask == 0b1111
    }

    /// The satisfied equation numbers in increasing order.
    pub fn equations(self) -> Vec<u8> {
        (1..=4).filter(|&e| self.satisfies(e)).collect()
    }
}

impl fmt::Display for PenroseProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.equations().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PenroseProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Evaluates the four dual Penrose equations for `(a, x)`.
///
/// # Errors
///
/// Dimension error unless `x` has the transposed shape of `a`.
pub fn penrose_profile(a: &DualMatrix, x: &DualMatrix) -> Result<PenroseProfile, Error> {
    if x.shape() != (a.cols(), a.rows()) {
        return Err(Error::dim(format!(
            "candidate must be {}x{}, got {}x{}",
            a.cols(),
            a.rows(),
            x.rows(),
            x.cols()
        )));
    }
    let ax = a * x;
    let xa = x * a;
    Ok(PenroseProfile::from_flags([
        &ax * a == *a,
        &xa * x == *x,
        ax.transpose() == ax,
        xa.transpose() == xa,
    ]))
}
