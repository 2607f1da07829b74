//! Exact rational matrices: reduced row echelon form, full rank
//! decomposition, and the Moore-Penrose inverse.
//!
//! Every algorithm here is division-exact over the rationals; a pivot is
//! any nonzero entry, so no magnitude-based pivoting is needed and results
//! are bit-reproducible. The Moore-Penrose inverse comes from the full rank
//! decomposition `A = F G`:
//!
//! ```text
//! pinv(A) = G^T (G G^T)^-1 (F^T F)^-1 F^T
//! ```
//!
//! where the two Gram matrices are invertible because `F` has full column
//! rank and `G` has full row rank.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::scalar::Rational;

/// Dense matrix of rationals, row-major. Dimensions are always positive.
#[derive(Clone, PartialEq, Eq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Full rank decomposition `A = F G` with `F` of full column rank and `G`
/// of full row rank, both of rank `r = rank(A)`.
///
/// `F` is the pivot columns of `A` in order; `G` is the nonzero rows of
/// `rref(A)`. This choice is canonical: equal inputs produce equal factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullRankFactors {
    pub f: RealMatrix,
    pub g: RealMatrix,
}

impl FullRankFactors {
    pub fn rank(&self) -> usize {
        self.f.cols
    }
}

/// Outcome of a zero-residual test: `holds` is true exactly when
/// `residual` is the zero matrix. The residual is kept for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualCheck {
    pub holds: bool,
    pub residual: RealMatrix,
}

impl ResidualCheck {
    pub fn of(residual: RealMatrix) -> Self {
        ResidualCheck { holds: residual.is_zero(), residual }
    }
}

impl RealMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// # Errors
    ///
    /// Dimension error when either dimension is zero or the entry count
    /// does not equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::dim("matrix dimensions must be positive"));
        }
        if data.len() != rows * cols {
            return Err(Error::dim(format!(
                "a {rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(RealMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows.
    ///
    /// # Errors
    ///
    /// Dimension error when the grid is empty or ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::dim("ragged rows"));
        }
        RealMatrix::new(m, n, rows.into_iter().flatten().collect())
    }

    /// Integer-entry convenience for fixtures.
    ///
    /// # Panics
    ///
    /// Panics on an empty or ragged grid.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let grid = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        RealMatrix::from_rows(grid).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Fraction-string convenience for fixtures, entries like `"-4/9"`.
    ///
    /// # Panics
    ///
    /// Panics on malformed entries or a ragged grid.
    pub fn parse(rows: &[&[&str]]) -> Self {
        let grid = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse().unwrap_or_else(|_| panic!("bad rational literal {s:?}")))
                    .collect()
            })
            .collect();
        RealMatrix::from_rows(grid).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RealMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        RealMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.data[i * self.cols + j] = value;
    }

    /// Row `i` as a slice of `cols` entries.
    pub fn row(&self, i: usize) -> &[Rational] {
        assert!(i < self.rows, "row out of range");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> RealMatrix {
        RealMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rational) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    /// Matrix sum.
    ///
    /// # Errors
    ///
    /// Dimension error when shapes differ.
    pub fn try_add(&self, rhs: &RealMatrix) -> Result<RealMatrix, Error> {
        self.zip_check("add", rhs)?;
        Ok(RealMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j)))
    }

    /// Matrix difference.
    ///
    /// # Errors
    ///
    /// Dimension error when shapes differ.
    pub fn try_sub(&self, rhs: &RealMatrix) -> Result<RealMatrix, Error> {
        self.zip_check("subtract", rhs)?;
        Ok(RealMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j)))
    }

    /// Matrix product.
    ///
    /// # Errors
    ///
    /// Dimension error when `self.cols != rhs.rows`.
    pub fn try_mul(&self, rhs: &RealMatrix) -> Result<RealMatrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(RealMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|t| self.get(i, t) * rhs.get(t, j)).sum()
        }))
    }

    fn zip_check(&self, what: &str, rhs: &RealMatrix) -> Result<(), Error> {
        if self.shape() != rhs.shape() {
            return Err(Error::dim(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Pivots are chosen as the first nonzero entry in each column, which
    /// keeps the elimination deterministic; exactness makes any nonzero
    /// pivot equally valid.
    pub fn rref(&self) -> (RealMatrix, Vec<usize>) {
        let mut r = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..r.cols {
            if row == r.rows {
                break;
            }
            let Some(p) = (row..r.rows).find(|&i| !r.get(i, col).is_zero()) else {
                continue;
            };
            r.swap_rows(row, p);
            let inv = r.get(row, col).clone().recip();
            r.scale_row(row, &inv);
            for i in 0..r.rows {
                if i != row && !r.get(i, col).is_zero() {
                    let factor = r.get(i, col).clone();
                    r.row_sub_scaled(i, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square nonsingular matrix, by Gauss-Jordan on `[A | I]`.
    ///
    /// # Errors
    ///
    /// Dimension error when not square; [`Error::Singular`] when rank
    /// deficient.
    pub fn inverse(&self) -> Result<RealMatrix, Error> {
        if !self.is_square() {
            return Err(Error::dim(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = RealMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        });
        let (red, pivots) = aug.rref();
        // [A | I] always has n pivots; A is invertible exactly when they
        // all land in the left block.
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(RealMatrix::from_fn(n, n, |i, j| red.get(i, j + n).clone()))
    }

    /// Full rank decomposition `A = F G` (pivot columns times nonzero rref
    /// rows).
    ///
    /// # Errors
    ///
    /// [`Error::RankZero`] for the zero matrix, which has no full-rank
    /// factor pair.
    pub fn full_rank_decompose(&self) -> Result<FullRankFactors, Error> {
        let (red, pivots) = self.rref();
        if pivots.is_empty() {
            return Err(Error::RankZero);
        }
        let r = pivots.len();
        let f = RealMatrix::from_fn(self.rows, r, |i, j| self.get(i, pivots[j]).clone());
        let g = RealMatrix::from_fn(r, self.cols, |i, j| red.get(i, j).clone());
        Ok(FullRankFactors { f, g })
    }

    /// Moore-Penrose inverse. Total: the zero matrix maps to the zero
    /// matrix of transposed shape.
    pub fn pinv(&self) -> RealMatrix {
        if self.is_zero() {
            return RealMatrix::zeros(self.cols, self.rows);
        }
        let FullRankFactors { f, g } = self
            .full_rank_decompose()
            .expect("nonzero matrix has positive rank");
        let gt = g.transpose();
        let ft = f.transpose();
        let g_gram = (&g * &gt).inverse().expect("G G^T is invertible for full row rank G");
        let f_gram = (&ft * &f).inverse().expect("F^T F is invertible for full column rank F");
        &(&gt * &g_gram) * &(&f_gram * &ft)
    }

    /// One draw from the {1}-inverse family
    /// `X = pinv(A) + (I - pinv(A) A) V + W (I - A pinv(A))`.
    ///
    /// Every output satisfies `A X A = A`; `V = W = 0` returns `pinv(A)`.
    ///
    /// # Errors
    ///
    /// Dimension error unless both `V` and `W` have the transposed shape
    /// of `A`.
    pub fn sample_one_inverse(&self, v: &RealMatrix, w: &RealMatrix) -> Result<RealMatrix, Error> {
        let want = (self.cols, self.rows);
        if v.shape() != want || w.shape() != want {
            return Err(Error::dim(format!(
                "parameters must be {}x{}, got {}x{} and {}x{}",
                want.0, want.1, v.rows, v.cols, w.rows, w.cols
            )));
        }
        let p = self.pinv();
        let left = &RealMatrix::identity(self.cols) - &(&p * self);
        let right = &RealMatrix::identity(self.rows) - &(self * &p);
        Ok(&(&p + &(&left * v)) + &(w * &right))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, s: &Rational) {
        for j in 0..self.cols {
            let k = i * self.cols + j;
            self.data[k] = &self.data[k] * s;
        }
    }

    /// row_i -= factor * row_src
    fn row_sub_scaled(&mut self, i: usize, src: usize, factor: &Rational) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            let k = i * self.cols + j;
            self.data[k] = &self.data[k] - &v;
        }
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

impl fmt::Display for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

// Debug output readable in assertion failures: `3x3 [[...], ...]`.
impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}

// Operator forms panic on shape mismatch; internal algorithm code uses them
// where shapes hold by construction, public entry points go through the
// checked try_* methods.
macro_rules! binops_all {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RealMatrix> for &RealMatrix {
            type Output = RealMatrix;
            fn $method(self, rhs: &RealMatrix) -> RealMatrix {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<RealMatrix> for &RealMatrix {
            type Output = RealMatrix;
            fn $method(self, rhs: RealMatrix) -> RealMatrix {
                self.$method(&rhs)
            }
        }
        impl $trait<&RealMatrix> for RealMatrix {
            type Output = RealMatrix;
            fn $method(self, rhs: &RealMatrix) -> RealMatrix {
                (&self).$method(rhs)
            }
        }
        impl $trait<RealMatrix> for RealMatrix {
            type Output = RealMatrix;
            fn $method(self, rhs: RealMatrix) -> RealMatrix {
                (&self).$method(&rhs)
            }
        }
    };
}

binops_all!(Add, add, try_add);
binops_all!(Sub, sub, try_sub);
binops_all!(Mul, mul, try_mul);

impl Neg for &RealMatrix {
    type Output = RealMatrix;
    fn neg(self) -> RealMatrix {
        RealMatrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }
}

impl Neg for RealMatrix {
    type Output = RealMatrix;
    fn neg(self) -> RealMatrix {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Shared fixture: a 3x3 rank-2 matrix with known factors and inverse.
    fn a0() -> RealMatrix {
        RealMatrix::from_ints(&[&[1, 2, 1], &[2, 1, 1], &[3, 3, 2]])
    }

    fn a2() -> RealMatrix {
        RealMatrix::from_ints(&[&[1, 2], &[2, 1], &[3, 3]])
    }

    fn a4() -> RealMatrix {
        RealMatrix::parse(&[&["1", "0", "1/3"], &["0", "1", "1/3"]])
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(RealMatrix::new(0, 3, vec![]), Err(Error::Dimension(_))));
        assert!(matches!(RealMatrix::new(2, 0, vec![]), Err(Error::Dimension(_))));
        assert!(matches!(
            RealMatrix::new(2, 2, vec![Rational::zero(); 3]),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            RealMatrix::from_rows(vec![vec![Rational::zero()], vec![]]),
            Err(Error::Dimension(_))
        ));
        assert!(RealMatrix::from_rows(vec![]).is_err());
    }

    #[test]
    fn product_reconstructs_fixture() {
        assert_eq!(&a2() * &a4(), a0());
        assert_eq!(&RealMatrix::identity(3) * &a0(), a0());
        assert!(a2().try_mul(&a2()).is_err());
    }

    #[test]
    fn addition_shapes() {
        let z = RealMatrix::zeros(3, 2);
        assert_eq!(z.try_add(&a2()).unwrap(), a2());
        assert!(a2().try_add(&a4()).is_err());
        assert_eq!(&a2() - &a2(), RealMatrix::zeros(3, 2));
    }

    #[test]
    fn transpose_involution() {
        assert_eq!(a2().transpose().shape(), (2, 3));
        assert_eq!(a2().transpose().transpose(), a2());
        assert_eq!((&a2() * &a4()).transpose(), &a4().transpose() * &a2().transpose());
    }

    #[test]
    fn rref_of_fixture() {
        let (r, pivots) = a0().rref();
        let expected = RealMatrix::parse(&[
            &["1", "0", "1/3"],
            &["0", "1", "1/3"],
            &["0", "0", "0"],
        ]);
        assert_eq!(r, expected);
        assert_eq!(pivots, vec![0, 1]);
        // rref is idempotent
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn rref_corner_cases() {
        let z = RealMatrix::zeros(2, 3);
        let (r, pivots) = z.rref();
        assert_eq!(r, z);
        assert!(pivots.is_empty());

        let id = RealMatrix::identity(3);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(a0().rank(), 2);
        assert_eq!(RealMatrix::identity(4).rank(), 4);
        assert_eq!(RealMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(RealMatrix::from_ints(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn full_rank_decomposition_of_fixture() {
        let fr = a0().full_rank_decompose().unwrap();
        assert_eq!(fr.f, a2());
        assert_eq!(fr.g, a4());
        assert_eq!(fr.rank(), 2);
        assert_eq!(&fr.f * &fr.g, a0());
    }

    #[test]
    fn full_rank_decomposition_corner_cases() {
        assert_eq!(RealMatrix::zeros(2, 2).full_rank_decompose(), Err(Error::RankZero));

        let id = RealMatrix::identity(3);
        let fr = id.full_rank_decompose().unwrap();
        assert_eq!(fr.f, id);
        assert_eq!(fr.g, id);

        let col = RealMatrix::from_ints(&[&[2], &[4]]);
        let fr = col.full_rank_decompose().unwrap();
        assert_eq!(&fr.f * &fr.g, col);
        assert_eq!(fr.rank(), 1);
    }

    #[test]
    fn inverse_examples() {
        let m = RealMatrix::from_ints(&[&[14, 13], &[13, 14]]);
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv,
            RealMatrix::parse(&[&["14/27", "-13/27"], &["-13/27", "14/27"]])
        );
        assert_eq!(&m * &inv, RealMatrix::identity(2));

        assert_eq!(a0().inverse(), Err(Error::Singular));
        assert!(matches!(a2().inverse(), Err(Error::Dimension(_))));
    }

    #[test]
    fn pinv_of_tall_and_wide_fixtures() {
        assert_eq!(
            a2().pinv(),
            RealMatrix::parse(&[&["-4/9", "5/9", "1/9"], &["5/9", "-4/9", "1/9"]])
        );
        assert_eq!(
            a4().pinv(),
            RealMatrix::parse(&[
                &["10/11", "-1/11"],
                &["-1/11", "10/11"],
                &["3/11", "3/11"],
            ])
        );
    }

    #[test]
    fn pinv_corner_cases() {
        assert_eq!(RealMatrix::zeros(2, 3).pinv(), RealMatrix::zeros(3, 2));
        assert_eq!(RealMatrix::identity(3).pinv(), RealMatrix::identity(3));
        // For invertible matrices the pseudoinverse is the inverse.
        let m = RealMatrix::from_ints(&[&[14, 13], &[13, 14]]);
        assert_eq!(m.pinv(), m.inverse().unwrap());
    }

    #[test]
    fn pinv_satisfies_penrose_equations() {
        for a in [a0(), a2(), a4(), RealMatrix::from_ints(&[&[0, 1], &[0, 0]])] {
            let x = a.pinv();
            assert_eq!(&(&a * &x) * &a, a, "eq 1 for {a:?}");
            assert_eq!(&(&x * &a) * &x, x, "eq 2 for {a:?}");
            assert_eq!((&a * &x).transpose(), &a * &x, "eq 3 for {a:?}");
            assert_eq!((&x * &a).transpose(), &x * &a, "eq 4 for {a:?}");
            assert_eq!(x.pinv(), a, "pinv is an involution for {a:?}");
        }
    }

    #[test]
    fn pinv_projectors_match_factor_projectors() {
        // A pinv(A) = F pinv(F) and pinv(A) A = pinv(G) G for A = F G.
        let a = a0();
        let fr = a.full_rank_decompose().unwrap();
        let expected = RealMatrix::parse(&[
            &["2/3", "-1/3", "1/3"],
            &["-1/3", "2/3", "1/3"],
            &["1/3", "1/3", "2/3"],
        ]);
        assert_eq!(&a * &a.pinv(), expected);
        assert_eq!(&a * &a.pinv(), &fr.f * &fr.f.pinv());
        assert_eq!(&a.pinv() * &a, &fr.g.pinv() * &fr.g);
    }

    #[test]
    fn one_inverse_sampling() {
        let a = a0();
        let zero = RealMatrix::zeros(3, 3);
        assert_eq!(a.sample_one_inverse(&zero, &zero).unwrap(), a.pinv());

        let ones = RealMatrix::from_fn(3, 3, |_, _| Rational::from_integer(1.into()));
        let x = a.sample_one_inverse(&ones, &ones).unwrap();
        assert_ne!(x, a.pinv());
        assert_eq!(&(&a * &x) * &a, a);

        // For an invertible matrix the family collapses to the inverse.
        let m = RealMatrix::from_ints(&[&[14, 13], &[13, 14]]);
        let big = RealMatrix::from_ints(&[&[5, -7], &[11, 2]]);
        assert_eq!(m.sample_one_inverse(&big, &big).unwrap(), m.inverse().unwrap());

        assert!(a.sample_one_inverse(&RealMatrix::zeros(2, 2), &zero).is_err());
    }

    #[test]
    fn residual_check_reports_zero_test() {
        let check = ResidualCheck::of(RealMatrix::zeros(2, 2));
        assert!(check.holds);
        let check = ResidualCheck::of(RealMatrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert!(!check.holds);
    }

    #[test]
    fn display_is_compact() {
        let m = RealMatrix::parse(&[&["1/2", "-1"], &["0", "3"]]);
        assert_eq!(m.to_string(), "[[1/2, -1], [0, 3]]");
        assert_eq!(format!("{m:?}"), "2x2 [[1/2, -1], [0, 3]]");
    }
}
