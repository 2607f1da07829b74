//! Error type shared by every module in the crate.

use crate::matrix::RealMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix has rank zero")]
    RankZero,

    #[error("real part is not column full rank")]
    NotColumnFullRank,

    #[error("real part is not row full rank")]
    NotRowFullRank,

    #[error("equation AX + YB = C is inconsistent")]
    Inconsistent { residual: RealMatrix },

    #[error("dual rank decomposition does not exist")]
    NoDecomposition { residual: RealMatrix },

    #[error("dual Moore-Penrose inverse does not exist")]
    NoDmpgi { residual: RealMatrix },

    #[error("matrix is not dual idempotent")]
    NotIdempotent,

    /// Two formulas that must agree algebraically produced different
    /// matrices. This indicates a genuine implementation bug and is
    /// surfaced as an error so test suites can report it.
    #[error("formula discrepancy in {0}")]
    FormulaDiscrepancy(&'static str),
}

impl Error {
    pub(crate) fn dim(detail: impl Into<String>) -> Self {
        Error::Dimension(detail.into())
    }
}
