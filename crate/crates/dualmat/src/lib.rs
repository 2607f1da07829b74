//! Exact linear algebra over the dual numbers.
//!
//! A dual number is `a + eps b` with `eps^2 = 0`; a dual matrix is a pair of
//! rational matrices `A + eps B` multiplied by the same rule. Everything in
//! this crate is computed over arbitrary-precision rationals, so every
//! equality test is exact: there are no tolerances anywhere.
//!
//! The crate provides rank-revealing decompositions of dual matrices, the
//! dual Moore-Penrose generalized inverse computed by three independent
//! routes, the coupled matrix equation `AX + YB = C`, predicates for dual
//! idempotent and dual EP matrices, and samplers for partial
//! (Penrose-subset) inverses together with a membership report over their
//! products.

pub mod decomp;
pub mod dmpgi;
pub mod dual;
pub mod error;
pub mod matrix;
pub mod membership;
pub mod random;
pub mod scalar;
pub mod special;
pub mod sylvester;

pub use decomp::DualRankFactors;
pub use dual::{penrose_profile, DualMatrix, PenroseProfile};
pub use error::Error;
pub use matrix::{FullRankFactors, RealMatrix, ResidualCheck};
pub use membership::{verify_mixed_membership, ClaimReport, Counterexample, MembershipReport};
pub use scalar::{rat, DualScalar, Rational};
pub use sylvester::{SylvesterParams, SylvesterSolution};
