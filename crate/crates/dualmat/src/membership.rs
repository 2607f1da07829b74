//! Sampling dual {i}-inverses of full-rank factors and randomized
//! verification of the mixed-inverse membership claims.
//!
//! For a factor pair `A = L R` (L of full column rank, R of full row
//! rank), products of generalized inverses of the factors land in
//! generalized-inverse classes of the product:
//!
//! * for a {1}-inverse X1 of L, and X2 of R in class {i}, i = 1, 2, 4,
//!   the product `X2 X1` is an {i}-inverse of A;
//! * for a {1}-inverse X2 of R, and X1 of L in class {j}, j = 1, 2, 3,
//!   the product `X2 X1` is a {j}-inverse of A.
//!
//! The samplers below produce exact closed-form members of each required
//! class. Null-space perturbations of the pseudoinverse give {1}-inverses
//! (automatically {1,2,4} on the left and {1,2,3} on the right, which is
//! stronger than the hypotheses need). Those families never leave
//! {1,2,4} resp. {1,2,3}, so the i = 4 and j = 3 cases draw from two
//! further families built from symmetric perturbations, which satisfy
//! exactly the one equation their claim needs.

use crate::decomp::DualRankFactors;
use crate::dmpgi;
use crate::dual::{penrose_profile, DualMatrix, PenroseProfile};
use crate::error::Error;
use crate::random;

/// A {1}-inverse of the column-full-rank matrix `f`, namely
/// `X = f+ + w (I - f f+)`. Every member satisfies `X f = I` exactly, so
/// the family lies in f's class {1,2,4}.
///
/// # Errors
///
/// `Error::NotColumnFullRank` when the real part of `f` has deficient
/// column rank, `Error::Dimension` when `w` is not shaped like the
/// transpose of `f`.
pub fn sample_dual_one_inverse_left(f: &DualMatrix, w: &DualMatrix) -> Result<DualMatrix, Error> {
    let pinv = dmpgi::pinv_col_full(f)?;
    let (m, r) = f.shape();
    if w.shape() != (r, m) {
        let (wr, wc) = w.shape();
        return Err(Error::dim(format!(
            "left inverse parameter must be {r}x{m}, got {wr}x{wc}"
        )));
    }
    let residual_proj = &DualMatrix::identity(m) - &(f * &pinv);
    Ok(&pinv + &(w * &residual_proj))
}

/// A {1}-inverse of the row-full-rank matrix `g`, namely
/// `X = g+ + (I - g+ g) v`. Every member satisfies `g X = I` exactly, so
/// the family lies in g's class {1,2,3}.
///
/// # Errors
///
/// `Error::NotRowFullRank` when the real part of `g` has deficient row
/// rank, `Error::Dimension` when `v` is not shaped like the transpose of
/// `g`.
pub fn sample_dual_one_inverse_right(g: &DualMatrix, v: &DualMatrix) -> Result<DualMatrix, Error> {
    let pinv = dmpgi::pinv_row_full(g)?;
    let (r, n) = g.shape();
    if v.shape() != (n, r) {
        let (vr, vc) = v.shape();
        return Err(Error::dim(format!(
            "right inverse parameter must be {n}x{r}, got {vr}x{vc}"
        )));
    }
    let null_proj = &DualMatrix::identity(n) - &(&pinv * g);
    Ok(&pinv + &(&null_proj * v))
}

/// A {4}-inverse of the row-full-rank matrix `g`, namely
/// `X = g+ + g^T (s + s^T)`. The parameter is symmetrized so any square
/// `s` of side `rank` is accepted; `X g` is then symmetric by
/// construction, while the other Penrose equations generally fail.
///
/// # Errors
///
/// `Error::NotRowFullRank` for deficient row rank, `Error::Dimension`
/// when `s` is not square of side equal to the row count of `g`.
pub fn sample_dual_four_inverse_right(g: &DualMatrix, s: &DualMatrix) -> Result<DualMatrix, Error> {
    let pinv = dmpgi::pinv_row_full(g)?;
    let r = g.shape().0;
    if s.shape() != (r, r) {
        let (sr, sc) = s.shape();
        return Err(Error::dim(format!(
            "symmetric parameter must be {r}x{r}, got {sr}x{sc}"
        )));
    }
    let sym = s + &s.transpose();
    Ok(&pinv + &(&g.transpose() * &sym))
}

/// A {3}-inverse of the column-full-rank matrix `f`, namely
/// `X = f+ + (s + s^T) f^T`; `f X` is symmetric by construction.
///
/// # Errors
///
/// `Error::NotColumnFullRank` for deficient column rank,
/// `Error::Dimension` when `s` is not square of side equal to the column
/// count of `f`.
pub fn sample_dual_three_inverse_left(f: &DualMatrix, s: &DualMatrix) -> Result<DualMatrix, Error> {
    let pinv = dmpgi::pinv_col_full(f)?;
    let r = f.shape().1;
    if s.shape() != (r, r) {
        let (sr, sc) = s.shape();
        return Err(Error::dim(format!(
            "symmetric parameter must be {r}x{r}, got {sr}x{sc}"
        )));
    }
    let sym = s + &s.transpose();
    Ok(&pinv + &(&sym * &f.transpose()))
}

/// Outcome of checking one membership claim over every sample.
#[derive(Clone, Debug, PartialEq)]
pub struct ClaimReport {
    /// Claim code: the letter says which factor's inverse class varies
    /// ("a" varies the right factor against a left {1}-inverse, "b"
    /// varies the left factor against a right {1}-inverse), the digit is
    /// the Penrose equation the product must satisfy.
    pub label: &'static str,
    /// Penrose equation checked on the product candidate.
    pub equation: u8,
    pub passes: usize,
    pub failures: usize,
    /// Earliest failing sample, if any. Exact arithmetic leaves no room
    /// for spurious failures; a counterexample here disproves the claim.
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    /// Zero-based index of the sample that failed.
    pub sample: usize,
    pub candidate: DualMatrix,
    pub profile: PenroseProfile,
}

/// Aggregate report of [`verify_mixed_membership`], reproducible from
/// (factors, samples, seed).
#[derive(Clone, Debug, PartialEq)]
pub struct MembershipReport {
    pub samples: usize,
    pub seed: u64,
    /// One entry per claim, in the fixed order a1, a2, a4, b1, b2, b3.
    pub claims: Vec<ClaimReport>,
}

impl MembershipReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.failures == 0)
    }
}

enum RightFamily {
    One,
    Four,
}

enum LeftFamily {
    One,
    Three,
}

struct ClaimDef {
    label: &'static str,
    equation: u8,
    right: RightFamily,
    left: LeftFamily,
}

const CLAIMS: [ClaimDef; 6] = [
    ClaimDef { label: "a1", equation: 1, right: RightFamily::One, left: LeftFamily::One },
    ClaimDef { label: "a2", equation: 2, right: RightFamily::One, left: LeftFamily::One },
    ClaimDef { label: "a4", equation: 4, right: RightFamily::Four, left: LeftFamily::One },
    ClaimDef { label: "b1", equation: 1, right: RightFamily::One, left: LeftFamily::One },
    ClaimDef { label: "b2", equation: 2, right: RightFamily::One, left: LeftFamily::One },
    ClaimDef { label: "b3", equation: 3, right: RightFamily::One, left: LeftFamily::Three },
];

/// Randomized check of all six membership claims on one factor pair.
///
/// For each of `samples` rounds and each claim, fresh parameters with
/// small integer entries are drawn from the claim's hypothesis family,
/// the candidate `X2 X1` is formed, and its Penrose profile against the
/// product `left * right` is tested for the claimed equation. Counts and
/// the first counterexample (lowest sample index) are reported per claim;
/// the report is deterministic in the seed.
pub fn verify_mixed_membership(f: &DualRankFactors, samples: usize, seed: u64) -> MembershipReport {
    let a = f.product();
    let left = f.left();
    let right = f.right();
    let (m, r) = left.shape();
    let n = right.shape().1;
    let mut rng = random::rng(seed);
    let mut claims: Vec<ClaimReport> = CLAIMS
        .iter()
        .map(|def| ClaimReport {
            label: def.label,
            equation: def.equation,
            passes: 0,
            failures: 0,
            first_counterexample: None,
        })
        .collect();
    for sample in 0..samples {
        for (def, report) in CLAIMS.iter().zip(&mut claims) {
            let x2 = match def.right {
                RightFamily::One => {
                    sample_dual_one_inverse_right(right, &random::dual_matrix(&mut rng, n, r))
                }
                RightFamily::Four => {
                    sample_dual_four_inverse_right(right, &random::symmetric_dual(&mut rng, r))
                }
            }
            .expect("validated factors accept generated parameters");
            let x1 = match def.left {
                LeftFamily::One => {
                    sample_dual_one_inverse_left(left, &random::dual_matrix(&mut rng, r, m))
                }
                LeftFamily::Three => {
                    sample_dual_three_inverse_left(left, &random::symmetric_dual(&mut rng, r))
                }
            }
            .expect("validated factors accept generated parameters");
            let candidate = &x2 * &x1;
            let profile =
                penrose_profile(&a, &candidate).expect("candidate shape is the transpose of a");
            if profile.satisfies(def.equation) {
                report.passes += 1;
            } else {
                report.failures += 1;
                if report.first_counterexample.is_none() {
                    report.first_counterexample =
                        Some(Counterexample { sample, candidate, profile });
                }
            }
        }
    }
    MembershipReport { samples, seed, claims }
}
