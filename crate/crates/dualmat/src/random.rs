//! Seeded generators for randomized suites.
//!
//! Entries are small integers (range -3..=3) so products stay readable and
//! rank rejection loops terminate fast. Structured generators build
//! instances whose defining property holds by construction: consistency
//! from a factor product, idempotency from a conjugated projector, EP from
//! a symmetric seed, non-EP from a provably skew column/row-space pair.
//! Everything is deterministic in the caller-supplied RNG.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomp::DualRankFactors;
use crate::dual::DualMatrix;
use crate::matrix::RealMatrix;
use crate::scalar::Rational;

/// A reproducible RNG for the given seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One integer entry in -3..=3.
pub fn small_entry<R: Rng>(rng: &mut R) -> Rational {
    Rational::from_integer(rng.gen_range(-3i64..=3).into())
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RealMatrix {
    RealMatrix::from_fn(rows, cols, |_, _| small_entry(rng))
}

pub fn dual_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> DualMatrix {
    DualMatrix::new(matrix(rng, rows, cols), matrix(rng, rows, cols))
        .expect("parts share a shape")
}

/// Square dual matrix with symmetric real and dual parts.
pub fn symmetric_dual<R: Rng>(rng: &mut R, n: usize) -> DualMatrix {
    let sym = |rng: &mut R| {
        let mut m = RealMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let v = small_entry(rng);
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        m
    };
    let real = sym(rng);
    let dual = sym(rng);
    DualMatrix::new(real, dual).expect("parts share a shape")
}

/// m x r matrix of rank r (full column rank), by rejection.
pub fn full_col_rank<R: Rng>(rng: &mut R, m: usize, r: usize) -> RealMatrix {
    assert!(r >= 1 && r <= m, "need 1 <= r <= m");
    loop {
        let c = matrix(rng, m, r);
        if c.rank() == r {
            return c;
        }
    }
}

/// r x n matrix of rank r (full row rank), by rejection.
pub fn full_row_rank<R: Rng>(rng: &mut R, r: usize, n: usize) -> RealMatrix {
    full_col_rank(rng, n, r).transpose()
}

pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> RealMatrix {
    full_col_rank(rng, n, n)
}

/// m x n matrix of exact rank r.
pub fn matrix_with_rank<R: Rng>(rng: &mut R, m: usize, n: usize, r: usize) -> RealMatrix {
    assert!(r >= 1 && r <= m.min(n), "need 1 <= r <= min(m, n)");
    &full_col_rank(rng, m, r) * &full_row_rank(rng, r, n)
}

/// Square dual matrix with invertible real part.
pub fn invertible_dual<R: Rng>(rng: &mut R, n: usize) -> DualMatrix {
    DualMatrix::new(invertible(rng, n), matrix(rng, n, n)).expect("parts share a shape")
}

/// Valid rank-r factors: left m x r (column full rank), right r x n (row
/// full rank), random dual parts.
pub fn factors<R: Rng>(rng: &mut R, m: usize, n: usize, r: usize) -> DualRankFactors {
    let left = DualMatrix::new(full_col_rank(rng, m, r), matrix(rng, m, r))
        .expect("parts share a shape");
    let right = DualMatrix::new(full_row_rank(rng, r, n), matrix(rng, r, n))
        .expect("parts share a shape");
    DualRankFactors::new(left, right).expect("generated factors satisfy rank conditions")
}

/// Dual matrix with rank-r real part that is guaranteed to admit a rank
/// decomposition (it is built as a factor product).
pub fn consistent_dual<R: Rng>(rng: &mut R, m: usize, n: usize, r: usize) -> DualMatrix {
    factors(rng, m, n, r).product()
}

/// Dual matrix with rank-r real part whose decomposition existence test
/// fails. Requires r < m and r < n; at full row or column rank every dual
/// part is consistent.
pub fn inconsistent_dual<R: Rng>(rng: &mut R, m: usize, n: usize, r: usize) -> DualMatrix {
    assert!(r < m && r < n, "full-rank real parts are always consistent");
    let a0 = matrix_with_rank(rng, m, n, r);
    loop {
        let a1 = matrix(rng, m, n);
        let a = DualMatrix::new(a0.clone(), a1).expect("parts share a shape");
        if !crate::dmpgi::exists(&a).holds {
            return a;
        }
    }
}

/// Dual idempotent of rank r: a real projector `F (G F)^-1 G` conjugated
/// by a random invertible dual matrix, which preserves idempotency and
/// spreads a nonzero dual part.
pub fn dual_idempotent<R: Rng>(rng: &mut R, n: usize, r: usize) -> DualMatrix {
    assert!(r >= 1 && r <= n, "need 1 <= r <= n");
    let projector = loop {
        let f = full_col_rank(rng, n, r);
        let g = full_row_rank(rng, r, n);
        if let Ok(inv) = (&g * &f).inverse() {
            break &(&f * &inv) * &g;
        }
    };
    let x = invertible_dual(rng, n);
    let xi = x.inverse().expect("real part is invertible");
    &(&x * &DualMatrix::from_real(projector)) * &xi
}

/// EP instance by construction: `A0 = C^T C` is symmetric of rank r and
/// `A1 = A0 M + (A0 M)^T`; the pair is consistent and the dual matrix
/// commutes with its Moore-Penrose inverse.
pub fn ep_dual<R: Rng>(rng: &mut R, n: usize, r: usize) -> DualMatrix {
    let c = full_row_rank(rng, r, n);
    let a0 = &c.transpose() * &c;
    let m = matrix(rng, n, n);
    let a0m = &a0 * &m;
    let a1 = &a0m + &a0m.transpose();
    DualMatrix::new(a0, a1).expect("parts share a shape")
}

/// Non-EP instance by construction: the real part's column space provably
/// differs from its row space (checked via the rank of `[F | G^T]`), so
/// the two Moore-Penrose projectors differ. The dual part keeps the
/// instance consistent. Requires r < n.
pub fn non_ep_dual<R: Rng>(rng: &mut R, n: usize, r: usize) -> DualMatrix {
    assert!(r >= 1 && r < n, "invertible real parts are always EP");
    loop {
        let f = full_col_rank(rng, n, r);
        let g = full_row_rank(rng, r, n);
        let gt = g.transpose();
        let stacked = RealMatrix::from_fn(n, 2 * r, |i, j| {
            if j < r {
                f.get(i, j).clone()
            } else {
                gt.get(i, j - r).clone()
            }
        });
        if stacked.rank() == r {
            continue; // column space equals row space; reject
        }
        let a0 = &f * &g;
        let a1 = &(&f * &matrix(rng, r, n)) + &(&matrix(rng, n, r) * &g);
        return DualMatrix::new(a0, a1).expect("parts share a shape");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{decomp, dmpgi, special};

    #[test]
    fn ranked_generation_is_exact() {
        let mut r = rng(1);
        for _ in 0..20 {
            let m = matrix_with_rank(&mut r, 4, 3, 2);
            assert_eq!(m.rank(), 2);
            assert_eq!(invertible(&mut r, 3).rank(), 3);
        }
    }

    #[test]
    fn consistency_generators_match_their_labels() {
        let mut r = rng(2);
        for _ in 0..20 {
            assert!(decomp::exists(&consistent_dual(&mut r, 3, 4, 2)).unwrap().holds);
            assert!(!dmpgi::exists(&inconsistent_dual(&mut r, 3, 4, 2)).holds);
        }
    }

    #[test]
    fn idempotent_generator_produces_idempotents() {
        let mut r = rng(3);
        for _ in 0..10 {
            let a = dual_idempotent(&mut r, 4, 2);
            assert!(special::is_dual_idempotent(&a).unwrap());
            assert_eq!(a.real().rank(), 2);
        }
    }

    #[test]
    fn ep_generators_match_their_labels() {
        let mut r = rng(4);
        for _ in 0..10 {
            assert!(special::is_dual_ep(&ep_dual(&mut r, 4, 2)).unwrap());
            assert!(!special::is_dual_ep(&non_ep_dual(&mut r, 4, 2)).unwrap());
        }
    }

    #[test]
    fn symmetric_generator_is_symmetric() {
        let mut r = rng(5);
        let s = symmetric_dual(&mut r, 3);
        assert!(s.is_symmetric());
    }

    #[test]
    fn seeding_is_reproducible() {
        let a = consistent_dual(&mut rng(42), 3, 3, 2);
        let b = consistent_dual(&mut rng(42), 3, 3, 2);
        assert_eq!(a, b);
    }
}
