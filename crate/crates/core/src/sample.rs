//! Seeded random group elements with small rational entries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::RatMatrix;
use crate::rational::Rational;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
pub fn small_rational(rng: &mut SampleRng) -> Rational {
    Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn small_nonzero_rational(rng: &mut SampleRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn small_int(rng: &mut SampleRng, bound: i64) -> Rational {
    Rational::from_int(rng.gen_range(-bound..=bound))
}

pub fn random_matrix(rng: &mut SampleRng, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

/// `I + c v vᵗ J`, which preserves `J = J_{2n}`.
pub fn symplectic_transvection(rng: &mut SampleRng, n: usize) -> RatMatrix {
    let v = random_matrix(rng, 2 * n, 1);
    let c = small_nonzero_rational(rng);
    let j = RatMatrix::symplectic_j(n);
    &RatMatrix::identity(2 * n) + &(&(&v * &v.transpose()) * &j).scale(&c)
}

/// Product of up to six transvections.
pub fn random_symplectic(rng: &mut SampleRng, n: usize) -> RatMatrix {
    let count = rng.gen_range(1..=6);
    (0..count).fold(RatMatrix::identity(2 * n), |acc, _| &acc * &symplectic_transvection(rng, n))
}

/// An element of `SL_2(ℚ)` as a product of elementary matrices.
pub fn random_sl2(rng: &mut SampleRng) -> RatMatrix {
    let mut g = RatMatrix::identity(2);
    for _ in 0..rng.gen_range(2..=4) {
        let c = small_nonzero_rational(rng);
        let e = if rng.gen_bool(0.5) {
            RatMatrix::from_fn(2, 2, |i, j| match (i, j) {
                (0, 1) => c.clone(),
                (a, b) if a == b => Rational::one(),
                _ => Rational::zero(),
            })
        } else {
            RatMatrix::from_fn(2, 2, |i, j| match (i, j) {
                (1, 0) => c.clone(),
                (a, b) if a == b => Rational::one(),
                _ => Rational::zero(),
            })
        };
        g = &g * &e;
    }
    // a diagonal factor keeps the sample away from the unipotent subgroup
    let d = small_nonzero_rational(rng);
    let diag = RatMatrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => d.clone(),
        (1, 1) => d.recip(),
        _ => Rational::zero(),
    });
    &g * &diag
}

/// A reflection `I - 2 v vᵗ G / (vᵗ G v)` orthogonal for the symmetric form `G`,
/// transposed so that `g G gᵗ = G`.
pub fn orthogonal_reflection(rng: &mut SampleRng, gram: &RatMatrix) -> RatMatrix {
    let n = gram.rows();
    loop {
        let v = random_matrix(rng, n, 1);
        let norm = (&(&v.transpose() * gram) * &v).get(0, 0).clone();
        if norm.is_zero() {
            continue;
        }
        let c = Rational::from_int(2) * norm.recip();
        let r = &RatMatrix::identity(n) - &(&(&v * &v.transpose()) * gram).scale(&c);
        return r.transpose();
    }
}

/// Product of an even number of reflections for `gram`, so of determinant 1.
pub fn random_orthogonal(rng: &mut SampleRng, gram: &RatMatrix) -> RatMatrix {
    let count = 2 * rng.gen_range(1..=3);
    (0..count).fold(RatMatrix::identity(gram.rows()), |acc, _| &acc * &orthogonal_reflection(rng, gram))
}
