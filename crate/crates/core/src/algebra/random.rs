//! Seeded randomness. Every random choice in the crate flows through a
//! ChaCha stream derived from an explicit root seed, so results never depend
//! on scheduling.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{monomial_basis, HomogeneousPolynomial, Rational};

/// Default bound `B` for coefficients drawn uniformly from `[-B, B]`.
pub const DEFAULT_BOUND: i64 = 50;

pub type SeededRng = ChaCha8Rng;

/// Independent stream number `index` under `seed`.
pub fn stream(seed: u64, index: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// SplitMix64 finalizer applied to `seed ^ tag`; used to derive child seeds.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn integer(rng: &mut SeededRng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.random_range(-bound..=bound)))
}

pub fn nonzero_integer(rng: &mut SeededRng, bound: i64) -> Rational {
    loop {
        let v = rng.random_range(-bound..=bound);
        if v != 0 {
            return Rational::from_integer(BigInt::from(v));
        }
    }
}

/// Dense form of the given degree with every coefficient uniform in `[-bound, bound]`.
pub fn form(rng: &mut SeededRng, n: usize, degree: u32, bound: i64) -> HomogeneousPolynomial {
    let coeffs: Vec<Rational> =
        monomial_basis(n, degree as i64).iter().map(|_| integer(rng, bound)).collect();
    HomogeneousPolynomial::from_coefficients(n, degree, &coeffs)
}

/// Like [`form`] but never the zero form.
pub fn nonzero_form(rng: &mut SeededRng, n: usize, degree: u32, bound: i64) -> HomogeneousPolynomial {
    loop {
        let f = form(rng, n, degree, bound);
        if !f.is_zero() {
            return f;
        }
    }
}
