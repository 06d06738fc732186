//! Seeded generators for test and benchmark inputs.
//!
//! Every generator takes an explicit RNG; [`rng`] builds the ChaCha stream
//! used throughout so that runs are reproducible from a single `u64` seed.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ring::{ExponentVector, Polynomial, Side};
use crate::scalar::{Field, Rational};
use num_bigint::BigInt;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with numerator in `-5..=5` and denominator in `1..=3`.
pub fn coefficient<R: Rng>(rng: &mut R) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-5..=5);
    }
    let den: i64 = rng.gen_range(1..=3);
    Rational::from_ratio(&BigInt::from(num), &BigInt::from(den)).expect("nonzero denominator")
}

fn random_exponent<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> ExponentVector {
    let mut e = vec![0u32; nvars];
    for _ in 0..degree {
        e[rng.gen_range(0..nvars)] += 1;
    }
    ExponentVector::new(e)
}

/// Sparse polynomial of degree exactly `degree` (for `nvars >= 1`) with at
/// most `nterms` terms.
pub fn polynomial<R: Rng>(rng: &mut R, nvars: usize, degree: u32, nterms: usize, side: Side) -> Polynomial {
    let mut p = Polynomial::zero(nvars, side);
    while p.degree() != Some(degree) {
        p = Polynomial::zero(nvars, side);
        p.add_term(random_exponent(rng, nvars, degree), coefficient(rng));
        for _ in 1..nterms.max(1) {
            let d = rng.gen_range(0..=degree);
            p.add_term(random_exponent(rng, nvars, d), coefficient(rng));
        }
    }
    p
}

/// Homogeneous form of the given degree with at most `nterms` terms.
pub fn form<R: Rng>(rng: &mut R, nvars: usize, degree: u32, nterms: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars, Side::Primal);
    while p.is_zero() {
        for _ in 0..nterms.max(1) {
            p.add_term(random_exponent(rng, nvars, degree), coefficient(rng));
        }
    }
    p
}

/// Form with every monomial of the given degree present.
pub fn dense_form<R: Rng>(rng: &mut R, nvars: usize, degree: u32) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        Side::Primal,
        ExponentVector::all_of_degree(nvars, degree)
            .into_iter()
            .map(|e| (e, coefficient(rng)))
            .collect::<Vec<_>>(),
    )
}

/// Nonzero linear form; about half of the coefficients vanish.
pub fn linear_form<R: Rng>(rng: &mut R, nvars: usize) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); nvars];
    let mut idx: Vec<usize> = (0..nvars).collect();
    idx.shuffle(rng);
    let k = rng.gen_range(1..=nvars);
    for &i in &idx[..k] {
        coeffs[i] = coefficient(rng);
    }
    Polynomial::from_linear(&coeffs, Side::Primal)
}

/// Dual polynomial with all terms of degree in `min_order..=max_degree`.
pub fn operator<R: Rng>(rng: &mut R, nvars: usize, min_order: u32, max_degree: u32, nterms: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars, Side::Dual);
    while p.is_zero() {
        for _ in 0..nterms.max(1) {
            let d = rng.gen_range(min_order..=max_degree);
            p.add_term(random_exponent(rng, nvars, d), coefficient(rng));
        }
    }
    p
}
