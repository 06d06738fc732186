//! Seeded inputs shared by the benchmarks.

use cactus_core::random;
use cactus_core::Polynomial;

/// `count` dense forms of the given degree, reproducible from `seed`.
pub fn dense_forms(seed: u64, count: usize, nvars: usize, degree: u32) -> Vec<Polynomial> {
    let mut rng = random::rng(seed);
    (0..count)
        .map(|_| random::dense_form(&mut rng, nvars, degree))
        .collect()
}

/// Sparse affine polynomials with `nterms` terms.
pub fn sparse_polynomials(seed: u64, count: usize, nvars: usize, degree: u32, nterms: usize) -> Vec<Polynomial> {
    let mut rng = random::rng(seed);
    (0..count)
        .map(|_| random::polynomial(&mut rng, nvars, degree, nterms, cactus_core::Side::Primal))
        .collect()
}
