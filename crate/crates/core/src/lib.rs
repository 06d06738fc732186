//! Apolarity and cactus-rank computations for polynomials over exact fields.
//!
//! Polynomials use the divided power convention ([`ring`]); the space of
//! partials and annihilators live in [`apolar`], Hilbert functions and their
//! symmetric decompositions in [`hilbert`]. [`enumerate`] and [`bounds`]
//! work purely with integer sequences, and [`witness`] builds the explicit
//! examples with hidden variables and the cubic surface witness.

pub mod apolar;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod macaulay;
pub mod random;
pub mod ring;
pub mod scalar;
pub mod selftest;
pub mod witness;

pub use apolar::{
    annihilator_generators, apolar_length, diff_space, is_apolar, local_scheme, Annihilator, ApolarScheme,
    FilteredSpace, SchemeReport,
};
pub use bounds::{
    c_bound, d_flag, d_infty, v_bound, verify_theorem, verify_theorem_with, w_bound, CandidateFilter, DimBoundReport,
    TheoremReport,
};
pub use enumerate::{admissible_decompositions, nonsmoothable_filter, DecompositionCandidate};
pub use error::{Error, Result};
pub use hilbert::{
    adapt_coordinates, embedding_dims, hilbert_function, symmetric_decomposition, EmbeddingDims, HilbertFunction,
    SymmetricDecomposition,
};
pub use macaulay::{binomial_expansion, is_o_sequence, macaulay_bound, BinomialExpansion};
pub use ring::{
    contract, dehomogenize, homogenize, parse, parse_with, tail, ChangeOfBasis, ExponentVector, Indexing, Polynomial,
    Side,
};
pub use scalar::{Field, Fp, Rational};
pub use witness::{cusp_witness, exotic_extend, WitnessReport};
