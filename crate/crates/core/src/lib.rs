//! Gelfand-Tsetlin realization of the finite-dimensional simple `sl_n`
//! modules, with exact arithmetic over `Q(√2, √3, …)`.
//!
//! A partition `m_1 ≥ … ≥ m_n` picks the module; its basis is the set of
//! Gelfand-Tsetlin patterns with that top row. Generators act on patterns by
//! square-root coefficients, which [`RadicalScalar`] keeps exact.

pub mod error;
pub mod json;
pub mod matrix_market;
pub mod monomials;
pub mod operators;
pub mod patterns;
pub mod raising;
pub mod scalars;
pub mod weights;

pub use error::{Error, Result};
pub use monomials::{
    basis_matrix, exact_rank, float_rank, monomial_family, monomial_word, rank, MonomialEntry,
    MonomialFamily,
};
pub use operators::{
    act, act_diag, act_lower, act_raise, commutator, general_element, operator_matrix,
    operator_matrix_in, verify_sln_relations, GeneratorSpec, ModuleVector, OperatorMatrix,
    Realization, RelationReport,
};
pub use patterns::{
    compare, dimension, enumerate_patterns, highest_pattern, validate, GtPattern, Partition,
    PatternBasis, Violation,
};
pub use raising::{
    apply_word, raise_sum_to_highest, raising_exponents, raising_exponents_with, raising_word,
    simplicity_certificate, verify_raise, verify_raise_with, ExponentVector, GeneratorWord,
    RaiseOutcome, Schedule, SimplicityReport, WordFactor,
};
pub use scalars::{sqrt_rational, squarefree_decompose, RadicalScalar, Rational};
pub use weights::{fundamental_coords, highest_weight, weight_decomposition, weight_of, WeightVector};
