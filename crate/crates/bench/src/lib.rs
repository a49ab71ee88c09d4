//! Shared inputs for the criterion benchmarks.

use zetaval_core::{DirichletCharacter, Rational};

pub use zetaval_core::verify::hurwitz_offsets;

/// Quadratic characters for the odd primes up to 23, as in the published tables.
pub fn table_characters() -> Vec<DirichletCharacter<Rational>> {
    zetaval_core::verify::TABLE_PRIMES
        .iter()
        .map(|&p| zetaval_core::dirichlet::quadratic_character(p).unwrap())
        .collect()
}
