//! Exact special values of the Riemann, Hurwitz, Dirichlet and Lerch zeta
//! functions at non-positive integers.
//!
//! Every value is an exact rational (or an element of a cyclotomic field when a
//! character takes non-real values). Each family of values is reachable by at
//! least two independent routes, a Bernoulli/Euler polynomial closed form and a
//! definite integral of a partial-power-sum polynomial, and the [`verify`]
//! module checks that the routes agree.

pub mod arith;
pub mod bernoulli;
pub mod congruence;
pub mod dirichlet;
pub mod error;
pub mod lvalues;
pub mod poly;
pub mod sums;
pub mod verify;

pub use arith::{vp, CyclotomicElement, PAdicValuation, Rational, Scalar};
pub use bernoulli::{bernoulli_number, bernoulli_poly, euler_number, euler_poly, BernoulliCache, EulerParameter};
pub use congruence::{Branch, PropA1Verdict};
pub use dirichlet::{CharacterLiteral, DirichletCharacter, GeneralizedBernoulli, Parity};
pub use error::{Error, Result};
pub use lvalues::{PiPower, Route, SpecialValueResult, ValueParams};
pub use poly::Polynomial;
pub use sums::PartialSumSpec;
pub use verify::{run_suite, Check, Suite, SuiteParams, VerificationReport};
