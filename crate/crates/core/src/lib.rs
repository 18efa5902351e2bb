//! Exact Salvetti complexes for Artin groups, flag resolutions for Coxeter
//! groups, and their homology.
//!
//! All arithmetic is exact. Group elements live in the reflection
//! representation over a cyclotomic field, boundary coefficients are Laurent
//! polynomials over the rationals (or integers), and homology is read off
//! from Smith normal forms over a Euclidean domain.
//!
//! Most of the algebra is generic over the coefficient type; the aliases at
//! the crate root fix the common choices.

pub mod artin;
pub mod coxeter;
pub mod cyclotomic;
pub mod error;
pub mod export;
pub mod group;
pub mod group_ring;
pub mod homology;
pub mod laurent;
pub mod matrix;
pub mod poset;
pub mod qanalog;
pub mod resolution;
pub mod scalar;

pub use coxeter::{CoxeterMatrix, CoxeterType, GeneratorSubset, Label};
pub use error::{Error, Result};
pub use group::GroupTable;
pub use homology::{ChainComplex, HomologyModule};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use scalar::{Coefficient, EuclideanDomain, Field};

/// Arbitrary precision integers.
pub type Integer = num_bigint::BigInt;
/// Arbitrary precision rationals.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials with integer coefficients.
pub type ZPoly = LaurentPoly<Integer>;
/// The Laurent ring `Q[q, q^-1]`, a principal ideal domain.
pub type QPoly = LaurentPoly<Rational>;
/// Cyclotomic integers with machine-word coefficients, used by the
/// reflection representation.
pub type IntCyclotomic = cyclotomic::CyclotomicNumber<i64>;
/// Homology over the Laurent ring.
pub type LaurentHomology = HomologyModule<QPoly>;
/// Homology over the integers.
pub type IntegerHomology = HomologyModule<Integer>;
/// Homology over the rationals.
pub type RationalHomology = HomologyModule<Rational>;

/// Default element budget for group enumeration.
pub const DEFAULT_BUDGET: usize = 200_000;
