pub mod cli_verify;
pub mod error;
pub mod group_algebra;
pub mod parabolic;
pub mod poly_ring;
pub mod root_system;
pub mod schubert_limit;
pub mod stable_basis;

pub use error::{Error, Result};

/// Exact scalar used by the command-line tool and the acceptance suite.
pub type Rational = num_rational::BigRational;
/// Integer scalar for formulas that never divide, such as the minus
/// subword sum.
pub type Integer = num_bigint::BigInt;
pub type MPoly = poly_ring::Poly<Rational>;
pub type MRatFunc = poly_ring::RatFunc<Rational>;
pub type MGroupAlgebraElement = group_algebra::GroupAlgebraElement<Rational>;
pub type MRestrictionTable = stable_basis::RestrictionTable<Rational>;
