//! Sparse multivariate polynomials with exact rational coefficients.

pub mod context;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;

pub use context::{Block, BlockKind, Context, ContextBuilder};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::{parse_affine, parse_polynomial, variables_in};
pub use polynomial::{q, Polynomial, Q};
