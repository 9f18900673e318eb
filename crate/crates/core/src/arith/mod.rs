//! Exact scalars, univariate polynomials and rational functions.

mod field;
pub(crate) mod modular;
mod poly;
mod quadratic;
mod ratfunc;

pub use field::{Field, Sqrt};
pub(crate) use poly::substitute;
pub use poly::{
    compose_with_moebius, poly_gcd, poly_sqrt, poly_sqrt_exact, squarefree_decomposition, UniPoly,
};
pub use quadratic::{scalar_sqrt, squarefree_part, QuadScalar, ScalarRoot};
pub use ratfunc::RatFunc;
