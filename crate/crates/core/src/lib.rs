//! Jonquieres maps of the projective plane and their dynamical number of
//! base-points.
//!
//! All algebra is exact and generic over a coefficient [`Field`]; the
//! concrete instantiations used by the parser and the command line are the
//! aliases defined here.

pub mod arith;
pub mod error;
pub mod jonq;
pub mod mu;
pub mod ns_lattice;
pub mod parser;
pub mod samples;

pub use arith::{Field, QuadScalar, RatFunc, UniPoly};
pub use error::{Error, Result};
pub use jonq::{FiberMatrix, JonquieresMap, Moebius, SubgroupTag};
pub use mu::{CaseTag, MuVerdict};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

pub type QPoly = UniPoly<Rational>;
pub type QuadPoly = UniPoly<QuadScalar>;
pub type QRatFunc = RatFunc<Rational>;
pub type QMap = JonquieresMap<Rational>;
pub type QuadMap = JonquieresMap<QuadScalar>;
