//! Exact-arithmetic decision procedures for rank-2 coherent systems on the
//! projective plane.
//!
//! The library decides stability of a system's numerical data against
//! line-bundle subsystems in all three parameter regimes, enumerates the
//! critical values (walls) and chambers of the linear parameter for `k = 2`
//! by two independent routes, screens Segre-invariant feasibility, computes
//! flip-locus dimensions at stable-family walls, gives non-emptiness
//! verdicts, and certifies witness constructions by exact linear algebra on
//! rational point configurations.
//!
//! Everything is exact: scalars are arbitrary-precision rationals
//! ([`Rational`]), polynomials carry exact coefficients ([`QPoly`]), and
//! matrix ranks come from fraction-free elimination. The polynomial and
//! linear-algebra cores are generic over the scalar type via `num-traits`;
//! the concrete rational instantiations used everywhere else are aliased
//! here.

pub mod cohomology;
pub mod compare;
pub mod critical;
pub mod error;
pub mod flips;
pub mod linalg;
pub mod nonempty;
pub mod points;
pub mod poly;
pub mod rational;
pub mod segre;
pub mod stability;
pub mod system;

pub use error::{Error, Result};
pub use poly::{Poly, Scalar};
pub use rational::Rational;

/// Polynomials in one formal variable with exact rational coefficients.
pub type QPoly = Poly<Rational>;

/// Matrices over the exact rationals, as dense rows.
pub type QMatrix = Vec<Vec<Rational>>;
