//! Exact arithmetic for the perfect cuboid problem through its two-parameter
//! family of factor-equation solutions.
//!
//! A parameter point `(b, c)` determines the nine elementary multisymmetric
//! values of the edges and face diagonals ([`parametrization`]), a genus-zero
//! curve `w^2 + 3 = Q alpha^2` ([`conic`]) and a genus-one curve
//! `2(w^2 - 1) = P alpha^3` ([`cubic`]) for each of two branches. Rational
//! points on the sextic surfaces `D (w^2 + 3)^3 + 4 (w^2 - 1)^2 = 0` lift to both
//! curves at once. [`verify`] checks candidate edge/diagonal data against the
//! cuboid equations directly.
//!
//! All values are [`BigRational`]; nothing is approximated.

pub mod arith;
pub mod conic;
pub mod cubic;
pub mod error;
pub mod parametrization;
pub mod poly;
pub mod verify;

pub use arith::{BigInt, BigRational, BigUint};
pub use conic::{ConicPoint, ConicSpec, LegendreForm, LegendreSolution};
pub use cubic::{CubicCurveSpec, LiftedPoint, MordellMap, SurfacePoint};
pub use error::{Error, Result};
pub use parametrization::{
    curve_pair, elementary_profile, singular_locus_check, Branch, BranchCurve, CurvePair,
    FormulaVariant, MultisymmetricProfile, ParameterPoint, SingularFactor,
};
pub use poly::RationalRoot;
pub use verify::{CuboidWitness, GateClass};
