//! Direct evaluation of the cuboid equations and their symmetrized factor
//! equations for explicit edges `x`, face diagonals `d` and space diagonal `L`.
//!
//! Nothing here goes through the parametrization; it is the reference that
//! the closed-form values are checked against.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::int;
use crate::error::{Error, Result};
use crate::parametrization::MultisymmetricProfile;
use crate::poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuboidWitness {
    pub x: [BigRational; 3],
    pub d: [BigRational; 3],
    pub l: BigRational,
}

impl CuboidWitness {
    pub fn new(x: [BigRational; 3], d: [BigRational; 3], l: BigRational) -> Self {
        Self { x, d, l }
    }

    /// `[x1, x2, x3, d1, d2, d3, L]`.
    pub fn from_ints(v: [i64; 7]) -> Self {
        Self {
            x: [int(v[0]), int(v[1]), int(v[2])],
            d: [int(v[3]), int(v[4]), int(v[5])],
            l: int(v[6]),
        }
    }
}

/// `p0 = x1^2 + x2^2 + x3^2 - L^2`, `p1 = x2^2 + x3^2 - d1^2`,
/// `p2 = x3^2 + x1^2 - d2^2`, `p3 = x1^2 + x2^2 - d3^2`.
pub fn eval_cuboid_polynomials(w: &CuboidWitness) -> [BigRational; 4] {
    let sq = |v: &BigRational| v * v;
    let [x1, x2, x3] = w.x.each_ref().map(sq);
    let [d1, d2, d3] = w.d.each_ref().map(sq);
    [
        &x1 + &x2 + &x3 - sq(&w.l),
        &x2 + &x3 - d1,
        &x3 + &x1 - d2,
        x1 + x2 - d3,
    ]
}

pub const FACTOR_EQUATION_NAMES: [&str; 8] = [
    "p0",
    "sum p",
    "sum d p",
    "sum x p",
    "sum d^2 p",
    "sum x^2 p",
    "sum x d p",
    "sum x^2 d^2 p",
];

/// Left-hand sides of the eight factor equations: `p0` and the sums
/// `sum_i w_i p_i` for the weights `1, d, x, d^2, x^2, x d, x^2 d^2`.
pub fn factor_equation_values(w: &CuboidWitness) -> [BigRational; 8] {
    let [p0, p1, p2, p3] = eval_cuboid_polynomials(w);
    let p = [p1, p2, p3];
    let weighted = |weight: &dyn Fn(usize) -> BigRational| {
        (0..3).fold(BigRational::zero(), |acc, i| acc + weight(i) * &p[i])
    };
    let (x, d) = (&w.x, &w.d);
    [
        p0,
        weighted(&|_| BigRational::one()),
        weighted(&|i| d[i].clone()),
        weighted(&|i| x[i].clone()),
        weighted(&|i| &d[i] * &d[i]),
        weighted(&|i| &x[i] * &x[i]),
        weighted(&|i| &x[i] * &d[i]),
        weighted(&|i| &x[i] * &x[i] * &d[i] * &d[i]),
    ]
}

pub fn check_factor_equations(w: &CuboidWitness) -> bool {
    factor_equation_values(w).iter().all(Zero::is_zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateClass {
    /// Factor equations hold and all edges and face diagonals are positive.
    FullSolution,
    /// Factor equations hold but some edge or face diagonal is not positive.
    FactorOnly,
    NonSolution,
}

impl GateClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GateClass::FullSolution => "full-solution",
            GateClass::FactorOnly => "factor-only",
            GateClass::NonSolution => "non-solution",
        }
    }
}

impl fmt::Display for GateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classifies a witness by the factor equations and the positivity of its
/// edges and face diagonals.
///
/// With positive data the factor equations imply the cuboid equations. That
/// implication is checked on every witness classified as a full solution, and
/// a witness that breaks it is reported as [`Error::Consistency`].
pub fn positivity_gate(w: &CuboidWitness) -> Result<GateClass> {
    if !check_factor_equations(w) {
        return Ok(GateClass::NonSolution);
    }
    if !w.x.iter().chain(&w.d).all(Signed::is_positive) {
        return Ok(GateClass::FactorOnly);
    }
    let p = eval_cuboid_polynomials(w);
    if let Some((i, v)) = p.iter().enumerate().find(|(_, v)| !v.is_zero()) {
        return Err(Error::Consistency(format!(
            "positive witness satisfies the factor equations but p{i} = {v}"
        )));
    }
    Ok(GateClass::FullSolution)
}

/// The nine elementary multisymmetric values of `(x, d)`; `l` is set to 1.
pub fn elementary_from_roots(x: &[BigRational; 3], d: &[BigRational; 3]) -> MultisymmetricProfile {
    let [x1, x2, x3] = x;
    let [d1, d2, d3] = d;
    MultisymmetricProfile {
        e10: x1 + x2 + x3,
        e20: x1 * x2 + x2 * x3 + x3 * x1,
        e30: x1 * x2 * x3,
        e01: d1 + d2 + d3,
        e02: d1 * d2 + d2 * d3 + d3 * d1,
        e03: d1 * d2 * d3,
        e11: x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1,
        e21: x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2,
        e12: x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2,
        l: BigRational::one(),
    }
}

/// Rational roots of `t^3 - e1 t^2 + e2 t - e3`, repeated by multiplicity, ascending.
pub fn solve_cubic_rational(e1: &BigRational, e2: &BigRational, e3: &BigRational) -> Vec<BigRational> {
    let coeffs = vec![-e3.clone(), e2.clone(), -e1.clone(), BigRational::one()];
    poly::expand_roots(&poly::rational_roots(&coeffs))
}

/// True iff `(x, d)` reproduce all nine elementary values of `profile`.
pub fn check_symmetric_consistency(
    x: &[BigRational; 3],
    d: &[BigRational; 3],
    profile: &MultisymmetricProfile,
) -> bool {
    let got = elementary_from_roots(x, d);
    got.e10 == profile.e10
        && got.e20 == profile.e20
        && got.e30 == profile.e30
        && got.e01 == profile.e01
        && got.e02 == profile.e02
        && got.e03 == profile.e03
        && got.e11 == profile.e11
        && got.e21 == profile.e21
        && got.e12 == profile.e12
}
