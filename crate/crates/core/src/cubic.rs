//! The cubics `2(w^2 - 1) = P alpha^3`, the sextic surfaces that carry their
//! rational points, and the reduced cubic `y^3 + y^2 + D = 0`.
//!
//! On a branch with data `(Q, P, D)` and `D = -P^2/Q^3`, a rational root `w` of
//! `D (w^2 + 3)^3 + 4 (w^2 - 1)^2 = 0` with `w ≠ ±1` lifts to
//! `alpha = 2 Q (w^2 - 1) / (P (w^2 + 3))`, which lies on the conic
//! `w^2 + 3 = Q alpha^2` and on the cubic at the same time.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{int, rat};
use crate::error::{Error, Result};
use crate::parametrization::{curve_pair, Branch, ParameterPoint};
use crate::poly::{self, RationalRoot};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicCurveSpec {
    pub p: BigRational,
}

impl CubicCurveSpec {
    pub fn new(p: BigRational) -> Self {
        Self { p }
    }
}

pub fn cubic_contains(spec: &CubicCurveSpec, w: &BigRational, alpha: &BigRational) -> bool {
    int(2) * (w * w - BigRational::one()) == &spec.p * alpha * alpha * alpha
}

/// A rational point `w` on the sextic surface of one branch over `(b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePoint {
    pub at: ParameterPoint,
    pub w: BigRational,
    pub branch: Branch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedPoint {
    pub point: SurfacePoint,
    pub alpha: BigRational,
}

/// `D (w^2 + 3)^3 + 4 (w - 1)^2 (w + 1)^2`.
pub fn sextic_value(d: &BigRational, w: &BigRational) -> BigRational {
    let s = w * w + int(3);
    let m = w * w - BigRational::one();
    d * &s * &s * &s + int(4) * &m * &m
}

/// Coefficients of the sextic in `w`, ascending.
pub fn sextic_polynomial(d: &BigRational) -> poly::Poly {
    // (w^2 + 3)^3 = w^6 + 9 w^4 + 27 w^2 + 27 and 4 (w^2 - 1)^2 = 4 w^4 - 8 w^2 + 4.
    let z = BigRational::zero;
    vec![
        d * int(27) + int(4),
        z(),
        d * int(27) - int(8),
        z(),
        d * int(9) + int(4),
        z(),
        d.clone(),
    ]
}

/// Every rational root of the sextic with its multiplicity, ascending.
pub fn sextic_rational_roots(d: &BigRational) -> Vec<RationalRoot> {
    poly::rational_roots(&sextic_polynomial(d))
}

/// The `D` for which `w` is a root of the sextic: `-4 (w^2 - 1)^2 / (w^2 + 3)^3`.
pub fn sextic_parameter(w: &BigRational) -> BigRational {
    let s = w * w + int(3);
    let m = w * w - BigRational::one();
    -(int(4) * &m * &m) / (&s * &s * &s)
}

/// The three roots of `y^3 + y^2 + D = 0` with `D = sextic_parameter(w)`.
pub fn reduced_cubic_roots(w: &BigRational) -> [BigRational; 3] {
    let s = w * w + int(3);
    let one = BigRational::one();
    [
        int(-2) * (w + &one) / &s,
        int(2) * (w - &one) / &s,
        (&one - w * w) / &s,
    ]
}

/// Value of `y^3 + y^2 + D`.
pub fn reduced_cubic_value(d: &BigRational, y: &BigRational) -> BigRational {
    y * y * y + y * y + d
}

/// The affine change `t = mu + lambda / y` taking the monic cubic
/// `t^3 - e1 t^2 + e2 t - e3` to `y^3 + y^2 + d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCubic {
    pub mu: BigRational,
    pub lambda: BigRational,
    pub d: BigRational,
}

impl ReducedCubic {
    /// Root of the original cubic that corresponds to a nonzero `y`.
    pub fn recover(&self, y: &BigRational) -> Option<BigRational> {
        (!y.is_zero()).then(|| &self.mu + &self.lambda / y)
    }
}

/// Reduces `t^3 - e1 t^2 + e2 t - e3`.
///
/// With `f` the cubic and `mu = e1/3`, `d = f(mu)^2 / f'(mu)^3` and
/// `lambda = f(mu) / f'(mu)`. Returns `None` when `f(mu)` or `f'(mu)` vanishes,
/// where the cubic is not of this shape.
pub fn reduced_cubic_invariant(
    e1: &BigRational,
    e2: &BigRational,
    e3: &BigRational,
) -> Option<ReducedCubic> {
    let mu = e1 * rat(1, 3);
    let f_mu = rat(-2, 27) * e1 * e1 * e1 + e1 * e2 * rat(1, 3) - e3;
    let df_mu = e2 - e1 * e1 * rat(1, 3);
    if f_mu.is_zero() || df_mu.is_zero() {
        return None;
    }
    let lambda = &f_mu / &df_mu;
    let d = &f_mu * &f_mu / (&df_mu * &df_mu * &df_mu);
    Some(ReducedCubic { mu, lambda, d })
}

/// `alpha = 2 Q (w^2 - 1) / (P (w^2 + 3))`, returned only after both
/// `w^2 + 3 = Q alpha^2` and `2 (w^2 - 1) = P alpha^3` are confirmed.
pub fn lift_alpha(q: &BigRational, p: &BigRational, w: &BigRational) -> Result<BigRational> {
    let one = BigRational::one();
    if *w == one || *w == -&one {
        return Err(Error::ExceptionalPoint(w.to_string()));
    }
    if q.is_zero() {
        return Err(Error::DegenerateParameter("Q = 0"));
    }
    if p.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let s = w * w + int(3);
    let m = w * w - &one;
    let alpha = int(2) * q * &m / (p * &s);
    if q * &alpha * &alpha != s {
        return Err(Error::OffCurve(format!(
            "alpha = {alpha} misses w^2 + 3 = Q alpha^2 at w = {w}, Q = {q}"
        )));
    }
    if !cubic_contains(&CubicCurveSpec::new(p.clone()), w, &alpha) {
        return Err(Error::OffCurve(format!(
            "alpha = {alpha} misses 2(w^2 - 1) = P alpha^3 at w = {w}, P = {p}"
        )));
    }
    Ok(alpha)
}

pub fn alpha_from_surface_point(pt: &SurfacePoint) -> Result<LiftedPoint> {
    let one = BigRational::one();
    if pt.w == one || pt.w == -&one {
        return Err(Error::ExceptionalPoint(pt.w.to_string()));
    }
    let curve = curve_pair(&pt.at)?.branch(pt.branch);
    if !sextic_value(&curve.d, &pt.w).is_zero() {
        return Err(Error::OffCurve(format!(
            "w = {} is not a root of the branch-{} sextic at {}",
            pt.w,
            pt.branch.index(),
            pt.at
        )));
    }
    let alpha = lift_alpha(&curve.q, &curve.p, &pt.w).map_err(|e| match e {
        Error::OffCurve(msg) => Error::Consistency(msg),
        other => other,
    })?;
    Ok(LiftedPoint {
        point: pt.clone(),
        alpha,
    })
}

/// The isomorphism `(w, alpha) -> (X, Y) = (P/2 alpha, P/2 w)` onto
/// `Y^2 = X^3 + k`, `k = (P/2)^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MordellMap {
    pub half_p: BigRational,
    pub k: BigRational,
}

impl MordellMap {
    pub fn forward(&self, w: &BigRational, alpha: &BigRational) -> (BigRational, BigRational) {
        (&self.half_p * alpha, &self.half_p * w)
    }

    pub fn inverse(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        (y / &self.half_p, x / &self.half_p)
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        y * y == x * x * x + &self.k
    }
}

pub fn mordell_form(spec: &CubicCurveSpec) -> Result<MordellMap> {
    if spec.p.is_zero() {
        return Err(Error::DegenerateCurve);
    }
    let half_p = &spec.p * rat(1, 2);
    let k = &half_p * &half_p;
    Ok(MordellMap { half_p, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand_roots;

    #[test]
    fn membership() {
        for p in [int(0), int(5), rat(-7, 3)] {
            let spec = CubicCurveSpec::new(p);
            assert!(cubic_contains(&spec, &int(1), &int(0)));
            assert!(cubic_contains(&spec, &int(-1), &int(0)));
        }
        assert!(cubic_contains(&CubicCurveSpec::new(int(2)), &int(3), &int(2)));
        assert!(!cubic_contains(&CubicCurveSpec::new(int(2)), &int(3), &int(1)));
    }

    #[test]
    fn toy_lift() {
        assert_eq!(lift_alpha(&int(3), &int(2), &int(3)).unwrap(), int(2));
        assert_eq!(
            lift_alpha(&int(3), &int(2), &int(1)),
            Err(Error::ExceptionalPoint("1".into()))
        );
        assert_eq!(
            lift_alpha(&int(3), &int(2), &int(-1)),
            Err(Error::ExceptionalPoint("-1".into()))
        );
        assert_eq!(lift_alpha(&int(3), &int(0), &int(3)), Err(Error::DegenerateCurve));
    }

    #[test]
    fn sextic_examples() {
        let roots = sextic_rational_roots(&rat(-4, 27));
        assert_eq!(
            roots,
            vec![
                RationalRoot { value: int(-3), multiplicity: 2 },
                RationalRoot { value: int(0), multiplicity: 2 },
                RationalRoot { value: int(3), multiplicity: 2 },
            ]
        );
        assert_eq!(
            expand_roots(&sextic_rational_roots(&int(0))),
            vec![int(-1), int(-1), int(1), int(1)]
        );
        assert!(sextic_rational_roots(&int(1)).is_empty());
    }

    #[test]
    fn sextic_roots_on_a_parameter_point() {
        // Branch one at (12/7, 2): D1 = -4900/59319.
        let roots: Vec<_> = sextic_rational_roots(&rat(-4900, 59319))
            .into_iter()
            .map(|r| r.value)
            .collect();
        assert_eq!(
            roots,
            vec![int(-6), rat(-9, 5), rat(-3, 7), rat(3, 7), rat(9, 5), int(6)]
        );
    }

    #[test]
    fn reduced_roots_examples() {
        assert_eq!(reduced_cubic_roots(&int(0)), [rat(-2, 3), rat(-2, 3), rat(1, 3)]);
        assert_eq!(reduced_cubic_roots(&int(1)), [int(-1), int(0), int(0)]);
        assert_eq!(reduced_cubic_roots(&int(3)), [rat(-2, 3), rat(1, 3), rat(-2, 3)]);
        assert_eq!(sextic_parameter(&int(0)), rat(-4, 27));
    }

    #[test]
    fn reduction_recovers_roots() {
        // Roots 3/5, -4/5, 0 reduce to D = -12100/1367631.
        let (e1, e2, e3) = (rat(-1, 5), rat(-12, 25), int(0));
        let red = reduced_cubic_invariant(&e1, &e2, &e3).unwrap();
        assert_eq!(red.d, rat(-12100, 1367631));
        let mut xs: Vec<_> = sextic_rational_roots(&red.d)
            .iter()
            .filter(|r| r.value > int(0))
            .flat_map(|r| reduced_cubic_roots(&r.value))
            .filter_map(|y| red.recover(&y))
            .collect();
        xs.sort();
        xs.dedup();
        assert_eq!(xs, vec![rat(-4, 5), int(0), rat(3, 5)]);
        // A triple root has no reduced form.
        assert!(reduced_cubic_invariant(&int(3), &int(3), &int(1)).is_none());
    }

    #[test]
    fn surface_lift_at_parameter_point() {
        let at = ParameterPoint::new(rat(12, 7), int(2));
        for (w, alpha) in [(int(6), rat(7, 2)), (rat(9, 5), rat(7, 5)), (rat(3, 7), int(-1))] {
            let lifted = alpha_from_surface_point(&SurfacePoint {
                at: at.clone(),
                w,
                branch: Branch::One,
            })
            .unwrap();
            assert_eq!(lifted.alpha, alpha);
        }
        let off = SurfacePoint { at, w: int(2), branch: Branch::One };
        assert!(matches!(alpha_from_surface_point(&off), Err(Error::OffCurve(_))));
    }

    #[test]
    fn mordell_examples() {
        let map = mordell_form(&CubicCurveSpec::new(int(2))).unwrap();
        assert_eq!(map.k, int(1));
        let (x, y) = map.forward(&int(3), &int(2));
        assert_eq!((x.clone(), y.clone()), (int(2), int(3)));
        assert!(map.contains(&x, &y));
        assert_eq!(map.inverse(&x, &y), (int(3), int(2)));

        let map = mordell_form(&CubicCurveSpec::new(rat(5, 3))).unwrap();
        for w in [int(1), int(-1)] {
            let (x, y) = map.forward(&w, &int(0));
            assert_eq!(x, int(0));
            assert_eq!(&y * &y, map.k);
        }
        assert_eq!(
            mordell_form(&CubicCurveSpec::new(int(0))),
            Err(Error::DegenerateCurve)
        );
    }
}
