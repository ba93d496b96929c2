//! Everything the CLI reports about one parameter point, with every claim
//! checked again against its defining equation before it is handed out.

use cuboid_core::arith::int;
use cuboid_core::conic::{self, LegendreSolution};
use cuboid_core::cubic::{
    self, lift_alpha, mordell_form, reduced_cubic_invariant, reduced_cubic_roots,
    reduced_cubic_value, sextic_rational_roots, sextic_value,
};
use cuboid_core::poly::{eval, RationalRoot};
use cuboid_core::{
    curve_pair, elementary_profile, singular_locus_check, BigRational, Branch,
    BranchCurve, ConicPoint, ConicSpec, CubicCurveSpec, Error, FormulaVariant, LegendreForm,
    MultisymmetricProfile, ParameterPoint, SingularFactor,
};
use num_traits::{One, Zero};

/// A claim that failed its independent re-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationFailure(pub String);

impl std::fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Checked<T> = Result<T, VerificationFailure>;

fn ensure(ok: bool, at: &ParameterPoint, what: impl FnOnce() -> String) -> Checked<()> {
    if ok {
        Ok(())
    } else {
        Err(VerificationFailure(format!("{at}: {}", what())))
    }
}

#[derive(Debug, Clone)]
pub struct Lift {
    pub w: BigRational,
    pub alpha: BigRational,
    pub reduced_roots: [BigRational; 3],
    /// Roots of the branch cubic (edges or face diagonals) obtained from the
    /// reduced roots, when the profile is available and reduces to this `D`.
    pub cubic_roots: Option<Vec<BigRational>>,
}

#[derive(Debug, Clone)]
pub struct ConicAnalysis {
    pub form: LegendreForm,
    pub rational: bool,
    pub solution: Option<LegendreSolution>,
    pub point: Option<ConicPoint>,
}

#[derive(Debug, Clone)]
pub struct BranchAnalysis {
    pub branch: Branch,
    pub curve: BranchCurve,
    pub conic: ConicAnalysis,
    pub mordell_k: Option<BigRational>,
    pub sextic_roots: Vec<RationalRoot>,
    pub lifts: Vec<Lift>,
}

#[derive(Debug, Clone)]
pub struct PointAnalysis {
    pub point: ParameterPoint,
    pub variant: FormulaVariant,
    pub singular_factors: Vec<SingularFactor>,
    pub profile: Option<MultisymmetricProfile>,
    pub master_identity: Option<bool>,
    /// `p0`, `sum p` and `sum d p` in elementary values; all zero when the
    /// profile is consistent with the factor equations.
    pub symmetrized_residuals: Option<[BigRational; 3]>,
    pub branches: Vec<BranchAnalysis>,
}

impl PointAnalysis {
    pub fn is_singular(&self) -> bool {
        !self.singular_factors.is_empty()
    }

    pub fn branch(&self, b: Branch) -> Option<&BranchAnalysis> {
        self.branches.iter().find(|x| x.branch == b)
    }
}

pub fn analyze_point(
    point: &ParameterPoint,
    variant: FormulaVariant,
    search_limit: u64,
) -> Checked<PointAnalysis> {
    let singular_factors = singular_locus_check(point, variant);
    let profile = match elementary_profile(point, variant) {
        Ok(p) => Some(p),
        Err(Error::SingularInput(_)) => None,
        Err(e) => return Err(VerificationFailure(format!("{point}: {e}"))),
    };
    let master_identity = profile.as_ref().map(MultisymmetricProfile::master_identity_holds);
    if let Some(holds) = master_identity {
        ensure(holds, point, || "master identity fails".into())?;
    }
    let symmetrized_residuals = profile.as_ref().map(MultisymmetricProfile::factor_residuals);

    let mut branches = Vec::new();
    if let Ok(pair) = curve_pair(point) {
        for branch in Branch::BOTH {
            branches.push(analyze_branch(
                point,
                branch,
                pair.branch(branch),
                profile.as_ref(),
                search_limit,
            )?);
        }
    }
    Ok(PointAnalysis {
        point: point.clone(),
        variant,
        singular_factors,
        profile,
        master_identity,
        symmetrized_residuals,
        branches,
    })
}

fn analyze_branch(
    at: &ParameterPoint,
    branch: Branch,
    curve: BranchCurve,
    profile: Option<&MultisymmetricProfile>,
    search_limit: u64,
) -> Checked<BranchAnalysis> {
    let i = branch.index();
    let (q, p, d) = (&curve.q, &curve.p, &curve.d);
    ensure((d * q * q * q + p * p).is_zero(), at, || {
        format!("D{i} Q{i}^3 + P{i}^2 is not zero")
    })?;

    let conic = analyze_conic(at, q, search_limit)?;

    let mordell_k = match mordell_form(&CubicCurveSpec::new(p.clone())) {
        Ok(map) => {
            ensure(map.k == (p / int(2)) * (p / int(2)), at, || format!("Mordell k{i}"))?;
            Some(map.k)
        }
        Err(_) => None,
    };

    let sextic_roots = sextic_rational_roots(d);
    for r in &sextic_roots {
        ensure(sextic_value(d, &r.value).is_zero(), at, || {
            format!("w = {} is not a root of sextic {i}", r.value)
        })?;
    }

    let reduction = profile.and_then(|prof| {
        let [e1, e2, e3] = prof.cubic_coefficients(branch);
        reduced_cubic_invariant(&e1, &e2, &e3)
            .filter(|red| red.d == *d)
            .map(|red| (red, [e1, e2, e3]))
    });

    let mut lifts = Vec::new();
    for r in &sextic_roots {
        let w = &r.value;
        let alpha = match lift_alpha(q, p, w) {
            Ok(a) => a,
            Err(Error::ExceptionalPoint(_)) | Err(Error::DegenerateCurve) => continue,
            Err(e) => return Err(VerificationFailure(format!("{at}: branch {i}: {e}"))),
        };
        ensure(w * w + int(3) == q * &alpha * &alpha, at, || {
            format!("lift ({w}, {alpha}) is off conic {i}")
        })?;
        ensure(
            cubic::cubic_contains(&CubicCurveSpec::new(p.clone()), w, &alpha),
            at,
            || format!("lift ({w}, {alpha}) is off cubic {i}"),
        )?;
        if let Ok(map) = mordell_form(&CubicCurveSpec::new(p.clone())) {
            let (x, y) = map.forward(w, &alpha);
            ensure(map.contains(&x, &y), at, || {
                format!("Mordell image of ({w}, {alpha}) is off Y^2 = X^3 + k")
            })?;
        }
        let reduced_roots = reduced_cubic_roots(w);
        for y in &reduced_roots {
            ensure(reduced_cubic_value(d, y).is_zero(), at, || {
                format!("y = {y} misses y^3 + y^2 + D{i} = 0")
            })?;
        }
        let cubic_roots = match &reduction {
            Some((red, [e1, e2, e3])) => {
                let cubic = [-e3.clone(), e2.clone(), -e1.clone(), BigRational::one()];
                let mut roots = Vec::new();
                for y in &reduced_roots {
                    if let Some(t) = red.recover(y) {
                        ensure(eval(&cubic, &t).is_zero(), at, || {
                            format!("recovered {t} is not a root of cubic {i}")
                        })?;
                        roots.push(t);
                    }
                }
                Some(roots)
            }
            None => None,
        };
        lifts.push(Lift {
            w: w.clone(),
            alpha,
            reduced_roots,
            cubic_roots,
        });
    }

    Ok(BranchAnalysis {
        branch,
        curve,
        conic,
        mordell_k,
        sextic_roots,
        lifts,
    })
}

fn analyze_conic(at: &ParameterPoint, q: &BigRational, search_limit: u64) -> Checked<ConicAnalysis> {
    let fail = |e: Error| VerificationFailure(format!("{at}: conic Q = {q}: {e}"));
    let spec = ConicSpec::new(q.clone()).map_err(fail)?;
    let form = conic::normalize_conic(&spec).map_err(fail)?;
    ensure(form.q() == *q, at, || format!("Legendre form of {q} does not reproduce it"))?;
    let mn = form.mn();
    let rational = conic::legendre_solvable(&mn).map_err(fail)?;
    let solution = conic::solve_legendre_bounded(&mn, search_limit).map_err(fail)?;
    let point = conic::find_conic_point_bounded(&spec, search_limit).map_err(fail)?;
    ensure(rational == point.is_some(), at, || {
        format!("criterion and search disagree for MN = {mn}")
    })?;
    if let Some(s) = &solution {
        ensure(s.satisfies(&mn), at, || format!("{s} misses the Legendre equation for {mn}"))?;
    }
    if let Some(pt) = &point {
        ensure(spec.contains(pt), at, || {
            format!("({}, {}) is off w^2 + 3 = {q} alpha^2", pt.w, pt.alpha)
        })?;
    }
    Ok(ConicAnalysis {
        form,
        rational,
        solution,
        point,
    })
}
