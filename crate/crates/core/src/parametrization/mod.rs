//! Closed-form parametrization of the cuboid factor equations by two rational
//! parameters `(b, c)`.
//!
//! At a parameter point this module evaluates
//!
//! - the nine elementary multisymmetric values `E10 … E12` (with `L = 1`),
//! - the curve data `Q1, P1, D1` and `Q2, P2, D2` of the two curve families,
//! - the list of denominator factors that vanish there.
//!
//! Everything is exact; the coefficient tables live in [`tables`].
//!
//! Two typesetting defects in the source formulas are handled here. The factor
//! `b^2c^4 - 6b^2c^-3 + …` inside the `P1`/`D1` bracket is read with `c^3`, like
//! its other occurrences. The `E21` formula is available in two readings, see
//! [`FormulaVariant`].

mod bivariate;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{int, rat};
use crate::error::{Error, Result};
use bivariate::BivariatePoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParameterPoint {
    pub b: BigRational,
    pub c: BigRational,
}

impl ParameterPoint {
    pub fn new(b: BigRational, c: BigRational) -> Self {
        Self { b, c }
    }

    pub fn from_ints(b: i64, c: i64) -> Self {
        Self::new(int(b), int(c))
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b, c) = ({}, {})", self.b, self.c)
    }
}

/// Which reading of the `E21` formula to evaluate.
///
/// `Printed` keeps the typeset formula, where a `-4c^3` term sits inside the
/// quartic of the denominator. `Corrected` moves that term into the numerator
/// and uses the standard quartic; this is the reading under which `E21`
/// agrees with the factor equations (see [`MultisymmetricProfile::factor_residuals`]).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum FormulaVariant {
    #[default]
    Printed,
    Corrected,
}

impl FormulaVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaVariant::Printed => "printed",
            FormulaVariant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormulaVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "printed" => Ok(FormulaVariant::Printed),
            "corrected" => Ok(FormulaVariant::Corrected),
            other => Err(format!(
                "unknown formula variant `{other}` (expected printed or corrected)"
            )),
        }
    }
}

/// A denominator factor of the closed-form formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SingularFactor {
    /// `b^2c^2 + 2b^2 - 3b^2c + c - bc^2 + 2b`, shared by E10, E01, E11.
    EDenominator,
    /// `bc - 1 - b`
    BcMinusOneMinusB,
    /// `bc - c - 2b`
    BcMinusCMinusTwoB,
    /// `b^2c^4 - 6b^2c^3 + 13b^2c^2 - 12b^2c + 4b^2 + c^2`
    Quartic,
    Q1,
    Q2,
    /// The quartic with the extra `-4c^3`, a denominator only under [`FormulaVariant::Printed`].
    E21PrintedQuartic,
}

impl SingularFactor {
    pub const ALL: [SingularFactor; 7] = [
        SingularFactor::EDenominator,
        SingularFactor::BcMinusOneMinusB,
        SingularFactor::BcMinusCMinusTwoB,
        SingularFactor::Quartic,
        SingularFactor::Q1,
        SingularFactor::Q2,
        SingularFactor::E21PrintedQuartic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SingularFactor::EDenominator => "e-denominator",
            SingularFactor::BcMinusOneMinusB => "bc-1-b",
            SingularFactor::BcMinusCMinusTwoB => "bc-c-2b",
            SingularFactor::Quartic => "quartic",
            SingularFactor::Q1 => "q1",
            SingularFactor::Q2 => "q2",
            SingularFactor::E21PrintedQuartic => "e21-printed-quartic",
        }
    }
}

impl fmt::Display for SingularFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The two curve families attached to a parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// Built from the edge cubic `x^3 - E10 x^2 + E20 x - E30`.
    One,
    /// Built from the face-diagonal cubic `d^3 - E01 d^2 + E02 d - E03`.
    Two,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::One, Branch::Two];

    pub fn index(self) -> u8 {
        match self {
            Branch::One => 1,
            Branch::Two => 2,
        }
    }
}

/// The nine elementary multisymmetric values and the space diagonal `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisymmetricProfile {
    pub e10: BigRational,
    pub e20: BigRational,
    pub e30: BigRational,
    pub e01: BigRational,
    pub e02: BigRational,
    pub e03: BigRational,
    pub e11: BigRational,
    pub e21: BigRational,
    pub e12: BigRational,
    pub l: BigRational,
}

impl MultisymmetricProfile {
    pub fn master_identity_holds(&self) -> bool {
        check_master_identity(&self.e10, &self.e01, &self.e11, &self.l)
    }

    /// Coefficients `(e1, e2, e3)` of the monic cubic whose roots are the edges
    /// (branch one) or the face diagonals (branch two).
    pub fn cubic_coefficients(&self, branch: Branch) -> [BigRational; 3] {
        match branch {
            Branch::One => [self.e10.clone(), self.e20.clone(), self.e30.clone()],
            Branch::Two => [self.e01.clone(), self.e02.clone(), self.e03.clone()],
        }
    }

    /// The first three factor equations rewritten in elementary multisymmetric
    /// values: `p0`, `p1 + p2 + p3` and `d1 p1 + d2 p2 + d3 p3`. All three vanish
    /// on any profile built from a solution of the factor equations.
    pub fn factor_residuals(&self) -> [BigRational; 3] {
        let two = int(2);
        let three = int(3);
        let sum_x2 = &self.e10 * &self.e10 - &two * &self.e20;
        let sum_d2 = &self.e01 * &self.e01 - &two * &self.e02;
        let p0 = &sum_x2 - &self.l * &self.l;
        let p_sum = &two * &sum_x2 - &sum_d2;
        let dp_sum = &self.e10 * &self.e11
            - &self.e20 * &self.e01
            - &self.e21
            - &self.e01 * &self.e01 * &self.e01
            + &three * &self.e01 * &self.e02
            - &three * &self.e03;
        [p0, p_sum, dp_sum]
    }
}

/// `(2 E11)^2 + (E01^2 + L^2 - E10^2)^2 - 8 E01^2 L^2 = 0`, exactly.
pub fn check_master_identity(
    e10: &BigRational,
    e01: &BigRational,
    e11: &BigRational,
    l: &BigRational,
) -> bool {
    let two_e11 = int(2) * e11;
    let inner = e01 * e01 + l * l - e10 * e10;
    let value = &two_e11 * &two_e11 + &inner * &inner - int(8) * e01 * e01 * l * l;
    value.is_zero()
}

/// Curve data of both families at one parameter point.
///
/// `q*`/`p*` come from the `Q`/`P` formulas and `d*` from the separately
/// printed `D` formulas; the two routes are tied by `D = -P^2 / Q^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePair {
    pub q1: BigRational,
    pub p1: BigRational,
    pub d1: BigRational,
    pub q2: BigRational,
    pub p2: BigRational,
    pub d2: BigRational,
}

/// `(Q, P, D)` of a single branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchCurve {
    pub q: BigRational,
    pub p: BigRational,
    pub d: BigRational,
}

impl CurvePair {
    pub fn branch(&self, branch: Branch) -> BranchCurve {
        match branch {
            Branch::One => BranchCurve {
                q: self.q1.clone(),
                p: self.p1.clone(),
                d: self.d1.clone(),
            },
            Branch::Two => BranchCurve {
                q: self.q2.clone(),
                p: self.p2.clone(),
                d: self.d2.clone(),
            },
        }
    }

    /// `D1 Q1^3 + P1^2` and `D2 Q2^3 + P2^2`.
    pub fn structure_residuals(&self) -> [BigRational; 2] {
        let r = |d: &BigRational, q: &BigRational, p: &BigRational| d * q * q * q + p * p;
        [r(&self.d1, &self.q1, &self.p1), r(&self.d2, &self.q2, &self.p2)]
    }

    pub fn structure_holds(&self) -> bool {
        self.structure_residuals().iter().all(Zero::is_zero)
    }
}

struct Formulas {
    e_den: BivariatePoly,
    e11_num: BivariatePoly,
    e10_num: BivariatePoly,
    e01_num: BivariatePoly,
    e12_num: BivariatePoly,
    e21_num: BivariatePoly,
    e03_a: BivariatePoly,
    e03_b: BivariatePoly,
    e30_a: BivariatePoly,
    e30_b: BivariatePoly,
    e02_num: BivariatePoly,
    e20_a: BivariatePoly,
    e20_b: BivariatePoly,
    quartic: BivariatePoly,
    quartic_e21: BivariatePoly,
    q1: BivariatePoly,
    q2: BivariatePoly,
    p1: BivariatePoly,
    p2: BivariatePoly,
}

fn formulas() -> &'static Formulas {
    static CELL: OnceLock<Formulas> = OnceLock::new();
    CELL.get_or_init(|| {
        use tables::*;
        let p = BivariatePoly::from_terms;
        Formulas {
            e_den: p(E_DENOMINATOR),
            e11_num: p(E11_NUMERATOR),
            e10_num: p(E10_NUMERATOR),
            e01_num: p(E01_NUMERATOR),
            e12_num: p(E12_NUMERATOR),
            e21_num: p(E21_NUMERATOR),
            e03_a: p(E03_FACTOR_A),
            e03_b: p(E03_FACTOR_B),
            e30_a: p(E30_FACTOR_A),
            e30_b: p(E30_FACTOR_B),
            e02_num: p(E02_NUMERATOR),
            e20_a: p(E20_FACTOR_A),
            e20_b: p(E20_FACTOR_B),
            quartic: p(QUARTIC),
            quartic_e21: p(QUARTIC_E21_PRINTED),
            q1: p(Q1_BRACKET),
            q2: p(Q2_BRACKET),
            p1: p(P1_BRACKET),
            p2: p(P2_BRACKET),
        }
    })
}

/// Values of every denominator factor at a point.
struct FactorValues {
    e_den: BigRational,
    f1: BigRational,
    f2: BigRational,
    quartic: BigRational,
    q1_bracket: BigRational,
    q2_bracket: BigRational,
    quartic_e21: BigRational,
}

impl FactorValues {
    fn at(p: &ParameterPoint) -> Self {
        let f = formulas();
        let (b, c) = (&p.b, &p.c);
        Self {
            e_den: f.e_den.eval(b, c),
            f1: b * c - BigRational::one() - b,
            f2: b * c - c - int(2) * b,
            quartic: f.quartic.eval(b, c),
            q1_bracket: f.q1.eval(b, c),
            q2_bracket: f.q2.eval(b, c),
            quartic_e21: f.quartic_e21.eval(b, c),
        }
    }

    fn value(&self, factor: SingularFactor) -> &BigRational {
        match factor {
            SingularFactor::EDenominator => &self.e_den,
            SingularFactor::BcMinusOneMinusB => &self.f1,
            SingularFactor::BcMinusCMinusTwoB => &self.f2,
            SingularFactor::Quartic => &self.quartic,
            SingularFactor::Q1 => &self.q1_bracket,
            SingularFactor::Q2 => &self.q2_bracket,
            SingularFactor::E21PrintedQuartic => &self.quartic_e21,
        }
    }

    fn vanishing(&self, among: &[SingularFactor]) -> Vec<SingularFactor> {
        among
            .iter()
            .copied()
            .filter(|&f| self.value(f).is_zero())
            .collect()
    }
}

fn factors_for(variant: FormulaVariant) -> &'static [SingularFactor] {
    match variant {
        FormulaVariant::Printed => &SingularFactor::ALL,
        FormulaVariant::Corrected => &SingularFactor::ALL[..6],
    }
}

/// Every denominator factor that vanishes at `p`. Empty means every formula is defined.
pub fn singular_locus_check(p: &ParameterPoint, variant: FormulaVariant) -> Vec<SingularFactor> {
    FactorValues::at(p).vanishing(factors_for(variant))
}

/// The nine multisymmetric values at `p`, with `L = 1`.
pub fn elementary_profile(
    p: &ParameterPoint,
    variant: FormulaVariant,
) -> Result<MultisymmetricProfile> {
    let fv = FactorValues::at(p);
    let mut needed = vec![
        SingularFactor::EDenominator,
        SingularFactor::BcMinusOneMinusB,
        SingularFactor::BcMinusCMinusTwoB,
        SingularFactor::Quartic,
    ];
    if variant == FormulaVariant::Printed {
        needed.push(SingularFactor::E21PrintedQuartic);
    }
    let bad = fv.vanishing(&needed);
    if !bad.is_empty() {
        return Err(Error::SingularInput(bad));
    }

    let f = formulas();
    let (b, c) = (&p.b, &p.c);
    let half = rat(1, 2);
    let half_b = &half * b;

    let e11 = -(b * f.e11_num.eval(b, c)) / &fv.e_den;
    let e10 = -f.e10_num.eval(b, c) / &fv.e_den;
    let e01 = -(b * f.e01_num.eval(b, c)) / &fv.e_den;

    let lin_sq = &fv.f1 * &fv.f1 * &fv.f2 * &fv.f2;
    let full_den = &fv.quartic * &lin_sq;

    let e12 = f.e12_num.eval(b, c) / &full_den;
    let e21 = match variant {
        FormulaVariant::Printed => {
            &half_b * f.e21_num.eval(b, c) / (&fv.quartic_e21 * &lin_sq)
        }
        FormulaVariant::Corrected => {
            let num = f.e21_num.eval(b, c) - int(4) * c * c * c;
            &half_b * num / &full_den
        }
    };
    let e03 = &half_b * f.e03_a.eval(b, c) * f.e03_b.eval(b, c) / &full_den;
    let e30 = c * b * b * (BigRational::one() - c) * (c - int(2))
        * f.e30_a.eval(b, c)
        * f.e30_b.eval(b, c)
        / &full_den;
    let e02 = &half * f.e02_num.eval(b, c) / &lin_sq;
    let e20 = &half_b * f.e20_a.eval(b, c) * f.e20_b.eval(b, c) / &lin_sq;

    Ok(MultisymmetricProfile {
        e10,
        e20,
        e30,
        e01,
        e02,
        e03,
        e11,
        e21,
        e12,
        l: BigRational::one(),
    })
}

/// `Q1, P1, D1, Q2, P2, D2` at `p`.
///
/// `P2` carries the quartic to the first power (as `P1` does); with the
/// square that appears in print, `D2 = -P2^2/Q2^3` cannot hold.
pub fn curve_pair(p: &ParameterPoint) -> Result<CurvePair> {
    let fv = FactorValues::at(p);
    let bad = fv.vanishing(&[
        SingularFactor::Quartic,
        SingularFactor::Q1,
        SingularFactor::Q2,
    ]);
    if !bad.is_empty() {
        return Err(Error::SingularInput(bad));
    }
    let f = formulas();
    let (b, c) = (&p.b, &p.c);
    let three_halves = rat(3, 2);
    let half = rat(1, 2);

    let q1 = &three_halves * &fv.q1_bracket;
    let q2 = &three_halves * &fv.q2_bracket;
    let p1_bracket = f.p1.eval(b, c);
    let p2_bracket = f.p2.eval(b, c);
    let p1 = &half * &p1_bracket / &fv.quartic;
    let p2 = &half * b * &p2_bracket / &fv.quartic;

    let quartic_sq = &fv.quartic * &fv.quartic;
    let cube = |x: &BigRational| x * x * x;
    let d1 = -(rat(2, 27) * &p1_bracket * &p1_bracket) / (cube(&fv.q1_bracket) * &quartic_sq);
    let d2 = -(rat(2, 27) * b * b * &p2_bracket * &p2_bracket)
        / (cube(&fv.q2_bracket) * &quartic_sq);

    Ok(CurvePair {
        q1,
        p1,
        d1,
        q2,
        p2,
        d2,
    })
}
