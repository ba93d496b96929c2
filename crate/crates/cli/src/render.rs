//! Serializable views of an analysis. Exact rationals are written as `p/q`
//! strings (integers as `p`), never as floats.

use cuboid_core::{BigRational, Branch, ConicPoint};
use num_traits::One;
use serde::Serialize;

use crate::analysis::{BranchAnalysis, Lift, PointAnalysis};

pub fn rs(q: &BigRational) -> String {
    q.to_string()
}

fn pair(p: &ConicPoint) -> [String; 2] {
    [rs(&p.w), rs(&p.alpha)]
}

#[derive(Debug, Serialize)]
pub struct Profile {
    pub e10: String,
    pub e20: String,
    pub e30: String,
    pub e01: String,
    pub e02: String,
    pub e03: String,
    pub e11: String,
    pub e21: String,
    pub e12: String,
    pub l: String,
    pub master_identity: bool,
    pub symmetrized_residuals: [String; 3],
    pub symmetrized_equations_hold: bool,
}

#[derive(Debug, Serialize)]
pub struct LegendreView {
    #[serde(rename = "M")]
    pub big_m: String,
    #[serde(rename = "N")]
    pub big_n: String,
    pub m: String,
    pub n: String,
    #[serde(rename = "MN")]
    pub mn: String,
    pub solvable: bool,
    pub solution: Option<[String; 3]>,
}

#[derive(Debug, Serialize)]
pub struct RootView {
    pub w: String,
    pub multiplicity: u32,
}

#[derive(Debug, Serialize)]
pub struct LiftView {
    pub w: String,
    pub alpha: String,
    pub reduced_roots: [String; 3],
    pub cubic_roots: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct BranchView {
    pub branch: u8,
    #[serde(rename = "Q")]
    pub q: String,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "D")]
    pub d: String,
    pub legendre: LegendreView,
    pub conic_rational: bool,
    pub conic_point: Option<[String; 2]>,
    pub mordell_k: Option<String>,
    pub sextic_roots: Vec<RootView>,
    pub lifts: Vec<LiftView>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub b: String,
    pub c: String,
    pub variant: &'static str,
    pub status: &'static str,
    pub singular_factors: Vec<&'static str>,
    pub profile: Option<Profile>,
    pub branches: Vec<BranchView>,
}

fn lift_view(l: &Lift) -> LiftView {
    LiftView {
        w: rs(&l.w),
        alpha: rs(&l.alpha),
        reduced_roots: l.reduced_roots.each_ref().map(rs),
        cubic_roots: l.cubic_roots.as_ref().map(|v| v.iter().map(rs).collect()),
    }
}

fn branch_view(b: &BranchAnalysis) -> BranchView {
    let form = &b.conic.form;
    BranchView {
        branch: b.branch.index(),
        q: rs(&b.curve.q),
        p: rs(&b.curve.p),
        d: rs(&b.curve.d),
        legendre: LegendreView {
            big_m: form.big_m.to_string(),
            big_n: form.big_n.to_string(),
            m: form.m.to_string(),
            n: form.n.to_string(),
            mn: form.mn().to_string(),
            solvable: b.conic.rational,
            solution: b
                .conic
                .solution
                .as_ref()
                .map(|s| [s.x.to_string(), s.y.to_string(), s.z.to_string()]),
        },
        conic_rational: b.conic.rational,
        conic_point: b.conic.point.as_ref().map(pair),
        mordell_k: b.mordell_k.as_ref().map(rs),
        sextic_roots: b
            .sextic_roots
            .iter()
            .map(|r| RootView {
                w: rs(&r.value),
                multiplicity: r.multiplicity,
            })
            .collect(),
        lifts: b.lifts.iter().map(lift_view).collect(),
    }
}

fn status(a: &PointAnalysis) -> &'static str {
    if a.is_singular() {
        "singular"
    } else {
        "ok"
    }
}

pub fn report(a: &PointAnalysis) -> Report {
    let profile = a.profile.as_ref().map(|p| {
        let residuals = a
            .symmetrized_residuals
            .as_ref()
            .expect("residuals accompany a profile");
        Profile {
            e10: rs(&p.e10),
            e20: rs(&p.e20),
            e30: rs(&p.e30),
            e01: rs(&p.e01),
            e02: rs(&p.e02),
            e03: rs(&p.e03),
            e11: rs(&p.e11),
            e21: rs(&p.e21),
            e12: rs(&p.e12),
            l: rs(&p.l),
            master_identity: a.master_identity.unwrap_or(false),
            symmetrized_residuals: residuals.each_ref().map(rs),
            symmetrized_equations_hold: residuals.iter().all(num_traits::Zero::is_zero),
        }
    });
    Report {
        b: rs(&a.point.b),
        c: rs(&a.point.c),
        variant: a.variant.as_str(),
        status: status(a),
        singular_factors: a.singular_factors.iter().map(|f| f.name()).collect(),
        profile,
        branches: a.branches.iter().map(branch_view).collect(),
    }
}

#[derive(Debug, Serialize)]
pub struct LiftedAlpha {
    pub branch: u8,
    pub w: String,
    pub alpha: String,
}

/// One line of scan output.
#[derive(Debug, Serialize)]
pub struct ScanRow {
    pub index: usize,
    pub b: String,
    pub c: String,
    pub status: &'static str,
    pub singular_factors: Vec<&'static str>,
    pub master_identity: Option<bool>,
    #[serde(rename = "Q1")]
    pub q1: Option<String>,
    #[serde(rename = "Q2")]
    pub q2: Option<String>,
    #[serde(rename = "MN1")]
    pub mn1: Option<String>,
    #[serde(rename = "MN2")]
    pub mn2: Option<String>,
    pub conic1_rational: Option<bool>,
    pub conic2_rational: Option<bool>,
    pub conic1_point: Option<[String; 2]>,
    pub conic2_point: Option<[String; 2]>,
    /// The projective conic meets Z = 0 in rational points (Q a square).
    pub conic1_at_infinity: Option<bool>,
    pub conic2_at_infinity: Option<bool>,
    pub sextic1_roots: Vec<String>,
    pub sextic2_roots: Vec<String>,
    pub lifted_alphas: Vec<LiftedAlpha>,
}

pub fn scan_row(index: usize, a: &PointAnalysis) -> ScanRow {
    let br = |b: Branch| a.branch(b);
    let (b1, b2) = (br(Branch::One), br(Branch::Two));
    let roots = |b: Option<&BranchAnalysis>| {
        b.map(|b| b.sextic_roots.iter().map(|r| rs(&r.value)).collect())
            .unwrap_or_default()
    };
    ScanRow {
        index,
        b: rs(&a.point.b),
        c: rs(&a.point.c),
        status: status(a),
        singular_factors: a.singular_factors.iter().map(|f| f.name()).collect(),
        master_identity: a.master_identity,
        q1: b1.map(|b| rs(&b.curve.q)),
        q2: b2.map(|b| rs(&b.curve.q)),
        mn1: b1.map(|b| b.conic.form.mn().to_string()),
        mn2: b2.map(|b| b.conic.form.mn().to_string()),
        conic1_rational: b1.map(|b| b.conic.rational),
        conic2_rational: b2.map(|b| b.conic.rational),
        conic1_point: b1.and_then(|b| b.conic.point.as_ref().map(pair)),
        conic2_point: b2.and_then(|b| b.conic.point.as_ref().map(pair)),
        conic1_at_infinity: b1.map(|b| b.conic.form.mn().is_one()),
        conic2_at_infinity: b2.map(|b| b.conic.form.mn().is_one()),
        sextic1_roots: roots(b1),
        sextic2_roots: roots(b2),
        lifted_alphas: a
            .branches
            .iter()
            .flat_map(|b| {
                b.lifts.iter().map(move |l| LiftedAlpha {
                    branch: b.branch.index(),
                    w: rs(&l.w),
                    alpha: rs(&l.alpha),
                })
            })
            .collect(),
    }
}

impl ScanRow {
    pub const CSV_HEADER: [&'static str; 20] = [
        "index",
        "b",
        "c",
        "variant",
        "status",
        "singular_factors",
        "master_identity",
        "Q1",
        "Q2",
        "MN1",
        "MN2",
        "conic1_rational",
        "conic2_rational",
        "conic1_point",
        "conic2_point",
        "conic1_at_infinity",
        "conic2_at_infinity",
        "sextic1_roots",
        "sextic2_roots",
        "lifted_alphas",
    ];

    /// CSV fields; lists are `;`-separated, points are `w;alpha` and lifts
    /// `branch:w:alpha`.
    pub fn csv_record(&self, variant: &str) -> Vec<String> {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        let flag = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_default();
        let point = |v: &Option<[String; 2]>| v.as_ref().map(|p| p.join(";")).unwrap_or_default();
        vec![
            self.index.to_string(),
            self.b.clone(),
            self.c.clone(),
            variant.to_string(),
            self.status.to_string(),
            self.singular_factors.join(";"),
            flag(self.master_identity),
            opt(&self.q1),
            opt(&self.q2),
            opt(&self.mn1),
            opt(&self.mn2),
            flag(self.conic1_rational),
            flag(self.conic2_rational),
            point(&self.conic1_point),
            point(&self.conic2_point),
            flag(self.conic1_at_infinity),
            flag(self.conic2_at_infinity),
            self.sextic1_roots.join(";"),
            self.sextic2_roots.join(";"),
            self.lifted_alphas
                .iter()
                .map(|l| format!("{}:{}:{}", l.branch, l.w, l.alpha))
                .collect::<Vec<_>>()
                .join(";"),
        ]
    }
}
