use cuboid_core::arith::{int, rat};
use cuboid_core::{
    curve_pair, elementary_profile, singular_locus_check, Error, FormulaVariant, ParameterPoint,
    SingularFactor,
};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = cuboid_core::BigRational> {
    (-100i64..=100, 1i64..=100).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = ParameterPoint> {
    (small_rational(), small_rational()).prop_map(|(b, c)| ParameterPoint::new(b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn master_identity_on_regular_points(p in point()) {
        for variant in [FormulaVariant::Printed, FormulaVariant::Corrected] {
            match elementary_profile(&p, variant) {
                Ok(prof) => prop_assert!(prof.master_identity_holds()),
                Err(Error::SingularInput(f)) => {
                    prop_assert_eq!(f.clone(), singular_locus_check(&p, variant)
                        .into_iter()
                        .filter(|s| !matches!(s, SingularFactor::Q1 | SingularFactor::Q2))
                        .collect::<Vec<_>>());
                }
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }
    }

    #[test]
    fn structure_identity(p in point()) {
        if let Ok(pair) = curve_pair(&p) {
            prop_assert!(pair.structure_holds(), "{:?}", pair.structure_residuals());
        }
    }

    #[test]
    fn corrected_profile_solves_symmetrized_equations(p in point()) {
        if let Ok(prof) = elementary_profile(&p, FormulaVariant::Corrected) {
            for r in prof.factor_residuals() {
                prop_assert!(r.is_zero());
            }
        }
    }

    #[test]
    fn variants_differ_only_in_e21(p in point()) {
        if let (Ok(a), Ok(b)) = (
            elementary_profile(&p, FormulaVariant::Printed),
            elementary_profile(&p, FormulaVariant::Corrected),
        ) {
            prop_assert_eq!(a.e10, b.e10);
            prop_assert_eq!(a.e30, b.e30);
            prop_assert_eq!(a.e03, b.e03);
            prop_assert_eq!(a.e12, b.e12);
        }
    }
}

#[test]
fn printed_e21_breaks_the_third_residual() {
    let p = ParameterPoint::new(rat(1, 2), rat(1, 2));
    let printed = elementary_profile(&p, FormulaVariant::Printed).unwrap();
    let corrected = elementary_profile(&p, FormulaVariant::Corrected).unwrap();
    assert_eq!(printed.e21, rat(5452, 4375));
    // The residual is linear in E21 with coefficient -1.
    assert_eq!(printed.factor_residuals()[2], &corrected.e21 - &printed.e21);
    assert_eq!(printed.factor_residuals()[2], rat(-7552, 4375));
    assert_eq!(corrected.factor_residuals()[2], int(0));
}

#[test]
fn singular_points_are_reported() {
    let p = ParameterPoint::from_ints(1, 2);
    let bad = singular_locus_check(&p, FormulaVariant::Printed);
    assert!(bad.contains(&SingularFactor::EDenominator));
    assert!(bad.contains(&SingularFactor::BcMinusOneMinusB));
    assert!(matches!(
        elementary_profile(&p, FormulaVariant::Printed),
        Err(Error::SingularInput(_))
    ));
    assert!(singular_locus_check(&ParameterPoint::from_ints(1, 3), FormulaVariant::Printed).is_empty());
}

#[test]
fn frozen_curve_data() {
    let pair = curve_pair(&ParameterPoint::new(rat(9, 8), int(3))).unwrap();
    assert_eq!(pair.q1, rat(24975, 1024));
    assert_eq!(pair.q2, rat(2025, 1024));
    assert_eq!(pair.p1, rat(-185625, 16384));
    assert_eq!(pair.p2, int(0));
    assert_eq!(pair.d1, rat(-12100, 1367631));
    assert_eq!(pair.d2, int(0));

    let pair = curve_pair(&ParameterPoint::new(rat(1, 2), rat(1, 2))).unwrap();
    assert_eq!(pair.q1, rat(2775, 256));
    assert_eq!(pair.q2, rat(5475, 256));
    assert_eq!(pair.p1, rat(-6875, 2048));
    assert_eq!(pair.p2, rat(74375, 2048));
    assert_eq!(pair.d2, rat(-1416100, 10503459));
}
