//! Acceptance suite: one PASS/FAIL line per criterion. Every check is exact;
//! the only numeric tolerances are the wall-clock budgets below.

use std::time::{Duration, Instant};

use cuboid_cli::analysis::analyze_point;
use cuboid_cli::scan::{run_scan, OutputFormat, ScanConfig};
use cuboid_core::arith::{cube_square_match, int, is_square_free, rat};
use cuboid_core::conic::{
    find_conic_point, holzer_search, legendre_solvable, parameter_from_point, parametrize_conic,
    solve_legendre, DEFAULT_SEARCH_LIMIT,
};
use cuboid_core::cubic::{
    alpha_from_surface_point, cubic_contains, reduced_cubic_roots, reduced_cubic_value,
    sextic_parameter, sextic_rational_roots,
};
use cuboid_core::poly::expand_roots;
use cuboid_core::verify::{check_factor_equations, positivity_gate};
use cuboid_core::{
    curve_pair, elementary_profile, singular_locus_check, BigInt, BigRational, Branch, ConicPoint,
    ConicSpec, CubicCurveSpec, CuboidWitness, CurvePair, Error, FormulaVariant, GateClass,
    LegendreSolution, ParameterPoint, SurfacePoint,
};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x00C0_B01D;
const HEIGHT: i64 = 100;

const BUDGET_MASTER: Duration = Duration::from_secs(10);
const BUDGET_STRUCTURE: Duration = Duration::from_secs(30);
const BUDGET_LEGENDRE: Duration = Duration::from_secs(10);
const BUDGET_CONIC: Duration = Duration::from_secs(5);
const BUDGET_LEMMA: Duration = Duration::from_secs(5);
const BUDGET_CUBE_SQUARE: Duration = Duration::from_secs(2);
const BUDGET_BASE_POINTS: Duration = Duration::from_secs(5);
const BUDGET_WITNESS: Duration = Duration::from_secs(2);
const BUDGET_DETERMINISM: Duration = Duration::from_secs(60);

const SAMPLE_POINTS: usize = 1000;
const CONIC_QS: usize = 10;
const CONIC_TS: usize = 100;
const LEMMA_WS: usize = 100;
const CUBE_SQUARE_MATCHES: usize = 200;
const CUBE_SQUARE_MISSES: usize = 50;
const BASE_POINT_SAMPLES: usize = 50;
const TRIPLES: usize = 20;
const PERTURBATIONS: usize = 20;
const GRID: usize = 20;

fn random_rational(rng: &mut ChaCha8Rng, height: i64) -> BigRational {
    rat(rng.gen_range(-height..=height), rng.gen_range(1..=height))
}

fn random_nonzero(rng: &mut ChaCha8Rng, height: i64) -> BigRational {
    loop {
        let q = random_rational(rng, height);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Random (b, c) where every formula is defined, with the curve pair attached.
fn nonsingular_sample(rng: &mut ChaCha8Rng, n: usize) -> Vec<(ParameterPoint, CurvePair)> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = ParameterPoint::new(random_rational(rng, HEIGHT), random_rational(rng, HEIGHT));
        if !singular_locus_check(&p, FormulaVariant::Printed).is_empty() {
            continue;
        }
        if let Ok(cp) = curve_pair(&p) {
            out.push((p, cp));
        }
    }
    out
}

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn master_identity(sample: &[(ParameterPoint, CurvePair)]) -> Check {
    for (p, _) in sample {
        for variant in [FormulaVariant::Printed, FormulaVariant::Corrected] {
            let profile = elementary_profile(p, variant).map_err(|e| format!("{p}: {e}"))?;
            ensure(profile.master_identity_holds(), || format!("identity fails at {p}"))?;
        }
    }
    Ok(format!("{} points, both variants", sample.len()))
}

fn structure_identity(sample: &[(ParameterPoint, CurvePair)]) -> Check {
    for (p, cp) in sample {
        ensure(cp.structure_holds(), || {
            format!("D Q^3 + P^2 residuals {:?} at {p}", cp.structure_residuals())
        })?;
    }
    Ok(format!("{} points, both branches", sample.len()))
}

fn legendre_criterion() -> Check {
    let mut checked = 0;
    for mn in (-100i64..=100).filter(|&k| k != 0) {
        let k = BigInt::from(mn);
        if !is_square_free(&k).map_err(|e| e.to_string())? {
            continue;
        }
        let criterion = legendre_solvable(&k).map_err(|e| e.to_string())?;
        let oracle = holzer_search(mn);
        ensure(criterion == oracle.is_some(), || {
            format!("MN = {mn}: criterion {criterion}, search {oracle:?}")
        })?;
        let solved = solve_legendre(&k).map_err(|e| e.to_string())?;
        ensure(solved.is_some() == criterion, || format!("MN = {mn}: solver disagrees"))?;
        if let Some(s) = solved {
            ensure(s.satisfies(&k), || format!("MN = {mn}: {s} is not a solution"))?;
        }
        checked += 1;
    }
    type Triple = (i64, i64, i64);
    let worked: [(i64, Option<Triple>); 5] = [
        (1, Some((1, 2, 1))),
        (2, None),
        (3, Some((3, 2, 1))),
        (-1, None),
        (66, None),
    ];
    for (mn, expected) in worked {
        let got = solve_legendre(&BigInt::from(mn)).map_err(|e| e.to_string())?;
        let want = expected.map(|(x, y, z)| LegendreSolution::from_ints(x, y, z));
        ensure(got == want, || format!("MN = {mn}: got {got:?}, want {want:?}"))?;
    }
    Ok(format!("{checked} square-free MN with |MN| <= 100, 5 worked cases"))
}

fn conic_parametrization(rng: &mut ChaCha8Rng) -> Check {
    let four = ConicSpec::new(int(4)).map_err(|e| e.to_string())?;
    let base = ConicPoint::new(int(1), int(1));
    let worked = parametrize_conic(&four, &base, &int(1)).map_err(|e| e.to_string())?;
    ensure(worked == ConicPoint::new(rat(-13, 3), rat(-7, 3)), || {
        format!("Q = 4, t = 1 gave {worked:?}")
    })?;
    ensure(parameter_from_point(&base, &worked) == Ok(int(1)), || "t = 1 not recovered".into())?;

    let mut qs: Vec<BigRational> = vec![int(1), int(4)];
    'grid: for b in -4..=4 {
        for c in -4..=4 {
            let p = ParameterPoint::from_ints(b, c);
            let Ok(a) = analyze_point(&p, FormulaVariant::Printed, DEFAULT_SEARCH_LIMIT) else {
                return Err(format!("scan verification failed at {p}"));
            };
            for br in &a.branches {
                if br.conic.rational && !qs.contains(&br.curve.q) {
                    qs.push(br.curve.q.clone());
                    if qs.len() == CONIC_QS {
                        break 'grid;
                    }
                }
            }
        }
    }
    ensure(qs.len() == CONIC_QS, || format!("only {} solvable Q found", qs.len()))?;

    let mut degenerate = 0;
    for q in &qs {
        let spec = ConicSpec::new(q.clone()).map_err(|e| e.to_string())?;
        let base = find_conic_point(&spec)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("Q = {q} has no point"))?;
        ensure(spec.contains(&base), || format!("base point off the conic for Q = {q}"))?;
        let mut accepted = 0;
        while accepted < CONIC_TS {
            let t = random_rational(rng, HEIGHT);
            let pt = match parametrize_conic(&spec, &base, &t) {
                Ok(pt) => pt,
                Err(Error::DegenerateParameter(_)) => {
                    degenerate += 1;
                    continue;
                }
                Err(e) => return Err(format!("Q = {q}, t = {t}: {e}")),
            };
            ensure(spec.contains(&pt), || format!("Q = {q}, t = {t}: point off the conic"))?;
            let back = parameter_from_point(&base, &pt).map_err(|e| format!("Q = {q}: {e}"))?;
            ensure(back == t, || format!("Q = {q}: t = {t} came back as {back}"))?;
            accepted += 1;
        }
    }
    Ok(format!(
        "{CONIC_QS} Q x {CONIC_TS} t, worked case, {degenerate} degenerate t skipped"
    ))
}

fn lemma_suite(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..LEMMA_WS {
        let w = random_rational(rng, HEIGHT);
        let d = sextic_parameter(&w);
        for y in reduced_cubic_roots(&w) {
            ensure(reduced_cubic_value(&d, &y).is_zero(), || {
                format!("w = {w}: y = {y} misses y^3 + y^2 + D")
            })?;
        }
        let roots = expand_roots(&sextic_rational_roots(&d));
        ensure(roots.contains(&w), || format!("w = {w} not recovered from D = {d}"))?;
    }
    let d = rat(-4, 27);
    ensure(sextic_parameter(&int(0)) == d, || "D(0) is not -4/27".into())?;
    // In u = w^2 the sextic is -4/27 u (u - 9)^2.
    let mut ws = expand_roots(&sextic_rational_roots(&d));
    ws.sort();
    let want = [-3, -3, 0, 0, 3, 3].map(int).to_vec();
    ensure(ws == want, || format!("D = -4/27 roots {ws:?}"))?;
    let mut ys = reduced_cubic_roots(&int(0)).to_vec();
    ys.sort();
    ensure(ys == vec![rat(-2, 3), rat(-2, 3), rat(1, 3)], || format!("y roots {ys:?}"))?;
    Ok(format!("{LEMMA_WS} random w, D = -4/27 closed case"))
}

fn cube_square(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..CUBE_SQUARE_MATCHES {
        let a = random_rational(rng, HEIGHT);
        let x = &a * &a;
        let y = &x * &a;
        let got = cube_square_match(&x, &y);
        ensure(got.as_ref() == Some(&a), || format!("alpha = {a} gave {got:?}"))?;
    }
    let mut misses = 0;
    while misses < CUBE_SQUARE_MISSES {
        let x = random_rational(rng, HEIGHT);
        let y = random_rational(rng, HEIGHT);
        if &x * &x * &x == &y * &y {
            continue;
        }
        ensure(cube_square_match(&x, &y).is_none(), || format!("({x}, {y}) matched"))?;
        misses += 1;
    }
    Ok(format!("{CUBE_SQUARE_MATCHES} round trips, {CUBE_SQUARE_MISSES} non-matches"))
}

fn base_points(rng: &mut ChaCha8Rng) -> Check {
    for (p, cp) in nonsingular_sample(rng, BASE_POINT_SAMPLES) {
        for branch in [Branch::One, Branch::Two] {
            let spec = CubicCurveSpec::new(cp.branch(branch).p);
            for w in [int(1), int(-1)] {
                ensure(cubic_contains(&spec, &w, &BigRational::zero()), || {
                    format!("({w}, 0) off branch {} at {p}", branch.index())
                })?;
                let pt = SurfacePoint { at: p.clone(), w: w.clone(), branch };
                let r = alpha_from_surface_point(&pt);
                ensure(matches!(r, Err(Error::ExceptionalPoint(_))), || {
                    format!("w = {w} at {p} gave {r:?}")
                })?;
            }
        }
    }
    Ok(format!("{BASE_POINT_SAMPLES} points, both branches"))
}

fn rotate(v: [BigRational; 3], k: usize) -> [BigRational; 3] {
    let mut v = v;
    v.rotate_right(k);
    v
}

fn pythagorean_witnesses(rng: &mut ChaCha8Rng) -> Check {
    let mut triples = 0;
    let mut perturbed = 0;
    while triples < TRIPLES {
        let m: i64 = rng.gen_range(2..=40);
        let n: i64 = rng.gen_range(1..m);
        if num_integer::gcd(m, n) != 1 || (m - n) % 2 == 0 {
            continue;
        }
        let scale = random_nonzero(rng, 20).abs();
        let (a, b, c) = (m * m - n * n, 2 * m * n, m * m + n * n);
        let (a, b, c) = (int(a) * &scale, int(b) * &scale, int(c) * &scale);
        let k = triples % 3;
        // Edges (a, b, 0); the diagonal opposite the zero edge is c.
        let x = rotate([a.clone(), b.clone(), BigRational::zero()], k);
        let d = rotate([b, a, c.clone()], k);
        let w = CuboidWitness::new(x, d, c);
        ensure(check_factor_equations(&w), || format!("{w:?} fails the factor equations"))?;
        let gate = positivity_gate(&w).map_err(|e| e.to_string())?;
        ensure(gate == GateClass::FactorOnly, || format!("{w:?} classified {gate}"))?;

        for _ in 0..PERTURBATIONS {
            let slot = rng.gen_range(0..7);
            let delta = random_nonzero(rng, HEIGHT).abs();
            let mut v = w.clone();
            match slot {
                0..=2 => v.x[slot] += &delta,
                3..=5 => v.d[slot - 3] += &delta,
                _ => v.l += &delta,
            }
            ensure(!check_factor_equations(&v), || format!("perturbation {v:?} still passes"))?;
            perturbed += 1;
        }
        triples += 1;
    }
    Ok(format!("{triples} triples, {perturbed} perturbations"))
}

fn determinism() -> Check {
    let axis = |start: i64, den: i64| -> Vec<BigRational> {
        (0..GRID as i64).map(|k| rat(start + k, den)).collect()
    };
    let config = |workers| ScanConfig {
        b_range: "1/3:20/3:1/3".into(),
        c_range: "-19/4:0:1/4".into(),
        bs: axis(1, 3),
        cs: axis(-19, 4),
        format: OutputFormat::JsonLines,
        variant: FormulaVariant::Printed,
        workers,
        search_limit: DEFAULT_SEARCH_LIMIT,
    };
    let mut outputs = Vec::new();
    for workers in [1, 8] {
        let mut buf = Vec::new();
        run_scan(&config(workers), &mut buf).map_err(|e| e.to_string())?;
        outputs.push(buf);
    }
    ensure(outputs[0] == outputs[1], || "1-worker and 8-worker output differ".into())?;
    let rows = String::from_utf8_lossy(&outputs[0]).lines().count() - 2;
    ensure(rows == GRID * GRID, || format!("{rows} rows"))?;
    Ok(format!("{GRID}x{GRID} grid, {} bytes identical", outputs[0].len()))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let sample = nonsingular_sample(&mut rng, SAMPLE_POINTS);
    let mut failures = 0;
    let mut report = |n: u32, name: &str, budget: Duration, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(e) => (false, e),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "{} {n}. {name}: {detail} [{:.2}s / {}s]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    };
    report(1, "master identity", BUDGET_MASTER, &mut || master_identity(&sample));
    report(2, "structure identity", BUDGET_STRUCTURE, &mut || structure_identity(&sample));
    report(3, "Legendre criterion vs search", BUDGET_LEGENDRE, &mut legendre_criterion);
    let mut r = rng.clone();
    report(4, "conic parametrization", BUDGET_CONIC, &mut || conic_parametrization(&mut r));
    report(5, "reduced cubic and sextic", BUDGET_LEMMA, &mut || lemma_suite(&mut r));
    report(6, "cube-square match", BUDGET_CUBE_SQUARE, &mut || cube_square(&mut r));
    report(7, "base points", BUDGET_BASE_POINTS, &mut || base_points(&mut r));
    report(8, "Pythagorean witnesses", BUDGET_WITNESS, &mut || pythagorean_witnesses(&mut r));
    report(9, "scan determinism", BUDGET_DETERMINISM, &mut determinism);
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
