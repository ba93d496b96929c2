//! The conics `w^2 + 3 = Q alpha^2`.
//!
//! Writing `Q = M m^2 / (N n^2)` with `M, N` square-free, a rational point
//! exists iff the Legendre equation `X^2 - MN Y^2 + 3 Z^2 = 0` has a nonzero
//! integer solution. The canonical form here always has `N = 1`.
//!
//! Solvability of `X^2 - k Y^2 + 3 Z^2 = 0` for square-free `k` is decided by
//! local conditions: `k > 0`, `-3` a square modulo `k`, and `k` (or `k/3` when
//! `3 | k`) a square modulo 3. A minimal solution lies in the box
//! `|X| <= sqrt(3k)`, `|Y| <= sqrt(3)`, `|Z| <= sqrt(k)`, so within it `Y = ±1`
//! and solvability is equivalent to `k = X^2 + 3 Z^2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorize, is_square_free, is_square_mod, sqrt_mod_prime, square_free_split};
use crate::error::{Error, Result};

/// `k` up to this size gets its representative from a direct scan over `Z`;
/// beyond it the representative is composed from the prime factors of `k`.
pub const DEFAULT_SEARCH_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicSpec {
    pub q: BigRational,
}

impl ConicSpec {
    pub fn new(q: BigRational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Self { q })
    }

    pub fn contains(&self, p: &ConicPoint) -> bool {
        &p.w * &p.w + BigRational::from_integer(3.into()) == &self.q * &p.alpha * &p.alpha
    }
}

/// `Q = big_m * m^2 / (big_n * n^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreForm {
    pub big_m: BigInt,
    pub big_n: BigInt,
    pub m: BigInt,
    pub n: BigInt,
}

impl LegendreForm {
    pub fn mn(&self) -> BigInt {
        &self.big_m * &self.big_n
    }

    pub fn q(&self) -> BigRational {
        BigRational::new(
            &self.big_m * &self.m * &self.m,
            &self.big_n * &self.n * &self.n,
        )
    }
}

/// Nonzero `(X, Y, Z)` with `X^2 - MN Y^2 + 3 Z^2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreSolution {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl LegendreSolution {
    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self {
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn satisfies(&self, mn: &BigInt) -> bool {
        let lhs = &self.x * &self.x + BigInt::from(3) * &self.z * &self.z;
        let nonzero = !(self.x.is_zero() && self.y.is_zero() && self.z.is_zero());
        nonzero && lhs == mn * &self.y * &self.y
    }
}

impl fmt::Display for LegendreSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicPoint {
    pub w: BigRational,
    pub alpha: BigRational,
}

impl ConicPoint {
    pub fn new(w: BigRational, alpha: BigRational) -> Self {
        Self { w, alpha }
    }
}

pub fn normalize_conic(spec: &ConicSpec) -> Result<LegendreForm> {
    let split = square_free_split(&spec.q)?;
    Ok(LegendreForm {
        big_m: split.squarefree,
        big_n: BigInt::one(),
        m: split.cofactor.numer().clone(),
        n: split.cofactor.denom().clone(),
    })
}

/// Whether `X^2 - mn Y^2 + 3 Z^2 = 0` has a nonzero integer solution.
pub fn legendre_solvable(mn: &BigInt) -> Result<bool> {
    if mn.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !is_square_free(mn)? {
        return Err(Error::NotSquareFree(mn.to_string()));
    }
    if !mn.is_positive() {
        return Ok(false);
    }
    let three = BigInt::from(3);
    let local_three = if (mn % &three).is_zero() {
        mn / &three
    } else {
        mn.clone()
    };
    Ok(is_square_mod(&BigInt::from(-3), mn)? && is_square_mod(&local_three, &three)?)
}

/// First nonzero solution of `X^2 - mn Y^2 + 3 Z^2 = 0` in the box
/// `|X| <= ceil(sqrt(3|mn|))`, `|Y| <= 2`, `|Z| <= ceil(sqrt(|mn|))`, searched by
/// increasing `max(|X|, |Y|, |Z|)` and then lexicographically.
///
/// Exhaustive and slow; meant for small `mn` and for cross-checking
/// [`legendre_solvable`].
pub fn holzer_search(mn: i64) -> Option<LegendreSolution> {
    let k = mn.unsigned_abs();
    let ceil_sqrt = |v: u64| {
        let r = v.sqrt();
        if r * r == v {
            r
        } else {
            r + 1
        }
    };
    let bx = ceil_sqrt(3 * k) as i64;
    let by = 2i64;
    let bz = ceil_sqrt(k) as i64;
    let mn = mn as i128;
    for size in 1..=bx.max(by).max(bz) {
        let mut best: Option<(i64, i64, i64)> = None;
        for x in -bx.min(size)..=bx.min(size) {
            for y in -by.min(size)..=by.min(size) {
                for z in -bz.min(size)..=bz.min(size) {
                    if x.abs().max(y.abs()).max(z.abs()) != size {
                        continue;
                    }
                    let (xi, yi, zi) = (x as i128, y as i128, z as i128);
                    if xi * xi - mn * yi * yi + 3 * zi * zi == 0 {
                        best = Some(best.map_or((x, y, z), |b| b.min((x, y, z))));
                    }
                }
            }
        }
        if let Some((x, y, z)) = best {
            return Some(LegendreSolution::from_ints(x, y, z));
        }
    }
    None
}

pub fn solve_legendre(mn: &BigInt) -> Result<Option<LegendreSolution>> {
    solve_legendre_bounded(mn, DEFAULT_SEARCH_LIMIT)
}

/// Representative solution with `X, Y, Z > 0`, minimal by
/// `(max(X, Y, Z), X, Y, Z)` within the Holzer box, or `None` when unsolvable.
///
/// For `mn <= search_limit` the box is scanned. Larger `mn` take a solution
/// with `Y = 1` composed from representations `p = a^2 + 3 b^2` of its prime
/// factors; that solution is valid but not necessarily minimal.
pub fn solve_legendre_bounded(mn: &BigInt, search_limit: u64) -> Result<Option<LegendreSolution>> {
    if !legendre_solvable(mn)? {
        return Ok(None);
    }
    let sol = match mn.to_u64().filter(|&k| k <= search_limit) {
        Some(k) => box_representative(k),
        None => Some(composed_representative(mn)?),
    };
    match sol {
        Some(s) if s.satisfies(mn) => Ok(Some(s)),
        Some(s) => Err(Error::Consistency(format!(
            "Legendre solution {s} fails X^2 - {mn} Y^2 + 3 Z^2 = 0"
        ))),
        None => Err(Error::Consistency(format!(
            "solvability criterion holds for {mn} but no solution was found"
        ))),
    }
}

fn box_representative(k: u64) -> Option<LegendreSolution> {
    let mut best: Option<(u64, u64, u64, u64)> = None;
    for y in 1..=2u64 {
        let target = k as u128 * (y * y) as u128;
        let z_max = (target / 3).sqrt() as u64;
        for z in 1..=z_max {
            let rest = target - 3 * (z as u128) * (z as u128);
            let x = rest.sqrt();
            if x > 0 && x * x == rest {
                let x = x as u64;
                let key = (x.max(y).max(z), x, y, z);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
    }
    best.map(|(_, x, y, z)| LegendreSolution {
        x: x.into(),
        y: y.into(),
        z: z.into(),
    })
}

fn composed_representative(mn: &BigInt) -> Result<LegendreSolution> {
    let fact = factorize(mn)?;
    let three = BigInt::from(3);
    let (mut a, mut b) = (BigInt::one(), BigInt::zero());
    for (p, _) in &fact.factors {
        let (c, d) = if *p == 3u32.into() {
            (BigInt::zero(), BigInt::one())
        } else {
            cornacchia_three(p).ok_or_else(|| {
                Error::Consistency(format!("{p} has no representation x^2 + 3 y^2"))
            })?
        };
        let next_a = &a * &c - &three * &b * &d;
        let next_b = &a * &d + &b * &c;
        a = next_a;
        b = next_b;
    }
    Ok(LegendreSolution {
        x: a.abs(),
        y: BigInt::one(),
        z: b.abs(),
    })
}

/// `(a, b)` with `a^2 + 3 b^2 = p` for a prime `p ≡ 1 (mod 3)`.
fn cornacchia_three(p: &num_bigint::BigUint) -> Option<(BigInt, BigInt)> {
    let pi = BigInt::from(p.clone());
    let minus_three = (&pi - BigInt::from(3)).to_biguint()?;
    let root = BigInt::from(sqrt_mod_prime(&minus_three, p)?);
    let bound = pi.sqrt();
    for start in [root.clone(), &pi - &root] {
        let (mut r0, mut r1) = (pi.clone(), start);
        while r1 > bound {
            let r2 = &r0 % &r1;
            r0 = r1;
            r1 = r2;
        }
        let rest = &pi - &r1 * &r1;
        let three = BigInt::from(3);
        if (&rest % &three).is_zero() {
            let s = (&rest / &three).sqrt();
            if &s * &s * &three == rest {
                return Some((r1, s));
            }
        }
    }
    None
}

pub fn find_conic_point(spec: &ConicSpec) -> Result<Option<ConicPoint>> {
    find_conic_point_bounded(spec, DEFAULT_SEARCH_LIMIT)
}

/// A rational point `(X/Z, Y N n / (Z m))` from the representative Legendre
/// solution, which always has `Z ≠ 0`.
pub fn find_conic_point_bounded(spec: &ConicSpec, search_limit: u64) -> Result<Option<ConicPoint>> {
    let form = normalize_conic(spec)?;
    let Some(sol) = solve_legendre_bounded(&form.mn(), search_limit)? else {
        return Ok(None);
    };
    let w = BigRational::new(sol.x.clone(), sol.z.clone());
    let alpha = BigRational::new(&sol.y * &form.big_n * &form.n, &sol.z * &form.m);
    let point = ConicPoint { w, alpha };
    if !spec.contains(&point) {
        return Err(Error::Consistency(format!(
            "conic point ({}, {}) is off w^2 + 3 = {} alpha^2",
            point.w, point.alpha, spec.q
        )));
    }
    Ok(Some(point))
}

/// The second intersection of the conic with the line through `base` of
/// slope parameter `t`.
pub fn parametrize_conic(spec: &ConicSpec, base: &ConicPoint, t: &BigRational) -> Result<ConicPoint> {
    let q = &spec.q;
    let qt2 = q * t * t;
    let den = BigRational::one() - &qt2;
    if den.is_zero() {
        return Err(Error::DegenerateParameter("1 - Q t^2 = 0"));
    }
    let two_t = t + t;
    let w = (&base.w + q * &base.alpha * &two_t + &qt2 * &base.w) / &den;
    let alpha = (&base.alpha + &base.w * &two_t + &qt2 * &base.alpha) / &den;
    Ok(ConicPoint { w, alpha })
}

pub fn parameter_from_point(base: &ConicPoint, point: &ConicPoint) -> Result<BigRational> {
    let den = &point.w + &base.w;
    if den.is_zero() {
        return Err(Error::DegenerateParameter("w + w0 = 0"));
    }
    Ok((&point.alpha - &base.alpha) / den)
}
