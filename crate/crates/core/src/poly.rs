//! Exact rational roots of univariate polynomials over Q.
//!
//! Roots are located without factoring any coefficient. The square-free part is
//! isolated with a Sturm sequence, each isolating interval is bisected until it
//! is narrower than `1 / (2 lc^2)`, where `lc` is the leading coefficient of the
//! primitive integer form, and the simplest rational in the interval is tested
//! exactly. A rational root `p/q` has `q | lc`, and two distinct fractions with
//! denominators at most `|lc|` are at least `1/lc^2` apart, so that fraction is
//! the only possible rational root in the interval.
//!
//! Two shortcuts keep this cheap: even polynomials are solved in `x^2`, and a
//! polynomial without roots modulo some small prime not dividing `lc` has no
//! rational roots at all.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial, coefficients in ascending degree.
pub type Poly = Vec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoot {
    pub value: BigRational,
    pub multiplicity: u32,
}

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, coef| acc * x + coef)
}

fn derivative(p: &[BigRational]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, coef)| coef * BigRational::from_integer(BigInt::from(k)))
        .collect()
}

/// Quotient and remainder of `num / den`; `den` must be nonzero.
fn divide(num: &[BigRational], den: &[BigRational]) -> (Poly, Poly) {
    let den = trim(den.to_vec());
    let dl = den.len();
    assert!(dl > 0, "division by the zero polynomial");
    let mut rem = trim(num.to_vec());
    if rem.len() < dl {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dl + 1];
    let lead = den[dl - 1].clone();
    while rem.len() >= dl && !rem.is_empty() {
        let shift = rem.len() - dl;
        let factor = rem[rem.len() - 1].clone() / &lead;
        for (k, coef) in den.iter().enumerate() {
            rem[shift + k] -= &factor * coef;
        }
        quot[shift] = factor;
        rem.pop();
        rem = trim(rem);
    }
    (quot, rem)
}

fn monic(p: Poly) -> Poly {
    match p.last() {
        Some(lead) if !lead.is_zero() => {
            let lead = lead.clone();
            p.into_iter().map(|c| c / &lead).collect()
        }
        _ => p,
    }
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divide(&a, &b);
        a = b;
        b = monic(r);
    }
    monic(a)
}

/// Scales to integer coefficients with content 1 and positive leading coefficient.
pub fn primitive_integer(p: &[BigRational]) -> Vec<BigInt> {
    let p = trim(p.to_vec());
    let lcm = p
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

fn sturm_sequence(p: &[BigRational]) -> Vec<Vec<BigInt>> {
    let mut seq = vec![p.to_vec(), derivative(p)];
    loop {
        let n = seq.len();
        if seq[n - 1].is_empty() {
            seq.pop();
            break;
        }
        let (_, r) = divide(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq.iter().map(|q| positive_scaling(q)).collect()
}

/// Integer multiple of `p` by a positive factor, so signs are preserved.
fn positive_scaling(p: &[BigRational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| (c * &lcm).to_integer()).collect()
}

/// Sign of `p(m / 2^k)`, from `sum a_i m^i 2^(k (n - i))`.
fn sign_at_dyadic(p: &[BigInt], m: &BigInt, k: u64) -> i8 {
    let n = p.len() - 1;
    let mut acc = p[n].clone();
    for i in (0..n).rev() {
        acc *= m;
        if !p[i].is_zero() {
            acc += &p[i] << (k * (n - i) as u64);
        }
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign variations of the Sturm sequence at `m / 2^k`, zeros skipped. At a
/// root of a square-free `p` this equals the count just to the right, so
/// `changes(a) - changes(b)` is the number of roots in `(a, b]`.
fn sign_changes(seq: &[Vec<BigInt>], m: &BigInt, k: u64) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for p in seq {
        let s = sign_at_dyadic(p, m, k);
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Fraction with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    let next = &fl + BigRational::one();
    if next <= *hi {
        return next;
    }
    let inner = simplest_between(
        &(BigRational::one() / (hi - &fl)),
        &(BigRational::one() / (lo - &fl)),
    );
    fl + BigRational::one() / inner
}

/// Half-open interval `(lo / 2^k, hi / 2^k]`.
struct Dyadic {
    lo: BigInt,
    hi: BigInt,
    k: u64,
}

impl Dyadic {
    fn halves(&self) -> (Dyadic, Dyadic) {
        let mid = &self.lo + &self.hi;
        let k = self.k + 1;
        (
            Dyadic { lo: &self.lo << 1u32, hi: mid.clone(), k },
            Dyadic { lo: mid, hi: &self.hi << 1u32, k },
        )
    }

    fn count(&self, seq: &[Vec<BigInt>]) -> usize {
        sign_changes(seq, &self.lo, self.k) - sign_changes(seq, &self.hi, self.k)
    }

    fn bound(v: &BigInt, k: u64) -> BigRational {
        BigRational::new(v.clone(), BigInt::one() << k)
    }
}

/// All rational roots with multiplicity, ascending.
pub fn rational_roots(p: &[BigRational]) -> Vec<RationalRoot> {
    let mut p = trim(p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();

    let zero_mult = p.iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push(RationalRoot {
            value: BigRational::zero(),
            multiplicity: zero_mult as u32,
        });
        p.drain(..zero_mult);
    }
    if p.len() <= 1 {
        return roots;
    }

    if p.len() >= 3 && p.iter().skip(1).step_by(2).all(Zero::is_zero) {
        // Even polynomial: solve in u = x^2 and keep the rational square roots.
        let in_u: Poly = p.iter().step_by(2).cloned().collect();
        for r in rational_roots(&in_u) {
            if let Some(s) = crate::arith::rational_sqrt(&r.value) {
                roots.push(RationalRoot { value: -s.clone(), multiplicity: r.multiplicity });
                roots.push(RationalRoot { value: s, multiplicity: r.multiplicity });
            }
        }
        roots.sort_by(|a, b| a.value.cmp(&b.value));
        return roots;
    }

    for candidate in candidates(&p) {
        let mut mult = 0u32;
        let linear = vec![-candidate.clone(), BigRational::one()];
        let mut rest = p.clone();
        loop {
            let (q, r) = divide(&rest, &linear);
            if !r.is_empty() {
                break;
            }
            mult += 1;
            rest = q;
        }
        if mult > 0 {
            roots.push(RationalRoot {
                value: candidate,
                multiplicity: mult,
            });
        }
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    roots
}

/// The distinct rational roots of `p`, which has a nonzero constant term.
fn candidates(p: &[BigRational]) -> Vec<BigRational> {
    let lc = primitive_integer(p).pop().expect("nonzero polynomial");
    let two_lc_sq = BigInt::from(2) * &lc * &lc;

    let square_free = divide(p, &gcd(p, &derivative(p))).0;
    let seq = sturm_sequence(&square_free);
    let g = &seq[0];
    if rootless_modulo_small_prime(g) {
        return Vec::new();
    }

    // Cauchy: every root is below 1 + max |a_i / a_n| <= 1 + max |a_i| in magnitude.
    let max_coef = g.iter().map(|c| c.magnitude().bits()).max().unwrap_or(0);
    let bound = BigInt::one() << (max_coef + 1);
    let mut stack = vec![Dyadic { lo: -bound.clone(), hi: bound, k: 0 }];
    let mut found = Vec::new();

    while let Some(iv) = stack.pop() {
        match iv.count(&seq) {
            0 => {}
            1 => found.extend(refine(&seq, iv, &two_lc_sq, p)),
            _ => {
                let (a, b) = iv.halves();
                stack.push(a);
                stack.push(b);
            }
        }
    }
    found
}

/// Narrows an interval holding exactly one root until it is shorter than
/// `1 / (2 lc^2)`, then tests the one rational that could be that root.
fn refine(
    seq: &[Vec<BigInt>],
    mut iv: Dyadic,
    two_lc_sq: &BigInt,
    p: &[BigRational],
) -> Option<BigRational> {
    let g = &seq[0];
    if sign_at_dyadic(g, &iv.hi, iv.k) == 0 {
        return Some(Dyadic::bound(&iv.hi, iv.k));
    }
    let mut lo_sign = sign_at_dyadic(g, &iv.lo, iv.k);
    while (&iv.hi - &iv.lo) * two_lc_sq >= BigInt::one() << iv.k {
        let (left, right) = iv.halves();
        let mid_sign = sign_at_dyadic(g, &left.hi, left.k);
        if mid_sign == 0 {
            return Some(Dyadic::bound(&left.hi, left.k));
        }
        // A root sitting on the open end leaves no sign to compare with, so
        // fall back to counting.
        let go_left = if lo_sign == 0 {
            left.count(seq) == 1
        } else {
            mid_sign != lo_sign
        };
        if go_left {
            iv = left;
        } else {
            lo_sign = mid_sign;
            iv = right;
        }
    }
    let candidate = simplest_between(&Dyadic::bound(&iv.lo, iv.k), &Dyadic::bound(&iv.hi, iv.k));
    eval(p, &candidate).is_zero().then_some(candidate)
}

/// True when some prime `l` not dividing the leading coefficient leaves `p`
/// without roots modulo `l`. A rational root `a/b` has `b | lc`, so it would
/// reduce to a root modulo every such `l`.
fn rootless_modulo_small_prime(p: &[BigInt]) -> bool {
    const PRIMES: [u64; 24] = [
        5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
        101,
    ];
    PRIMES.iter().any(|&l| {
        let big_l = BigInt::from(l);
        let reduced: Vec<u64> = p
            .iter()
            .map(|c| c.mod_floor(&big_l).try_into().expect("reduced below l"))
            .collect();
        if reduced[reduced.len() - 1] == 0 {
            return false;
        }
        (0..l).all(|x| reduced.iter().rev().fold(0, |acc, &c| (acc * x + c) % l) != 0)
    })
}

/// The multiset of roots, each repeated by its multiplicity.
pub fn expand_roots(roots: &[RationalRoot]) -> Vec<BigRational> {
    roots
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.value.clone(), r.multiplicity as usize))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn from_roots(roots: &[BigRational], lead: BigRational) -> Poly {
        let mut p = vec![lead];
        for r in roots {
            let mut next = vec![BigRational::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * r;
            }
            p = next;
        }
        p
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_between(&rat(1, 3), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_between(&rat(3, 10), &rat(4, 10)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-7, 10), &rat(-6, 10)), rat(-2, 3));
        assert_eq!(simplest_between(&rat(-1, 10), &rat(1, 10)), int(0));
        assert_eq!(simplest_between(&rat(5, 2), &rat(5, 2)), rat(5, 2));
        assert_eq!(simplest_between(&rat(21, 10), &rat(39, 10)), int(3));
    }

    #[test]
    fn recovers_known_roots_with_multiplicity() {
        let roots = [rat(-3, 7), rat(2, 5), rat(2, 5), int(4), int(0)];
        let p = from_roots(&roots, rat(-9, 4));
        // Add an irreducible quadratic factor x^2 + x + 5.
        let mut full = vec![BigRational::zero(); p.len() + 2];
        for (k, c) in p.iter().enumerate() {
            full[k] += c * int(5);
            full[k + 1] += c;
            full[k + 2] += c;
        }
        let got = rational_roots(&full);
        assert_eq!(
            got,
            vec![
                RationalRoot { value: rat(-3, 7), multiplicity: 1 },
                RationalRoot { value: int(0), multiplicity: 1 },
                RationalRoot { value: rat(2, 5), multiplicity: 2 },
                RationalRoot { value: int(4), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn nearby_roots_are_separated() {
        let roots = [rat(1000, 1001), rat(1001, 1002), rat(-1, 99_991)];
        let got = expand_roots(&rational_roots(&from_roots(&roots, int(1))));
        let mut want = roots.to_vec();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(rational_roots(&[int(3)]).is_empty());
        assert!(rational_roots(&[]).is_empty());
        // x^2 - 2 has only irrational roots.
        assert!(rational_roots(&[int(-2), int(0), int(1)]).is_empty());
    }
}
