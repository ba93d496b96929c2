//! Integer factorization: trial division by small primes, then Pollard-Brent rho
//! on whatever cofactor survives. Inputs at desk scale have prime factors well
//! below 64 bits, which is what the rho stage is tuned for.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const TRIAL_LIMIT: u32 = 10_000;

/// Miller-Rabin witnesses; deterministic for every n < 3.3 * 10^24.
const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// `sign * prod(prime^exponent)`, primes strictly increasing, exponents nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub sign: i8,
    pub factors: Vec<(BigUint, i64)>,
}

impl PrimeFactorization {
    /// Factorization of a nonzero rational; denominator primes get negative exponents.
    pub fn of_rational(q: &BigRational) -> Result<Self> {
        if q.numer().is_zero() {
            return Err(Error::ZeroInput);
        }
        let num = factorize(q.numer())?;
        let den = factorize(q.denom())?;
        let mut factors = num.factors;
        factors.extend(den.factors.into_iter().map(|(p, e)| (p, -e)));
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Self {
            sign: num.sign,
            factors,
        })
    }

    pub fn reconstruct(&self) -> BigRational {
        let mut num = BigInt::from(self.sign);
        let mut den = BigInt::one();
        for (p, e) in &self.factors {
            let pp = BigInt::from(p.pow(e.unsigned_abs() as u32));
            if *e > 0 {
                num *= pp;
            } else {
                den *= pp;
            }
        }
        BigRational::new(num, den)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

/// Prime factorization of a nonzero integer.
pub fn factorize(n: &BigInt) -> Result<PrimeFactorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if n.sign() == Sign::Minus { -1 } else { 1 };
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();

    for &p in small_primes() {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            primes.push(bp.clone());
        }
    }
    if !m.is_one() {
        split_into(&m, &mut primes);
    }

    primes.sort();
    let mut factors: Vec<(BigUint, i64)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(PrimeFactorization { sign, factors })
}

fn split_into(n: &BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(n) {
        out.push(n.clone());
        return;
    }
    let d = find_divisor(n);
    split_into(&d, out);
    split_into(&(n / &d), out);
}

fn find_divisor(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    if let Some(r) = exact_root(n) {
        return r;
    }
    if let Some(small) = n.to_u64() {
        for c in 1.. {
            if let Some(d) = rho_u64(small, c) {
                return BigUint::from(d);
            }
        }
    }
    for c in 1u32.. {
        if let Some(d) = rho_big(n, &BigUint::from(c)) {
            return d;
        }
    }
    unreachable!()
}

/// Square root of a perfect square; rho converges slowly on p^2 otherwise.
fn exact_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_LIMIT as usize;
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if sieve[i] {
                let mut j = i * i;
                while j <= limit {
                    sieve[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        (0..=limit)
            .filter(|&k| sieve[k])
            .map(|k| k as u32)
            .collect()
    })
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Brent's cycle detection with batched gcds. Returns None when the walk
// collapses to n itself; the caller retries with another constant.
fn rho_u64(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let f = |x: &BigUint| (x * x + c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}
