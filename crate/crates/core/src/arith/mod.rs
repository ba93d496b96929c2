//! Exact rational arithmetic and the factorization-based primitives built on it:
//! prime factorization, square-free splitting, square/cube matching and
//! quadratic-residue tests.

mod factor;
mod residue;
mod squarefree;

pub use factor::{factorize, is_probable_prime, PrimeFactorization};
pub use residue::{is_square_mod, sqrt_mod_prime};
pub use squarefree::{cube_square_match, is_square_free, square_free_split, SquareFreeSplit};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

use num_traits::{Signed, Zero};

/// Builds the rational `n/d`. Panics when `d` is zero.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty value".to_string());
    }
    match s.parse::<BigRational>() {
        Ok(q) => Ok(q),
        Err(_) => {
            if let Some((_, den)) = s.split_once('/') {
                if den.trim().parse::<BigInt>().is_ok_and(|d| d.is_zero()) {
                    return Err(format!("zero denominator in `{s}`"));
                }
            }
            Err(format!("`{s}` is not an exact rational (expected p or p/q)"))
        }
    }
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// Returns the integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Returns the rational square root when `q` is the square of a rational.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

#[cfg(test)]
pub(crate) fn pow(q: &BigRational, e: u32) -> BigRational {
    use num_traits::One;
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= q;
    }
    acc
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
