use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::factorize;
use crate::error::{Error, Result};

/// True iff `z^2 ≡ a (mod n)` has a solution. `n = 1` is always true.
///
/// Composite moduli are split into prime powers and the local answers combined
/// (a square modulo n iff a square modulo every prime power dividing n).
pub fn is_square_mod(a: &BigInt, n: &BigInt) -> Result<bool> {
    if !n.is_positive() {
        return Err(Error::InvalidModulus);
    }
    if n.is_one() {
        return Ok(true);
    }
    let fact = factorize(n)?;
    for (p, e) in &fact.factors {
        let pe = BigInt::from(p.pow(*e as u32));
        let r = a.mod_floor(&pe).to_biguint().expect("mod_floor is nonnegative");
        if !is_square_mod_prime_power(&r, p, *e as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_square_mod_prime_power(a: &BigUint, p: &BigUint, e: u32) -> bool {
    if a.is_zero() {
        return true;
    }
    // a = p^k * u with k < e and p ∤ u.
    let mut u = a.clone();
    let mut k = 0u32;
    while (&u % p).is_zero() {
        u /= p;
        k += 1;
    }
    if k % 2 == 1 {
        return false;
    }
    let rest = e - k;
    if *p == BigUint::from(2u32) {
        let low = (&u % 8u32).to_u32().unwrap();
        return match rest {
            1 => true,
            2 => low % 4 == 1,
            _ => low == 1,
        };
    }
    euler_criterion(&u, p)
}

fn euler_criterion(u: &BigUint, p: &BigUint) -> bool {
    let exp = (p - 1u32) >> 1;
    u.modpow(&exp, p).is_one()
}

/// A square root of `a` modulo an odd prime `p` (Tonelli-Shanks), or `None`
/// for a non-residue.
pub fn sqrt_mod_prime(a: &BigUint, p: &BigUint) -> Option<BigUint> {
    let a = a % p;
    if a.is_zero() {
        return Some(BigUint::zero());
    }
    if *p == BigUint::from(2u32) {
        return Some(a);
    }
    if !euler_criterion(&a, p) {
        return None;
    }
    let one = BigUint::one();
    let p_minus_one = p - &one;
    let s = p_minus_one.trailing_zeros().unwrap_or(0);
    let q = &p_minus_one >> s;

    let mut z = BigUint::from(2u32);
    while euler_criterion(&z, p) {
        z += 1u32;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + &one) >> 1), p);
    while !t.is_one() {
        let mut i = 0u64;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let b = c.modpow(&(BigUint::one() << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (t * &c) % p;
        r = (r * b) % p;
    }
    Some(r)
}
