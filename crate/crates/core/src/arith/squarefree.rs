use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::factor::{factorize, PrimeFactorization};
use crate::error::{Error, Result};

/// `value = squarefree * cofactor^2` with `squarefree` a square-free integer
/// carrying the sign of the value and `cofactor` a positive rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeSplit {
    pub squarefree: BigInt,
    pub cofactor: BigRational,
}

impl SquareFreeSplit {
    pub fn reconstruct(&self) -> BigRational {
        BigRational::from_integer(self.squarefree.clone()) * &self.cofactor * &self.cofactor
    }
}

/// Splits a nonzero rational `n/d` through the integer `n*d = s*k^2`,
/// giving `n/d = s * (k/d)^2`.
pub fn square_free_split(q: &BigRational) -> Result<SquareFreeSplit> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    let product = q.numer() * q.denom();
    let fact = factorize(&product)?;
    let mut s = BigInt::from(fact.sign);
    let mut k = BigInt::one();
    for (p, e) in &fact.factors {
        let p = BigInt::from(p.clone());
        if e % 2 == 1 {
            s *= &p;
        }
        k *= num_traits::pow(p, (*e / 2) as usize);
    }
    Ok(SquareFreeSplit {
        squarefree: s,
        cofactor: BigRational::new(k, q.denom().clone()),
    })
}

pub fn is_square_free(n: &BigInt) -> Result<bool> {
    let PrimeFactorization { factors, .. } = factorize(n)?;
    Ok(factors.iter().all(|(_, e)| *e == 1))
}

/// Given `x^3 = y^2`, returns the α with `x = α^2` and `y = α^3`.
///
/// For nonzero `x` the only candidate is `α = y/x`; it is checked against both
/// equalities, so any pair that does not satisfy the relation yields `None`.
pub fn cube_square_match(x: &BigRational, y: &BigRational) -> Option<BigRational> {
    if x.is_zero() {
        return y.is_zero().then(BigRational::zero);
    }
    let alpha = y / x;
    let alpha_sq = &alpha * &alpha;
    if alpha_sq == *x && &alpha_sq * &alpha == *y {
        Some(alpha)
    } else {
        None
    }
}
