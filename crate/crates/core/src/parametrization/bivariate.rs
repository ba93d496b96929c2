use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Term = (i64, u32, u32);

/// Dense integer polynomial in `(b, c)`, stored as rows indexed by the power of `b`.
#[derive(Debug, Clone)]
pub(crate) struct BivariatePoly {
    rows: Vec<Vec<i64>>,
    deg_c: usize,
}

impl BivariatePoly {
    pub fn from_terms(terms: &[Term]) -> Self {
        let deg_b = terms.iter().map(|t| t.1 as usize).max().unwrap_or(0);
        let deg_c = terms.iter().map(|t| t.2 as usize).max().unwrap_or(0);
        let mut rows = vec![vec![0i64; deg_c + 1]; deg_b + 1];
        for &(coef, i, j) in terms {
            rows[i as usize][j as usize] += coef;
        }
        Self { rows, deg_c }
    }

    /// Exact value at `(b, c)`.
    ///
    /// Works on numerators and denominators separately: the homogenized form
    /// `sum a_ij bn^i bd^(Db-i) cn^j cd^(Dc-j)` is evaluated by Horner's rule in
    /// `c` for each row, then in `b` over the rows, with one reduction at the end.
    pub fn eval(&self, b: &BigRational, c: &BigRational) -> BigRational {
        let (bn, bd) = (b.numer(), b.denom());
        let (cn, cd) = (c.numer(), c.denom());
        let deg_b = self.rows.len() - 1;
        let cd_pow = powers(cd, self.deg_c);
        let bd_pow = powers(bd, deg_b);

        let mut outer = BigInt::zero();
        for (i, row) in self.rows.iter().enumerate().rev() {
            let mut inner = BigInt::from(row[self.deg_c]);
            for j in (0..self.deg_c).rev() {
                inner *= cn;
                if row[j] != 0 {
                    inner += BigInt::from(row[j]) * &cd_pow[self.deg_c - j];
                }
            }
            if i == deg_b {
                outer = inner;
            } else {
                outer *= bn;
                outer += inner * &bd_pow[deg_b - i];
            }
        }
        BigRational::new(outer, &bd_pow[deg_b] * &cd_pow[self.deg_c])
    }
}

fn powers(base: &BigInt, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for k in 0..n {
        let next = &out[k] * base;
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn naive(terms: &[Term], b: &BigRational, c: &BigRational) -> BigRational {
        terms.iter().fold(BigRational::zero(), |acc, &(k, i, j)| {
            acc + int(k) * crate::arith::pow(b, i) * crate::arith::pow(c, j)
        })
    }

    #[test]
    fn matches_term_by_term_sum() {
        let terms: &[Term] = &[(3, 0, 0), (-2, 1, 3), (7, 4, 1), (1, 2, 0), (-5, 0, 2)];
        let p = BivariatePoly::from_terms(terms);
        for (b, c) in [
            (rat(1, 2), rat(-3, 7)),
            (int(0), int(0)),
            (int(-4), rat(5, 9)),
            (rat(11, 3), int(2)),
        ] {
            assert_eq!(p.eval(&b, &c), naive(terms, &b, &c));
        }
    }

    #[test]
    fn tables_match_term_sums() {
        use super::super::tables::*;
        let b = rat(-7, 5);
        let c = rat(9, 4);
        for t in [E12_NUMERATOR, E21_NUMERATOR, P1_BRACKET, P2_BRACKET, Q1_BRACKET, QUARTIC] {
            assert_eq!(BivariatePoly::from_terms(t).eval(&b, &c), naive(t, &b, &c));
        }
    }
}
