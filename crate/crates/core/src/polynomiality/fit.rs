use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, int, Rational};

/// An exact polynomial fit of samples at `t = 1, 2, ..., T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fit {
    pub degree: u32,
    /// Coefficient of `t^degree`.
    pub leading: Rational,
    /// Coefficients of `1, t, t^2, ...` up to the degree.
    pub monomial: Vec<Rational>,
}

/// Smallest `D` whose `(D+1)`-st forward differences all vanish. At least
/// two vanishing differences are required, so `T >= D + 3`.
pub fn fit_degree(values: &[Rational]) -> Result<Fit> {
    let mut rows = vec![values.to_vec()];
    while let Some(last) = rows.last() {
        if last.len() >= 2 && last.iter().all(Zero::is_zero) {
            break;
        }
        if last.len() < 2 {
            return Err(Error::Inconclusive(format!(
                "differences do not vanish within {} samples",
                values.len()
            )));
        }
        let next: Vec<Rational> = last.windows(2).map(|w| &w[1] - &w[0]).collect();
        rows.push(next);
    }
    if rows.len() == 1 {
        // the zero polynomial; report it as degree 0 with a zero coefficient
        return Ok(Fit {
            degree: 0,
            leading: Rational::zero(),
            monomial: vec![Rational::zero()],
        });
    }
    // rows[k] holds the k-th differences and the last row is zero
    let degree = rows.len() as u32 - 2;
    let leading_diffs: Vec<Rational> = rows[..rows.len() - 1]
        .iter()
        .map(|r| r[0].clone())
        .collect();
    let monomial = newton_to_monomial(&leading_diffs);
    let leading = &rows[degree as usize][0] / int(factorial(degree as u64));
    Ok(Fit {
        degree,
        leading,
        monomial,
    })
}

/// Converts `p(t) = sum_k c_k binom(t-1, k)` to coefficients of `t^j`.
pub fn newton_to_monomial(newton: &[Rational]) -> Vec<Rational> {
    let len = newton.len().max(1);
    let mut out = vec![Rational::zero(); len];
    // basis holds binom(t-1, k) in the monomial basis, built incrementally
    let mut basis = vec![Rational::one()];
    for (k, c) in newton.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            out[j] += c * b;
        }
        // binom(t-1, k+1) = binom(t-1, k) (t - 1 - k) / (k + 1)
        let mut next = vec![Rational::zero(); basis.len() + 1];
        let shift = int(BigInt::from(k as i64 + 1));
        for (j, b) in basis.iter().enumerate() {
            next[j + 1] += b;
            next[j] -= b * &shift;
        }
        basis = next.into_iter().map(|v| v / &shift).collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let f = fit_degree(&vec![rat(1, 1); 4]).unwrap();
        assert_eq!((f.degree, f.leading), (0, rat(1, 1)));
        let lin: Vec<Rational> = (1..=6).map(|t| rat(4 * t, 1)).collect();
        assert_eq!(fit_degree(&lin).unwrap().degree, 1);
        let sq: Vec<Rational> = (1..=5).map(|t| rat(t * t, 1)).collect();
        let f = fit_degree(&sq).unwrap();
        assert_eq!((f.degree, f.leading.clone()), (2, rat(1, 1)));
        assert_eq!(f.monomial, vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
        assert!(matches!(fit_degree(&sq[..3]), Err(Error::Inconclusive(_))));
    }

    proptest! {
        #[test]
        fn recovers_random_polynomials(coeffs in proptest::collection::vec(-20i64..20, 1..6)) {
            let eval = |t: i64| coeffs.iter().rev().fold(0i64, |acc, &c| acc * t + c);
            let values: Vec<Rational> = (1..=coeffs.len() as i64 + 2).map(|t| rat(eval(t), 1)).collect();
            let fit = fit_degree(&values).unwrap();
            let mut expected: Vec<Rational> = coeffs.iter().map(|&c| rat(c, 1)).collect();
            while expected.len() > 1 && expected.last().unwrap().is_zero() {
                expected.pop();
            }
            let mut got = fit.monomial.clone();
            got.resize(expected.len().max(got.len()), Rational::zero());
            expected.resize(got.len(), Rational::zero());
            prop_assert_eq!(got, expected);
        }
    }
}
