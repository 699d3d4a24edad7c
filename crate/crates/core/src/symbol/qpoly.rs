use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{factorial, Rational};

/// Polynomial in the symbols `Q^(0), Q^(1), ...`. A monomial
/// `Q^(i_1) ... Q^(i_n)` is keyed by its sorted index list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPolynomial {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl QPolynomial {
    pub fn monomial(indices: &[u32]) -> Self {
        let mut key = indices.to_vec();
        key.sort_unstable();
        QPolynomial {
            terms: BTreeMap::from([(key, Rational::one())]),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of `prod Q^(i)` over the given indices, in any order.
    pub fn coeff(&self, indices: &[u32]) -> Rational {
        let mut key = indices.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// The derivation `Delta_{-1} = sum_i Q^(i+1) d/dQ^(i)`. Monomials with
    /// an index above `cap` are dropped when a cap is given; the derivation
    /// only raises indices, so they can never come back below it.
    pub fn delta(&self, cap: Option<u32>) -> Self {
        let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (key, c) in &self.terms {
            let mut seen = None;
            for (pos, &i) in key.iter().enumerate() {
                if seen == Some(i) {
                    continue;
                }
                seen = Some(i);
                if cap.is_some_and(|m| i + 1 > m) {
                    continue;
                }
                let mult = key.iter().filter(|&&j| j == i).count();
                let mut bumped = key.clone();
                bumped[pos] = i + 1;
                bumped.sort_unstable();
                *out.entry(bumped).or_default() += c * Rational::from_integer(mult.into());
            }
        }
        out.retain(|_, v| !v.is_zero());
        QPolynomial { terms: out }
    }

    pub fn delta_pow(&self, n: u32, cap: Option<u32>) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.delta(cap))
    }
}

/// `[prod_i Q^(b_i)] Delta_{-1}^N prod_i Q^(theta_i)` by iterated Leibniz.
/// `theta` lists the starting indices (already doubled by the caller when
/// needed) and must have the same length as `b`.
pub fn q_operator_coefficient(n: u32, theta: &[u32], b: &[u32]) -> Rational {
    if theta.len() != b.len() {
        return Rational::zero();
    }
    let cap = b.iter().copied().max();
    QPolynomial::monomial(theta).delta_pow(n, cap).coeff(b)
}

/// The same coefficient from the multinomial expansion of Leibniz's rule:
/// a sum over the distinct orderings of `b` of `N! / prod (b_i - theta_i)!`.
pub fn q_operator_coefficient_multinomial(n: u32, theta: &[u32], b: &[u32]) -> Rational {
    if theta.len() != b.len() {
        return Rational::zero();
    }
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    let mut total = BigInt::zero();
    loop {
        let fits = sorted.iter().zip(theta).all(|(&bi, &ti)| bi >= ti)
            && sorted
                .iter()
                .zip(theta)
                .map(|(&bi, &ti)| bi - ti)
                .sum::<u32>()
                == n;
        if fits {
            let denom: BigInt = sorted
                .iter()
                .zip(theta)
                .map(|(&bi, &ti)| factorial((bi - ti) as u64))
                .product();
            total += factorial(n as u64) / denom;
        }
        if !next_permutation(&mut sorted) {
            break;
        }
    }
    Rational::from_integer(total)
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(q_operator_coefficient(2, &[0], &[2]), rat(1, 1));
        assert_eq!(q_operator_coefficient(2, &[0, 0], &[1, 1]), rat(2, 1));
        assert_eq!(q_operator_coefficient(0, &[0, 0, 0], &[0, 0, 0]), rat(1, 1));
        assert_eq!(q_operator_coefficient(1, &[0, 0], &[0, 0]), rat(0, 1));
    }

    #[test]
    fn delta_is_a_derivation() {
        let p = QPolynomial::monomial(&[0, 0, 1]).delta(None);
        assert_eq!(p.coeff(&[0, 1, 1]), rat(2, 1));
        assert_eq!(p.coeff(&[0, 0, 2]), rat(1, 1));
        assert_eq!(p.len(), 2);
    }

    proptest! {
        #[test]
        fn leibniz_matches_multinomial(
            theta in proptest::collection::vec(0u32..3, 1..4),
            extra in proptest::collection::vec(0u32..3, 4),
            n in 0u32..6,
        ) {
            let b: Vec<u32> = theta.iter().zip(&extra).map(|(t, e)| t + e).collect();
            let exact: u32 = b.iter().sum::<u32>() - theta.iter().sum::<u32>();
            for n in [n, exact] {
                prop_assert_eq!(
                    q_operator_coefficient(n, &theta, &b),
                    q_operator_coefficient_multinomial(n, &theta, &b)
                );
            }
        }
    }
}
