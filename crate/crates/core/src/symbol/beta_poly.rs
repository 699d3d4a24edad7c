use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::partitions_of;
use crate::rational::{int, Rational};
use crate::series::xi_coeff;

/// Polynomial in `beta_1..beta_n` with exact coefficients, keyed by the
/// exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl BetaPolynomial {
    pub fn zero(vars: usize) -> Self {
        BetaPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    /// The variable `beta_{i+1}`.
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
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

    /// Coefficient of `beta^exponents`; zero for a wrong-length vector.
    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.vars, Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[u32]) -> Rational {
        assert_eq!(
            point.len(),
            self.vars,
            "evaluation point has the wrong arity"
        );
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: num_bigint::BigInt = e
                    .iter()
                    .zip(point)
                    .map(|(&k, &x)| num_traits::pow(num_bigint::BigInt::from(x), k as usize))
                    .product();
                c * Rational::from_integer(mono)
            })
            .sum()
    }

    /// Total degrees carrying a nonzero coefficient.
    pub fn total_degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(|e| e.iter().sum()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn insert_add(&mut self, e: Vec<u32>, c: Rational) {
        match self.terms.entry(e) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
        }
    }
}

impl Add for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = BetaPolynomial::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(e, ca * cb);
            }
        }
        out
    }
}

/// `H^g_{(d),beta} / (r! d)` as a polynomial in the parts of `beta`, with
/// `d` replaced by their sum. Memoized per `(g, n)`.
pub fn one_part_polynomial(g: u32, n: usize) -> Result<Arc<BetaPolynomial>> {
    if n == 0 || (g == 0 && n <= 2) {
        return Err(Error::Excluded { g, n });
    }
    static MEMO: OnceLock<RwLock<HashMap<(u32, usize), Arc<BetaPolynomial>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(p) = memo.read().expect("polynomial memo").get(&(g, n)) {
        return Ok(p.clone());
    }

    let d = (0..n).fold(BetaPolynomial::zero(n), |acc, i| {
        &acc + &BetaPolynomial::var(n, i)
    });
    let shifted = |two_j: u32| {
        (0..n).fold(BetaPolynomial::constant(n, -Rational::one()), |acc, i| {
            &acc + &BetaPolynomial::var(n, i).pow(two_j)
        })
    };
    let mut sum = BetaPolynomial::zero(n);
    for lambda in partitions_of(g) {
        let mut c = Rational::one() / Rational::from_integer(lambda.aut_order());
        let mut term = BetaPolynomial::constant(n, Rational::one());
        for &part in lambda.parts() {
            c *= xi_coeff(2 * part);
            term = &term * &shifted(2 * part);
        }
        sum = &sum + &(&term * &BetaPolynomial::constant(n, c));
    }
    let scale = Rational::one() / int(num_bigint::BigInt::from(2).pow(2 * g));
    let poly = &(&d.pow(n as u32 + 2 * g - 3) * &sum) * &BetaPolynomial::constant(n, scale);

    let poly = Arc::new(poly);
    memo.write()
        .expect("polynomial memo")
        .insert((g, n), poly.clone());
    Ok(poly)
}
