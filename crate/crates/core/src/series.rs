//! Truncated univariate power series over the rationals, and the classical
//! coefficient families the one-part formulas quote: Bernoulli numbers and
//! the expansions of `log(sinh x / x)`, `(2/x) sinh(x/2)` and
//! `(x/2) cosech(x/2)`.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, int, Rational};

/// `c_0 + c_1 x + ... + c_T x^T`, exact through order `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateSeries {
    coeffs: Vec<Rational>,
}

impl UnivariateSeries {
    pub fn zero(order: usize) -> Self {
        UnivariateSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads or truncates `coeffs` to the given order.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        UnivariateSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rational) -> Self {
        UnivariateSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// The series of `x`.
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnivariateSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `f(x) -> f(c x)`.
    pub fn dilate(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow *= c;
                v
            })
            .collect();
        UnivariateSeries { coeffs }
    }

    /// Drops the constant term and divides by `x`; the top coefficient
    /// becomes unknown, so the order shrinks by one.
    pub fn shift_down(&self) -> Self {
        UnivariateSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        UnivariateSeries::from_fn(n, |i| {
            if i < n {
                &self.coeffs[i + 1] * int(i as u64 + 1)
            } else {
                Rational::zero()
            }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::precondition(
                "series inverse needs a nonzero constant term",
            ));
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(UnivariateSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition("series exp needs a zero constant term"));
        }
        let n = self.order();
        let mut e = vec![Rational::zero(); n + 1];
        e[0] = Rational::one();
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += int(k as u64) * &self.coeffs[k] * &e[m - k];
            }
            e[m] = acc / int(m as u64);
        }
        Ok(UnivariateSeries { coeffs: e })
    }

    /// Requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::precondition("series log needs constant term 1"));
        }
        let n = self.order();
        let mut l = vec![Rational::zero(); n + 1];
        for m in 1..=n {
            let mut acc = int(m as u64) * &self.coeffs[m];
            for k in 1..m {
                acc -= int(k as u64) * &l[k] * &self.coeffs[m - k];
            }
            l[m] = acc / int(m as u64);
        }
        Ok(UnivariateSeries { coeffs: l })
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn add(self, rhs: Self) -> UnivariateSeries {
        let n = self.order().min(rhs.order());
        UnivariateSeries::from_fn(n, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn sub(self, rhs: Self) -> UnivariateSeries {
        let n = self.order().min(rhs.order());
        UnivariateSeries::from_fn(n, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Neg for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn neg(self) -> UnivariateSeries {
        UnivariateSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &UnivariateSeries {
    type Output = UnivariateSeries;
    fn mul(self, rhs: Self) -> UnivariateSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        UnivariateSeries { coeffs: out }
    }
}

/// `sinh(x)/x` through `x^order`.
pub fn sinhc(order: usize) -> UnivariateSeries {
    UnivariateSeries::from_fn(order, |i| {
        if i % 2 == 0 {
            Rational::new(BigInt::one(), factorial(i as u64 + 1))
        } else {
            Rational::zero()
        }
    })
}

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// `B_n` with `B_1 = -1/2`, from `sum_{k<=n} C(n+1, k) B_k = 0`.
fn bernoulli_any(n: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().expect("bernoulli cache").get(n) {
        return b.clone();
    }
    let mut cache = BERNOULLI.write().expect("bernoulli cache");
    while cache.len() <= n {
        let m = cache.len();
        let b = if m == 0 {
            Rational::one()
        } else {
            let s: Rational = (0..m)
                .map(|k| Rational::from_integer(binomial(m as i64 + 1, k as i64)) * &cache[k])
                .sum();
            -s / int(m as u64 + 1)
        };
        cache.push(b);
    }
    cache[n].clone()
}

/// `B_{2j}`, indexed by the even number `2j`.
pub fn bernoulli(two_j: u32) -> Rational {
    assert!(two_j.is_multiple_of(2), "even index expected");
    bernoulli_any(two_j as usize)
}

/// `[x^{2j}] log(sinh(x)/x)`.
pub fn xi_coeff(two_j: u32) -> Rational {
    assert!(
        two_j >= 2 && two_j.is_multiple_of(2),
        "xi is indexed by even positive integers"
    );
    let s = sinhc(two_j as usize)
        .log()
        .expect("sinh(x)/x has constant term 1");
    s.coeff(two_j as usize)
}

/// `[x^{2j}] (2/x) sinh(x/2) = 1 / (2^{2j} (2j+1)!)`.
pub fn v_coeff(two_j: u32) -> Rational {
    assert!(two_j.is_multiple_of(2), "even index expected");
    Rational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(2), two_j as usize) * factorial(two_j as u64 + 1),
    )
}

/// `[x^{2j}] (x/2) cosech(x/2) = (1 - 2^{2j-1}) B_{2j} / (2^{2j-1} (2j)!)`.
pub fn f_coeff(two_j: u32) -> Rational {
    assert!(two_j.is_multiple_of(2), "even index expected");
    let two = Rational::from_integer(BigInt::from(2));
    let p = crate::rational::pow_signed(&two, two_j as i64 - 1).expect("nonzero base");
    (Rational::one() - &p) / (p * Rational::from_integer(factorial(two_j as u64)))
        * bernoulli(two_j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi_coeff(2), rat(1, 6));
        assert_eq!(xi_coeff(4), rat(-1, 180));
        assert_eq!(xi_coeff(6), rat(1, 2835));
    }

    #[test]
    fn v_and_f_values() {
        assert_eq!(v_coeff(0), rat(1, 1));
        assert_eq!(f_coeff(0), rat(1, 1));
        assert_eq!(v_coeff(2), rat(1, 24));
        assert_eq!(f_coeff(2), rat(-1, 24));
        assert_eq!(f_coeff(4), rat(7, 5760));
    }

    #[test]
    fn exp_log_inverse() {
        let s = sinhc(12);
        let back = s.log().unwrap().exp().unwrap();
        assert_eq!(back, s);
        let one = &s * &s.inverse().unwrap();
        assert_eq!(one, UnivariateSeries::one(12));
        assert!(UnivariateSeries::var(4).log().is_err());
        assert!(UnivariateSeries::one(4).exp().is_err());
        assert!(UnivariateSeries::zero(4).inverse().is_err());
    }

    #[test]
    fn negative_powers() {
        let s = sinhc(10);
        let a = s.powi(-3).unwrap();
        let b = s.powi(3).unwrap();
        assert_eq!(&a * &b, UnivariateSeries::one(10));
    }
}
