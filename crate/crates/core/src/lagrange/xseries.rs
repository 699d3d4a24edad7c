use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::QuPoly;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Power series in one variable truncated at order `D`, with coefficients
/// polynomial in the `q_j` and `u`. Used both for series in `x` and for
/// series in the Lagrange variable `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSeries {
    coeffs: Vec<QuPoly>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![QuPoly::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: QuPoly) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, QuPoly::constant(Rational::one()))
    }

    /// The series of the variable itself.
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = QuPoly::constant(Rational::one());
        }
        s
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> QuPoly) -> Self {
        XSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `Q^(i) = sum_{j>=1} q_j j^i t^j`.
    pub fn q_series(order: usize, i: u32) -> Self {
        Self::from_fn(order, |j| {
            if j == 0 {
                QuPoly::zero()
            } else {
                QuPoly::q(
                    j as u32,
                    int(num_traits::pow(num_bigint::BigInt::from(j), i as usize)),
                )
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> QuPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[QuPoly] {
        &self.coeffs
    }

    pub fn map(&self, f: impl Fn(&QuPoly) -> QuPoly) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn mul_poly(&self, c: &QuPoly) -> Self {
        self.map(|p| c * p)
    }

    pub fn at_u(&self, value: &Rational) -> Self {
        self.map(|p| p.at_u(value))
    }

    pub fn du(&self) -> Self {
        self.map(QuPoly::du)
    }

    /// `t d/dt`.
    pub fn euler(&self) -> Self {
        XSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, p)| p.scale(&int(n as u64)))
                .collect(),
        }
    }

    /// `d/dt`, losing the top order.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        Self::from_fn(order, |n| {
            if n < order {
                self.coeffs[n + 1].scale(&int(n as u64 + 1))
            } else {
                QuPoly::zero()
            }
        })
    }

    /// Division by the variable; the constant term must vanish.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition("series has a constant term"));
        }
        let order = self.order();
        Ok(Self::from_fn(order, |n| self.coeff(n + 1)))
    }

    /// `exp` of a series with zero constant term, through
    /// `n E_n = sum_{k=1}^n k A_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition("exp needs a zero constant term"));
        }
        let order = self.order();
        let mut e = vec![QuPoly::constant(Rational::one())];
        for n in 1..=order {
            let mut acc = QuPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &e[n - k]).scale(&int(k as u64));
            }
            e.push(acc.scale(&(Rational::one() / int(n as u64))));
        }
        Ok(XSeries { coeffs: e })
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::precondition("inverse needs a nonzero scalar constant term"))?;
        let inv0 = Rational::one() / c0;
        let order = self.order();
        let mut out = vec![QuPoly::constant(inv0.clone())];
        for n in 1..=order {
            let mut acc = QuPoly::zero();
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(XSeries { coeffs: out })
    }

    pub fn powi(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }

    /// `self(inner)`, for `inner` with zero constant term, by Horner's rule.
    pub fn compose(&self, inner: &XSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::precondition(
                "inner series must have zero constant term",
            ));
        }
        let order = inner.order();
        let mut acc = XSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &XSeries::constant(order, c.clone());
        }
        Ok(acc)
    }
}

impl Add for &XSeries {
    type Output = XSeries;
    fn add(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries::from_fn(order, |n| &self.coeffs[n] + &rhs.coeffs[n])
    }
}

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        self.map(|p| -p)
    }
}

impl Sub for &XSeries {
    type Output = XSeries;
    fn sub(self, rhs: &XSeries) -> XSeries {
        self + &(-rhs)
    }
}

impl Mul for &XSeries {
    type Output = XSeries;
    fn mul(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        let mut out = XSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        out
    }
}
