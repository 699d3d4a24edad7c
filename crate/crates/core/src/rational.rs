//! Exact rationals and the small integer helpers the formulas lean on.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps values
//! reduced with a positive denominator. The helpers here only add the
//! `"num/den"` wire format and a few conveniences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Formats as `"num/den"`; integers keep the `/1` so consumers can parse
/// every value the same way.
pub fn to_wire(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Human-friendly form: integers print bare.
pub fn to_plain(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        to_wire(q)
    }
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// `base^exp` for a possibly negative exponent. `0^0 = 1`; `0^-k` is a
/// precondition error.
pub fn pow_signed(base: &Rational, exp: i64) -> Result<Rational> {
    if exp >= 0 {
        Ok(num_traits::pow(base.clone(), exp as usize))
    } else if base.is_zero() {
        Err(Error::precondition("zero raised to a negative power"))
    } else {
        Ok(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(2m-1)!!` style double factorial for odd `n >= -1`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: i64) -> Result<BigInt> {
    if n < -1 || n.is_even() {
        return Err(Error::precondition(format!(
            "double factorial defined here for odd n >= -1, got {n}"
        )));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}
