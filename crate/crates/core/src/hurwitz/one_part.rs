use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{factorial, int, pow_signed, rat, Rational};
use crate::series::{sinhc, xi_coeff};

fn prefactor(g: u32, beta: &Partition) -> Result<Rational> {
    let d = beta.size();
    if d == 0 {
        return Err(Error::precondition("beta must be nonempty"));
    }
    let r = beta.len() as i64 - 1 + 2 * g as i64;
    Ok(Rational::from_integer(factorial(r as u64)) * pow_signed(&int(d), r - 1)?)
}

/// `r! d^{r-1} [t^{2g}] prod_k (sinh(kt/2)/(kt/2))^{c_k}`.
pub fn one_part_sinh_form(g: u32, beta: &Partition) -> Result<Rational> {
    let pre = prefactor(g, beta)?;
    let order = 2 * g as usize;
    let base = sinhc(order);
    let mut acc = crate::series::UnivariateSeries::one(order);
    for (k, c) in beta.hook_content_counts() {
        if c == 0 {
            continue;
        }
        let factor = base.dilate(&rat(k as i64, 2));
        acc = &acc * &factor.powi(c)?;
    }
    Ok(pre * acc.coeff(order))
}

/// `(r! d^{r-1} / 2^{2g}) sum_{lambda |- g} xi_{2 lambda} S_{2 lambda} / |Aut lambda|`.
pub fn one_part_xi_form(g: u32, beta: &Partition) -> Result<Rational> {
    let pre = prefactor(g, beta)?;
    let mut sum = Rational::default();
    for lambda in partitions_of(g) {
        let mut term = Rational::one();
        for &part in lambda.parts() {
            term *= xi_coeff(2 * part) * Rational::from_integer(beta.shifted_power_sum(2 * part));
        }
        sum += term / Rational::from_integer(lambda.aut_order());
    }
    let two_pow = Rational::from_integer(num_traits::pow(BigInt::from(2), 2 * g as usize));
    Ok(pre * sum / two_pow)
}

/// `H^g_{(d),beta}` from both one-part forms, which must agree.
pub fn one_part(g: u32, beta: &Partition) -> Result<Rational> {
    let a = one_part_sinh_form(g, beta)?;
    let b = one_part_xi_form(g, beta)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "one-part forms disagree at g={g}, beta=({beta}): {a} vs {b}"
        )));
    }
    Ok(a)
}

/// Tabulated polynomial in the shifted power sums, `g <= 5`.
pub fn one_part_closed(g: u32, beta: &Partition) -> Result<Rational> {
    if g > 5 {
        return Err(Error::UnsupportedGenus { genus: g, max: 5 });
    }
    let d = beta.size();
    if d == 0 {
        return Err(Error::precondition("beta must be nonempty"));
    }
    let n = beta.len() as u64;
    let s = |j: u32| Rational::from_integer(beta.shifted_power_sum(j));
    let fact = |k: u64| Rational::from_integer(factorial(k));
    let dp = |e: i64| pow_signed(&int(d), e).expect("d > 0");
    let ni = n as i64;
    let v = match g {
        0 => fact(n - 1) * dp(ni - 2),
        1 => fact(n + 1) / int(24) * dp(ni) * s(2),
        2 => fact(n + 3) * dp(ni + 2) / int(5760) * (int(5) * s(2) * s(2) - int(2) * s(4)),
        3 => {
            fact(n + 5) * dp(ni + 4) / int(1024 * 81 * 5 * 7)
                * (int(16) * s(6) - int(42) * s(2) * s(4) + int(35) * s(2) * s(2) * s(2))
        }
        4 => {
            let inner = -s(8) / int(37800) + s(2) * s(6) / int(17010) + s(4) * s(4) / int(64800)
                - s(2) * s(2) * s(4) / int(12960)
                + num_traits::pow(s(2), 4) / int(31104);
            fact(n + 7) * dp(ni + 6) / int(256) * inner
        }
        _ => {
            let inner = s(10) / int(467775) - s(2) * s(8) / int(226800) - s(4) * s(6) / int(510300)
                + s(2) * s(2) * s(6) / int(204120)
                + s(2) * s(4) * s(4) / int(388800)
                - num_traits::pow(s(2), 3) * s(4) / int(233280)
                + num_traits::pow(s(2), 5) / int(933120);
            fact(n + 9) * dp(ni + 8) / int(1024) * inner
        }
    };
    Ok(v)
}
