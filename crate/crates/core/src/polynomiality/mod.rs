//! Double Hurwitz numbers along rays `t -> (t alpha, t beta)`. A ray stays
//! inside one cone of the resonance arrangement, so the values along it are
//! a polynomial in `t`. Exact finite differences recover that polynomial.

mod chamber;
mod fit;

pub use chamber::{check_chamber_formula_022, ChamberReport};
pub use fit::{fit_degree, newton_to_monomial, Fit};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hurwitz::{brute_force, connected, one_part};
use crate::partition::Partition;
use crate::rational::{factorial, int, to_wire, Rational};
use crate::symbol::one_part_polynomial;

/// How ray values are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    /// Character sum and logarithm of the disconnected series.
    Character,
    /// Enumeration of factorizations; only for small degree.
    BruteForce,
    /// The one-part formula; needs `l(alpha) = 1`.
    OnePart,
}

/// `H^g_{t alpha, t beta}` for `t = 1..=T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySample {
    pub g: u32,
    pub alpha: Partition,
    pub beta: Partition,
    pub method: Method,
    pub values: Vec<Rational>,
}

impl RaySample {
    pub fn m(&self) -> usize {
        self.alpha.len()
    }

    pub fn n(&self) -> usize {
        self.beta.len()
    }

    /// `[2g-3+m+n, 4g-3+m+n]`.
    pub fn window(&self) -> (i64, i64) {
        let base = self.m() as i64 + self.n() as i64 - 3;
        (2 * self.g as i64 + base, 4 * self.g as i64 + base)
    }
}

fn value(g: u32, alpha: &Partition, beta: &Partition, method: Method) -> Result<Rational> {
    match method {
        Method::Character => connected(g as i64, alpha, beta),
        Method::BruteForce => brute_force(g as i64, alpha, beta, true),
        Method::OnePart => {
            if alpha.len() != 1 {
                return Err(Error::precondition("one-part method needs l(alpha) = 1"));
            }
            one_part(g, beta)
        }
    }
}

/// Samples the ray in parallel.
pub fn ray_samples(
    g: u32,
    alpha: &Partition,
    beta: &Partition,
    t_max: u32,
    method: Method,
) -> Result<RaySample> {
    if t_max == 0 {
        return Err(Error::precondition("t_max must be at least 1"));
    }
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            alpha: alpha.size(),
            beta: beta.size(),
        });
    }
    let values = (1..=t_max)
        .into_par_iter()
        .map(|t| value(g, &alpha.scaled(t), &beta.scaled(t), method))
        .collect::<Result<Vec<_>>>()?;
    Ok(RaySample {
        g,
        alpha: alpha.clone(),
        beta: beta.clone(),
        method,
        values,
    })
}

/// Degree analysis of one ray against the window `[2g-3+m+n, 4g-3+m+n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub sample: RaySample,
    pub fit: Fit,
    /// Powers of `t` with a nonzero coefficient.
    pub monomial_degrees: Vec<u32>,
    pub window: (i64, i64),
    /// Every power of `t` lies in the window.
    pub in_window: bool,
    /// The fitted degree is the top of the window and the leading
    /// coefficient is nonzero.
    pub top_degree_attained: bool,
    /// For `l(alpha) = 1`: the one-part polynomial reproduces the samples
    /// and its monomials (after multiplying by `r! d`) sit in the window.
    pub one_part_global: Option<bool>,
}

impl DegreeReport {
    pub fn passed(&self) -> bool {
        self.in_window && self.one_part_global != Some(false)
    }

    pub fn row(&self) -> RayRow {
        RayRow {
            genus: self.sample.g,
            alpha: self.sample.alpha.to_string(),
            beta: self.sample.beta.to_string(),
            t_max: self.sample.values.len() as u32,
            method: format!("{:?}", self.sample.method).to_lowercase(),
            degree: self.fit.degree,
            leading: to_wire(&self.fit.leading),
            window_low: self.window.0,
            window_high: self.window.1,
            in_window: self.in_window,
            top_degree_attained: self.top_degree_attained,
        }
    }
}

/// One line of the CSV or JSON ray report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RayRow {
    pub genus: u32,
    pub alpha: String,
    pub beta: String,
    pub t_max: u32,
    pub method: String,
    pub degree: u32,
    pub leading: String,
    pub window_low: i64,
    pub window_high: i64,
    pub in_window: bool,
    pub top_degree_attained: bool,
}

/// Samples a ray, fits it exactly and compares with the degree window.
pub fn check_degree_bounds(
    g: u32,
    alpha: &Partition,
    beta: &Partition,
    t_max: u32,
) -> Result<DegreeReport> {
    let method = if alpha.len() == 1 {
        Method::OnePart
    } else {
        Method::Character
    };
    let sample = ray_samples(g, alpha, beta, t_max, method)?;
    degree_report(sample)
}

/// [`check_degree_bounds`] on an existing sample.
pub fn degree_report(sample: RaySample) -> Result<DegreeReport> {
    let fit = fit_degree(&sample.values)?;
    let window = sample.window();
    let monomial_degrees: Vec<u32> = fit
        .monomial
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, _)| i as u32)
        .collect();
    let in_window = monomial_degrees
        .iter()
        .all(|&e| window.0 <= e as i64 && e as i64 <= window.1);
    let top_degree_attained =
        fit.degree as i64 == window.1 && !num_traits::Zero::is_zero(&fit.leading);
    let one_part_global = if sample.m() == 1 {
        Some(one_part_global(&sample)?)
    } else {
        None
    };
    Ok(DegreeReport {
        sample,
        fit,
        monomial_degrees,
        window,
        in_window,
        top_degree_attained,
        one_part_global,
    })
}

fn one_part_global(sample: &RaySample) -> Result<bool> {
    let (g, n) = (sample.g, sample.n());
    if g == 0 && n <= 2 {
        // (n-1)! d^{n-2}: the constant 1 for n = 2, and 1/d for n = 1
        return Ok(n == 2);
    }
    let poly = one_part_polynomial(g, n)?;
    let window = sample.window();
    let degrees_ok = poly
        .total_degrees()
        .iter()
        .all(|&e| window.0 <= e as i64 + 1 && (e as i64) < window.1);
    let r = n as u64 - 1 + 2 * g as u64;
    let values_ok = sample.values.iter().enumerate().all(|(i, v)| {
        let beta = sample.beta.scaled(i as u32 + 1);
        let d = beta.size();
        poly.evaluate(beta.parts()) * Rational::from_integer(factorial(r)) * int(d) == *v
    });
    Ok(degrees_ok && values_ok)
}

/// A ray for each `(g, m, n)` of the standard battery, with base points
/// chosen off the resonance walls where the degree allows it.
pub fn battery() -> Vec<(u32, Partition, Partition)> {
    let p = |s: &str| s.parse::<Partition>().expect("valid literal");
    vec![
        (0, p("3,1"), p("2,2")),
        (0, p("5,1"), p("2,2,2")),
        (0, p("1,1,1"), p("1,1,1")),
        (1, p("3"), p("2,1")),
        (1, p("3,1"), p("2,2")),
    ]
}

/// The one-part degree-window check for `g <= max_g`, `n <= max_n`, on
/// the ray through `beta = (1, 2, ..., n)`.
pub fn one_part_windows(max_g: u32, max_n: usize) -> Result<Vec<DegreeReport>> {
    let mut out = Vec::new();
    for g in 0..=max_g {
        for n in 1..=max_n {
            if g == 0 && n == 1 {
                // 1/d is not a polynomial in the part; nothing to fit
                continue;
            }
            let beta = Partition::new((1..=n as u32).collect())?;
            let alpha = Partition::single(beta.size());
            let t_max = (4 * g as i64 - 2 + n as i64).max(0) as u32 + 3;
            out.push(check_degree_bounds(g, &alpha, &beta, t_max)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn linear_ray() {
        let s = ray_samples(0, &p("2,1"), &p("2,1"), 6, Method::Character).unwrap();
        let expected: Vec<Rational> = (1..=6).map(|t| rat(4 * t, 1)).collect();
        assert_eq!(s.values, expected);
        let f = fit_degree(&s.values).unwrap();
        assert_eq!((f.degree, f.leading), (1, rat(4, 1)));
    }

    #[test]
    fn constant_and_diagonal_rays() {
        let s = ray_samples(0, &p("2"), &p("1,1"), 4, Method::OnePart).unwrap();
        assert!(s.values.iter().all(|v| *v == rat(1, 1)));
        let s = ray_samples(1, &p("2"), &p("2"), 5, Method::Character).unwrap();
        for (t, v) in s.values.iter().enumerate() {
            assert_eq!(*v, crate::hurwitz::diagonal(1, 2 * (t as u32 + 1)).unwrap());
        }
    }

    #[test]
    fn one_part_windows_small() {
        for r in one_part_windows(2, 3).unwrap() {
            assert!(r.passed(), "{:?}", r.row());
            assert!(r.top_degree_attained, "{:?}", r.row());
        }
    }
}
