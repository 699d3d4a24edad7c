//! The functional equation `w = x e^{u Q(w)}` with `Q(t) = sum_j q_j t^j`,
//! Lagrange inversion for it, and checks of the genus expansion of the
//! one-part series against Hurwitz data.

mod ansatz;
mod poly;
mod xseries;

pub use ansatz::{
    hurwitz_side, verify_ansatz, verify_ansatz_with, verify_genus0_general_u, verify_wittansx,
    Genus1Form,
};
pub use poly::{Monomial, QuPoly};
pub use xseries::XSeries;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::report::CheckReport;

/// `u Q(t)`, as a series in `t`.
fn u_q(order: usize) -> XSeries {
    XSeries::q_series(order, 0).mul_poly(&QuPoly::u())
}

/// `phi(lambda)^n = e^{n u Q(lambda)}`.
fn phi_pow(order: usize, n: usize) -> Result<XSeries> {
    u_q(order).scale(&int(n as u64)).exp()
}

/// The solution of `w = x e^{u Q(w)}` through `x^D`, by fixed-point
/// iteration. Each pass fixes one more coefficient.
pub fn solve_w(order: usize) -> Result<XSeries> {
    if order == 0 {
        return Err(Error::precondition("truncation order must be at least 1"));
    }
    let x = XSeries::var(order);
    let uq = u_q(order);
    let mut w = x.clone();
    for _ in 0..order {
        w = &x * &uq.compose(&w)?.exp()?;
    }
    Ok(w)
}

/// The same solution from `[x^n] w = (1/n) [lambda^{n-1}] phi(lambda)^n`.
pub fn solve_w_lagrange(order: usize) -> Result<XSeries> {
    let mut coeffs = vec![QuPoly::zero()];
    for n in 1..=order {
        let c = phi_pow(order, n)?.coeff(n - 1);
        coeffs.push(c.scale(&(Rational::one() / int(n as u64))));
    }
    Ok(XSeries::from_fn(order, |n| coeffs[n].clone()))
}

/// `mu(w) = 1 / (1 - u Q^(1)(w))`, given `w`.
pub fn mu_of(w: &XSeries) -> Result<XSeries> {
    let order = w.order();
    let q1 = XSeries::q_series(order, 1)
        .compose(w)?
        .mul_poly(&QuPoly::u());
    (&XSeries::one(order) - &q1).inverse()
}

/// The two forms of Lagrange's theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LagrangeForm {
    /// `[x^n] f(w) = (1/n) [lambda^{n-1}] f'(lambda) phi(lambda)^n`.
    Composition,
    /// `[x^n] (f(w)/w) x dw/dx = [lambda^n] f(lambda) phi(lambda)^n`.
    Logarithmic,
}

/// `[x^n]` of the chosen form, from Lagrange's theorem. `f` is a series in
/// `lambda`, truncated at least at order `n`.
pub fn lagrange_coefficient(f: &XSeries, n: usize, form: LagrangeForm) -> Result<QuPoly> {
    let order = f.order();
    if n > order {
        return Err(Error::precondition(format!(
            "n = {n} exceeds the truncation {order}"
        )));
    }
    match form {
        LagrangeForm::Composition => {
            if n == 0 {
                return Ok(f.coeff(0));
            }
            let c = (&f.derivative() * &phi_pow(order, n)?).coeff(n - 1);
            Ok(c.scale(&(Rational::one() / int(n as u64))))
        }
        LagrangeForm::Logarithmic => Ok((f * &phi_pow(order, n)?).coeff(n)),
    }
}

/// `[x^n]` of the chosen form by substituting the series `w` directly.
/// The logarithmic form needs `w` through order `n + 1`.
pub fn direct_substitution(
    f: &XSeries,
    w: &XSeries,
    n: usize,
    form: LagrangeForm,
) -> Result<QuPoly> {
    let needed = if form == LagrangeForm::Logarithmic {
        n + 1
    } else {
        n
    };
    if w.order() < needed || f.order() < n {
        return Err(Error::precondition(format!("series too short for [x^{n}]")));
    }
    let fw = f.compose(w)?;
    match form {
        LagrangeForm::Composition => Ok(fw.coeff(n)),
        LagrangeForm::Logarithmic => {
            // w = x h with h(0) = 1, so x w'/w = 1 + x h'/h
            let h = w.shift_down()?;
            let log_deriv = &XSeries::one(w.order()) + &(&h.euler() * &h.inverse()?);
            Ok((&fw * &log_deriv).coeff(n))
        }
    }
}

/// Both Lagrange forms against direct substitution, for several `f`, plus
/// the two closed forms of `w` against each other.
pub fn verify_lagrange(order: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("Lagrange inversion");
    let w = solve_w(order)?;
    let w_lag = solve_w_lagrange(order)?;
    for n in 0..=order {
        report.record(w.coeff(n) == w_lag.coeff(n), || {
            format!(
                "[x^{n}] w: iteration {} vs Lagrange {}",
                w.coeff(n),
                w_lag.coeff(n)
            )
        });
    }
    // dividing w by x loses its top coefficient, so f stops one order lower
    let test_order = order - 1;
    let lambda = XSeries::var(test_order);
    let samples = [
        ("identity", lambda.clone()),
        ("Q", XSeries::q_series(test_order, 0)),
        ("Q^(2)", XSeries::q_series(test_order, 2)),
        (
            "1 + lambda^2 + Q",
            &(&XSeries::one(test_order) + &lambda.powi(2)) + &XSeries::q_series(test_order, 0),
        ),
    ];
    for (name, f) in samples {
        for form in [LagrangeForm::Composition, LagrangeForm::Logarithmic] {
            for n in 0..=test_order {
                let a = lagrange_coefficient(&f, n, form)?;
                let b = direct_substitution(&f, &w, n, form)?;
                report.record(a == b, || format!("{name} {form:?} n={n}: {a} vs {b}"));
            }
        }
    }
    Ok(report)
}

/// `x dw/dx = w mu(w)` and `dw/du = w Q(w) mu(w)` through the truncation.
pub fn verify_w_identities(order: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("w differential identities");
    let w = solve_w(order)?;
    let mu = mu_of(&w)?;
    let qw = XSeries::q_series(order, 0).compose(&w)?;
    let lhs_x = w.euler();
    let rhs_x = &w * &mu;
    let lhs_u = w.du();
    let rhs_u = &(&w * &qw) * &mu;
    for n in 0..=order {
        report.record(lhs_x.coeff(n) == rhs_x.coeff(n), || {
            format!("x-derivative at x^{n}")
        });
        report.record(lhs_u.coeff(n) == rhs_u.coeff(n), || {
            format!("u-derivative at x^{n}")
        });
    }
    Ok(report)
}
