//! Named identity suites. Each suite runs a family of independent
//! computations against each other and returns one [`CheckReport`] per
//! identity, so callers can print every comparison that failed.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hurwitz::{
    brute_force, build_series_table, connected, diagonal, genus0_mparts, one_part, one_part_closed,
    one_part_sinh_form, one_part_xi_form, r_value, two_two_oriented, verify_join_cut,
};
use crate::lagrange::{verify_ansatz, verify_genus0_general_u, verify_lagrange, verify_wittansx};
use crate::partition::{partitions_of, Partition};
use crate::polynomiality::{
    battery, check_chamber_formula_022, check_degree_bounds, one_part_windows,
};
use crate::rational::{rat, to_wire};
use crate::report::CheckReport;
use crate::series::{bernoulli, f_coeff, sinhc, v_coeff, xi_coeff, UnivariateSeries};
use crate::symbol::{
    check_string_dilaton_range, closed_form_as_symbol, family_members, lambda_top_constant,
    one_point_identity, symbol_def, symbol_wittcor, top_psi_value, valid_indices, PicIndex,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    CrossMethods,
    OnePart,
    Symbols,
    StringDilaton,
    JoinCut,
    Ansatz,
    Polynomiality,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "cross-methods",
        "one-part",
        "symbols",
        "string-dilaton",
        "join-cut",
        "ansatz",
        "polynomiality",
        "all",
    ];

    const EACH: [Suite; 7] = [
        Suite::CrossMethods,
        Suite::OnePart,
        Suite::Symbols,
        Suite::StringDilaton,
        Suite::JoinCut,
        Suite::Ansatz,
        Suite::Polynomiality,
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| {
                if i < Suite::EACH.len() {
                    Suite::EACH[i]
                } else {
                    Suite::All
                }
            })
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = Suite::EACH.iter().position(|s| s == self).unwrap_or(7);
        f.write_str(Suite::NAMES[i])
    }
}

/// Bounds shared by the suites. Each suite reads the ones it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest degree `d`.
    pub d_max: u32,
    /// Largest genus.
    pub g_max: u32,
    /// Largest number of simple branch points for enumeration and tables.
    pub r_max: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            d_max: 6,
            g_max: 3,
            r_max: 6,
        }
    }
}

/// Runs one suite, or all of them in order. Identities with nothing to
/// compare at the given bounds (say, no two-part inputs below `d = 3`)
/// are left out rather than reported as empty.
pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<Vec<CheckReport>> {
    let mut reports = run_unfiltered(suite, bounds)?;
    reports.retain(|r| r.checked > 0);
    Ok(reports)
}

fn run_unfiltered(suite: Suite, bounds: Bounds) -> Result<Vec<CheckReport>> {
    match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_unfiltered(s, bounds)?);
            }
            Ok(out)
        }
        Suite::CrossMethods => cross_methods(bounds),
        Suite::OnePart => one_part_suite(bounds),
        Suite::Symbols => symbols(bounds),
        Suite::StringDilaton => Ok(vec![check_string_dilaton_range(bounds.g_max, 3)?]),
        Suite::JoinCut => join_cut(bounds),
        Suite::Ansatz => ansatz(bounds),
        Suite::Polynomiality => polynomiality(bounds),
    }
}

fn pairs(d_max: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        let parts = partitions_of(d);
        for a in &parts {
            for b in &parts {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn cross_methods(b: Bounds) -> Result<Vec<CheckReport>> {
    // brute force beyond degree 6 is out of reach
    let brute_d = b.d_max.min(6);
    let jobs: Vec<(i64, Partition, Partition)> = pairs(brute_d)
        .into_iter()
        .flat_map(|(a, c)| {
            (0..=b.g_max as i64)
                .filter(|&g| r_value(g, &a, &c).is_ok_and(|r| r <= b.r_max as i64))
                .map(|g| (g, a.clone(), c.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|(g, a, c)| Ok((connected(*g, a, c)?, brute_force(*g, a, c, true)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut brute = CheckReport::new("character sum = enumeration");
    for ((g, a, c), (x, y)) in jobs.iter().zip(results) {
        brute.record(x == y, || {
            format!("g={g} ({a}),({c}): {} vs {}", to_wire(&x), to_wire(&y))
        });
    }

    let mut two = CheckReport::new("two-part closed form");
    let mut genus0 = CheckReport::new("genus-0 closed form");
    for (a, c) in pairs(b.d_max) {
        let distinct = a.len() == 2
            && c.len() == 2
            && a.multiplicities().len() == 2
            && c.multiplicities().len() == 2
            && a.parts().iter().all(|p| !c.parts().contains(p));
        if distinct {
            for g in 0..=b.g_max {
                let x = connected(g as i64, &a, &c)?;
                let y = two_two_oriented(g, &a, &c)?;
                two.record(x == y, || {
                    format!("g={g} ({a}),({c}): {} vs {}", to_wire(&x), to_wire(&y))
                });
            }
        }
        if a.len() == 2 || a.len() == 3 {
            let x = connected(0, &a, &c)?;
            let y = genus0_mparts(&a, &c)?;
            genus0.record(x == y, || {
                format!("({a}),({c}): {} vs {}", to_wire(&x), to_wire(&y))
            });
        }
    }
    Ok(vec![brute, two, genus0])
}

fn one_part_suite(b: Bounds) -> Result<Vec<CheckReport>> {
    let mut forms = CheckReport::new("one-part: sinh form = xi form = character sum");
    let mut closed = CheckReport::new("one-part: tabulated polynomials");
    let mut diag = CheckReport::new("diagonal closed form");
    for d in 1..=b.d_max {
        for beta in partitions_of(d) {
            let alpha = Partition::single(d);
            for g in 0..=b.g_max {
                let s = one_part_sinh_form(g, &beta)?;
                let x = one_part_xi_form(g, &beta)?;
                let c = connected(g as i64, &alpha, &beta)?;
                forms.record(s == x && x == c, || {
                    format!(
                        "g={g} ({beta}): {} / {} / {}",
                        to_wire(&s),
                        to_wire(&x),
                        to_wire(&c)
                    )
                });
            }
            for g in 0..=5 {
                let x = one_part(g, &beta)?;
                let y = one_part_closed(g, &beta)?;
                closed.record(x == y, || {
                    format!("g={g} ({beta}): {} vs {}", to_wire(&x), to_wire(&y))
                });
            }
        }
        for g in 0..=b.g_max.max(4) {
            let one = Partition::single(d);
            let x = diagonal(g, d)?;
            let y = connected(g as i64, &one, &one)?;
            diag.record(x == y, || {
                format!("g={g} d={d}: {} vs {}", to_wire(&x), to_wire(&y))
            });
        }
        let x = diagonal(0, d)?;
        diag.record(x == rat(1, d as i64), || {
            format!("g=0 d={d}: {}", to_wire(&x))
        });
    }
    Ok(vec![forms, closed, diag])
}

fn symbols(b: Bounds) -> Result<Vec<CheckReport>> {
    let mut eq = CheckReport::new("symbol from definition = symbol from corollary");
    let mut nonneg = CheckReport::new("symbols are non-negative");
    for g in 0..=b.g_max {
        for n in 1..=4 {
            for idx in valid_indices(g, n) {
                if idx.is_excluded() {
                    continue;
                }
                let x = symbol_def(&idx)?;
                let y = symbol_wittcor(&idx)?;
                eq.record(x == y, || {
                    format!("{idx:?}: {} vs {}", to_wire(&x), to_wire(&y))
                });
                nonneg.record(!y.is_negative(), || format!("{idx:?}: {}", to_wire(&y)));
            }
        }
    }

    let mut special = CheckReport::new("special symbol values");
    let quarter = rat(1, 24);
    for (k, part) in [(0, 2), (1, 0)] {
        let idx = PicIndex::new(1, k, vec![part])?;
        let y = symbol_wittcor(&idx)?;
        special.record(y == quarter, || format!("{idx:?}: {}", to_wire(&y)));
    }
    let top_g = b.g_max.max(4);
    for g in 1..=top_g {
        let idx = PicIndex::new(g, 0, vec![4 * g - 2])?;
        let y = symbol_wittcor(&idx)?;
        let want = top_psi_value(g);
        special.record(y == want, || {
            format!("{idx:?}: {} vs {}", to_wire(&y), to_wire(&want))
        });
        let idx = PicIndex::new(g, g, vec![2 * g - 2])?;
        let y = symbol_wittcor(&idx)?;
        let want = lambda_top_constant(g)?;
        special.record(y == want, || {
            format!("{idx:?}: {} vs {}", to_wire(&y), to_wire(&want))
        });
    }

    let mut families = CheckReport::new("closed-form families");
    for form in family_members(top_g, 4) {
        let idx = form.index()?;
        let x = closed_form_as_symbol(&form)?;
        let y = symbol_wittcor(&idx)?;
        families.record(x == y, || {
            format!("{form:?}: {} vs {}", to_wire(&x), to_wire(&y))
        });
    }

    Ok(vec![
        eq,
        nonneg,
        special,
        families,
        one_point_identity(top_g)?,
        special_series(12)?,
    ])
}

/// Bernoulli numbers and the `xi`, `v`, `f` coefficients against their
/// defining series, built here from exponentials.
pub fn special_series(max_index: u32) -> Result<CheckReport> {
    let order = max_index as usize + 2;
    let mut report = CheckReport::new("special series coefficients");
    let x = UnivariateSeries::var(order);
    let exp = x.exp()?;
    let exp_neg = (-&x).exp()?;
    // x / (e^x - 1) + x/2 = sum B_{2j} x^{2j} / (2j)!
    let em1 = (&exp - &UnivariateSeries::one(order)).shift_down();
    let bern = &em1.inverse()? + &x.scale(&rat(1, 2));
    // (2/x) sinh(x/2) and its reciprocal (x/2) cosech(x/2)
    let half = x.scale(&rat(1, 2));
    let sh = (&half.exp()? - &(-&half).exp()?).shift_down();
    let csch = sh.inverse()?;
    let log_sinhc = (&exp - &exp_neg).shift_down().scale(&rat(1, 2)).log()?;
    for two_j in (0..=max_index).step_by(2) {
        let i = two_j as usize;
        let fact = crate::rational::int(crate::rational::factorial(two_j as u64));
        let b = bernoulli(two_j);
        report.record(b == bern.coeff(i) * &fact, || {
            format!("B_{two_j}: {}", to_wire(&b))
        });
        let v = v_coeff(two_j);
        report.record(v == sh.coeff(i), || format!("v_{two_j}: {}", to_wire(&v)));
        let f = f_coeff(two_j);
        report.record(f == csch.coeff(i), || format!("f_{two_j}: {}", to_wire(&f)));
        let sign_ok = if (two_j / 2) % 2 == 0 {
            f.is_positive()
        } else {
            f.is_negative()
        };
        report.record(sign_ok, || format!("sign of f_{two_j}: {}", to_wire(&f)));
        if two_j >= 2 {
            let xi = xi_coeff(two_j);
            report.record(xi == log_sinhc.coeff(i), || {
                format!("xi_{two_j}: {}", to_wire(&xi))
            });
        }
    }
    // sinh(x)/x as used by the one-part formula
    let direct = (&exp - &exp_neg).shift_down().scale(&rat(1, 2));
    let reference = sinhc(order - 1);
    report.record(direct == reference, || "sinh(x)/x".into());
    Ok(report)
}

fn join_cut(b: Bounds) -> Result<Vec<CheckReport>> {
    let jc = verify_join_cut(b.d_max, b.r_max)?;
    let mut report = CheckReport::new("join-cut equation and initial conditions");
    report.checked = jc.keys_checked + jc.initial_conditions_checked;
    if let Some(f) = jc.first_failure {
        report.failed = 1;
        report.failures.push(f);
    }
    let mut trip = CheckReport::new("exp(log(table)) = table");
    let table = build_series_table(b.d_max, b.r_max)?;
    let back = table.log()?.exp()?;
    for (key, v) in table.iter() {
        let w = back.coeff(key)?;
        trip.record(*v == w, || {
            format!("{key:?}: {} vs {}", to_wire(v), to_wire(&w))
        });
    }
    Ok(vec![report, trip])
}

fn ansatz(b: Bounds) -> Result<Vec<CheckReport>> {
    let order = b.d_max as usize;
    let mut out = vec![
        verify_lagrange(order)?,
        verify_genus0_general_u(order)?,
        verify_ansatz(0, order)?,
    ];
    if b.g_max >= 1 {
        out.push(verify_ansatz(1, order)?);
    }
    let witt_order = order.saturating_sub(1).max(1);
    for g in 0..=b.g_max.min(2) {
        out.push(verify_wittansx(g, witt_order)?);
    }
    Ok(out)
}

fn polynomiality(b: Bounds) -> Result<Vec<CheckReport>> {
    let mut rays = CheckReport::new("ray degree equals 4g-3+m+n");
    for (g, alpha, beta) in battery() {
        let top = 4 * g + alpha.len() as u32 + beta.len() as u32 - 3;
        let r = check_degree_bounds(g, &alpha, &beta, top + 3)?;
        rays.record(r.passed() && r.top_degree_attained, || {
            format!(
                "g={g} ({alpha}),({beta}): degree {} leading {}",
                r.fit.degree,
                to_wire(&r.fit.leading)
            )
        });
    }
    let chamber = check_chamber_formula_022(b.d_max.max(2))?;
    let mut ch = CheckReport::new("genus-0 (2,2) chamber formula 2 max");
    ch.checked = chamber.checked;
    ch.failed = chamber.canonical_failures.len();
    ch.failures = chamber.canonical_failures.into_iter().take(10).collect();
    let mut windows = CheckReport::new("one-part rays are polynomial inside the window");
    for r in one_part_windows(b.g_max, 4)? {
        let row = r.row();
        windows.record(r.passed() && !r.fit.leading.is_zero(), || {
            format!("{row:?}")
        });
    }
    Ok(vec![rays, ch, windows])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn all_at_tiny_bounds() {
        let bounds = Bounds {
            d_max: 2,
            g_max: 1,
            r_max: 2,
        };
        for r in run_suite(Suite::All, bounds).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn special_series_through_12() {
        let r = special_series(12).unwrap();
        assert!(r.passed(), "{r}");
    }
}
