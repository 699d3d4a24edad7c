use serde::Serialize;

use crate::error::Result;
use crate::hurwitz::{connected, Normalization};
use crate::partition::{partitions_of, Partition};
use crate::rational::{int, Rational};

/// Genus-0 `(2,2)` values against `2 max(alpha_1, alpha_2, beta_1, beta_2)`
/// under both normalizations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChamberReport {
    pub checked: usize,
    /// Inputs where the canonical value differs from `2 max`.
    pub canonical_failures: Vec<String>,
    /// Inputs where the `|Aut|`-divided value differs from `2 max`.
    pub divided_failures: Vec<String>,
    /// How many inputs have a repeated part on either side.
    pub nontrivial_aut: usize,
}

impl ChamberReport {
    /// The formula holds for the canonical numbers on the whole grid.
    pub fn passed(&self) -> bool {
        self.checked > 0 && self.canonical_failures.is_empty()
    }
}

/// Every pair of two-part partitions with `|alpha| = |beta| <= max_d`.
pub fn check_chamber_formula_022(max_d: u32) -> Result<ChamberReport> {
    let mut report = ChamberReport::default();
    for d in 2..=max_d {
        let two_part: Vec<Partition> = partitions_of(d)
            .into_iter()
            .filter(|p| p.len() == 2)
            .collect();
        for alpha in &two_part {
            for beta in &two_part {
                let canonical = connected(0, alpha, beta)?;
                let divided = Normalization::AutDivided.apply(canonical.clone(), alpha, beta);
                let max = alpha.parts()[0].max(beta.parts()[0]);
                let expected: Rational = int(2 * max);
                report.checked += 1;
                let aut_trivial = alpha.aut_order() == 1.into() && beta.aut_order() == 1.into();
                if !aut_trivial {
                    report.nontrivial_aut += 1;
                }
                let label = format!("({alpha}),({beta})");
                if canonical != expected {
                    report
                        .canonical_failures
                        .push(format!("{label}: {canonical}"));
                }
                if divided != expected {
                    report.divided_failures.push(format!("{label}: {divided}"));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(connected(0, &p("1,1"), &p("1,1")).unwrap(), rat(2, 1));
        assert_eq!(connected(0, &p("2,1"), &p("2,1")).unwrap(), rat(4, 1));
        assert_eq!(connected(0, &p("3,1"), &p("2,2")).unwrap(), rat(6, 1));
    }

    #[test]
    fn small_grid() {
        let r = check_chamber_formula_022(6).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.divided_failures.len(), r.nontrivial_aut);
    }
}
