use num_traits::Zero;

use super::{HurwitzKey, SeriesTable};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{int, to_wire, Rational};

/// Outcome of checking the join-cut equation on a connected table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinCutReport {
    pub keys_checked: usize,
    pub initial_conditions_checked: usize,
    /// The first key whose two sides differ, with both sides.
    pub first_failure: Option<String>,
}

impl JoinCutReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Builds the connected table at the given bounds and checks the join-cut
/// equation on every key, plus `[z^i p_i q_i u] H = 1/i`.
pub fn verify_join_cut(d_max: u32, r_max: u32) -> Result<JoinCutReport> {
    let table = super::build_series_table(d_max, r_max)?.log()?;
    check_table(&table)
}

impl SeriesTable {
    /// Join-cut check on this (connected) table.
    pub fn check_join_cut(&self) -> Result<JoinCutReport> {
        check_table(self)
    }
}

fn check_table(table: &SeriesTable) -> Result<JoinCutReport> {
    if !table.is_connected() {
        return Err(Error::precondition(
            "join-cut applies to the connected series",
        ));
    }
    let mut report = JoinCutReport {
        keys_checked: 0,
        initial_conditions_checked: 0,
        first_failure: None,
    };

    for i in 1..=table.d_max() {
        let key = HurwitzKey {
            alpha: Partition::single(i),
            beta: Partition::single(i),
            r: 0,
        };
        let got = table.coeff(&key)?;
        report.initial_conditions_checked += 1;
        if got != Rational::new(1.into(), i.into()) {
            report.first_failure = Some(format!("initial condition at i={i}: {}", to_wire(&got)));
            return Ok(report);
        }
    }

    for (key, value) in table.iter() {
        if !key.parity_ok() {
            continue;
        }
        let lhs = int(key.r) * value;
        let rhs = rhs(table, key)?;
        report.keys_checked += 1;
        if lhs != rhs {
            report.first_failure = Some(format!(
                "{key:?}: lhs {} != rhs {}",
                to_wire(&lhs),
                to_wire(&rhs)
            ));
            return Ok(report);
        }
    }
    Ok(report)
}

fn coeff(table: &SeriesTable, alpha: Partition, beta: &Partition, r: u32) -> Result<Rational> {
    let k = HurwitzKey {
        alpha,
        beta: beta.clone(),
        r,
    };
    if !k.parity_ok() {
        return Ok(Rational::zero());
    }
    table.coeff(&k)
}

/// Coefficient of `p_alpha q_beta` (at the key's genus) in the right side:
/// `1/2 sum_{i,j} [ij p_{i+j} H_i H_j + (i+j) p_i p_j H_{i+j} + ij p_{i+j} y H_{ij}]`,
/// where subscripts denote derivatives in the `p` variables.
fn rhs(table: &SeriesTable, key: &HurwitzKey) -> Result<Rational> {
    if key.r == 0 {
        return Ok(Rational::zero());
    }
    let alpha = &key.alpha;
    let beta = &key.beta;
    let r_prev = key.r - 1;
    let mut total = Rational::zero();

    let distinct: Vec<u32> = alpha.multiplicities().keys().copied().collect();

    // cut: two parts i, j of alpha came from one part i + j
    for &i in &distinct {
        for &j in &distinct {
            let Some(rest) = alpha.remove_part(i).and_then(|a| a.remove_part(j)) else {
                continue;
            };
            let source = rest.add_part(i + j);
            let mult = source.multiplicity(i + j);
            let c = coeff(table, source, beta, r_prev)?;
            total += int(i + j) * int(mult) * c;
        }
    }

    for &s in &distinct {
        let rest = alpha.remove_part(s).expect("part present");
        for i in 1..s {
            let j = s - i;

            // genus: one part s came from two parts i, j of a single component
            let source = rest.add_part(i).add_part(j);
            let mi = source.multiplicity(i) as i64;
            let mj = source.multiplicity(j) as i64 - if i == j { 1 } else { 0 };
            let c = coeff(table, source, beta, r_prev)?;
            total += int(i as i64 * j as i64 * mi * mj) * c;

            // join: part i of one component and part j of another merged
            for (rho_a, rho_b) in rest.splits() {
                let alpha_a = rho_a.add_part(i);
                let alpha_b = rho_b.add_part(j);
                let wa = int(i * alpha_a.multiplicity(i));
                let wb = int(j * alpha_b.multiplicity(j));
                for (beta_a, beta_b) in beta.splits() {
                    if beta_a.size() != alpha_a.size() {
                        continue;
                    }
                    for ra in 0..=r_prev {
                        let ca = coeff(table, alpha_a.clone(), &beta_a, ra)?;
                        if ca.is_zero() {
                            continue;
                        }
                        let cb = coeff(table, alpha_b.clone(), &beta_b, r_prev - ra)?;
                        total += &wa * &wb * ca * cb;
                    }
                }
            }
        }
    }
    Ok(total / int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::build_series_table;
    use crate::rational::rat;

    #[test]
    fn small_bounds_pass() {
        let report = verify_join_cut(4, 4).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.initial_conditions_checked, 4);
    }

    #[test]
    fn initial_condition_value() {
        let t = build_series_table(3, 0).unwrap().log().unwrap();
        let k = HurwitzKey {
            alpha: Partition::single(3),
            beta: Partition::single(3),
            r: 0,
        };
        assert_eq!(t.coeff(&k).unwrap(), rat(1, 3));
    }

    #[test]
    fn perturbation_is_detected() {
        let mut t = build_series_table(4, 4).unwrap().log().unwrap();
        let k = HurwitzKey::new("2,1".parse().unwrap(), "3".parse().unwrap(), 1).unwrap();
        let v = t.coeff(&k).unwrap();
        t.set_coeff(&k, v + rat(1, 7)).unwrap();
        assert!(!t.check_join_cut().unwrap().passed());
    }
}
