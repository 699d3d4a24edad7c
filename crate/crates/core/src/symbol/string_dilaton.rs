use num_traits::Zero;
use serde::Serialize;

use super::{symbol, PicIndex};
use crate::error::Result;
use crate::partition::padded_partitions;
use crate::rational::{int, rat, Rational};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Equation {
    /// Inserting `tau_0` lowers one other insertion.
    String,
    /// Inserting `tau_1` multiplies by `2g - 2 + n`.
    Dilaton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EquationCase {
    Regular,
    /// `g = k = 1`, `n = 0`: the left side is `1/24` and the right side is empty.
    Exceptional,
    /// String equation with `g = 0`, `n = 2`: the right side involves only
    /// the excluded two-point genus-0 symbols, so the left side
    /// `<<tau_0^3>>_0 = 1` is a starting value rather than an instance.
    InitialCondition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub case: EquationCase,
    pub holds: bool,
}

/// Evaluates both sides for the insertions `b` (the inserted `tau_0` or
/// `tau_1` is not part of `b`).
pub fn check_string_dilaton(g: u32, k: u32, b: &[u32], which: Equation) -> Result<EquationCheck> {
    let n = b.len();
    let with = |first: u32| -> Result<PicIndex> {
        let mut all = vec![first];
        all.extend_from_slice(b);
        PicIndex::new(g, k, all)
    };
    let plain = PicIndex::new(g, k, b.to_vec())?;
    match which {
        Equation::String => {
            let lhs = symbol(&with(0)?);
            if g == 1 && k == 1 && n == 0 {
                let holds = lhs == rat(1, 24);
                return Ok(EquationCheck {
                    lhs,
                    rhs: Rational::zero(),
                    case: EquationCase::Exceptional,
                    holds,
                });
            }
            let mut rhs = Rational::zero();
            for i in 0..n {
                if b[i] == 0 {
                    continue;
                }
                let mut lowered = b.to_vec();
                lowered[i] -= 1;
                rhs += symbol(&PicIndex::new(g, k, lowered)?);
            }
            if g == 0 && n == 2 {
                let holds = lhs
                    == if b == [0, 0] {
                        rat(1, 1)
                    } else {
                        Rational::zero()
                    };
                return Ok(EquationCheck {
                    lhs,
                    rhs,
                    case: EquationCase::InitialCondition,
                    holds,
                });
            }
            let holds = lhs == rhs;
            Ok(EquationCheck {
                lhs,
                rhs,
                case: EquationCase::Regular,
                holds,
            })
        }
        Equation::Dilaton => {
            let lhs = symbol(&with(1)?);
            let rhs = int(2 * g as i64 - 2 + n as i64) * symbol(&plain);
            Ok(EquationCheck {
                holds: lhs == rhs,
                lhs,
                rhs,
                case: EquationCase::Regular,
            })
        }
    }
}

/// Both equations for every `g <= max_g`, `n <= max_n`, every `k`, and
/// every insertion multiset for which the left side can be nonzero.
pub fn check_string_dilaton_range(max_g: u32, max_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("string and dilaton equations");
    for g in 0..=max_g {
        for k in 0..=g {
            for n in 0..=max_n {
                for (which, extra) in [(Equation::String, 0i64), (Equation::Dilaton, 1)] {
                    // dimension of the left side: sum b + extra + 2k = 4g - 3 + n + 1
                    let s = 4 * g as i64 - 2 + n as i64 - 2 * k as i64 - extra;
                    if s < 0 {
                        continue;
                    }
                    for b in padded_partitions(s as u32, n) {
                        let c = check_string_dilaton(g, k, b.parts(), which)?;
                        report.record(c.holds, || {
                            format!(
                                "{which:?} g={g} k={k} b={:?}: {} vs {}",
                                b.parts(),
                                c.lhs,
                                c.rhs
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let d = check_string_dilaton(1, 0, &[2], Equation::Dilaton).unwrap();
        assert_eq!((d.lhs.clone(), d.holds), (rat(1, 24), true));
        let e = check_string_dilaton(1, 1, &[], Equation::String).unwrap();
        assert_eq!(e.case, EquationCase::Exceptional);
        assert!(e.holds);
        assert_eq!(e.lhs, rat(1, 24));
        let base = check_string_dilaton(0, 0, &[0, 0], Equation::String).unwrap();
        assert_eq!(base.case, EquationCase::InitialCondition);
        let s = check_string_dilaton(0, 0, &[1, 0, 0], Equation::String).unwrap();
        assert_eq!(s.case, EquationCase::Regular);
        assert!(s.holds);
    }

    #[test]
    fn range_low_genus() {
        let r = check_string_dilaton_range(2, 3).unwrap();
        assert!(r.passed(), "{r}");
    }
}
