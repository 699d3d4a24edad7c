//! Double Hurwitz numbers `H^g_{alpha,beta}` by four independent routes.
//!
//! The canonical value is the Hurwitz-axiom count: `|Aut alpha| |Aut beta| / d!`
//! times the number of tuples `(sigma, tau_1, ..., tau_r, gamma)` with
//! `sigma` of cycle type `beta`, transpositions `tau_i`, and
//! `gamma = tau_r ... tau_1 sigma` of cycle type `alpha` (transitive for the
//! connected count). [`Normalization::AutDivided`] divides that by
//! `|Aut alpha| |Aut beta|`.
//!
//! * [`brute_force`]: direct enumeration of factorizations.
//! * [`disconnected_character`] and [`connected`]: the character sum for the
//!   possibly disconnected count, then the logarithm of the generating series.
//! * [`one_part`], [`one_part_closed`], [`diagonal`]: closed forms for `alpha = (d)`.
//! * [`two_two`], [`genus0_mparts`]: closed forms for two and three parts.

mod brute;
mod engine;
mod formulas;
mod join_cut;
mod one_part;
mod table;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use brute::{brute_force, brute_force_with, factorization_census, BruteOptions, Census};
pub use engine::{connected, disconnected_character, Engine};
pub use formulas::{diagonal, genus0_mparts, two_two, two_two_oriented};
pub use join_cut::{verify_join_cut, JoinCutReport};
pub use one_part::{one_part, one_part_closed, one_part_sinh_form, one_part_xi_form};
pub use table::{build_series_table, SeriesTable, TableEntry};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{factorial, Rational};

/// Which of the two normalizations a value is reported in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    /// The Hurwitz-axiom count, `|Aut alpha||Aut beta|/d!` times tuples.
    Canonical,
    /// The canonical value divided by `|Aut alpha||Aut beta|`.
    AutDivided,
}

impl Normalization {
    pub fn apply(self, canonical: Rational, alpha: &Partition, beta: &Partition) -> Rational {
        match self {
            Normalization::Canonical => canonical,
            Normalization::AutDivided => {
                canonical / Rational::from_integer(alpha.aut_order() * beta.aut_order())
            }
        }
    }
}

/// `r = -2 + 2g + l(alpha) + l(beta)`.
pub fn r_value(g: i64, alpha: &Partition, beta: &Partition) -> Result<i64> {
    check_sizes(alpha, beta)?;
    Ok(-2 + 2 * g + alpha.len() as i64 + beta.len() as i64)
}

pub(crate) fn check_sizes(alpha: &Partition, beta: &Partition) -> Result<()> {
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            alpha: alpha.size(),
            beta: beta.size(),
        });
    }
    Ok(())
}

/// Index `(alpha, beta, r)` of a generating-series coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HurwitzKey {
    pub alpha: Partition,
    pub beta: Partition,
    pub r: u32,
}

impl HurwitzKey {
    pub fn new(alpha: Partition, beta: Partition, r: u32) -> Result<Self> {
        check_sizes(&alpha, &beta)?;
        if !(r as usize + alpha.len() + beta.len()).is_multiple_of(2) {
            return Err(Error::precondition(format!(
                "r = {r} has the wrong parity for l(alpha) + l(beta) = {}",
                alpha.len() + beta.len()
            )));
        }
        Ok(HurwitzKey { alpha, beta, r })
    }

    /// `None` when the Riemann–Hurwitz count is negative.
    pub fn from_genus(g: i64, alpha: &Partition, beta: &Partition) -> Result<Option<Self>> {
        let r = r_value(g, alpha, beta)?;
        if r < 0 {
            return Ok(None);
        }
        Ok(Some(HurwitzKey {
            alpha: alpha.clone(),
            beta: beta.clone(),
            r: r as u32,
        }))
    }

    pub fn degree(&self) -> u32 {
        self.alpha.size()
    }

    /// `(r - l(alpha) - l(beta) + 2) / 2`; negative for some disconnected keys.
    pub fn genus(&self) -> i64 {
        (self.r as i64 - self.alpha.len() as i64 - self.beta.len() as i64 + 2) / 2
    }

    /// `r! |Aut alpha| |Aut beta|`, the divisor between a Hurwitz number and
    /// its generating-series coefficient.
    pub fn weight(&self) -> BigInt {
        factorial(self.r as u64) * self.alpha.aut_order() * self.beta.aut_order()
    }

    pub(crate) fn parity_ok(&self) -> bool {
        (self.r as usize + self.alpha.len() + self.beta.len()).is_multiple_of(2)
    }
}

impl fmt::Debug for HurwitzKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({}), ({}), r={}]", self.alpha, self.beta, self.r)
    }
}
