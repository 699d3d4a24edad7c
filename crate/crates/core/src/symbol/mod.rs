//! The symbol `<<tau_{b_1} ... tau_{b_n} Lambda_{2k}>>_g`, read off the
//! one-part polynomial as `(-1)^k [beta^b] H^g_{(d),beta} / (r! d)`.
//!
//! Two independent evaluations are provided. [`symbol_def`] expands the
//! one-part polynomial in the parts of `beta`. [`symbol_wittcor`] applies
//! the operator `Delta_{-1} = sum Q^(i+1) d/dQ^(i)` to products of the
//! series `Q^(i)(x) = sum_j q_j j^i x^j` and reads off a coefficient.

mod beta_poly;
mod closed;
mod qpoly;
mod string_dilaton;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use beta_poly::{one_part_polynomial, BetaPolynomial};
pub use closed::{
    closed_form_as_symbol, closed_form_symbol, family_members, lambda_top_constant,
    one_point_identity, top_psi_value, ClosedForm,
};
pub use qpoly::{q_operator_coefficient, q_operator_coefficient_multinomial, QPolynomial};
pub use string_dilaton::{
    check_string_dilaton, check_string_dilaton_range, Equation, EquationCase, EquationCheck,
};

use crate::error::{Error, Result};
use crate::partition::{aut_of_counts, padded_partitions};
use crate::rational::Rational;
use crate::series::{f_coeff, v_coeff};

/// Genus, `Lambda` index and insertion list of a symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicIndex {
    pub g: u32,
    pub k: u32,
    pub b: Vec<u32>,
}

impl PicIndex {
    pub fn new(g: u32, k: u32, b: Vec<u32>) -> Result<Self> {
        if k > g {
            return Err(Error::precondition(format!(
                "need k <= g, got k={k}, g={g}"
            )));
        }
        Ok(PicIndex { g, k, b })
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// `sum b_i + 2k = 4g - 3 + n`; the symbol vanishes otherwise.
    pub fn dimension_ok(&self) -> bool {
        let lhs: i64 = self.b.iter().map(|&x| x as i64).sum::<i64>() + 2 * self.k as i64;
        lhs == 4 * self.g as i64 - 3 + self.n() as i64
    }

    /// `(g, n)` in `(0,1)`, `(0,2)`, or no insertions at all.
    pub fn is_excluded(&self) -> bool {
        self.n() == 0 || (self.g == 0 && self.n() <= 2)
    }

    fn check_excluded(&self) -> Result<()> {
        if self.is_excluded() {
            return Err(Error::Excluded {
                g: self.g,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// `|Aut b|` for the insertion multiset.
    pub fn aut_b(&self) -> BigInt {
        let mut sorted = self.b.clone();
        sorted.sort_unstable();
        let mut counts = Vec::new();
        for chunk in sorted.chunk_by(|a, b| a == b) {
            counts.push(chunk.len() as u32);
        }
        aut_of_counts(counts)
    }
}

impl fmt::Debug for PicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<<")?;
        for b in &self.b {
            write!(f, "tau_{b} ")?;
        }
        write!(f, "Lambda_{}>>_{}", 2 * self.k, self.g)
    }
}

/// Every index with the given genus and `n` insertions that satisfies the
/// dimension constraint, with `b` weakly decreasing.
pub fn valid_indices(g: u32, n: usize) -> Vec<PicIndex> {
    let mut out = Vec::new();
    for k in 0..=g {
        let s = 4 * g as i64 - 3 + n as i64 - 2 * k as i64;
        if s < 0 {
            continue;
        }
        for b in padded_partitions(s as u32, n) {
            out.push(PicIndex {
                g,
                k,
                b: b.parts().to_vec(),
            });
        }
    }
    out
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(-1)^k [beta^b]` of the one-part polynomial; zero off the dimension
/// constraint.
pub fn symbol_def(idx: &PicIndex) -> Result<Rational> {
    idx.check_excluded()?;
    if !idx.dimension_ok() {
        return Ok(Rational::zero());
    }
    let poly = one_part_polynomial(idx.g, idx.n())?;
    Ok(sign(idx.k) * poly.coeff(&idx.b))
}

/// `|Aut b| f_{2k} (-1)^k sum_theta v_{2 theta} / |Aut theta| [prod Q^(b_i)] Delta^{2g-3+n} Q^(2 theta)`,
/// the sum running over `theta`, a partition of `g - k` padded with zeros
/// to exactly `n` parts.
pub fn symbol_wittcor(idx: &PicIndex) -> Result<Rational> {
    idx.check_excluded()?;
    if !idx.dimension_ok() {
        return Ok(Rational::zero());
    }
    let n = idx.n();
    let steps = (2 * idx.g as i64 - 3 + n as i64) as u32;
    let mut sum = Rational::zero();
    for theta in padded_partitions(idx.g - idx.k, n) {
        let doubled: Vec<u32> = theta.parts().iter().map(|&t| 2 * t).collect();
        let c = q_operator_coefficient(steps, &doubled, &idx.b);
        if c.is_zero() {
            continue;
        }
        let v: Rational = theta.parts().iter().map(|&t| v_coeff(2 * t)).product();
        sum += v * c / Rational::from_integer(theta.aut_order());
    }
    Ok(Rational::from_integer(idx.aut_b()) * f_coeff(2 * idx.k) * sign(idx.k) * sum)
}

/// The symbol with the zero conventions applied: excluded `(g, n)` and
/// indices off the dimension constraint give zero.
pub fn symbol(idx: &PicIndex) -> Rational {
    if idx.is_excluded() {
        return Rational::zero();
    }
    symbol_wittcor(idx).expect("not excluded")
}
