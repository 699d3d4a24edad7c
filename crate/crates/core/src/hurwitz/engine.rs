use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_sizes, HurwitzKey};
use crate::characters::{eta, CharacterCache};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{int, Rational};

/// Canonical possibly-disconnected count via the character sum
/// `sum_lambda eta(lambda)^r chi^lambda_alpha chi^lambda_beta / (prod alpha_i prod beta_j)`.
pub fn disconnected_character(alpha: &Partition, beta: &Partition, r: u32) -> Result<Rational> {
    Engine::global().disconnected(alpha, beta, r)
}

/// Canonical connected `H^g_{alpha,beta}` through the logarithm of the
/// disconnected series. Zero when the Riemann–Hurwitz count is negative.
pub fn connected(g: i64, alpha: &Partition, beta: &Partition) -> Result<Rational> {
    Engine::global().connected(g, alpha, beta)
}

/// Character-based evaluator with memoized series coefficients.
///
/// Coefficients are stored with the `1/(r! |Aut alpha| |Aut beta|)`
/// normalization, in which the exponential relation between connected and
/// disconnected series is a plain product of monomials with additive `r`.
pub struct Engine {
    chars: &'static CharacterCache,
    disconnected: RwLock<HashMap<HurwitzKey, Rational>>,
    connected: RwLock<HashMap<HurwitzKey, Rational>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            chars: CharacterCache::global(),
            disconnected: Default::default(),
            connected: Default::default(),
        }
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::new)
    }

    pub fn disconnected(&self, alpha: &Partition, beta: &Partition, r: u32) -> Result<Rational> {
        check_sizes(alpha, beta)?;
        if alpha.size() == 0 {
            return Err(Error::precondition("degree must be at least 1"));
        }
        let key = HurwitzKey {
            alpha: alpha.clone(),
            beta: beta.clone(),
            r,
        };
        Ok(self.disconnected_coeff(&key) * Rational::from_integer(key.weight()))
    }

    pub fn connected(&self, g: i64, alpha: &Partition, beta: &Partition) -> Result<Rational> {
        check_sizes(alpha, beta)?;
        if alpha.size() == 0 {
            return Err(Error::precondition("degree must be at least 1"));
        }
        let Some(key) = HurwitzKey::from_genus(g, alpha, beta)? else {
            return Ok(Rational::zero());
        };
        Ok(self.connected_coeff(&key) * Rational::from_integer(key.weight()))
    }

    /// `[p_alpha q_beta t^r]` of the disconnected series.
    pub fn disconnected_coeff(&self, key: &HurwitzKey) -> Rational {
        if !key.parity_ok() {
            return Rational::zero();
        }
        if let Some(v) = self.disconnected.read().expect("engine memo").get(key) {
            return v.clone();
        }
        let d = key.degree();
        let mut sum = BigInt::zero();
        for lambda in partitions_of(d) {
            let ca = self
                .chars
                .character(&lambda, &key.alpha)
                .expect("same size");
            if ca == 0 {
                continue;
            }
            let cb = self.chars.character(&lambda, &key.beta).expect("same size");
            if cb == 0 {
                continue;
            }
            let e = num_traits::pow(BigInt::from(eta(&lambda)), key.r as usize);
            sum += e * ca * cb;
        }
        let canonical = Rational::new(sum, key.alpha.parts_product() * key.beta.parts_product());
        let coeff = canonical / Rational::from_integer(key.weight());
        self.disconnected
            .write()
            .expect("engine memo")
            .insert(key.clone(), coeff.clone());
        coeff
    }

    /// `[p_alpha q_beta t^r]` of the connected series.
    pub fn connected_coeff(&self, key: &HurwitzKey) -> Rational {
        if !key.parity_ok() {
            return Rational::zero();
        }
        if let Some(v) = self.connected.read().expect("engine memo").get(key) {
            return v.clone();
        }
        let v = log_coefficient(
            key,
            |k| self.disconnected_coeff(k),
            |k| self.connected_coeff(k),
        );
        self.connected
            .write()
            .expect("engine memo")
            .insert(key.clone(), v.clone());
        v
    }
}

/// Pairs of sub-keys `(first, second)` whose monomials multiply to `key`,
/// with `first` nonempty and of degree below `key`'s.
pub(crate) fn proper_splits(key: &HurwitzKey) -> Vec<(HurwitzKey, HurwitzKey)> {
    let mut out = Vec::new();
    let d = key.degree();
    let beta_splits = key.beta.splits();
    for (a1, a2) in key.alpha.splits() {
        let k = a1.size();
        if k == 0 || k == d {
            continue;
        }
        for (b1, b2) in beta_splits.iter().filter(|(b1, _)| b1.size() == k) {
            for r1 in 0..=key.r {
                let first = HurwitzKey {
                    alpha: a1.clone(),
                    beta: b1.clone(),
                    r: r1,
                };
                let second = HurwitzKey {
                    alpha: a2.clone(),
                    beta: b2.clone(),
                    r: key.r - r1,
                };
                if first.parity_ok() && second.parity_ok() {
                    out.push((first, second));
                }
            }
        }
    }
    out
}

/// `G = log F`, one coefficient, from `d G_d = d F_d - sum_{k<d} k G_k F_{d-k}`.
pub(crate) fn log_coefficient(
    key: &HurwitzKey,
    f: impl Fn(&HurwitzKey) -> Rational,
    g: impl Fn(&HurwitzKey) -> Rational,
) -> Rational {
    let d = key.degree();
    let mut acc = f(key);
    let mut correction = Rational::zero();
    for (first, second) in proper_splits(key) {
        let fs = f(&second);
        if fs.is_zero() {
            continue;
        }
        let gf = g(&first);
        if gf.is_zero() {
            continue;
        }
        correction += int(first.degree()) * gf * fs;
    }
    acc -= correction / int(d);
    acc
}

/// `F = exp G`, one coefficient, from `d F_d = d G_d + sum_{k<d} k G_k F_{d-k}`.
pub(crate) fn exp_coefficient(
    key: &HurwitzKey,
    g: impl Fn(&HurwitzKey) -> Rational,
    f: impl Fn(&HurwitzKey) -> Rational,
) -> Rational {
    let d = key.degree();
    let mut acc = g(key);
    let mut extra = Rational::zero();
    for (first, second) in proper_splits(key) {
        let fs = f(&second);
        if fs.is_zero() {
            continue;
        }
        let gf = g(&first);
        if gf.is_zero() {
            continue;
        }
        extra += int(first.degree()) * gf * fs;
    }
    acc += extra / int(d);
    acc
}
