//! Irreducible characters of the symmetric group via the
//! Murnaghan–Nakayama rule, and the content statistic `eta`.
//!
//! Characters are computed on partition pairs. A partition is encoded by its
//! beta-set (first-column hook lengths); removing a border strip of length
//! `k` slides one bead down by `k` onto an empty position, and the sign is
//! the parity of the beads jumped over. The largest part of the cycle type
//! is stripped first, so a cache entry for `(lambda, mu)` is reused by every
//! query whose cycle type ends in `mu`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::Rational;
use crate::series::UnivariateSeries;

pub const CACHE_VERSION: u32 = 1;

/// Memo table `(lambda, mu) -> chi^lambda_mu`.
///
/// Readers never block each other. Two threads may race to compute the same
/// entry; both insert the same value.
#[derive(Default)]
pub struct CharacterCache {
    map: RwLock<HashMap<(Partition, Partition), i64>>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    d: u32,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    lambda: Partition,
    mu: Partition,
    chi: i64,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache shared by the free functions of this module.
    pub fn global() -> &'static CharacterCache {
        static GLOBAL: OnceLock<CharacterCache> = OnceLock::new();
        GLOBAL.get_or_init(CharacterCache::new)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("character cache").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `chi^lambda_mu`.
    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch {
                alpha: lambda.size(),
                beta: mu.size(),
            });
        }
        Ok(self.mn(lambda, mu))
    }

    fn mn(&self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        // (d) and (1^d) have closed forms; they are also the most common queries
        if lambda.len() == 1 {
            return 1;
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.map.read().expect("character cache").get(&key) {
            return v;
        }
        let k = mu.largest().expect("nonempty") as usize;
        let rest = mu.remove_part(k as u32).expect("largest part present");
        let beads = beta_set(lambda);
        let mut total = 0i64;
        for (idx, &x) in beads.iter().enumerate() {
            if x < k || beads.contains(&(x - k)) {
                continue;
            }
            let target = x - k;
            let jumped = beads.iter().filter(|&&y| y > target && y < x).count();
            let mut moved = beads.clone();
            moved[idx] = target;
            let smaller = from_beta_set(&moved);
            let chi = self.mn(&smaller, &rest);
            if jumped % 2 == 0 {
                total += chi;
            } else {
                total -= chi;
            }
        }
        self.map
            .write()
            .expect("character cache")
            .insert(key, total);
        total
    }

    /// Writes all cached entries with `|lambda| = d` to `path`.
    pub fn save(&self, path: &Path, d: u32) -> Result<()> {
        let map = self.map.read().expect("character cache");
        let mut entries: Vec<CacheEntry> = map
            .iter()
            .filter(|((l, _), _)| l.size() == d)
            .map(|((l, m), &chi)| CacheEntry {
                lambda: l.clone(),
                mu: m.clone(),
                chi,
            })
            .collect();
        entries.sort_by(|a, b| (&a.lambda, &a.mu).cmp(&(&b.lambda, &b.mu)));
        let file = CacheFile {
            version: CACHE_VERSION,
            d,
            entries,
        };
        std::fs::write(path, serde_json::to_string(&file)?)?;
        Ok(())
    }

    /// Loads a cache file. Files from another version are ignored and
    /// reported as `Ok(false)`.
    pub fn load(&self, path: &Path) -> Result<bool> {
        let text = std::fs::read_to_string(path)?;
        let file: CacheFile = serde_json::from_str(&text)?;
        if file.version != CACHE_VERSION {
            return Ok(false);
        }
        let mut map = self.map.write().expect("character cache");
        for e in file.entries {
            if e.lambda.size() != file.d || e.mu.size() != file.d {
                return Err(Error::Parse(format!(
                    "cache entry ({}, {}) does not match d = {}",
                    e.lambda, e.mu, file.d
                )));
            }
            map.insert((e.lambda, e.mu), e.chi);
        }
        Ok(true)
    }

    pub fn file_for(dir: &Path, d: u32) -> PathBuf {
        dir.join(format!("characters-v{CACHE_VERSION}-d{d}.json"))
    }

    /// Saves one file per degree present in the cache.
    pub fn save_dir(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        let degrees: std::collections::BTreeSet<u32> = self
            .map
            .read()
            .expect("character cache")
            .keys()
            .map(|(l, _)| l.size())
            .collect();
        for d in degrees {
            self.save(&Self::file_for(dir, d), d)?;
        }
        Ok(())
    }

    /// Loads every current-version cache file found in `dir`.
    pub fn load_dir(&self, dir: &Path) -> Result<usize> {
        let mut loaded = 0;
        let Ok(rd) = std::fs::read_dir(dir) else {
            return Ok(0);
        };
        let prefix = format!("characters-v{CACHE_VERSION}-d");
        for entry in rd {
            let path = entry?.path();
            let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("");
            if name.starts_with(&prefix) && name.ends_with(".json") && self.load(&path)? {
                loaded += 1;
            }
        }
        Ok(loaded)
    }
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as usize + (l - 1 - i))
        .collect()
}

fn from_beta_set(beads: &[usize]) -> Partition {
    let mut b = beads.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    let parts: Vec<u32> = b
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - (l - 1 - i)) as u32)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta-set decodes to a partition")
}

/// `chi^lambda_mu` through the global cache.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    CharacterCache::global().character(lambda, mu)
}

/// `sum_i C(lambda_i, 2) - sum_i C(lambda~_i, 2)`.
pub fn eta(lambda: &Partition) -> i64 {
    let half = |p: &Partition| -> i64 {
        p.parts()
            .iter()
            .map(|&x| x as i64 * (x as i64 - 1) / 2)
            .sum()
    };
    half(lambda) - half(&lambda.conjugate())
}

/// `eta` recomputed as the central character of the transposition class,
/// `|C_(2,1^{d-2})| chi^lambda_(2,1^{d-2}) / chi^lambda_(1^d)`.
pub fn eta_via_characters(lambda: &Partition) -> Result<Rational> {
    let d = lambda.size();
    if d < 2 {
        return Err(Error::precondition("eta needs |lambda| >= 2"));
    }
    let mut t = vec![2];
    t.extend(std::iter::repeat_n(1, d as usize - 2));
    let transposition = Partition::new(t)?;
    let num = transposition.conjugacy_class_size() * character(lambda, &transposition)?;
    let den = BigInt::from(character(lambda, &Partition::ones(d))?);
    Ok(Rational::new(num, den))
}

/// Coefficients of `prod_i (1 - (-y)^i)^{c_i}` through `y^{d-1}`. Entry `k`
/// is `chi^{(d-k,1^k)}_beta`.
pub fn hook_character_polynomial(beta: &Partition) -> Result<Vec<i64>> {
    let d = beta.size() as usize;
    if d == 0 {
        return Err(Error::precondition("hook characters need |beta| >= 1"));
    }
    let order = d - 1;
    let mut acc = UnivariateSeries::one(order);
    for (i, c) in beta.hook_content_counts() {
        if c == 0 {
            continue;
        }
        let i = i as usize;
        let factor = UnivariateSeries::from_fn(order, |k| {
            if k == 0 {
                Rational::from_integer(1.into())
            } else if k == i {
                // -(-1)^i
                Rational::from_integer(if i.is_multiple_of(2) {
                    (-1).into()
                } else {
                    1.into()
                })
            } else {
                Rational::from_integer(0.into())
            }
        });
        acc = &acc * &factor.powi(c)?;
    }
    acc.coeffs()
        .iter()
        .map(|q| {
            if !q.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "non-integral hook character {q}"
                )));
            }
            q.to_integer()
                .to_i64()
                .ok_or_else(|| Error::Inconsistent("hook character overflow".into()))
        })
        .collect()
}

/// The full character table of `S_d`, rows and columns in
/// reverse-lexicographic order.
pub fn character_table(d: u32) -> Vec<Vec<i64>> {
    let parts = partitions_of(d);
    parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .map(|m| character(l, m).expect("same size"))
                .collect()
        })
        .collect()
}
