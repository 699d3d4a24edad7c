use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::engine::{exp_coefficient, log_coefficient, Engine};
use super::HurwitzKey;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{self, Rational};

/// Truncated coefficient array of the connected or disconnected generating
/// series: every key with `1 <= |alpha| <= d_max` and `r <= r_max` is
/// present, zeros included (keys of the wrong parity are implicit zeros). Values carry the `1/(r! |Aut alpha| |Aut beta|)`
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    d_max: u32,
    r_max: u32,
    connected: bool,
    entries: BTreeMap<HurwitzKey, Rational>,
}

/// One row of the JSON export.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableEntry {
    pub alpha: String,
    pub beta: String,
    pub r: u32,
    pub coeff: String,
}

fn all_keys(d_max: u32, r_max: u32) -> Vec<HurwitzKey> {
    let mut keys = Vec::new();
    for d in 1..=d_max {
        let ps = partitions_of(d);
        for a in &ps {
            for b in &ps {
                for r in 0..=r_max {
                    let key = HurwitzKey {
                        alpha: a.clone(),
                        beta: b.clone(),
                        r,
                    };
                    if key.parity_ok() {
                        keys.push(key);
                    }
                }
            }
        }
    }
    keys
}

/// The disconnected table, built from the character formula.
pub fn build_series_table(d_max: u32, r_max: u32) -> Result<SeriesTable> {
    SeriesTable::build_with(Engine::global(), d_max, r_max)
}

impl SeriesTable {
    pub fn build_with(engine: &Engine, d_max: u32, r_max: u32) -> Result<SeriesTable> {
        if d_max == 0 {
            return Err(Error::precondition("d_max must be at least 1"));
        }
        let entries = all_keys(d_max, r_max)
            .into_par_iter()
            .map(|k| {
                let v = engine.disconnected_coeff(&k);
                (k, v)
            })
            .collect();
        Ok(SeriesTable {
            d_max,
            r_max,
            connected: false,
            entries,
        })
    }

    pub fn d_max(&self) -> u32 {
        self.d_max
    }

    pub fn r_max(&self) -> u32 {
        self.r_max
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HurwitzKey, &Rational)> {
        self.entries.iter()
    }

    pub fn contains(&self, key: &HurwitzKey) -> bool {
        key.degree() >= 1 && key.degree() <= self.d_max && key.r <= self.r_max
    }

    /// Stored (normalized) coefficient; zero for empty-degree keys.
    pub fn coeff(&self, key: &HurwitzKey) -> Result<Rational> {
        if !self.contains(key) {
            return Err(Error::OutOfBounds(format!("{key:?}")));
        }
        Ok(self.entries.get(key).cloned().unwrap_or_default())
    }

    /// Replaces a coefficient. Used to perturb tables in sensitivity checks.
    pub fn set_coeff(&mut self, key: &HurwitzKey, value: Rational) -> Result<()> {
        if !self.contains(key) {
            return Err(Error::OutOfBounds(format!("{key:?}")));
        }
        self.entries.insert(key.clone(), value);
        Ok(())
    }

    /// The Hurwitz number (stored coefficient times `r! |Aut| |Aut|`).
    pub fn value(&self, key: &HurwitzKey) -> Result<Rational> {
        Ok(self.coeff(key)? * Rational::from_integer(key.weight()))
    }

    /// Connected `H^g_{alpha,beta}` from a connected table.
    pub fn connected_value(&self, g: i64, alpha: &Partition, beta: &Partition) -> Result<Rational> {
        if !self.connected {
            return Err(Error::precondition("table holds disconnected coefficients"));
        }
        match HurwitzKey::from_genus(g, alpha, beta)? {
            None => Ok(Rational::default()),
            Some(k) => self.value(&k),
        }
    }

    fn transform(&self, connected: bool, log: bool) -> SeriesTable {
        let mut out: BTreeMap<HurwitzKey, Rational> = BTreeMap::new();
        // keys of lower degree are complete before any key of degree d is visited
        for d in 1..=self.d_max {
            let keys: Vec<&HurwitzKey> = self.entries.keys().filter(|k| k.degree() == d).collect();
            let computed: Vec<(HurwitzKey, Rational)> = keys
                .par_iter()
                .map(|k| {
                    let mine =
                        |key: &HurwitzKey| self.entries.get(key).cloned().unwrap_or_default();
                    let theirs = |key: &HurwitzKey| out.get(key).cloned().unwrap_or_default();
                    let v = if log {
                        log_coefficient(k, mine, theirs)
                    } else {
                        exp_coefficient(k, mine, theirs)
                    };
                    ((*k).clone(), v)
                })
                .collect();
            out.extend(computed);
        }
        SeriesTable {
            d_max: self.d_max,
            r_max: self.r_max,
            connected,
            entries: out,
        }
    }

    /// `log` of a disconnected table: the connected table.
    pub fn log(&self) -> Result<SeriesTable> {
        if self.connected {
            return Err(Error::precondition("log expects a disconnected table"));
        }
        Ok(self.transform(true, true))
    }

    /// `exp` of a connected table: the disconnected table.
    pub fn exp(&self) -> Result<SeriesTable> {
        if !self.connected {
            return Err(Error::precondition("exp expects a connected table"));
        }
        Ok(self.transform(false, false))
    }

    pub fn to_entries(&self) -> Vec<TableEntry> {
        self.entries
            .iter()
            .map(|(k, v)| TableEntry {
                alpha: k.alpha.to_string(),
                beta: k.beta.to_string(),
                r: k.r,
                coeff: rational::to_wire(v),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_entries()).expect("table entries serialize")
    }

    /// Reads an exported table. Bounds are inferred; the table must be
    /// closed under them.
    pub fn from_json(text: &str, connected: bool) -> Result<SeriesTable> {
        let rows: Vec<TableEntry> = serde_json::from_str(text)?;
        let mut entries = BTreeMap::new();
        let (mut d_max, mut r_max) = (0, 0);
        for row in rows {
            let key = HurwitzKey::new(row.alpha.parse()?, row.beta.parse()?, row.r)?;
            d_max = d_max.max(key.degree());
            r_max = r_max.max(key.r);
            entries.insert(key, rational::parse(&row.coeff)?);
        }
        for k in all_keys(d_max, r_max) {
            if !entries.contains_key(&k) {
                return Err(Error::Parse(format!("table missing key {k:?}")));
            }
        }
        Ok(SeriesTable {
            d_max,
            r_max,
            connected,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn key(a: &str, b: &str, r: u32) -> HurwitzKey {
        HurwitzKey {
            alpha: a.parse().unwrap(),
            beta: b.parse().unwrap(),
            r,
        }
    }

    #[test]
    fn spot_entries() {
        let t = build_series_table(3, 4).unwrap();
        assert_eq!(t.coeff(&key("3", "3", 0)).unwrap(), rat(1, 3));
        assert_eq!(t.coeff(&key("1,1", "1,1", 0)).unwrap(), rat(1, 2));
        assert_eq!(t.coeff(&key("2", "2", 1)).unwrap(), rat(0, 1));
        assert!(t.coeff(&key("2,2", "2,2", 0)).is_err());
    }

    #[test]
    fn table_log_matches_engine() {
        let conn = build_series_table(4, 4).unwrap().log().unwrap();
        for (k, v) in conn.iter() {
            assert_eq!(v, &Engine::global().connected_coeff(k), "{k:?}");
        }
        let g0 = conn
            .connected_value(0, &"1,1".parse().unwrap(), &"1,1".parse().unwrap())
            .unwrap();
        assert_eq!(g0, rat(2, 1));
    }

    #[test]
    fn json_round_trip() {
        let t = build_series_table(3, 2).unwrap();
        let back = SeriesTable::from_json(&t.to_json(), false).unwrap();
        assert_eq!(back, t);
    }
}
