use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::{check_sizes, r_value};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{factorial, Rational};

/// Limits for the enumeration.
#[derive(Clone, Copy, Debug)]
pub struct BruteOptions {
    pub max_degree: u32,
    /// Upper bound on `C(d,2)^r`, the number of transposition sequences.
    pub work_limit: u128,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            max_degree: 6,
            work_limit: 100_000_000,
        }
    }
}

/// Counts of `tau_r ... tau_1 sigma` for one fixed `sigma` of cycle type
/// `beta`, keyed by the product's cycle type and whether `<sigma, tau_i>`
/// is transitive.
#[derive(Clone, Debug, Default)]
pub struct Census {
    pub counts: HashMap<(Partition, bool), u64>,
}

impl Census {
    pub fn count(&self, alpha: &Partition, connected: bool) -> u64 {
        let t = self
            .counts
            .get(&(alpha.clone(), true))
            .copied()
            .unwrap_or(0);
        if connected {
            t
        } else {
            t + self
                .counts
                .get(&(alpha.clone(), false))
                .copied()
                .unwrap_or(0)
        }
    }
}

fn census_cache() -> &'static Mutex<HashMap<(Partition, u32), Arc<Census>>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, u32), Arc<Census>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Enumerates every sequence of `r` transpositions applied to a fixed
/// representative of `C_beta`.
pub fn factorization_census(beta: &Partition, r: u32, opts: BruteOptions) -> Result<Arc<Census>> {
    let d = beta.size();
    if d > opts.max_degree {
        return Err(Error::precondition(format!(
            "brute force limited to d <= {}, got {d}",
            opts.max_degree
        )));
    }
    let n_transpositions = (d as u128) * (d as u128).saturating_sub(1) / 2;
    let needed = n_transpositions.checked_pow(r).unwrap_or(u128::MAX);
    if needed > opts.work_limit {
        return Err(Error::Resource {
            needed,
            limit: opts.work_limit,
        });
    }
    let key = (beta.clone(), r);
    if let Some(c) = census_cache().lock().expect("census cache").get(&key) {
        return Ok(c.clone());
    }

    let d = d as usize;
    // sigma: consecutive cycles of lengths beta_1, beta_2, ...
    let mut perm = vec![0usize; d];
    let mut comp = vec![0usize; d];
    let mut start = 0;
    for (c, &len) in beta.parts().iter().enumerate() {
        let len = len as usize;
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
            comp[start + i] = c;
        }
        start += len;
    }
    let mut inv = vec![0usize; d];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let transpositions: Vec<(usize, usize)> = (0..d)
        .flat_map(|a| (a + 1..d).map(move |b| (a, b)))
        .collect();

    let mut census = Census::default();
    let mut state = State {
        perm,
        inv,
        transpositions: &transpositions,
        census: &mut census,
    };
    state.dfs(r, &comp);
    let census = Arc::new(census);
    census_cache()
        .lock()
        .expect("census cache")
        .insert(key, census.clone());
    Ok(census)
}

struct State<'a> {
    perm: Vec<usize>,
    inv: Vec<usize>,
    transpositions: &'a [(usize, usize)],
    census: &'a mut Census,
}

impl State<'_> {
    fn dfs(&mut self, remaining: u32, comp: &[usize]) {
        if remaining == 0 {
            let cycle_type = cycle_type(&self.perm);
            let first = comp[0];
            let transitive = comp.iter().all(|&c| c == first);
            *self
                .census
                .counts
                .entry((cycle_type, transitive))
                .or_insert(0) += 1;
            return;
        }
        for &(a, b) in self.transpositions {
            // left-multiply by (a b): swap the images a and b
            let (ia, ib) = (self.inv[a], self.inv[b]);
            self.perm[ia] = b;
            self.perm[ib] = a;
            self.inv.swap(a, b);

            let (ca, cb) = (comp[a], comp[b]);
            if ca == cb {
                self.dfs(remaining - 1, comp);
            } else {
                let merged: Vec<usize> =
                    comp.iter().map(|&c| if c == cb { ca } else { c }).collect();
                self.dfs(remaining - 1, &merged);
            }

            self.perm[ia] = a;
            self.perm[ib] = b;
            self.inv.swap(a, b);
        }
    }
}

fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts).expect("cycle lengths are positive")
}

/// Canonical `H^g_{alpha,beta}` (or the disconnected count) by enumeration.
pub fn brute_force(
    g: i64,
    alpha: &Partition,
    beta: &Partition,
    connected: bool,
) -> Result<Rational> {
    brute_force_with(g, alpha, beta, connected, BruteOptions::default())
}

pub fn brute_force_with(
    g: i64,
    alpha: &Partition,
    beta: &Partition,
    connected: bool,
    opts: BruteOptions,
) -> Result<Rational> {
    check_sizes(alpha, beta)?;
    let r = r_value(g, alpha, beta)?;
    if r < 0 {
        return Err(Error::precondition(format!("r = {r} is negative")));
    }
    let census = factorization_census(beta, r as u32, opts)?;
    let tuples = BigInt::from(census.count(alpha, connected)) * beta.conjugacy_class_size();
    let d = alpha.size() as u64;
    Ok(Rational::new(
        tuples * alpha.aut_order() * beta.aut_order(),
        factorial(d),
    ))
}
