use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{check_sizes, r_value};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{binomial, factorial, int, pow_signed, rat, Rational};

/// `H^g_{(d),(d)} = d^{2g-2} sum_{j=0}^{d-1} ((2j-d+1)/2)^{2g}`.
pub fn diagonal(g: u32, d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::precondition("d must be at least 1"));
    }
    let sum: Rational = (0..d as i64)
        .map(|j| num_traits::pow(rat(2 * j - d as i64 + 1, 2), 2 * g as usize))
        .sum();
    Ok(pow_signed(&int(d), 2 * g as i64 - 2)? * sum)
}

/// Two-part closed form, valid when `alpha = (a1, a2)`, `beta = (b1, b2)`
/// with `a1 < a2`, `b1 < b2`, `a1 < b1` and all four parts distinct:
///
/// `(2 / (a1 a2 b1 b2)) sum_{i=1}^{a1} [(C(d+1,2) - d i)^{2g+2} - (C(d+1,2) - d i - a2 b1)^{2g+2}]`.
pub fn two_two(g: u32, alpha: [u32; 2], beta: [u32; 2]) -> Result<Rational> {
    let [a1, a2] = alpha;
    let [b1, b2] = beta;
    let distinct: BTreeSet<u32> = [a1, a2, b1, b2].into_iter().collect();
    if !(a1 < a2 && b1 < b2 && a1 < b1 && distinct.len() == 4) || a1 == 0 {
        return Err(Error::precondition(format!(
            "two-part formula needs a1<a2, b1<b2, a1<b1 and distinct parts; got ({a1},{a2}),({b1},{b2})"
        )));
    }
    if a1 + a2 != b1 + b2 {
        return Err(Error::SizeMismatch {
            alpha: a1 + a2,
            beta: b1 + b2,
        });
    }
    let d = (a1 + a2) as i64;
    let top = binomial(d + 1, 2);
    let e = 2 * g as usize + 2;
    let mut sum = BigInt::zero();
    for i in 1..=a1 as i64 {
        let x = &top - d * i;
        let y = &x - (a2 as i64) * (b1 as i64);
        sum += num_traits::pow(x, e) - num_traits::pow(y, e);
    }
    let den = BigInt::from(a1) * a2 * b1 * b2;
    Ok(Rational::new(sum * 2, den))
}

/// [`two_two`] for partitions in any orientation: the pair holding the
/// smallest part plays `alpha` (the numbers are symmetric under swapping).
pub fn two_two_oriented(g: u32, alpha: &Partition, beta: &Partition) -> Result<Rational> {
    check_sizes(alpha, beta)?;
    if alpha.len() != 2 || beta.len() != 2 {
        return Err(Error::precondition(
            "two-part formula needs two parts on each side",
        ));
    }
    let asc = |p: &Partition| [p.parts()[1], p.parts()[0]];
    let (a, b) = (asc(alpha), asc(beta));
    if a[0] < b[0] {
        two_two(g, a, b)
    } else {
        two_two(g, b, a)
    }
}

/// Genus-0 closed form for `l(alpha) in {2, 3}`: a sum over decompositions
/// `rho ∪ gamma_1 ∪ ... ∪ gamma_m = beta` with `rho` nonempty and
/// `|gamma_j| < alpha_j`.
pub fn genus0_mparts(alpha: &Partition, beta: &Partition) -> Result<Rational> {
    check_sizes(alpha, beta)?;
    let m = alpha.len();
    if m != 2 && m != 3 {
        return Err(Error::precondition(format!(
            "closed genus-0 form needs l(alpha) in {{2,3}}, got {m}"
        )));
    }
    let r = r_value(0, alpha, beta)?;
    let d = alpha.size();

    let mut total = Rational::zero();
    decompose(beta, alpha.parts(), &mut Vec::new(), &mut |rho, gammas| {
        if rho.is_empty() {
            return;
        }
        let mut term = Rational::from_integer(factorial(rho.len() as u64) * rho.parts_product())
            / Rational::from_integer(rho.aut_order());
        for (gamma, &a) in gammas.iter().zip(alpha.parts()) {
            let a_r = int(a);
            term *= (int(a) - int(gamma.size()))
                * pow_signed(&a_r, gamma.len() as i64 - 1).expect("a > 0")
                / Rational::from_integer(gamma.aut_order());
        }
        total += term;
    });

    let mut scale = Rational::from_integer(beta.aut_order() * factorial(r as u64));
    if m == 2 {
        scale /= int(d);
    }
    Ok(scale * total)
}

/// Calls `f(rho, [gamma_1..gamma_m])` for every assignment of sub-multisets
/// of `rest` to the `gamma_j` with `|gamma_j| < bounds[j]`.
fn decompose(
    rest: &Partition,
    bounds: &[u32],
    chosen: &mut Vec<Partition>,
    f: &mut impl FnMut(&Partition, &[Partition]),
) {
    if chosen.len() == bounds.len() {
        f(rest, chosen);
        return;
    }
    let bound = bounds[chosen.len()];
    for (gamma, remaining) in rest.splits() {
        if gamma.size() >= bound {
            continue;
        }
        chosen.push(gamma);
        decompose(&remaining, bounds, chosen, f);
        chosen.pop();
    }
}
