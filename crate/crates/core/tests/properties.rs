use double_hurwitz::characters::{character, character_table, eta, hook_character_polynomial};
use double_hurwitz::hurwitz::{connected, disconnected_character, r_value};
use double_hurwitz::lagrange::verify_w_identities;
use double_hurwitz::polynomiality::{fit_degree, ray_samples, Method};
use double_hurwitz::rational::{factorial, int, rat};
use double_hurwitz::series::{f_coeff, UnivariateSeries};
use double_hurwitz::symbol::{symbol_def, PicIndex};
use double_hurwitz::{partitions_of, Partition, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_part, 1..=max_len).prop_map(|v| Partition::new(v).unwrap())
}

/// Two partitions of the same size, the second drawn from all partitions.
fn same_size_pair(max_d: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_d)
        .prop_flat_map(|d| {
            let n = partitions_of(d).len();
            (Just(d), 0..n, 0..n)
        })
        .prop_map(|(d, i, j)| {
            let all = partitions_of(d);
            (all[i].clone(), all[j].clone())
        })
}

proptest! {
    #[test]
    fn multiplicity_and_content_sums(beta in partition(9, 7)) {
        let n: u32 = beta.multiplicities().values().sum();
        let weighted: u32 = beta.multiplicities().iter().map(|(i, m)| i * m).sum();
        prop_assert_eq!(n as usize, beta.len());
        prop_assert_eq!(weighted, beta.size());
        let c = beta.hook_content_counts();
        prop_assert_eq!(c.values().sum::<i64>(), beta.len() as i64 - 1);
        prop_assert_eq!(c.iter().map(|(h, k)| *h as i64 * k).sum::<i64>(), beta.size() as i64 - 1);
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition(8, 8)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(eta(&lambda.conjugate()), -eta(&lambda));
    }

    #[test]
    fn hook_characters((_, beta) in same_size_pair(8)) {
        let d = beta.size();
        let poly = hook_character_polynomial(&beta).unwrap();
        for (k, value) in poly.iter().enumerate() {
            let hook = Partition::hook(d, k as u32);
            prop_assert_eq!(*value, character(&hook, &beta).unwrap());
        }
    }

    #[test]
    fn symmetric_in_alpha_and_beta((alpha, beta) in same_size_pair(6), g in 0i64..3) {
        prop_assert_eq!(connected(g, &alpha, &beta).unwrap(), connected(g, &beta, &alpha).unwrap());
    }

    #[test]
    fn wrong_parity_vanishes((alpha, beta) in same_size_pair(6), r in 0u32..7) {
        if (r as usize + alpha.len() + beta.len()) % 2 == 1 {
            prop_assert!(disconnected_character(&alpha, &beta, r).unwrap().is_zero());
        }
        if r_value(-1, &alpha, &beta).unwrap() < 0 {
            prop_assert!(connected(-1, &alpha, &beta).unwrap().is_zero());
        }
    }

    #[test]
    fn symbols_are_symmetric(b in proptest::collection::vec(0u32..6, 3), k in 0u32..3) {
        // pad the last insertion so the dimension constraint holds at g = 2
        let g = 2u32;
        let total: i64 = 4 * g as i64 - 3 + 3 - 2 * k as i64;
        let head: i64 = b[..2].iter().map(|&x| x as i64).sum();
        prop_assume!(head <= total);
        let idx = vec![b[0], b[1], (total - head) as u32];
        let mut rev = idx.clone();
        rev.reverse();
        let a = symbol_def(&PicIndex::new(g, k, idx).unwrap()).unwrap();
        let c = symbol_def(&PicIndex::new(g, k, rev).unwrap()).unwrap();
        prop_assert_eq!(a, c);
    }

    #[test]
    fn exp_inverts_log(coeffs in proptest::collection::vec(-9i64..10, 1..9)) {
        let order = coeffs.len();
        let s = UnivariateSeries::from_fn(order, |i| if i == 0 { rat(1, 1) } else { rat(coeffs[i - 1], 1 + i as i64) });
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn one_part_rays_terminate(beta in partition(3, 3), g in 0u32..3) {
        prop_assume!(!(g == 0 && beta.len() == 1));
        let alpha = Partition::single(beta.size());
        let top = 4 * g + beta.len() as u32 - 2;
        let sample = ray_samples(g, &alpha, &beta, top + 3, Method::OnePart).unwrap();
        let fit = fit_degree(&sample.values).unwrap();
        prop_assert!(fit.degree <= top);
        prop_assert!(!fit.leading.is_zero());
    }
}

#[test]
fn column_orthogonality() {
    for d in 1..=6u32 {
        let parts = partitions_of(d);
        let table = character_table(d);
        for (i, mu) in parts.iter().enumerate() {
            for (j, _) in parts.iter().enumerate() {
                let s: i64 = table.iter().map(|row| row[i] * row[j]).sum();
                let expected = if i == j {
                    factorial(d as u64) / mu.conjugacy_class_size()
                } else {
                    BigInt::zero()
                };
                assert_eq!(BigInt::from(s), expected, "d={d}");
            }
        }
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for d in 1..=10u32 {
        let total: BigInt = partitions_of(d)
            .iter()
            .map(Partition::conjugacy_class_size)
            .sum();
        assert_eq!(total, factorial(d as u64));
    }
}

#[test]
fn f_signs_alternate() {
    for j in 0..=10u32 {
        let f: Rational = f_coeff(2 * j);
        assert_eq!(f.signum(), int(if j % 2 == 0 { 1 } else { -1 }));
    }
}

#[test]
fn w_satisfies_its_differential_identities() {
    let r = verify_w_identities(6).unwrap();
    assert!(r.passed(), "{r}");
}
