//! Acceptance run: one PASS or FAIL line per criterion, all comparisons
//! exact. Runs with a custom harness so the lines always reach stdout.
//!
//! Three criteria compare against printed formulas that do not match the
//! computed numbers. Those print FAIL with the observed discrepancy, and
//! the run still asserts what does hold (agreement between independent
//! methods and the exact shape of the discrepancy). Any other failure
//! makes the process exit nonzero.

use std::process::ExitCode;
use std::time::Instant;

use double_hurwitz::hurwitz::{
    brute_force, brute_force_with, build_series_table, connected, diagonal, one_part_closed,
    one_part_sinh_form, one_part_xi_form, r_value, two_two_oriented, verify_join_cut, BruteOptions,
};
use double_hurwitz::lagrange::{
    verify_ansatz, verify_ansatz_with, verify_lagrange, verify_wittansx, Genus1Form,
};
use double_hurwitz::polynomiality::{
    battery, check_chamber_formula_022, check_degree_bounds, one_part_windows,
};
use double_hurwitz::rational::{factorial, int, rat, to_wire};
use double_hurwitz::series::{bernoulli, f_coeff, v_coeff, xi_coeff};
use double_hurwitz::symbol::{
    check_string_dilaton, check_string_dilaton_range, closed_form_as_symbol, closed_form_symbol,
    family_members, lambda_top_constant, symbol_def, symbol_wittcor, top_psi_value, valid_indices,
    ClosedForm, Equation, PicIndex,
};
use double_hurwitz::{partitions_of, Partition, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// What a criterion found.
struct Outcome {
    pass: bool,
    /// Set when the printed claim fails but the failure was analysed and
    /// its shape asserted; such a FAIL does not fail the run.
    explained: bool,
    note: String,
}

impl Outcome {
    fn pass(note: impl Into<String>) -> Self {
        Outcome {
            pass: true,
            explained: false,
            note: note.into(),
        }
    }

    fn fail(note: impl Into<String>) -> Self {
        Outcome {
            pass: false,
            explained: false,
            note: note.into(),
        }
    }

    fn explained_fail(note: impl Into<String>) -> Self {
        Outcome {
            pass: false,
            explained: true,
            note: note.into(),
        }
    }

    fn check(ok: bool, note: impl Into<String>) -> Self {
        if ok {
            Self::pass(note)
        } else {
            Self::fail(note)
        }
    }
}

fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn pow(base: i64, e: u32) -> Rational {
    int(BigInt::from(base).pow(e))
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for d in 1..=5 {
        let parts = partitions_of(d);
        for a in &parts {
            for b in &parts {
                for g in 0..=3i64 {
                    if !r_value(g, a, b).is_ok_and(|r| r <= 6) {
                        continue;
                    }
                    let x = connected(g, a, b).unwrap();
                    let y = brute_force(g, a, b, true).unwrap();
                    if x != y {
                        return Outcome::fail(format!("g={g} ({a}),({b}): {x} vs {y}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Outcome::pass(format!("{checked} inputs agree"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for d in 1..=8 {
        let alpha = Partition::single(d);
        for beta in partitions_of(d) {
            for g in 0..=5 {
                let s = one_part_sinh_form(g, &beta).unwrap();
                let x = one_part_xi_form(g, &beta).unwrap();
                let c = one_part_closed(g, &beta).unwrap();
                if s != x || x != c {
                    return Outcome::fail(format!("g={g} ({beta}): {s} / {x} / {c}"));
                }
                if g <= 3 {
                    let e = connected(g as i64, &alpha, &beta).unwrap();
                    if e != s {
                        return Outcome::fail(format!("g={g} ({beta}): one-part {s}, engine {e}"));
                    }
                }
                checked += 1;
            }
        }
    }
    Outcome::pass(format!("{checked} inputs agree"))
}

/// The three displayed power-sum expressions, transcribed term by term.
fn printed_example(which: usize, g: u32) -> Rational {
    match which {
        0 => {
            let e = 2 * g + 2;
            let s = [55, 44, 33].iter().map(|&x| pow(x, e)).sum::<Rational>()
                - [23, 12, 1].iter().map(|&x| pow(x, e)).sum::<Rational>();
            s * rat(2, 3 * 8 * 4 * 7)
        }
        1 => {
            let e = 2 * g + 4;
            let plus = [2, 10, 12, 36].iter().map(|&x| pow(x, e)).sum::<Rational>();
            let minus = [6, 18, 20, 28].iter().map(|&x| pow(x, e)).sum::<Rational>();
            (plus - minus) * rat(1, 180)
        }
        _ => {
            let e = 2 * g + 5;
            let s = rat(3, 1) * pow(2, e) + rat(9, 2) * pow(4, e) + rat(3, 1) * pow(6, e)
                - pow(10, e)
                - pow(14, e)
                - pow(16, e)
                + rat(1, 2) * pow(28, e);
            s * rat(1, 48)
        }
    }
}

fn criterion_3() -> Outcome {
    let inputs = [("8,3", "7,4"), ("6,2,1", "5,3,1"), ("4,2,2", "3,2,2,1")];
    let mut notes = Vec::new();
    let mut all_match = true;
    for (i, (a, b)) in inputs.iter().enumerate() {
        for g in 0..=1 {
            let engine = connected(g as i64, &p(a), &p(b)).unwrap();
            let printed = printed_example(i, g);
            if engine != printed {
                all_match = false;
                notes.push(format!(
                    "g={g} ({a}),({b}): engine {engine}, printed {printed}"
                ));
            }
        }
    }

    // the general two-part formula over every distinct-part pair
    let mut general = 0;
    for d in 3..=11 {
        let two: Vec<Partition> = partitions_of(d)
            .into_iter()
            .filter(|q| q.len() == 2)
            .collect();
        for a in &two {
            for b in &two {
                let distinct = a.multiplicities().len() == 2
                    && b.multiplicities().len() == 2
                    && a.parts().iter().all(|x| !b.parts().contains(x));
                if !distinct {
                    continue;
                }
                for g in 0..=2 {
                    let x = connected(g as i64, a, b).unwrap();
                    let y = two_two_oriented(g, a, b).unwrap();
                    if x != y {
                        return Outcome::fail(format!(
                            "two-part formula g={g} ({a}),({b}): {x} vs {y}"
                        ));
                    }
                    general += 1;
                }
            }
        }
    }

    if all_match {
        return Outcome::pass(format!("examples and {general} two-part inputs match"));
    }

    // The discrepancies are pinned: enumeration sides with the engine, the
    // three-part example is off by exactly a factor of 2, and the four-part
    // example is not a constant multiple across genera.
    let opts = BruteOptions {
        max_degree: 9,
        work_limit: 1_000_000_000,
    };
    for (a, b) in &inputs[1..] {
        let enumerated = brute_force_with(0, &p(a), &p(b), true, opts).unwrap();
        assert_eq!(connected(0, &p(a), &p(b)).unwrap(), enumerated);
    }
    assert_eq!(
        connected(0, &p("8,3"), &p("7,4")).unwrap(),
        printed_example(0, 0)
    );
    assert_eq!(
        connected(1, &p("8,3"), &p("7,4")).unwrap(),
        printed_example(0, 1)
    );
    for g in 0..=1 {
        assert_eq!(
            connected(g as i64, &p("6,2,1"), &p("5,3,1")).unwrap(),
            printed_example(1, g) * int(2)
        );
    }
    let ratio =
        |g: u32| connected(g as i64, &p("4,2,2"), &p("3,2,2,1")).unwrap() / printed_example(2, g);
    assert_ne!(ratio(0), ratio(1));
    Outcome::explained_fail(format!(
        "{}; the (8,3),(7,4) example and {general} two-part inputs match, enumeration agrees with the engine",
        notes.join("; ")
    ))
}

fn criterion_4() -> Outcome {
    for d in 1..=8u32 {
        let one = Partition::single(d);
        for g in 0..=4 {
            let x = diagonal(g, d).unwrap();
            let y = connected(g as i64, &one, &one).unwrap();
            if x != y {
                return Outcome::fail(format!("g={g} d={d}: {x} vs {y}"));
            }
        }
        if diagonal(0, d).unwrap() != rat(1, d as i64) {
            return Outcome::fail(format!("genus 0 at d={d}"));
        }
    }
    Outcome::pass("d <= 8, g <= 4")
}

/// `1/(2^{2g}(2g+1)!)`, written out here.
fn top_psi_oracle(g: u32) -> Rational {
    Rational::new(
        BigInt::one(),
        BigInt::from(2).pow(2 * g) * factorial(2 * g as u64 + 1),
    )
}

/// `(2^{2g-1} - 1) |B_{2g}| / (2^{2g-1} (2g)!)` with the Bernoulli number
/// from the oracle in criterion 10.
fn lambda_top_oracle(g: u32) -> Rational {
    let p = int(BigInt::from(2).pow(2 * g - 1));
    let b = bernoulli_oracle(2 * g as usize).abs();
    (&p - Rational::one()) * b / (p * int(factorial(2 * g as u64)))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for g in 0..=3 {
        for n in 1..=4 {
            for idx in valid_indices(g, n) {
                if idx.is_excluded() {
                    continue;
                }
                let x = symbol_def(&idx).unwrap();
                let y = symbol_wittcor(&idx).unwrap();
                if x != y || y.is_negative() {
                    return Outcome::fail(format!("{idx:?}: {x} vs {y}"));
                }
                count += 1;
            }
        }
    }
    let a = symbol_wittcor(&PicIndex::new(1, 0, vec![2]).unwrap()).unwrap();
    let b = symbol_wittcor(&PicIndex::new(1, 1, vec![0]).unwrap()).unwrap();
    if a != rat(1, 24) || b != rat(1, 24) {
        return Outcome::fail(format!("genus-1 values {a}, {b}"));
    }
    for g in 1..=4 {
        let top = symbol_wittcor(&PicIndex::new(g, 0, vec![4 * g - 2]).unwrap()).unwrap();
        let lam = symbol_wittcor(&PicIndex::new(g, g, vec![2 * g - 2]).unwrap()).unwrap();
        if top != top_psi_oracle(g) || top != top_psi_value(g) {
            return Outcome::fail(format!("top psi value at g={g}: {top}"));
        }
        if lam != lambda_top_oracle(g) || lam != lambda_top_constant(g).unwrap() {
            return Outcome::fail(format!("lambda-top constant at g={g}: {lam}"));
        }
    }

    // closed-form families, as printed and rescaled
    let mut literal_mismatch = Vec::new();
    let mut members = 0;
    for form in family_members(4, 4) {
        let idx = form.index().unwrap();
        let w = symbol_wittcor(&idx).unwrap();
        let printed = closed_form_symbol(&form).unwrap();
        members += 1;
        assert_eq!(closed_form_as_symbol(&form).unwrap(), w, "{form:?}");
        if printed != w {
            assert_eq!(printed * int(idx.aut_b()), w, "{form:?}");
            assert!(matches!(
                form,
                ClosedForm::Tau2 { .. }
                    | ClosedForm::Tau2Tau3 { .. }
                    | ClosedForm::Tau2Tau3Sq { .. }
            ));
            literal_mismatch.push(form);
        }
    }
    if literal_mismatch.is_empty() {
        return Outcome::pass(format!("{count} symbols, {members} family members"));
    }
    Outcome::explained_fail(format!(
        "{count} symbols agree and are non-negative, special values hold; \
         {} of {members} printed family values (tau_2 / tau_2 tau_3 / tau_2 tau_3^2 types, first {:?}) \
         equal the symbol divided by |Aut b|",
        literal_mismatch.len(),
        literal_mismatch[0]
    ))
}

fn criterion_6() -> Outcome {
    let r = check_string_dilaton_range(3, 3).unwrap();
    let e = check_string_dilaton(1, 1, &[], Equation::String).unwrap();
    Outcome::check(
        r.passed() && e.holds && e.lhs == rat(1, 24),
        format!(
            "{} instances, {} failed {}",
            r.checked,
            r.failed,
            r.failures.join("; ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let r = verify_join_cut(5, 6).unwrap();
    Outcome::check(
        r.passed() && r.initial_conditions_checked == 5,
        format!(
            "{} keys, {} initial conditions{}",
            r.keys_checked,
            r.initial_conditions_checked,
            r.first_failure
                .map(|f| format!(": {f}"))
                .unwrap_or_default()
        ),
    )
}

fn criterion_8() -> Outcome {
    let lagrange = verify_lagrange(6).unwrap();
    let g0 = verify_ansatz(0, 6).unwrap();
    let g1 = verify_ansatz(1, 6).unwrap();
    let witt: Vec<_> = (0..=2).map(|g| verify_wittansx(g, 5).unwrap()).collect();
    let supporting =
        lagrange.passed() && g0.passed() && g1.passed() && witt.iter().all(|r| r.passed());
    let engine =
        |g: u32, beta: &Partition| connected(g as i64, &Partition::single(beta.size()), beta);
    let printed = verify_ansatz_with(1, 6, Genus1Form::AsPrinted, &engine).unwrap();
    if printed.passed() {
        return Outcome::check(supporting, "printed and supporting identities hold");
    }
    if !supporting {
        return Outcome::fail(format!("{lagrange}\n{g0}\n{g1}"));
    }
    Outcome::explained_fail(format!(
        "printed genus-1 form fails at {} of {} orders (first: {}); with one more factor of mu on each Q term \
         it holds through x^6, as do genus 0, the symbol-series expansion for g <= 2 and both Lagrange forms",
        printed.failed,
        printed.checked,
        printed.failures.first().map(String::as_str).unwrap_or("")
    ))
}

fn criterion_9() -> Outcome {
    let mut notes = Vec::new();
    for (g, alpha, beta) in battery() {
        let top = 4 * g + alpha.len() as u32 + beta.len() as u32 - 3;
        let r = check_degree_bounds(g, &alpha, &beta, top + 3).unwrap();
        if r.fit.degree != top || r.fit.leading.is_zero() || !r.in_window {
            return Outcome::fail(format!("g={g} ({alpha}),({beta}): degree {}", r.fit.degree));
        }
        notes.push(format!(
            "({g},{},{})={}",
            alpha.len(),
            beta.len(),
            to_wire(&r.fit.leading)
        ));
    }
    let chamber = check_chamber_formula_022(8).unwrap();
    if !chamber.passed() {
        return Outcome::fail(format!("chamber: {:?}", chamber.canonical_failures));
    }
    for r in one_part_windows(3, 4).unwrap() {
        if !r.passed() {
            return Outcome::fail(format!("{:?}", r.row()));
        }
    }
    Outcome::pass(format!(
        "leading coefficients {}; 2 max holds on {} inputs",
        notes.join(" "),
        chamber.checked
    ))
}

/// Akiyama–Tanigawa, giving `B_n` with `B_1 = +1/2`.
fn bernoulli_oracle(n: usize) -> Rational {
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=n {
        a.push(rat(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}

fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

fn series_inv(a: &[Rational]) -> Vec<Rational> {
    let mut out = vec![a[0].recip()];
    for k in 1..a.len() {
        let s: Rational = (1..=k).map(|i| &a[i] * &out[k - i]).sum();
        out.push(-s * a[0].recip());
    }
    out
}

/// `log(a)` for `a_0 = 1`, from `a' = a (log a)'`.
fn series_log(a: &[Rational]) -> Vec<Rational> {
    let mut l = vec![Rational::zero(); a.len()];
    for m in 1..a.len() {
        let mut acc = int(m as i64) * &a[m];
        for k in 1..m {
            acc -= int(k as i64) * &l[k] * &a[m - k];
        }
        l[m] = acc / int(m as i64);
    }
    l
}

fn criterion_10() -> Outcome {
    let order = 14;
    // sinh(c x)/(c x) has coefficients c^{2j}/(2j+1)! at even powers
    let sinhc = |c: Rational| -> Vec<Rational> {
        (0..=order)
            .map(|i| {
                if i % 2 == 1 {
                    Rational::zero()
                } else {
                    num_traits::pow(c.clone(), i) / int(factorial(i as u64 + 1))
                }
            })
            .collect()
    };
    let half = sinhc(rat(1, 2));
    let cosech = series_inv(&half);
    let log_sinhc = series_log(&sinhc(Rational::one()));
    for two_j in (0..=12u32).step_by(2) {
        let i = two_j as usize;
        let b = bernoulli_oracle(i);
        if bernoulli(two_j) != b {
            return Outcome::fail(format!("B_{two_j}"));
        }
        if v_coeff(two_j) != half[i] {
            return Outcome::fail(format!("v_{two_j}"));
        }
        let f = f_coeff(two_j);
        if f != cosech[i] {
            return Outcome::fail(format!("f_{two_j}: {f} vs {}", cosech[i]));
        }
        let expected_sign = if (two_j / 2) % 2 == 0 { 1 } else { -1 };
        if f.signum() != int(expected_sign) {
            return Outcome::fail(format!("sign of f_{two_j}"));
        }
        if two_j >= 2 && xi_coeff(two_j) != log_sinhc[i] {
            return Outcome::fail(format!("xi_{two_j}"));
        }
    }
    // one more identity ties the families together: f = 1/v as series
    let one = series_mul(&half, &cosech);
    Outcome::check(
        one[0].is_one() && one[1..].iter().all(Zero::is_zero),
        "indices 0..=12",
    )
}

fn criterion_11() -> Outcome {
    let table = build_series_table(5, 6).unwrap();
    let back = table.log().unwrap().exp().unwrap();
    let mut n = 0;
    for (key, v) in table.iter() {
        if back.coeff(key).unwrap() != *v {
            return Outcome::fail(format!("{key:?}"));
        }
        n += 1;
    }
    Outcome::check(back.iter().count() == n, format!("{n} coefficients"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("cross-method oracle equivalence", criterion_1),
        ("one-part consistency", criterion_2),
        ("worked examples and two-part formula", criterion_3),
        ("diagonal", criterion_4),
        ("symbol equivalence and closed forms", criterion_5),
        ("string and dilaton equations", criterion_6),
        ("join-cut", criterion_7),
        ("Lagrange inversion and genus expansion", criterion_8),
        ("polynomiality along rays", criterion_9),
        ("special series", criterion_10),
        ("connected/disconnected round trip", criterion_11),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict}: {name} [{:.1?}] {}",
            i + 1,
            start.elapsed(),
            outcome.note
        );
        if !outcome.pass && !outcome.explained {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed without an explanation");
        ExitCode::FAILURE
    }
}
