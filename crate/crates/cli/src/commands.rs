use std::path::Path;

use double_hurwitz::hurwitz::{
    brute_force_with, build_series_table, connected, diagonal, genus0_mparts, one_part_closed,
    r_value, two_two_oriented, BruteOptions,
};
use double_hurwitz::polynomiality::{degree_report, ray_samples, Method};
use double_hurwitz::rational::{to_plain, to_wire};
use double_hurwitz::symbol::{symbol_def, symbol_wittcor, PicIndex};
use double_hurwitz::verify::{run_suite, Bounds, Suite};
use double_hurwitz::{Error, Partition, Rational};
use serde::Serialize;

use crate::failure::CliError;
use crate::output::{csv_rows, emit_value, json_line, Format, ValueRecord};
use crate::{Input, MethodArg, RayMethod};

/// Cross-checks with the character sum stay below this degree.
const CHARACTER_CHECK_MAX_D: u32 = 12;

fn parse_parts(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn parse_input(input: &Input) -> Result<(i64, Partition, Partition), Error> {
    let alpha = parse_parts(&input.alpha)?;
    let beta = parse_parts(&input.beta)?;
    if alpha.size() != beta.size() {
        return Err(Error::SizeMismatch {
            alpha: alpha.size(),
            beta: beta.size(),
        });
    }
    Ok((input.genus, alpha, beta))
}

fn distinct_two_part(a: &Partition, b: &Partition) -> bool {
    a.len() == 2
        && b.len() == 2
        && a.multiplicities().len() == 2
        && b.multiplicities().len() == 2
        && a.parts().iter().all(|x| !b.parts().contains(x))
}

/// The first closed form that covers the input, with its name.
fn closed_form(
    g: i64,
    alpha: &Partition,
    beta: &Partition,
) -> Option<(&'static str, Result<Rational, Error>)> {
    let gu = u32::try_from(g).ok()?;
    if alpha.len() == 1 && beta.len() == 1 {
        return Some(("diagonal", diagonal(gu, alpha.size())));
    }
    if (alpha.len() == 1 || beta.len() == 1) && gu <= 5 {
        let other = if alpha.len() == 1 { beta } else { alpha };
        return Some(("one-part", one_part_closed(gu, other)));
    }
    if distinct_two_part(alpha, beta) {
        return Some(("two-part", two_two_oriented(gu, alpha, beta)));
    }
    if gu == 0 {
        if matches!(alpha.len(), 2 | 3) {
            return Some(("genus-0", genus0_mparts(alpha, beta)));
        }
        if matches!(beta.len(), 2 | 3) {
            return Some(("genus-0", genus0_mparts(beta, alpha)));
        }
    }
    None
}

fn brute(g: i64, alpha: &Partition, beta: &Partition, work_limit: u128) -> Result<Rational, Error> {
    let opts = BruteOptions {
        max_degree: 10,
        work_limit,
    };
    brute_force_with(g, alpha, beta, true, opts)
}

pub fn compute(
    input: &Input,
    method: MethodArg,
    format: Format,
    work_limit: u128,
) -> Result<(), CliError> {
    let (g, alpha, beta) = parse_input(input)?;
    let r = r_value(g, &alpha, &beta)?;

    let (value, name) = if r < 0 {
        (Rational::default(), "vanishing".to_string())
    } else {
        match method {
            MethodArg::Brute => (brute(g, &alpha, &beta, work_limit)?, "brute".into()),
            MethodArg::Character => (connected(g, &alpha, &beta)?, "character".into()),
            MethodArg::Closed => {
                let (name, v) = closed_form(g, &alpha, &beta).ok_or_else(|| {
                    Error::Exceptional(format!("no closed form covers ({alpha}),({beta})"))
                })?;
                (v?, name.to_string())
            }
            MethodArg::Auto => auto(g, &alpha, &beta, work_limit)?,
        }
    };

    let record = ValueRecord {
        genus: g,
        alpha: alpha.parts().to_vec(),
        beta: beta.parts().to_vec(),
        r,
        value: to_wire(&value),
        method: name,
    };
    emit_value(&record, &to_plain(&value), format)
}

/// Closed form if available, checked against the character sum; otherwise
/// the character sum, checked against enumeration when that fits the
/// work limit.
fn auto(
    g: i64,
    alpha: &Partition,
    beta: &Partition,
    work_limit: u128,
) -> Result<(Rational, String), Error> {
    if let Some((name, Ok(v))) = closed_form(g, alpha, beta) {
        if alpha.size() <= CHARACTER_CHECK_MAX_D {
            let c = connected(g, alpha, beta)?;
            if c != v {
                return Err(Error::Inconsistent(format!(
                    "{name} gives {}, character sum gives {}",
                    to_wire(&v),
                    to_wire(&c)
                )));
            }
            eprintln!("cross-checked: {name} = character");
            return Ok((v, format!("{name}+character")));
        }
        return Ok((v, name.to_string()));
    }
    let c = connected(g, alpha, beta)?;
    match brute(g, alpha, beta, work_limit) {
        Ok(b) if b == c => {
            eprintln!("cross-checked: character = brute");
            Ok((c, "character+brute".into()))
        }
        Ok(b) => Err(Error::Inconsistent(format!(
            "character sum gives {}, enumeration gives {}",
            to_wire(&c),
            to_wire(&b)
        ))),
        Err(_) => Ok((c, "character".into())),
    }
}

pub fn verify(
    suite: &str,
    dmax: u32,
    gmax: u32,
    rmax: u32,
    format: Format,
) -> Result<(), CliError> {
    let suite: Suite = suite.parse()?;
    let bounds = Bounds {
        d_max: dmax,
        g_max: gmax,
        r_max: rmax,
    };
    eprintln!("suite {suite}: d <= {dmax}, g <= {gmax}, r <= {rmax}");
    let reports = run_suite(suite, bounds)?;
    for r in &reports {
        eprintln!("{r}");
    }
    if format == Format::Json {
        json_line(&reports)?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(CliError::Verification(format!(
            "{failed} of {} identities failed",
            reports.len()
        )));
    }
    eprintln!("all {} identities hold", reports.len());
    Ok(())
}

#[derive(Serialize)]
struct SymbolRecord {
    genus: u32,
    k: u32,
    b: Vec<u32>,
    def: String,
    wittcor: String,
}

#[derive(Serialize)]
struct SymbolRow {
    genus: u32,
    k: u32,
    b: String,
    def: String,
    wittcor: String,
}

pub fn symbol(genus: u32, k: u32, b: &str, format: Format) -> Result<(), CliError> {
    let b: Vec<u32> = b
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad insertion index {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    let idx = PicIndex::new(genus, k, b.clone())?;
    let def = symbol_def(&idx)?;
    let witt = symbol_wittcor(&idx)?;
    if def != witt {
        return Err(Error::Inconsistent(format!(
            "{idx:?}: definition {} but corollary {}",
            to_wire(&def),
            to_wire(&witt)
        ))
        .into());
    }
    let record = SymbolRecord {
        genus,
        k,
        b,
        def: to_wire(&def),
        wittcor: to_wire(&witt),
    };
    match format {
        Format::Json => json_line(&record),
        Format::Csv => csv_rows(&[SymbolRow {
            genus,
            k,
            b: record
                .b
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            def: record.def,
            wittcor: record.wittcor,
        }]),
        Format::Plain => {
            println!("{}, {}", to_plain(&def), to_plain(&witt));
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct RayOutput {
    #[serde(flatten)]
    row: double_hurwitz::polynomiality::RayRow,
    values: Vec<String>,
    monomial: Vec<String>,
}

pub fn ray(input: &Input, t_max: u32, method: RayMethod, format: Format) -> Result<(), CliError> {
    let (g, alpha, beta) = parse_input(input)?;
    let g = u32::try_from(g).map_err(|_| Error::precondition("ray sampling needs genus >= 0"))?;
    let method = match method {
        RayMethod::Character => Method::Character,
        RayMethod::Brute => Method::BruteForce,
        RayMethod::OnePart => Method::OnePart,
    };
    let sample = ray_samples(g, &alpha, &beta, t_max, method)?;
    let values: Vec<String> = sample.values.iter().map(to_wire).collect();
    let report = degree_report(sample)?;
    let row = report.row();
    match format {
        Format::Json => json_line(&RayOutput {
            row,
            values,
            monomial: report.fit.monomial.iter().map(to_wire).collect(),
        }),
        Format::Csv => csv_rows(&[row]),
        Format::Plain => {
            println!("values {}", values.join(" "));
            println!(
                "degree {}, leading {}, window [{}, {}] {}",
                row.degree,
                to_plain(&report.fit.leading),
                row.window_low,
                row.window_high,
                if row.in_window { "ok" } else { "violated" }
            );
            Ok(())
        }
    }
}

pub fn table(dmax: u32, rmax: u32, out: Option<&Path>, connected: bool) -> Result<(), CliError> {
    let mut table = build_series_table(dmax, rmax)?;
    if connected {
        table = table.log()?;
    }
    let text = table.to_json();
    match out {
        Some(path) => {
            std::fs::write(path, text + "\n")?;
            eprintln!(
                "wrote {} coefficients to {}",
                table.iter().count(),
                path.display()
            );
        }
        None => println!("{text}"),
    }
    Ok(())
}
