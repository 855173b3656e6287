// SPDX-License-Identifier: MIT OR Apache-2.0

use std::fmt::Write as _;
use std::path::Path;

use fusedpath::generators::{gen_1fl, gen_random, gen_worst_case};
use fusedpath::oracle::{solve_fixed_gamma_dp, solve_fixed_gamma_qp};
use fusedpath::solution::x_from_w;
use fusedpath::{
    constrained_to_penalized, from_dual, penalized_to_constrained, solve_path, to_dual, verify_path, Instance,
    Rational, Scalar, SolutionPath,
};
use rayon::prelude::*;
use serde_json::Value;

use crate::io;
use crate::{Backend, CliError, Direction, Family, Format, Method};

/// Backend requested on the command line, else rational when the file uses
/// text entries, else f64.
fn file_backend(doc: &Value, flag: Option<Backend>) -> Backend {
    flag.unwrap_or(if io::has_text_entries(doc) {
        Backend::Rational
    } else {
        Backend::F64
    })
}

fn family_backend(family: Family, flag: Option<Backend>) -> Backend {
    flag.unwrap_or(match family {
        Family::WorstCase => Backend::Rational,
        _ => Backend::F64,
    })
}

macro_rules! dispatch {
    ($backend:expr, $f:ident($($arg:expr),*)) => {
        match $backend {
            Backend::F64 => $f::<f64>($($arg),*),
            Backend::Rational => $f::<Rational>($($arg),*),
        }
    };
}

fn parse_value<S: Scalar>(text: &str, what: &str) -> Result<S, CliError> {
    let v = S::parse_text(text.trim()).map_err(|e| CliError::Input(e.to_string()))?;
    if v.is_negative() {
        return Err(CliError::Input(format!("{what} must be nonnegative")));
    }
    Ok(v)
}

pub fn solve(file: &Path, gamma: &str, backend: Option<Backend>, method: Method, output: Option<&Path>) -> Result<(), CliError> {
    let doc = io::read_json(file)?;
    dispatch!(file_backend(&doc, backend), solve_with(&doc, gamma, method, output))
}

fn solve_with<S: Scalar>(doc: &Value, gamma: &str, method: Method, output: Option<&Path>) -> Result<(), CliError> {
    let inst: Instance<S> = io::instance_from_json(doc)?;
    let gamma: S = parse_value(gamma, "gamma")?;
    let x = match method {
        Method::Path => solve_path(&to_dual(&inst))?.eval_x(&gamma),
        Method::Dp => solve_fixed_gamma_dp(&inst, &gamma),
        Method::Qp => x_from_w(&solve_fixed_gamma_qp(&to_dual(&inst), &gamma)?),
    };
    let mut text = serde_json::to_string(&io::vector_to_json(&x)).expect("JSON values serialize");
    text.push('\n');
    io::emit(output, &text)
}

pub fn path(file: &Path, backend: Option<Backend>, format: Format, output: Option<&Path>) -> Result<(), CliError> {
    let doc = io::read_json(file)?;
    dispatch!(file_backend(&doc, backend), path_with(&doc, format, output))
}

fn summary<S: Scalar>(path: &SolutionPath<S>) -> String {
    let (fuse, unfuse) = path.event_counts();
    format!(
        "events={} fuse={fuse} unfuse={unfuse} segments={} distinct_segments={}",
        path.events().len(),
        path.segment_count(false),
        path.segment_count(true)
    )
}

fn path_with<S: Scalar>(doc: &Value, format: Format, output: Option<&Path>) -> Result<(), CliError> {
    let inst: Instance<S> = io::instance_from_json(doc)?;
    let path = solve_path(&to_dual(&inst))?;
    let text = match format {
        Format::Csv => {
            let mut s = String::from("gamma,index,kind,sign\n");
            for e in path.events() {
                writeln!(s, "{},{},{},{}", e.gamma.to_text(), e.index, e.kind.label(), e.sign.as_i8()).unwrap();
            }
            s
        }
        Format::Json => io::pretty(&io::path_to_json(&path)),
    };
    io::emit(output, &text)?;
    eprintln!("{}", summary(&path));
    Ok(())
}

pub fn gen(family: Family, n: usize, seed: u64, backend: Option<Backend>, output: Option<&Path>) -> Result<(), CliError> {
    check_size(family, n)?;
    let doc = dispatch!(family_backend(family, backend), generate(family, n, seed));
    io::emit(output, &io::pretty(&doc))
}

fn check_size(family: Family, n: usize) -> Result<(), CliError> {
    let min = if family == Family::WorstCase { 3 } else { 1 };
    if n < min {
        return Err(CliError::Input(format!("n must be at least {min} for this family")));
    }
    Ok(())
}

fn generate<S: Scalar>(family: Family, n: usize, seed: u64) -> Value {
    let inst: Instance<S> = match family {
        Family::WorstCase => from_dual(&gen_worst_case(n)),
        Family::Random => gen_random(n, seed),
        Family::UnitWeights => gen_1fl(gen_random::<S>(n, seed).y().to_vec()),
    };
    io::instance_to_json(&inst)
}

/// Parses `a..b` (inclusive), `a..b:step` or `a,b,c`.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Input(format!("cannot parse size range {text:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let sizes = if let Some((lo, rest)) = text.split_once("..") {
        let (hi, step) = match rest.split_once(':') {
            Some((hi, step)) => (num(hi)?, num(step)?),
            None => (num(rest)?, 1),
        };
        let lo = num(lo)?;
        if step == 0 || hi < lo {
            return Err(bad());
        }
        (lo..=hi).step_by(step).collect()
    } else {
        text.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if sizes.is_empty() {
        return Err(bad());
    }
    Ok(sizes)
}

struct Row {
    n: usize,
    seed: u64,
    fuse: usize,
    unfuse: usize,
    segments: usize,
}

pub fn events(
    family: Family,
    sizes: &str,
    first_seed: u64,
    seeds: u64,
    backend: Option<Backend>,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let sizes = parse_sizes(sizes)?;
    for &n in &sizes {
        check_size(family, n)?;
    }
    // The adversarial family does not depend on the seed.
    let seeds = if family == Family::WorstCase { 1 } else { seeds.max(1) };
    let jobs: Vec<(usize, u64)> = sizes
        .iter()
        .flat_map(|&n| (first_seed..first_seed + seeds).map(move |s| (n, s)))
        .collect();
    let backend = family_backend(family, backend);
    let rows = jobs
        .par_iter()
        .map(|&(n, seed)| dispatch!(backend, count_events(family, n, seed)))
        .collect::<Result<Vec<Row>, CliError>>()?;
    let mut text = String::from("n,seed,fuse,unfuse,total,segments\n");
    for r in rows {
        writeln!(text, "{},{},{},{},{},{}", r.n, r.seed, r.fuse, r.unfuse, r.fuse + r.unfuse, r.segments).unwrap();
    }
    io::emit(output, &text)
}

fn count_events<S: Scalar>(family: Family, n: usize, seed: u64) -> Result<Row, CliError> {
    let dual = match family {
        Family::WorstCase => gen_worst_case::<S>(n),
        Family::Random => to_dual(&gen_random::<S>(n, seed)),
        Family::UnitWeights => to_dual(&gen_1fl(gen_random::<S>(n, seed).y().to_vec())),
    };
    let path = solve_path(&dual)?;
    let report = verify_path(&dual, &path, 2, None)?;
    if !report.passed {
        return Err(CliError::Failure(format!(
            "verification failed for n={n} seed={seed}: worst violation {:e}",
            report.worst()
        )));
    }
    let (fuse, unfuse) = path.event_counts();
    Ok(Row {
        n,
        seed,
        fuse,
        unfuse,
        segments: path.segment_count(true),
    })
}

pub fn verify(file: &Path, path_file: Option<&Path>, samples: usize, backend: Option<Backend>) -> Result<(), CliError> {
    if samples == 0 {
        return Err(CliError::Input("samples must be at least 1".into()));
    }
    let doc = io::read_json(file)?;
    let path_doc = path_file.map(io::read_json).transpose()?;
    dispatch!(file_backend(&doc, backend), verify_with(&doc, path_doc.as_ref(), samples))
}

fn verify_with<S: Scalar>(doc: &Value, path_doc: Option<&Value>, samples: usize) -> Result<(), CliError> {
    let inst: Instance<S> = io::instance_from_json(doc)?;
    let dual = to_dual(&inst);
    let path = match path_doc {
        Some(p) => io::path_from_json(dual.clone(), p)?,
        None => solve_path(&dual)?,
    };
    let dp = |g: &S| Ok(solve_fixed_gamma_dp(&inst, g));
    let qp = |g: &S| solve_fixed_gamma_qp(&dual, g).map(|w| x_from_w(&w));
    let with_dp = verify_path(&dual, &path, samples, Some(&dp))?;
    let with_qp = verify_path(&dual, &path, samples, Some(&qp))?;
    let passed = with_dp.passed && with_qp.passed;
    println!("backend {}", S::NAME);
    println!("events {}", path.events().len());
    println!("continuity {:e}", with_dp.continuity);
    println!("feasibility {:e}", with_dp.feasibility);
    println!("alignment {:e}", with_dp.alignment);
    println!("oracle_dp {:e}", with_dp.oracle.unwrap_or(0.0));
    println!("oracle_qp {:e}", with_qp.oracle.unwrap_or(0.0));
    println!("threshold {:e}", with_dp.threshold);
    println!("result {}", if passed { "pass" } else { "fail" });
    if passed {
        Ok(())
    } else {
        Err(CliError::Failure(format!(
            "path verification failed: worst violation {:e}",
            with_dp.worst().max(with_qp.worst())
        )))
    }
}

pub fn convert(file: &Path, direction: Direction, value: &str, backend: Option<Backend>) -> Result<(), CliError> {
    let doc = io::read_json(file)?;
    dispatch!(file_backend(&doc, backend), convert_with(&doc, direction, value))
}

fn convert_with<S: Scalar>(doc: &Value, direction: Direction, value: &str) -> Result<(), CliError> {
    let inst: Instance<S> = io::instance_from_json(doc)?;
    let value: S = parse_value(value, "value")?;
    let path = solve_path(&to_dual(&inst))?;
    let out = match direction {
        Direction::ToConstrained => penalized_to_constrained(&path, &value),
        Direction::ToPenalized => constrained_to_penalized(&path, &value),
    };
    println!("{}", out.to_text());
    Ok(())
}
