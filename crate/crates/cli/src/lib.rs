//! Command line front end for `jetclosure`. `main` only forwards to
//! [`main_with`]; everything else lives here so batch mode can reuse the
//! single-request path.

pub mod args;
pub mod record;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};

use jetclosure::algebra::{parse_polynomial, Polynomial, RingSpec};
use jetclosure::catalog::{classify, AdeType, CatalogRow, Verdict as ClassVerdict};
use jetclosure::closures::{
    closure, jc_contains, jet_closure, jet_closure_elim, jet_support_closure, ClosureKind, ClosureResult,
};
use jetclosure::filtration::{
    filtration_value, homogeneous_filtration_value, jacobian_ideal, jet_index, milnor_number, scan_one, tjurina_ideal,
    tjurina_number, FiltrationValue, ScanKind,
};
use jetclosure::groebner::{Ideal, Limits};
use jetclosure::jets::{hs_expand, jet_ideal};
use jetclosure::Error;

use args::*;
use record::{Failure, Line, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// An error on its way to an exit code.
#[derive(Debug)]
pub struct Fail {
    pub code: i32,
    pub message: String,
}

impl Fail {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Fail { code, message: message.into() }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if e.is_resource() {
            EXIT_RESOURCE
        } else if e.is_input() || matches!(e, Error::RingMismatch | Error::MissingImage(_)) {
            EXIT_PARSE
        } else {
            EXIT_UNSUPPORTED
        };
        Fail::new(code, e.to_string())
    }
}

type Res<T> = Result<T, Fail>;

/// Parses `args` (program name first), runs the request, prints the result
/// and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let (lines, code) = execute(&cli);
    let batch = matches!(cli.command, Command::Batch(_));
    for (n, line) in &lines {
        let n = Some(*n).filter(|&n| batch && n > 0);
        match (line, n, cli.json) {
            (_, _, true) => println!("{}", line.json(n)),
            (Line::Err(_), None, false) => {}
            (_, _, false) => print!("{}", line.text(n)),
        }
        if let (Line::Err(f), None) = (line, n) {
            eprintln!("error: {}", f.error);
        }
    }
    code
}

/// Runs a parsed request. Returns `(line number, result)` pairs; line
/// numbers only mean something in batch mode.
pub fn execute(cli: &Cli) -> (Vec<(usize, Line)>, i32) {
    let limits = cli.limits();
    if let Command::Batch(b) = &cli.command {
        return match std::fs::read_to_string(&b.file) {
            Ok(text) => (run_batch(&text, limits), EXIT_OK),
            Err(e) => {
                let f = Failure {
                    command: "batch".into(),
                    error: format!("{}: {e}", b.file.display()),
                    exit_code: EXIT_IO,
                };
                (vec![(0, Line::Err(f))], EXIT_IO)
            }
        };
    }
    match run(&cli.command, limits) {
        Ok(records) => (records.into_iter().map(|r| (0, Line::Ok(r))).collect(), EXIT_OK),
        Err(f) => {
            let code = f.code;
            let failure = Failure { command: cli.command.name().into(), error: f.message, exit_code: code };
            (vec![(0, Line::Err(failure))], code)
        }
    }
}

/// One request per non-blank, non-comment line, run in parallel and
/// reported in input order. A bad line only spoils its own record.
pub fn run_batch(text: &str, limits: Limits) -> Vec<(usize, Line)> {
    let requests: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results: Vec<(usize, Vec<Line>)> = requests.par_iter().map(|&(n, l)| (n, batch_line(l, limits))).collect();
    results.into_iter().flat_map(|(n, lines)| lines.into_iter().map(move |l| (n, l))).collect()
}

/// Records for one batch line; commands with several results (catalog,
/// scan) give several records with the same line number.
fn batch_line(line: &str, limits: Limits) -> Vec<Line> {
    let fail = |command: &str, f: Fail| {
        vec![Line::Err(Failure { command: command.into(), error: f.message, exit_code: f.code })]
    };
    let Some(words) = shlex::split(line) else {
        return fail("", Fail::new(EXIT_PARSE, "unbalanced quotes"));
    };
    let command = words.first().cloned().unwrap_or_default();
    let mut argv = vec![
        "jetclosure".to_string(),
        "--max-pairs".into(),
        limits.max_pairs.to_string(),
        "--max-matrix".into(),
        limits.max_matrix.to_string(),
    ];
    argv.extend(words);
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid request").trim_start_matches("error: ").to_string();
            return fail(&command, Fail::new(EXIT_PARSE, first));
        }
    };
    if matches!(cli.command, Command::Batch(_)) {
        return fail("batch", Fail::new(EXIT_UNSUPPORTED, "batch files cannot nest"));
    }
    match run(&cli.command, cli.limits()) {
        Ok(records) => records.into_iter().map(Line::Ok).collect(),
        Err(f) => fail(cli.command.name(), f),
    }
}

fn ring(names: &str) -> Res<RingSpec> {
    Ok(RingSpec::parse(names)?)
}

fn ideal(input: &IdealInput, limits: Limits) -> Res<Ideal> {
    Ok(Ideal::parse(&ring(&input.ring)?, &input.ideal)?.with_limits(limits))
}

fn poly(ring: &RingSpec, text: &str) -> Res<Polynomial> {
    Ok(parse_polynomial(ring, text)?)
}

fn timed<T>(f: impl FnOnce() -> Res<T>) -> Res<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    let ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    Ok((out, ms))
}

fn strings(i: &Ideal) -> Res<Vec<String>> {
    Ok(i.canonical_strings()?)
}

fn closure_record(command: &'static str, input: &Ideal, r: &ClosureResult, ms: f64) -> Res<Record> {
    let mut rec = Record::new(command, input.to_string());
    rec.m = Some(r.m);
    rec.generators = strings(&r.closure)?;
    rec.dim = Some(r.dim);
    rec.good = Some(r.good);
    rec.method = Some(r.method.name().into());
    rec.timing_ms = ms;
    Ok(rec)
}

fn filtration_json(v: FiltrationValue) -> Value {
    match v {
        FiltrationValue::Finite(n) => json!(n),
        FiltrationValue::Infinite => json!("inf"),
    }
}

fn cap(c: Option<u64>) -> Option<usize> {
    c.map(|c| c as usize)
}

/// Runs one non-batch command.
pub fn run(command: &Command, limits: Limits) -> Res<Vec<Record>> {
    let name = command.name();
    let one = |r: Record| Ok(vec![r]);
    match command {
        Command::JetIdeal(a) => {
            let i = ideal(&a.input, limits)?;
            let ((jets, gens), ms) = timed(|| {
                let (jets, ji) = jet_ideal(&i, a.m, a.at_origin)?;
                let gens = if a.groebner {
                    strings(&ji.with_limits(limits))?
                } else {
                    i.generators()
                        .iter()
                        .flat_map(|f| hs_expand(f, &jets, a.at_origin).coefficients)
                        .filter(|c| !c.is_zero())
                        .map(|c| c.to_string())
                        .collect()
                };
                Ok((jets, gens))
            })?;
            let mut rec = Record::new(name, i.to_string());
            rec.m = Some(a.m);
            rec.generators = gens;
            rec.method = Some(if a.groebner { "groebner" } else { "coefficients" }.into());
            rec.value = Some(json!({ "jet_ring": jets.ring().names().join(",") }));
            rec.timing_ms = ms;
            one(rec)
        }
        Command::Jc(a) => {
            let i = ideal(&a.input, limits)?;
            let query = a.query.as_deref().map(|q| poly(i.ring(), q)).transpose()?;
            match (a.method, query) {
                (JcMethod::Kernel, Some(q)) => {
                    let (member, ms) = timed(|| Ok(jc_contains(&i, a.m, &q)?))?;
                    let mut rec = Record::new(name, i.to_string());
                    rec.m = Some(a.m);
                    rec.method = Some("kernel".into());
                    rec.value = Some(json!({ "query": q.to_string(), "member": member }));
                    rec.timing_ms = ms;
                    one(rec)
                }
                (method, q) => {
                    let (r, ms) = timed(|| {
                        Ok(match method {
                            JcMethod::Kernel => jet_closure(&i, a.m)?,
                            JcMethod::Elim => jet_closure_elim(&i, a.m)?,
                        })
                    })?;
                    let mut rec = closure_record(name, &i, &r, ms)?;
                    if let Some(q) = q {
                        rec.value = Some(json!({ "query": q.to_string(), "member": r.closure.contains(&q)? }));
                    }
                    one(rec)
                }
            }
        }
        Command::Jsc(a) => {
            let i = ideal(&a.input, limits)?;
            let query = a.query.as_deref().map(|q| poly(i.ring(), q)).transpose()?;
            let (r, ms) = timed(|| Ok(jet_support_closure(&i, a.m)?))?;
            let mut rec = closure_record(name, &i, &r, ms)?;
            if let Some(q) = query {
                rec.value = Some(json!({ "query": q.to_string(), "member": r.closure.contains(&q)? }));
            }
            one(rec)
        }
        Command::Dim(a) | Command::Good(a) => {
            let i = ideal(&a.input, limits)?;
            let kind = match a.kind {
                Kind::Jc => ClosureKind::Jc,
                Kind::Jsc => ClosureKind::Jsc,
            };
            let (r, ms) = timed(|| Ok(closure(&i, a.m, kind)?))?;
            let mut rec = Record::new(name, i.to_string());
            rec.m = Some(a.m);
            rec.method = Some(r.method.name().into());
            if matches!(command, Command::Dim(_)) {
                rec.dim = Some(r.dim);
            } else {
                rec.good = Some(r.good);
            }
            rec.value = Some(json!({ "kind": kind.name() }));
            rec.timing_ms = ms;
            one(rec)
        }
        Command::JetIndex(a) => {
            let r = ring(&a.ring)?;
            let (target, input) = match (a.mode, &a.ideal, &a.poly) {
                (IndexMode::Plain, Some(text), _) => {
                    let i = Ideal::parse(&r, text)?;
                    let s = i.to_string();
                    (i, s)
                }
                (IndexMode::Milnor, _, Some(text)) => {
                    let f = poly(&r, text)?;
                    (jacobian_ideal(&f)?, f.to_string())
                }
                (IndexMode::Tjurina, _, Some(text)) => {
                    let f = poly(&r, text)?;
                    (tjurina_ideal(&f)?, f.to_string())
                }
                (IndexMode::Plain, None, _) => return Err(Fail::new(EXIT_PARSE, "--mode plain needs --ideal")),
                _ => return Err(Fail::new(EXIT_PARSE, "--mode milnor and --mode tjurina need --poly")),
            };
            let target = target.with_limits(limits);
            let (report, ms) = timed(|| Ok(jet_index(&target, cap(a.cap))?))?;
            let mut rec = Record::new(name, input);
            rec.method = Some(format!("{:?}", a.mode).to_lowercase());
            let trace: Vec<[usize; 2]> = report.trace.iter().map(|&(m, d)| [m, d]).collect();
            rec.value = Some(json!({ "index": report.index, "cap": report.cap, "trace": trace }));
            rec.timing_ms = ms;
            one(rec)
        }
        Command::Milnor(a) => {
            let f = poly(&ring(&a.ring)?, &a.poly)?;
            let ((mu, tau), ms) = timed(|| Ok((milnor_number(&f)?, tjurina_number(&f)?)))?;
            let mut rec = Record::new(name, f.to_string());
            rec.dim = Some(mu);
            rec.value = Some(json!({ "milnor": mu, "tjurina": tau }));
            rec.timing_ms = ms;
            one(rec)
        }
        Command::Filtration(a) => {
            let i = ideal(&a.input, limits)?;
            let g = poly(i.ring(), &a.poly)?;
            let (v, ms) = timed(|| {
                Ok(if a.homogeneous {
                    homogeneous_filtration_value(&i, &g)?
                } else {
                    filtration_value(&i, &g, cap(a.cap))?
                })
            })?;
            let mut rec = Record::new(name, i.to_string());
            rec.method = Some(if a.homogeneous { "homogeneous" } else { "jet" }.into());
            rec.value = Some(json!({ "element": g.to_string(), "value": filtration_json(v) }));
            rec.timing_ms = ms;
            one(rec)
        }
        Command::Classify(a) => {
            let r = ring(&a.ring)?;
            let side = |text: &str| -> Res<Ideal> {
                let i = match text.parse::<AdeType>() {
                    Ok(t) if r.nvars() == 2 => Ideal::new(&r, vec![t.defining_poly_in(&r)])?,
                    _ => Ideal::parse(&r, text)?,
                };
                Ok(i.with_limits(limits))
            };
            let (x, y) = (side(&a.ideal)?, side(&a.other)?);
            let (c, ms) = timed(|| Ok(classify(&x, &y)?))?;
            let mut rec = Record::new(name, format!("{x}; {y}"));
            let (first, reason) = match &c.verdict {
                ClassVerdict::Distinct(m) => (Some(*m), None),
                ClassVerdict::Inconclusive(why) => (None, Some(why.clone())),
                ClassVerdict::Isomorphic => (None, None),
            };
            rec.value = Some(json!({
                "verdict": c.verdict.tag(),
                "first_difference": first,
                "types": c.types.map(|(s, t)| [s.to_string(), t.to_string()]),
                "upto": c.upto,
                "dims": [c.dims.0, c.dims.1],
                "reason": reason,
            }));
            rec.timing_ms = ms;
            one(rec)
        }
        Command::Catalog(a) => {
            let types = if a.types.is_empty() {
                AdeType::up_to(a.max_milnor)
            } else {
                a.types.iter().map(|t| t.parse::<AdeType>()).collect::<Result<Vec<_>, _>>()?
            };
            if a.m_min > a.m_max {
                return Err(Fail::new(EXIT_PARSE, "--m-min exceeds --m-max"));
            }
            let cells: Vec<(AdeType, usize)> =
                types.iter().flat_map(|&t| (a.m_min..=a.m_max).map(move |m| (t, m))).collect();
            cells.par_iter().map(|&(t, m)| catalog_record(t, m)).collect()
        }
        Command::Scan(a) => {
            let r = ring(&a.ring)?;
            let kind = match a.kind {
                ScanKindArg::WeightedJc => ScanKind::WeightedJc,
                ScanKindArg::TjurinaNilpotency => ScanKind::TjurinaNilpotency,
            };
            let mut texts = a.poly.clone();
            if let Some(path) = &a.corpus {
                let body = std::fs::read_to_string(path)
                    .map_err(|e| Fail::new(EXIT_IO, format!("{}: {e}", path.display())))?;
                texts.extend(
                    body.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from),
                );
            }
            let polys = texts.iter().map(|t| poly(&r, t)).collect::<Res<Vec<_>>>()?;
            Ok(polys
                .par_iter()
                .map(|f| {
                    let start = Instant::now();
                    let s = scan_one(kind, f, a.cap as usize);
                    let mut rec = Record::new(name, f.to_string());
                    rec.method = Some(kind.name().into());
                    rec.value = Some(json!({ "verdict": s.verdict.tag(), "detail": s.verdict.detail() }));
                    rec.timing_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
                    rec
                })
                .collect())
        }
        Command::Batch(_) => Err(Fail::new(EXIT_UNSUPPORTED, "batch is handled by execute")),
    }
}

fn catalog_record(t: AdeType, m: usize) -> Res<Record> {
    let (row, ms) = timed(|| Ok(CatalogRow::compute(t, m)?))?;
    let mut rec = Record::new("catalog", t.to_string());
    rec.m = Some(m);
    rec.generators = row.jsc.clone();
    rec.dim = Some(row.jsc_dim);
    rec.method = Some("jsc".into());
    let agrees = row.expected_jsc_dim.map(|d| d == row.jsc_dim);
    rec.value = Some(json!({
        "type": t.to_string(),
        "poly": t.defining_poly().to_string(),
        "jc": row.jc,
        "jc_dim": row.jc_dim,
        "expected_jc": row.expected_jc,
        "expected_jsc": row.expected_jsc,
        "expected_jsc_dim": row.expected_jsc_dim,
        "dim_agrees": agrees,
    }));
    rec.timing_ms = ms;
    Ok(rec)
}
