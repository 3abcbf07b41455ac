//! Command-line front end for exact Weyl algebra computations.
//!
//! [`run`] parses arguments and returns the exit code together with the
//! text that `weyl` writes to stdout and stderr, so the whole command
//! surface can be driven in-process.

pub mod search;
pub mod suite;
pub mod syntax;

use std::fmt::Display;
use std::io::Read;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weyl_core::combinatorics::fubini;
use weyl_core::forms::{build_m, build_mtilde, build_n, euclid, frob, gram_euclid, norm2, trace};
use weyl_core::json::{matrix_ring, FromJson, RingTag, ToJson};
use weyl_core::linalg::{ExactMatrix, OrderedRing, Ring};
use weyl_core::sample::SampleParams;
use weyl_core::scalar::{rat, BigRat};
use weyl_core::{MultiPoly, QSqrt2, WeylElement, WeylMonomial};

use crate::syntax::{parse, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "weyl", version, about = "Exact computations in the Weyl algebra A_n")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also print decimal approximations (not authoritative).
    #[arg(long, global = true)]
    pub approx: bool,
    /// Number of variables; inferred from the expressions when omitted.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Composition A∘B.
    Compose { a: String, b: String },
    /// Trace T(A).
    Trace { a: String },
    /// Frobenius form (A, B) = T(A∘B).
    Frob { a: String, b: String },
    /// Euclid form <A, B> in Q[sqrt2].
    Euclid { a: String, b: String },
    /// Squared norm <A, A>.
    Norm2 { a: String },
    /// Adjoint involution.
    Bar { a: String },
    /// Weight and multi-weight of A.
    Weight { a: String },
    /// Projection onto a weight or multi-weight component.
    #[command(group(ArgGroup::new("target").required(true).args(["weight", "multiweight"])))]
    Project {
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<i64>,
        /// Comma separated, e.g. "1,-2".
        #[arg(long, allow_hyphen_values = true)]
        multiweight: Option<String>,
    },
    /// Gram matrices: the N, M, Mtilde families or the Euclid Gram of a monomial basis.
    #[command(group(ArgGroup::new("source").required(true).args(["family", "basis"])))]
    Gram {
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long, default_value_t = 0)]
        a: u32,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Monomials separated by ';', e.g. "1;x;d".
        #[arg(long)]
        basis: Option<String>,
    },
    /// Determinant, leading minors and definiteness of a JSON matrix (file or stdin).
    Matrix {
        /// Path to the JSON document; "-" reads stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run the identity suite.
    Check {
        /// all, 1, 2, 3, 4, 98, 100, 101, 102 or 103.
        #[arg(long, default_value = "all")]
        lemma: String,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_vars: Option<usize>,
        #[arg(long)]
        max_exp: Option<u32>,
        #[arg(long)]
        max_entry: Option<u32>,
        #[arg(long)]
        max_abc: Option<u32>,
        #[arg(long)]
        max_a: Option<u32>,
        #[arg(long)]
        max_k: Option<u32>,
    },
    /// <(x d)^i, (x d)^(k-i)> against Fubini(k) for every i.
    FubiniTable {
        #[arg(long, default_value_t = 8)]
        k: u32,
    },
    /// Search for pairs with |X∘Y|^2 < |X|^2 |Y|^2.
    ConjectureSearch {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_exp: u32,
        #[arg(long, default_value_t = 3)]
        max_terms: usize,
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "N")]
    N,
    #[value(name = "M")]
    M,
    #[value(name = "Mtilde")]
    Mtilde,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot parse `{text}` {err}")]
    Parse { text: String, err: ParseError },
    #[error("{0}")]
    Core(#[from] weyl_core::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult = Result<(i32, String), CliError>;

/// Runs `weyl` with `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(text: &str, n: Option<usize>) -> Result<WeylElement, CliError> {
    parse(text, n).map_err(|err| CliError::Parse { text: text.to_string(), err })
}

/// Parses both operands with a common arity.
fn read_pair(a: &str, b: &str, n: Option<usize>) -> Result<(WeylElement, WeylElement), CliError> {
    let n = match n {
        Some(n) => n,
        None => read(a, None)?.arity().max(read(b, None)?.arity()),
    };
    Ok((read(a, Some(n))?, read(b, Some(n))?))
}

fn scalar_out<S: Display + ToJson>(cli: &Cli, v: &S, approx: f64) -> CliResult {
    let out = if cli.json {
        let mut obj = json!({"value": v.to_json(), "text": v.to_string()});
        if cli.approx {
            obj["approx"] = json!(approx);
        }
        format!("{obj}\n")
    } else if cli.approx {
        format!("{v}\napprox: {approx} (non-authoritative)\n")
    } else {
        format!("{v}\n")
    };
    Ok((EXIT_OK, out))
}

fn rat_f64(r: &BigRat) -> f64 {
    QSqrt2::from_rat(r.clone()).to_f64()
}

fn element_out(cli: &Cli, x: &WeylElement) -> CliResult {
    Ok((
        EXIT_OK,
        if cli.json {
            format!("{}\n", json!({"element": x.to_json(), "text": x.to_string()}))
        } else {
            format!("{x}\n")
        },
    ))
}

fn execute(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Compose { a, b } => {
            let (x, y) = read_pair(a, b, cli.n)?;
            element_out(cli, &x.compose(&y)?)
        }
        Command::Trace { a } => {
            let t = trace(&read(a, cli.n)?);
            scalar_out(cli, &t, rat_f64(&t))
        }
        Command::Frob { a, b } => {
            let (x, y) = read_pair(a, b, cli.n)?;
            let v = frob(&x, &y)?;
            scalar_out(cli, &v, rat_f64(&v))
        }
        Command::Euclid { a, b } => {
            let (x, y) = read_pair(a, b, cli.n)?;
            let v = euclid(&x, &y)?;
            scalar_out(cli, &v, v.to_f64())
        }
        Command::Norm2 { a } => {
            let v = norm2(&read(a, cli.n)?);
            scalar_out(cli, &v, v.to_f64())
        }
        Command::Bar { a } => element_out(cli, &read(a, cli.n)?.bar()),
        Command::Weight { a } => weight(cli, &read(a, cli.n)?),
        Command::Project { a, weight, multiweight } => {
            let x = read(a, cli.n)?;
            let p = match (weight, multiweight) {
                (Some(l), _) => x.project_weight(*l),
                (None, Some(w)) => {
                    let omega = w
                        .split(',')
                        .map(|s| s.trim().parse::<i64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| CliError::Usage(format!("invalid multi-weight `{w}`")))?;
                    if omega.len() != x.arity() {
                        return Err(CliError::Usage(format!(
                            "multi-weight has {} entries, element has {} variables",
                            omega.len(),
                            x.arity()
                        )));
                    }
                    x.project_multiweight(&omega)
                }
                (None, None) => unreachable!("clap requires one target"),
            };
            element_out(cli, &p)
        }
        Command::Gram { family, a, k, basis } => gram(cli, *family, *a, *k, basis.as_deref()),
        Command::Matrix { input } => matrix(cli, input),
        Command::Check { lemma, max_n, max_vars, max_exp, max_entry, max_abc, max_a, max_k } => {
            let ranges = suite::Ranges {
                max_n: *max_n,
                max_vars: *max_vars,
                max_exp: *max_exp,
                max_entry: *max_entry,
                max_abc: *max_abc,
                max_a: *max_a,
                max_k: *max_k,
            };
            check(cli, lemma, &ranges)
        }
        Command::FubiniTable { k } => fubini_table(cli, *k),
        Command::ConjectureSearch { trials, seed, max_exp, max_terms, coeff_bound } => {
            if *max_terms == 0 || *coeff_bound <= 0 {
                return Err(CliError::Usage("--max-terms and --coeff-bound must be positive".into()));
            }
            let n = cli.n.unwrap_or(1);
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            let params = SampleParams { n, max_exp: *max_exp, max_terms: *max_terms, coeff_bound: *coeff_bound };
            conjecture(cli, search::search(*trials, *seed, params))
        }
    }
}

fn weight(cli: &Cli, x: &WeylElement) -> CliResult {
    let l = x.is_homogeneous();
    let w = x.homogeneous_multiweight();
    let weights: Vec<i64> = x.weight_components().keys().copied().collect();
    if cli.json {
        return Ok((EXIT_OK, format!("{}\n", json!({"weight": l, "multiweight": w, "weights": weights}))));
    }
    let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    let mut out = match l {
        Some(l) => format!("weight: {l}\n"),
        None => format!(
            "weight: none (components of weight {})\n",
            if weights.is_empty() { "-".into() } else { list(&weights) }
        ),
    };
    match w {
        Some(w) => out.push_str(&format!("multiweight: ({})\n", list(&w))),
        None => out.push_str("multiweight: none\n"),
    }
    Ok((EXIT_OK, out))
}

/// Text and JSON rendering of a matrix with its determinant, leading minors
/// and (when the ring is ordered) positive-definiteness verdict.
fn matrix_report<R: Ring + ToJson + RingTag>(
    cli: &Cli,
    m: &ExactMatrix<R>,
    show: impl Fn(&R) -> String,
    definite: Option<Result<bool, weyl_core::Error>>,
) -> CliResult {
    let det = m.det()?;
    let minors = m.leading_minors()?;
    let (verdict, verdict_json) = match definite {
        None => ("n/a".to_string(), Value::Null),
        Some(Ok(b)) => (b.to_string(), json!(b)),
        Some(Err(weyl_core::Error::Asymmetric { row, col })) => {
            (format!("n/a (not symmetric at ({row},{col}))"), Value::Null)
        }
        Some(Err(e)) => return Err(e.into()),
    };
    if cli.json {
        let v = json!({
            "matrix": m.to_json(),
            "det": det.to_json(),
            "leading_minors": minors.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            "positive_definite": verdict_json,
        });
        return Ok((EXIT_OK, format!("{v}\n")));
    }
    let mut out = String::from("matrix:\n");
    for row in m.row_vecs() {
        out.push_str(&format!("  [{}]\n", row.iter().map(&show).collect::<Vec<_>>().join(", ")));
    }
    out.push_str(&format!("det: {}\n", show(&det)));
    out.push_str(&format!("leading minors: [{}]\n", minors.iter().map(&show).collect::<Vec<_>>().join(", ")));
    out.push_str(&format!("positive definite: {verdict}\n"));
    Ok((EXIT_OK, out))
}

fn ordered<R: OrderedRing + ToJson + RingTag + Display>(cli: &Cli, m: &ExactMatrix<R>) -> CliResult {
    let pd = if m.is_square() { Some(m.is_positive_definite()) } else { None };
    matrix_report(cli, m, |v| v.to_string(), pd)
}

fn gram(cli: &Cli, family: Option<Family>, a: u32, k: u32, basis: Option<&str>) -> CliResult {
    if let Some(spec) = basis {
        let pieces: Vec<&str> = spec.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
        if pieces.is_empty() {
            return Err(CliError::Usage("empty --basis".into()));
        }
        let n = match cli.n {
            Some(n) => n,
            None => pieces
                .iter()
                .map(|p| read(p, None).map(|e| e.arity()))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .max()
                .unwrap_or(1),
        };
        let monos = pieces
            .iter()
            .map(|p| {
                let e = read(p, Some(n))?;
                let mut terms = e.terms();
                match (terms.next(), terms.next()) {
                    (Some((m, c)), None) if *c == rat(1) => Ok(m.clone()),
                    _ => Err(CliError::Usage(format!("basis entry `{p}` is not a monomial"))),
                }
            })
            .collect::<Result<Vec<WeylMonomial>, _>>()?;
        return ordered(cli, &gram_euclid(&monos)?);
    }
    match family.expect("clap requires a source") {
        Family::N => ordered(cli, &build_n(a, k)),
        Family::M => {
            let names = ["t".to_string()];
            matrix_report(cli, &build_m(a, k), |p: &MultiPoly| p.format_with(&names), None)
        }
        Family::Mtilde => matrix_report(cli, &build_mtilde(a, k), |p: &MultiPoly| p.to_string(), None),
    }
}

fn matrix(cli: &Cli, input: &str) -> CliResult {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Usage(format!("reading {input}: {e}")))?
    };
    matrix_text(cli, &text)
}

fn matrix_text(cli: &Cli, text: &str) -> CliResult {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    fn load<R: FromJson>(v: &Value) -> Result<R, CliError> {
        Ok(R::from_json(v)?)
    }
    let square = |rows: usize, cols: usize| -> Result<(), CliError> {
        if rows == cols {
            Ok(())
        } else {
            Err(weyl_core::Error::NonSquare { rows, cols }.into())
        }
    };
    match matrix_ring(&v)? {
        "int" => {
            let m: ExactMatrix<num_bigint::BigInt> = load(&v)?;
            square(m.rows(), m.cols())?;
            ordered(cli, &m)
        }
        "rat" => {
            let m: ExactMatrix<BigRat> = load(&v)?;
            square(m.rows(), m.cols())?;
            ordered(cli, &m)
        }
        "qsqrt2" => {
            let m: ExactMatrix<QSqrt2> = load(&v)?;
            square(m.rows(), m.cols())?;
            ordered(cli, &m)
        }
        "poly" => {
            let m: ExactMatrix<MultiPoly> = load(&v)?;
            square(m.rows(), m.cols())?;
            matrix_report(cli, &m, |p| p.to_string(), None)
        }
        other => Err(CliError::Usage(format!("unknown ring `{other}`"))),
    }
}

fn check(cli: &Cli, lemma: &str, ranges: &suite::Ranges) -> CliResult {
    let ids: Vec<&str> = if lemma == "all" { suite::IDS.to_vec() } else { vec![lemma] };
    let mut reports = Vec::new();
    for id in ids {
        let r = suite::run(id, ranges).ok_or_else(|| {
            CliError::Usage(format!("unknown lemma `{id}`; expected all or one of {}", suite::IDS.join(", ")))
        })?;
        reports.push(r);
    }
    let ok = reports.iter().all(suite::Report::passed);
    let out = if cli.json {
        let v = json!({"pass": ok, "checks": reports.iter().map(suite::Report::to_json).collect::<Vec<_>>()});
        format!("{v}\n")
    } else {
        let mut out = String::new();
        for r in &reports {
            match &r.counterexample {
                None => out.push_str(&format!("lemma {}: pass ({} cases; {}) {}\n", r.id, r.cases, r.range, r.title)),
                Some(c) => {
                    out.push_str(&format!("lemma {}: FAIL ({}) {}\n  counterexample: {c}\n", r.id, r.range, r.title))
                }
            }
        }
        out
    };
    Ok((if ok { EXIT_OK } else { EXIT_FAIL }, out))
}

fn fubini_table(cli: &Cli, kmax: u32) -> CliResult {
    let e = WeylElement::from_monomial(WeylMonomial::from_exps(&[1], &[1]), rat(1)).expect("positive arity");
    let mut rows = Vec::new();
    let mut ok = true;
    for k in 0..=kmax {
        let f = fubini(k as usize);
        let values: Vec<QSqrt2> = (0..=k).map(|i| euclid(&e.pow(i), &e.pow(k - i)).expect("same arity")).collect();
        let target = QSqrt2::from_rat(BigRat::from_integer(f.clone()));
        let constant = values.windows(2).all(|w| w[0] == w[1]);
        let matches = values.iter().all(|v| *v == target);
        ok &= constant && matches;
        rows.push((k, f, values, constant, matches));
    }
    let out = if cli.json {
        let table: Vec<Value> = rows
            .iter()
            .map(|(k, f, vals, constant, matches)| {
                json!({
                    "k": k,
                    "fubini": f.to_string(),
                    "values": vals.iter().map(ToJson::to_json).collect::<Vec<_>>(),
                    "independent_of_i": constant,
                    "equals_fubini": matches,
                })
            })
            .collect();
        format!("{}\n", json!({"pass": ok, "rows": table}))
    } else {
        let mut out = String::new();
        for (k, f, vals, constant, matches) in &rows {
            let flag = match (constant, matches) {
                (true, true) => "",
                (false, _) => "  <- depends on i",
                (true, false) => "  <- differs from Fubini(k)",
            };
            let vs = vals.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            out.push_str(&format!("k={k} fubini={f} values: {vs}{flag}\n"));
        }
        out
    };
    Ok((if ok { EXIT_OK } else { EXIT_FAIL }, out))
}

fn conjecture(cli: &Cli, o: search::Outcome) -> CliResult {
    let p = o.params;
    let found = !o.counterexamples.is_empty();
    let code = if found { EXIT_FAIL } else { EXIT_OK };
    if cli.json {
        let v = json!({
            "trials": o.trials,
            "seed": o.seed,
            "n": p.n,
            "max_exp": p.max_exp,
            "max_terms": p.max_terms,
            "coeff_bound": p.coeff_bound,
            "counterexamples": o.counterexamples.iter().map(search::Counterexample::to_json).collect::<Vec<_>>(),
            "min_ratio_approx": o.min_ratio,
        });
        return Ok((code, format!("{v}\n")));
    }
    let mut out = format!(
        "trials: {} seed: {} n: {} max-exp: {} max-terms: {} coeff-bound: {}\ncounterexamples: {}\n",
        o.trials,
        o.seed,
        p.n,
        p.max_exp,
        p.max_terms,
        p.coeff_bound,
        o.counterexamples.len()
    );
    if let Some(r) = o.min_ratio {
        out.push_str(&format!("smallest |X@Y|^2 / (|X|^2 |Y|^2): {r} (approx)\n"));
    }
    if let Some(c) = o.counterexamples.first() {
        out.push_str(&format!(
            "first counterexample at trial {}:\n  X = {}\n  Y = {}\n  |X@Y|^2 = {}\n  |X|^2 |Y|^2 = {}\n  replay: weyl norm2 --n {} \"({}) @ ({})\"\n",
            c.trial, c.x, c.y, c.lhs, c.rhs, p.n, c.x, c.y
        ));
    }
    Ok((code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weyl(args: &[&str]) -> Outcome {
        run(std::iter::once("weyl").chain(args.iter().copied()))
    }

    #[test]
    fn scalar_commands() {
        assert_eq!(weyl(&["euclid", "x*d", "x*d"]).stdout, "3\n");
        assert_eq!(weyl(&["euclid", "x", "x"]).stdout, "sqrt2\n");
        assert_eq!(weyl(&["euclid", "x", "d"]).stdout, "0\n");
        assert_eq!(weyl(&["trace", "x^2*d^2"]).stdout, "2\n");
        assert_eq!(weyl(&["frob", "d", "x"]).stdout, "2\n");
        assert_eq!(weyl(&["frob", "x", "d"]).stdout, "1\n");
        assert_eq!(weyl(&["norm2", "x*d"]).stdout, "3\n");
        let approx = weyl(&["norm2", "x", "--approx"]).stdout;
        assert!(approx.starts_with("sqrt2\napprox: 1.414"), "{approx}");
    }

    #[test]
    fn element_commands() {
        assert_eq!(weyl(&["compose", "d", "x"]).stdout, "1 + x*d\n");
        assert_eq!(weyl(&["compose", "d1", "x2"]).stdout, "x2*d1\n");
        assert_eq!(weyl(&["bar", "x^2*d"]).stdout, "x*d^2\n");
        assert_eq!(weyl(&["project", "x + d + x*d", "--weight", "1"]).stdout, "x\n");
        assert_eq!(weyl(&["project", "x1*d2 + x1", "--multiweight", "1,0"]).stdout, "x1\n");
        assert_eq!(weyl(&["weight", "x^2*d"]).stdout, "weight: 1\nmultiweight: (1)\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(weyl(&["compose", "d*x", "x"]).code, EXIT_USAGE);
        assert_eq!(weyl(&["check", "--lemma", "7"]).code, EXIT_USAGE);
        assert_eq!(weyl(&["check", "--max-n", "-1"]).code, EXIT_USAGE);
        assert_eq!(weyl(&["frobnicate"]).code, EXIT_USAGE);
        assert_eq!(weyl(&["project", "x"]).code, EXIT_USAGE);
        assert_eq!(weyl(&["project", "x", "--multiweight", "1,2"]).code, EXIT_USAGE);
        assert_eq!(weyl(&["--help"]).code, EXIT_OK);
    }

    #[test]
    fn gram_family_n() {
        let o = weyl(&["gram", "--family", "N", "--a", "0", "--k", "1"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("det: 2\n"), "{}", o.stdout);
        assert!(o.stdout.contains("positive definite: true"));
        let b = weyl(&["gram", "--basis", "1;x;d"]);
        assert!(b.stdout.contains("leading minors: [1, sqrt2, 2]"), "{}", b.stdout);
        assert_eq!(weyl(&["gram", "--basis", "1;2*x"]).code, EXIT_USAGE);
        let m = weyl(&["gram", "--family", "M", "--a", "1", "--k", "1"]);
        assert!(m.stdout.contains("det: t\n"), "{}", m.stdout);
    }

    #[test]
    fn matrix_from_json() {
        let cli = Cli::try_parse_from(["weyl", "matrix"]).unwrap();
        let (code, out) =
            matrix_text(&cli, r#"{"rows":2,"cols":2,"ring":"int","entries":[["1","2"],["2","1"]]}"#).unwrap();
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("det: -3") && out.contains("positive definite: false"), "{out}");
        assert!(matrix_text(&cli, r#"{"rows":1,"cols":2,"ring":"int","entries":[["1","2"]]}"#).is_err());
        assert!(matrix_text(&cli, "not json").is_err());
    }

    #[test]
    fn check_and_fubini() {
        assert_eq!(weyl(&["check", "--lemma", "1", "--max-n", "6"]).code, EXIT_OK);
        let f = weyl(&["fubini-table", "--k", "4"]);
        assert_eq!(f.code, EXIT_OK);
        assert!(f.stdout.contains("k=4 fubini=75 values: 75 75 75 75 75\n"), "{}", f.stdout);
    }

    #[test]
    fn json_matches_text() {
        let t = weyl(&["euclid", "x*d", "x*d"]).stdout;
        let j: Value = serde_json::from_str(&weyl(&["--json", "euclid", "x*d", "x*d"]).stdout).unwrap();
        assert_eq!(j["text"].as_str().unwrap(), t.trim());
        assert_eq!(QSqrt2::from_json(&j["value"]).unwrap(), QSqrt2::from_ints(3, 0));
        let e: Value = serde_json::from_str(&weyl(&["compose", "--json", "d", "x"]).stdout).unwrap();
        assert_eq!(WeylElement::from_json(&e["element"]).unwrap(), parse("1 + x*d", None).unwrap());
    }
}
