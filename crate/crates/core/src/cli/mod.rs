//! The `thetarep` command-line frontend.
//!
//! Every command prints one JSON envelope `{command, inputs, result, elapsed_ms}`
//! (the `rep` command can also print CSV or plain text). Exit codes: 0 success,
//! 1 usage or parse error, 2 domain error, 3 self-check or oracle failure.

mod cache;
mod selfcheck;

use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::gauge::{self, BundleTopology, HolonomyClass};
use crate::obstruct::{self, ObstructionCase, ObstructionReport, WitnessVector};
use crate::repnum::{self, QuadForm, RepKind, RepTable};

pub use cache::{CacheEntry, TableCache};

/// Environment variable naming a default table cache.
pub const CACHE_ENV: &str = "THETAREP_CACHE";

#[derive(Parser, Debug)]
#[command(name = "thetarep", version, about = "Exact theta-series representation numbers and SU(n+1) charge arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Representation numbers r / R for sums of squares or an even form
    Rep(RepArgs),
    /// Chern-Weil charge (and optionally the Chern-Simons value)
    Charge(ChargeArgs),
    /// Critical values of the charge over the holonomy region
    Extrema(ExtremaArgs),
    /// Irreducible-representation obstruction scan
    Obstruct(ObstructArgs),
    /// Run the built-in cross-validation suites
    Selfcheck(SelfcheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["squares", "form"])))]
#[command(group(ArgGroup::new("range").required(true).args(["n", "nmax"])))]
struct RepArgs {
    /// `r` (all solutions) or `R` (all coordinates nonzero)
    #[arg(long)]
    kind: String,
    /// Number of squares
    #[arg(long)]
    squares: Option<u32>,
    /// Form file path, or `an:N` for the A_n-type form
    #[arg(long)]
    form: Option<String>,
    /// Single N
    #[arg(long)]
    n: Option<usize>,
    /// Table for N = 0..=NMAX
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cross-check every count against brute-force enumeration
    #[arg(long)]
    oracle: bool,
    /// JSON table cache (defaults to $THETAREP_CACHE when set)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ChargeArgs {
    #[arg(long, allow_hyphen_values = true)]
    k: String,
    /// Monopole numbers, comma-separated, summing to 0
    #[arg(long, allow_hyphen_values = true)]
    l: String,
    /// Holonomy parameters, comma-separated rationals `p/q`
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    sigma: String,
    /// Also print the Chern-Simons value mod 1
    #[arg(long)]
    cs: bool,
    /// Reduce alpha mod 1 and sort instead of requiring it in canonical form
    #[arg(long)]
    canonicalize: bool,
}

#[derive(Args, Debug)]
struct ExtremaArgs {
    #[arg(long, allow_hyphen_values = true)]
    k: String,
    #[arg(long, allow_hyphen_values = true)]
    l: String,
    #[arg(long, allow_hyphen_values = true)]
    sigma: String,
    /// Validate against an exact scan of the 1/D grid
    #[arg(long)]
    grid: Option<u32>,
    /// Also consider faces where any subset of coordinates vanishes
    #[arg(long)]
    all_subsets: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CaseArg {
    Diagonal,
    General,
}

#[derive(Args, Debug)]
struct ObstructArgs {
    /// n for SU(n+1)
    #[arg(long)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    sigma: String,
    #[arg(long, value_enum, default_value_t = CaseArg::General)]
    case: CaseArg,
    /// Include concrete monopole vectors compatible with a flat connection
    #[arg(long)]
    witnesses: bool,
    /// Enumerate monopole vectors of both signs
    #[arg(long)]
    both_signs: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    #[arg(long, value_enum, default_value_t = Level::Quick)]
    level: Level,
}

/// Result of one invocation: what to print and how to exit.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Ctx {
    stdout: String,
    stderr: String,
}

impl Ctx {
    fn warn(&mut self, msg: String) {
        self.stderr.push_str("warning: ");
        self.stderr.push_str(&msg);
        self.stderr.push('\n');
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs: Value,
    result: Value,
    elapsed_ms: u64,
}

fn envelope(command: &str, inputs: Value, result: Value, started: Instant) -> String {
    let env = Envelope {
        command,
        inputs,
        result,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    let mut s = serde_json::to_string(&env).expect("envelope serializes");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let started = Instant::now();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut ctx = Ctx {
        stdout: String::new(),
        stderr: String::new(),
    };
    let result = match cli.command {
        Command::Rep(a) => cmd_rep(a, &mut ctx, started),
        Command::Charge(a) => cmd_charge(a, &mut ctx, started),
        Command::Extrema(a) => cmd_extrema(a, &mut ctx, started),
        Command::Obstruct(a) => cmd_obstruct(a, &mut ctx, started),
        Command::Selfcheck(a) => cmd_selfcheck(a, &mut ctx, started),
    };
    let code = match result {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            ctx.stderr.push_str(&format!("error: {m}\n"));
            1
        }
        Err(Failure::Domain(m)) => {
            ctx.stderr.push_str(&format!("error: {m}\n"));
            2
        }
        Err(Failure::Check(m)) => {
            ctx.stderr.push_str(&format!("check failed: {m}\n"));
            3
        }
    };
    Outcome {
        code,
        stdout: ctx.stdout,
        stderr: ctx.stderr,
    }
}

fn parse_int(name: &str, s: &str) -> Result<i64, Failure> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("--{name}: {s:?} is not an integer")))
}

fn parse_int_list(name: &str, s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',').map(|tok| parse_int(name, tok)).collect()
}

/// Parses `p/q` or `p`; no whitespace.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(Error::Parse(format!("{s:?} is not a rational")));
    }
    BigRational::from_str(s).map_err(|_| Error::Parse(format!("{s:?} is not a rational")))
}

fn parse_rational_list(name: &str, s: &str) -> Result<Vec<BigRational>, Failure> {
    s.split(',')
        .map(|tok| parse_rational(tok).map_err(|e| Failure::Usage(format!("--{name}: {e}"))))
        .collect()
}

fn rats(v: &[BigRational]) -> Vec<String> {
    v.iter().map(BigRational::to_string).collect()
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

enum Source {
    Squares(u32),
    Form(QuadForm),
}

fn parse_form_arg(arg: &str) -> Result<QuadForm, Failure> {
    if let Some(n) = arg.strip_prefix("an:") {
        let n: usize = n
            .parse()
            .map_err(|_| Failure::Usage(format!("--form {arg:?}: expected an:N")))?;
        return Ok(QuadForm::an(n)?);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Failure::Usage(format!("--form {arg}: {e}")))?;
    Ok(QuadForm::parse(&text)?)
}

fn cmd_rep(a: RepArgs, ctx: &mut Ctx, started: Instant) -> Result<(), Failure> {
    let nonvanishing = match a.kind.as_str() {
        "r" => false,
        "R" => true,
        other => return Err(Failure::Usage(format!("--kind must be r or R, got {other:?}"))),
    };
    let source = match (a.squares, &a.form) {
        (Some(0), _) => return Err(Failure::Usage("--squares must be at least 1".into())),
        (Some(k), None) => Source::Squares(k),
        (None, Some(arg)) => Source::Form(parse_form_arg(arg)?),
        _ => unreachable!("clap enforces exactly one source"),
    };
    let nmax = a.n.or(a.nmax).expect("clap enforces a range");

    let cache_path = a.cache.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let table = match cache_path {
        Some(path) => {
            let mut warnings = Vec::new();
            let mut cache = TableCache::open(&path, &mut |w| warnings.push(w));
            let (kind, key) = cache_key(&source, nonvanishing);
            let kind_for_check = table_kind(&source, nonvanishing);
            let validate = |c: &[BigInt]| RepTable::new(kind_for_check.clone(), c.to_vec()).is_ok();
            let hit = cache.lookup(&kind, &key, nmax, &validate, &mut |w| warnings.push(w));
            let table = match hit {
                Some(counts) => RepTable::new(table_kind(&source, nonvanishing), counts)?,
                None => {
                    let t = compute_table(&source, nonvanishing, nmax)?;
                    cache.store(&kind, &key, t.counts());
                    if let Err(e) = cache.save() {
                        warnings.push(format!("could not write cache {}: {e}", path.display()));
                    }
                    t
                }
            };
            for w in warnings {
                ctx.warn(w);
            }
            table
        }
        None => compute_table(&source, nonvanishing, nmax)?,
    };

    let range: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (0..=nmax).collect(),
    };

    let mut mismatch = None;
    if a.oracle {
        for &n in &range {
            let expect = oracle_count(&source, nonvanishing, n as u64);
            let got = table.count(n)?;
            if &expect != got {
                mismatch = Some(format!("N={n}: generating function gives {got}, brute force gives {expect}"));
                break;
            }
        }
    }

    match a.format {
        Format::Json => {
            let mut inputs = serde_json::Map::new();
            inputs.insert("kind".into(), json!(a.kind));
            if let Some(k) = a.squares {
                inputs.insert("squares".into(), json!(k));
            }
            if let Some(f) = &a.form {
                inputs.insert("form".into(), json!(f));
            }
            if let Some(n) = a.n {
                inputs.insert("n".into(), json!(n));
            }
            if let Some(m) = a.nmax {
                inputs.insert("nmax".into(), json!(m));
            }
            let result = match a.n {
                Some(n) => json!({ "N": n, "count": table.count(n)?.to_string() }),
                None => json!({ "nmax": nmax, "counts": strings(table.counts()) }),
            };
            ctx.stdout.push_str(&envelope("rep", Value::Object(inputs), result, started));
        }
        Format::Csv => {
            ctx.stdout.push_str("N,count\n");
            for &n in &range {
                ctx.stdout.push_str(&format!("{n},{}\n", table.count(n)?));
            }
        }
        Format::Plain => {
            for &n in &range {
                ctx.stdout.push_str(&format!("{n} {}\n", table.count(n)?));
            }
        }
    }
    match mismatch {
        Some(m) => Err(Failure::Check(m)),
        None => Ok(()),
    }
}

fn table_kind(source: &Source, nonvanishing: bool) -> RepKind {
    match (source, nonvanishing) {
        (Source::Squares(k), false) => RepKind::Squares(*k),
        (Source::Squares(k), true) => RepKind::NonvanishingSquares(*k),
        (Source::Form(q), false) => RepKind::Form(q.clone()),
        (Source::Form(q), true) => RepKind::NonvanishingForm(q.clone()),
    }
}

fn cache_key(source: &Source, nonvanishing: bool) -> (String, String) {
    let prefix = if nonvanishing { "R" } else { "r" };
    match source {
        Source::Squares(k) => (format!("{prefix}_squares"), k.to_string()),
        Source::Form(q) => (format!("{prefix}_form"), q.fingerprint()),
    }
}

fn compute_table(source: &Source, nonvanishing: bool, nmax: usize) -> Result<RepTable, Error> {
    Ok(match (source, nonvanishing) {
        (Source::Squares(k), false) => repnum::r_squares_table(*k, nmax),
        (Source::Squares(k), true) => repnum::nonvanishing_squares_table(*k, nmax),
        (Source::Form(q), false) => repnum::form_table(q, nmax),
        (Source::Form(q), true) => repnum::nonvanishing_form_table(q, nmax)?,
    })
}

fn oracle_count(source: &Source, nonvanishing: bool, n: u64) -> BigInt {
    match source {
        Source::Squares(k) => repnum::brute_squares(*k, n, nonvanishing),
        Source::Form(_) if n == 0 => BigInt::from(u8::from(!nonvanishing)),
        Source::Form(q) => repnum::brute_form(q, n, nonvanishing),
    }
}

fn cmd_charge(a: ChargeArgs, ctx: &mut Ctx, started: Instant) -> Result<(), Failure> {
    let k = parse_int("k", &a.k)?;
    let l = parse_int_list("l", &a.l)?;
    let alpha = parse_rational_list("alpha", &a.alpha)?;
    let sigma = parse_int("sigma", &a.sigma)?;
    let b = BundleTopology::new(k, l.clone(), sigma)?;
    let h = if a.canonicalize {
        HolonomyClass::canonicalize(&alpha)?
    } else {
        HolonomyClass::new(alpha.clone())?
    };
    let charge = gauge::chern_weil_charge(&b, &h)?;
    let mut result = serde_json::Map::new();
    result.insert("charge".into(), json!(charge.to_string()));
    if a.canonicalize {
        result.insert("alpha".into(), json!(rats(h.alpha())));
    }
    if a.cs {
        result.insert("chern_simons".into(), json!(gauge::chern_simons(&b, &h)?.to_string()));
    }
    let inputs = json!({
        "k": k,
        "l": l,
        "alpha": rats(&alpha),
        "sigma": sigma,
        "cs": a.cs,
        "canonicalize": a.canonicalize,
    });
    ctx.stdout.push_str(&envelope("charge", inputs, Value::Object(result), started));
    Ok(())
}

fn cmd_extrema(a: ExtremaArgs, ctx: &mut Ctx, started: Instant) -> Result<(), Failure> {
    let k = parse_int("k", &a.k)?;
    let l = parse_int_list("l", &a.l)?;
    let sigma = parse_int("sigma", &a.sigma)?;
    let b = BundleTopology::new(k, l.clone(), sigma)?;
    let report = gauge::charge_extrema(&b, a.all_subsets)?;
    let candidates: Vec<Value> = report
        .candidates
        .iter()
        .map(|c| {
            let mut m = serde_json::Map::new();
            m.insert("stratum".into(), json!(c.stratum.to_string()));
            m.insert("alpha".into(), json!(rats(&c.alpha_point)));
            m.insert("value".into(), json!(c.value.to_string()));
            m.insert("closed_form".into(), json!(c.closed_form.to_string()));
            if let Some(s) = c.s_j {
                m.insert("s_j".into(), json!(s));
            }
            m.insert("feasible".into(), json!(c.feasible));
            Value::Object(m)
        })
        .collect();
    let defects = report.defects().count();
    let mut result = serde_json::Map::new();
    result.insert("base_value".into(), json!(report.base_value.to_string()));
    result.insert("candidates".into(), Value::Array(candidates));
    result.insert("feasible_min".into(), json!(report.feasible_min.to_string()));
    result.insert("feasible_max".into(), json!(report.feasible_max.to_string()));
    result.insert("defects".into(), json!(defects));
    if let Some(d) = a.grid {
        let scan = gauge::charge_grid_scan(&b, d)?;
        result.insert(
            "grid".into(),
            json!({
                "denominator": scan.denominator,
                "points": scan.points,
                "min": scan.min.to_string(),
                "max": scan.max.to_string(),
                "argmin": rats(&scan.argmin),
                "argmax": rats(&scan.argmax),
                "brackets_feasible": scan.brackets(&b, &report),
            }),
        );
    }
    let inputs = json!({
        "k": k,
        "l": l,
        "sigma": sigma,
        "grid": a.grid,
        "all_subsets": a.all_subsets,
    });
    ctx.stdout.push_str(&envelope("extrema", inputs, Value::Object(result), started));
    if defects > 0 {
        return Err(Failure::Check(format!("{defects} closed-form critical values disagree with substitution")));
    }
    Ok(())
}

#[derive(Serialize)]
struct ObstructResult<'a> {
    #[serde(flatten)]
    report: &'a ObstructionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_vectors: Option<Vec<WitnessVector>>,
}

fn cmd_obstruct(a: ObstructArgs, ctx: &mut Ctx, started: Instant) -> Result<(), Failure> {
    let sigma = parse_int("sigma", &a.sigma)?;
    let case = match a.case {
        CaseArg::Diagonal => ObstructionCase::Diagonal,
        CaseArg::General => ObstructionCase::General,
    };
    let report = obstruct::obstruction(a.rank, sigma, case)?;
    let witness_vectors = if a.witnesses {
        Some(obstruct::witness_enumerate(a.rank, sigma, a.both_signs)?)
    } else {
        None
    };
    let result = serde_json::to_value(ObstructResult {
        report: &report,
        witness_vectors,
    })
    .expect("report serializes");
    let inputs = json!({
        "rank": a.rank,
        "sigma": sigma,
        "case": case.to_string(),
        "witnesses": a.witnesses,
    });
    ctx.stdout.push_str(&envelope("obstruct", inputs, result, started));
    Ok(())
}

fn cmd_selfcheck(a: SelfcheckArgs, ctx: &mut Ctx, started: Instant) -> Result<(), Failure> {
    let checks = selfcheck::run(a.level);
    let passed = checks.iter().all(|c| c.passed);
    let result = json!({
        "level": a.level,
        "passed": passed,
        "checks": checks,
    });
    ctx.stdout.push_str(&envelope("selfcheck", json!({ "level": a.level }), result, started));
    match checks.into_iter().find(|c| !c.passed) {
        Some(c) => Err(Failure::Check(format!("{}: {}", c.name, c.detail))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("thetarep").chain(args.iter().copied()))
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3/6").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rational("4").unwrap().to_string(), "4");
        assert!(parse_rational("1/ 2").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&["rep", "--kind", "x", "--squares", "2", "--n", "1"]).code, 1);
        assert_eq!(run_args(&["rep", "--kind", "r", "--n", "1"]).code, 1);
        assert_eq!(run_args(&["rep", "--kind", "r", "--squares", "2", "--form", "an:2", "--n", "1"]).code, 1);
        assert_eq!(run_args(&["charge", "--k", "0", "--l", "1,-1", "--alpha", "1/x,1/2", "--sigma", "4"]).code, 1);
        assert_eq!(run_args(&["bogus"]).code, 1);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn domain_errors_exit_two() {
        let dir = tempfile::tempdir().unwrap();
        let odd = dir.path().join("odd.txt");
        std::fs::write(&odd, "2\n3 1\n1 2\n").unwrap();
        let out = run_args(&["rep", "--kind", "r", "--form", odd.to_str().unwrap(), "--n", "1"]);
        assert_eq!(out.code, 2, "{}", out.stderr);
        let indefinite = dir.path().join("indef.txt");
        std::fs::write(&indefinite, "2\n2 3\n3 2\n").unwrap();
        assert_eq!(run_args(&["rep", "--kind", "r", "--form", indefinite.to_str().unwrap(), "--n", "1"]).code, 2);
        assert_eq!(run_args(&["charge", "--k", "0", "--l", "1,1", "--alpha", "0,0", "--sigma", "4"]).code, 2);
        assert_eq!(run_args(&["extrema", "--k", "0", "--l", "1,-1", "--sigma", "0"]).code, 2);
        assert_eq!(run_args(&["obstruct", "--rank", "1", "--sigma", "0"]).code, 2);
    }

    #[test]
    fn formats() {
        let out = run_args(&["rep", "--kind", "r", "--squares", "2", "--nmax", "2", "--format", "csv"]);
        assert_eq!(out.stdout, "N,count\n0,1\n1,4\n2,4\n");
        let out = run_args(&["rep", "--kind", "R", "--squares", "2", "--nmax", "2", "--format", "plain"]);
        assert_eq!(out.stdout, "0 0\n1 0\n2 4\n");
    }

    #[test]
    fn oracle_agrees_and_keeps_output() {
        let plain = run_args(&["rep", "--kind", "R", "--form", "an:3", "--nmax", "12", "--format", "plain"]);
        let checked = run_args(&["rep", "--kind", "R", "--form", "an:3", "--nmax", "12", "--format", "plain", "--oracle"]);
        assert_eq!(checked.code, 0, "{}", checked.stderr);
        assert_eq!(plain.stdout, checked.stdout);
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let p = path.to_str().unwrap();
        let first = run_args(&["rep", "--kind", "r", "--squares", "3", "--nmax", "20", "--format", "plain", "--cache", p]);
        assert_eq!(first.code, 0);
        assert!(path.exists());
        let second = run_args(&["rep", "--kind", "r", "--squares", "3", "--n", "11", "--format", "plain", "--cache", p]);
        assert_eq!(second.stdout, "11 24\n");
        assert!(second.stderr.is_empty());

        // a tampered count breaks the table invariant and is ignored
        let text = std::fs::read_to_string(&path).unwrap().replacen("\"1\"", "\"-5\"", 1);
        std::fs::write(&path, text).unwrap();
        let third = run_args(&["rep", "--kind", "r", "--squares", "3", "--n", "11", "--format", "plain", "--cache", p]);
        assert_eq!(third.stdout, "11 24\n");
        assert!(third.stderr.contains("warning"));

        std::fs::write(&path, "garbage").unwrap();
        let fourth = run_args(&["rep", "--kind", "r", "--squares", "3", "--n", "11", "--format", "plain", "--cache", p]);
        assert_eq!(fourth.stdout, "11 24\n");
        assert!(fourth.stderr.contains("corrupt"));
    }

    #[test]
    fn charge_with_cs_and_canonicalize() {
        let out = run_args(&["charge", "--k", "0", "--l", "1,-1", "--alpha", "1/2,1/2", "--sigma", "1", "--cs"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains(r#""chern_simons":"3/4""#), "{}", out.stdout);
        let out = run_args(&["charge", "--k", "0", "--l", "1,-1", "--alpha", "-1/2,3/2", "--sigma", "1", "--canonicalize"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains(r#""alpha":["1/2","1/2"]"#), "{}", out.stdout);
    }

    #[test]
    fn extrema_grid_and_subsets() {
        let out = run_args(&["extrema", "--k", "3", "--l", "0,0,0", "--sigma", "-2", "--grid", "6"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains(r#""brackets_feasible":true"#), "{}", out.stdout);
        let out = run_args(&["extrema", "--k", "0", "--l", "2,-1,-1", "--sigma", "3", "--all-subsets"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("subset(kept=0+2,m=1)"), "{}", out.stdout);
    }
}
