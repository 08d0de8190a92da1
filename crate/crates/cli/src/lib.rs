//! Argument handling and rendering for the `chebvar` binary.
//!
//! Exit codes: 0 on success, 1 when a suite, comparison or certificate fails,
//! 2 on usage or parameter errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chebvar_core::bridge::{
    check_phi_irreducible_p3, irreducible_by_parity_gcd, minimality_report, phi_closed_p3, phi_recursive_p3, xz_to_coords,
    MinimalityTarget,
};
use chebvar_core::oracle::defining_poly;
use chebvar_core::suite::{run_suite, SuiteName};
use chebvar_core::twist::{check_r_tilde_irreducible, l_n, l_prime_n, r_m, MIRROR_RULE};
use chebvar_core::{BiPoly, BridgeParams, CoordSystem, Error, IrreducibilityReport, UniPoly, Var};
use num_bigint::BigInt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "chebvar", version, about = "SL2 character varieties of twist knots and b(p,3)")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Defining polynomial of the twist knot K_m.
    Twist {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Form::Trace)]
        form: Form,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Nonabelian factor Phi_w of b(p,q).
    Bridge {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 3)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, default_value = "bridge-xz")]
        coords: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite up to a bound.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max: u32,
        /// Include wall time in the output (makes it run-dependent).
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Irreducibility certificate: --target twist:M, bridge3:P or split:F/G.
    Irreducible {
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Minimality record: --target twist:M or bridge3:P.
    Minimality {
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Trace,
    Skein,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursion,
    Closed,
    Oracle,
    All,
}

/// Outcome of a command: exit code plus what goes to stdout and stderr.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

fn usage_or_fail(err: Error) -> Outcome {
    match err {
        Error::InvalidParams(_) | Error::OutOfScope(_) | Error::Decode(_) | Error::NegativeIndex(_) => {
            Outcome::usage(err)
        }
        other => Outcome { code: EXIT_FAIL, stdout: String::new(), stderr: format!("error: {other}\n") },
    }
}

fn poly_json(p: &BiPoly) -> Value {
    serde_json::to_value(p).expect("polynomials always serialize")
}

fn emit(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string(&value).expect("json values always serialize");
            s.push('\n');
            s
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Twist { m, form, format } => cmd_twist(m, form, format),
        Command::Bridge { p, q, method, coords, format } => cmd_bridge(p, q, method, &coords, format),
        Command::Verify { suite, max, timing, format } => cmd_verify(&suite, max, timing, format),
        Command::Irreducible { target, format } => cmd_irreducible(&target, format),
        Command::Minimality { target, format } => cmd_minimality(&target, format),
    }
}

pub fn cmd_twist(m: i64, form: Form, format: Format) -> Outcome {
    if m < 0 {
        return Outcome::usage(MIRROR_RULE);
    }
    let (poly, coords) = match form {
        Form::Skein => match r_m(m) {
            Ok(p) => (p, CoordSystem::Skein),
            Err(e) => return usage_or_fail(e),
        },
        Form::Trace if m % 2 == 0 => (l_n(m / 2), CoordSystem::TraceEven),
        Form::Trace => (l_prime_n((m + 1) / 2), CoordSystem::TraceOdd),
    };
    let knot = format!("K_{m}");
    let text = format!("{knot} [{coords}]: {poly}\n");
    let value = json!({"knot": knot, "form": form_name(form), "coords": coords.tag(), "poly": poly_json(&poly)});
    Outcome::ok(emit(format, text, value))
}

fn form_name(form: Form) -> &'static str {
    match form {
        Form::Trace => "trace",
        Form::Skein => "skein",
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Recursion => "recursion",
        Method::Closed => "closed",
        Method::Oracle => "oracle",
        Method::All => "all",
    }
}

pub fn cmd_bridge(p: i64, q: i64, method: Method, coords: &str, format: Format) -> Outcome {
    let params = match BridgeParams::new(p, q) {
        Ok(v) => v,
        Err(e) => return usage_or_fail(e),
    };
    let coords: CoordSystem = match coords.parse() {
        Ok(CoordSystem::Skein) => return Outcome::usage("skein coordinates apply to twist knots only"),
        Ok(c) => c,
        Err(e) => return usage_or_fail(e),
    };
    if matches!(method, Method::Recursion | Method::Closed) && q != 3 {
        return Outcome::usage(format!("--method {} needs --q 3", method_name(method)));
    }
    let knot = params.to_string();
    let q3 = |f: fn(i64) -> chebvar_core::Result<BiPoly>| f(p).and_then(|phi| xz_to_coords(&phi, coords));
    match method {
        Method::Recursion | Method::Closed => {
            let computed = if method == Method::Recursion { q3(phi_recursive_p3) } else { q3(phi_closed_p3) };
            let poly = match computed {
                Ok(v) => v,
                Err(e) => return usage_or_fail(e),
            };
            let text = format!("{knot} [{coords}]: {poly}\n");
            let value = json!({
                "knot": knot, "method": method_name(method), "source": method_name(method),
                "coords": coords.tag(), "poly": poly_json(&poly),
            });
            Outcome::ok(emit(format, text, value))
        }
        Method::Oracle => match defining_poly(params, coords) {
            Ok(o) => {
                let text = format!("{knot} [{coords}]: {}\noracle sign {}\n", o.poly, o.sign);
                let value = json!({
                    "knot": knot, "method": "oracle", "source": "oracle", "sign": o.sign,
                    "coords": coords.tag(), "poly": poly_json(&o.poly),
                });
                Outcome::ok(emit(format, text, value))
            }
            Err(e) => usage_or_fail(e),
        },
        Method::All => {
            let oracle = match defining_poly(params, coords) {
                Ok(o) => o,
                Err(e) => return usage_or_fail(e),
            };
            let mut results = vec![("oracle", oracle.poly.clone())];
            if q == 3 {
                for (name, computed) in [("recursion", q3(phi_recursive_p3)), ("closed", q3(phi_closed_p3))] {
                    match computed {
                        Ok(v) => results.push((name, v)),
                        Err(e) => return usage_or_fail(e),
                    }
                }
            }
            let agree = results.iter().all(|(_, v)| *v == oracle.poly);
            let names: Vec<&str> = results.iter().map(|(n, _)| *n).collect();
            let verdict = if agree {
                format!("{} methods agree (oracle sign {})", results.len(), oracle.sign)
            } else {
                format!("methods disagree ({}; oracle sign {})", names.join(", "), oracle.sign)
            };
            let mut text = String::new();
            for (name, v) in &results {
                text.push_str(&format!("{knot} [{coords}] {name}: {v}\n"));
            }
            text.push_str(&verdict);
            text.push('\n');
            let polys: Vec<Value> = results
                .iter()
                .map(|(n, v)| json!({"source": n, "poly": poly_json(v)}))
                .collect();
            let value = json!({
                "knot": knot, "method": "all", "coords": coords.tag(), "methods": names,
                "agree": agree, "sign": oracle.sign, "results": polys,
            });
            Outcome::with_code(if agree { EXIT_OK } else { EXIT_FAIL }, emit(format, text, value))
        }
    }
}

pub fn cmd_verify(suite: &str, max: u32, timing: bool, format: Format) -> Outcome {
    let suite: SuiteName = match suite.parse() {
        Ok(s) => s,
        Err(e) => return usage_or_fail(e),
    };
    let result = match run_suite(suite, max) {
        Ok(r) => r,
        Err(e) => return usage_or_fail(e),
    };
    let code = if result.passed() { EXIT_OK } else { EXIT_FAIL };
    Outcome::with_code(code, emit(format, result.render_text(timing), result.to_json(timing)))
}

/// Target of `irreducible` and `minimality`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Knot(MinimalityTarget),
    /// `f(z) + x^2 g(z)` given by coefficient lists, lowest degree first.
    Split(UniPoly, UniPoly),
}

fn parse_coeffs(list: &str) -> Result<UniPoly, Error> {
    let coeffs = list
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidParams(format!("`{c}` is not an integer coefficient")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(Var::Z, coeffs))
}

/// Parses `twist:M`, `bridge3:P` or `split:F/G`, where `F` and `G` are
/// comma-separated coefficients of `f` and `g`, lowest degree first.
pub fn parse_target(target: &str) -> Result<Target, Error> {
    let (kind, value) = target.split_once(':').ok_or_else(|| {
        Error::InvalidParams(format!("target `{target}` is not of the form twist:M, bridge3:P or split:F/G"))
    })?;
    if kind == "split" {
        let (f, g) = value
            .split_once('/')
            .ok_or_else(|| Error::InvalidParams(format!("split target `{value}` needs F/G")))?;
        return Ok(Target::Split(parse_coeffs(f)?, parse_coeffs(g)?));
    }
    let n: i64 = value
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParams(format!("`{value}` is not an integer")))?;
    match kind {
        "twist" => Ok(Target::Knot(MinimalityTarget::Twist(n))),
        "bridge3" => Ok(Target::Knot(MinimalityTarget::Bridge3(n))),
        other => Err(Error::InvalidParams(format!("unknown target kind `{other}`; use twist, bridge3 or split"))),
    }
}

fn report_text(knot: &str, r: &IrreducibilityReport) -> String {
    let gap = r.degree_gap.map_or("undefined".to_string(), |g| g.to_string());
    format!(
        "knot: {knot}\nf: {}\ng: {}\ndegree_gap: {gap}\ngcd: {}\nverdict: {}\n",
        r.f, r.g, r.gcd, r.verdict
    )
}

pub fn cmd_irreducible(target: &str, format: Format) -> Outcome {
    let target = match parse_target(target) {
        Ok(t) => t,
        Err(e) => return usage_or_fail(e),
    };
    let (text, value, pass) = match target {
        Target::Split(f, g) => {
            let r = irreducible_by_parity_gcd(&f, &g);
            let mut value = r.to_json();
            value["knot"] = json!(null);
            value["coords"] = json!(CoordSystem::BridgeXZ.tag());
            (report_text("f(z) + x^2 g(z)", &r), value, r.is_irreducible())
        }
        Target::Knot(MinimalityTarget::Twist(m)) => {
            if m < 0 {
                return Outcome::usage(MIRROR_RULE);
            }
            match check_r_tilde_irreducible(m) {
                Ok(r) => {
                    let knot = format!("K_{m}");
                    let mut value = r.to_json();
                    value["knot"] = json!(knot);
                    value["coords"] = json!(CoordSystem::Skein.tag());
                    (report_text(&knot, &r), value, r.is_irreducible())
                }
                Err(e) => return usage_or_fail(e),
            }
        }
        Target::Knot(MinimalityTarget::Bridge3(p)) => match check_phi_irreducible_p3(p) {
            Ok(c) => {
                let knot = format!("b({p},3)");
                let mut text = report_text(&knot, &c.report);
                let (a, b, g) = c.index_gcd;
                text.push_str(&format!("index gcd: gcd({a}, {b}) = {g}\n"));
                for (label, g) in &c.factor_gcds {
                    text.push_str(&format!("gcd(P, {label}) = {g}\n"));
                }
                let mut value = c.to_json();
                value["coords"] = json!(CoordSystem::BridgeXZ.tag());
                (text, value, c.passes())
            }
            Err(e) => return usage_or_fail(e),
        },
    };
    Outcome::with_code(if pass { EXIT_OK } else { EXIT_FAIL }, emit(format, text, value))
}

pub fn cmd_minimality(target: &str, format: Format) -> Outcome {
    let target = match parse_target(target) {
        Ok(Target::Knot(t)) => t,
        Ok(Target::Split(..)) => return Outcome::usage("minimality needs a knot target: twist:M or bridge3:P"),
        Err(e) => return usage_or_fail(e),
    };
    match minimality_report(target) {
        Ok(r) => {
            let code = if r.minimal { EXIT_OK } else { EXIT_FAIL };
            Outcome::with_code(code, emit(format, r.to_string(), r.to_json()))
        }
        Err(e) => usage_or_fail(e),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(rendered)
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            }
        }
    }
}

/// Writes the outcome's streams and returns its exit code.
pub fn finish(outcome: &Outcome) -> i32 {
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("chebvar").chain(args.iter().copied()))
    }

    #[test]
    fn negative_m_cites_mirror_rule() {
        let out = run_args(&["twist", "--m", "-3"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("X(K_{-m})=X(K_{m-1})"));
    }

    #[test]
    fn twist_skein_m1() {
        // (y + 2)(y - 1 + x^2)
        let out = run_args(&["twist", "--m", "1", "--form", "skein"]);
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout, "K_1 [skein]: x^2*y + 2*x^2 + y^2 + y - 2\n");
    }

    #[test]
    fn bridge_errors() {
        assert_eq!(run_args(&["bridge", "--p", "9", "--q", "3"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bridge", "--p", "7", "--q", "2", "--method", "closed"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bridge", "--p", "7", "--coords", "skein"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bridge", "--p", "7", "--coords", "polar"]).code, EXIT_USAGE);
    }

    #[test]
    fn bridge_all_agree() {
        let out = run_args(&["bridge", "--p", "7", "--q", "3", "--method", "all"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.ends_with("3 methods agree (oracle sign -1)\n"), "{}", out.stdout);
    }

    #[test]
    fn targets() {
        assert_eq!(parse_target("twist:4").unwrap(), Target::Knot(MinimalityTarget::Twist(4)));
        assert_eq!(parse_target("bridge3:7").unwrap(), Target::Knot(MinimalityTarget::Bridge3(7)));
        assert_eq!(
            parse_target("split:-1,0,1/-1,1").unwrap(),
            Target::Split(UniPoly::from_i64s(Var::Z, &[-1, 0, 1]), UniPoly::from_i64s(Var::Z, &[-1, 1]))
        );
        assert!(parse_target("split:1,x/1").is_err());
        assert!(parse_target("bridge5:7").is_err());
        assert!(parse_target("twist").is_err());
        assert_eq!(run_args(&["irreducible", "--target", "bridge3:6"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["minimality", "--target", "twist:1"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["minimality", "--target", "split:0,1/1"]).code, EXIT_USAGE);
        // gcd z - 1: the criterion does not apply, which is a certificate failure
        assert_eq!(run_args(&["irreducible", "--target", "split:-1,0,1/-1,1"]).code, EXIT_FAIL);
        assert_eq!(run_args(&["irreducible", "--target", "split:0,1/1"]).code, EXIT_OK);
    }

    #[test]
    fn unknown_suite_is_usage() {
        assert_eq!(run_args(&["verify", "--suite", "nope", "--max", "3"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
    }
}
