//! Named verification suites over index ranges, with deterministic summaries.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bridge::{
    check_phi_irreducible_p3, phi_closed_p3, phi_recursive_p3, valid_p3, valid_params, BridgeParams,
};
use crate::chebyshev::{
    check_adjacent_product, check_cassini, check_first_kind, check_product_sum_row, check_reflection,
    check_square_sum, cheb_s,
};
use crate::error::{Error, Result};
use crate::oracle::{abelian_slice, defining_poly, twist_delta_sign};
use crate::poly::{IdentityCheck, Zeroable};
use crate::twist::{
    check_r_tilde_irreducible, check_t_factorization, replay_l_n, replay_l_prime_n, CoordSystem, TwistKnot,
    XSequence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Chebyshev,
    Twist,
    Maps,
    Bridge3,
    Oracle,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] =
        [SuiteName::Chebyshev, SuiteName::Twist, SuiteName::Maps, SuiteName::Bridge3, SuiteName::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Chebyshev => "chebyshev",
            SuiteName::Twist => "twist",
            SuiteName::Maps => "maps",
            SuiteName::Bridge3 => "bridge3",
            SuiteName::Oracle => "oracle",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::Decode(format!("unknown suite '{s}'")))
    }
}

/// A failed case: its identifier and a digest of the offending difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub id: String,
    pub digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: SuiteName,
    pub max: u32,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub ms: u128,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON summary; wall time is included only when asked for, so that the
    /// default rendering is reproducible.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let failures: Vec<Value> =
            self.failures.iter().map(|f| json!({"id": f.id, "digest": f.digest})).collect();
        let mut v = json!({"suite": self.suite.name(), "max": self.max, "cases": self.cases, "failures": failures});
        if with_timing {
            v["ms"] = json!(self.ms);
        }
        v
    }

    pub fn render_text(&self, with_timing: bool) -> String {
        let mut out = format!(
            "suite {}  max {}  cases {}  failures {}",
            self.suite,
            self.max,
            self.cases,
            self.failures.len()
        );
        if with_timing {
            out.push_str(&format!("  ms {}", self.ms));
        }
        out.push('\n');
        for f in &self.failures {
            out.push_str(&format!("FAIL {}  {}\n", f.id, f.digest));
        }
        out
    }
}

/// First 16 hex digits of the SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Default)]
struct Recorder {
    cases: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn identity<P: Zeroable + fmt::Display>(&mut self, id: impl FnOnce() -> String, check: IdentityCheck<P>) {
        self.cases += 1;
        if !check.holds() {
            let id = id();
            self.failures.push(Failure { digest: digest(&check.difference.to_string()), id });
        }
    }

    /// Records a case that yields `Ok(())` or a description of what went wrong.
    fn outcome(&mut self, id: impl FnOnce() -> String, result: std::result::Result<(), String>) {
        self.cases += 1;
        if let Err(msg) = result {
            self.failures.push(Failure { id: id(), digest: digest(&msg) });
        }
    }
}

pub fn run_suite(suite: SuiteName, max: u32) -> Result<SuiteResult> {
    if max < 1 {
        return Err(Error::InvalidParams("--max must be at least 1".into()));
    }
    let start = Instant::now();
    let mut rec = Recorder::default();
    match suite {
        SuiteName::Chebyshev => chebyshev_suite(&mut rec, max),
        SuiteName::Twist => twist_suite(&mut rec, max),
        SuiteName::Maps => maps_suite(&mut rec, max),
        SuiteName::Bridge3 => bridge3_suite(&mut rec, max),
        SuiteName::Oracle => oracle_suite(&mut rec, max),
    }
    Ok(SuiteResult { suite, max, cases: rec.cases, failures: rec.failures, ms: start.elapsed().as_millis() })
}

fn chebyshev_suite(rec: &mut Recorder, max: u32) {
    for s in 0..=max {
        for (r, check) in check_product_sum_row(s, max).into_iter().enumerate() {
            rec.identity(|| format!("product-sum r={r} s={s}"), check);
        }
    }
    let m = max as i64;
    for n in -m..=m {
        rec.identity(|| format!("cassini m={n}"), check_cassini(n));
        rec.identity(|| format!("square-sum m={n}"), check_square_sum(n));
        rec.identity(|| format!("reflection n={n}"), check_reflection(n));
        rec.identity(|| format!("adjacent-product n={n}"), check_adjacent_product(n));
    }
    for n in 2..=max {
        rec.identity(|| format!("first-kind n={n}"), check_first_kind(n));
    }
}

fn twist_suite(rec: &mut Recorder, max: u32) {
    let xs = XSequence::new(max + 2);
    rec.identity(|| "t-factorization".into(), check_t_factorization());
    for m in 0..=max {
        if m >= 1 {
            rec.identity(|| format!("closed-form m={m}"), xs.check_closed_form(m));
            rec.identity(|| format!("x-quadratic m={m}"), xs.check_x_quadratic(m));
            rec.identity(|| format!("r-product m={m}"), xs.check_r_product(m));
            rec.identity(|| format!("replay-l n={m}"), replay_l_n(m as i64));
            rec.identity(|| format!("replay-l' n={m}"), replay_l_prime_n(m as i64));
            let cert = check_r_tilde_irreducible(m as i64)
                .map_err(|e| e.to_string())
                .and_then(|r| if r.is_irreducible() { Ok(()) } else { Err(format!("{r:?}")) });
            rec.outcome(|| format!("r-tilde-irreducible m={m}"), cert);
        }
        if m >= 2 {
            rec.identity(|| format!("x-step-two m={m}"), xs.check_x_step_two(m));
        }
        rec.identity(|| format!("r-from-x m={m}"), xs.check_r_from_x(m));
    }
}

fn maps_suite(rec: &mut Recorder, max: u32) {
    let xs = XSequence::new(2 * max + 1);
    for m in 1..=max {
        rec.identity(|| format!("gf m={m}"), xs.verify_prop_gf(m));
    }
    for n in 1..=max {
        rec.identity(|| format!("fg-even n={n}"), xs.verify_prop_fg(n));
        rec.identity(|| format!("fg-odd n={n}"), xs.verify_prop_odd(n));
        let div = xs.fg_quotient(n).map(|_| ()).map_err(|e| e.to_string());
        rec.outcome(|| format!("fg-divisible n={n}"), div);
    }
}

fn bridge3_suite(rec: &mut Recorder, max: u32) {
    for p in valid_p3(max) {
        let p = p as i64;
        let agree = match (phi_recursive_p3(p), phi_closed_p3(p)) {
            (Ok(a), Ok(b)) => IdentityCheck::<crate::BiPoly>::new(&a, &b),
            (a, b) => {
                rec.outcome(|| format!("recursion-vs-closed p={p}"), Err(format!("{a:?} {b:?}")));
                continue;
            }
        };
        rec.identity(|| format!("recursion-vs-closed p={p}"), agree);
        let cert = check_phi_irreducible_p3(p)
            .map_err(|e| e.to_string())
            .and_then(|c| if c.passes() { Ok(()) } else { Err(format!("{c:?}")) });
        rec.outcome(|| format!("certificate p={p}"), cert);
    }
}

fn oracle_suite(rec: &mut Recorder, max: u32) {
    for params in valid_params(max) {
        let d = params.d() as i64;
        let slice = abelian_slice(params).map_err(|e| e.to_string()).and_then(|s| {
            let target = &cheb_s(d) - &cheb_s(d - 1);
            if s == target {
                Ok(())
            } else {
                Err(s.to_string())
            }
        });
        rec.outcome(|| format!("abelian-slice {params}"), slice);
    }
    for p in valid_p3(max) {
        let params = BridgeParams::with_q3(p as i64).expect("valid p");
        let agree = defining_poly(params, CoordSystem::BridgeXZ)
            .and_then(|o| Ok((o.poly, phi_closed_p3(p as i64)?)))
            .map_err(|e| e.to_string())
            .and_then(|(o, c)| if o == c { Ok(()) } else { Err((&o - &c).to_string()) });
        rec.outcome(|| format!("oracle-vs-closed {params}"), agree);
    }
    for m in (1..=max.saturating_sub(1) / 2).map(i64::from) {
        let knot = TwistKnot::new(m).expect("m >= 1");
        let sign = twist_delta_sign(knot)
            .map_err(|e| e.to_string())
            .and_then(|s| s.map(|_| ()).ok_or_else(|| format!("{knot} disagrees beyond sign")));
        rec.outcome(|| format!("oracle-vs-trace {knot}"), sign);
    }
}
