//! 2-bridge knots `b(p, q)` and the nonabelian factor `Phi_w(x, z)` of
//! `tr(b w a^-1) - tr(w)`, where `x = tr a` and `z = tr ab`.
//!
//! For `q = 3` there are two routes to `Phi_w`: the trace recursion along the
//! truncated words `w_j` ([`phi_recursive_p3`]) and the factored Chebyshev
//! form ([`phi_closed_p3`]). The factored form splits as
//! `P(z) + x^2 Q(z) R(z)`, which feeds the degree-parity/gcd criterion
//! ([`irreducible_by_parity_gcd`]).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::chebyshev::{alt_sum_alpha, alt_sum_beta, cheb_s};
use crate::error::{Error, Result};
use crate::poly::{uni_gcd, BiPoly, UniPoly, Var};
use crate::twist::{check_r_tilde_irreducible, CoordSystem, TwistKnot, MIRROR_RULE};

const XZ: [Var; 2] = [Var::X, Var::Z];

/// Validated 2-bridge parameters: `p` odd, `p >= 3`, `0 < q < p`,
/// `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BridgeParams {
    p: u32,
    q: u32,
}

impl BridgeParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 3 || p % 2 == 0 {
            return Err(Error::InvalidParams(format!("p = {p} must be odd and at least 3")));
        }
        if q <= 0 || q >= p {
            return Err(Error::InvalidParams(format!("q = {q} must satisfy 0 < q < p = {p}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidParams(format!("gcd({p}, {q}) = {} is not 1", p.gcd(&q))));
        }
        let p = u32::try_from(p).map_err(|_| Error::InvalidParams(format!("p = {p} is too large")))?;
        Ok(BridgeParams { p, q: q as u32 })
    }

    /// `b(p, 3)` with `p > 3`.
    pub fn with_q3(p: i64) -> Result<Self> {
        if p <= 3 {
            return Err(Error::InvalidParams(format!("p = {p} must exceed 3 for b(p,3)")));
        }
        Self::new(p, 3)
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// `d = (p - 1)/2`, half the word length.
    pub fn d(self) -> u32 {
        (self.p - 1) / 2
    }

    /// `l = floor(p/3)`, the length of the leading `+1` block when `q = 3`.
    pub fn ell(self) -> u32 {
        self.p / 3
    }

    /// The odd representative of `q` modulo `p`: `q` itself, or `q - p` when
    /// `q` is even. Both name the same knot.
    pub fn odd_q(self) -> i64 {
        if self.q % 2 == 1 {
            self.q as i64
        } else {
            self.q as i64 - self.p as i64
        }
    }

    /// `eps_j = (-1)^floor(j q / p)` for `j = 1..p-1`, taken with the odd
    /// representative of `q` so that the sequence is palindromic.
    pub fn epsilon(self) -> Vec<i8> {
        let (p, q) = (self.p as i64, self.odd_q());
        (1..p).map(|j| if (j * q).div_euclid(p) % 2 == 0 { 1 } else { -1 }).collect()
    }

    pub fn word(self) -> BridgeWord {
        BridgeWord {
            letters: self
                .epsilon()
                .into_iter()
                .enumerate()
                .map(|(i, exp)| Letter {
                    generator: if i % 2 == 0 { Generator::A } else { Generator::B },
                    exp,
                })
                .collect(),
        }
    }
}

impl fmt::Display for BridgeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.p, self.q)
    }
}

/// `eps_j` for validated `(p, q)`.
pub fn epsilon_seq(p: i64, q: i64) -> Result<Vec<i8>> {
    Ok(BridgeParams::new(p, q)?.epsilon())
}

/// Every valid `(p, q)` with `p <= max_p`, ordered by `p` then `q`.
pub fn valid_params(max_p: u32) -> Vec<BridgeParams> {
    (3..=max_p as i64)
        .step_by(2)
        .flat_map(|p| (1..p).filter_map(move |q| BridgeParams::new(p, q).ok()))
        .collect()
}

/// Every `p <= max_p` for which `b(p, 3)` is defined and `p > 3`.
pub fn valid_p3(max_p: u32) -> Vec<u32> {
    (5..=max_p).step_by(2).filter(|p| p % 3 != 0).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exp: i8,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { generator: self.generator, exp: -self.exp }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.generator {
            Generator::A => "a",
            Generator::B => "b",
        };
        if self.exp == 1 {
            f.write_str(g)
        } else {
            write!(f, "{g}^{}", self.exp)
        }
    }
}

/// `w = a^eps_1 b^eps_2 ... a^eps_{p-2} b^eps_{p-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BridgeWord {
    pub letters: Vec<Letter>,
}

impl BridgeWord {
    /// The word with `k` letters removed from each end.
    pub fn truncated(&self, k: usize) -> &[Letter] {
        &self.letters[k..self.letters.len() - k]
    }
}

impl fmt::Display for BridgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn xz_var(v: Var) -> BiPoly {
    BiPoly::variable(XZ, v).unwrap()
}

fn xz_const(c: i64) -> BiPoly {
    BiPoly::constant(XZ, c)
}

/// `Phi_w` by the trace recursion along `w_j = w^{(j-1)}`.
///
/// Works from `tr w_{d+1} = 2`, `tr w_d = z` and `x tr u_d = x tr v_d = x^2`
/// down to `tr w_1`. Where `eps_j = eps_{j+1}`:
/// `tr w_j = z tr w_{j+1} - tr w_{j+2}` and
/// `x tr u_j = x^2 tr w_{j+1} - x tr u_{j+1}` (same for `v`). At a sign change:
/// `tr w_j = (z - x^2) tr w_{j+1} - tr w_{j+2} + x tr u_{j+1} + x tr v_{j+1}`.
/// The `u`/`v` traces are only known up to the first sign change, so words
/// with more than one sign change in `eps_1..eps_d` are rejected.
pub fn phi_by_trace_recursion(params: BridgeParams) -> Result<BiPoly> {
    let d = params.d() as usize;
    let eps = params.epsilon();
    // eps is 1-based in the formulas.
    let e = |j: usize| eps[j - 1];
    let changes = (1..d).filter(|&j| e(j) != e(j + 1)).count();
    if changes > 1 {
        return Err(Error::InvalidParams(format!(
            "{params} has {changes} sign changes; the trace recursion handles at most one"
        )));
    }
    let z = xz_var(Var::Z);
    let x2 = BiPoly::monomial(XZ, 1, (2, 0));
    // w[j] = tr w_j, xu[j] = x tr u_j (= x tr v_j until the sign change).
    let mut w = vec![BiPoly::zero(XZ); d + 2];
    let mut xu = vec![BiPoly::zero(XZ); d + 1];
    w[d + 1] = xz_const(2);
    w[d] = z.clone();
    xu[d] = x2.clone();
    let mut mixed = false;
    for j in (1..d).rev() {
        if e(j) == e(j + 1) {
            w[j] = &(&z * &w[j + 1]) - &w[j + 2];
            if !mixed {
                xu[j] = &(&x2 * &w[j + 1]) - &xu[j + 1];
            }
        } else {
            let u_and_v = xu[j + 1].scale(&BigInt::from(2));
            w[j] = &(&(&(&z - &x2) * &w[j + 1]) - &w[j + 2]) + &u_and_v;
            mixed = true;
        }
    }
    let mut phi = xz_const(if d.is_multiple_of(2) { 1 } else { -1 });
    for (j, tr) in w.iter().enumerate().take(d + 1).skip(1) {
        phi = if j % 2 == 1 { &phi + tr } else { &phi - tr };
    }
    Ok(phi)
}

/// `Phi_w(x, z)` of `b(p, 3)` by the trace recursion.
pub fn phi_recursive_p3(p: i64) -> Result<BiPoly> {
    phi_by_trace_recursion(BridgeParams::with_q3(p)?)
}

/// `Phi_w(x, z)` of `b(p, 3)` in closed form:
/// `S_d - S_{d-1} + x^2 (2 - z) S_{d-l-1} S_{l-1-floor(l/2)} (S_{floor(l/2)} - S_{floor(l/2)-1})`.
pub fn phi_closed_p3(p: i64) -> Result<BiPoly> {
    let params = BridgeParams::with_q3(p)?;
    let (d, l) = (params.d() as i64, params.ell() as i64);
    let h = l / 2;
    let abelian = &cheb_s(d) - &cheb_s(d - 1);
    let g = &(&(&UniPoly::from_i64s(Var::Z, &[2, -1]) * &cheb_s(d - l - 1)) * &cheb_s(l - 1 - h))
        * &(&cheb_s(h) - &cheb_s(h - 1));
    Ok(&abelian.to_bi(XZ)? + &(&BiPoly::monomial(XZ, 1, (2, 0)) * &g.to_bi(XZ)?))
}

/// The split `Phi_w = P(z) + x^2 Q(z) R(z)` for `b(p, 3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pqr {
    pub p: UniPoly,
    pub q: UniPoly,
    pub r: UniPoly,
}

/// `P = S_d - S_{d-1}`, `Q = alpha_{l-1}`, `R = beta_{d-l-1}`.
///
/// Asserts `P = Phi_w(0, z)` against the trace recursion and
/// `Phi_w = P + x^2 Q R` against the closed form.
pub fn pqr_p3(p: i64) -> Result<Pqr> {
    let params = BridgeParams::with_q3(p)?;
    let (d, l) = (params.d(), params.ell());
    let pp = &cheb_s(d as i64) - &cheb_s(d as i64 - 1);
    let q = alt_sum_alpha(l - 1);
    let r = alt_sum_beta(d - l - 1);
    let at_zero = phi_by_trace_recursion(params)?.specialize(Var::X, &BigInt::from(0))?;
    assert_eq!(at_zero, pp, "Phi_w(0, z) differs from S_d - S_(d-1) for {params}");
    let split = &pp.to_bi(XZ)? + &(&BiPoly::monomial(XZ, 1, (2, 0)) * &(&q * &r).to_bi(XZ)?);
    assert_eq!(split, phi_closed_p3(p)?, "P + x^2 Q R differs from the closed form for {params}");
    Ok(Pqr { p: pp, q, r })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Irreducible,
    /// The criterion is only sufficient; this never means "reducible".
    CriterionInapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "Irreducible",
            Verdict::CriterionInapplicable => "CriterionInapplicable",
        })
    }
}

/// Record of the degree-parity/gcd criterion applied to `f + x^2 g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub f: UniPoly,
    pub g: UniPoly,
    /// `deg f - deg g`; `None` when either polynomial is zero.
    pub degree_gap: Option<i64>,
    pub gcd: UniPoly,
    pub verdict: Verdict,
}

impl IrreducibilityReport {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }

    pub fn to_json(&self) -> Value {
        json!({
            "f": self.f,
            "g": self.g,
            "degree_gap": self.degree_gap,
            "gcd": self.gcd.to_string(),
            "verdict": self.verdict.to_string(),
        })
    }
}

/// `f(z) + x^2 g(z)` is irreducible when `deg f - deg g` is odd and `f`, `g`
/// are coprime. Otherwise the criterion says nothing.
pub fn irreducible_by_parity_gcd(f: &UniPoly, g: &UniPoly) -> IrreducibilityReport {
    let degree_gap = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => Some(a as i64 - b as i64),
        _ => None,
    };
    let gcd = uni_gcd(f, g);
    let verdict = match degree_gap {
        Some(gap) if gap % 2 != 0 && gcd.is_one() => Verdict::Irreducible,
        _ => Verdict::CriterionInapplicable,
    };
    IrreducibilityReport { f: f.clone(), g: g.clone(), degree_gap, gcd, verdict }
}

/// Full certificate for `b(p, 3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCertificate {
    pub params: BridgeParams,
    pub pqr: Pqr,
    pub report: IrreducibilityReport,
    /// `(2d + 1, 2 floor(l/2) + 1, their gcd)`.
    pub index_gcd: (u32, u32, u32),
    /// Gcds of `P` with the Chebyshev factors of `Q R`, with labels.
    pub factor_gcds: Vec<(String, UniPoly)>,
}

impl BridgeCertificate {
    /// Irreducible verdict and every auxiliary gcd equal to one.
    pub fn passes(&self) -> bool {
        self.report.is_irreducible()
            && self.index_gcd.2 == 1
            && self.factor_gcds.iter().all(|(_, g)| g.is_one())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "knot": format!("b({},3)", self.params.p()),
            "P": self.pqr.p,
            "Q": self.pqr.q,
            "R": self.pqr.r,
            "degree_gap": self.report.degree_gap,
            "gcd": self.report.gcd.to_string(),
            "verdict": self.report.verdict.to_string(),
        })
    }
}

/// Irreducibility certificate for `Phi_w` of `b(p, 3)`.
pub fn check_phi_irreducible_p3(p: i64) -> Result<BridgeCertificate> {
    let params = BridgeParams::with_q3(p)?;
    let pqr = pqr_p3(p)?;
    let (d, l) = (params.d() as i64, params.ell() as i64);
    let h = l / 2;
    let report = irreducible_by_parity_gcd(&pqr.p, &(&pqr.q * &pqr.r));
    let (a, b) = (2 * d as u32 + 1, 2 * h as u32 + 1);
    let index_gcd = (a, b, a.gcd(&b));
    let factor_gcds = [
        ("S_floor(l/2) - S_floor(l/2)-1", &cheb_s(h) - &cheb_s(h - 1)),
        ("S_l-1-floor(l/2)", cheb_s(l - 1 - h)),
        ("S_d-l-1", cheb_s(d - l - 1)),
    ]
    .into_iter()
    .map(|(label, factor)| (label.to_string(), uni_gcd(&pqr.p, &factor)))
    .collect();
    Ok(BridgeCertificate { params, pqr, report, index_gcd, factor_gcds })
}

/// Rewrites a polynomial in `(x, z = tr ab)` into another trace coordinate
/// system: `z = x^2 - y` for `y = tr ab^-1`, `z = y` for `y = tr ab`.
pub fn xz_to_coords(poly: &BiPoly, coords: CoordSystem) -> Result<BiPoly> {
    let xy = [Var::X, Var::Y];
    match coords {
        CoordSystem::BridgeXZ => Ok(poly.clone()),
        CoordSystem::TraceEven => {
            poly.substitute(Var::Z, &BiPoly::from_i64_terms(xy, &[(2, 0, 1), (0, 1, -1)]))
        }
        CoordSystem::TraceOdd => poly.substitute(Var::Z, &BiPoly::from_i64_terms(xy, &[(0, 1, 1)])),
        CoordSystem::Skein => Err(Error::InvalidParams(
            "the skein coordinates only apply to twist knots".into(),
        )),
    }
}

/// Knot whose minimality is being reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimalityTarget {
    Twist(i64),
    Bridge3(i64),
}

/// Minimality of a knot in the epimorphism order, as implied by an
/// irreducibility certificate and an assumed hyperbolic structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub knot: String,
    pub certificate: String,
    pub report: IrreducibilityReport,
    pub minimal: bool,
    pub assumptions: Vec<String>,
}

impl MinimalityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "knot": self.knot,
            "certificate": self.certificate,
            "report": self.report.to_json(),
            "minimal": self.minimal,
            "assumptions": self.assumptions,
        })
    }
}

impl fmt::Display for MinimalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot: {}", self.knot)?;
        writeln!(f, "certificate: {} ({})", self.certificate, self.report.verdict)?;
        writeln!(f, "minimal: {}", self.minimal)?;
        for a in &self.assumptions {
            writeln!(f, "assumption: {a}")?;
        }
        Ok(())
    }
}

pub fn minimality_report(target: MinimalityTarget) -> Result<MinimalityReport> {
    let (knot, certificate, report) = match target {
        MinimalityTarget::Twist(m) if m < 0 => return Err(Error::InvalidParams(MIRROR_RULE.into())),
        MinimalityTarget::Twist(0) => {
            return Err(Error::OutOfScope("K_0 is the unknot, which is excluded from the order".into()))
        }
        MinimalityTarget::Twist(1) => {
            return Err(Error::OutOfScope(
                "K_1 is the trefoil knot (non-hyperbolic), so the certificate does not imply minimality".into(),
            ))
        }
        MinimalityTarget::Twist(m) => {
            let knot = TwistKnot::new(m)?;
            (knot.to_string(), format!("R~_{m}(x,y) irreducible"), check_r_tilde_irreducible(m)?)
        }
        MinimalityTarget::Bridge3(p) => {
            let cert = check_phi_irreducible_p3(p)?;
            let mut report = cert.report.clone();
            if !cert.passes() {
                report.verdict = Verdict::CriterionInapplicable;
            }
            (format!("b({p},3)"), format!("Phi_w(x,z) of b({p},3) irreducible"), report)
        }
    };
    let minimal = report.is_irreducible();
    Ok(MinimalityReport {
        assumptions: vec![
            format!("{knot} is hyperbolic (assumed, not computed)"),
            "a hyperbolic knot whose character variety has a single component of irreducible characters \
             admits no epimorphism onto another nontrivial knot group (cited result, not verified here)"
                .to_string(),
        ],
        knot,
        certificate,
        report,
        minimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xz(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_i64_terms(XZ, terms)
    }

    fn z(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::Z, coeffs)
    }

    #[test]
    fn params_validation() {
        assert!(BridgeParams::new(9, 3).is_err());
        assert!(BridgeParams::new(6, 1).is_err());
        assert!(BridgeParams::new(5, 5).is_err());
        assert!(BridgeParams::new(5, 0).is_err());
        assert!(BridgeParams::new(1, 0).is_err());
        assert!(BridgeParams::with_q3(3).is_err());
        // even q is accepted and read through q - p
        assert_eq!(epsilon_seq(5, 2).unwrap(), vec![-1, 1, 1, -1]);
        assert_eq!(BridgeParams::new(5, 2).unwrap().odd_q(), -3);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_seq(3, 1).unwrap(), vec![1, 1]);
        assert_eq!(epsilon_seq(5, 3).unwrap(), vec![1, -1, -1, 1]);
        assert_eq!(epsilon_seq(7, 3).unwrap(), vec![1, 1, -1, -1, 1, 1]);
    }

    #[test]
    fn epsilon_is_palindromic() {
        for params in valid_params(200) {
            let e = params.epsilon();
            assert_eq!(e.len(), params.p() as usize - 1);
            let rev: Vec<i8> = e.iter().rev().copied().collect();
            assert_eq!(e, rev, "{params}");
        }
    }

    #[test]
    fn epsilon_q3_block_shape() {
        for p in valid_p3(301) {
            let params = BridgeParams::with_q3(p as i64).unwrap();
            let e = params.epsilon();
            let (d, l) = (params.d() as usize, params.ell() as usize);
            assert!(e[..l].iter().all(|&v| v == 1));
            assert!(e[l..d].iter().all(|&v| v == -1));
        }
    }

    #[test]
    fn words() {
        assert_eq!(BridgeParams::new(5, 3).unwrap().word().to_string(), "a b^-1 a^-1 b");
        assert_eq!(BridgeParams::new(3, 1).unwrap().word().to_string(), "a b");
    }

    #[test]
    fn phi_examples() {
        // z^2 - z - 1 + x^2 (2 - z)
        let p5 = xz(&[(0, 2, 1), (0, 1, -1), (0, 0, -1), (2, 0, 2), (2, 1, -1)]);
        assert_eq!(phi_recursive_p3(5).unwrap(), p5);
        assert_eq!(phi_closed_p3(5).unwrap(), p5);
        // z^3 - z^2 - 2z + 1 + x^2 (2 - z)(z - 1)
        let p7 = &xz(&[(0, 3, 1), (0, 2, -1), (0, 1, -2), (0, 0, 1)])
            + &xz(&[(2, 2, -1), (2, 1, 3), (2, 0, -2)]);
        assert_eq!(phi_recursive_p3(7).unwrap(), p7);
        assert_eq!(phi_closed_p3(7).unwrap(), p7);
        assert_eq!(phi_recursive_p3(11).unwrap(), phi_closed_p3(11).unwrap());
    }

    #[test]
    fn phi_p13_index_arithmetic() {
        // d = 6, l = 4: S_6 - S_5 + x^2 (2 - z) S_1 S_1 (S_2 - S_1)
        let g = &(&(&z(&[2, -1]) * &cheb_s(1)) * &cheb_s(1)) * &(&cheb_s(2) - &cheb_s(1));
        let expect = &(&cheb_s(6) - &cheb_s(5)).to_bi(XZ).unwrap()
            + &(&xz(&[(2, 0, 1)]) * &g.to_bi(XZ).unwrap());
        assert_eq!(phi_closed_p3(13).unwrap(), expect);
    }

    #[test]
    fn recursion_rejects_multiple_sign_changes() {
        assert!(phi_by_trace_recursion(BridgeParams::new(9, 4).unwrap()).is_err());
        assert!(phi_recursive_p3(9).is_err());
    }

    #[test]
    fn pqr_examples() {
        let r5 = pqr_p3(5).unwrap();
        assert_eq!((r5.p, r5.q, r5.r), (z(&[-1, -1, 1]), z(&[1]), z(&[2, -1])));
        let r7 = pqr_p3(7).unwrap();
        assert_eq!((r7.p, r7.q, r7.r), (z(&[1, -2, -1, 1]), z(&[-1, 1]), z(&[2, -1])));
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(irreducible_by_parity_gcd(&z(&[0, 1]), &z(&[1])).verdict, Verdict::Irreducible);
        let r = irreducible_by_parity_gcd(&z(&[-1, 0, 1]), &z(&[-1, 1]));
        assert_eq!(r.verdict, Verdict::CriterionInapplicable);
        assert_eq!(r.gcd, z(&[-1, 1]));
        let r = irreducible_by_parity_gcd(&z(&[0, 0, 1]), &z(&[1]));
        assert_eq!((r.degree_gap, r.verdict), (Some(2), Verdict::CriterionInapplicable));
        let r = irreducible_by_parity_gcd(&z(&[0, 1]), &UniPoly::zero(Var::Z));
        assert_eq!((r.degree_gap, r.verdict), (None, Verdict::CriterionInapplicable));
    }

    #[test]
    fn certificates_small() {
        let c5 = check_phi_irreducible_p3(5).unwrap();
        assert!(c5.passes());
        let c7 = check_phi_irreducible_p3(7).unwrap();
        assert!(c7.passes());
        assert_eq!(c7.index_gcd, (7, 3, 1));
        assert_eq!(c7.report.degree_gap, Some(1));
        assert!(check_phi_irreducible_p3(6).is_err());
    }

    #[test]
    fn minimality() {
        let r = minimality_report(MinimalityTarget::Twist(2)).unwrap();
        assert!(r.minimal);
        assert!(r.assumptions[0].contains("hyperbolic"));
        let r = minimality_report(MinimalityTarget::Bridge3(5)).unwrap();
        assert!(r.minimal);
        assert!(matches!(minimality_report(MinimalityTarget::Twist(1)), Err(Error::OutOfScope(_))));
        assert!(matches!(minimality_report(MinimalityTarget::Twist(0)), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn coordinate_rewrites() {
        // z -> x^2 - y turns z - 1 into x^2 - y - 1
        let p = xz(&[(0, 1, 1), (0, 0, -1)]);
        let even = xz_to_coords(&p, CoordSystem::TraceEven).unwrap();
        assert_eq!(even, BiPoly::from_i64_terms([Var::X, Var::Y], &[(2, 0, 1), (0, 1, -1), (0, 0, -1)]));
        assert!(xz_to_coords(&p, CoordSystem::Skein).is_err());
    }
}
