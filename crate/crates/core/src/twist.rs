//! Character varieties of the twist knots `K_m`.
//!
//! Two presentations are built. The trace presentation uses `x = tr a` and
//! `y = tr ab^-1` (even `m`, polynomial `L_n`) or `y = tr ab` (odd `m`,
//! polynomial `L'_n`). The skein presentation uses `x' = -tr b` and
//! `y' = -tr ab a^-1 b^-1` (polynomial `R_m`). The maps `f` and `g` convert
//! between them and the `verify_*` functions check the identities that make
//! them mutually inverse on the varieties.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::bridge::{irreducible_by_parity_gcd, BridgeParams, IrreducibilityReport};
use crate::chebyshev::{cheb_s_in, cheb_s_window, recurrence_closed_form};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, IdentityCheck, UniPoly, Var};

const XY: [Var; 2] = [Var::X, Var::Y];

/// Coordinate system a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordSystem {
    /// `x = tr a = tr b`, `y = tr ab^-1`.
    TraceEven,
    /// `x = tr a = tr b`, `y = tr ab`.
    TraceOdd,
    /// `x' = -tr b`, `y' = -tr ab a^-1 b^-1`.
    Skein,
    /// `x = tr a`, `z = tr ab`.
    BridgeXZ,
}

impl CoordSystem {
    pub fn tag(self) -> &'static str {
        match self {
            CoordSystem::TraceEven => "trace-even",
            CoordSystem::TraceOdd => "trace-odd",
            CoordSystem::Skein => "skein",
            CoordSystem::BridgeXZ => "bridge-xz",
        }
    }

    pub fn vars(self) -> [Var; 2] {
        match self {
            CoordSystem::BridgeXZ => [Var::X, Var::Z],
            _ => XY,
        }
    }
}

impl fmt::Display for CoordSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CoordSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trace-even" => Ok(CoordSystem::TraceEven),
            "trace-odd" => Ok(CoordSystem::TraceOdd),
            "skein" => Ok(CoordSystem::Skein),
            "bridge-xz" => Ok(CoordSystem::BridgeXZ),
            other => Err(Error::InvalidParams(format!("unknown coordinate system `{other}`"))),
        }
    }
}

/// Message for negative twist counts, which reduce to mirrors.
pub const MIRROR_RULE: &str =
    "negative twist counts are mirrors: X(K_{-m})=X(K_{m-1}), so use m-1 instead of -m";

/// The twist knot `K_m = [2, m] = b(2m+1, m)`, `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistKnot {
    m: u32,
}

impl TwistKnot {
    pub fn new(m: i64) -> Result<Self> {
        if m < 0 {
            return Err(Error::InvalidParams(MIRROR_RULE.into()));
        }
        if m == 0 {
            return Err(Error::InvalidParams("K_0 is the unknot; twist knots need m >= 1".into()));
        }
        let m = u32::try_from(m).map_err(|_| Error::InvalidParams(format!("m = {m} is too large")))?;
        Ok(TwistKnot { m })
    }

    pub fn m(self) -> u32 {
        self.m
    }

    /// `n` with `m = 2n` or `m = 2n - 1`.
    pub fn half(self) -> u32 {
        self.m.div_ceil(2)
    }

    pub fn is_even(self) -> bool {
        self.m.is_multiple_of(2)
    }

    /// Coordinates of the trace presentation.
    pub fn trace_coords(self) -> CoordSystem {
        if self.is_even() {
            CoordSystem::TraceEven
        } else {
            CoordSystem::TraceOdd
        }
    }

    /// 2-bridge parameters whose word is the one the trace presentation is
    /// derived from: `b(4n+1, 2n+1)` (word `(ab^-1a^-1b)^n`) for `m = 2n` and
    /// `b(4n-1, 2n-1)` (word `(aba^-1b^-1)^(n-1) ab`) for `m = 2n - 1`.
    pub fn bridge_params(self) -> BridgeParams {
        let p = 2 * self.m as i64 + 1;
        let q = if self.is_even() { self.m as i64 + 1 } else { self.m as i64 };
        BridgeParams::new(p, q).expect("twist knot parameters are coprime")
    }

    /// Defining polynomial of the trace presentation: `L_n` or `L'_n`.
    pub fn trace_poly(self) -> BiPoly {
        let n = self.half() as i64;
        if self.is_even() {
            l_n(n)
        } else {
            l_prime_n(n)
        }
    }

    /// Defining polynomial of the skein presentation, `R_m`.
    pub fn skein_poly(self) -> BiPoly {
        r_m(self.m as i64).expect("m >= 1")
    }
}

impl fmt::Display for TwistKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}", self.m)
    }
}

fn x() -> BiPoly {
    BiPoly::variable(XY, Var::X).unwrap()
}

fn y() -> BiPoly {
    BiPoly::variable(XY, Var::Y).unwrap()
}

fn c(v: i64) -> BiPoly {
    BiPoly::constant(XY, v)
}

fn x2() -> BiPoly {
    BiPoly::monomial(XY, 1, (2, 0))
}

fn s_y(n: i64) -> BiPoly {
    cheb_s_in(n, Var::Y).to_bi(XY).unwrap()
}

/// `t = y^2 - y x^2 + 2 x^2 - 2`, the trace of the commutator.
pub fn t_poly() -> BiPoly {
    BiPoly::from_i64_terms(XY, &[(0, 2, 1), (2, 1, -1), (2, 0, 2), (0, 0, -2)])
}

/// `X_0, ..., X_max` from `X_0 = -2`, `X_1 = -x^2 - y`,
/// `X_{m+1} = y X_m - X_{m-1} - 2 x^2`.
pub fn x_sequence(max: u32) -> Vec<BiPoly> {
    let mut xs = vec![c(-2), -&(&x2() + &y())];
    let two_x2 = x2().scale(&BigInt::from(2));
    while xs.len() <= max as usize {
        let k = xs.len();
        let next = &(&(&y() * &xs[k - 1]) - &xs[k - 2]) - &two_x2;
        xs.push(next);
    }
    xs.truncate(max as usize + 1);
    xs
}

/// `X_m` by its recursion.
pub fn x_m(m: i64) -> Result<BiPoly> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    Ok(x_sequence(m as u32).pop().unwrap())
}

/// `X_m = -S_m(y) + S_{m-2}(y) - x^2 (S_{m-1}(y) + 2 sum_{i=0}^{m-2} S_i(y))`.
pub fn x_m_closed(m: i64) -> BiPoly {
    let mut sum = UniPoly::zero(Var::Y);
    for i in 0..=m - 2 {
        sum = &sum + &cheb_s_in(i, Var::Y);
    }
    let inner = &cheb_s_in(m - 1, Var::Y) + &sum.scale(&BigInt::from(2));
    &(&s_y(m - 2) - &s_y(m)) - &(&x2() * &inner.to_bi(XY).unwrap())
}

/// `S_m(y) - S_{m-1}(y)` and `sum_{i<m} S_i(y)`: the two coefficients of
/// `R~_m` as a polynomial in `x^2`.
fn r_tilde_parts(m: i64) -> (UniPoly, UniPoly) {
    let mut sum = UniPoly::zero(Var::Y);
    for i in 0..m {
        sum = &sum + &cheb_s_in(i, Var::Y);
    }
    (&cheb_s_in(m, Var::Y) - &cheb_s_in(m - 1, Var::Y), sum)
}

/// `R~_m = S_m(y) - S_{m-1}(y) + x^2 sum_{i=0}^{m-1} S_i(y)`.
pub fn r_tilde_m(m: i64) -> Result<BiPoly> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    let (f, g) = r_tilde_parts(m);
    Ok(&f.to_bi(XY).unwrap() + &(&x2() * &g.to_bi(XY).unwrap()))
}

/// `R_m = (y + 2) R~_m`, the skein presentation of `X(K_m)`.
pub fn r_m(m: i64) -> Result<BiPoly> {
    Ok(&(&y() + &c(2)) * &r_tilde_m(m)?)
}

/// `L_n = (y - 2)(S_n(t) + (y + 1 - x^2) S_{n-1}(t))`, the trace presentation
/// of `X(K_{2n})`.
pub fn l_n(n: i64) -> BiPoly {
    let w = cheb_s_window(&t_poly(), n - 1, n);
    let k = &(&y() + &c(1)) - &x2();
    &(&y() - &c(2)) * &(&w[1] + &(&k * &w[0]))
}

/// `L'_n = (x^2 - y - 2)((y - 1) S_{n-1}(t) - S_{n-2}(t))`, the trace
/// presentation of `X(K_{2n-1})` with `y = tr ab`.
pub fn l_prime_n(n: i64) -> BiPoly {
    let w = cheb_s_window(&t_poly(), n - 2, n - 1);
    let lead = &(&x2() - &y()) - &c(2);
    &lead * &(&(&(&y() - &c(1)) * &w[1]) - &w[0])
}

/// `f(x, y) = (-x, -t(x, y))` on points.
pub fn map_f_point(px: &BigInt, py: &BigInt) -> (BigInt, BigInt) {
    (-px, -t_poly().eval(px, py))
}

/// `g(x, y) = (-x, -X_m(x, y))` on points.
pub fn map_g_point(m: i64, px: &BigInt, py: &BigInt) -> Result<(BigInt, BigInt)> {
    Ok((-px, -x_m(m)?.eval(px, py)))
}

/// `p o f`, i.e. `p(-x, -t(x, y))`.
pub fn compose_f(p: &BiPoly) -> Result<BiPoly> {
    p.compose(&-x(), &-t_poly())
}

/// `p o g`, i.e. `p(-x, -X_m(x, y))`.
pub fn compose_g(m: i64, p: &BiPoly) -> Result<BiPoly> {
    p.compose(&-x(), &-x_m(m)?)
}

/// `X_m` for consecutive indices, with the identities that involve
/// neighbouring terms.
pub struct XSequence {
    xs: Vec<BiPoly>,
}

impl XSequence {
    pub fn new(max: u32) -> Self {
        XSequence { xs: x_sequence(max) }
    }

    pub fn get(&self, m: u32) -> &BiPoly {
        &self.xs[m as usize]
    }

    pub fn max(&self) -> u32 {
        self.xs.len() as u32 - 1
    }

    /// Recursion against the closed form, `m >= 1`.
    pub fn check_closed_form(&self, m: u32) -> IdentityCheck<BiPoly> {
        IdentityCheck::<BiPoly>::new(self.get(m), &x_m_closed(m as i64))
    }

    /// `R_m = -(X_{m+1} + X_m + x^2)`.
    pub fn check_r_from_x(&self, m: u32) -> IdentityCheck<BiPoly> {
        let rhs = -&(&(self.get(m + 1) + self.get(m)) + &x2());
        IdentityCheck::<BiPoly>::new(&r_m(m as i64).unwrap(), &rhs)
    }

    /// `X_m^2 + X_{m-1}^2 - y X_m X_{m-1} + 2x^2(X_m + X_{m-1})
    ///   = -y^2 - 2x^2 y - x^4 - 4x^2 + 4`, `m >= 1`.
    pub fn check_x_quadratic(&self, m: u32) -> IdentityCheck<BiPoly> {
        let (a, b) = (self.get(m), self.get(m - 1));
        let lhs = &(&(&(a * a) + &(b * b)) - &(&y() * &(a * b)))
            + &(&x2().scale(&BigInt::from(2)) * &(a + b));
        let rhs = BiPoly::from_i64_terms(XY, &[(0, 2, -1), (2, 1, -2), (4, 0, -1), (2, 0, -4), (0, 0, 4)]);
        IdentityCheck::<BiPoly>::new(&lhs, &rhs)
    }

    /// `R_m R_{m-1} = (y + 2)(X_m^2 + x^2 X_m + y + 2x^2 - 2)`, `m >= 1`.
    pub fn check_r_product(&self, m: u32) -> IdentityCheck<BiPoly> {
        let xm = self.get(m);
        let lhs = &r_m(m as i64).unwrap() * &r_m(m as i64 - 1).unwrap();
        let inner = &(&(xm * xm) + &(&x2() * xm)) + &BiPoly::from_i64_terms(XY, &[(0, 1, 1), (2, 0, 2), (0, 0, -2)]);
        IdentityCheck::<BiPoly>::new(&lhs, &(&(&y() + &c(2)) * &inner))
    }

    /// `X_{m+2} + X_{m-2} - (y^2 - 2) X_m = -(2y + 4) x^2`, `m >= 2`.
    pub fn check_x_step_two(&self, m: u32) -> IdentityCheck<BiPoly> {
        let y2m2 = BiPoly::from_i64_terms(XY, &[(0, 2, 1), (0, 0, -2)]);
        let lhs = &(self.get(m + 2) + self.get(m - 2)) - &(&y2m2 * self.get(m));
        let rhs = BiPoly::from_i64_terms(XY, &[(2, 1, -2), (2, 0, -4)]);
        IdentityCheck::<BiPoly>::new(&lhs, &rhs)
    }

    /// `-X_m^2 - x^2 X_m - 2x^2 + 2 = y - (y + 2) R~_m R~_{m-1}`, `m >= 1`.
    ///
    /// The left side is computed as the second coordinate of `g o f`, i.e.
    /// `-t(-x, -X_m)`.
    pub fn verify_prop_gf(&self, m: u32) -> IdentityCheck<BiPoly> {
        let lhs = -&t_poly().compose(&-x(), &-self.get(m)).unwrap();
        let rhs = &y()
            - &(&(&y() + &c(2)) * &(&r_tilde_m(m as i64).unwrap() * &r_tilde_m(m as i64 - 1).unwrap()));
        IdentityCheck::<BiPoly>::new(&lhs, &rhs)
    }

    /// `-X_{2n}(-x, -t) - y`, the second coordinate of `f o g` minus `y`.
    pub fn fg_defect_even(&self, n: u32) -> BiPoly {
        &-&compose_f(self.get(2 * n)).unwrap() - &y()
    }

    /// `-X_{2n+1}(-x, -t) - y`.
    pub fn fg_defect_odd(&self, n: u32) -> BiPoly {
        &-&compose_f(self.get(2 * n + 1)).unwrap() - &y()
    }

    /// `-X_{2n}(-x, -t) - y = (y - 2) gamma_n`; needs `X_{2n}`.
    pub fn verify_prop_fg(&self, n: u32) -> IdentityCheck<BiPoly> {
        let rhs = &(&y() - &c(2)) * &gamma_n(n as i64);
        IdentityCheck::<BiPoly>::new(&self.fg_defect_even(n), &rhs)
    }

    /// `-X_{2n+1}(-x, -t) - y = -(x^2 - y - 2) gamma'_n`; needs `X_{2n+1}`.
    pub fn verify_prop_odd(&self, n: u32) -> IdentityCheck<BiPoly> {
        let lead = &(&x2() - &y()) - &c(2);
        let rhs = -&(&lead * &gamma_prime_n(n as i64));
        IdentityCheck::<BiPoly>::new(&self.fg_defect_odd(n), &rhs)
    }

    /// Exact quotient of `-X_{2n}(-x, -t) - y` by `L_n`.
    pub fn fg_quotient(&self, n: u32) -> Result<BiPoly> {
        self.fg_defect_even(n).exact_div(&l_n(n as i64))
    }
}

/// `gamma_n = (S_n(t) + (y+1-x^2) S_{n-1}(t)) ((y+1-x^2) S_{n-1}(t) + S_{n-2}(t))`.
pub fn gamma_n(n: i64) -> BiPoly {
    let w = cheb_s_window(&t_poly(), n - 2, n);
    let k = &(&y() + &c(1)) - &x2();
    let mid = &k * &w[1];
    &(&w[2] + &mid) * &(&mid + &w[0])
}

/// `gamma'_n = (S_n(t) + (1-y) S_{n-1}(t)) ((1-y) S_n(t) + S_{n-1}(t))`.
pub fn gamma_prime_n(n: i64) -> BiPoly {
    let w = cheb_s_window(&t_poly(), n - 1, n);
    let k = &c(1) - &y();
    &(&w[1] + &(&k * &w[0])) * &(&(&k * &w[1]) + &w[0])
}

/// `(y+1-x^2)(t+y+1-x^2) + 1`, with `gamma_n = delta S_{n-1}(t)^2 - 1`.
pub fn delta_even() -> BiPoly {
    let k = &(&y() + &c(1)) - &x2();
    &(&k * &(&t_poly() + &k)) + &c(1)
}

/// `(1-y)(t+1-y) + 1`, with `gamma'_n = delta' S_n(t) S_{n-1}(t) + 1 - y`.
pub fn delta_odd() -> BiPoly {
    let k = &c(1) - &y();
    &(&k * &(&t_poly() + &k)) + &c(1)
}

/// Rebuilds `L_n` from the seeds `f_0 = y - 2`, `f_{-1} = y - t` of the
/// trace recursion `tr(b u^k a^-1) - tr(u^k)`.
pub fn replay_l_n(n: i64) -> IdentityCheck<BiPoly> {
    let t = t_poly();
    let f0 = &y() - &c(2);
    let fm1 = &y() - &t;
    IdentityCheck::<BiPoly>::new(&recurrence_closed_form(&f0, &fm1, n, &t), &l_n(n))
}

/// Rebuilds `L'_n = (x^2 - t - y) S_{n-1}(t) - (x^2 - 2 - y) S_{n-2}(t)`.
pub fn replay_l_prime_n(n: i64) -> IdentityCheck<BiPoly> {
    let t = t_poly();
    let f0 = &(&x2() - &t) - &y();
    let fm1 = &(&x2() - &c(2)) - &y();
    IdentityCheck::<BiPoly>::new(&recurrence_closed_form(&f0, &fm1, n - 1, &t), &l_prime_n(n))
}

/// Certificate that `R~_m` is irreducible: `R~_m = f(y) + x^2 g(y)` with
/// `f = S_m - S_{m-1}` and `g = (f - 1)/(y - 2)`.
pub fn check_r_tilde_irreducible(m: i64) -> Result<IrreducibilityReport> {
    if m < 1 {
        return Err(Error::InvalidParams(format!("m = {m}: need m >= 1")));
    }
    let (f, sum) = r_tilde_parts(m);
    let g = (&f - &UniPoly::one(Var::Y)).div_exact(&UniPoly::from_i64s(Var::Y, &[-2, 1]))?;
    assert_eq!(g, sum, "sum of S_i(y) differs from (S_m - S_{{m-1}} - 1)/(y - 2)");
    Ok(irreducible_by_parity_gcd(&f, &g))
}

/// The first-variable-free check `t - y = (y - 2)(y + 1 - x^2)`.
pub fn check_t_factorization() -> IdentityCheck<BiPoly> {
    let rhs = &(&y() - &c(2)) * &(&(&y() + &c(1)) - &x2());
    IdentityCheck::<BiPoly>::new(&(&t_poly() - &y()), &rhs)
}
