use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{forward_binops, power_str, write_term, BiPoly, Var};
use crate::error::{Error, Result};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `var^i`; the last stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, BigInt::one())
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::new(var, vec![c.into()])
    }

    /// The polynomial `var` itself.
    pub fn var_poly(var: Var) -> Self {
        Self::monomial(var, BigInt::one(), 1)
    }

    pub fn monomial(var: Var, c: impl Into<BigInt>, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::new(var, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients, relabelled variable.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { var: self.var, coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let Some(lc) = self.leading_coeff() else {
            return self.clone();
        };
        let mut c = self.content();
        if lc.is_negative() {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Remainder of a fraction-free division of `self` by `d`; agrees with the
    /// pseudo-remainder up to a nonzero integer factor.
    pub fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        self.check_var(d);
        let dd = d.degree().expect("pseudo-remainder by the zero polynomial");
        let lcd = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let lcr = r.last().unwrap().clone();
            let g = lcr.gcd(&lcd);
            let (mr, md) = (&lcd / &g, &lcr / &g);
            if !mr.is_one() {
                for c in r.iter_mut() {
                    *c *= &mr;
                }
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    r[k + i] -= &md * c;
                }
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(self.var, r)
    }

    /// Exact quotient `self / d` over the integers.
    pub fn div_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        self.check_var(d);
        let dd = d.degree().ok_or(Error::NotDivisible)?;
        let Some(n) = self.degree() else {
            return Ok(UniPoly::zero(self.var));
        };
        if n < dd {
            return Err(Error::NotDivisible);
        }
        let lcd = &d.coeffs[dd];
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = std::mem::take(&mut r[k + dd]);
            if c.is_zero() {
                continue;
            }
            let (qk, rem) = c.div_rem(lcd);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, dc) in d.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    r[k + i] -= &qk * dc;
                }
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(UniPoly::new(self.var, q))
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * at + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Value at the exact binary value of `at`, rounded to `f64` once at the
    /// end. Avoids the cancellation of floating-point Horner evaluation.
    pub fn eval_exact_f64(&self, at: f64) -> f64 {
        if self.is_zero() || !at.is_finite() {
            return self.eval_f64(at);
        }
        // at = mant * 2^exp; with exp < 0 clear the denominator 2^(-exp n).
        let (mant, exp) = dyadic(at);
        if exp >= 0 {
            let at = mant << exp as usize;
            return big_to_f64_scaled(&self.eval(&at), 0);
        }
        let (n, step) = (self.coeffs.len() - 1, (-exp) as usize);
        let mut acc = BigInt::zero();
        let mut mpow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += (c * &mpow) << (step * (n - i));
            mpow *= &mant;
        }
        big_to_f64_scaled(&acc, exp * n as i64)
    }

    /// Sum of absolute values of the coefficients.
    pub fn abs_coeff_sum(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// `self(value)` for a bivariate `value`, by Horner's rule.
    pub fn compose_bi(&self, value: &BiPoly) -> BiPoly {
        let vars = value.vars();
        let mut acc = BiPoly::zero(vars);
        for c in self.coeffs.iter().rev() {
            acc = &acc * value;
            if !c.is_zero() {
                acc = &acc + &BiPoly::constant(vars, c.clone());
            }
        }
        acc
    }

    /// `self(value)` for a univariate `value`; the result is in `value`'s
    /// variable.
    pub fn compose(&self, value: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(value.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + &UniPoly::constant(value.var, c.clone());
        }
        acc
    }

    /// Embeds into a bivariate ring whose variable pair contains `self.var()`.
    pub fn to_bi(&self, vars: [Var; 2]) -> Result<BiPoly> {
        let pos = vars
            .iter()
            .position(|&v| v == self.var)
            .ok_or(Error::UnknownVariable(self.var))?;
        Ok(BiPoly::from_terms(
            vars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let e = i as u32;
                let exps = if pos == 0 { (e, 0) } else { (0, e) };
                (exps, c.clone())
            }),
        ))
    }

    fn check_var(&self, other: &UniPoly) {
        assert_eq!(
            self.var, other.var,
            "arithmetic between polynomials in different variables"
        );
    }
}

/// Gcd over the rationals, computed by a primitive pseudo-remainder sequence.
///
/// The result is primitive with positive leading coefficient, so it is the
/// constant `1` exactly when `p` and `q` are coprime over the rationals.
/// `gcd(0, 0) = 0`.
/// `(m, e)` with `x = m * 2^e` exactly, for finite `x`.
fn dyadic(x: f64) -> (BigInt, i64) {
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (m, e) = if raw_exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), raw_exp - 1075) };
    let tz = m.trailing_zeros() as i64;
    let m = BigInt::from(m >> tz);
    (if x < 0.0 { -m } else { m }, e + tz)
}

/// `num * 2^scale` rounded to `f64`.
fn big_to_f64_scaled(num: &BigInt, scale: i64) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = (num.bits() as i64 - 64).max(0);
    let mut out = (num >> shift as usize).to_f64().unwrap_or(f64::NAN);
    let mut e = shift + scale;
    while e != 0 {
        let k = e.clamp(-1000, 1000);
        out *= 2f64.powi(k as i32);
        e -= k;
    }
    out
}

pub fn uni_gcd(p: &UniPoly, q: &UniPoly) -> UniPoly {
    p.check_var(q);
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    let (mut a, mut b) = if p.degree() >= q.degree() {
        (p.primitive_part(), q.primitive_part())
    } else {
        (q.primitive_part(), p.primitive_part())
    };
    loop {
        if b.degree() == Some(0) {
            return UniPoly::one(p.var);
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b;
        }
        a = b;
        b = r.primitive_part();
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        UniPoly::new(self.var, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        UniPoly::new(self.var, coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        let rhs_nz: Vec<(usize, &BigInt)> = rhs
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(j, b) in &rhs_nz {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(self.var, out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_binops!(UniPoly);

impl fmt::Display for UniPoly {
    /// Highest degree first, e.g. `z^2 - z - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(&mut out, c, &power_str(self.var, i as u32));
        }
        f.write_str(&out)
    }
}
