use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{forward_binops, power_str, write_term, UniPoly, Var};
use crate::error::{Error, Result};

/// Exponent pair `(e0, e1)` for the variable pair `(vars[0], vars[1])`.
pub type Exps = (u32, u32);

/// Sparse bivariate polynomial with arbitrary-precision integer coefficients.
///
/// No zero coefficient is ever stored, so two values are equal iff they are
/// the same polynomial in the same variable pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    vars: [Var; 2],
    terms: BTreeMap<Exps, BigInt>,
}

impl BiPoly {
    pub fn zero(vars: [Var; 2]) -> Self {
        BiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: [Var; 2], c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c, (0, 0))
    }

    pub fn one(vars: [Var; 2]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn monomial(vars: [Var; 2], c: impl Into<BigInt>, exps: Exps) -> Self {
        Self::from_terms(vars, [(exps, c.into())])
    }

    /// The generator `which` of the ring in `vars`.
    pub fn variable(vars: [Var; 2], which: Var) -> Result<Self> {
        match vars.iter().position(|&v| v == which) {
            Some(0) => Ok(Self::monomial(vars, 1, (1, 0))),
            Some(_) => Ok(Self::monomial(vars, 1, (0, 1))),
            None => Err(Error::UnknownVariable(which)),
        }
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(vars: [Var; 2], terms: impl IntoIterator<Item = (Exps, BigInt)>) -> Self {
        let mut map: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        BiPoly { vars, terms: map }
    }

    pub fn from_i64_terms(vars: [Var; 2], terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(vars, terms.iter().map(|&(a, b, c)| ((a, b), BigInt::from(c))))
    }

    pub fn vars(&self) -> [Var; 2] {
        self.vars
    }

    /// Same terms, relabelled variable pair.
    pub fn with_vars(mut self, vars: [Var; 2]) -> Self {
        self.vars = vars;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exps, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Terms in rendering order: total degree descending, then first exponent
    /// descending.
    pub fn sorted_terms(&self) -> Vec<(Exps, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by_key(|(e, _)| std::cmp::Reverse((e.0 + e.1, e.0)));
        v
    }

    pub fn coeff(&self, exps: Exps) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    /// Degree in the first (`idx = 0`) or second variable; `None` for zero.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| if idx == 0 { e.0 } else { e.1 }).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0 + e.1).max()
    }

    /// Leading term under graded-lex order with the first variable largest.
    pub fn leading_term(&self) -> Option<(Exps, &BigInt)> {
        self.terms().max_by_key(|(e, _)| (e.0 + e.1, e.0))
    }

    fn index_of(&self, which: Var) -> Result<usize> {
        self.vars
            .iter()
            .position(|&v| v == which)
            .ok_or(Error::UnknownVariable(which))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        BiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `which` by `value` and expands. The result lives in `value`'s
    /// variable pair, which must also contain the variable that is kept.
    pub fn substitute(&self, which: Var, value: &BiPoly) -> Result<BiPoly> {
        let idx = self.index_of(which)?;
        let kept = BiPoly::variable(value.vars, self.vars[1 - idx])?;
        if idx == 0 {
            self.compose(value, &kept)
        } else {
            self.compose(&kept, value)
        }
    }

    /// Simultaneous substitution `self(first, second)`. Both values must share
    /// a variable pair, which becomes the result's.
    pub fn compose(&self, first: &BiPoly, second: &BiPoly) -> Result<BiPoly> {
        if first.vars != second.vars {
            return Err(Error::VarMismatch(format!(
                "substituted values use ({}, {}) and ({}, {})",
                first.vars[0], first.vars[1], second.vars[0], second.vars[1]
            )));
        }
        let out_vars = first.vars;
        let Some(max_first) = self.degree_in(0) else {
            return Ok(BiPoly::zero(out_vars));
        };
        let mut first_pows = vec![BiPoly::one(out_vars)];
        for i in 1..=max_first as usize {
            let next = &first_pows[i - 1] * first;
            first_pows.push(next);
        }
        // Group by exponent of the second variable: self = sum_j c_j(first) * second^j.
        let mut groups: BTreeMap<u32, Vec<(u32, &BigInt)>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            groups.entry(j).or_default().push((i, c));
        }
        let max_second = *groups.keys().next_back().unwrap();
        let mut acc = BiPoly::zero(out_vars);
        for j in (0..=max_second).rev() {
            acc = &acc * second;
            if let Some(group) = groups.get(&j) {
                let mut terms: BTreeMap<Exps, BigInt> = std::mem::take(&mut acc.terms);
                for &(i, c) in group {
                    for (&e, pc) in &first_pows[i as usize].terms {
                        *terms.entry(e).or_default() += c * pc;
                    }
                }
                terms.retain(|_, c| !c.is_zero());
                acc.terms = terms;
            }
        }
        Ok(acc)
    }

    /// Exact quotient `self / d` over the integers.
    ///
    /// Repeatedly cancels the graded-lex leading term of the remainder with a
    /// multiple of `d`'s leading term; any term that cannot be cancelled means
    /// there is no exact quotient.
    pub fn exact_div(&self, d: &BiPoly) -> Result<BiPoly> {
        if self.vars != d.vars {
            return Err(Error::VarMismatch("dividend and divisor differ".into()));
        }
        let ((la, lb), lc) = d.leading_term().ok_or(Error::NotDivisible)?;
        if self.is_zero() {
            return Ok(BiPoly::zero(self.vars));
        }
        let (px, py) = (self.degree_in(0).unwrap(), self.degree_in(1).unwrap());
        let (dx, dy) = (d.degree_in(0).unwrap(), d.degree_in(1).unwrap());
        if px < dx || py < dy {
            return Err(Error::NotDivisible);
        }
        // Degrees add under multiplication, which bounds every quotient term.
        let (qx, qy) = (px - dx, py - dy);
        let ny = py as usize + 1;
        let mut rem = vec![BigInt::zero(); (px as usize + 1) * ny];
        for (&(i, j), c) in &self.terms {
            rem[i as usize * ny + j as usize] = c.clone();
        }
        let divisor: Vec<(usize, usize, &BigInt)> = d
            .terms
            .iter()
            .filter(|(&e, _)| e != (la, lb))
            .map(|(&(i, j), c)| (i as usize, j as usize, c))
            .collect();
        let mut quotient = BTreeMap::new();
        // Graded-lex descending sweep; cancelling a term only touches smaller ones.
        for total in (0..=px + py).rev() {
            let lo = total.saturating_sub(py);
            for i in (lo..=total.min(px)).rev() {
                let j = total - i;
                let c = std::mem::take(&mut rem[i as usize * ny + j as usize]);
                if c.is_zero() {
                    continue;
                }
                if i < la || j < lb || i - la > qx || j - lb > qy {
                    return Err(Error::NotDivisible);
                }
                let (q, r) = c.div_rem(lc);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                let (si, sj) = ((i - la) as usize, (j - lb) as usize);
                for &(di, dj, dc) in &divisor {
                    rem[(si + di) * ny + sj + dj] -= &q * dc;
                }
                quotient.insert((si as u32, sj as u32), q);
            }
        }
        Ok(BiPoly { vars: self.vars, terms: quotient })
    }

    pub fn eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut sum = BigInt::zero();
        for (&(i, j), c) in &self.terms {
            sum += c * num_traits::pow(a.clone(), i as usize) * num_traits::pow(b.clone(), j as usize);
        }
        sum
    }

    pub fn eval_f64(&self, a: f64, b: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c.to_f64().unwrap_or(f64::NAN) * a.powi(i as i32) * b.powi(j as i32))
            .sum()
    }

    /// Sets the variable `which` to an integer value, leaving a univariate
    /// polynomial in the other one.
    pub fn specialize(&self, which: Var, value: &BigInt) -> Result<UniPoly> {
        let idx = self.index_of(which)?;
        let other = self.vars[1 - idx];
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (fixed, free) = if idx == 0 { (i, j) } else { (j, i) };
            if coeffs.len() <= free as usize {
                coeffs.resize(free as usize + 1, BigInt::zero());
            }
            coeffs[free as usize] += c * num_traits::pow(value.clone(), fixed as usize);
        }
        Ok(UniPoly::new(other, coeffs))
    }

    /// Reads the polynomial as univariate in `var` when it does not involve the
    /// other variable.
    pub fn to_uni(&self, var: Var) -> Result<UniPoly> {
        let idx = self.index_of(var)?;
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (e, other) = if idx == 0 { (i, j) } else { (j, i) };
            if other != 0 {
                return Err(Error::VarMismatch(format!(
                    "polynomial depends on {}",
                    self.vars[1 - idx]
                )));
            }
            if coeffs.len() <= e as usize {
                coeffs.resize(e as usize + 1, BigInt::zero());
            }
            coeffs[e as usize] = c.clone();
        }
        Ok(UniPoly::new(var, coeffs))
    }

    /// Whether `self = sign * other` for `sign` in {1, -1}; returns the sign.
    pub fn sign_relative_to(&self, other: &BiPoly) -> Option<i8> {
        if self == other {
            Some(1)
        } else if *self == -other {
            Some(-1)
        } else {
            None
        }
    }

    fn check_vars(&self, other: &BiPoly) {
        assert_eq!(
            self.vars, other.vars,
            "arithmetic between polynomials in different variable pairs"
        );
    }

    fn merge(&self, rhs: &BiPoly, negate: bool) -> BiPoly {
        self.check_vars(rhs);
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_default();
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        BiPoly { vars: self.vars, terms }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        if self.terms.len() < rhs.terms.len() {
            rhs.merge(self, false)
        } else {
            self.merge(rhs, false)
        }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.merge(rhs, true)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.check_vars(rhs);
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero(self.vars);
        }
        let nx = (self.degree_in(0).unwrap() + rhs.degree_in(0).unwrap()) as usize + 1;
        let ny = (self.degree_in(1).unwrap() + rhs.degree_in(1).unwrap()) as usize + 1;
        let work = self.terms.len() * rhs.terms.len();
        if nx * ny > 4 * work + 64 {
            let mut terms: BTreeMap<Exps, BigInt> = BTreeMap::new();
            for (&(i, j), a) in &self.terms {
                for (&(k, l), b) in &rhs.terms {
                    *terms.entry((i + k, j + l)).or_default() += a * b;
                }
            }
            terms.retain(|_, c| !c.is_zero());
            return BiPoly { vars: self.vars, terms };
        }
        let mut grid = vec![BigInt::zero(); nx * ny];
        let right: Vec<(usize, &BigInt)> = rhs
            .terms
            .iter()
            .map(|(&(k, l), b)| (k as usize * ny + l as usize, b))
            .collect();
        for (&(i, j), a) in &self.terms {
            let base = i as usize * ny + j as usize;
            for &(off, b) in &right {
                grid[base + off] += a * b;
            }
        }
        let terms = grid
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (((idx / ny) as u32, (idx % ny) as u32), c))
            .collect();
        BiPoly { vars: self.vars, terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

forward_binops!(BiPoly);

impl fmt::Display for BiPoly {
    /// Total degree descending, then first-variable exponent descending, e.g.
    /// `-x^2*z + 2*x^2 + z^2 - z - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for ((i, j), c) in self.sorted_terms() {
            let mono = [power_str(self.vars[0], i), power_str(self.vars[1], j)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            write_term(&mut out, c, &mono);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const XY: [Var; 2] = [Var::X, Var::Y];

    fn xy(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_i64_terms(XY, terms)
    }

    #[test]
    fn exact_div_examples() {
        // (y^2 - 4) / (y - 2) = y + 2
        let p = xy(&[(0, 2, 1), (0, 0, -4)]);
        assert_eq!(p.exact_div(&xy(&[(0, 1, 1), (0, 0, -2)])).unwrap(), xy(&[(0, 1, 1), (0, 0, 2)]));
        // x^2 y / y = x^2
        assert_eq!(xy(&[(2, 1, 1)]).exact_div(&xy(&[(0, 1, 1)])).unwrap(), xy(&[(2, 0, 1)]));
        // (y^3 - y^2 - 2y) / (y - 2) = y^2 + y
        let p = xy(&[(0, 3, 1), (0, 2, -1), (0, 1, -2)]);
        assert_eq!(p.exact_div(&xy(&[(0, 1, 1), (0, 0, -2)])).unwrap(), xy(&[(0, 2, 1), (0, 1, 1)]));
    }

    #[test]
    fn exact_div_rejects() {
        let y_minus_2 = xy(&[(0, 1, 1), (0, 0, -2)]);
        assert_eq!(xy(&[(0, 2, 1), (0, 0, 1)]).exact_div(&y_minus_2), Err(Error::NotDivisible));
        assert_eq!(xy(&[(1, 0, 1)]).exact_div(&xy(&[(0, 1, 1)])), Err(Error::NotDivisible));
        assert_eq!(xy(&[(0, 1, 3)]).exact_div(&xy(&[(0, 1, 2)])), Err(Error::NotDivisible));
        assert_eq!(xy(&[(0, 1, 3)]).exact_div(&BiPoly::zero(XY)), Err(Error::NotDivisible));
    }

    #[test]
    fn exact_div_with_non_leading_high_x_terms() {
        // divisor y^3 + x: its x-degree sits outside the leading term
        let d = xy(&[(0, 3, 1), (1, 0, 1)]);
        let q = xy(&[(2, 1, 5), (0, 0, -1), (1, 2, 3)]);
        assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn substitute_examples() {
        // x^2 + y with y -> y^2
        let p = xy(&[(2, 0, 1), (0, 1, 1)]);
        assert_eq!(p.substitute(Var::Y, &xy(&[(0, 2, 1)])).unwrap(), xy(&[(2, 0, 1), (0, 2, 1)]));
        // y with y -> -t(x, y)
        let t = xy(&[(0, 2, 1), (2, 1, -1), (2, 0, 2), (0, 0, -2)]);
        assert_eq!(
            xy(&[(0, 1, 1)]).substitute(Var::Y, &-&t).unwrap(),
            xy(&[(0, 2, -1), (2, 1, 1), (2, 0, -2), (0, 0, 2)])
        );
        // variable absent
        assert_eq!(xy(&[(2, 0, 1)]).substitute(Var::Y, &t).unwrap(), xy(&[(2, 0, 1)]));
        assert_eq!(xy(&[(2, 0, 1)]).substitute(Var::Z, &t), Err(Error::UnknownVariable(Var::Z)));
    }

    #[test]
    fn substitute_changes_variable_pair() {
        // u -> z - x^2 + 2 moves (x, u) to (x, z)
        let p = BiPoly::from_i64_terms([Var::X, Var::U], &[(1, 1, 1)]);
        let v = BiPoly::from_i64_terms([Var::X, Var::Z], &[(0, 1, 1), (2, 0, -1), (0, 0, 2)]);
        let expect = BiPoly::from_i64_terms([Var::X, Var::Z], &[(1, 1, 1), (3, 0, -1), (1, 0, 2)]);
        assert_eq!(p.substitute(Var::U, &v).unwrap(), expect);
    }

    #[test]
    fn rendering_order() {
        let p = xy(&[(0, 2, 1), (0, 1, -1), (0, 0, -1), (2, 0, 2), (2, 1, -1)]);
        assert_eq!(p.to_string(), "-x^2*y + 2*x^2 + y^2 - y - 1");
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let a = xy(&[(40, 0, 3), (0, 40, -2)]);
        let b = xy(&[(1, 1, 1), (0, 0, 1)]);
        let prod = &a * &b;
        assert_eq!(prod, xy(&[(41, 1, 3), (40, 0, 3), (1, 41, -2), (0, 40, -2)]));
    }
}
