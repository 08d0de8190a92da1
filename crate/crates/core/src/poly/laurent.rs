use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{forward_binops, write_term};

/// Sparse polynomial in `Z[s, 1/s][u]`: keys are `(s-exponent, u-exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentBi {
    terms: BTreeMap<(i32, u32), BigInt>,
}

impl LaurentBi {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c * s^s_exp * u^u_exp`
    pub fn monomial(c: impl Into<BigInt>, s_exp: i32, u_exp: u32) -> Self {
        Self::from_terms([((s_exp, u_exp), c.into())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, u32), BigInt)>) -> Self {
        let mut map: BTreeMap<(i32, u32), BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentBi { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, u32), &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, s_exp: i32, u_exp: u32) -> BigInt {
        self.terms.get(&(s_exp, u_exp)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// Coefficients of `u^u_exp`, keyed by `s`-exponent.
    pub fn u_slice(&self, u_exp: u32) -> BTreeMap<i32, &BigInt> {
        self.terms
            .iter()
            .filter(|(e, _)| e.1 == u_exp)
            .map(|(e, c)| (e.0, c))
            .collect()
    }

    /// Invariance under `s <-> 1/s`.
    pub fn is_s_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(s, u), c)| self.terms.get(&(-s, u)) == Some(c))
    }

    fn s_range(&self) -> (i32, i32) {
        let lo = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let hi = self.terms.keys().map(|e| e.0).max().unwrap_or(0);
        (lo, hi)
    }

    fn merge(&self, rhs: &LaurentBi, negate: bool) -> LaurentBi {
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
        LaurentBi { terms }
    }
}

impl Add for &LaurentBi {
    type Output = LaurentBi;
    fn add(self, rhs: &LaurentBi) -> LaurentBi {
        if self.len() < rhs.len() {
            rhs.merge(self, false)
        } else {
            self.merge(rhs, false)
        }
    }
}

impl Sub for &LaurentBi {
    type Output = LaurentBi;
    fn sub(self, rhs: &LaurentBi) -> LaurentBi {
        self.merge(rhs, true)
    }
}

impl Mul for &LaurentBi {
    type Output = LaurentBi;
    fn mul(self, rhs: &LaurentBi) -> LaurentBi {
        if self.is_zero() || rhs.is_zero() {
            return LaurentBi::zero();
        }
        let (alo, ahi) = self.s_range();
        let (blo, bhi) = rhs.s_range();
        let ns = (ahi - alo + bhi - blo) as usize + 1;
        let nu = (self.u_degree().unwrap() + rhs.u_degree().unwrap()) as usize + 1;
        let work = self.len() * rhs.len();
        if ns * nu > 4 * work + 64 {
            let mut terms: BTreeMap<(i32, u32), BigInt> = BTreeMap::new();
            for (&(s1, u1), a) in &self.terms {
                for (&(s2, u2), b) in &rhs.terms {
                    *terms.entry((s1 + s2, u1 + u2)).or_default() += a * b;
                }
            }
            terms.retain(|_, c| !c.is_zero());
            return LaurentBi { terms };
        }
        let base = alo + blo;
        let mut grid = vec![BigInt::zero(); ns * nu];
        let right: Vec<(usize, &BigInt)> = rhs
            .terms
            .iter()
            .map(|(&(s, u), b)| ((s - blo) as usize * nu + u as usize, b))
            .collect();
        for (&(s, u), a) in &self.terms {
            let start = (s - alo) as usize * nu + u as usize;
            for &(off, b) in &right {
                grid[start + off] += a * b;
            }
        }
        let terms = grid
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (((idx / nu) as i32 + base, (idx % nu) as u32), c))
            .collect();
        LaurentBi { terms }
    }
}

impl Neg for &LaurentBi {
    type Output = LaurentBi;
    fn neg(self) -> LaurentBi {
        LaurentBi {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

forward_binops!(LaurentBi);

impl fmt::Display for LaurentBi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (&(s, u), c) in self.terms.iter().rev() {
            let mut parts = Vec::new();
            match s {
                0 => {}
                1 => parts.push("s".to_string()),
                _ => parts.push(format!("s^{s}")),
            }
            match u {
                0 => {}
                1 => parts.push("u".to_string()),
                _ => parts.push(format!("u^{u}")),
            }
            write_term(&mut out, c, &parts.join("*"));
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_product_cancels_negative_powers() {
        let s = LaurentBi::monomial(1, 1, 0);
        let s_inv = LaurentBi::monomial(1, -1, 0);
        assert!((&s * &s_inv).is_one());
        // (s + 1/s)^2 = s^2 + 2 + s^-2
        let x = &s + &s_inv;
        let sq = &x * &x;
        assert_eq!(sq, LaurentBi::from_terms([((2, 0), 1.into()), ((0, 0), 2.into()), ((-2, 0), 1.into())]));
        assert!(sq.is_s_palindromic());
        assert!(!s.is_s_palindromic());
    }
}
