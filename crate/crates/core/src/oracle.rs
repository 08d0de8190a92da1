//! Brute-force path through the Riley representation
//! `a -> [[s, 1], [0, 1/s]]`, `b -> [[s, 0], [u, 1/s]]` over `Z[s, 1/s][u]`.
//!
//! Under this representation `x = tr a = s + 1/s`, `tr ab = x^2 - 2 + u` and
//! `tr ab^-1 = 2 - u`, so `u = z - x^2 + 2` is the reducible-locus factor of
//! `tr(b w a^-1) - tr(w)`.

use std::fmt;

use num_bigint::BigInt;

use crate::bridge::{BridgeParams, Generator, Letter};
use crate::chebyshev::cheb_t;
use crate::error::{Error, Result};
use crate::poly::{BiPoly, LaurentBi, UniPoly, Var};
use crate::twist::{CoordSystem, TwistKnot};

const XU: [Var; 2] = [Var::X, Var::U];

/// Words up to this length have the determinant of every prefix checked.
pub const DET_CHECK_MAX_LEN: usize = 44;

/// 2x2 matrix over `Z[s, 1/s][u]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMat {
    pub entries: [[LaurentBi; 2]; 2],
}

impl SymMat {
    pub fn identity() -> Self {
        SymMat {
            entries: [[LaurentBi::one(), LaurentBi::zero()], [LaurentBi::zero(), LaurentBi::one()]],
        }
    }

    pub fn det(&self) -> LaurentBi {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> LaurentBi {
        &self.entries[0][0] + &self.entries[1][1]
    }

    /// Inverse of a determinant-one matrix (the adjugate).
    pub fn sl2_inverse(&self) -> SymMat {
        let [[a, b], [c, d]] = &self.entries;
        SymMat { entries: [[d.clone(), -b], [-c, a.clone()]] }
    }

    /// `tr(self * rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &SymMat) -> LaurentBi {
        let (l, r) = (&self.entries, &rhs.entries);
        let mut acc = LaurentBi::zero();
        for i in 0..2 {
            for k in 0..2 {
                acc += &(&l[i][k] * &r[k][i]);
            }
        }
        acc
    }
}

impl std::ops::Mul for &SymMat {
    type Output = SymMat;
    fn mul(self, rhs: &SymMat) -> SymMat {
        let (l, r) = (&self.entries, &rhs.entries);
        let entry = |i: usize, j: usize| &(&l[i][0] * &r[0][j]) + &(&l[i][1] * &r[1][j]);
        SymMat { entries: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]] }
    }
}

impl fmt::Display for SymMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// `(rho(a), rho(b))`.
pub fn rep_matrices() -> (SymMat, SymMat) {
    let a = SymMat {
        entries: [
            [LaurentBi::monomial(1, 1, 0), LaurentBi::one()],
            [LaurentBi::zero(), LaurentBi::monomial(1, -1, 0)],
        ],
    };
    let b = SymMat {
        entries: [
            [LaurentBi::monomial(1, 1, 0), LaurentBi::zero()],
            [LaurentBi::monomial(1, 0, 1), LaurentBi::monomial(1, -1, 0)],
        ],
    };
    (a, b)
}

fn letter_matrix(letter: Letter, a: &SymMat, b: &SymMat) -> Result<SymMat> {
    let m = match letter.generator {
        Generator::A => a,
        Generator::B => b,
    };
    match letter.exp {
        1 => Ok(m.clone()),
        -1 => Ok(m.sl2_inverse()),
        e => Err(Error::InvalidParams(format!("exponent {e} is not +1 or -1"))),
    }
}

/// Left-to-right product of the letter images. Prefix determinants are
/// checked for words of length at most [`DET_CHECK_MAX_LEN`].
pub fn word_matrix(word: &[Letter]) -> Result<SymMat> {
    let (a, b) = rep_matrices();
    let check = word.len() <= DET_CHECK_MAX_LEN;
    let mut acc = SymMat::identity();
    for &letter in word {
        acc = &acc * &letter_matrix(letter, &a, &b)?;
        if check {
            assert!(acc.det().is_one(), "determinant left SL2 after {letter}");
        }
    }
    Ok(acc)
}

pub fn word_trace(word: &[Letter]) -> Result<LaurentBi> {
    Ok(word_matrix(word)?.trace())
}

/// Parses words such as `"a b^-1 a^-1 b"` or `"ab^-1"`.
pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(ch) = chars.next() {
        let generator = match ch {
            'a' => Generator::A,
            'b' => Generator::B,
            other => return Err(Error::Decode(format!("unexpected '{other}' in word"))),
        };
        let mut exp = 1;
        if chars.peek() == Some(&'^') {
            chars.next();
            let sign: String = chars.by_ref().take(2).collect();
            exp = match sign.as_str() {
                "-1" => -1,
                _ => return Err(Error::Decode(format!("exponent must be -1, got ^{sign}"))),
            };
        }
        out.push(Letter { generator, exp });
    }
    Ok(out)
}

/// Rewrites an `s <-> 1/s` symmetric element in `(x, u)` using
/// `s^n + s^-n = T_n(x)`.
pub fn symmetrize(lp: &LaurentBi) -> Result<BiPoly> {
    let Some(u_deg) = lp.u_degree() else {
        return Ok(BiPoly::zero(XU));
    };
    let mut first_kind: Vec<BiPoly> = Vec::new();
    let mut out = BiPoly::zero(XU);
    for k in 0..=u_deg {
        let slice = lp.u_slice(k);
        for (&n, &c) in slice.range(0..) {
            if slice.get(&-n) != Some(&c) {
                return Err(Error::NotSymmetric { u_degree: k });
            }
            let term = if n == 0 {
                BiPoly::monomial(XU, c.clone(), (0, k))
            } else {
                let n = n as usize;
                while first_kind.len() <= n {
                    let t = cheb_t(first_kind.len() as i64)?.with_var(Var::X).to_bi(XU)?;
                    first_kind.push(t);
                }
                &first_kind[n].scale(c) * &BiPoly::monomial(XU, 1, (0, k))
            };
            out += &term;
        }
        if slice.range(..0).any(|(n, _)| !slice.contains_key(&-n)) {
            return Err(Error::NotSymmetric { u_degree: k });
        }
    }
    Ok(out)
}

/// Value of `u` in the given trace coordinates.
fn u_in(coords: CoordSystem) -> Result<BiPoly> {
    match coords {
        CoordSystem::BridgeXZ => Ok(BiPoly::from_i64_terms([Var::X, Var::Z], &[(0, 1, 1), (2, 0, -1), (0, 0, 2)])),
        CoordSystem::TraceEven => Ok(BiPoly::from_i64_terms([Var::X, Var::Y], &[(0, 0, 2), (0, 1, -1)])),
        CoordSystem::TraceOdd => Ok(BiPoly::from_i64_terms([Var::X, Var::Y], &[(0, 1, 1), (2, 0, -1), (0, 0, 2)])),
        CoordSystem::Skein => Err(Error::InvalidParams(
            "the oracle has no skein coordinates; use trace-even, trace-odd or bridge-xz".into(),
        )),
    }
}

/// Rewrites a polynomial in `(x, u)` into the given coordinates.
pub fn from_xu(poly: &BiPoly, coords: CoordSystem) -> Result<BiPoly> {
    poly.substitute(Var::U, &u_in(coords)?)
}

/// `tr(b w a^-1) - tr(w)` in `(x, u)`.
pub fn delta_xu(params: BridgeParams) -> Result<BiPoly> {
    let (a, b) = rep_matrices();
    let w = word_matrix(&params.word().letters)?;
    let tail = &a.sl2_inverse() * &b;
    let delta = &w.trace_of_product(&tail) - &w.trace();
    symmetrize(&delta)
}

/// `tr(b w a^-1) - tr(w)` in the given coordinates.
pub fn delta_poly(params: BridgeParams, coords: CoordSystem) -> Result<BiPoly> {
    from_xu(&delta_xu(params)?, coords)
}

/// Oracle value of `Phi_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OraclePhi {
    pub params: BridgeParams,
    pub coords: CoordSystem,
    /// `Phi_w` normalized so that its abelian slice `Phi_w(0, z)` has positive
    /// leading coefficient.
    pub poly: BiPoly,
    /// `(tr(b w a^-1) - tr(w)) / u = sign * poly`.
    pub sign: i8,
}

/// `Phi_w = (tr(b w a^-1) - tr(w)) / u`, normalized, in the given coordinates.
pub fn defining_poly(params: BridgeParams, coords: CoordSystem) -> Result<OraclePhi> {
    let u = BiPoly::monomial(XU, 1, (0, 1));
    let phi = delta_xu(params)?.exact_div(&u)?;
    let sign = abelian_sign(&phi)?;
    let phi = if sign < 0 { -phi } else { phi };
    Ok(OraclePhi { params, coords, poly: from_xu(&phi, coords)?, sign })
}

/// Sign of the leading coefficient of `phi(0, z)` for `phi` in `(x, u)`.
fn abelian_sign(phi: &BiPoly) -> Result<i8> {
    let slice = from_xu(phi, CoordSystem::BridgeXZ)?.specialize(Var::X, &BigInt::from(0))?;
    match slice.leading_coeff() {
        Some(c) if c.sign() == num_bigint::Sign::Minus => Ok(-1),
        Some(_) => Ok(1),
        None => Err(Error::InvalidParams(format!("{} has a vanishing abelian slice", params_hint(phi)))),
    }
}

fn params_hint(phi: &BiPoly) -> String {
    format!("Phi = {phi}")
}

/// `tr w - tr w' + ... + (-1)^(d-1) tr w^(d-1) + (-1)^d`, where `w^(j)`
/// drops `j` letters from each end of `w`, in `(x, z)`.
pub fn phi_alternating(params: BridgeParams) -> Result<BiPoly> {
    let word = params.word();
    let d = params.d() as usize;
    let mut acc = LaurentBi::monomial(if d.is_multiple_of(2) { 1 } else { -1 }, 0, 0);
    for j in 0..d {
        let tr = word_trace(word.truncated(j))?;
        acc = if j % 2 == 0 { &acc + &tr } else { &acc - &tr };
    }
    from_xu(&symmetrize(&acc)?, CoordSystem::BridgeXZ)
}

/// Abelian slice `Phi_w(0, z)` of the oracle output.
pub fn abelian_slice(params: BridgeParams) -> Result<UniPoly> {
    defining_poly(params, CoordSystem::BridgeXZ)?
        .poly
        .specialize(Var::X, &BigInt::from(0))
}

/// Sign `e` with `Delta = e * (trace presentation)` for the twist knot, or
/// `None` when the two disagree beyond sign.
pub fn twist_delta_sign(knot: TwistKnot) -> Result<Option<i8>> {
    let delta = delta_poly(knot.bridge_params(), knot.trace_coords())?;
    Ok(delta.sign_relative_to(&knot.trace_poly()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bridge::phi_closed_p3;
    use crate::chebyshev::cheb_s;

    fn lp(terms: &[(i32, u32, i64)]) -> LaurentBi {
        LaurentBi::from_terms(terms.iter().map(|&(s, u, c)| ((s, u), BigInt::from(c))))
    }

    fn xz(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_i64_terms([Var::X, Var::Z], terms)
    }

    #[test]
    fn generators() {
        let (a, b) = rep_matrices();
        assert!(a.det().is_one() && b.det().is_one());
        assert!((&a * &a.sl2_inverse()) == SymMat::identity());
        assert_eq!(a.trace(), lp(&[(1, 0, 1), (-1, 0, 1)]));
    }

    #[test]
    fn small_traces() {
        let tr = |w: &str| word_trace(&parse_word(w).unwrap()).unwrap();
        assert_eq!(tr("ab^-1"), lp(&[(0, 0, 2), (0, 1, -1)]));
        assert_eq!(tr("aa^-1"), lp(&[(0, 0, 2)]));
        // tr ab + tr ab^-1 = (s + 1/s)^2
        assert_eq!(&tr("ab") + &tr("ab^-1"), lp(&[(2, 0, 1), (0, 0, 2), (-2, 0, 1)]));
        // u^2 + (s^2 + s^-2 - 2) u + 2, which is t at y = 2 - u
        let expect = lp(&[(0, 2, 1), (0, 1, -2), (2, 1, 1), (-2, 1, 1), (0, 0, 2)]);
        assert_eq!(tr("a b^-1 a^-1 b"), expect);
    }

    #[test]
    fn commutator_trace_is_t() {
        let tr = word_trace(&parse_word("ab^-1a^-1b").unwrap()).unwrap();
        let t = from_xu(&symmetrize(&tr).unwrap(), CoordSystem::TraceEven).unwrap();
        assert_eq!(t, crate::twist::t_poly());
    }

    #[test]
    fn symmetrize_examples() {
        let x = BiPoly::from_i64_terms(XU, &[(1, 0, 1)]);
        assert_eq!(symmetrize(&lp(&[(1, 0, 1), (-1, 0, 1)])).unwrap(), x);
        let x2m2 = BiPoly::from_i64_terms(XU, &[(2, 0, 1), (0, 0, -2)]);
        assert_eq!(symmetrize(&lp(&[(2, 0, 1), (-2, 0, 1)])).unwrap(), x2m2);
        assert!(matches!(symmetrize(&lp(&[(1, 0, 1)])), Err(Error::NotSymmetric { u_degree: 0 })));
        assert!(matches!(symmetrize(&lp(&[(-1, 2, 1)])), Err(Error::NotSymmetric { u_degree: 2 })));
    }

    #[test]
    fn parse_word_rejects_garbage() {
        assert!(parse_word("c").is_err());
        assert!(parse_word("a^2").is_err());
        assert_eq!(parse_word("a b^-1").unwrap().len(), 2);
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let p31 = defining_poly(BridgeParams::new(3, 1).unwrap(), CoordSystem::BridgeXZ).unwrap();
        assert_eq!(p31.poly, xz(&[(0, 1, 1), (0, 0, -1)]));
        let p53 = defining_poly(BridgeParams::new(5, 3).unwrap(), CoordSystem::BridgeXZ).unwrap();
        assert_eq!(p53.poly, phi_closed_p3(5).unwrap());
    }

    #[test]
    fn figure_eight_trace_even() {
        // t + y + 1 - x^2
        let p = defining_poly(BridgeParams::new(5, 3).unwrap(), CoordSystem::TraceEven).unwrap();
        let t = crate::twist::t_poly();
        let expect = &t + &BiPoly::from_i64_terms([Var::X, Var::Y], &[(0, 1, 1), (0, 0, 1), (2, 0, -1)]);
        assert_eq!(p.poly.sign_relative_to(&expect), Some(1));
    }

    #[test]
    fn alternating_sum_matches_division() {
        for (p, q) in [(3, 1), (5, 3), (7, 3), (9, 5), (11, 3), (13, 5), (15, 7)] {
            let params = BridgeParams::new(p, q).unwrap();
            let phi = defining_poly(params, CoordSystem::BridgeXZ).unwrap();
            let alt = phi_alternating(params).unwrap();
            // tr(b w a^-1) - tr(w) = (x^2 - z - 2) Phi_w in this normalization
            assert_eq!(alt, phi.poly, "{params}");
            assert_eq!(phi.sign, -1, "{params}");
        }
    }

    #[test]
    fn abelian_slice_small() {
        for (p, q) in [(5, 2), (7, 2), (9, 2), (11, 4)] {
            let params = BridgeParams::new(p, q).unwrap();
            let d = params.d() as i64;
            assert_eq!(abelian_slice(params).unwrap(), &cheb_s(d) - &cheb_s(d - 1), "{params}");
        }
    }

    #[test]
    fn twist_small() {
        for m in 1..=6 {
            let knot = TwistKnot::new(m).unwrap();
            assert!(twist_delta_sign(knot).unwrap().is_some(), "{knot}");
        }
    }
}
