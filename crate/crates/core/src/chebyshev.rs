//! Chebyshev polynomials of the second kind `S_n` and first kind `T_n`.
//!
//! Both satisfy `f_{n+1} = z f_n - f_{n-1}`, with seeds `S_0 = 1, S_1 = z`
//! and `T_0 = 2, T_1 = z`. `S_n` is defined for every integer `n` through
//! `S_{-n} = -S_{n-2}`.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, IdentityCheck, UniPoly, Var};

struct Memo {
    s: Vec<Arc<UniPoly>>,
    t: Vec<Arc<UniPoly>>,
}

fn memo() -> &'static RwLock<Memo> {
    static MEMO: OnceLock<RwLock<Memo>> = OnceLock::new();
    MEMO.get_or_init(|| {
        let z = UniPoly::var_poly(Var::Z);
        RwLock::new(Memo {
            s: vec![Arc::new(UniPoly::one(Var::Z)), Arc::new(z.clone())],
            t: vec![Arc::new(UniPoly::constant(Var::Z, 2)), Arc::new(z)],
        })
    })
}

fn extend(seq: &mut Vec<Arc<UniPoly>>, n: usize) {
    let z = UniPoly::var_poly(Var::Z);
    while seq.len() <= n {
        let k = seq.len();
        let next = &(&z * &*seq[k - 1]) - &*seq[k - 2];
        seq.push(Arc::new(next));
    }
}

fn lookup(n: usize, first_kind: bool) -> Arc<UniPoly> {
    {
        let m = memo().read().unwrap();
        let seq = if first_kind { &m.t } else { &m.s };
        if let Some(p) = seq.get(n) {
            return Arc::clone(p);
        }
    }
    let mut m = memo().write().unwrap();
    let seq = if first_kind { &mut m.t } else { &mut m.s };
    extend(seq, n);
    Arc::clone(&seq[n])
}

/// Shared handle to `S_n(z)` for `n >= 0`.
pub fn cheb_s_shared(n: usize) -> Arc<UniPoly> {
    lookup(n, false)
}

/// `S_n(z)` for any integer `n`.
pub fn cheb_s(n: i64) -> UniPoly {
    match n {
        -1 => UniPoly::zero(Var::Z),
        n if n >= 0 => (*cheb_s_shared(n as usize)).clone(),
        n => -&*cheb_s_shared((-n - 2) as usize),
    }
}

/// `S_n` in the variable `var`.
pub fn cheb_s_in(n: i64, var: Var) -> UniPoly {
    cheb_s(n).with_var(var)
}

/// `T_n(z)`, defined for `n >= 0`.
pub fn cheb_t(n: i64) -> Result<UniPoly> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    Ok((*lookup(n as usize, true)).clone())
}

/// The roots `2 cos(j pi / (n + 1))`, `j = 1..=n`, of `S_n`, descending.
pub fn cheb_s_roots(n: i64) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::NegativeIndex(n));
    }
    let step = std::f64::consts::PI / (n + 1) as f64;
    Ok((1..=n).map(|j| 2.0 * (j as f64 * step).cos()).collect())
}

/// The roots `2 cos((2j + 1) pi / (2n + 1))`, `j = 0..n`, of `S_n - S_{n-1}`,
/// descending.
pub fn cheb_s_diff_roots(n: i64) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::NegativeIndex(n));
    }
    let denom = (2 * n + 1) as f64;
    Ok((0..n)
        .map(|j| 2.0 * ((2 * j + 1) as f64 * std::f64::consts::PI / denom).cos())
        .collect())
}

/// `alpha_n = S_n - S_{n-1} + ... + (-1)^n S_0`.
///
/// Computed as the alternating sum and checked against the factored form
/// `S_{n - floor((n+1)/2)} (S_{floor((n+1)/2)} - S_{floor((n-1)/2)})`.
pub fn alt_sum_alpha(n: u32) -> UniPoly {
    let n = n as i64;
    let mut sum = UniPoly::zero(Var::Z);
    for k in 0..=n {
        let s = cheb_s(k);
        sum = if (n - k) % 2 == 0 { &sum + &s } else { &sum - &s };
    }
    let hi = (n + 1).div_euclid(2);
    let lo = (n - 1).div_euclid(2);
    let closed = &cheb_s(n - hi) * &(&cheb_s(hi) - &cheb_s(lo));
    assert_eq!(sum, closed, "alternating S-sum disagrees with its factored form at n = {n}");
    sum
}

/// `beta_n = -T_{n+1} + 2 (T_n - T_{n-1} + ... + (-1)^{n-1} T_1 + (-1)^n)`,
/// checked against `(2 - z) S_n`.
pub fn alt_sum_beta(n: u32) -> UniPoly {
    let n = n as i64;
    let mut inner = UniPoly::constant(Var::Z, if n % 2 == 0 { 1 } else { -1 });
    for k in 1..=n {
        let t = cheb_t(k).expect("non-negative index");
        inner = if (n - k) % 2 == 0 { &inner + &t } else { &inner - &t };
    }
    let sum = &inner.scale(&BigInt::from(2)) - &cheb_t(n + 1).expect("non-negative index");
    let closed = &UniPoly::from_i64s(Var::Z, &[2, -1]) * &cheb_s(n);
    assert_eq!(sum, closed, "alternating T-sum disagrees with (2 - z) S_n at n = {n}");
    sum
}

/// `S_lo(t), ..., S_hi(t)` for a bivariate argument `t`, by running the
/// recurrence in both directions from `S_{-1} = 0, S_0 = 1`.
pub fn cheb_s_window(t: &BiPoly, lo: i64, hi: i64) -> Vec<BiPoly> {
    assert!(lo <= hi, "empty index window");
    let vars = t.vars();
    let start = lo.min(-1);
    let end = hi.max(0);
    let len = (end - start + 1) as usize;
    let mut seq = vec![BiPoly::zero(vars); len];
    let at = |k: i64| (k - start) as usize;
    seq[at(0)] = BiPoly::one(vars);
    for k in 1..=end {
        seq[at(k)] = &(t * &seq[at(k - 1)]) - &seq[at(k - 2)];
    }
    for k in (start..-1).rev() {
        // S_k = t S_{k+1} - S_{k+2}
        seq[at(k)] = &(t * &seq[at(k + 1)]) - &seq[at(k + 2)];
    }
    seq.drain(at(lo)..=at(hi)).collect()
}

/// `S_n(t)` for a bivariate argument `t`.
pub fn cheb_s_at(n: i64, t: &BiPoly) -> BiPoly {
    cheb_s_window(t, n, n).pop().unwrap()
}

/// Closed form of any sequence with `f_{n+1} = t f_n - f_{n-1}`:
/// `f_n = f_0 S_n(t) - f_{-1} S_{n-1}(t)`.
pub fn recurrence_closed_form(f0: &BiPoly, f_neg1: &BiPoly, n: i64, t: &BiPoly) -> BiPoly {
    let w = cheb_s_window(t, n - 1, n);
    &(f0 * &w[1]) - &(f_neg1 * &w[0])
}

/// `S_r S_{r+s} = S_{2r+s} + S_{2r+s-2} + ... + S_s` for `r, s >= 0`.
pub fn check_product_sum(r: u32, s: u32) -> IdentityCheck<UniPoly> {
    let mut sum = UniPoly::zero(Var::Z);
    for k in 0..=r {
        sum = &sum + &*cheb_s_shared((s + 2 * k) as usize);
    }
    let lhs = &*cheb_s_shared(r as usize) * &*cheb_s_shared((r + s) as usize);
    IdentityCheck::<UniPoly>::new(&lhs, &sum)
}

/// [`check_product_sum`] for every `r` in `0..=r_max` at fixed `s`, sharing
/// the running sum.
pub fn check_product_sum_row(s: u32, r_max: u32) -> Vec<IdentityCheck<UniPoly>> {
    let mut sum = UniPoly::zero(Var::Z);
    (0..=r_max)
        .map(|r| {
            sum = &sum + &*cheb_s_shared((s + 2 * r) as usize);
            let lhs = &*cheb_s_shared(r as usize) * &*cheb_s_shared((r + s) as usize);
            IdentityCheck::<UniPoly>::new(&lhs, &sum)
        })
        .collect()
}

/// `S_m S_{m-2} - S_{m-1}^2 = -1`.
pub fn check_cassini(m: i64) -> IdentityCheck<UniPoly> {
    let lhs = &(&cheb_s(m) * &cheb_s(m - 2)) - &(&cheb_s(m - 1) * &cheb_s(m - 1));
    IdentityCheck::<UniPoly>::new(&lhs, &UniPoly::constant(Var::Z, -1))
}

/// `S_{m+1}^2 + S_{m-1}^2 - (z^2 - 2) S_m^2 = 2`.
pub fn check_square_sum(m: i64) -> IdentityCheck<UniPoly> {
    let sq = |k: i64| {
        let s = cheb_s(k);
        &s * &s
    };
    let lhs = &(&sq(m + 1) + &sq(m - 1)) - &(&UniPoly::from_i64s(Var::Z, &[-2, 0, 1]) * &sq(m));
    IdentityCheck::<UniPoly>::new(&lhs, &UniPoly::constant(Var::Z, 2))
}

/// `S_{-n} = -S_{n-2}`, with the negative index computed by running the
/// recurrence downwards rather than through the reflection itself.
pub fn check_reflection(n: i64) -> IdentityCheck<UniPoly> {
    let z = BiPoly::variable([Var::Z, Var::X], Var::Z).unwrap();
    let via_recurrence = cheb_s_at(-n, &z).to_uni(Var::Z).unwrap();
    IdentityCheck::<UniPoly>::new(&via_recurrence, &-cheb_s(n - 2))
}

/// `S_{n+1} S_n + S_{n-1} S_{n-2} - (z^2 - 2) S_n S_{n-1} = z`.
pub fn check_adjacent_product(n: i64) -> IdentityCheck<UniPoly> {
    let lhs = &(&(&cheb_s(n + 1) * &cheb_s(n)) + &(&cheb_s(n - 1) * &cheb_s(n - 2)))
        - &(&UniPoly::from_i64s(Var::Z, &[-2, 0, 1]) * &(&cheb_s(n) * &cheb_s(n - 1)));
    IdentityCheck::<UniPoly>::new(&lhs, &UniPoly::var_poly(Var::Z))
}

/// `T_n = S_n - S_{n-2}` for `n >= 0`.
pub fn check_first_kind(n: u32) -> IdentityCheck<UniPoly> {
    let n = n as i64;
    IdentityCheck::<UniPoly>::new(&cheb_t(n).unwrap(), &(&cheb_s(n) - &cheb_s(n - 2)))
}

/// Largest `|S_n(r)|` over the listed roots of `S_n` and largest
/// `|(S_n - S_{n-1})(r)|` over the listed roots of `S_n - S_{n-1}`, each
/// paired with its tolerance `1e-9 * (1 + sum |coeffs|)`.
pub fn root_residuals(n: i64) -> Result<[(f64, f64); 2]> {
    let s = cheb_s(n);
    let diff = &s - &cheb_s(n - 1);
    let tol = |p: &UniPoly| {
        let mass: f64 = num_traits::ToPrimitive::to_f64(&p.abs_coeff_sum()).unwrap_or(f64::INFINITY);
        1e-9 * (1.0 + mass)
    };
    let worst = |p: &UniPoly, roots: Vec<f64>| {
        roots.into_iter().map(|r| p.eval_exact_f64(r).abs()).fold(0.0, f64::max)
    };
    Ok([
        (worst(&s, cheb_s_roots(n)?), tol(&s)),
        (worst(&diff, cheb_s_diff_roots(n)?), tol(&diff)),
    ])
}

/// Leading coefficient and degree sanity used by the root descriptions: `S_n` and
/// `S_n - S_{n-1}` are monic of degree `n`.
pub fn is_monic_of_degree(p: &UniPoly, n: usize) -> bool {
    p.degree() == Some(n) && p.leading_coeff().is_some_and(num_traits::One::is_one)
}
