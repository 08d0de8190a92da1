use num_bigint::BigInt;
use proptest::prelude::*;

use chebvar_core::bridge::{phi_closed_p3, phi_recursive_p3, pqr_p3, valid_params, BridgeParams};
use chebvar_core::chebyshev::cheb_s;
use chebvar_core::oracle::{rep_matrices, word_matrix};
use chebvar_core::poly::uni_gcd;
use chebvar_core::twist::{r_m, r_tilde_m, x_m, x_m_closed};
use chebvar_core::{BiPoly, Error, UniPoly, Var};

const XY: [Var; 2] = [Var::X, Var::Y];

fn bi_strategy() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -9i64..=9), 0..7)
        .prop_map(|terms| BiPoly::from_i64_terms(XY, &terms))
}

fn uni_strategy() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 0..6).prop_map(|c| UniPoly::from_i64s(Var::Z, &c))
}

fn valid_q3() -> impl Strategy<Value = i64> {
    (2i64..=50).prop_map(|k| 2 * k + 1).prop_filter("gcd with 3", |p| p % 3 != 0)
}

proptest! {
    #[test]
    fn ring_axioms(a in bi_strategy(), b in bi_strategy(), c in bi_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_div_inverts_multiplication(q in bi_strategy(), d in bi_strategy()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn exact_div_rejects_remainders(q in bi_strategy(), d in bi_strategy(), r in 1i64..5) {
        // d has a non-constant term, so q d + r is not a multiple of d
        prop_assume!(d.total_degree().unwrap_or(0) > 0);
        let p = &(&q * &d) + &BiPoly::constant(XY, r);
        prop_assert!(matches!(p.exact_div(&d), Err(Error::NotDivisible)));
    }

    #[test]
    fn gcd_divides_both(a in uni_strategy(), b in uni_strategy(), common in uni_strategy()) {
        let (pa, pb) = (&a * &common, &b * &common);
        let g = uni_gcd(&pa, &pb);
        if !g.is_zero() {
            prop_assert!(pa.div_exact(&g).is_ok());
            prop_assert!(pb.div_exact(&g).is_ok());
            prop_assert!(g.leading_coeff().unwrap() > &BigInt::from(0));
        }
        prop_assert_eq!(uni_gcd(&pb, &pa), g.clone());
        // the common factor's primitive part divides the gcd
        if !common.is_zero() && !g.is_zero() {
            prop_assert!(g.div_exact(&common.primitive_part()).is_ok());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in bi_strategy(), b in bi_strategy(), x in -5i64..5, y in -5i64..5) {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
        prop_assert_eq!((&a + &b).eval(&x, &y), a.eval(&x, &y) + b.eval(&x, &y));
    }

    #[test]
    fn json_round_trip(a in bi_strategy(), u in uni_strategy()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<BiPoly>(&text).unwrap(), a);
        let text = serde_json::to_string(&u).unwrap();
        prop_assert_eq!(serde_json::from_str::<UniPoly>(&text).unwrap(), u);
    }

    #[test]
    fn x_closed_form(m in 1i64..80) {
        prop_assert_eq!(x_m(m).unwrap(), x_m_closed(m));
    }

    #[test]
    fn skein_factor(m in 0i64..60) {
        let y_plus_2 = BiPoly::from_i64_terms(XY, &[(0, 1, 1), (0, 0, 2)]);
        prop_assert_eq!(r_m(m).unwrap(), &y_plus_2 * &r_tilde_m(m).unwrap());
    }

    #[test]
    fn q3_routes_agree(p in valid_q3()) {
        let closed = phi_closed_p3(p).unwrap();
        prop_assert_eq!(phi_recursive_p3(p).unwrap(), closed.clone());
        let pqr = pqr_p3(p).unwrap();
        let d = (p - 1) / 2;
        prop_assert_eq!(pqr.p.degree(), Some(d as usize));
        prop_assert_eq!((&pqr.q * &pqr.r).degree(), Some(d as usize - 1));
        prop_assert_eq!(closed.specialize(Var::X, &BigInt::from(0)).unwrap(), &cheb_s(d) - &cheb_s(d - 1));
    }

    #[test]
    fn words_stay_in_sl2(idx in 0usize..200) {
        let all = valid_params(25);
        let params = all[idx % all.len()];
        // word_matrix checks every prefix determinant for short words
        let w = word_matrix(&params.word().letters).unwrap();
        prop_assert!(w.det().is_one());
    }
}

#[test]
fn epsilon_palindromic_up_to_200() {
    for params in valid_params(200) {
        let e = params.epsilon();
        for j in 1..params.p() as usize {
            assert_eq!(e[j - 1], e[params.p() as usize - j - 1], "{params} j={j}");
        }
    }
}

#[test]
fn generators_have_unit_determinant() {
    let (a, b) = rep_matrices();
    assert!(a.det().is_one());
    assert!(b.det().is_one());
    assert!(BridgeParams::new(4, 1).is_err());
}

#[test]
fn memo_is_thread_safe() {
    let handles: Vec<_> = (0..4)
        .map(|k| std::thread::spawn(move || (0..120).rev().map(|n| cheb_s(n + k)).collect::<Vec<_>>()))
        .collect();
    let results: Vec<Vec<UniPoly>> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    for (k, polys) in results.iter().enumerate() {
        for (i, p) in polys.iter().enumerate() {
            let n = 119 - i as i64 + k as i64;
            assert_eq!(p.degree(), Some(n as usize));
            assert_eq!(*p, cheb_s(n));
        }
    }
}
