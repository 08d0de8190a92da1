use num_bigint::BigInt;

use chebvar_core::bridge::{check_phi_irreducible_p3, valid_params, xz_to_coords};
use chebvar_core::oracle::{defining_poly, delta_poly, phi_alternating};
use chebvar_core::suite::{run_suite, SuiteName};
use chebvar_core::twist::{check_r_tilde_irreducible, l_n, l_prime_n, XSequence};
use chebvar_core::{BiPoly, BridgeParams, CoordSystem, TwistKnot, UniPoly, Var};

#[test]
fn map_compositions_at_spot_indices() {
    let xs = XSequence::new(60);
    for m in [1, 2, 50] {
        assert!(xs.verify_prop_gf(m).holds(), "gf m={m}");
    }
    for n in [0, 1, 25] {
        assert!(xs.verify_prop_fg(n).holds(), "fg n={n}");
        assert!(xs.verify_prop_odd(n).holds(), "odd n={n}");
    }
}

#[test]
fn twist_certificates() {
    let y = |c: &[i64]| UniPoly::from_i64s(Var::Y, c);
    let r1 = check_r_tilde_irreducible(1).unwrap();
    assert_eq!((r1.f.clone(), r1.g.clone()), (y(&[-1, 1]), y(&[1])));
    let r2 = check_r_tilde_irreducible(2).unwrap();
    assert_eq!((r2.f.clone(), r2.g.clone()), (y(&[-1, -1, 1]), y(&[1, 1])));
    let r200 = check_r_tilde_irreducible(200).unwrap();
    assert!(r1.is_irreducible() && r2.is_irreducible() && r200.is_irreducible());
    assert_eq!(r200.degree_gap, Some(1));
}

#[test]
fn bridge_certificate_at_1001() {
    let c = check_phi_irreducible_p3(1001).unwrap();
    assert!(c.passes());
    assert_eq!(c.report.degree_gap, Some(1));
}

#[test]
fn oracle_recovers_small_twist_presentations() {
    // K_3 from b(7,3), K_4 from b(9,5)
    let k3 = TwistKnot::new(3).unwrap();
    assert_eq!(delta_poly(k3.bridge_params(), CoordSystem::TraceOdd).unwrap(), l_prime_n(2));
    let k4 = TwistKnot::new(4).unwrap();
    assert_eq!(delta_poly(k4.bridge_params(), CoordSystem::TraceEven).unwrap(), l_n(2));
}

#[test]
fn coordinate_duality() {
    // u = 2 - y and u = z - x^2 + 2 agree after z = x^2 - y
    let z_of_xy = BiPoly::from_i64_terms([Var::X, Var::Y], &[(2, 0, 1), (0, 1, -1)]);
    for params in valid_params(21) {
        let even = defining_poly(params, CoordSystem::TraceEven).unwrap().poly;
        let xz = defining_poly(params, CoordSystem::BridgeXZ).unwrap().poly;
        assert_eq!(xz.substitute(Var::Z, &z_of_xy).unwrap(), even, "{params}");
        assert_eq!(xz_to_coords(&xz, CoordSystem::TraceEven).unwrap(), even, "{params}");
    }
}

#[test]
fn alternating_sum_equals_oracle_for_general_q() {
    for params in valid_params(19) {
        let oracle = defining_poly(params, CoordSystem::BridgeXZ).unwrap();
        let alt = phi_alternating(params).unwrap();
        assert_eq!(alt.sign_relative_to(&oracle.poly), Some(1), "{params}");
        // the oracle's abelian slice has leading coefficient +1 after normalization
        let slice = oracle.poly.specialize(Var::X, &BigInt::from(0)).unwrap();
        assert_eq!(slice.leading_coeff(), Some(&BigInt::from(1)), "{params}");
    }
}

#[test]
fn figure_eight_two_ways() {
    let a = defining_poly(BridgeParams::new(5, 2).unwrap(), CoordSystem::BridgeXZ).unwrap();
    let b = defining_poly(BridgeParams::new(5, 3).unwrap(), CoordSystem::BridgeXZ).unwrap();
    assert_eq!(a.poly, b.poly);
}

#[test]
fn suites_at_moderate_bounds() {
    for (suite, max) in [
        (SuiteName::Chebyshev, 40),
        (SuiteName::Twist, 40),
        (SuiteName::Maps, 15),
        (SuiteName::Bridge3, 101),
        (SuiteName::Oracle, 25),
    ] {
        let r = run_suite(suite, max).unwrap();
        assert!(r.passed(), "{}", r.render_text(false));
    }
}
