use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use chebvar_core::bridge::{check_phi_irreducible_p3, phi_closed_p3, phi_recursive_p3};
use chebvar_core::chebyshev::{cheb_s, check_product_sum_row};
use chebvar_core::oracle::defining_poly;
use chebvar_core::poly::uni_gcd;
use chebvar_core::twist::{t_poly, x_sequence, XSequence};
use chebvar_core::{BridgeParams, CoordSystem};

fn polynomial_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("poly");
    for n in [100i64, 400] {
        let (a, b) = (cheb_s(n), cheb_s(n - 1));
        g.bench_with_input(BenchmarkId::new("uni_mul", n), &n, |bch, _| bch.iter(|| black_box(&a * &b)));
        let f = &a - &b;
        g.bench_with_input(BenchmarkId::new("uni_gcd", n), &n, |bch, _| bch.iter(|| uni_gcd(black_box(&f), &a)));
    }
    let t = t_poly();
    let t10 = t.pow(10);
    g.bench_function("bi_mul t^10 * t", |bch| bch.iter(|| black_box(&t10 * &t)));
    let prod = &t10 * &t;
    g.bench_function("bi_exact_div t^11 / t", |bch| bch.iter(|| prod.exact_div(black_box(&t)).unwrap()));
    g.finish();
}

fn identity_suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("identities");
    g.sample_size(10);
    g.bench_function("product-sum row s=100 r<=100", |bch| bch.iter(|| check_product_sum_row(100, 100)));
    g.bench_function("x_sequence 100", |bch| bch.iter(|| x_sequence(black_box(100))));
    let xs = XSequence::new(41);
    g.bench_function("f o g even n=20", |bch| bch.iter(|| xs.verify_prop_fg(20)));
    g.finish();
}

fn bridge_and_oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("bridge");
    g.sample_size(10);
    for p in [101i64, 301] {
        g.bench_with_input(BenchmarkId::new("closed", p), &p, |bch, &p| bch.iter(|| phi_closed_p3(p).unwrap()));
        g.bench_with_input(BenchmarkId::new("recursion", p), &p, |bch, &p| bch.iter(|| phi_recursive_p3(p).unwrap()));
        g.bench_with_input(BenchmarkId::new("certificate", p), &p, |bch, &p| {
            bch.iter(|| check_phi_irreducible_p3(p).unwrap())
        });
    }
    for p in [31i64, 61] {
        let params = BridgeParams::with_q3(p).unwrap();
        g.bench_with_input(BenchmarkId::new("oracle", p), &params, |bch, &params| {
            bch.iter(|| defining_poly(params, CoordSystem::BridgeXZ).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, polynomial_kernels, identity_suites, bridge_and_oracle);
criterion_main!(benches);
