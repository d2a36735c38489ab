use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use galq_core::chars::{gamma_sum, weil_sweep};
use galq_core::codes::cyclic_code;
use galq_core::gf::{FieldSpec, FqPoly};
use galq_core::gring::RingSpec;
use galq_core::mub::{mub_even, mub_odd, verify_unbiasedness};
use galq_core::pg::{arc_search, build_pg, SearchMode};
use galq_core::phase::{galois_phase_operator, lock_sweep, LockRange};

fn fields(c: &mut Criterion) {
    let mut group = c.benchmark_group("field");
    for q in [256u64, 3125, 65536] {
        group.bench_with_input(BenchmarkId::new("construct", q), &q, |b, &q| {
            b.iter(|| FieldSpec::with_order(black_box(q)).unwrap())
        });
        let field = FieldSpec::with_order(q).unwrap();
        group.bench_with_input(BenchmarkId::new("mul_all_by_alpha", q), &field, |b, f| {
            b.iter(|| {
                f.elements()
                    .fold(f.zero(), |acc, x| f.add(acc, f.mul(x, f.alpha())))
            })
        });
    }
    group.finish();
}

fn rings(c: &mut Criterion) {
    let ring = RingSpec::new(4).unwrap();
    c.bench_function("ring/gamma_all_m4", |b| {
        b.iter(|| {
            ring.elements()
                .map(|y| gamma_sum(&ring, y).unwrap().norm())
                .sum::<f64>()
        })
    });
}

fn mubs(c: &mut Criterion) {
    let mut group = c.benchmark_group("mub");
    for q in [9u64, 27] {
        let field = FieldSpec::with_order(q).unwrap();
        group.bench_with_input(BenchmarkId::new("odd_build_verify", q), &field, |b, f| {
            b.iter(|| {
                verify_unbiasedness(&mub_odd(f, 1).unwrap(), 1e-9)
                    .unwrap()
                    .pass
            })
        });
    }
    let ring = RingSpec::new(4).unwrap();
    group.bench_function("even_build_verify_m4", |b| {
        b.iter(|| {
            verify_unbiasedness(&mub_even(&ring, 1).unwrap(), 1e-9)
                .unwrap()
                .pass
        })
    });
    group.finish();
}

fn sums(c: &mut Criterion) {
    let field = FieldSpec::with_order(27).unwrap();
    c.bench_function("sum/weil_sweep_200_q27", |b| {
        b.iter(|| weil_sweep(&field, 200, 6, 0, 1e-9).unwrap().all_pass)
    });
}

fn codes(c: &mut Criterion) {
    let f2 = FieldSpec::prime(2).unwrap();
    // x^8+x^7+x^6+x^4+1 divides x^15-1: the [15,7] BCH code.
    let g = FqPoly::new(&f2, vec![1, 0, 0, 0, 1, 0, 1, 1, 1]).unwrap();
    let code = cyclic_code(15, &f2, &g).unwrap();
    c.bench_function("code/min_distance_15_7", |b| {
        b.iter(|| code.min_distance().unwrap().d_min)
    });
}

fn geometry(c: &mut Criterion) {
    let space = build_pg(2, &FieldSpec::with_order(4).unwrap()).unwrap();
    c.bench_function("pg/exhaustive_arc_pg24", |b| {
        b.iter(|| arc_search(&space, SearchMode::Exhaustive).unwrap().size)
    });
    let solid = build_pg(3, &FieldSpec::prime(2).unwrap()).unwrap();
    c.bench_function("pg/exhaustive_cap_pg32", |b| {
        b.iter(|| arc_search(&solid, SearchMode::Exhaustive).unwrap().size)
    });
}

fn phase(c: &mut Criterion) {
    c.bench_function("phase/lock_sweep_2_50", |b| {
        b.iter(|| lock_sweep(2, 50, 1.0, LockRange::Full).unwrap().rows.len())
    });
    let field = FieldSpec::with_order(9).unwrap();
    c.bench_function("phase/galois_operator_q9", |b| {
        b.iter(|| {
            galois_phase_operator(&field, field.one(), 1)
                .unwrap()
                .max_discrepancy
        })
    });
}

criterion_group!(benches, fields, rings, mubs, sums, codes, geometry, phase);
criterion_main!(benches);
