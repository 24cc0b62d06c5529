use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liecot_core::geom::{aff, double, sweep};
use liecot_core::operators::{derivations_with, prederivations_with};
use liecot_core::rational::int;
use liecot_core::{catalog, Execution, LieAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const POLICIES: [(&str, Execution); 2] = [
    ("parallel", Execution::Parallel),
    ("sequential", Execution::Sequential),
];

fn solvers(c: &mut Criterion) {
    let cases: Vec<(&str, LieAlgebra)> = vec![
        ("T*sl2", catalog::sl2().cotangent()),
        ("T*osc", catalog::oscillator(int(1)).unwrap().cotangent()),
        (
            "T*(sl2+so3)",
            LieAlgebra::direct_sum(&catalog::sl2(), &catalog::so3()).cotangent(),
        ),
    ];
    let mut group = c.benchmark_group("derivations");
    for (name, d) in &cases {
        for (policy, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(policy, name), d, |b, d| {
                b.iter(|| derivations_with(d, exec))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("prederivations");
    group.sample_size(10);
    for (name, d) in &cases[..2] {
        for (policy, exec) in POLICIES {
            group.bench_with_input(BenchmarkId::new(policy, name), d, |b, d| {
                b.iter(|| prederivations_with(d, exec))
            });
        }
    }
    group.finish();
}

fn geometry(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let xis: Vec<aff::AffTangent> = (0..64)
        .map(|_| aff::AffTangent::new(rng.gen_range(0.2..2.0), rng.gen_range(-2.0..2.0)))
        .collect();
    let triples: Vec<_> = (0..100_000)
        .map(|_| {
            let mut p = || double::DoubleElement::new([0; 4].map(|_| rng.gen_range(-2.0..2.0)));
            (p(), p(), p())
        })
        .collect();
    let mut group = c.benchmark_group("geometry");
    for (policy, exec) in POLICIES {
        group.bench_function(BenchmarkId::new(policy, "aff geodesic vs rk4"), |b| {
            b.iter(|| sweep::aff_geodesic_rk4_error(&xis, 100, 200, exec))
        });
        group.bench_function(BenchmarkId::new(policy, "double associativity"), |b| {
            b.iter(|| sweep::double_associativity_error(&triples, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, solvers, geometry);
criterion_main!(benches);
