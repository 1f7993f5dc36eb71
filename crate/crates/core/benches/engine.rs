//! Parallel against single-threaded runs of the fan-out-heavy entry points.
//! Without the `parallel` feature only the sequential build is measured.

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use nakayama::algebra::builtins::{cyclic_rad_square, linear_a};
use nakayama::algebra::AlgebraRef;
use nakayama::functors::{verify_adjunction, Adjunction};
use nakayama::gorenstein::{default_bound, uniserial_quotients, verify_four_numbers};
use nakayama::module::ModuleRep;

fn algebras() -> Vec<(&'static str, AlgebraRef)> {
    vec![("kA3", Arc::new(linear_a(3, None))), ("cyclic3", Arc::new(cyclic_rad_square(3)))]
}

fn four_numbers(a: &AlgebraRef) {
    verify_four_numbers(a, &[], default_bound(a)).unwrap();
}

fn adjunction(tests: &[ModuleRep]) {
    assert!(verify_adjunction(Adjunction::PI, tests, false).unwrap().passed);
}

#[cfg(feature = "parallel")]
fn modes() -> Vec<(&'static str, rayon::ThreadPool)> {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    vec![("1 thread", one), ("pool", all)]
}

#[cfg(feature = "parallel")]
fn run_in<R: Send>(pool: &rayon::ThreadPool, f: impl FnOnce() -> R + Send) -> R {
    pool.install(f)
}

#[cfg(not(feature = "parallel"))]
fn modes() -> Vec<(&'static str, ())> {
    vec![("sequential", ())]
}

#[cfg(not(feature = "parallel"))]
fn run_in<R>(_: &(), f: impl FnOnce() -> R) -> R {
    f()
}

fn bench(c: &mut Criterion) {
    let modes = modes();
    let mut g = c.benchmark_group("four_numbers");
    g.sample_size(10);
    for (name, a) in algebras() {
        for (mode, pool) in &modes {
            g.bench_with_input(BenchmarkId::new(*mode, name), &a, |b, a| b.iter(|| run_in(pool, || four_numbers(a))));
        }
    }
    g.finish();

    let mut g = c.benchmark_group("adjunction_p_i");
    g.sample_size(10);
    for (name, a) in algebras() {
        let tests: Vec<ModuleRep> = uniserial_quotients(&a).unwrap().into_iter().map(|m| m.module).collect();
        for (mode, pool) in &modes {
            g.bench_with_input(BenchmarkId::new(*mode, name), &tests, |b, t| b.iter(|| run_in(pool, || adjunction(t))));
        }
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
