#![allow(dead_code)]

use std::sync::Arc;

use nakayama::algebra::builtins::{dual_numbers, linear_a, poly_trunc};
use nakayama::algebra::{Algebra, AlgebraRef};
use nakayama::linalg::{Field, Matrix};
use nakayama::module::{indecomposable_projectives, ModuleMap, ModuleRep, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The algebras the acceptance criteria range over.
pub fn suite() -> Vec<(&'static str, AlgebraRef)> {
    vec![
        ("kA2", Arc::new(linear_a(2, None))),
        ("kA3", Arc::new(linear_a(3, None))),
        ("kA3/rad^2", Arc::new(linear_a(3, Some(2)))),
        ("k[x]/(x^2)", Arc::new(dual_numbers())),
        ("k[x]/(x^3)", Arc::new(poly_trunc(3))),
        ("k^3", Arc::new(Algebra::semisimple(Field::Rationals, 3))),
    ]
}

/// A sum of indecomposable projectives (indices into the list, cycled) with
/// the submodule generated by one element either kept or factored out.
pub fn module_from(a: &AlgebraRef, summands: &[usize], coeffs: &[i64], quotient: bool) -> ModuleRep {
    let ps = indecomposable_projectives(a, Side::Left).unwrap();
    let parts: Vec<ModuleRep> = summands.iter().map(|&i| ps[i % ps.len()].clone()).collect();
    let (sum, _, _) = ModuleRep::direct_sum(a, Side::Left, &parts);
    let f = a.field();
    let v = Matrix::from_fn(f, sum.dim(), 1, |i, _| f.from_i64(coeffs[i % coeffs.len()]));
    let sub = sum.generated_by(&v);
    let inner = sum.submodule(&sub);
    if quotient {
        ModuleMap::new(inner, sum, sub.basis().clone()).unwrap().cokernel().0
    } else {
        inner
    }
}

/// Deterministic pseudo-random module of dimension at most `max_dim`.
pub fn seeded_module(a: &AlgebraRef, seed: u64, max_dim: usize) -> ModuleRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let k = rng.gen_range(1..=3);
        let summands: Vec<usize> = (0..k).map(|_| rng.gen_range(0..8)).collect();
        let coeffs: Vec<i64> = (0..7).map(|_| rng.gen_range(-3..=3)).collect();
        let m = module_from(a, &summands, &coeffs, rng.gen_bool(0.5));
        if m.dim() <= max_dim && m.dim() > 0 {
            return m;
        }
    }
}

/// A fixed linear combination of a hom-space basis.
pub fn combination(basis: &[ModuleMap], coeffs: &[i64], m: &ModuleRep, n: &ModuleRep) -> ModuleMap {
    let f = m.field();
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(ModuleMap::zero(m, n), |acc, (g, &c)| acc.add(&g.scale(&f.from_i64(c))))
}
