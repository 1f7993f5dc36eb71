//! Ready-made algebras used throughout the examples and tests.

use crate::algebra::{Algebra, Arrow, QuiverPresentation, RelationTerm};
use crate::linalg::Field;

/// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`, arrows `a1 .. a{n-1}`.
/// With `radical_power = Some(r)` every path of length `r` is killed.
pub fn linear_a_over(field: Field, n: usize, radical_power: Option<usize>) -> Algebra {
    assert!(n >= 1, "A_n needs at least one vertex");
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<Arrow> =
        (0..n - 1).map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: i + 1 }).collect();
    let (relations, bound) = match radical_power {
        Some(r) if r >= 1 && r < n => {
            let rels = (0..n - r)
                .map(|start| {
                    // arrows start .. start+r-1, listed target-to-source
                    let path = (start..start + r).rev().collect();
                    vec![RelationTerm { coeff: field.one(), path }]
                })
                .collect();
            (rels, r)
        }
        _ => (Vec::new(), n),
    };
    let p = QuiverPresentation { vertices, arrows, relations, nilpotency_bound: bound.max(1) };
    Algebra::from_quiver(p, field).expect("linear quiver presentation is valid")
}

pub fn linear_a(n: usize, radical_power: Option<usize>) -> Algebra {
    linear_a_over(Field::Rationals, n, radical_power)
}

/// Cyclic quiver on `n` vertices, `d_i : i -> i-1`, all composites
/// `d_i d_{i+1}` zero. For `n = 1` this is `k[x]/(x^2)`.
pub fn cyclic_rad_square_over(field: Field, n: usize) -> Algebra {
    assert!(n >= 1, "cyclic quiver needs at least one vertex");
    let vertices = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (0..n)
        .map(|i| Arrow { name: format!("d{}", i + 1), source: i, target: (i + n - 1) % n })
        .collect();
    let relations = (0..n)
        .map(|i| vec![RelationTerm { coeff: field.one(), path: vec![i, (i + 1) % n] }])
        .collect();
    let p = QuiverPresentation { vertices, arrows, relations, nilpotency_bound: 2 };
    Algebra::from_quiver(p, field).expect("cyclic presentation is valid")
}

pub fn cyclic_rad_square(n: usize) -> Algebra {
    cyclic_rad_square_over(Field::Rationals, n)
}

/// `k[x]/(x^m)` as a one-loop quiver.
pub fn poly_trunc_over(field: Field, m: usize) -> Algebra {
    assert!(m >= 1, "k[x]/(x^m) needs m >= 1");
    let p = QuiverPresentation {
        vertices: vec!["1".into()],
        arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        relations: vec![vec![RelationTerm { coeff: field.one(), path: vec![0; m] }]],
        nilpotency_bound: m,
    };
    Algebra::from_quiver(p, field).expect("truncated polynomial presentation is valid")
}

pub fn poly_trunc(m: usize) -> Algebra {
    poly_trunc_over(Field::Rationals, m)
}

pub fn dual_numbers() -> Algebra {
    poly_trunc(2)
}
