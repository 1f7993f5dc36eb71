use std::sync::Arc;

use super::*;
use crate::algebra::builtins::*;
use crate::algebra::Bimodule;

const Q: Field = Field::Rationals;

fn a2() -> AlgebraRef {
    Arc::new(linear_a(2, None))
}

/// The kA_2 representation `V1 -> V2` given by one matrix.
fn rep(a: &AlgebraRef, d1: usize, d2: usize, m: &[&[i64]]) -> ModuleRep {
    let arrow = if d1 * d2 == 0 { Matrix::zeros(Q, d2, d1) } else { Matrix::from_i64(Q, m) };
    ModuleRep::from_quiver_rep(a.clone(), Side::Left, &[d1, d2], &[arrow]).unwrap()
}

#[test]
fn quiver_rep_matches_projectives() {
    let a = a2();
    let p = indecomposable_projectives(&a, Side::Left).unwrap();
    assert!(is_isomorphic(&rep(&a, 1, 1, &[&[1]]), &p[0]).unwrap());
    assert!(is_isomorphic(&rep(&a, 0, 1, &[]), &p[1]).unwrap());
    let i = indecomposable_injectives(&a, Side::Left).unwrap();
    assert!(is_isomorphic(&rep(&a, 1, 0, &[]), &i[0]).unwrap());
    assert!(is_isomorphic(&rep(&a, 1, 1, &[&[1]]), &i[1]).unwrap());
    assert!(!is_isomorphic(&rep(&a, 1, 1, &[&[0]]), &p[0]).unwrap());
}

#[test]
fn quiver_rep_rejects_broken_relation() {
    // kA_3 / rad^2 needs the composite of the two arrows to vanish
    let a = Arc::new(linear_a(3, Some(2)));
    let ok = ModuleRep::from_quiver_rep(
        a.clone(),
        Side::Left,
        &[1, 1, 1],
        &[Matrix::from_i64(Q, &[&[1]]), Matrix::from_i64(Q, &[&[0]])],
    );
    assert!(ok.is_ok());
    let bad = ModuleRep::from_quiver_rep(
        a.clone(),
        Side::Left,
        &[1, 1, 1],
        &[Matrix::from_i64(Q, &[&[1]]), Matrix::from_i64(Q, &[&[1]])],
    );
    assert!(matches!(bad, Err(Error::RepresentationViolation(_))));
}

#[test]
fn hom_examples() {
    let k = Arc::new(dual_numbers());
    let reg = ModuleRep::regular(k.clone(), Side::Left);
    assert_eq!(hom_space(&reg, &reg).unwrap().len(), 2);

    let a = a2();
    let s = simple_modules(&a, Side::Left).unwrap();
    assert_eq!(hom_space(&s[0], &s[1]).unwrap().len(), 0);
    assert_eq!(hom_space(&s[1], &s[0]).unwrap().len(), 0);
    for m in s.iter().chain(&indecomposable_projectives(&a, Side::Left).unwrap()) {
        let basis = hom_space(m, m).unwrap();
        let span = Subspace::span(&Matrix::hstack(
            Q,
            m.dim() * m.dim(),
            &basis.iter().map(|h| flatten(h.matrix())).collect::<Vec<_>>(),
        ));
        assert!(span.contains(&flatten(&Matrix::identity(Q, m.dim()))));
    }
}

fn flatten(m: &Matrix) -> Matrix {
    Matrix::from_fn(m.field(), m.rows() * m.cols(), 1, |i, _| m[(i / m.cols(), i % m.cols())].clone())
}

#[test]
fn hom_without_vertices_matches_vertex_route() {
    let a = Arc::new(linear_a(3, Some(2)));
    let stripped = {
        let d = a.dim();
        let table = (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| a.mult()[(k, i * d + j)].clone()).collect()).collect())
            .collect();
        let unit = (0..d).map(|k| a.unit()[(k, 0)].clone()).collect();
        Arc::new(crate::algebra::Algebra::from_structure_constants(Q, a.labels().to_vec(), table, unit).unwrap())
    };
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let dual = ModuleRep::dual_regular(a.clone(), Side::Left);
    let reg2 = ModuleRep::regular(stripped.clone(), Side::Left);
    let dual2 = ModuleRep::dual_regular(stripped.clone(), Side::Left);
    for (x, y, x2, y2) in [(&reg, &dual, &reg2, &dual2), (&dual, &reg, &dual2, &reg2), (&dual, &dual, &dual2, &dual2)] {
        let h1 = hom_space(x, y).unwrap();
        let h2 = hom_space(x2, y2).unwrap();
        assert_eq!(h1.len(), h2.len());
        let s1 = Subspace::span(&Matrix::hstack(Q, x.dim() * y.dim(), &h1.iter().map(|h| flatten(h.matrix())).collect::<Vec<_>>()));
        let s2 = Subspace::span(&Matrix::hstack(Q, x.dim() * y.dim(), &h2.iter().map(|h| flatten(h.matrix())).collect::<Vec<_>>()));
        assert_eq!(s1, s2);
    }
}

#[test]
fn kernel_and_cokernel() {
    let a = a2();
    let p = indecomposable_projectives(&a, Side::Left).unwrap();
    let id = ModuleMap::identity(&p[0]);
    assert_eq!(id.kernel().0.dim(), 0);
    assert_eq!(id.cokernel().0.dim(), 0);
    let zero = ModuleMap::zero(&p[0], &p[1]);
    assert_eq!(zero.kernel().0, p[0]);
    assert_eq!(zero.cokernel().0, p[1]);
    // the inclusion P(2) -> P(1) has cokernel the simple at vertex 1
    let incl = hom_space(&p[1], &p[0]).unwrap().remove(0);
    assert!(incl.is_mono());
    let (c, proj) = incl.cokernel();
    assert_eq!(c.dim(), 1);
    proj.validate().unwrap();
    assert!(is_isomorphic(&c, &simple_modules(&a, Side::Left).unwrap()[0]).unwrap());
    assert!(proj.compose(&incl).unwrap().matrix().is_zero());
}

#[test]
fn dual_examples() {
    let a = a2();
    let z = ModuleRep::zero(a.clone(), Side::Left);
    assert_eq!(z.dual().dim(), 0);
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let d = reg.dual();
    assert_eq!(d.side(), Side::Right);
    assert_eq!(d.dual(), reg);
    let bimod = Bimodule::dual_regular(&a);
    assert_eq!(d.actions(), bimod.right_action());
    let left = ModuleRep::dual_regular(a.clone(), Side::Left);
    assert_eq!(left.actions(), bimod.left_action());
    left.validate().unwrap();
    d.validate().unwrap();
}

#[test]
fn direct_sum_of_projectives_is_regular() {
    for a in [a2(), Arc::new(linear_a(3, Some(2))), Arc::new(cyclic_rad_square(3))] {
        let p = indecomposable_projectives(&a, Side::Left).unwrap();
        let (sum, incl, proj) = ModuleRep::direct_sum(&a, Side::Left, &p);
        assert_eq!(sum.dim(), a.dim());
        assert!(is_isomorphic(&sum, &ModuleRep::regular(a.clone(), Side::Left)).unwrap());
        for (i, q) in incl.iter().zip(&proj) {
            assert!(q.compose(i).unwrap().matrix().is_identity());
        }
    }
}

#[test]
fn duality_exchanges_kernel_and_cokernel() {
    let a = Arc::new(linear_a(3, None));
    let p = indecomposable_projectives(&a, Side::Left).unwrap();
    for x in &p {
        for y in &p {
            for h in hom_space(x, y).unwrap() {
                let k = h.kernel().0;
                let c = h.dual().cokernel().0;
                assert_eq!(k.dim(), c.dim());
                assert!(is_isomorphic(&k.dual(), &c).unwrap());
            }
        }
    }
}
