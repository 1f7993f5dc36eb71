//! `P = A (x)_k -`, `I = D A (x)_k -`, `T = P nu`, `S = I nu^-` and the
//! units and counits of `T ⊣ P ⊣ I ⊣ S`.
//!
//! Elements of `A (x) V` and `D A (x) V` are indexed `i * dim V + v`, with
//! `z_i` the algebra basis and `f_i` its dual basis.

use crate::error::{Error, Result};
use crate::functors::nakayama::{nakayama_data, nakayama_map, nakayama_right_data, nakayama_right_map};
use crate::linalg::Matrix;
use crate::module::{ModuleMap, ModuleRep, Side};

fn require_left(m: &ModuleRep) -> Result<()> {
    if m.side() != Side::Left {
        return Err(Error::Incompatible("expected a left module".into()));
    }
    Ok(())
}

pub fn p_apply(m: &ModuleRep) -> Result<ModuleRep> {
    require_left(m)?;
    let a = m.algebra();
    let id = Matrix::identity(m.field(), m.dim());
    let action = (0..a.dim()).map(|i| a.left_mult(i).kron(&id)).collect();
    Ok(ModuleRep::from_parts(a.clone(), Side::Left, a.dim() * m.dim(), action))
}

pub fn i_apply(m: &ModuleRep) -> Result<ModuleRep> {
    require_left(m)?;
    let a = m.algebra();
    let id = Matrix::identity(m.field(), m.dim());
    let action = (0..a.dim()).map(|i| a.right_mult(i).transpose().kron(&id)).collect();
    Ok(ModuleRep::from_parts(a.clone(), Side::Left, a.dim() * m.dim(), action))
}

pub fn t_apply(m: &ModuleRep) -> Result<ModuleRep> {
    p_apply(&nakayama_data(m)?.module)
}

pub fn s_apply(m: &ModuleRep) -> Result<ModuleRep> {
    i_apply(&nakayama_right_data(m)?.module)
}

fn free_map(f: &ModuleMap, source: ModuleRep, target: ModuleRep) -> ModuleMap {
    let d = f.source().algebra().dim();
    let matrix = Matrix::identity(f.matrix().field(), d).kron(f.matrix());
    ModuleMap::from_parts(source, target, matrix)
}

pub fn p_map(f: &ModuleMap) -> Result<ModuleMap> {
    Ok(free_map(f, p_apply(f.source())?, p_apply(f.target())?))
}

pub fn i_map(f: &ModuleMap) -> Result<ModuleMap> {
    Ok(free_map(f, i_apply(f.source())?, i_apply(f.target())?))
}

pub fn t_map(f: &ModuleMap) -> Result<ModuleMap> {
    p_map(&nakayama_map(f)?)
}

pub fn s_map(f: &ModuleMap) -> Result<ModuleMap> {
    i_map(&nakayama_right_map(f)?)
}

/// Unit of `P ⊣ I`: `a -> sum_s f_s (x) 1 (x) z_s a` in `I P A`.
pub fn unit_p_i(m: &ModuleRep) -> Result<ModuleMap> {
    let target = i_apply(&p_apply(m)?)?;
    let a = m.algebra();
    let (d, dm) = (a.dim(), m.dim());
    let u = a.unit();
    let mut matrix = Matrix::zeros(m.field(), d * d * dm, dm);
    for s in 0..d {
        let zs = m.action(s);
        for i in 0..d {
            if u[(i, 0)].is_zero() {
                continue;
            }
            matrix.set_block((s * d + i) * dm, 0, &zs.scale(&u[(i, 0)]));
        }
    }
    Ok(ModuleMap::from_parts(m.clone(), target, matrix))
}

/// Counit of `P ⊣ I`: `z_i (x) f_s (x) b -> f_s(1) z_i b`.
pub fn counit_p_i(m: &ModuleRep) -> Result<ModuleMap> {
    let source = p_apply(&i_apply(m)?)?;
    let a = m.algebra();
    let (d, dm) = (a.dim(), m.dim());
    let u = a.unit();
    let mut matrix = Matrix::zeros(m.field(), dm, d * d * dm);
    for i in 0..d {
        for s in 0..d {
            if u[(s, 0)].is_zero() {
                continue;
            }
            matrix.set_block(0, (i * d + s) * dm, &m.action(i).scale(&u[(s, 0)]));
        }
    }
    Ok(ModuleMap::from_parts(source, m.clone(), matrix))
}

/// Unit of `T ⊣ P`: `a -> sum_i z_i (x) 1 (x) [f_i (x) a]` in `P T A`.
pub fn unit_t_p(m: &ModuleRep) -> Result<ModuleMap> {
    let nu = nakayama_data(m)?;
    let target = p_apply(&p_apply(&nu.module)?)?;
    let a = m.algebra();
    let (d, dm, n) = (a.dim(), m.dim(), nu.module.dim());
    let u = a.unit();
    let mut matrix = Matrix::zeros(m.field(), d * d * n, dm);
    for i in 0..d {
        // [f_i (x) e_k] for every k
        let classes = nu.proj.block(0, i * dm, n, dm);
        for j in 0..d {
            if u[(j, 0)].is_zero() {
                continue;
            }
            matrix.set_block((i * d + j) * n, 0, &classes.scale(&u[(j, 0)]));
        }
    }
    Ok(ModuleMap::from_parts(m.clone(), target, matrix))
}

/// Counit of `T ⊣ P`: `w (x) [f (x) z (x) b] -> f(z) w b` on `T P B`.
pub fn counit_t_p(m: &ModuleRep) -> Result<ModuleMap> {
    let pb = p_apply(m)?;
    let nu = nakayama_data(&pb)?;
    let source = p_apply(&nu.module)?;
    let a = m.algebra();
    let f = m.field();
    let (d, dm) = (a.dim(), m.dim());
    // pairing D A (x) A (x) B -> B, index (s * d + j) * dm + b
    let mut pair = Matrix::zeros(f, dm, d * d * dm);
    for s in 0..d {
        for b in 0..dm {
            pair[(b, (s * d + s) * dm + b)] = f.one();
        }
    }
    let y = pair.mul(&nu.section);
    let blocks: Vec<Matrix> = (0..d).map(|w| m.action(w).mul(&y)).collect();
    Ok(ModuleMap::from_parts(source, m.clone(), Matrix::hstack(f, dm, &blocks)))
}

/// Unit of `I ⊣ S`: `a -> sum_s f_s (x) kappa(z_s a)` in `S I A`, where
/// `kappa(a) = (f -> f (x) a)` lies in `nu^-(I A)`.
pub fn unit_i_s(m: &ModuleRep) -> Result<ModuleMap> {
    let ia = i_apply(m)?;
    let h = nakayama_right_data(&ia)?;
    let target = i_apply(&h.module)?;
    let a = m.algebra();
    let f = m.field();
    let (d, dm) = (a.dim(), m.dim());
    // kappa as a map A-module M -> Hom_k(D A, I A), row-major (d * dm) x d matrices
    let kappa = Matrix::from_fn(f, d * dm * d, dm, |i, t| {
        let (row, s) = (i / d, i % d);
        if row == s * dm + t {
            f.one()
        } else {
            f.zero()
        }
    });
    let kc = h.space.coords(&kappa);
    let blocks: Vec<Matrix> = (0..d).map(|s| kc.mul(m.action(s))).collect();
    // block s holds the rows s * dh + j
    Ok(ModuleMap::from_parts(m.clone(), target, Matrix::vstack(f, dm, &blocks)))
}

/// Counit of `I ⊣ S`: `f_s (x) f_r (x) h -> f_r(1) h(f_s)` on `I S B`.
pub fn counit_i_s(m: &ModuleRep) -> Result<ModuleMap> {
    let h = nakayama_right_data(m)?;
    let source = i_apply(&i_apply(&h.module)?)?;
    let a = m.algebra();
    let f = m.field();
    let (d, dm, dh) = (a.dim(), m.dim(), h.module.dim());
    let u = a.unit();
    let basis = h.space.basis();
    let mut matrix = Matrix::zeros(f, dm, d * d * dh);
    for s in 0..d {
        for r in 0..d {
            if u[(r, 0)].is_zero() {
                continue;
            }
            for j in 0..dh {
                for b in 0..dm {
                    let v = &basis[(b * d + s, j)];
                    if !v.is_zero() {
                        matrix[(b, (s * d + r) * dh + j)] = v.mul(&u[(r, 0)]);
                    }
                }
            }
        }
    }
    Ok(ModuleMap::from_parts(source, m.clone(), matrix))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::builtins::*;
    use crate::functors::nakayama::nakayama_apply;
    use crate::module::{indecomposable_projectives, is_isomorphic, simple_modules};

    #[test]
    fn dimensions_and_definitions() {
        let a = Arc::new(linear_a(2, None));
        for m in simple_modules(&a, Side::Left).unwrap() {
            assert_eq!(p_apply(&m).unwrap().dim(), 3 * m.dim());
            let i = i_apply(&m).unwrap();
            i.validate().unwrap();
            assert!(is_isomorphic(&i, &nakayama_apply(&p_apply(&m).unwrap()).unwrap()).unwrap());
        }
        let lam = ModuleRep::regular(a.clone(), Side::Left);
        let dual = ModuleRep::dual_regular(a.clone(), Side::Left);
        assert!(is_isomorphic(&t_apply(&lam).unwrap(), &p_apply(&dual).unwrap()).unwrap());
    }

    #[test]
    fn units_and_counits_are_homomorphisms() {
        let a = Arc::new(linear_a(2, None));
        for m in indecomposable_projectives(&a, Side::Left).unwrap().iter().chain(&simple_modules(&a, Side::Left).unwrap()) {
            for map in [
                unit_p_i(m).unwrap(),
                counit_p_i(m).unwrap(),
                unit_t_p(m).unwrap(),
                counit_t_p(m).unwrap(),
                unit_i_s(m).unwrap(),
                counit_i_s(m).unwrap(),
            ] {
                map.validate().unwrap();
            }
        }
    }
}
