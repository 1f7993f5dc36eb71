use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::functors::tensor::left_part;
use crate::linalg::{Matrix, Subspace};
use crate::module::{hom_space, same_algebra, ModuleMap, ModuleRep, Side};

/// `Hom_B(B, M)` with its embedding in `Hom_k(B, M)`: column vectors are
/// row-major `dim M x dim B` matrices.
#[derive(Clone, Debug)]
pub struct HomData {
    pub module: ModuleRep,
    pub space: Subspace,
}

/// `Hom_G(B, M)` for a `G`-`A` bimodule `B`, as a left `A`-module via
/// `(a phi)(x) = phi(x a)`.
pub fn hom_data(b: &Bimodule, m: &ModuleRep) -> Result<HomData> {
    if m.side() != Side::Left || !same_algebra(m.algebra(), b.left_algebra()) {
        return Err(Error::Incompatible("hom needs a left module over the bimodule's left algebra".into()));
    }
    let f = m.field();
    let db = b.dim();
    let n = m.dim() * db;
    let flat: Vec<Matrix> = hom_space(&left_part(b), m)?
        .iter()
        .map(|h| Matrix::from_fn(f, n, 1, |i, _| h.matrix()[(i / db, i % db)].clone()))
        .collect();
    let space = if flat.is_empty() { Subspace::zero(f, n) } else { Subspace::span(&Matrix::hstack(f, n, &flat)) };
    let action = b
        .right_action()
        .iter()
        .map(|r| space.coords(&r.transpose().id_kron_mul(m.dim(), space.basis())))
        .collect();
    let module = ModuleRep::from_parts(b.right_algebra().clone(), Side::Left, space.dim(), action);
    Ok(HomData { module, space })
}

pub fn hom_apply(b: &Bimodule, m: &ModuleRep) -> Result<ModuleRep> {
    Ok(hom_data(b, m)?.module)
}

/// `Hom(B, f)` between precomputed hom data of the source and target.
pub fn hom_map_between(b: &Bimodule, f: &ModuleMap, src: &HomData, tgt: &HomData) -> ModuleMap {
    let matrix = tgt.space.coords(&f.matrix().kron_id_mul(b.dim(), src.space.basis()));
    ModuleMap::from_parts(src.module.clone(), tgt.module.clone(), matrix)
}

pub fn hom_map(b: &Bimodule, f: &ModuleMap) -> Result<ModuleMap> {
    let src = hom_data(b, f.source())?;
    let tgt = hom_data(b, f.target())?;
    Ok(hom_map_between(b, f, &src, &tgt))
}
