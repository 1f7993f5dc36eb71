use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::module::{same_algebra, ModuleMap, ModuleRep, Side, VertexPieces};

/// `X (x)_A Y` with its quotient data: `proj` maps the full space
/// `X (x)_k Y` (index `x * dim Y + y`) onto the chosen basis and `section`
/// lifts it back, `proj * section = 1`.
#[derive(Clone, Debug)]
pub struct TensorData {
    pub module: ModuleRep,
    pub proj: Matrix,
    pub section: Matrix,
}

/// The left module `B` over its left algebra.
pub(crate) fn left_part(b: &Bimodule) -> ModuleRep {
    ModuleRep::from_parts(b.left_algebra().clone(), Side::Left, b.dim(), b.left_action().to_vec())
}

/// The right module `B` over its right algebra.
pub(crate) fn right_part(b: &Bimodule) -> ModuleRep {
    ModuleRep::from_parts(b.right_algebra().clone(), Side::Right, b.dim(), b.right_action().to_vec())
}

/// Quotient data `(proj, section)` of `X (x)_k Y -> X (x)_A Y` for a right
/// module `x` and a left module `y`.
///
/// With vertex idempotents the quotient is taken inside
/// `⊕_v X e_v (x) e_v Y`, imposing `x g (x) m = x (x) g m` for the
/// non-idempotent basis elements `g = e_t g e_s` only.
pub fn balanced_tensor(x: &ModuleRep, y: &ModuleRep) -> Result<(Matrix, Matrix)> {
    if x.side() != Side::Right || y.side() != Side::Left {
        return Err(Error::Incompatible("tensor needs a right module and a left module".into()));
    }
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::Incompatible("tensor factors over different algebras".into()));
    }
    let f = x.field();
    let a = x.algebra();
    let (dx, dy) = (x.dim(), y.dim());
    if let (Some(px), Some(py), Some(place)) = (VertexPieces::of(x), VertexPieces::of(y), a.placement()) {
        let nv = px.basis.len();
        let mut offsets = Vec::with_capacity(nv);
        let mut total = 0;
        for v in 0..nv {
            offsets.push(total);
            total += px.dim(v) * py.dim(v);
        }
        let mut rels = Vec::new();
        for (g, pl) in place.iter().enumerate() {
            if pl.length == 0 {
                continue;
            }
            let (s, t) = (pl.source, pl.target);
            let (xs, xt, ys, yt) = (px.dim(s), px.dim(t), py.dim(s), py.dim(t));
            if xt * ys == 0 {
                continue;
            }
            let mut block = Matrix::zeros(f, total, xt * ys);
            if xs > 0 {
                let r = px.coords[s].mul(x.action(g)).mul(&px.basis[t]);
                block.set_block(offsets[s], 0, &r.kron(&Matrix::identity(f, ys)));
            }
            if yt > 0 {
                let l = py.coords[t].mul(y.action(g)).mul(&py.basis[s]);
                let cur = block.block(offsets[t], 0, xt * yt, xt * ys);
                block.set_block(offsets[t], 0, &cur.sub(&Matrix::identity(f, xt).kron(&l)));
            }
            rels.push(block);
        }
        let q = Subspace::span(&Matrix::hstack(f, total, &rels)).quotient();
        let embed: Vec<Matrix> = (0..nv).map(|v| px.coords[v].kron(&py.coords[v])).collect();
        let lift: Vec<Matrix> = (0..nv).map(|v| px.basis[v].kron(&py.basis[v])).collect();
        let proj = q.proj.mul(&Matrix::vstack(f, dx * dy, &embed));
        let section = Matrix::hstack(f, dx * dy, &lift).mul(&q.section);
        return Ok((proj, section));
    }
    let rels: Vec<Matrix> = a
        .generators()
        .into_iter()
        .map(|g| {
            x.action(g)
                .kron(&Matrix::identity(f, dy))
                .sub(&Matrix::identity(f, dx).kron(y.action(g)))
        })
        .collect();
    let q = Subspace::span(&Matrix::hstack(f, dx * dy, &rels)).quotient();
    Ok((q.proj, q.section))
}

/// `B (x)_A M` as a left module over the left algebra of `B`.
pub fn tensor_data(b: &Bimodule, m: &ModuleRep) -> Result<TensorData> {
    let (proj, section) = balanced_tensor(&right_part(b), m)?;
    let action = b
        .left_action()
        .iter()
        .map(|l| proj.mul(&l.kron_id_mul(m.dim(), &section)))
        .collect();
    let module = ModuleRep::from_parts(b.left_algebra().clone(), Side::Left, proj.rows(), action);
    Ok(TensorData { module, proj, section })
}

pub fn tensor_apply(b: &Bimodule, m: &ModuleRep) -> Result<ModuleRep> {
    Ok(tensor_data(b, m)?.module)
}

/// `B (x) f` between precomputed tensor data of the source and target.
pub fn tensor_map_between(b: &Bimodule, f: &ModuleMap, src: &TensorData, tgt: &TensorData) -> ModuleMap {
    let matrix = tgt.proj.mul(&f.matrix().id_kron_mul(b.dim(), &src.section));
    ModuleMap::from_parts(src.module.clone(), tgt.module.clone(), matrix)
}

pub fn tensor_map(b: &Bimodule, f: &ModuleMap) -> Result<ModuleMap> {
    let src = tensor_data(b, f.source())?;
    let tgt = tensor_data(b, f.target())?;
    Ok(tensor_map_between(b, f, &src, &tgt))
}
