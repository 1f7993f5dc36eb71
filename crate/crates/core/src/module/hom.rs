use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::{Field, Matrix, Scalar, Subspace};
use crate::module::{ModuleMap, ModuleRep};

const ISO_SEED: u64 = 0x6e61_6b61_7961_6d61;
const ISO_TRIALS: usize = 16;
const EXHAUSTIVE_HOM_DIM: usize = 4;

/// The pieces `e_v M` of a module: a basis `B_v` (columns in `M`) and the
/// coordinate map `C_v` with `C_v B_v = 1` and `B_v C_v = rho(e_v)`.
pub(crate) struct VertexPieces {
    pub(crate) basis: Vec<Matrix>,
    pub(crate) coords: Vec<Matrix>,
}

impl VertexPieces {
    pub(crate) fn of(m: &ModuleRep) -> Option<VertexPieces> {
        let ids = m.algebra().idempotents()?;
        m.algebra().placement()?;
        let mut basis = Vec::new();
        let mut coords = Vec::new();
        for e in ids {
            let proj = m.act(e);
            let sub = Subspace::span(&proj);
            coords.push(proj.select_rows(sub.pivots()));
            basis.push(sub.basis().clone());
        }
        Some(VertexPieces { basis, coords })
    }

    pub(crate) fn dim(&self, v: usize) -> usize {
        self.basis[v].cols()
    }
}

/// A basis of `Hom_A(m, n)`, deterministic for fixed inputs.
///
/// With vertex idempotents the unknown is split into blocks
/// `e_v m -> e_v n` and only the non-idempotent generators are imposed.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<ModuleMap>> {
    m.check_same(n)?;
    let f = m.field();
    let a = m.algebra();
    let mats = match (VertexPieces::of(m), VertexPieces::of(n), a.placement()) {
        (Some(pm), Some(pn), Some(place)) => {
            let nv = pm.basis.len();
            let mut offsets = Vec::with_capacity(nv);
            let mut total = 0;
            for v in 0..nv {
                offsets.push(total);
                total += pn.dim(v) * pm.dim(v);
            }
            let mut blocks = Vec::new();
            for (g, pl) in place.iter().enumerate() {
                if pl.length == 0 {
                    continue;
                }
                let (s, t) = (pl.source, pl.target);
                let (ns, nt, ms, mt) = (pn.dim(s), pn.dim(t), pm.dim(s), pm.dim(t));
                if nt * ms == 0 {
                    continue;
                }
                // C^N_t rho_N(g) B^N_s Y_s - Y_t C^M_t rho_M(g) B^M_s = 0
                let an = pn.coords[t].mul(n.action(g)).mul(&pn.basis[s]);
                let bm = pm.coords[t].mul(m.action(g)).mul(&pm.basis[s]);
                let mut eq = Matrix::zeros(f, nt * ms, total);
                if ns * ms > 0 {
                    eq.set_block(0, offsets[s], &an.kron(&Matrix::identity(f, ms)));
                }
                if nt * mt > 0 {
                    let rhs = Matrix::identity(f, nt).kron(&bm.transpose());
                    let cur = eq.block(0, offsets[t], nt * ms, nt * mt);
                    eq.set_block(0, offsets[t], &cur.sub(&rhs));
                }
                blocks.push(eq);
            }
            let sol = solve_homogeneous(f, total, &blocks);
            (0..sol.cols())
                .map(|c| {
                    let mut x = Matrix::zeros(f, n.dim(), m.dim());
                    for v in 0..nv {
                        let (rows, cols) = (pn.dim(v), pm.dim(v));
                        if rows * cols == 0 {
                            continue;
                        }
                        let y = Matrix::from_fn(f, rows, cols, |r, k| sol[(offsets[v] + r * cols + k, c)].clone());
                        x = x.add(&pn.basis[v].mul(&y).mul(&pm.coords[v]));
                    }
                    x
                })
                .collect::<Vec<_>>()
        }
        _ => {
            let (dn, dm) = (n.dim(), m.dim());
            let blocks: Vec<Matrix> = a
                .generators()
                .into_iter()
                .map(|g| {
                    n.action(g)
                        .kron(&Matrix::identity(f, dm))
                        .sub(&Matrix::identity(f, dn).kron(&m.action(g).transpose()))
                })
                .collect();
            let sol = solve_homogeneous(f, dn * dm, &blocks);
            (0..sol.cols())
                .map(|c| Matrix::from_fn(f, dn, dm, |r, k| sol[(r * dm + k, c)].clone()))
                .collect()
        }
    };
    Ok(mats.into_iter().map(|x| ModuleMap::from_parts(m.clone(), n.clone(), x)).collect())
}

fn solve_homogeneous(f: Field, unknowns: usize, blocks: &[Matrix]) -> Matrix {
    if unknowns == 0 {
        return Matrix::zeros(f, 0, 0);
    }
    if blocks.is_empty() {
        return Matrix::identity(f, unknowns);
    }
    Matrix::vstack(f, unknowns, blocks).kernel_basis()
}

/// An isomorphism `m -> n`, if one exists.
///
/// Tries pseudo-random combinations of a hom-space basis from a fixed seed,
/// then, for hom spaces of dimension at most 4, every combination with
/// coefficients in a grid large enough that a nonzero determinant
/// polynomial cannot vanish on all of it.
pub fn find_isomorphism(m: &ModuleRep, n: &ModuleRep) -> Result<Option<ModuleMap>> {
    m.check_same(n)?;
    if m.dim() != n.dim() || m.dimension_vector() != n.dimension_vector() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(ModuleMap::zero(m, n)));
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let f = m.field();
    let combine = |coeffs: &[Scalar]| -> ModuleMap {
        let mut x = Matrix::zeros(f, n.dim(), m.dim());
        for (c, h) in coeffs.iter().zip(&basis) {
            x.add_scaled(c, h.matrix());
        }
        ModuleMap::from_parts(m.clone(), n.clone(), x)
    };
    if let Some(h) = basis.iter().find(|h| h.is_iso()) {
        return Ok(Some(h.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    for _ in 0..ISO_TRIALS {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| random_scalar(f, &mut rng)).collect();
        let x = combine(&coeffs);
        if x.is_iso() {
            return Ok(Some(x));
        }
    }
    if basis.len() <= EXHAUSTIVE_HOM_DIM {
        let p = f.characteristic();
        let size = if p == 0 { m.dim() as u64 + 1 } else { p.min(m.dim() as u64 + 1) };
        let grid: Vec<Scalar> = (0..size).map(|v| f.from_i64(v as i64)).collect();
        let mut idx = vec![0usize; basis.len()];
        loop {
            let coeffs: Vec<Scalar> = idx.iter().map(|&i| grid[i].clone()).collect();
            let x = combine(&coeffs);
            if x.is_iso() {
                return Ok(Some(x));
            }
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < grid.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

fn random_scalar(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match f.characteristic() {
        0 => f.from_i64(rng.gen_range(-(1 << 20)..=(1 << 20))),
        p => f.from_i64(rng.gen_range(0..p) as i64),
    }
}
