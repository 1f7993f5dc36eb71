use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::module::{ModuleMap, ModuleRep, Side};

/// `A e_i` (left) or `e_i A` (right), one per vertex idempotent.
pub fn indecomposable_projectives(a: &AlgebraRef, side: Side) -> Result<Vec<ModuleRep>> {
    let ids = a.idempotents().ok_or(Error::MissingIdempotents)?;
    let regular = ModuleRep::regular(a.clone(), side);
    Ok(ids
        .iter()
        .map(|e| {
            let span = match side {
                Side::Left => a.right_of(e),
                Side::Right => a.left_of(e),
            };
            regular.submodule(&Subspace::span(&span))
        })
        .collect())
}

/// `D(e_i A)` (left) or `D(A e_i)` (right).
pub fn indecomposable_injectives(a: &AlgebraRef, side: Side) -> Result<Vec<ModuleRep>> {
    Ok(indecomposable_projectives(a, side.flip())?.iter().map(ModuleRep::dual).collect())
}

/// Tops `P(i) / J P(i)` of the indecomposable projectives.
pub fn simple_modules(a: &AlgebraRef, side: Side) -> Result<Vec<ModuleRep>> {
    indecomposable_projectives(a, side)?
        .into_iter()
        .map(|p| {
            let rad = p.radical()?;
            let incl = ModuleMap::from_parts(p.submodule(&rad), p.clone(), rad.basis().clone());
            Ok(incl.cokernel().0)
        })
        .collect()
}

/// Minimal epimorphism `P -> m` from a sum of indecomposable projectives.
///
/// Lifts a basis of the top `m / J m` vertex by vertex and maps each copy
/// of `P(v)` onto the submodule generated by the lifted vector. Needs a
/// split basic algebra; the kernel is checked to lie in `J P`.
pub fn projective_cover(m: &ModuleRep) -> Result<ModuleMap> {
    if m.side() == Side::Right {
        let original = m.algebra().clone();
        return Ok(projective_cover(&m.flip_to_opposite())?.flip_from_opposite(&original));
    }
    let a = m.algebra();
    if !a.is_split_basic()? {
        return Err(Error::Incompatible("minimal covers need a split basic algebra".into()));
    }
    let f = m.field();
    let projectives = indecomposable_projectives(a, Side::Left)?;
    let mut current = m.radical()?;
    let mut summands = Vec::new();
    let mut columns = Vec::new();
    for (v, e) in a.idempotents().expect("split basic implies idempotents").iter().enumerate() {
        let piece = Subspace::span(&m.act(e));
        let origin = Subspace::span(&a.right_of(e));
        for c in 0..piece.dim() {
            let x = piece.basis().column(c);
            if current.contains(&x) {
                continue;
            }
            current = current.sum(&Subspace::span(&x));
            columns.push(evaluation(m, origin.basis(), &x));
            summands.push(projectives[v].clone());
        }
    }
    let (source, _, _) = ModuleRep::direct_sum(a, Side::Left, &summands);
    let matrix = Matrix::hstack(f, m.dim(), &columns);
    let cover = ModuleMap::from_parts(source.clone(), m.clone(), matrix);
    debug_assert!(cover.validate().is_ok());
    let kernel = Subspace::kernel_of(cover.matrix());
    if !cover.is_epi() || !source.radical()?.contains_subspace(&kernel) {
        return Err(Error::TheoremViolation("projective cover is not minimal".into()));
    }
    Ok(cover)
}

/// `z -> rho(z) x` for each column `z` of `domain` (algebra coordinates).
fn evaluation(m: &ModuleRep, domain: &Matrix, x: &Matrix) -> Matrix {
    let f = m.field();
    let cols: Vec<Matrix> = (0..domain.cols()).map(|c| m.act(&domain.column(c)).mul(x)).collect();
    Matrix::hstack(f, m.dim(), &cols)
}

/// Epimorphism from a free module `A^g`, with `g` generators picked greedily
/// among the standard basis vectors of `m`. Needs no radical.
pub fn free_cover(m: &ModuleRep) -> Result<ModuleMap> {
    if m.side() == Side::Right {
        let original = m.algebra().clone();
        return Ok(free_cover(&m.flip_to_opposite())?.flip_from_opposite(&original));
    }
    let a = m.algebra();
    let f = m.field();
    let mut current = Subspace::zero(f, m.dim());
    let mut columns = Vec::new();
    let unit_domain = Matrix::identity(f, a.dim());
    for k in 0..m.dim() {
        let x = Matrix::from_fn(f, m.dim(), 1, |r, _| if r == k { f.one() } else { f.zero() });
        if current.contains(&x) {
            continue;
        }
        current = current.sum(&m.generated_by(&x));
        columns.push(evaluation(m, &unit_domain, &x));
    }
    let summands = vec![ModuleRep::regular(a.clone(), Side::Left); columns.len()];
    let (source, _, _) = ModuleRep::direct_sum(a, Side::Left, &summands);
    let matrix = Matrix::hstack(f, m.dim(), &columns);
    Ok(ModuleMap::from_parts(source, m.clone(), matrix))
}

/// Minimal monomorphism into a sum of indecomposable injectives, dual to
/// the projective cover of `D m`.
pub fn injective_envelope(m: &ModuleRep) -> Result<ModuleMap> {
    let cover = projective_cover(&m.dual())?;
    let env = cover.dual();
    Ok(env.retarget(m, env.target()))
}
