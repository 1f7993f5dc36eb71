//! `L_i nu`, `R^i nu^-`, Tor and Ext, and projective / injective dimensions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functors::{
    balanced_tensor, hom_map_between, nakayama_data, nakayama_right_data, tensor_map_between, HomData, TensorData,
};
use crate::linalg::Matrix;
use crate::module::{free_cover, hom_space, projective_cover, ModuleMap, ModuleRep, Side};
use crate::par;
use crate::resolution::{
    complex_homology, injective_coresolution, minimal_available, projective_resolution, Resolution,
};

/// A dimension that is either known or larger than the bound it was
/// computed with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dim {
    Finite(usize),
    Exceeds(usize),
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::Exceeds(_) => None,
        }
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Exceeds(b) => write!(f, "> {b}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivedFunctor {
    Nu,
    NuMinus,
}

/// `dims[i] = dim L_i nu (M)` (or `R^i nu^- (M)`) for `i = 0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedTable {
    pub functor: DerivedFunctor,
    pub dims: Vec<usize>,
    pub bound: usize,
    /// Whether the resolution used ended within the bound, so every degree
    /// past the table also vanishes.
    pub resolution_complete: bool,
}

impl DerivedTable {
    /// Largest `i > 0` with a nonzero entry.
    pub fn last_nonzero_positive(&self) -> Option<usize> {
        (1..self.dims.len()).rev().find(|&i| self.dims[i] != 0)
    }

    /// Whether degrees `1..=upto` (clamped to the table) all vanish.
    pub fn vanishes_through(&self, upto: usize) -> bool {
        (1..self.dims.len().min(upto + 1)).all(|i| self.dims[i] == 0)
    }
}

/// Pads `h` with zeros (terms past a complete resolution) or truncates it to
/// `bound + 1` entries.
fn to_table(functor: DerivedFunctor, mut h: Vec<usize>, bound: usize, complete: bool) -> DerivedTable {
    h.resize(bound + 1, 0);
    DerivedTable { functor, dims: h, bound, resolution_complete: complete }
}

/// `L_i nu (M)` from `nu` applied to a projective resolution of `M`.
pub fn left_derived_nu(m: &ModuleRep, bound: usize) -> Result<DerivedTable> {
    left_derived_nu_from(&projective_resolution(m, bound + 1)?, bound)
}

/// `L_i nu` from a given projective resolution; `bound` must be below its
/// number of terms unless it is complete.
pub fn left_derived_nu_from(r: &Resolution, bound: usize) -> Result<DerivedTable> {
    let data: Vec<TensorData> = par::try_map(&r.terms, nakayama_data)?;
    let b = crate::algebra::Bimodule::dual_regular(r.module().algebra());
    let maps: Vec<Matrix> = r
        .maps
        .iter()
        .enumerate()
        .map(|(k, d)| tensor_map_between(&b, d, &data[k + 1], &data[k]).matrix().clone())
        .collect();
    let dims: Vec<usize> = data.iter().map(|t| t.module.dim()).collect();
    let mut h = complex_homology(&dims, &maps, Some(r.module().field()))?;
    if !r.complete && !h.is_empty() {
        h.pop();
    }
    Ok(to_table(DerivedFunctor::Nu, h, bound, r.complete))
}

/// `R^i nu^- (M)` from `nu^-` applied to an injective coresolution of `M`.
pub fn right_derived_nu_minus(m: &ModuleRep, bound: usize) -> Result<DerivedTable> {
    right_derived_nu_minus_from(&injective_coresolution(m, bound + 1)?, bound)
}

pub fn right_derived_nu_minus_from(r: &Resolution, bound: usize) -> Result<DerivedTable> {
    let data: Vec<HomData> = par::try_map(&r.terms, nakayama_right_data)?;
    let b = crate::algebra::Bimodule::dual_regular(r.module().algebra());
    // reversed into chain order: V_k = nu^-(I^{n-k})
    let n = r.terms.len();
    let maps: Vec<Matrix> = (0..n.saturating_sub(1))
        .map(|k| {
            let j = n - 2 - k;
            hom_map_between(&b, &r.maps[j], &data[j], &data[j + 1]).matrix().clone()
        })
        .collect();
    let dims: Vec<usize> = data.iter().rev().map(|h| h.module.dim()).collect();
    let mut h = complex_homology(&dims, &maps, Some(r.module().field()))?;
    h.reverse();
    if !r.complete && !h.is_empty() {
        h.pop();
    }
    Ok(to_table(DerivedFunctor::NuMinus, h, bound, r.complete))
}

/// `dim Tor_i(X, Y)` for `i = 0..=bound`, resolving the right module `X`.
pub fn tor_table(x: &ModuleRep, y: &ModuleRep, bound: usize) -> Result<Vec<usize>> {
    if x.side() != Side::Right || y.side() != Side::Left {
        return Err(Error::Incompatible("Tor needs a right module and a left module".into()));
    }
    let r = projective_resolution(x, bound + 1)?;
    let data: Vec<(Matrix, Matrix)> = par::try_map(&r.terms, |q| balanced_tensor(q, y))?;
    let maps: Vec<Matrix> = r
        .maps
        .iter()
        .enumerate()
        .map(|(k, d)| data[k].0.mul(&d.matrix().kron_id_mul(y.dim(), &data[k + 1].1)))
        .collect();
    let dims: Vec<usize> = data.iter().map(|(p, _)| p.rows()).collect();
    let mut h = complex_homology(&dims, &maps, Some(x.field()))?;
    if !r.complete && !h.is_empty() {
        h.pop();
    }
    h.resize(bound + 1, 0);
    Ok(h)
}

pub fn tor(i: usize, x: &ModuleRep, y: &ModuleRep) -> Result<usize> {
    Ok(tor_table(x, y, i)?[i])
}

fn flatten(maps: &[ModuleMap], rows: usize, field: crate::linalg::Field) -> Matrix {
    let cols: Vec<Matrix> = maps
        .iter()
        .map(|m| {
            let c = m.matrix().cols();
            Matrix::from_fn(field, rows, 1, |i, _| m.matrix()[(i / c, i % c)].clone())
        })
        .collect();
    Matrix::hstack(field, rows, &cols)
}

/// `dim Ext^i(M, N)` for `i = 0..=bound`, resolving the first argument.
pub fn ext_table(m: &ModuleRep, n: &ModuleRep, bound: usize) -> Result<Vec<usize>> {
    let f = m.field();
    let r = projective_resolution(m, bound + 1)?;
    let homs: Vec<Vec<ModuleMap>> = par::try_map(&r.terms, |p| hom_space(p, n))?;
    let bases: Vec<Matrix> = r.terms.iter().zip(&homs).map(|(p, h)| flatten(h, n.dim() * p.dim(), f)).collect();
    // cochain maps Hom(P_k, N) -> Hom(P_{k+1}, N) in the hom-space bases
    let len = r.terms.len();
    let cochain: Vec<Matrix> = (0..len.saturating_sub(1))
        .map(|k| {
            let pulled: Vec<ModuleMap> =
                homs[k].iter().map(|h| h.compose(&r.maps[k])).collect::<Result<_>>()?;
            let image = flatten(&pulled, n.dim() * r.terms[k + 1].dim(), f);
            bases[k + 1]
                .solve(&image)?
                .ok_or_else(|| Error::TheoremViolation("pulled-back map is not a homomorphism".into()))
        })
        .collect::<Result<_>>()?;
    // reversed into chain order
    let dims: Vec<usize> = homs.iter().rev().map(Vec::len).collect();
    let maps: Vec<Matrix> = cochain.into_iter().rev().collect();
    let mut h = complex_homology(&dims, &maps, Some(f))?;
    h.reverse();
    if !r.complete && !h.is_empty() {
        h.pop();
    }
    h.resize(bound + 1, 0);
    Ok(h)
}

pub fn ext(i: usize, m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    Ok(ext_table(m, n, i)?[i])
}

/// Whether `M` is projective: a zero kernel of the minimal cover, or a
/// module section of the free cover.
pub fn is_projective(m: &ModuleRep) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    if minimal_available(m) {
        return Ok(projective_cover(m)?.is_mono());
    }
    let cover = free_cover(m)?;
    splits(&cover)
}

/// Whether an epimorphism `pi` has a module section `s`, `pi s = 1`.
fn splits(pi: &ModuleMap) -> Result<bool> {
    let f = pi.matrix().field();
    let (m, free) = (pi.target(), pi.source());
    let candidates = hom_space(m, free)?;
    if candidates.is_empty() {
        return Ok(m.is_zero());
    }
    let rows = m.dim() * m.dim();
    let images: Vec<ModuleMap> = candidates.iter().map(|s| pi.compose(s)).collect::<Result<_>>()?;
    let lhs = flatten(&images, rows, f);
    let target = flatten(&[ModuleMap::identity(m)], rows, f);
    Ok(lhs.solve(&target)?.is_some())
}

pub fn is_injective(m: &ModuleRep) -> Result<bool> {
    is_projective(&m.dual())
}

/// Projective dimension: the length of the minimal resolution, or with
/// free covers the first syzygy that is projective.
pub fn proj_dim(m: &ModuleRep, bound: usize) -> Result<Dim> {
    let r = projective_resolution(m, bound)?;
    dim_from(&r, bound)
}

pub fn inj_dim(m: &ModuleRep, bound: usize) -> Result<Dim> {
    let r = injective_coresolution(m, bound)?;
    dim_from(&r, bound)
}

pub(crate) fn dim_from(r: &Resolution, bound: usize) -> Result<Dim> {
    if r.minimal {
        return Ok(match r.length() {
            Some(n) => Dim::Finite(n),
            None => Dim::Exceeds(bound),
        });
    }
    let test = |m: &ModuleRep| match r.kind {
        crate::resolution::ResolutionKind::Projective => is_projective(m),
        crate::resolution::ResolutionKind::Injective => is_injective(m),
    };
    for (n, s) in r.syzygies.iter().enumerate().take(bound + 1) {
        if test(s)? {
            return Ok(Dim::Finite(n));
        }
    }
    Ok(Dim::Exceeds(bound))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::builtins::*;
    use crate::algebra::Algebra;
    use crate::functors::nakayama_apply;
    use crate::linalg::Field;
    use crate::module::{indecomposable_injectives, indecomposable_projectives, simple_modules};
    use crate::resolution::projective_resolution_with;

    #[test]
    fn zeroth_derived_functors() {
        let a = Arc::new(linear_a(3, Some(2)));
        for s in simple_modules(&a, Side::Left).unwrap() {
            let l = left_derived_nu(&s, 3).unwrap();
            assert_eq!(l.dims[0], nakayama_apply(&s).unwrap().dim());
            let r = right_derived_nu_minus(&s, 3).unwrap();
            assert_eq!(r.dims[0], crate::functors::nakayama_right_apply(&s).unwrap().dim());
        }
        for p in indecomposable_projectives(&a, Side::Left).unwrap() {
            assert!(left_derived_nu(&p, 3).unwrap().vanishes_through(3));
        }
        for i in indecomposable_injectives(&a, Side::Left).unwrap() {
            assert!(right_derived_nu_minus(&i, 3).unwrap().vanishes_through(3));
        }
    }

    #[test]
    fn derived_nu_on_a2_simple() {
        // 0 -> P(2) -> P(1) -> S1 -> 0 goes to I(2) -> I(1), onto with a line as kernel
        let a = Arc::new(linear_a(2, None));
        let s = simple_modules(&a, Side::Left).unwrap();
        let l = left_derived_nu(&s[0], 4).unwrap();
        assert_eq!(l.dims, [0, 1, 0, 0, 0]);
        assert!(l.resolution_complete);
        let dual = ModuleRep::dual_regular(a.clone(), Side::Right);
        assert_eq!(tor_table(&dual, &s[0], 4).unwrap(), l.dims);
    }

    #[test]
    fn tor_and_ext_in_degree_zero() {
        let a = Arc::new(linear_a(3, Some(2)));
        let dual = ModuleRep::dual_regular(a.clone(), Side::Right);
        let lam = ModuleRep::regular(a.clone(), Side::Left);
        assert_eq!(tor(0, &dual, &lam).unwrap(), dual.dim());
        for s in simple_modules(&a, Side::Left).unwrap() {
            assert_eq!(ext(0, &lam, &s).unwrap(), s.dim());
            assert_eq!(tor_table(&dual, &s, 4).unwrap(), left_derived_nu(&s, 4).unwrap().dims);
        }
    }

    #[test]
    fn ext_against_dual_nu_minus() {
        let a = Arc::new(linear_a(3, Some(2)));
        let dual = ModuleRep::dual_regular(a.clone(), Side::Left);
        for s in simple_modules(&a, Side::Left).unwrap() {
            assert_eq!(ext_table(&dual, &s, 4).unwrap(), right_derived_nu_minus(&s, 4).unwrap().dims);
        }
    }

    #[test]
    fn projectivity_checks() {
        let a = Arc::new(dual_numbers());
        assert!(is_projective(&ModuleRep::regular(a.clone(), Side::Left)).unwrap());
        let s = simple_modules(&a, Side::Left).unwrap().remove(0);
        assert!(!is_projective(&s).unwrap());
        assert_eq!(projective_cover(&s).unwrap().kernel().0.dim(), 1);
        assert!(is_projective(&ModuleRep::dual_regular(a.clone(), Side::Left)).unwrap());
        assert!(is_injective(&ModuleRep::regular(a.clone(), Side::Left)).unwrap());
        for bound in [0, 3, 6] {
            assert_eq!(proj_dim(&s, bound).unwrap(), Dim::Exceeds(bound));
        }
    }

    #[test]
    fn free_route_without_idempotents() {
        // kA2 by structure constants only: e1, e2, x with x = e2 x e1
        let f = Field::Rationals;
        let a = linear_a(2, None);
        let d = a.dim();
        let table = (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| a.mult()[(k, i * d + j)].clone()).collect()).collect())
            .collect();
        let unit = (0..d).map(|k| a.unit()[(k, 0)].clone()).collect();
        let plain = Arc::new(Algebra::from_structure_constants(f, a.labels().to_vec(), table, unit).unwrap());
        let dual = ModuleRep::dual_regular(plain.clone(), Side::Left);
        assert_eq!(proj_dim(&dual, 4).unwrap(), Dim::Finite(1));
        assert_eq!(inj_dim(&ModuleRep::regular(plain.clone(), Side::Left), 4).unwrap(), Dim::Finite(1));
        let a = Arc::new(a);
        let dual = ModuleRep::dual_regular(a.clone(), Side::Left);
        assert_eq!(proj_dim(&dual, 4).unwrap(), Dim::Finite(1));
        let free = projective_resolution_with(&dual, 4, false).unwrap();
        assert_eq!(dim_from(&free, 4).unwrap(), Dim::Finite(1));
    }

    #[test]
    fn dimension_shift() {
        let a = Arc::new(linear_a(3, Some(2)));
        let s = simple_modules(&a, Side::Left).unwrap();
        for m in &s {
            let r = projective_resolution(m, 5).unwrap();
            let l = left_derived_nu(m, 3).unwrap();
            let shifted = left_derived_nu(&r.syzygies[1], 2).unwrap();
            for i in 1..3 {
                assert_eq!(l.dims[i + 1], shifted.dims[i]);
            }
        }
    }
}
