//! Chain complexes, projective resolutions and injective coresolutions.

mod derived;

pub use derived::{
    ext, ext_table, inj_dim, is_injective, is_projective, left_derived_nu, proj_dim, right_derived_nu_minus, tor,
    tor_table, DerivedFunctor, DerivedTable, Dim,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{homology_dim, Matrix};
use crate::module::{free_cover, projective_cover, ModuleMap, ModuleRep};

/// A bounded complex `C_hi -> ... -> C_lo` with `d_n: C_n -> C_{n-1}`.
/// Cochain complexes are stored with negated degrees.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    lo: i64,
    modules: Vec<ModuleRep>,
    /// `differentials[k]: modules[k + 1] -> modules[k]`
    differentials: Vec<ModuleMap>,
}

impl ChainComplex {
    pub fn new(lo: i64, modules: Vec<ModuleRep>, differentials: Vec<ModuleMap>) -> Result<Self> {
        let c = ChainComplex { lo, modules, differentials };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.differentials.len() + 1 != self.modules.len().max(1) {
            return Err(Error::DimensionMismatch("a complex needs one differential between neighbours".into()));
        }
        for (k, d) in self.differentials.iter().enumerate() {
            if d.source().dim() != self.modules[k + 1].dim() || d.target().dim() != self.modules[k].dim() {
                return Err(Error::DimensionMismatch(format!("differential into degree {}", self.lo + k as i64)));
            }
            d.validate()?;
        }
        for pair in self.differentials.windows(2) {
            if !pair[0].matrix().mul(pair[1].matrix()).is_zero() {
                return Err(Error::NonzeroComposite);
            }
        }
        Ok(())
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn modules(&self) -> &[ModuleRep] {
        &self.modules
    }

    pub fn differentials(&self) -> &[ModuleMap] {
        &self.differentials
    }

    pub fn module_at(&self, n: i64) -> Option<&ModuleRep> {
        usize::try_from(n - self.lo).ok().and_then(|k| self.modules.get(k))
    }

    /// `d_n: C_n -> C_{n-1}`, when both ends lie in range.
    pub fn differential_at(&self, n: i64) -> Option<&ModuleMap> {
        usize::try_from(n - self.lo - 1).ok().and_then(|k| self.differentials.get(k))
    }

    /// Homology dimensions in degrees `lo..=hi`, treating terms outside the
    /// range as zero.
    pub fn homology(&self) -> Result<Vec<usize>> {
        let mats: Vec<Matrix> = self.differentials.iter().map(|d| d.matrix().clone()).collect();
        let dims: Vec<usize> = self.modules.iter().map(ModuleRep::dim).collect();
        complex_homology(&dims, &mats, self.modules.first().map(ModuleRep::field))
    }
}

/// Homology of a complex of vector spaces given by dimensions and
/// `maps[k]: V_{k+1} -> V_k`.
pub(crate) fn complex_homology(
    dims: &[usize],
    maps: &[Matrix],
    field: Option<crate::linalg::Field>,
) -> Result<Vec<usize>> {
    let Some(f) = field else { return Ok(Vec::new()) };
    (0..dims.len())
        .map(|k| {
            let d_in = maps.get(k).cloned().unwrap_or_else(|| Matrix::zeros(f, dims[k], 0));
            let d_out = if k == 0 { Matrix::zeros(f, 0, dims[0]) } else { maps[k - 1].clone() };
            homology_dim(&d_in, &d_out)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A projective resolution `P_n -> ... -> P_0 -> M` or an injective
/// coresolution `M -> I^0 -> ... -> I^n`, possibly truncated.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    /// Terms in resolution order: `P_k` or `I^k` at index `k`.
    pub terms: Vec<ModuleRep>,
    /// Projective: `maps[k]: P_{k+1} -> P_k`; injective: `maps[k]: I^k -> I^{k+1}`.
    pub maps: Vec<ModuleMap>,
    /// `P_0 -> M` or `M -> I^0`.
    pub augmentation: ModuleMap,
    /// `syzygies[k]` is the `k`-th syzygy (cosyzygy) with `syzygies[0] = M`.
    pub syzygies: Vec<ModuleRep>,
    pub minimal: bool,
    /// Whether the last syzygy is zero, so no further terms exist.
    pub complete: bool,
}

impl Resolution {
    pub fn module(&self) -> &ModuleRep {
        &self.syzygies[0]
    }

    /// Length when complete.
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }

    /// The augmented complex `... -> P_0 -> M -> 0` (or its dual shape),
    /// with `M` in degree `-1` (projective) or `1` (injective).
    pub fn augmented_complex(&self) -> Result<ChainComplex> {
        match self.kind {
            ResolutionKind::Projective => {
                let mut modules = vec![self.module().clone()];
                modules.extend(self.terms.iter().cloned());
                let mut diffs = Vec::new();
                if !self.terms.is_empty() {
                    diffs.push(self.augmentation.clone());
                }
                diffs.extend(self.maps.iter().cloned());
                ChainComplex::new(-1, modules, diffs)
            }
            ResolutionKind::Injective => {
                let mut modules: Vec<ModuleRep> = self.terms.iter().rev().cloned().collect();
                let mut diffs: Vec<ModuleMap> = self.maps.iter().rev().cloned().collect();
                if !self.terms.is_empty() {
                    diffs.push(self.augmentation.clone());
                }
                modules.push(self.module().clone());
                ChainComplex::new(1 - self.terms.len() as i64, modules, diffs)
            }
        }
    }

    /// Homology of the augmented complex in every degree except the last
    /// computed term, whose kernel is the next syzygy when truncated.
    pub fn exactness(&self) -> Result<Vec<usize>> {
        let h = self.augmented_complex()?.homology()?;
        Ok(match (self.kind, self.complete) {
            (_, true) => h,
            (ResolutionKind::Projective, false) => h[..h.len() - 1].to_vec(),
            (ResolutionKind::Injective, false) => h[1..].to_vec(),
        })
    }
}

/// Whether the minimal route applies: the algebra is split basic with a
/// computable radical.
pub(crate) fn minimal_available(m: &ModuleRep) -> bool {
    matches!(m.algebra().is_split_basic(), Ok(true))
}

fn cover(m: &ModuleRep, minimal: bool) -> Result<ModuleMap> {
    if minimal {
        projective_cover(m)
    } else {
        free_cover(m)
    }
}

/// Iterated projective covers, minimal when the algebra allows it and free
/// otherwise. Computes `P_0, ..., P_max_len` and stops early at a zero
/// syzygy.
pub fn projective_resolution(m: &ModuleRep, max_len: usize) -> Result<Resolution> {
    projective_resolution_with(m, max_len, minimal_available(m))
}

/// As [`projective_resolution`] with the cover type forced; `minimal = true`
/// fails on algebras that are not split basic.
pub fn projective_resolution_with(m: &ModuleRep, max_len: usize, minimal: bool) -> Result<Resolution> {
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut augmentation = ModuleMap::zero(&ModuleRep::zero(m.algebra().clone(), m.side()), m);
    let mut previous: Option<ModuleMap> = None;
    let mut current = m.clone();
    for k in 0..=max_len {
        if current.is_zero() {
            break;
        }
        let c = cover(&current, minimal)?;
        match &previous {
            None => augmentation = c.clone(),
            Some(incl) => maps.push(incl.compose(&c)?),
        }
        let (kernel, incl) = c.kernel();
        terms.push(c.source().clone());
        syzygies.push(kernel.clone());
        previous = Some(incl);
        current = kernel;
        debug_assert!(k + 1 == terms.len());
    }
    let complete = current.is_zero();
    Ok(Resolution { kind: ResolutionKind::Projective, terms, maps, augmentation, syzygies, minimal, complete })
}

/// Dual of the projective resolution of `D M`.
pub fn injective_coresolution(m: &ModuleRep, max_len: usize) -> Result<Resolution> {
    injective_coresolution_with(m, max_len, minimal_available(m))
}

pub fn injective_coresolution_with(m: &ModuleRep, max_len: usize, minimal: bool) -> Result<Resolution> {
    let r = projective_resolution_with(&m.dual(), max_len, minimal)?;
    let terms: Vec<ModuleRep> = r.terms.iter().map(ModuleRep::dual).collect();
    let maps = r.maps.iter().enumerate().map(|(k, d)| d.dual().retarget(&terms[k], &terms[k + 1])).collect();
    let syzygies: Vec<ModuleRep> =
        std::iter::once(m.clone()).chain(r.syzygies.iter().skip(1).map(ModuleRep::dual)).collect();
    let augmentation = match terms.first() {
        Some(t) => r.augmentation.dual().retarget(m, t),
        None => ModuleMap::zero(m, &ModuleRep::zero(m.algebra().clone(), m.side())),
    };
    Ok(Resolution {
        kind: ResolutionKind::Injective,
        terms,
        maps,
        augmentation,
        syzygies,
        minimal: r.minimal,
        complete: r.complete,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::builtins::*;
    use crate::module::{indecomposable_projectives, is_isomorphic, simple_modules, Side};

    #[test]
    fn projective_has_length_zero() {
        let a = Arc::new(linear_a(3, None));
        for p in indecomposable_projectives(&a, Side::Left).unwrap() {
            let r = projective_resolution(&p, 4).unwrap();
            assert_eq!(r.length(), Some(0));
            assert!(r.minimal);
        }
    }

    #[test]
    fn simple_over_dual_numbers_never_stops() {
        let a = Arc::new(dual_numbers());
        let s = simple_modules(&a, Side::Left).unwrap().remove(0);
        let r = projective_resolution(&s, 5).unwrap();
        assert!(!r.complete);
        assert_eq!(r.terms.len(), 6);
        assert!(r.terms.iter().all(|t| t.dim() == 2));
        assert!(r.exactness().unwrap().iter().all(|&h| h == 0));
        let c = r.augmented_complex().unwrap();
        c.validate().unwrap();
    }

    #[test]
    fn non_projective_simple_of_a2() {
        let a = Arc::new(linear_a(2, None));
        let s = simple_modules(&a, Side::Left).unwrap();
        let p = indecomposable_projectives(&a, Side::Left).unwrap();
        // S1 = P(1) / P(2)
        let r = projective_resolution(&s[0], 4).unwrap();
        assert_eq!(r.length(), Some(1));
        assert!(is_isomorphic(&r.terms[0], &p[0]).unwrap());
        assert!(is_isomorphic(&r.terms[1], &p[1]).unwrap());
        assert!(r.exactness().unwrap().iter().all(|&h| h == 0));
    }

    #[test]
    fn injective_coresolution_is_exact() {
        for a in [linear_a(3, Some(2)), dual_numbers(), cyclic_rad_square(2)] {
            let a = Arc::new(a);
            for s in simple_modules(&a, Side::Left).unwrap() {
                let r = injective_coresolution(&s, 3).unwrap();
                assert!(r.exactness().unwrap().iter().all(|&h| h == 0));
                for (k, d) in r.maps.iter().enumerate() {
                    d.validate().unwrap();
                    assert_eq!(d.source(), &r.terms[k]);
                }
                r.augmentation.validate().unwrap();
                assert!(r.augmentation.is_mono());
            }
        }
    }

    #[test]
    fn free_and_minimal_resolutions_agree_on_homology() {
        let a = Arc::new(linear_a(3, Some(2)));
        for s in simple_modules(&a, Side::Left).unwrap() {
            let free = projective_resolution_with(&s, 3, false).unwrap();
            assert!(!free.minimal);
            assert!(free.exactness().unwrap().iter().all(|&h| h == 0));
        }
    }

    #[test]
    fn right_modules_resolve() {
        let a = Arc::new(linear_a(2, None));
        let d = ModuleRep::dual_regular(a.clone(), Side::Right);
        let r = projective_resolution(&d, 4).unwrap();
        assert_eq!(r.length(), Some(1));
        assert!(r.terms.iter().all(|t| t.side() == Side::Right));
    }
}
