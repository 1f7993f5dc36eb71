//! Iwanaga-Gorenstein detection, Gorenstein projective / injective
//! membership and dimensions, and checks that the homological invariants
//! of an algebra agree.

mod membership;
mod theorems;

pub use membership::{
    gi_dimension, gp_dimension, is_gorenstein_injective, is_gorenstein_projective, Evidence, Membership,
    MembershipKind, Verdict,
};
pub use theorems::{
    verify_category_dimensions, verify_criterion_agreement, verify_equivalence_gp_gi, verify_four_numbers,
    CategoryReport, CriterionAgreement, EquivalenceReport,
};

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraRef;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::module::{
    indecomposable_injectives, indecomposable_projectives, is_isomorphic, simple_modules, ModuleMap, ModuleRep, Side,
};
use crate::resolution::{proj_dim, tor_table, Dim};

/// A module with a display label.
#[derive(Clone, Debug)]
pub struct Labeled {
    pub label: String,
    pub module: ModuleRep,
}

impl Labeled {
    pub fn new(label: impl Into<String>, module: ModuleRep) -> Self {
        Labeled { label: label.into(), module }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourNumbers {
    /// Largest Gorenstein projective dimension over the tested set.
    pub gp_dim: Dim,
    /// Largest Gorenstein injective dimension over the tested set.
    pub gi_dim: Dim,
    /// Smallest `s` with `L_i nu = 0` for all `i > s` on the tested set.
    pub s: Dim,
    /// Smallest `t` with `R^i nu^- = 0` for all `i > t` on the tested set.
    pub t: Dim,
}

impl FourNumbers {
    pub fn all(&self) -> [Dim; 4] {
        [self.gp_dim, self.gi_dim, self.s, self.t]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    /// Projective dimension of `D A` as a left module.
    pub pd_left: Dim,
    /// Projective dimension of `D A` as a right module.
    pub pd_right: Dim,
    pub is_iwanaga_gorenstein: Verdict,
    pub g: Option<usize>,
    pub four_numbers: Option<FourNumbers>,
    pub bound: usize,
    pub tested_set: Vec<String>,
}

impl GorensteinReport {
    /// Degrees past which `L_i nu` certainly vanishes: `pd(D A_A)`.
    pub(crate) fn left_horizon(&self) -> Option<usize> {
        self.pd_right.finite()
    }

    /// Degrees past which `R^i nu^-` certainly vanishes: `pd(_A D A)`.
    pub(crate) fn right_horizon(&self) -> Option<usize> {
        self.pd_left.finite()
    }
}

/// Default bound `2 dim A + 2`.
pub fn default_bound(a: &AlgebraRef) -> usize {
    2 * a.dim() + 2
}

/// Projective dimensions of `D A` on both sides. Both finite means
/// Iwanaga-Gorenstein; a finite pair that differs is reported as a
/// theorem violation.
pub fn iwanaga_gorenstein_test(a: &AlgebraRef, bound: usize) -> Result<GorensteinReport> {
    let pd_left = proj_dim(&ModuleRep::dual_regular(a.clone(), Side::Left), bound)?;
    let pd_right = proj_dim(&ModuleRep::dual_regular(a.clone(), Side::Right), bound)?;
    let (is_ig, g) = match (pd_left, pd_right) {
        (Dim::Finite(l), Dim::Finite(r)) if l == r => (Verdict::Yes, Some(l)),
        (Dim::Finite(l), Dim::Finite(r)) => {
            return Err(Error::TheoremViolation(format!(
                "projective dimensions of the dual differ: left {l}, right {r}"
            )))
        }
        _ => (Verdict::Indeterminate, None),
    };
    Ok(GorensteinReport {
        pd_left,
        pd_right,
        is_iwanaga_gorenstein: is_ig,
        g,
        four_numbers: None,
        bound,
        tested_set: Vec::new(),
    })
}

/// `pd D A` on one side read off Tor against the simples: the largest `i`
/// with `Tor_i` nonzero, provided `Tor_{bound+1}` vanishes.
pub fn pd_dual_by_tor(a: &AlgebraRef, side: Side, bound: usize) -> Result<Dim> {
    let simples = simple_modules(a, side.flip())?;
    let dual = ModuleRep::dual_regular(a.clone(), side);
    let mut top = 0;
    for s in &simples {
        let table = match side {
            Side::Right => tor_table(&dual, s, bound + 1)?,
            Side::Left => tor_table(s, &dual, bound + 1)?,
        };
        if table[bound + 1] != 0 {
            return Ok(Dim::Exceeds(bound));
        }
        if let Some(i) = (0..=bound).rev().find(|&i| table[i] != 0) {
            top = top.max(i);
        }
    }
    Ok(Dim::Finite(top))
}

/// Quotients `P(i) / J^k P(i)` for all `i` and `k >= 1`, without repeats up
/// to isomorphism. Over a Nakayama algebra these are all indecomposables.
pub fn uniserial_quotients(a: &AlgebraRef) -> Result<Vec<Labeled>> {
    let mut out: Vec<Labeled> = Vec::new();
    for (i, p) in indecomposable_projectives(a, Side::Left)?.into_iter().enumerate() {
        for k in 1.. {
            let jk = a.radical_power(k)?;
            let f = p.field();
            let cols: Vec<_> = (0..jk.dim()).map(|c| p.act(&jk.basis().column(c))).collect();
            let sub = if cols.is_empty() {
                Subspace::zero(f, p.dim())
            } else {
                Subspace::span(&crate::linalg::Matrix::hstack(f, p.dim(), &cols))
            };
            let incl = ModuleMap::from_parts(p.submodule(&sub), p.clone(), sub.basis().clone());
            let q = incl.cokernel().0;
            let mut fresh = true;
            for seen in &out {
                if is_isomorphic(&seen.module, &q)? {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                let label = if sub.dim() == 0 { format!("P{}", i + 1) } else { format!("P{}/J^{k}", i + 1) };
                out.push(Labeled::new(label, q));
            }
            if sub.dim() == 0 {
                break;
            }
        }
    }
    Ok(out)
}

/// Simples, indecomposable projectives and injectives, and `D A`, followed
/// by `extra`.
pub fn augmented_test_set(a: &AlgebraRef, extra: &[Labeled]) -> Result<Vec<Labeled>> {
    let mut out = Vec::new();
    if a.idempotents().is_some() {
        for (name, list) in [
            ("S", simple_modules(a, Side::Left)?),
            ("P", indecomposable_projectives(a, Side::Left)?),
            ("I", indecomposable_injectives(a, Side::Left)?),
        ] {
            out.extend(list.into_iter().enumerate().map(|(i, m)| Labeled::new(format!("{name}{}", i + 1), m)));
        }
    } else {
        out.push(Labeled::new("A", ModuleRep::regular(a.clone(), Side::Left)));
    }
    out.push(Labeled::new("D(A)", ModuleRep::dual_regular(a.clone(), Side::Left)));
    out.extend(extra.iter().cloned());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::builtins::*;
    use crate::algebra::Algebra;
    use crate::linalg::Field;

    #[test]
    fn golden_gorenstein_dimensions() {
        let cases: Vec<(Algebra, usize)> = vec![
            (Algebra::semisimple(Field::Rationals, 2), 0),
            (cyclic_rad_square(3), 0),
            (linear_a(2, None), 1),
            (dual_numbers(), 0),
        ];
        for (a, g) in cases {
            let a = Arc::new(a);
            let r = iwanaga_gorenstein_test(&a, default_bound(&a)).unwrap();
            assert_eq!(r.is_iwanaga_gorenstein, Verdict::Yes);
            assert_eq!(r.g, Some(g));
        }
    }

    #[test]
    fn tor_oracle_matches_resolution_length() {
        for a in [linear_a(2, None), linear_a(3, Some(2)), poly_trunc(3)] {
            let a = Arc::new(a);
            let r = iwanaga_gorenstein_test(&a, 8).unwrap();
            assert_eq!(pd_dual_by_tor(&a, Side::Left, 8).unwrap(), r.pd_left);
            assert_eq!(pd_dual_by_tor(&a, Side::Right, 8).unwrap(), r.pd_right);
        }
    }

    #[test]
    fn uniserial_quotients_of_a2_and_cycle() {
        let a = Arc::new(linear_a(2, None));
        let labels: Vec<String> = uniserial_quotients(&a).unwrap().into_iter().map(|l| l.label).collect();
        assert_eq!(labels, ["P1/J^1", "P1", "P2"]);
        let c = Arc::new(cyclic_rad_square(3));
        assert_eq!(uniserial_quotients(&c).unwrap().len(), 6);
    }
}
