use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraRef, CategorySpec};
use crate::error::{Error, Result};
use crate::functors::{counit_sigma, nakayama_apply, nakayama_right_apply, unit_lambda};
use crate::gorenstein::{
    augmented_test_set, gi_dimension, gp_dimension, is_gorenstein_injective, is_gorenstein_projective,
    iwanaga_gorenstein_test, FourNumbers, GorensteinReport, Labeled, Membership, Verdict,
};
use crate::linalg::Field;
use crate::module::{indecomposable_injectives, Side};
use crate::par;
use crate::resolution::{left_derived_nu, proj_dim, right_derived_nu_minus, DerivedTable, Dim};

/// `Exceeds` absorbs everything; otherwise the larger value.
fn dim_max(a: Dim, b: Dim) -> Dim {
    match (a, b) {
        (Dim::Finite(x), Dim::Finite(y)) => Dim::Finite(x.max(y)),
        (Dim::Exceeds(x), _) | (_, Dim::Exceeds(x)) => Dim::Exceeds(x),
    }
}

fn vanishing_degree(table: &DerivedTable, horizon: Option<usize>) -> Dim {
    if table.resolution_complete || horizon.is_some_and(|h| h <= table.bound) {
        Dim::Finite(table.last_nonzero_positive().unwrap_or(0))
    } else {
        Dim::Exceeds(table.bound)
    }
}

struct PerModule {
    gp: Dim,
    gi: Dim,
    s: Dim,
    t: Dim,
}

/// The Gorenstein projective and injective dimensions and the vanishing
/// degrees of `L nu` and `R nu^-`, each maximised over the augmented test
/// set. For an Iwanaga-Gorenstein algebra all four must equal `g`; anything
/// else is reported as a theorem violation.
pub fn verify_four_numbers(a: &AlgebraRef, extra: &[Labeled], bound: usize) -> Result<GorensteinReport> {
    let mut report = iwanaga_gorenstein_test(a, bound)?;
    let tests = augmented_test_set(a, extra)?;
    let rows: Vec<PerModule> = par::try_map(&tests, |m| {
        let l = left_derived_nu(&m.module, bound)?;
        let r = right_derived_nu_minus(&m.module, bound)?;
        Ok::<_, Error>(PerModule {
            gp: gp_dimension(m, &report)?,
            gi: gi_dimension(m, &report)?,
            s: vanishing_degree(&l, report.left_horizon()),
            t: vanishing_degree(&r, report.right_horizon()),
        })
    })?;
    let zero = Dim::Finite(0);
    let four = rows.iter().fold(
        FourNumbers { gp_dim: zero, gi_dim: zero, s: zero, t: zero },
        |acc, r| FourNumbers {
            gp_dim: dim_max(acc.gp_dim, r.gp),
            gi_dim: dim_max(acc.gi_dim, r.gi),
            s: dim_max(acc.s, r.s),
            t: dim_max(acc.t, r.t),
        },
    );
    report.four_numbers = Some(four);
    report.tested_set = tests.iter().map(|m| m.label.clone()).collect();
    if let Some(g) = report.g {
        if four.all().iter().any(|&d| d != Dim::Finite(g)) {
            return Err(Error::TheoremViolation(format!(
                "g = {g} but the four numbers are gp {}, gi {}, s {}, t {}",
                four.gp_dim, four.gi_dim, four.s, four.t
            )));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionAgreement {
    pub memberships: Vec<Membership>,
    pub disagreements: Vec<String>,
}

/// Over an Iwanaga-Gorenstein algebra, checks that vanishing of `L_i nu`
/// for `0 < i <= g` (resp. `R^i nu^-`) gives the same verdict as the full
/// three-condition test, for Gorenstein projectives and injectives.
pub fn verify_criterion_agreement(tests: &[Labeled], report: &GorensteinReport) -> Result<CriterionAgreement> {
    if report.g.is_none() {
        return Err(Error::Incompatible("criterion agreement needs an Iwanaga-Gorenstein algebra".into()));
    }
    let pairs: Vec<(Membership, Membership)> = par::try_map(tests, |m| {
        Ok::<_, Error>((is_gorenstein_projective(m, report)?, is_gorenstein_injective(m, report)?))
    })?;
    let mut memberships = Vec::new();
    let mut disagreements = Vec::new();
    for (gp, gi) in pairs {
        for m in [gp, gi] {
            if m.simplified != Some(m.full_verdict == Verdict::Yes) {
                disagreements.push(format!("{} ({:?})", m.label, m.kind));
            }
            memberships.push(m);
        }
    }
    Ok(CriterionAgreement { memberships, disagreements })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub gorenstein_projective: Vec<String>,
    pub gorenstein_injective: Vec<String>,
    pub checked_pairs: usize,
}

/// On the tested set: `nu` sends Gorenstein projectives to Gorenstein
/// injectives with `lambda` invertible, and `nu^-` goes back with `sigma`
/// invertible.
pub fn verify_equivalence_gp_gi(tests: &[Labeled], report: &GorensteinReport) -> Result<EquivalenceReport> {
    let rows: Vec<(Option<String>, Option<String>)> = par::try_map(tests, |m| {
        let mut gp = None;
        let mut gi = None;
        if is_gorenstein_projective(m, report)?.verdict == Verdict::Yes {
            let image = Labeled::new(format!("nu({})", m.label), nakayama_apply(&m.module)?);
            if is_gorenstein_injective(&image, report)?.verdict != Verdict::Yes {
                return Err(Error::TheoremViolation(format!("{} is not Gorenstein injective", image.label)));
            }
            if !unit_lambda(&m.module)?.is_iso() {
                return Err(Error::TheoremViolation(format!("unit at {} is not invertible", m.label)));
            }
            gp = Some(m.label.clone());
        }
        if is_gorenstein_injective(m, report)?.verdict == Verdict::Yes {
            let image = Labeled::new(format!("nu^-({})", m.label), nakayama_right_apply(&m.module)?);
            if is_gorenstein_projective(&image, report)?.verdict != Verdict::Yes {
                return Err(Error::TheoremViolation(format!("{} is not Gorenstein projective", image.label)));
            }
            if !counit_sigma(&m.module)?.is_iso() {
                return Err(Error::TheoremViolation(format!("counit at {} is not invertible", m.label)));
            }
            gi = Some(m.label.clone());
        }
        Ok((gp, gi))
    })?;
    let gorenstein_projective: Vec<String> = rows.iter().filter_map(|r| r.0.clone()).collect();
    let gorenstein_injective: Vec<String> = rows.iter().filter_map(|r| r.1.clone()).collect();
    let checked_pairs = gorenstein_projective.len() + gorenstein_injective.len();
    Ok(EquivalenceReport { gorenstein_projective, gorenstein_injective, checked_pairs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryReport {
    pub objects: Vec<String>,
    /// `pd D C(-, c)` as a left module, per object.
    pub left: Vec<Dim>,
    /// `pd D C(c, -)` as a right module, per object.
    pub right: Vec<Dim>,
    pub sup_left: Dim,
    pub sup_right: Dim,
    pub g: Option<usize>,
}

/// For a finite category: the largest projective dimension of the duals of
/// the representables on each side, which must agree with each other and
/// with the Gorenstein dimension of the category algebra.
pub fn verify_category_dimensions(c: &CategorySpec, field: Field, bound: usize) -> Result<CategoryReport> {
    let a: AlgebraRef = std::sync::Arc::new(Algebra::category_algebra(c, field)?);
    let left_mods = indecomposable_injectives(&a, Side::Left)?;
    let right_mods = indecomposable_injectives(&a, Side::Right)?;
    let left = par::try_map(&left_mods, |m| proj_dim(m, bound))?;
    let right = par::try_map(&right_mods, |m| proj_dim(m, bound))?;
    let sup = |v: &[Dim]| v.iter().fold(Dim::Finite(0), |acc, &d| dim_max(acc, d));
    let (sup_left, sup_right) = (sup(&left), sup(&right));
    let g = iwanaga_gorenstein_test(&a, bound)?.g;
    if let (Dim::Finite(l), Dim::Finite(r)) = (sup_left, sup_right) {
        if l != r || g != Some(l) {
            return Err(Error::TheoremViolation(format!(
                "suprema {l} (left) and {r} (right) against Gorenstein dimension {g:?}"
            )));
        }
    }
    Ok(CategoryReport { objects: c.objects.clone(), left, right, sup_left, sup_right, g })
}
