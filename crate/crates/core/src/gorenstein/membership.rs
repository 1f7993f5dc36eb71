use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functors::{counit_sigma, nakayama_apply, nakayama_right_apply, unit_lambda};
use crate::gorenstein::{GorensteinReport, Labeled};
use crate::module::ModuleRep;
use crate::resolution::{
    injective_coresolution, left_derived_nu, projective_resolution, right_derived_nu_minus, DerivedTable, Dim,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipKind {
    GorensteinProjective,
    GorensteinInjective,
}

/// The three conditions. For Gorenstein projectives: `L_i nu (M)`,
/// `R^i nu^- (nu M)` and `lambda_M`; for injectives: `R^i nu^- (M)`,
/// `L_i nu (nu^- M)` and `sigma_M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub derived: DerivedTable,
    /// Whether vanishing in the table implies vanishing in every degree.
    pub derived_certified: bool,
    pub image: DerivedTable,
    pub image_certified: bool,
    pub unit_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub label: String,
    pub kind: MembershipKind,
    /// The simplified verdict when the algebra is Iwanaga-Gorenstein, the
    /// full one otherwise.
    pub verdict: Verdict,
    pub full_verdict: Verdict,
    /// Vanishing of the first table in degrees `1..=g`, when `g` is known.
    pub simplified: Option<bool>,
    pub evidence: Evidence,
}

fn certified(table: &DerivedTable, horizon: Option<usize>) -> bool {
    table.resolution_complete || horizon.is_some_and(|h| h <= table.bound)
}

fn decide(
    label: &str,
    kind: MembershipKind,
    report: &GorensteinReport,
    evidence: Evidence,
) -> Membership {
    let bound = report.bound;
    let full_verdict = if !evidence.derived.vanishes_through(bound)
        || !evidence.image.vanishes_through(bound)
        || !evidence.unit_iso
    {
        Verdict::No
    } else if evidence.derived_certified && evidence.image_certified {
        Verdict::Yes
    } else {
        Verdict::Indeterminate
    };
    let simplified = report.g.map(|g| evidence.derived.vanishes_through(g));
    let verdict = match simplified {
        Some(true) => Verdict::Yes,
        Some(false) => Verdict::No,
        None => full_verdict,
    };
    Membership { label: label.to_string(), kind, verdict, full_verdict, simplified, evidence }
}

pub fn is_gorenstein_projective(m: &Labeled, report: &GorensteinReport) -> Result<Membership> {
    let bound = report.bound;
    let derived = left_derived_nu(&m.module, bound)?;
    let image = right_derived_nu_minus(&nakayama_apply(&m.module)?, bound)?;
    let evidence = Evidence {
        derived_certified: certified(&derived, report.left_horizon()),
        image_certified: certified(&image, report.right_horizon()),
        unit_iso: unit_lambda(&m.module)?.is_iso(),
        derived,
        image,
    };
    Ok(decide(&m.label, MembershipKind::GorensteinProjective, report, evidence))
}

pub fn is_gorenstein_injective(m: &Labeled, report: &GorensteinReport) -> Result<Membership> {
    let bound = report.bound;
    let derived = right_derived_nu_minus(&m.module, bound)?;
    let image = left_derived_nu(&nakayama_right_apply(&m.module)?, bound)?;
    let evidence = Evidence {
        derived_certified: certified(&derived, report.right_horizon()),
        image_certified: certified(&image, report.left_horizon()),
        unit_iso: counit_sigma(&m.module)?.is_iso(),
        derived,
        image,
    };
    Ok(decide(&m.label, MembershipKind::GorensteinInjective, report, evidence))
}

/// Smallest `r` whose `r`-th (co)syzygy passes `test`, searching up to `g`
/// when known and up to the bound otherwise.
fn first_member(
    syzygies: &[ModuleRep],
    label: &str,
    report: &GorensteinReport,
    test: impl Fn(&Labeled, &GorensteinReport) -> Result<Membership>,
) -> Result<Dim> {
    for (r, s) in syzygies.iter().enumerate() {
        match test(&Labeled::new(format!("{label} syzygy {r}"), s.clone()), report)?.verdict {
            Verdict::Yes => return Ok(Dim::Finite(r)),
            Verdict::No => continue,
            Verdict::Indeterminate => return Ok(Dim::Exceeds(report.bound)),
        }
    }
    match report.g {
        Some(g) => Err(Error::TheoremViolation(format!("{label}: syzygy {g} is not Gorenstein projective"))),
        None => Ok(Dim::Exceeds(report.bound)),
    }
}

/// Gorenstein projective dimension: the first syzygy of a projective
/// resolution that is Gorenstein projective.
pub fn gp_dimension(m: &Labeled, report: &GorensteinReport) -> Result<Dim> {
    let len = report.g.unwrap_or(report.bound);
    let r = projective_resolution(&m.module, len)?;
    first_member(&r.syzygies[..r.syzygies.len().min(len + 1)], &m.label, report, is_gorenstein_projective)
}

/// Gorenstein injective dimension from the cosyzygies of an injective
/// coresolution.
pub fn gi_dimension(m: &Labeled, report: &GorensteinReport) -> Result<Dim> {
    let len = report.g.unwrap_or(report.bound);
    let r = injective_coresolution(&m.module, len)?;
    first_member(&r.syzygies[..r.syzygies.len().min(len + 1)], &m.label, report, is_gorenstein_injective)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::builtins::*;
    use crate::gorenstein::{default_bound, iwanaga_gorenstein_test, uniserial_quotients};
    use crate::module::{indecomposable_projectives, simple_modules, Side};

    #[test]
    fn a2_classification() {
        let a = Arc::new(linear_a(2, None));
        let report = iwanaga_gorenstein_test(&a, default_bound(&a)).unwrap();
        let p = indecomposable_projectives(&a, Side::Left).unwrap();
        let s1 = simple_modules(&a, Side::Left).unwrap().remove(0);
        // (k -> k), (0 -> k), (k -> 0)
        let mods = [Labeled::new("P1", p[0].clone()), Labeled::new("P2", p[1].clone()), Labeled::new("S1", s1)];
        let gp: Vec<Verdict> = mods.iter().map(|m| is_gorenstein_projective(m, &report).unwrap().verdict).collect();
        assert_eq!(gp, [Verdict::Yes, Verdict::Yes, Verdict::No]);
        let gi: Vec<Verdict> = mods.iter().map(|m| is_gorenstein_injective(m, &report).unwrap().verdict).collect();
        assert_eq!(gi, [Verdict::Yes, Verdict::No, Verdict::Yes]);
        assert_eq!(gp_dimension(&mods[2], &report).unwrap(), Dim::Finite(1));
        assert_eq!(gi_dimension(&mods[1], &report).unwrap(), Dim::Finite(1));
        assert_eq!(gp_dimension(&mods[0], &report).unwrap(), Dim::Finite(0));
    }

    #[test]
    fn self_injective_everything_is_gorenstein() {
        for a in [cyclic_rad_square(3), dual_numbers(), poly_trunc(3)] {
            let a = Arc::new(a);
            let report = iwanaga_gorenstein_test(&a, default_bound(&a)).unwrap();
            assert_eq!(report.g, Some(0));
            for m in uniserial_quotients(&a).unwrap() {
                let gp = is_gorenstein_projective(&m, &report).unwrap();
                assert_eq!(gp.verdict, Verdict::Yes, "{}", m.label);
                assert_eq!(gp.full_verdict, Verdict::Yes, "{}", m.label);
                assert_eq!(is_gorenstein_injective(&m, &report).unwrap().verdict, Verdict::Yes);
                assert_eq!(gp_dimension(&m, &report).unwrap(), Dim::Finite(0));
            }
        }
    }

    #[test]
    fn undecided_without_horizon() {
        // with both horizons unknown, passing every check up to the bound is not a proof
        let a = Arc::new(linear_a(2, None));
        let mut report = iwanaga_gorenstein_test(&a, 3).unwrap();
        report.pd_left = Dim::Exceeds(3);
        report.pd_right = Dim::Exceeds(3);
        report.g = None;
        let s = simple_modules(&a, Side::Left).unwrap();
        let m = Labeled::new("S1", s[0].clone());
        assert_eq!(is_gorenstein_projective(&m, &report).unwrap().verdict, Verdict::No);
        // P2 has a complete resolution, so its tables are certified anyway
        let p = indecomposable_projectives(&a, Side::Left).unwrap();
        let m = Labeled::new("P2", p[1].clone());
        assert_eq!(is_gorenstein_projective(&m, &report).unwrap().verdict, Verdict::Yes);
    }

    fn two_loops_radical_square_zero() -> crate::algebra::Algebra {
        use crate::algebra::{Algebra, Arrow, QuiverPresentation, RelationTerm};
        use crate::linalg::Field;
        let f = Field::Rationals;
        let arrows = ["x", "y"].iter().map(|n| Arrow { name: n.to_string(), source: 0, target: 0 }).collect();
        let relations = (0..2)
            .flat_map(|i| (0..2).map(move |j| vec![RelationTerm { coeff: f.one(), path: vec![i, j] }]))
            .collect();
        let p = QuiverPresentation { vertices: vec!["1".into()], arrows, relations, nilpotency_bound: 2 };
        Algebra::from_quiver(p, f).unwrap()
    }

    #[test]
    fn non_gorenstein_local_algebra() {
        let a = Arc::new(two_loops_radical_square_zero());
        let report = iwanaga_gorenstein_test(&a, 2).unwrap();
        assert_eq!(report.is_iwanaga_gorenstein, Verdict::Indeterminate);
        assert_eq!(report.pd_left, Dim::Exceeds(2));
        let s = Labeled::new("S", simple_modules(&a, Side::Left).unwrap().remove(0));
        assert_eq!(is_gorenstein_projective(&s, &report).unwrap().verdict, Verdict::No);
        let lam = Labeled::new("A", ModuleRep::regular(a.clone(), Side::Left));
        let m = is_gorenstein_projective(&lam, &report).unwrap();
        assert_eq!(m.verdict, Verdict::Yes);
        assert_eq!(m.simplified, None);
    }
}
