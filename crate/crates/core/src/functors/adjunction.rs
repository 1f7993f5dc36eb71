//! Exact checks of adjunctions between endofunctors of left modules.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::functors::free::{counit_i_s, counit_p_i, counit_t_p, unit_i_s, unit_p_i, unit_t_p};
use crate::functors::nakayama::{counit_sigma, unit_lambda};
use crate::functors::syzygy::{counit_sigma_omega, unit_sigma_omega};
use crate::functors::Functor;
use crate::linalg::Matrix;
use crate::module::{hom_space, ModuleMap, ModuleRep};
use crate::par;

/// Hom spaces larger than this (as `dim X * dim Y`) are left out of the
/// bijection check.
const HOM_CAP: usize = 600;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjunction {
    /// `T ⊣ P`
    TP,
    /// `P ⊣ I`
    PI,
    /// `I ⊣ S`
    IS,
    /// `nu ⊣ nu^-`
    NuNuMinus,
    /// `Sigma ⊣ Omega`
    SigmaOmega,
}

impl Adjunction {
    pub const ALL: [Adjunction; 5] =
        [Adjunction::TP, Adjunction::PI, Adjunction::IS, Adjunction::NuNuMinus, Adjunction::SigmaOmega];

    pub fn name(&self) -> &'static str {
        match self {
            Adjunction::TP => "T -| P",
            Adjunction::PI => "P -| I",
            Adjunction::IS => "I -| S",
            Adjunction::NuNuMinus => "nu -| nu^-",
            Adjunction::SigmaOmega => "Sigma -| Omega",
        }
    }

    pub fn left(&self) -> Functor {
        match self {
            Adjunction::TP => Functor::T,
            Adjunction::PI => Functor::P,
            Adjunction::IS => Functor::I,
            Adjunction::NuNuMinus => Functor::Nu,
            Adjunction::SigmaOmega => Functor::Sigma,
        }
    }

    pub fn right(&self) -> Functor {
        match self {
            Adjunction::TP => Functor::P,
            Adjunction::PI => Functor::I,
            Adjunction::IS => Functor::S,
            Adjunction::NuNuMinus => Functor::NuMinus,
            Adjunction::SigmaOmega => Functor::Omega,
        }
    }

    /// `B -> R L B`
    pub fn unit(&self, b: &ModuleRep) -> Result<ModuleMap> {
        match self {
            Adjunction::TP => unit_t_p(b),
            Adjunction::PI => unit_p_i(b),
            Adjunction::IS => unit_i_s(b),
            Adjunction::NuNuMinus => unit_lambda(b),
            Adjunction::SigmaOmega => unit_sigma_omega(b),
        }
    }

    /// `L R A -> A`
    pub fn counit(&self, a: &ModuleRep) -> Result<ModuleMap> {
        match self {
            Adjunction::TP => counit_t_p(a),
            Adjunction::PI => counit_p_i(a),
            Adjunction::IS => counit_i_s(a),
            Adjunction::NuNuMinus => counit_sigma(a),
            Adjunction::SigmaOmega => counit_sigma_omega(a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub component: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub adjunction: Adjunction,
    pub name: String,
    pub tested_modules: usize,
    pub perturbed: bool,
    pub checks: Vec<CheckOutcome>,
    pub skipped: Vec<String>,
    pub passed: bool,
    pub first_failure: Option<String>,
}

struct Parts {
    unit: ModuleMap,
    counit: ModuleMap,
    left: ModuleRep,
    right: ModuleRep,
}

fn outcome(component: String, passed: bool) -> CheckOutcome {
    CheckOutcome { component, passed }
}

fn flatten(maps: &[ModuleMap], rows: usize) -> Matrix {
    let field = maps.first().map(|m| m.matrix().field());
    match field {
        None => Matrix::zeros(crate::linalg::Field::Rationals, rows, 0),
        Some(f) => {
            let cols: Vec<Matrix> = maps
                .iter()
                .map(|m| {
                    let c = m.matrix().cols();
                    Matrix::from_fn(f, rows, 1, |i, _| m.matrix()[(i / c, i % c)].clone())
                })
                .collect();
            Matrix::hstack(f, rows, &cols)
        }
    }
}

/// Checks both triangle identities on every test module, naturality of the
/// unit and counit along hom-space bases between test modules, and that
/// `g -> R(g) . unit` is a bijection `Hom(L X, Y) -> Hom(X, R Y)`.
/// With `perturb` the counit is doubled, which must break the identities.
pub fn verify_adjunction(adj: Adjunction, tests: &[ModuleRep], perturb: bool) -> Result<AdjunctionReport> {
    let (left, right) = (adj.left(), adj.right());
    let counit = |a: &ModuleRep| -> Result<ModuleMap> {
        let e = adj.counit(a)?;
        Ok(if perturb { e.scale(&a.field().from_i64(2)) } else { e })
    };
    let parts: Vec<Parts> = par::try_map(tests, |m| {
        Ok::<_, crate::Error>(Parts { unit: adj.unit(m)?, counit: counit(m)?, left: left.apply(m)?, right: right.apply(m)? })
    })?;

    let triangles: Vec<Vec<CheckOutcome>> = par::try_map(&tests.iter().enumerate().collect::<Vec<_>>(), |(k, _)| {
        let p = &parts[*k];
        let first = counit(&p.left)?.compose(&left.apply_map(&p.unit)?)?;
        let second = right.apply_map(&p.counit)?.compose(&adj.unit(&p.right)?)?;
        Ok::<_, crate::Error>(vec![
            outcome(format!("triangle counit_L . L(unit) at module {k}"), first.matrix().is_identity()),
            outcome(format!("triangle R(counit) . unit_R at module {k}"), second.matrix().is_identity()),
        ])
    })?;
    let mut checks: Vec<CheckOutcome> = triangles.into_iter().flatten().collect();

    let pairs: Vec<(usize, usize)> =
        (0..tests.len()).flat_map(|x| (0..tests.len()).map(move |y| (x, y))).collect();
    let mut skipped = Vec::new();
    let per_pair: Vec<(Vec<CheckOutcome>, Option<String>)> = par::try_map(&pairs, |&(x, y)| {
        let (mx, my) = (&tests[x], &tests[y]);
        let mut out = Vec::new();
        let mut natural_unit = true;
        let mut natural_counit = true;
        for f in hom_space(mx, my)? {
            let rl = right.apply_map(&left.apply_map(&f)?)?;
            natural_unit &= rl.compose(&parts[x].unit)?.matrix() == parts[y].unit.compose(&f)?.matrix();
            let lr = left.apply_map(&right.apply_map(&f)?)?;
            natural_counit &= parts[y].counit.compose(&lr)?.matrix() == f.compose(&parts[x].counit)?.matrix();
        }
        out.push(outcome(format!("naturality of unit on Hom({x}, {y})"), natural_unit));
        out.push(outcome(format!("naturality of counit on Hom({x}, {y})"), natural_counit));

        let (lx, ry) = (&parts[x].left, &parts[y].right);
        if lx.dim() * my.dim() > HOM_CAP || mx.dim() * ry.dim() > HOM_CAP {
            return Ok::<_, crate::Error>((out, Some(format!("bijection on ({x}, {y})"))));
        }
        let lhs = hom_space(lx, my)?;
        let rhs = hom_space(mx, ry)?;
        let images = lhs
            .iter()
            .map(|g| right.apply_map(g)?.compose(&parts[x].unit))
            .collect::<Result<Vec<_>>>()?;
        let rank = flatten(&images, ry.dim() * mx.dim()).rank();
        let bijective = lhs.len() == rhs.len() && rank == images.len();
        out.push(outcome(format!("unit bijection Hom(L {x}, {y}) -> Hom({x}, R {y})"), bijective));
        Ok((out, None))
    })?;
    for (out, skip) in per_pair {
        checks.extend(out);
        skipped.extend(skip);
    }

    let first_failure = checks.iter().find(|c| !c.passed).map(|c| c.component.clone());
    Ok(AdjunctionReport {
        adjunction: adj,
        name: adj.name().to_string(),
        tested_modules: tests.len(),
        perturbed: perturb,
        passed: first_failure.is_none(),
        checks,
        skipped,
        first_failure,
    })
}
