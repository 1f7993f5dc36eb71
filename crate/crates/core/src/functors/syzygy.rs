//! `Omega = Ker(P I -> 1)` and `Sigma = Coker(1 -> P T)` with the unit and
//! counit of `Sigma ⊣ Omega`.

use crate::error::Result;
use crate::functors::free::{counit_p_i, counit_t_p, i_apply, p_map, unit_p_i, unit_t_p};
use crate::functors::nakayama::nakayama_map;
use crate::linalg::{Matrix, Quotient, Subspace};
use crate::module::{ModuleMap, ModuleRep};

/// `Omega(M)` as the kernel of the counit `P I M -> M`.
pub struct OmegaData {
    pub module: ModuleRep,
    pub kernel: Subspace,
    pub counit: ModuleMap,
}

/// `Sigma(M)` as the cokernel of the unit `M -> P T M`.
pub struct SigmaData {
    pub module: ModuleRep,
    pub quotient: Quotient,
    pub unit: ModuleMap,
}

pub fn omega_data(m: &ModuleRep) -> Result<OmegaData> {
    let counit = counit_p_i(m)?;
    let kernel = Subspace::kernel_of(counit.matrix());
    let module = counit.source().submodule(&kernel);
    Ok(OmegaData { module, kernel, counit })
}

pub fn sigma_data(m: &ModuleRep) -> Result<SigmaData> {
    let unit = unit_t_p(m)?;
    let quotient = Subspace::span(unit.matrix()).quotient();
    let target = unit.target();
    let action = target.actions().iter().map(|a| quotient.proj.mul(a).mul(&quotient.section)).collect();
    let module = ModuleRep::from_parts(target.algebra().clone(), target.side(), quotient.dim(), action);
    Ok(SigmaData { module, quotient, unit })
}

pub fn omega_step(m: &ModuleRep) -> Result<ModuleRep> {
    Ok(omega_data(m)?.module)
}

pub fn sigma_step(m: &ModuleRep) -> Result<ModuleRep> {
    Ok(sigma_data(m)?.module)
}

fn square(m: &ModuleRep) -> usize {
    m.algebra().dim() * m.algebra().dim()
}

/// `Omega(f)`, the restriction of `P I (f)` to the kernels.
pub fn omega_map(f: &ModuleMap) -> Result<ModuleMap> {
    let src = omega_data(f.source())?;
    let tgt = omega_data(f.target())?;
    let moved = f.matrix().id_kron_mul(square(f.source()), src.kernel.basis());
    Ok(ModuleMap::from_parts(src.module, tgt.module, tgt.kernel.coords(&moved)))
}

/// `Sigma(f)`, induced by `P T (f)` on the cokernels.
pub fn sigma_map(f: &ModuleMap) -> Result<ModuleMap> {
    let src = sigma_data(f.source())?;
    let tgt = sigma_data(f.target())?;
    let nu = nakayama_map(f)?;
    let moved = nu.matrix().id_kron_mul(square(f.source()), &src.quotient.section);
    Ok(ModuleMap::from_parts(src.module, tgt.module, tgt.quotient.proj.mul(&moved)))
}

/// Unit `B -> Omega Sigma B`: the composite
/// `B -> P T B -> P I P T B -> P I Sigma B`, which lands in the kernel.
pub fn unit_sigma_omega(b: &ModuleRep) -> Result<ModuleMap> {
    let sig = sigma_data(b)?;
    let tb = crate::functors::free::t_apply(b)?;
    let lift = p_map(&unit_p_i(&tb)?)?.compose(&sig.unit)?;
    let pushed = sig.quotient.proj.id_kron_mul(square(b), lift.matrix());
    let om = omega_data(&sig.module)?;
    debug_assert!(om.kernel.contains(&pushed));
    Ok(ModuleMap::from_parts(b.clone(), om.module, om.kernel.coords(&pushed)))
}

/// Counit `Sigma Omega A -> A`, induced on the cokernel by
/// `P T Omega A -> P T P I A -> P I A -> A`.
pub fn counit_sigma_omega(a: &ModuleRep) -> Result<ModuleMap> {
    let om = omega_data(a)?;
    let incl = ModuleMap::from_parts(om.module.clone(), om.counit.source().clone(), om.kernel.basis().clone());
    let nu_incl = nakayama_map(&incl)?;
    let pt_incl = Matrix::identity(a.field(), square(a)).kron(nu_incl.matrix());
    let back = counit_p_i(a)?.compose(&p_map(&counit_t_p(&i_apply(a)?)?)?)?;
    let sig = sigma_data(&om.module)?;
    let matrix = back.matrix().mul(&pt_incl).mul(&sig.quotient.section);
    Ok(ModuleMap::from_parts(sig.module, a.clone(), matrix))
}
