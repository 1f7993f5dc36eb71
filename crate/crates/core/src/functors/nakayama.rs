use crate::algebra::Bimodule;
use crate::error::{Error, Result};
use crate::functors::hom::{hom_data, hom_map_between, HomData};
use crate::functors::tensor::{tensor_data, tensor_map_between, TensorData};
use crate::linalg::Matrix;
use crate::module::{ModuleMap, ModuleRep, Side};

fn dual_of(m: &ModuleRep) -> Result<Bimodule> {
    if m.side() != Side::Left {
        return Err(Error::Incompatible("the Nakayama functors act on left modules".into()));
    }
    Ok(Bimodule::dual_regular(m.algebra()))
}

/// `nu(M) = D A (x)_A M` with its quotient data.
pub fn nakayama_data(m: &ModuleRep) -> Result<TensorData> {
    tensor_data(&dual_of(m)?, m)
}

/// `nu^-(M) = Hom_A(D A, M)` with its embedding data.
pub fn nakayama_right_data(m: &ModuleRep) -> Result<HomData> {
    hom_data(&dual_of(m)?, m)
}

/// `nu(M) = D A (x)_A M`.
pub fn nakayama_apply(m: &ModuleRep) -> Result<ModuleRep> {
    Ok(nakayama_data(m)?.module)
}

/// `nu^-(M) = Hom_A(D A, M)`, the right adjoint of `nu`.
pub fn nakayama_right_apply(m: &ModuleRep) -> Result<ModuleRep> {
    Ok(nakayama_right_data(m)?.module)
}

pub fn nakayama_map(f: &ModuleMap) -> Result<ModuleMap> {
    let b = dual_of(f.source())?;
    let src = tensor_data(&b, f.source())?;
    let tgt = tensor_data(&b, f.target())?;
    Ok(tensor_map_between(&b, f, &src, &tgt))
}

pub fn nakayama_right_map(f: &ModuleMap) -> Result<ModuleMap> {
    let b = dual_of(f.source())?;
    let src = hom_data(&b, f.source())?;
    let tgt = hom_data(&b, f.target())?;
    Ok(hom_map_between(&b, f, &src, &tgt))
}

/// `lambda_M: M -> nu^- nu M`, `m -> (f -> [f (x) m])`.
pub fn unit_lambda(m: &ModuleRep) -> Result<ModuleMap> {
    let t = nakayama_data(m)?;
    let h = nakayama_right_data(&t.module)?;
    let f = m.field();
    let d = m.algebra().dim();
    let (dm, dt) = (m.dim(), t.module.dim());
    // column k: the matrix with column s equal to proj(f_s (x) e_k), flattened row-major
    let flat = Matrix::from_fn(f, dt * d, dm, |i, k| t.proj[(i / d, (i % d) * dm + k)].clone());
    debug_assert!(h.space.contains(&flat));
    Ok(ModuleMap::from_parts(m.clone(), h.module.clone(), h.space.coords(&flat)))
}

/// `sigma_M: nu nu^- M -> M`, `[f (x) phi] -> phi(f)`.
pub fn counit_sigma(m: &ModuleRep) -> Result<ModuleMap> {
    let h = nakayama_right_data(m)?;
    let t = nakayama_data(&h.module)?;
    let f = m.field();
    let d = m.algebra().dim();
    let (dm, dh) = (m.dim(), h.module.dim());
    // full space index s * dh + j holds f_s (x) phi_j
    let eval = Matrix::from_fn(f, dm, d * dh, |r, c| h.space.basis()[(r * d + c / dh, c % dh)].clone());
    Ok(ModuleMap::from_parts(t.module.clone(), m.clone(), eval.mul(&t.section)))
}
