//! Functors between module categories: tensor and hom with bimodules, the
//! Nakayama pair, the free functors `P, I, T, S`, syzygy and cosyzygy, and
//! checks of the adjunctions between them.

mod adjunction;
mod free;
mod hom;
mod nakayama;
mod syzygy;
mod tensor;
mod vect;

pub use adjunction::{verify_adjunction, Adjunction, AdjunctionReport, CheckOutcome};
pub use free::{
    counit_i_s, counit_p_i, counit_t_p, i_apply, i_map, p_apply, p_map, s_apply, s_map, t_apply, t_map, unit_i_s,
    unit_p_i, unit_t_p,
};
pub use hom::{hom_apply, hom_data, hom_map, hom_map_between, HomData};
pub use nakayama::{
    counit_sigma, nakayama_apply, nakayama_data, nakayama_map, nakayama_right_apply, nakayama_right_data,
    nakayama_right_map, unit_lambda,
};
pub use syzygy::{
    counit_sigma_omega, omega_data, omega_map, omega_step, sigma_data, sigma_map, sigma_step, unit_sigma_omega,
    OmegaData, SigmaData,
};
pub use tensor::{balanced_tensor, tensor_apply, tensor_data, tensor_map, tensor_map_between, TensorData};
pub use vect::{
    verify_ambidextrous, verify_ambidextrous_data, verify_monad_comonad, verify_monad_comonad_data, VectData, VectReport,
};

use crate::algebra::Bimodule;
use crate::error::Result;
use crate::module::{ModuleMap, ModuleRep};

/// An endofunctor of left modules, or a composite of them.
#[derive(Clone, Debug)]
pub enum Functor {
    Identity,
    Nu,
    NuMinus,
    P,
    I,
    T,
    S,
    Omega,
    Sigma,
    Tensor(Bimodule),
    Hom(Bimodule),
    /// Applied right to left, like composition.
    Compose(Vec<Functor>),
}

impl Functor {
    pub fn name(&self) -> String {
        match self {
            Functor::Identity => "id".into(),
            Functor::Nu => "nu".into(),
            Functor::NuMinus => "nu^-".into(),
            Functor::P => "P".into(),
            Functor::I => "I".into(),
            Functor::T => "T".into(),
            Functor::S => "S".into(),
            Functor::Omega => "Omega".into(),
            Functor::Sigma => "Sigma".into(),
            Functor::Tensor(_) => "B(x)-".into(),
            Functor::Hom(_) => "Hom(B,-)".into(),
            Functor::Compose(fs) => fs.iter().map(Functor::name).collect::<Vec<_>>().join(" "),
        }
    }

    pub fn apply(&self, m: &ModuleRep) -> Result<ModuleRep> {
        match self {
            Functor::Identity => Ok(m.clone()),
            Functor::Nu => nakayama_apply(m),
            Functor::NuMinus => nakayama_right_apply(m),
            Functor::P => p_apply(m),
            Functor::I => i_apply(m),
            Functor::T => t_apply(m),
            Functor::S => s_apply(m),
            Functor::Omega => omega_step(m),
            Functor::Sigma => sigma_step(m),
            Functor::Tensor(b) => tensor_apply(b, m),
            Functor::Hom(b) => hom_apply(b, m),
            Functor::Compose(fs) => fs.iter().rev().try_fold(m.clone(), |acc, f| f.apply(&acc)),
        }
    }

    pub fn apply_map(&self, f: &ModuleMap) -> Result<ModuleMap> {
        match self {
            Functor::Identity => Ok(f.clone()),
            Functor::Nu => nakayama_map(f),
            Functor::NuMinus => nakayama_right_map(f),
            Functor::P => p_map(f),
            Functor::I => i_map(f),
            Functor::T => t_map(f),
            Functor::S => s_map(f),
            Functor::Omega => omega_map(f),
            Functor::Sigma => sigma_map(f),
            Functor::Tensor(b) => tensor_map(b, f),
            Functor::Hom(b) => hom_map(b, f),
            Functor::Compose(fs) => fs.iter().rev().try_fold(f.clone(), |acc, g| g.apply_map(&acc)),
        }
    }
}
