use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace};
use crate::module::ModuleRep;

/// A module homomorphism `source -> target` as a `target.dim x source.dim` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: ModuleRep,
    target: ModuleRep,
    matrix: Matrix,
}

impl ModuleMap {
    /// A validated homomorphism.
    pub fn new(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> Result<Self> {
        source.check_same(&target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map matrix must be {}x{}, got {}x{}",
                target.dim(),
                source.dim(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let map = Self::from_parts(source, target, matrix);
        map.validate()?;
        Ok(map)
    }

    pub(crate) fn from_parts(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.dim(), source.dim()));
        ModuleMap { source, target, matrix }
    }

    /// Intertwining with every basis element.
    pub fn validate(&self) -> Result<()> {
        for i in 0..self.source.algebra().dim() {
            if self.target.action(i).mul(&self.matrix) != self.matrix.mul(self.source.action(i)) {
                return Err(Error::NotAHomomorphism(format!(
                    "fails to commute with {}",
                    self.source.algebra().labels()[i]
                )));
            }
        }
        Ok(())
    }

    pub fn identity(m: &ModuleRep) -> Self {
        Self::from_parts(m.clone(), m.clone(), Matrix::identity(m.field(), m.dim()))
    }

    pub fn zero(source: &ModuleRep, target: &ModuleRep) -> Self {
        Self::from_parts(source.clone(), target.clone(), Matrix::zeros(source.field(), target.dim(), source.dim()))
    }

    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        Ok(Self::from_parts(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix)))
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.scale(s))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_mono()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let inv = self.matrix.inverse()?;
        Some(Self::from_parts(self.target.clone(), self.source.clone(), inv))
    }

    /// Kernel as a submodule, with its inclusion.
    pub fn kernel(&self) -> (ModuleRep, ModuleMap) {
        let sub = Subspace::kernel_of(&self.matrix);
        let k = self.source.submodule(&sub);
        let incl = Self::from_parts(k.clone(), self.source.clone(), sub.basis().clone());
        (k, incl)
    }

    /// Cokernel as a quotient, with its projection.
    pub fn cokernel(&self) -> (ModuleRep, ModuleMap) {
        let im = Subspace::span(&self.matrix);
        let q = im.quotient();
        let action = self.target.actions().iter().map(|m| q.proj.mul(m).mul(&q.section)).collect();
        let c = ModuleRep::from_parts(self.target.algebra().clone(), self.target.side(), q.dim(), action);
        let proj = Self::from_parts(self.target.clone(), c.clone(), q.proj);
        (c, proj)
    }

    /// Image as a submodule of the target, with the corestriction and inclusion.
    pub fn image(&self) -> (ModuleRep, ModuleMap, ModuleMap) {
        let sub = Subspace::span(&self.matrix);
        let im = self.target.submodule(&sub);
        let onto = Self::from_parts(self.source.clone(), im.clone(), sub.coords(&self.matrix));
        let incl = Self::from_parts(im.clone(), self.target.clone(), sub.basis().clone());
        (im, onto, incl)
    }

    /// `D f: D target -> D source`.
    pub fn dual(&self) -> ModuleMap {
        Self::from_parts(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }

    /// Same matrix between the modules read over the opposite algebra.
    pub fn flip_to_opposite(&self) -> ModuleMap {
        Self::from_parts(self.source.flip_to_opposite(), self.target.flip_to_opposite(), self.matrix.clone())
    }

    pub fn flip_from_opposite(&self, original: &crate::algebra::AlgebraRef) -> ModuleMap {
        Self::from_parts(
            self.source.flip_from_opposite(original),
            self.target.flip_from_opposite(original),
            self.matrix.clone(),
        )
    }

    /// Replaces source and target by equal-dimensional modules, keeping the matrix.
    pub(crate) fn retarget(&self, source: &ModuleRep, target: &ModuleRep) -> ModuleMap {
        Self::from_parts(source.clone(), target.clone(), self.matrix.clone())
    }
}
