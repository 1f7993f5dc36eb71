//! Finite-dimensional modules as matrix representations.
//!
//! A left module assigns to each basis element `b_i` the matrix of
//! `m -> b_i m`; a right module the matrix of `m -> m b_i`. Right modules
//! over `A` are handled internally as left modules over `A^op` with the same
//! matrices.

mod hom;
mod maps;
mod projective;

use std::fmt;
use std::sync::Arc;

pub(crate) use hom::VertexPieces;
pub use hom::{find_isomorphism, hom_space, is_isomorphic};
pub use maps::ModuleMap;
pub use projective::{
    free_cover, indecomposable_injectives, indecomposable_projectives, injective_envelope, projective_cover,
    simple_modules,
};

use crate::algebra::{Algebra, AlgebraRef};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    algebra: AlgebraRef,
    side: Side,
    dim: usize,
    action: Vec<Matrix>,
}

/// A module over a shared algebra. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct ModuleRep(Arc<Inner>);

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (same_algebra(&self.0.algebra, &other.0.algebra)
                && self.0.side == other.0.side
                && self.0.dim == other.0.dim
                && self.0.action == other.0.action)
    }
}

impl Eq for ModuleRep {}

pub(crate) fn same_algebra(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || a.same_structure(b)
}

impl ModuleRep {
    /// A validated module from one action matrix per basis element.
    pub fn new(algebra: AlgebraRef, side: Side, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map(Matrix::rows).unwrap_or(0);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field()) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim} over {}", algebra.field())));
        }
        let m = Self::from_parts(algebra, side, dim, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: AlgebraRef, side: Side, dim: usize, action: Vec<Matrix>) -> Self {
        ModuleRep(Arc::new(Inner { algebra, side, dim, action }))
    }

    /// Checks the unit and every product of basis elements.
    pub fn validate(&self) -> Result<()> {
        let a = self.algebra();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.act(&a.product_coords(i, j));
                let rhs = match self.side() {
                    Side::Left => self.action(i).mul(self.action(j)),
                    Side::Right => self.action(j).mul(self.action(i)),
                };
                if lhs != rhs {
                    return Err(Error::RepresentationViolation(format!(
                        "{} * {} does not act as the product of the two actions",
                        a.labels()[i],
                        a.labels()[j]
                    )));
                }
            }
        }
        if !self.act(a.unit()).is_identity() {
            return Err(Error::RepresentationViolation("the unit does not act as the identity".into()));
        }
        Ok(())
    }

    /// A module over a path algebra from vector spaces at the vertices and
    /// one matrix per arrow: `dim V_target x dim V_source` for left modules,
    /// the transposed shape for right modules.
    pub fn from_quiver_rep(algebra: AlgebraRef, side: Side, vertex_dims: &[usize], arrows: &[Matrix]) -> Result<Self> {
        let (Some(p), Some(paths), Some(place)) = (algebra.presentation(), algebra.basis_paths(), algebra.placement())
        else {
            return Err(Error::Schema("vertex representations need a quiver presentation".into()));
        };
        let f = algebra.field();
        if vertex_dims.len() != p.vertices.len() || arrows.len() != p.arrows.len() {
            return Err(Error::DimensionMismatch("one dimension per vertex and one matrix per arrow".into()));
        }
        let offsets: Vec<usize> = vertex_dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let dim: usize = vertex_dims.iter().sum();
        for (a, m) in p.arrows.iter().zip(arrows) {
            // a right module sends the arrow's target space to its source space
            let (rows, cols) = match side {
                Side::Left => (vertex_dims[a.target], vertex_dims[a.source]),
                Side::Right => (vertex_dims[a.source], vertex_dims[a.target]),
            };
            if m.rows() != rows || m.cols() != cols {
                return Err(Error::DimensionMismatch(format!("arrow {} needs a {rows}x{cols} matrix", a.name)));
            }
        }
        let action = paths
            .iter()
            .zip(place)
            .map(|(path, pl)| {
                let mut out = Matrix::zeros(f, dim, dim);
                if path.is_empty() {
                    let v = pl.source;
                    for k in 0..vertex_dims[v] {
                        out[(offsets[v] + k, offsets[v] + k)] = f.one();
                    }
                    return out;
                }
                // the path acts as the product of its arrows in composition order
                let (first_vertex, last_vertex) = match side {
                    Side::Left => (pl.source, pl.target),
                    Side::Right => (pl.target, pl.source),
                };
                let mut acc = Matrix::identity(f, vertex_dims[first_vertex]);
                let order: Vec<usize> = match side {
                    Side::Left => path.iter().rev().copied().collect(),
                    Side::Right => path.clone(),
                };
                for a in order {
                    acc = arrows[a].mul(&acc);
                }
                out.set_block(offsets[last_vertex], offsets[first_vertex], &acc);
                out
            })
            .collect();
        Self::new(algebra, side, action)
    }

    pub fn zero(algebra: AlgebraRef, side: Side) -> Self {
        let f = algebra.field();
        let action = vec![Matrix::zeros(f, 0, 0); algebra.dim()];
        Self::from_parts(algebra, side, 0, action)
    }

    /// The algebra acting on itself from the given side.
    pub fn regular(algebra: AlgebraRef, side: Side) -> Self {
        let d = algebra.dim();
        let action = (0..d)
            .map(|i| match side {
                Side::Left => algebra.left_mult(i).clone(),
                Side::Right => algebra.right_mult(i).clone(),
            })
            .collect();
        Self::from_parts(algebra, side, d, action)
    }

    /// `D A` on the given side: the left structure is `b -> R_b^T`, the right `b -> L_b^T`.
    pub fn dual_regular(algebra: AlgebraRef, side: Side) -> Self {
        Self::regular(algebra, side.flip()).dual()
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.0.algebra
    }

    pub fn field(&self) -> Field {
        self.0.algebra.field()
    }

    pub fn side(&self) -> Side {
        self.0.side
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.0.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.action
    }

    /// Action of an algebra element given by coordinates.
    pub fn act(&self, x: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (i, m) in self.0.action.iter().enumerate() {
            out.add_scaled(&x[(i, 0)], m);
        }
        out
    }

    /// `D M = Hom_k(M, k)` on the opposite side, with transposed actions.
    pub fn dual(&self) -> Self {
        let action = self.0.action.iter().map(Matrix::transpose).collect();
        Self::from_parts(self.algebra().clone(), self.side().flip(), self.dim(), action)
    }

    /// A right module over `A` read as a left module over `A^op` (and back).
    pub fn flip_to_opposite(&self) -> Self {
        Self::from_parts(self.algebra().opposite_ref(), self.side().flip(), self.dim(), self.0.action.clone())
    }

    /// Inverse of `flip_to_opposite` given the original algebra.
    pub fn flip_from_opposite(&self, original: &AlgebraRef) -> Self {
        Self::from_parts(original.clone(), self.side().flip(), self.dim(), self.0.action.clone())
    }

    /// The module restricted to the submodule spanned by `sub` (which must be invariant).
    pub fn submodule(&self, sub: &Subspace) -> Self {
        let action = self.0.action.iter().map(|m| sub.coords(&m.mul(sub.basis()))).collect();
        Self::from_parts(self.algebra().clone(), self.side(), sub.dim(), action)
    }

    /// Smallest submodule containing the columns of `v`.
    pub fn generated_by(&self, v: &Matrix) -> Subspace {
        let f = self.field();
        let blocks: Vec<Matrix> = self.0.action.iter().map(|m| m.mul(v)).collect();
        // closed under the action since b' b is again a combination of basis elements
        Subspace::span(&Matrix::hstack(f, self.dim(), &blocks))
    }

    /// `J M` for the Jacobson radical `J`.
    pub fn radical(&self) -> Result<Subspace> {
        let j = self.algebra().radical()?;
        let f = self.field();
        let blocks: Vec<Matrix> = (0..j.dim()).map(|c| self.act(&j.basis().column(c))).collect();
        if blocks.is_empty() {
            return Ok(Subspace::zero(f, self.dim()));
        }
        Ok(Subspace::span(&Matrix::hstack(f, self.dim(), &blocks)))
    }

    /// Direct sum with the inclusions and projections of the summands.
    pub fn direct_sum(algebra: &AlgebraRef, side: Side, parts: &[ModuleRep]) -> (ModuleRep, Vec<ModuleMap>, Vec<ModuleMap>) {
        let f = algebra.field();
        let dim: usize = parts.iter().map(ModuleRep::dim).sum();
        let action = (0..algebra.dim())
            .map(|i| Matrix::block_diag(f, &parts.iter().map(|p| p.action(i).clone()).collect::<Vec<_>>()))
            .collect();
        let sum = Self::from_parts(algebra.clone(), side, dim, action);
        let mut offset = 0;
        let mut incl = Vec::new();
        let mut proj = Vec::new();
        for p in parts {
            let mut i = Matrix::zeros(f, dim, p.dim());
            i.set_block(offset, 0, &Matrix::identity(f, p.dim()));
            proj.push(ModuleMap::from_parts(sum.clone(), p.clone(), i.transpose()));
            incl.push(ModuleMap::from_parts(p.clone(), sum.clone(), i));
            offset += p.dim();
        }
        (sum, incl, proj)
    }

    /// Dimension of `e_v M` for each vertex idempotent.
    pub fn dimension_vector(&self) -> Option<Vec<usize>> {
        let ids = self.algebra().idempotents()?;
        Some(ids.iter().map(|e| self.act(e).rank()).collect())
    }

    pub(crate) fn check_same(&self, other: &ModuleRep) -> Result<()> {
        if !same_algebra(self.algebra(), other.algebra()) {
            return Err(Error::Incompatible("modules over different algebras".into()));
        }
        if self.side() != other.side() {
            return Err(Error::Incompatible(format!("{} module and {} module", self.side(), other.side())));
        }
        Ok(())
    }
}

impl Algebra {
    pub fn regular_module(self: &AlgebraRef, side: Side) -> ModuleRep {
        ModuleRep::regular(self.clone(), side)
    }
}

#[cfg(test)]
mod tests;
