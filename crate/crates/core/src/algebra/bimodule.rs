use crate::algebra::{Algebra, AlgebraRef};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// An `A`-`B` bimodule given by one matrix per basis element on each side.
///
/// `right[j]` is the matrix of `m -> m b_j`, so `right(b_i b_j) = right(b_j) right(b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left_algebra: AlgebraRef,
    right_algebra: AlgebraRef,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(left_algebra: AlgebraRef, right_algebra: AlgebraRef, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        if left_algebra.field() != right_algebra.field() {
            return Err(Error::FieldMismatch(left_algebra.field().to_string(), right_algebra.field().to_string()));
        }
        let dim = left.first().or(right.first()).map(Matrix::rows).unwrap_or(0);
        if left.len() != left_algebra.dim() || right.len() != right_algebra.dim() {
            return Err(Error::DimensionMismatch("one action matrix per basis element is required".into()));
        }
        if left.iter().chain(&right).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim}")));
        }
        let b = Bimodule { left_algebra, right_algebra, dim, left, right };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let la = &self.left_algebra;
        for i in 0..la.dim() {
            for j in 0..la.dim() {
                if self.left_of(&la.product_coords(i, j)) != self.left[i].mul(&self.left[j]) {
                    return Err(Error::RepresentationViolation(format!("left action fails on ({i}, {j})")));
                }
            }
        }
        if !self.left_of(la.unit()).is_identity() {
            return Err(Error::RepresentationViolation("left unit does not act as identity".into()));
        }
        let ra = &self.right_algebra;
        for i in 0..ra.dim() {
            for j in 0..ra.dim() {
                if self.right_of(&ra.product_coords(i, j)) != self.right[j].mul(&self.right[i]) {
                    return Err(Error::RepresentationViolation(format!("right action fails on ({i}, {j})")));
                }
            }
        }
        if !self.right_of(ra.unit()).is_identity() {
            return Err(Error::RepresentationViolation("right unit does not act as identity".into()));
        }
        for l in &self.left {
            for r in &self.right {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::RepresentationViolation("left and right actions do not commute".into()));
                }
            }
        }
        Ok(())
    }

    /// `A` as an `A`-`A` bimodule.
    pub fn regular(a: &AlgebraRef) -> Self {
        let left = (0..a.dim()).map(|i| a.left_mult(i).clone()).collect();
        let right = (0..a.dim()).map(|i| a.right_mult(i).clone()).collect();
        Bimodule { left_algebra: a.clone(), right_algebra: a.clone(), dim: a.dim(), left, right }
    }

    /// `D A = Hom_k(A, k)` with `(x f y)(z) = f(y z x)`, on the dual basis.
    pub fn dual_regular(a: &AlgebraRef) -> Self {
        Self::regular(a).dual()
    }

    /// `D M` as a `B`-`A` bimodule: `(b f a)(m) = f(a m b)`.
    pub fn dual(&self) -> Self {
        Bimodule {
            left_algebra: self.right_algebra.clone(),
            right_algebra: self.left_algebra.clone(),
            dim: self.dim,
            left: self.right.iter().map(Matrix::transpose).collect(),
            right: self.left.iter().map(Matrix::transpose).collect(),
        }
    }

    pub fn left_algebra(&self) -> &AlgebraRef {
        &self.left_algebra
    }

    pub fn right_algebra(&self) -> &AlgebraRef {
        &self.right_algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_action(&self) -> &[Matrix] {
        &self.right
    }

    pub fn left_of(&self, x: &Matrix) -> Matrix {
        combine(self.left_algebra.field(), self.dim, &self.left, x)
    }

    pub fn right_of(&self, x: &Matrix) -> Matrix {
        combine(self.right_algebra.field(), self.dim, &self.right, x)
    }
}

fn combine(field: Field, dim: usize, mats: &[Matrix], x: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(field, dim, dim);
    for (i, m) in mats.iter().enumerate() {
        out.add_scaled(&x[(i, 0)], m);
    }
    out
}

impl Algebra {
    pub fn regular_bimodule(self: &AlgebraRef) -> Bimodule {
        Bimodule::regular(self)
    }

    pub fn dual_bimodule(self: &AlgebraRef) -> Bimodule {
        Bimodule::dual_regular(self)
    }
}
