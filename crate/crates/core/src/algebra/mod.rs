//! Finite-dimensional algebras given by structure constants.
//!
//! Basis elements multiply as `b_i * b_j = sum_k c[i][j][k] b_k`. Path
//! algebras use function-composition order: `p * q` first traverses `q`,
//! then `p`, so left modules are covariant representations of the quiver.

pub mod builtins;
mod bimodule;
mod category;
mod quiver;
mod radical;

use std::sync::{Arc, OnceLock};

pub use bimodule::Bimodule;
pub use category::{CategorySpec, Composition, Morphism};
pub use quiver::{Arrow, QuiverPresentation, RelationTerm};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

pub type AlgebraRef = Arc<Algebra>;

/// Where a basis element lives relative to the vertex idempotents: it is
/// `e_target * b * e_source`, and `length` is its path length (or 0 for
/// identity morphisms of a category, 1 for every other morphism).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPlacement {
    pub source: usize,
    pub target: usize,
    pub length: usize,
}

#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    /// `dim x dim^2`; column `i * dim + j` holds the coordinates of `b_i b_j`.
    mult: Matrix,
    unit: Matrix,
    idempotents: Option<Vec<Matrix>>,
    presentation: Option<QuiverPresentation>,
    placement: Option<Vec<BasisPlacement>>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    /// Arrow sequence (target-to-source) of each basis path, for path algebras.
    basis_paths: Option<Vec<Vec<usize>>>,
    radical: OnceLock<Result<Subspace>>,
    opposite: OnceLock<AlgebraRef>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other)
            && self.labels == other.labels
            && self.idempotents == other.idempotents
            && self.presentation == other.presentation
            && self.placement == other.placement
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Validated algebra from a multiplication table. `table[i][j]` holds
    /// the coordinates of `b_i b_j`.
    pub fn from_structure_constants(
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Algebra> {
        let d = labels.len();
        if table.len() != d || table.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(Error::DimensionMismatch(format!("multiplication table must be {d}x{d}x{d}")));
        }
        if unit.len() != d {
            return Err(Error::DimensionMismatch(format!("unit must have {d} coordinates")));
        }
        let mut mult = Matrix::zeros(field, d, d * d);
        for (i, row) in table.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                for (k, s) in v.into_iter().enumerate() {
                    if !field.contains(&s) {
                        return Err(Error::InvalidField(format!("structure constant {s} is not in {field}")));
                    }
                    mult[(k, i * d + j)] = s;
                }
            }
        }
        let unit = Matrix::from_rows(field, unit.into_iter().map(|s| vec![s]).collect())?;
        Self::from_parts(field, labels, mult, unit, None, None, None)
    }

    pub(crate) fn from_parts(
        field: Field,
        labels: Vec<String>,
        mult: Matrix,
        unit: Matrix,
        idempotents: Option<Vec<Matrix>>,
        presentation: Option<QuiverPresentation>,
        placement: Option<Vec<BasisPlacement>>,
    ) -> Result<Algebra> {
        let d = labels.len();
        let unit = if d == 0 { Matrix::zeros(field, 0, 1) } else { unit };
        let left = (0..d).map(|i| mult.block(0, i * d, d, d)).collect();
        let right = (0..d)
            .map(|j| Matrix::from_fn(field, d, d, |k, i| mult[(k, i * d + j)].clone()))
            .collect();
        let algebra = Algebra {
            field,
            labels,
            mult,
            unit,
            idempotents,
            presentation,
            placement,
            left,
            right,
            basis_paths: None,
            radical: OnceLock::new(),
            opposite: OnceLock::new(),
        };
        algebra.validate()?;
        Ok(algebra)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        // L_{b_i b_j} = L_i L_j is associativity applied to every b_k.
        for i in 0..d {
            for j in 0..d {
                let prod = self.product_coords(i, j);
                let lhs = self.left_of(&prod);
                let rhs = self.left[i].mul(&self.left[j]);
                if lhs != rhs {
                    let k = (0..d).find(|&k| lhs.column(k) != rhs.column(k)).unwrap_or(0);
                    return Err(Error::AssociativityViolation(i, j, k));
                }
            }
        }
        let lu = self.left_of(&self.unit);
        let ru = self.right_of(&self.unit);
        for i in 0..d {
            let e = Matrix::from_fn(self.field, d, 1, |k, _| if k == i { self.field.one() } else { self.field.zero() });
            if lu.mul(&e) != e || ru.mul(&e) != e {
                return Err(Error::UnitViolation(i));
            }
        }
        if let Some(ids) = &self.idempotents {
            let mut sum = Matrix::zeros(self.field, d, 1);
            for (a, ea) in ids.iter().enumerate() {
                sum = sum.add(ea);
                for (b, eb) in ids.iter().enumerate() {
                    let prod = self.multiply(ea, eb);
                    let expected = if a == b { ea.clone() } else { Matrix::zeros(self.field, d, 1) };
                    if prod != expected {
                        return Err(Error::IdempotentViolation(format!("e{a} * e{b} is wrong")));
                    }
                }
            }
            if sum != self.unit {
                return Err(Error::IdempotentViolation("idempotents do not sum to the unit".into()));
            }
        }
        Ok(())
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Self::semisimple(field, 1)
    }

    /// `k x ... x k` with `n` factors and the coordinate idempotents.
    pub fn semisimple(field: Field, n: usize) -> Algebra {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        let mut mult = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            mult[(i, i * n + i)] = field.one();
        }
        let unit = Matrix::from_fn(field, n, 1, |_, _| field.one());
        let ids = (0..n).map(|i| basis_vector(field, n, i)).collect();
        let placement = (0..n).map(|i| BasisPlacement { source: i, target: i, length: 0 }).collect();
        Self::from_parts(field, labels, mult, unit, Some(ids), None, Some(placement))
            .expect("semisimple algebra is valid")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The multiplication map `A (x) A -> A` as a `dim x dim^2` matrix.
    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    /// Coordinates of `1_A` as a column.
    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn idempotents(&self) -> Option<&[Matrix]> {
        self.idempotents.as_deref()
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.presentation.as_ref()
    }

    pub fn placement(&self) -> Option<&[BasisPlacement]> {
        self.placement.as_deref()
    }

    /// Arrow indices of each basis path, target-to-source (path algebras only).
    pub fn basis_paths(&self) -> Option<&[Vec<usize>]> {
        self.basis_paths.as_deref()
    }

    /// Left multiplication by `b_i`.
    pub fn left_mult(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Right multiplication by `b_i`.
    pub fn right_mult(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    /// Coordinates of `b_i b_j`.
    pub fn product_coords(&self, i: usize, j: usize) -> Matrix {
        self.mult.column(i * self.dim() + j)
    }

    /// Product of two elements given by coordinate columns.
    pub fn multiply(&self, x: &Matrix, y: &Matrix) -> Matrix {
        self.left_of(x).mul(y)
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_of(&self, x: &Matrix) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for i in 0..d {
            out.add_scaled(&x[(i, 0)], &self.left[i]);
        }
        out
    }

    pub fn right_of(&self, x: &Matrix) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for i in 0..d {
            out.add_scaled(&x[(i, 0)], &self.right[i]);
        }
        out
    }

    /// Basis indices generating the algebra: vertices and arrows for path
    /// algebras, the whole basis otherwise.
    pub fn generators(&self) -> Vec<usize> {
        match (&self.presentation, &self.placement) {
            (Some(_), Some(place)) => (0..self.dim()).filter(|&i| place[i].length <= 1).collect(),
            _ => (0..self.dim()).collect(),
        }
    }

    /// Equality of field, multiplication table and unit (labels ignored).
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.mult == other.mult && self.unit == other.unit
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mult.column(i * d + j) == self.mult.column(j * d + i)))
    }

    /// Same basis with `b_i *op b_j = b_j b_i`.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        let mult = Matrix::from_fn(self.field, d, d * d, |k, c| {
            let (i, j) = (c / d, c % d);
            self.mult[(k, j * d + i)].clone()
        });
        let placement = self.placement.as_ref().map(|p| {
            p.iter()
                .map(|b| BasisPlacement { source: b.target, target: b.source, length: b.length })
                .collect()
        });
        let mut op = Self::from_parts(
            self.field,
            self.labels.clone(),
            mult,
            self.unit.clone(),
            self.idempotents.clone(),
            self.presentation.as_ref().map(QuiverPresentation::opposite),
            placement,
        )
        .expect("opposite of a valid algebra is valid");
        op.basis_paths = self
            .basis_paths
            .as_ref()
            .map(|ps| ps.iter().map(|p| p.iter().rev().copied().collect()).collect());
        op
    }

    /// The opposite algebra, computed once per shared algebra.
    pub fn opposite_ref(self: &AlgebraRef) -> AlgebraRef {
        self.opposite.get_or_init(|| Arc::new(self.opposite())).clone()
    }

    /// `A_1 (x)_k A_2` on the basis of pairs `(i, j)`, index `i * dim2 + j`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
        }
        let field = a.field;
        let (da, db) = (a.dim(), b.dim());
        let d = da * db;
        let mut mult = Matrix::zeros(field, d, d * d);
        for i in 0..d {
            let l = a.left[i / db].kron(&b.left[i % db]);
            mult.set_block(0, i * d, &l);
        }
        let labels = a
            .labels
            .iter()
            .flat_map(|x| b.labels.iter().map(move |y| format!("{x}(x){y}")))
            .collect();
        let unit = a.unit.kron(&b.unit);
        let idempotents = match (&a.idempotents, &b.idempotents) {
            (Some(ea), Some(eb)) => Some(ea.iter().flat_map(|x| eb.iter().map(move |y| x.kron(y))).collect()),
            _ => None,
        };
        Self::from_parts(field, labels, mult, unit, idempotents, None, None)
    }

    /// Number of vertex idempotents, if any.
    pub fn vertex_count(&self) -> Option<usize> {
        self.idempotents.as_ref().map(Vec::len)
    }

    /// The subspace `e_a A e_b`.
    pub(crate) fn corner(&self, a: usize, b: usize) -> Result<Subspace> {
        let ids = self.idempotents.as_ref().ok_or(Error::MissingIdempotents)?;
        let m = self.left_of(&ids[a]).mul(&self.right_of(&ids[b]));
        Ok(Subspace::span(&m))
    }
}

pub(crate) fn basis_vector(field: Field, n: usize, i: usize) -> Matrix {
    Matrix::from_fn(field, n, 1, |k, _| if k == i { field.one() } else { field.zero() })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn s(v: i64) -> Scalar {
        Q.from_i64(v)
    }

    /// 2x2 upper-triangular matrices on the basis E11, E12, E22.
    pub(crate) fn upper_triangular() -> Result<Algebra> {
        // products of matrix units E_ab E_cd = [b == c] E_ad
        let units = [(0, 0), (0, 1), (1, 1)];
        let index = |a: usize, b: usize| units.iter().position(|&u| u == (a, b));
        let table = units
            .iter()
            .map(|&(a, b)| {
                units
                    .iter()
                    .map(|&(c, d)| {
                        let mut v = vec![s(0); 3];
                        if b == c {
                            v[index(a, d).unwrap()] = s(1);
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Algebra::from_structure_constants(
            Q,
            vec!["E11".into(), "E12".into(), "E22".into()],
            table,
            vec![s(1), s(0), s(1)],
        )
    }

    #[test]
    fn ground_field_is_valid() {
        let k = Algebra::from_structure_constants(Q, vec!["1".into()], vec![vec![vec![s(1)]]], vec![s(1)]).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.same_structure(&Algebra::ground(Q)));
    }

    #[test]
    fn upper_triangular_is_valid() {
        let a = upper_triangular().unwrap();
        assert_eq!(a.dim(), 3);
        assert!(!a.is_commutative());
    }

    #[test]
    fn broken_associativity_is_named() {
        // k[x]/(x^2 - x - 1) with the constant c[0][0] doubled
        let mut table: Vec<Vec<Vec<Scalar>>> = vec![vec![vec![s(0); 2]; 2]; 2];
        table[0][0] = vec![s(2), s(0)];
        table[0][1] = vec![s(0), s(1)];
        table[1][0] = vec![s(0), s(1)];
        table[1][1] = vec![s(1), s(1)];
        let err = Algebra::from_structure_constants(Q, vec!["1".into(), "x".into()], table, vec![s(1), s(0)])
            .unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation(0, 0, _)), "{err}");
    }

    #[test]
    fn opposite_is_involution() {
        let a = upper_triangular().unwrap();
        let op = a.opposite();
        assert!(!op.same_structure(&a));
        assert_eq!(op.opposite(), a);
        // E12 * E22 = E12 in A, so E22 *op E12 = E12.
        assert_eq!(op.product_coords(2, 1), a.product_coords(1, 2));
    }

    #[test]
    fn tensor_with_ground_field_is_identity() {
        let a = upper_triangular().unwrap();
        let t = Algebra::tensor(&Algebra::ground(Q), &a).unwrap();
        assert!(t.same_structure(&a));
        let f2 = Field::new_prime(2).unwrap();
        assert!(matches!(Algebra::tensor(&Algebra::ground(f2), &a), Err(Error::FieldMismatch(..))));
    }
}
