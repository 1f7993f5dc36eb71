use crate::linalg::{canonical_columns, Field, Matrix};

/// A subspace of `k^n` held in canonical form.
///
/// The basis columns are the transposed nonzero rows of an RREF, so the
/// coordinates of any vector in the subspace are simply its entries at the
/// pivot rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Column space of `spanning` (an `n x s` matrix).
    pub fn span(spanning: &Matrix) -> Self {
        let basis = canonical_columns(spanning);
        let pivots = pivot_rows(&basis);
        Subspace { basis, pivots }
    }

    pub fn kernel_of(m: &Matrix) -> Self {
        let basis = m.kernel_basis();
        let pivots = pivot_rows(&basis);
        Subspace { basis, pivots }
    }

    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(field, ambient, 0), pivots: Vec::new() }
    }

    pub fn whole(field: Field, ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of the columns of `v`, assumed to lie in the subspace.
    pub fn coords(&self, v: &Matrix) -> Matrix {
        v.select_rows(&self.pivots)
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        self.basis.mul(&self.coords(v)) == *v
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.contains(other.basis())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let f = self.basis.field();
        Subspace::span(&Matrix::hstack(f, self.ambient(), &[self.basis.clone(), other.basis.clone()]))
    }

    /// The quotient `k^n / self` with the complement spanned by the
    /// standard vectors at the non-pivot rows.
    pub fn quotient(&self) -> Quotient {
        let f = self.basis.field();
        let n = self.ambient();
        let rest: Vec<usize> = (0..n).filter(|i| !self.pivots.contains(i)).collect();
        // proj(v)_i = v_i - sum_j v_{p_j} basis[i, j]
        let mut proj = Matrix::zeros(f, rest.len(), n);
        for (row, &i) in rest.iter().enumerate() {
            proj[(row, i)] = f.one();
            for (j, &p) in self.pivots.iter().enumerate() {
                if !self.basis[(i, j)].is_zero() {
                    proj[(row, p)] = self.basis[(i, j)].neg();
                }
            }
        }
        let mut section = Matrix::zeros(f, n, rest.len());
        for (col, &i) in rest.iter().enumerate() {
            section[(i, col)] = f.one();
        }
        Quotient { proj, section }
    }
}

fn pivot_rows(basis: &Matrix) -> Vec<usize> {
    (0..basis.cols())
        .map(|j| (0..basis.rows()).find(|&i| !basis[(i, j)].is_zero()).expect("basis column is nonzero"))
        .collect()
}

/// A quotient map `k^n -> k^q` with a chosen linear section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `q x n`, kills the subspace.
    pub proj: Matrix,
    /// `n x q`, with `proj * section = 1`.
    pub section: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn ambient(&self) -> usize {
        self.proj.cols()
    }

    /// Map `lhs -> rhs` induced by `f` on quotients: `rhs.proj * f * lhs.section`.
    pub fn induced(lhs: &Quotient, f: &Matrix, rhs: &Quotient) -> Matrix {
        rhs.proj.mul(f).mul(&lhs.section)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn quotient_kills_subspace() {
        let s = Subspace::span(&Matrix::from_i64(Q, &[&[1, 2], &[1, 2], &[0, 1]]));
        assert_eq!(s.dim(), 2);
        let q = s.quotient();
        assert_eq!(q.dim(), 1);
        assert!(q.proj.mul(s.basis()).is_zero());
        assert!(q.proj.mul(&q.section).is_identity());
    }

    #[test]
    fn canonical_span_is_basis_independent() {
        let a = Subspace::span(&Matrix::from_i64(Q, &[&[1, 0], &[1, 1], &[0, 1]]));
        let b = Subspace::span(&Matrix::from_i64(Q, &[&[1, 1], &[2, 1], &[1, 0]]));
        assert_eq!(a, b);
        let v = Matrix::from_i64(Q, &[&[3], &[5], &[2]]);
        assert!(a.contains(&v));
        assert!(!a.contains(&Matrix::from_i64(Q, &[&[1], &[0], &[0]])));
    }
}
