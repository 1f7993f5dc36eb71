use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::Error;
use crate::linalg::{Field, Scalar};

/// Dense row-major matrix over an exact [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds from nested rows; every entry must belong to `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!("ragged rows: expected {c} entries, found {}", row.len())));
            }
            for s in row {
                if !field.contains(&s) {
                    return Err(Error::InvalidField(format!("entry {s} is not in {field}")));
                }
                data.push(s);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    /// Integer shorthand used heavily in tests and builders.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn column_vector(field: Field, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Matrix { field, rows: n, cols: 1, data: entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.field, self.rows, 1, |i, _| self[(i, j)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_assign_product(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * rhs`.
    pub fn add_scaled(&mut self, s: &Scalar, rhs: &Matrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                a.add_assign_product(s, b);
            }
        }
    }

    /// Kronecker product; block `(i, j)` is `self[i,j] * rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(self ⊗ I_n) * rhs` without forming the Kronecker product.
    pub fn kron_id_mul(&self, n: usize, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols * n, rhs.rows, "kron_id_mul shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows * n, rhs.cols);
        for a in 0..self.rows {
            for b in 0..self.cols {
                let x = &self[(a, b)];
                if x.is_zero() {
                    continue;
                }
                for k in 0..n {
                    for c in 0..rhs.cols {
                        let y = &rhs[(b * n + k, c)];
                        if !y.is_zero() {
                            out[(a * n + k, c)].add_assign_product(x, y);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(I_n ⊗ self) * rhs` without forming the Kronecker product.
    pub fn id_kron_mul(&self, n: usize, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols * n, rhs.rows, "id_kron_mul shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows * n, rhs.cols);
        for a in 0..n {
            for k in 0..self.rows {
                for j in 0..self.cols {
                    let x = &self[(k, j)];
                    if x.is_zero() {
                        continue;
                    }
                    for c in 0..rhs.cols {
                        let y = &rhs[(a * self.cols + j, c)];
                        if !y.is_zero() {
                            out[(a * self.rows + k, c)].add_assign_product(x, y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(field: Field, rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, offset, b);
            offset += b.cols;
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.set_block(offset, 0, b);
            offset += b.rows;
        }
        out
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(row + i, col + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, row: usize, col: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |i, j| self[(row + i, col + j)].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// Pivots are found column by column, left to right, taking the first
    /// nonzero entry from the top among the unreduced rows.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false).len()
    }

    fn eliminate(&mut self, reduce_above: bool) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().expect("pivot is nonzero");
            for j in c..cols {
                if !self.data[r * cols + j].is_zero() {
                    self.data[r * cols + j] = self.data[r * cols + j].mul(&inv);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..cols)
                .filter(|&j| !self.data[r * cols + j].is_zero())
                .map(|j| (j, self.data[r * cols + j].clone()))
                .collect();
            let start = if reduce_above { 0 } else { r + 1 };
            for i in start..rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                let neg = factor.neg();
                for (j, v) in &pivot_row {
                    self.data[i * cols + j].add_assign_product(&neg, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the null space, as the columns of the returned matrix.
    ///
    /// The basis is the canonical one for the subspace: its transpose is in
    /// reduced row echelon form, so equal null spaces give equal output.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, n, free.len());
        for (col, &f) in free.iter().enumerate() {
            k[(f, col)] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                k[(p, col)] = r[(row, f)].neg();
            }
        }
        canonical_columns(&k)
    }

    /// Particular solution of `self * X = rhs` with free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>, Error> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = Matrix::hstack(self.field, self.rows, &[self.clone(), rhs.clone()]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    /// Two-sided inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows)).ok()??;
        (self.rank() == self.rows).then_some(x)
    }
}

/// Canonical basis of the column space of `m`: the transpose of the nonzero
/// rows of `rref(mᵀ)`.
pub fn canonical_columns(m: &Matrix) -> Matrix {
    let (r, pivots) = m.transpose().rref();
    let idx: Vec<usize> = (0..pivots.len()).collect();
    r.select_rows(&idx).transpose()
}

/// `dim Ker(d_out) - rank(d_in)` for a composable pair with `d_out * d_in = 0`.
pub fn homology_dim(d_in: &Matrix, d_out: &Matrix) -> Result<usize, Error> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "homology: incoming map lands in dimension {} but outgoing map starts at {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NonzeroComposite);
    }
    Ok(d_out.cols() - d_out.rank() - d_in.rank())
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    /// Rank by brute force over all square minors.
    fn rank_by_minors(m: &Matrix) -> usize {
        fn det(m: &Matrix) -> Scalar {
            let n = m.rows();
            if n == 0 {
                return m.field().one();
            }
            let mut acc = m.field().zero();
            for j in 0..n {
                let rows: Vec<usize> = (1..n).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = det(&m.select_rows(&rows).select_cols(&cols));
                let term = m[(0, j)].mul(&minor);
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        (1..=m.rows().min(m.cols()))
            .rev()
            .find(|&k| {
                subsets(m.rows(), k).iter().any(|rs| {
                    subsets(m.cols(), k).iter().any(|cs| !det(&m.select_rows(rs).select_cols(cs)).is_zero())
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 4).rank(), 4);
        assert_eq!(Matrix::zeros(Q, 3, 5).rank(), 0);
        let m = Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]);
        assert_eq!(rank_by_minors(&m), 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::identity(Q, 3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 0));
        assert_eq!(Matrix::zeros(Q, 2, 3).kernel_basis(), Matrix::identity(Q, 3));
        let m = Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_i64(Q, &[&[1], &[-1], &[0]]));
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(Q, &[&[3, 1], &[-2, 5]]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap().unwrap(), b);
        let z = Matrix::zeros(Q, 2, 1);
        assert_eq!(Matrix::zeros(Q, 2, 2).solve(&z).unwrap().unwrap(), Matrix::zeros(Q, 2, 1));
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let rhs = Matrix::from_i64(Q, &[&[1], &[1]]);
        let x = a.solve(&rhs).unwrap().unwrap();
        assert_eq!(a.mul(&x), rhs);
        assert_eq!(x, Matrix::from_i64(Q, &[&[-1], &[1]]));
        assert!(Matrix::zeros(Q, 2, 2).solve(&rhs).unwrap().is_none());
        assert!(a.solve(&Matrix::zeros(Q, 3, 1)).is_err());
    }

    #[test]
    fn kron_examples() {
        assert_eq!(Matrix::identity(Q, 2).kron(&Matrix::identity(Q, 3)), Matrix::identity(Q, 6));
        let m = Matrix::from_i64(Q, &[&[1, -2], &[0, 3]]);
        assert_eq!(Matrix::from_i64(Q, &[&[2]]).kron(&m), m.scale(&Q.from_i64(2)));
    }

    #[test]
    fn kron_products_match_explicit_kron() {
        let a = Matrix::from_i64(Q, &[&[1, -2, 0], &[0, 3, 1]]);
        let rhs = Matrix::from_fn(Q, 6, 2, |i, j| Q.from_i64((i * 3 + j) as i64 - 4));
        assert_eq!(a.kron_id_mul(2, &rhs), a.kron(&Matrix::identity(Q, 2)).mul(&rhs));
        let rhs = Matrix::from_fn(Q, 9, 2, |i, j| Q.from_i64((i * 5 + j) as i64 % 7 - 3));
        assert_eq!(a.id_kron_mul(3, &rhs), Matrix::identity(Q, 3).kron(&a).mul(&rhs));
    }

    #[test]
    fn homology_examples() {
        let z3 = Matrix::zeros(Q, 3, 3);
        assert_eq!(homology_dim(&z3, &z3).unwrap(), 3);
        assert_eq!(homology_dim(&Matrix::identity(Q, 3), &z3).unwrap(), 0);
        let d_in = Matrix::from_i64(Q, &[&[1], &[0]]);
        let d_out = Matrix::from_i64(Q, &[&[0, 1]]);
        // ker(d_out) = span{(1,0)} = im(d_in)
        assert_eq!(d_out.kernel_basis(), Matrix::from_i64(Q, &[&[1], &[0]]));
        assert_eq!(homology_dim(&d_in, &d_out).unwrap(), 0);
        let bad = Matrix::from_i64(Q, &[&[1, 0]]);
        assert!(matches!(homology_dim(&d_in, &bad), Err(Error::NonzeroComposite)));
    }

    #[test]
    fn prime_field_rank_differs_from_rationals() {
        let f2 = Field::new_prime(2).unwrap();
        let m = Matrix::from_i64(f2, &[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 1], &[1, -1]]).rank(), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
