use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

impl Algebra {
    /// The Jacobson radical `J`.
    ///
    /// Path algebras of admissible presentations use the arrow ideal. Other
    /// algebras use the kernel of the trace form `(x, y) -> tr(L_{xy})`,
    /// which needs characteristic 0 or larger than the dimension; the result
    /// is checked to be a nilpotent two-sided ideal.
    pub fn radical(&self) -> Result<Subspace> {
        self.radical.get_or_init(|| self.compute_radical()).clone()
    }

    fn compute_radical(&self) -> Result<Subspace> {
        let d = self.dim();
        let f = self.field();
        if let (Some(_), Some(place)) = (self.presentation(), self.placement()) {
            let idx: Vec<usize> = (0..d).filter(|&i| place[i].length > 0).collect();
            let span = Matrix::from_fn(f, d, idx.len(), |r, c| if r == idx[c] { f.one() } else { f.zero() });
            return Ok(Subspace::span(&span));
        }
        let p = f.characteristic();
        if p != 0 && p <= d as u64 {
            return Err(Error::UnsupportedCharacteristic(format!(
                "radical of a {d}-dimensional algebra without a quiver presentation needs characteristic 0 or > {d}, got {p}"
            )));
        }
        let traces = Matrix::from_fn(f, 1, d, |_, k| self.left_mult(k).trace());
        let row = traces.mul(self.mult());
        let gram = Matrix::from_fn(f, d, d, |i, j| row[(0, i * d + j)].clone());
        let j = Subspace::kernel_of(&gram);
        for i in 0..d {
            let moved = Matrix::hstack(f, d, &[self.left_mult(i).mul(j.basis()), self.right_mult(i).mul(j.basis())]);
            if !j.contains(&moved) {
                return Err(Error::UnsupportedCharacteristic("trace-form kernel is not an ideal".into()));
            }
        }
        if self.power_of(&j, d + 1).dim() != 0 {
            return Err(Error::UnsupportedCharacteristic("trace-form kernel is not nilpotent".into()));
        }
        Ok(j)
    }

    /// `J^k`, with `J^0 = A`.
    pub fn radical_power(&self, k: usize) -> Result<Subspace> {
        Ok(self.power_of(&self.radical()?, k))
    }

    /// Span of all products `x y` with `x` in `u`, `y` in `v`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let f = self.field();
        let blocks: Vec<Matrix> = (0..u.dim()).map(|c| self.left_of(&u.basis().column(c)).mul(v.basis())).collect();
        Subspace::span(&Matrix::hstack(f, self.dim(), &blocks))
    }

    fn power_of(&self, j: &Subspace, k: usize) -> Subspace {
        let mut acc = Subspace::whole(self.field(), self.dim());
        for _ in 0..k {
            if acc.dim() == 0 {
                break;
            }
            acc = self.product_space(&acc, j);
        }
        acc
    }

    /// Smallest `n` with `J^n = 0`.
    pub fn loewy_length(&self) -> Result<usize> {
        let j = self.radical()?;
        let mut acc = Subspace::whole(self.field(), self.dim());
        let mut n = 0;
        while acc.dim() > 0 {
            acc = self.product_space(&acc, &j);
            n += 1;
        }
        Ok(n)
    }

    /// Whether `A/J` is a product of copies of `k`, one per vertex
    /// idempotent: `e_a J e_b = e_a A e_b` for `a != b` and `e_a A e_a / e_a J e_a = k`.
    pub fn is_split_basic(&self) -> Result<bool> {
        let n = self.vertex_count().ok_or(Error::MissingIdempotents)?;
        let j = self.radical()?;
        let ids = self.idempotents().expect("vertex count implies idempotents");
        for a in 0..n {
            for b in 0..n {
                let whole = self.corner(a, b)?.dim();
                let sandwich = self.left_of(&ids[a]).mul(&self.right_of(&ids[b])).mul(j.basis());
                let rad = Subspace::span(&sandwich).dim();
                let expected = usize::from(a == b);
                if whole - rad != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
