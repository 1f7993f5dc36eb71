//! The monad `T = A (x)_k -` and comonad `S = D A (x)_k -` on vector spaces,
//! and the conjugacy of their structure maps under `S ⊣ T` and `T ⊣ S`.
//!
//! Spaces are `k^n`; `T V` and `S V` are indexed `i * n + v`.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::functors::adjunction::CheckOutcome;
use crate::linalg::{Field, Matrix};

/// Structure maps of the monad and the comonad, kept separately so that one
/// side can be perturbed on its own.
#[derive(Clone, Debug)]
pub struct VectData {
    pub field: Field,
    pub dim: usize,
    /// `d x d^2`
    pub mult: Matrix,
    /// `d x 1`
    pub unit: Matrix,
    /// `d^2 x d`, `f -> (x (x) y -> f(y x))`
    pub comult: Matrix,
    /// `1 x d`, `f -> f(1)`
    pub counit: Matrix,
}

impl VectData {
    pub fn from_algebra(a: &Algebra) -> VectData {
        let d = a.dim();
        let comult = Matrix::from_fn(a.field(), d * d, d, |r, k| a.mult()[(k, (r % d) * d + r / d)].clone());
        VectData {
            field: a.field(),
            dim: d,
            mult: a.mult().clone(),
            unit: a.unit().clone(),
            comult,
            counit: a.unit().transpose(),
        }
    }

    /// Negative control: adds one to the first coordinate of the monad unit
    /// and leaves the comonad alone.
    pub fn with_perturbed_unit(mut self) -> VectData {
        let one = self.field.one();
        self.unit[(0, 0)] = self.unit[(0, 0)].add(&one);
        self
    }

    fn id(&self, n: usize) -> Matrix {
        Matrix::identity(self.field, n)
    }

    /// `F(g) = 1_A (x) g` for either functor.
    fn lift(&self, g: &Matrix) -> Matrix {
        self.id(self.dim).kron(g)
    }

    fn mu(&self, n: usize) -> Matrix {
        self.mult.kron(&self.id(n))
    }

    fn eta(&self, n: usize) -> Matrix {
        self.unit.kron(&self.id(n))
    }

    fn delta(&self, n: usize) -> Matrix {
        self.comult.kron(&self.id(n))
    }

    fn eps(&self, n: usize) -> Matrix {
        self.counit.kron(&self.id(n))
    }

    /// `v -> sum_i e_i (x) e_i^* (x) v`; the unit of both `S ⊣ T` and `T ⊣ S`.
    fn copairing(&self, n: usize) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.field, d * d * n, n);
        for i in 0..d {
            for v in 0..n {
                m[((i * d + i) * n + v, v)] = self.field.one();
            }
        }
        m
    }

    /// `x (x) y (x) w -> <x, y> w`; the counit of both adjunctions.
    fn pairing(&self, n: usize) -> Matrix {
        self.copairing(n).transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectReport {
    pub algebra_dim: usize,
    pub tested_dims: Vec<usize>,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
    pub first_failure: Option<String>,
}

fn report(data: &VectData, dims: &[usize], checks: Vec<CheckOutcome>) -> VectReport {
    let first_failure = checks.iter().find(|c| !c.passed).map(|c| c.component.clone());
    VectReport {
        algebra_dim: data.dim,
        tested_dims: dims.to_vec(),
        passed: first_failure.is_none(),
        checks,
        first_failure,
    }
}

fn check(component: String, passed: bool) -> CheckOutcome {
    CheckOutcome { component, passed }
}

/// All matrix units `E_rc` of shape `rows x cols`.
fn matrix_units(field: Field, rows: usize, cols: usize) -> impl Iterator<Item = Matrix> {
    (0..rows * cols).map(move |k| {
        let mut m = Matrix::zeros(field, rows, cols);
        m[(k / cols, k % cols)] = field.one();
        m
    })
}

pub fn verify_monad_comonad(a: &Algebra, dims: &[usize]) -> VectReport {
    verify_monad_comonad_data(&VectData::from_algebra(a), dims)
}

pub fn verify_monad_comonad_data(x: &VectData, dims: &[usize]) -> VectReport {
    let d = x.dim;
    let mut checks = Vec::new();
    for &n in dims {
        let dn = d * n;
        let assoc_l = x.mu(n).mul(&x.lift(&x.mu(n)));
        let assoc_r = x.mu(n).mul(&x.mu(dn));
        checks.push(check(format!("monad associativity on k^{n}"), assoc_l == assoc_r));
        let unit_l = x.mu(n).mul(&x.lift(&x.eta(n)));
        let unit_r = x.mu(n).mul(&x.eta(dn));
        checks.push(check(format!("monad unit on k^{n}"), unit_l.is_identity() && unit_r.is_identity()));
        let coassoc_l = x.delta(dn).mul(&x.delta(n));
        let coassoc_r = x.lift(&x.delta(n)).mul(&x.delta(n));
        checks.push(check(format!("comonad coassociativity on k^{n}"), coassoc_l == coassoc_r));
        let counit_l = x.eps(dn).mul(&x.delta(n));
        let counit_r = x.lift(&x.eps(n)).mul(&x.delta(n));
        checks.push(check(format!("comonad counit on k^{n}"), counit_l.is_identity() && counit_r.is_identity()));
    }
    report(x, dims, checks)
}

pub fn verify_ambidextrous(a: &Algebra, dims: &[usize]) -> VectReport {
    verify_ambidextrous_data(&VectData::from_algebra(a), dims)
}

/// Triangle identities of `S ⊣ T` and `T ⊣ S` built from the pairing
/// `D A x A -> k`, and conjugacy of `(Delta, mu)` and `(eps, eta)` for both
/// adjunctions on every pair of test dimensions.
pub fn verify_ambidextrous_data(x: &VectData, dims: &[usize]) -> VectReport {
    let d = x.dim;
    let f = x.field;
    let mut checks = Vec::new();
    for &n in dims {
        // both functors lift maps the same way, so one pair of identities covers both adjunctions
        let first = x.pairing(d * n).mul(&x.lift(&x.copairing(n)));
        let second = x.lift(&x.pairing(n)).mul(&x.copairing(d * n));
        checks.push(check(format!("triangle identities on k^{n}"), first.is_identity() && second.is_identity()));
    }
    for &na in dims {
        for &nb in dims {
            let alpha = x.copairing(na);
            // S ⊣ T: unit of S S ⊣ T T is T(alpha_S) . alpha
            let alpha2 = x.lift(&x.copairing(d * na)).mul(&alpha);
            let ok = matrix_units(f, nb, d * d * na).all(|g| {
                let lhs = x.lift(&g.mul(&x.delta(na))).mul(&alpha);
                let rhs = x.mu(nb).mul(&x.lift(&x.lift(&g))).mul(&alpha2);
                lhs == rhs
            });
            checks.push(check(format!("S -| T conjugacy (Delta, mu) on (k^{na}, k^{nb})"), ok));
            let ok = matrix_units(f, nb, na).all(|g| {
                let lhs = x.lift(&g.mul(&x.eps(na))).mul(&alpha);
                lhs == x.eta(nb).mul(&g)
            });
            checks.push(check(format!("S -| T conjugacy (eps, eta) on (k^{na}, k^{nb})"), ok));
            // T ⊣ S: unit of T T ⊣ S S is S(alpha_T) . alpha
            let ok = matrix_units(f, nb, d * na).all(|g| {
                let lhs = x.lift(&x.lift(&g.mul(&x.mu(na)))).mul(&alpha2);
                let rhs = x.delta(nb).mul(&x.lift(&g)).mul(&alpha);
                lhs == rhs
            });
            checks.push(check(format!("T -| S conjugacy (mu, Delta) on (k^{na}, k^{nb})"), ok));
            let ok = matrix_units(f, nb, d * na).all(|g| {
                let lhs = g.mul(&x.eta(na));
                lhs == x.eps(nb).mul(&x.lift(&g)).mul(&alpha)
            });
            checks.push(check(format!("T -| S conjugacy (eta, eps) on (k^{na}, k^{nb})"), ok));
        }
    }
    report(x, dims, checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins::*;

    fn suite() -> Vec<Algebra> {
        vec![Algebra::ground(Field::Rationals), dual_numbers(), linear_a(2, None), cyclic_rad_square(2)]
    }

    #[test]
    fn monad_and_comonad_laws_hold() {
        for a in suite() {
            let r = verify_monad_comonad(&a, &[1, 2]);
            assert!(r.passed, "{:?}", r.first_failure);
        }
    }

    #[test]
    fn ambidextrous_conjugacy_holds() {
        for a in suite() {
            let r = verify_ambidextrous(&a, &[1, 2]);
            assert!(r.passed, "{:?}", r.first_failure);
        }
    }

    #[test]
    fn perturbed_unit_is_caught() {
        let x = VectData::from_algebra(&linear_a(2, None)).with_perturbed_unit();
        let r = verify_monad_comonad_data(&x, &[1]);
        assert_eq!(r.first_failure.as_deref(), Some("monad unit on k^1"));
        let r = verify_ambidextrous_data(&x, &[1]);
        assert!(!r.passed);
    }

    #[test]
    fn unswapped_comultiplication_is_not_conjugate() {
        let a = linear_a(2, None);
        let mut x = VectData::from_algebra(&a);
        x.comult = a.mult().transpose();
        let r = verify_ambidextrous_data(&x, &[1]);
        assert!(!r.passed);
    }
}
