use std::collections::HashMap;

use crate::algebra::{basis_vector, Algebra, BasisPlacement};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// One term `coeff * path` of a relation; `path` lists arrow indices
/// target-to-source, so `[b, a]` is "first `a`, then `b`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub coeff: Scalar,
    pub path: Vec<usize>,
}

/// A quiver with relations and a user-supplied nilpotency bound `N`: every
/// path of length `>= N` must lie in the ideal generated by the relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
    pub nilpotency_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn len(&self) -> usize {
        self.arrows.len()
    }

    /// `self * other`: first `other`, then `self`.
    fn compose(&self, other: &Path) -> Option<Path> {
        (self.source == other.target).then(|| Path {
            source: other.source,
            target: self.target,
            arrows: self.arrows.iter().chain(&other.arrows).copied().collect(),
        })
    }
}

impl QuiverPresentation {
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub(crate) fn opposite(&self) -> QuiverPresentation {
        QuiverPresentation {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|t| RelationTerm { coeff: t.coeff.clone(), path: t.path.iter().rev().copied().collect() })
                        .collect()
                })
                .collect(),
            nilpotency_bound: self.nilpotency_bound,
        }
    }

    fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Endpoints of a relation term, `None` if the arrows do not compose.
    fn endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let (&first, rest) = path.split_last()?;
        let mut target = self.arrows[first].target;
        let source = self.arrows[first].source;
        for &a in rest.iter().rev() {
            if self.arrows[a].source != target {
                return None;
            }
            target = self.arrows[a].target;
        }
        Some((source, target))
    }

    /// All paths of length `<= max_len`, ordered by length, then arrow sequence.
    fn paths_up_to(&self, max_len: usize) -> Vec<Path> {
        let mut all: Vec<Path> =
            (0..self.vertices.len()).map(|v| Path { source: v, target: v, arrows: vec![] }).collect();
        let mut layer = all.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = vec![ai];
                        arrows.extend(&p.arrows);
                        next.push(Path { source: p.source, target: a.target, arrows });
                    }
                }
            }
            next.sort_by(|x, y| x.arrows.cmp(&y.arrows));
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }
}

impl Algebra {
    /// The path algebra `kQ / I` of a presentation.
    ///
    /// The ideal is spanned inside the space of paths of length `<= N` by
    /// all `u * r * w` (longer components dropped); every path of length `N`
    /// must land in that span. The basis consists of the normal paths: those
    /// not leading (largest in length-then-lexicographic order) in the
    /// reduced ideal basis.
    pub fn from_quiver(p: QuiverPresentation, field: Field) -> Result<Algebra> {
        let n_bound = p.nilpotency_bound;
        if n_bound == 0 {
            return Err(Error::BoundTooSmall { bound: 0, path: "(any vertex)".into() });
        }
        for a in &p.arrows {
            if a.source >= p.vertices.len() || a.target >= p.vertices.len() {
                return Err(Error::UnknownName(format!("arrow {} has an endpoint outside the vertex set", a.name)));
            }
        }
        let mut rel_paths: Vec<Vec<(Scalar, Path)>> = Vec::new();
        for (ri, rel) in p.relations.iter().enumerate() {
            let mut ends = None;
            let mut terms = Vec::new();
            for t in rel {
                if t.path.iter().any(|&a| a >= p.arrows.len()) {
                    return Err(Error::UnknownName(format!("relation {ri} names an unknown arrow")));
                }
                if !field.contains(&t.coeff) {
                    return Err(Error::InvalidField(format!("relation {ri} coefficient {} not in {field}", t.coeff)));
                }
                let Some(e) = p.endpoints(&t.path) else {
                    return Err(Error::MalformedRelation(format!("{ri} (a term is not a composable path)")));
                };
                if *ends.get_or_insert(e) != e {
                    return Err(Error::MalformedRelation(ri.to_string()));
                }
                terms.push((t.coeff.clone(), Path { source: e.0, target: e.1, arrows: t.path.clone() }));
            }
            rel_paths.push(terms);
        }

        let paths = p.paths_up_to(n_bound);
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, q)| (q, i)).collect();
        let np = paths.len();
        // coordinates are reversed so pivots fall on the largest paths
        let coord = |i: usize| np - 1 - i;

        let mut gens: Vec<Matrix> = Vec::new();
        for rel in &rel_paths {
            let Some((_, first)) = rel.first() else { continue };
            let (s, t) = (first.source, first.target);
            for u in paths.iter().filter(|u| u.source == t) {
                for w in paths.iter().filter(|w| w.target == s) {
                    let mut v = Matrix::zeros(field, np, 1);
                    for (c, q) in rel {
                        let full = u.compose(q).and_then(|uq| uq.compose(w)).expect("endpoints match");
                        if let Some(&i) = index.get(&full) {
                            let cur = v[(coord(i), 0)].add(c);
                            v[(coord(i), 0)] = cur;
                        }
                    }
                    if !v.is_zero() {
                        gens.push(v);
                    }
                }
            }
        }
        let ideal = if gens.is_empty() {
            Subspace::zero(field, np)
        } else {
            Subspace::span(&Matrix::hstack(field, np, &gens))
        };
        for (i, q) in paths.iter().enumerate() {
            if q.len() == n_bound && !ideal.contains(&basis_vector(field, np, coord(i))) {
                return Err(Error::BoundTooSmall { bound: n_bound, path: p.path_label(q) });
            }
        }
        let quotient = ideal.quotient();
        // non-pivot coordinates, in increasing coordinate order = decreasing path order
        let normal_coords: Vec<usize> = (0..np).filter(|c| !ideal.pivots().contains(c)).collect();
        let basis: Vec<usize> = normal_coords.iter().rev().map(|&c| np - 1 - c).collect();
        let d = basis.len();
        // column index in the quotient for each basis element
        let qcol = |b: usize| d - 1 - b;

        let reduce = |q: &Path| -> Matrix {
            let mut out = Matrix::zeros(field, d, 1);
            if let Some(&i) = index.get(q) {
                let v = quotient.proj.column(coord(i));
                for b in 0..d {
                    out[(b, 0)] = v[(qcol(b), 0)].clone();
                }
            }
            out
        };
        let mut mult = Matrix::zeros(field, d, d * d);
        for (bi, &i) in basis.iter().enumerate() {
            for (bj, &j) in basis.iter().enumerate() {
                if let Some(prod) = paths[i].compose(&paths[j]) {
                    mult.set_block(0, bi * d + bj, &reduce(&prod));
                }
            }
        }
        let nv = p.vertices.len();
        let mut unit = Matrix::zeros(field, d, 1);
        for v in 0..nv {
            unit[(v, 0)] = field.one();
        }
        let idempotents = (0..nv).map(|v| basis_vector(field, d, v)).collect();
        let labels = basis.iter().map(|&i| p.path_label(&paths[i])).collect();
        let placement = basis
            .iter()
            .map(|&i| BasisPlacement { source: paths[i].source, target: paths[i].target, length: paths[i].len() })
            .collect();
        let basis_paths = basis.iter().map(|&i| paths[i].arrows.clone()).collect();
        let mut algebra = Algebra::from_parts(field, labels, mult, unit, Some(idempotents), Some(p), Some(placement))?;
        algebra.basis_paths = Some(basis_paths);
        Ok(algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins::*;

    #[test]
    fn a2_has_three_paths() {
        let a = linear_a(2, None);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.labels(), ["e1", "e2", "a1"]);
    }

    #[test]
    fn cyclic_radical_square_zero() {
        let a = cyclic_rad_square(3);
        assert_eq!(a.dim(), 6);
        // every product of two arrows vanishes
        for i in 3..6 {
            for j in 3..6 {
                assert!(a.product_coords(i, j).is_zero());
            }
        }
    }

    #[test]
    fn loop_with_square_relation_is_dual_numbers() {
        let a = cyclic_rad_square(1);
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert_eq!(a.labels(), ["e1", "d1"]);
    }

    #[test]
    fn bound_is_verified() {
        let q = QuiverPresentation {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
            relations: vec![vec![RelationTerm { coeff: Field::Rationals.one(), path: vec![0, 0, 0] }]],
            nilpotency_bound: 2,
        };
        let err = Algebra::from_quiver(q.clone(), Field::Rationals).unwrap_err();
        assert_eq!(err, Error::BoundTooSmall { bound: 2, path: "x*x".into() });
        let ok = Algebra::from_quiver(QuiverPresentation { nilpotency_bound: 3, ..q }, Field::Rationals).unwrap();
        assert_eq!(ok.dim(), 3);
    }

    #[test]
    fn non_parallel_relation_is_rejected() {
        let f = Field::Rationals;
        let q = QuiverPresentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![
                Arrow { name: "a".into(), source: 0, target: 1 },
                Arrow { name: "x".into(), source: 1, target: 1 },
            ],
            relations: vec![vec![
                RelationTerm { coeff: f.one(), path: vec![0] },
                RelationTerm { coeff: f.one(), path: vec![1] },
            ]],
            nilpotency_bound: 3,
        };
        assert!(matches!(Algebra::from_quiver(q, f), Err(Error::MalformedRelation(_))));
    }

    #[test]
    fn commutativity_relation_reduces_to_normal_form() {
        // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ba = dc
        let f = Field::Rationals;
        let arrow = |n: &str, s, t| Arrow { name: n.into(), source: s, target: t };
        let q = QuiverPresentation {
            vertices: vec!["1".into(), "2".into(), "3".into(), "4".into()],
            arrows: vec![arrow("a", 0, 1), arrow("b", 1, 3), arrow("c", 0, 2), arrow("d", 2, 3)],
            relations: vec![vec![
                RelationTerm { coeff: f.one(), path: vec![1, 0] },
                RelationTerm { coeff: f.from_i64(-1), path: vec![3, 2] },
            ]],
            nilpotency_bound: 3,
        };
        let a = Algebra::from_quiver(q, f).unwrap();
        // 4 idempotents, 4 arrows, one surviving length-2 path
        assert_eq!(a.dim(), 9);
        let b_idx = a.labels().iter().position(|l| l == "b").unwrap();
        let a_idx = a.labels().iter().position(|l| l == "a").unwrap();
        let d_idx = a.labels().iter().position(|l| l == "d").unwrap();
        let c_idx = a.labels().iter().position(|l| l == "c").unwrap();
        assert_eq!(a.product_coords(b_idx, a_idx), a.product_coords(d_idx, c_idx));
        assert!(!a.product_coords(b_idx, a_idx).is_zero());
    }
}
