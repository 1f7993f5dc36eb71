use crate::algebra::{basis_vector, Algebra, BasisPlacement};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// `left ∘ right = sum coeff * morphism` for a composable pair of basis morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub left: usize,
    pub right: usize,
    pub result: Vec<(Scalar, usize)>,
}

/// A finite k-linear category: objects, a basis of each hom space (as one
/// flat list of morphisms), identities and the composition of basis pairs.
/// Pairs not listed compose to zero, except that identities act trivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategorySpec {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    /// Index into `morphisms` of the identity of each object.
    pub identities: Vec<usize>,
    pub compositions: Vec<Composition>,
}

impl CategorySpec {
    /// The totally ordered set `0 < 1 < ... < n-1` as a category.
    pub fn linear_order(n: usize, field: Field) -> CategorySpec {
        let mut morphisms = Vec::new();
        let mut index = vec![vec![usize::MAX; n]; n];
        for (i, row) in index.iter_mut().enumerate() {
            row[i] = i;
            morphisms.push(Morphism { name: format!("id{i}"), source: i, target: i });
        }
        for (i, row) in index.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate().skip(i + 1) {
                *slot = morphisms.len();
                morphisms.push(Morphism { name: format!("{i}<{j}"), source: i, target: j });
            }
        }
        let mut compositions = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    compositions.push(Composition {
                        left: index[j][k],
                        right: index[i][j],
                        result: vec![(field.one(), index[i][k])],
                    });
                }
            }
        }
        CategorySpec {
            objects: (0..n).map(|i| i.to_string()).collect(),
            morphisms,
            identities: (0..n).collect(),
            compositions,
        }
    }

    /// Objects `Z/n`, one differential `d_i: i -> i-1` per object and
    /// `d d = 0`: complexes of period `n` are its representations.
    pub fn periodic_complexes(n: usize) -> CategorySpec {
        let mut morphisms: Vec<Morphism> =
            (0..n).map(|i| Morphism { name: format!("id{i}"), source: i, target: i }).collect();
        morphisms.extend((0..n).map(|i| Morphism { name: format!("d{i}"), source: i, target: (i + n - 1) % n }));
        CategorySpec {
            objects: (0..n).map(|i| i.to_string()).collect(),
            morphisms,
            identities: (0..n).collect(),
            compositions: vec![],
        }
    }
}

impl Algebra {
    /// The category algebra: basis = all basis morphisms, `g * f = g ∘ f`
    /// when composable and zero otherwise; idempotents are the identities.
    pub fn category_algebra(c: &CategorySpec, field: Field) -> Result<Algebra> {
        let d = c.morphisms.len();
        let n = c.objects.len();
        if c.identities.len() != n {
            return Err(Error::DimensionMismatch(format!("{n} objects but {} identities", c.identities.len())));
        }
        for m in &c.morphisms {
            if m.source >= n || m.target >= n {
                return Err(Error::UnknownName(format!("morphism {} has an endpoint outside the object set", m.name)));
            }
        }
        for (o, &id) in c.identities.iter().enumerate() {
            let m = c.morphisms.get(id).ok_or_else(|| Error::UnknownName(format!("identity of object {o}")))?;
            if m.source != o || m.target != o {
                return Err(Error::IdempotentViolation(format!("identity of {} is not an endomorphism", c.objects[o])));
            }
        }
        let mut mult = Matrix::zeros(field, d, d * d);
        for (g, mg) in c.morphisms.iter().enumerate() {
            for (f, mf) in c.morphisms.iter().enumerate() {
                if mg.source != mf.target {
                    continue;
                }
                if c.identities[mg.source] == g {
                    mult[(f, g * d + f)] = field.one();
                } else if c.identities[mf.target] == f {
                    mult[(g, g * d + f)] = field.one();
                }
            }
        }
        for comp in &c.compositions {
            let (g, f) = (comp.left, comp.right);
            let (Some(mg), Some(mf)) = (c.morphisms.get(g), c.morphisms.get(f)) else {
                return Err(Error::UnknownName(format!("composition ({g}, {f})")));
            };
            if mg.source != mf.target {
                return Err(Error::MalformedRelation(format!("{} ∘ {} is not composable", mg.name, mf.name)));
            }
            let mut col = Matrix::zeros(field, d, 1);
            for (coeff, h) in &comp.result {
                let mh = c.morphisms.get(*h).ok_or_else(|| Error::UnknownName(format!("morphism {h}")))?;
                if mh.source != mf.source || mh.target != mg.target {
                    return Err(Error::MalformedRelation(format!("{} ∘ {} has a term in the wrong hom space", mg.name, mf.name)));
                }
                col[(*h, 0)] = col[(*h, 0)].add(coeff);
            }
            mult.set_block(0, g * d + f, &col);
        }
        let mut unit = Matrix::zeros(field, d, 1);
        for &id in &c.identities {
            unit[(id, 0)] = field.one();
        }
        let idempotents = c.identities.iter().map(|&id| basis_vector(field, d, id)).collect();
        let placement = c
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| BasisPlacement {
                source: m.source,
                target: m.target,
                length: usize::from(!c.identities.contains(&i)),
            })
            .collect();
        let labels = c.morphisms.iter().map(|m| m.name.clone()).collect();
        Algebra::from_parts(field, labels, mult, unit, Some(idempotents), None, Some(placement))
    }
}
