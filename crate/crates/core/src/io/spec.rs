use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::builtins::{cyclic_rad_square_over, linear_a_over, poly_trunc_over};
use crate::algebra::{Algebra, AlgebraRef, Arrow, CategorySpec, Composition, Morphism, QuiverPresentation, RelationTerm};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::module::{ModuleRep, Side};

/// A scalar as written in a document: `"p/q"`, `"n"` or a bare integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Int(i64),
    Text(String),
}

impl ScalarDoc {
    pub fn to_scalar(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarDoc::Int(v) => Ok(field.from_i64(*v)),
            ScalarDoc::Text(t) => field.parse(t),
        }
    }

    pub fn from_scalar(s: &Scalar) -> ScalarDoc {
        match s.to_json() {
            serde_json::Value::String(t) => ScalarDoc::Text(t),
            v => ScalarDoc::Int(v.as_i64().expect("residues fit in i64")),
        }
    }
}

fn scalars(v: &[ScalarDoc], field: Field) -> Result<Vec<Scalar>> {
    v.iter().map(|s| s.to_scalar(field)).collect()
}

fn matrix(rows: &[Vec<ScalarDoc>], field: Field, shape: (usize, usize), what: &str) -> Result<Matrix> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(Error::DimensionMismatch(format!("{what} must be {}x{}", shape.0, shape.1)));
    }
    if shape.0 == 0 {
        return Ok(Matrix::zeros(field, 0, shape.1));
    }
    Matrix::from_rows(field, rows.iter().map(|r| scalars(r, field)).collect::<Result<_>>()?)
}

fn matrix_doc(m: &Matrix) -> Vec<Vec<ScalarDoc>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ScalarDoc::from_scalar).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: ScalarDoc,
    /// Arrow names, target to source.
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default)]
    pub relations: Vec<Vec<TermDoc>>,
    pub nilpotency_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub labels: Vec<String>,
    /// `table[i][j]` are the coordinates of `b_i b_j`.
    pub table: Vec<Vec<Vec<ScalarDoc>>>,
    pub unit: Vec<ScalarDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionDoc {
    pub left: String,
    pub right: String,
    pub result: Vec<CategoryTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryTermDoc {
    pub coeff: ScalarDoc,
    pub morphism: String,
}

/// A finite category: morphism names double as basis labels, `identities`
/// lists one morphism per object and unlisted composites are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: Vec<String>,
    #[serde(default)]
    pub compositions: Vec<CompositionDoc>,
}

/// Either an inline algebra document or a path relative to the referring file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRefDoc {
    Path(String),
    Inline(Box<AlgebraSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default = "rationals")]
    pub field: Field,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<StructureDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<Vec<AlgebraRefDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<CategoryDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, usize>,
}

fn rationals() -> Field {
    Field::Rationals
}

fn lookup(names: &[String], name: &str, what: &str) -> Result<usize> {
    names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownName(format!("{what} {name:?}")))
}

impl AlgebraSpec {
    fn empty(field: Field) -> AlgebraSpec {
        AlgebraSpec {
            field,
            quiver: None,
            structure_constants: None,
            tensor: None,
            category: None,
            builtin: None,
            params: BTreeMap::new(),
        }
    }

    pub fn builtin(name: &str, params: &[(&str, usize)]) -> AlgebraSpec {
        AlgebraSpec {
            builtin: Some(name.to_string()),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            ..AlgebraSpec::empty(Field::Rationals)
        }
    }

    pub fn from_json(text: &str) -> Result<AlgebraSpec> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    /// Structure-constant form of an already validated algebra.
    pub fn from_algebra(a: &Algebra) -> AlgebraSpec {
        let d = a.dim();
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let c = a.product_coords(i, j);
                        (0..d).map(|k| ScalarDoc::from_scalar(&c[(k, 0)])).collect()
                    })
                    .collect()
            })
            .collect();
        let unit = (0..d).map(|k| ScalarDoc::from_scalar(&a.unit()[(k, 0)])).collect();
        AlgebraSpec {
            structure_constants: Some(StructureDoc { labels: a.labels().to_vec(), table, unit }),
            ..AlgebraSpec::empty(a.field())
        }
    }

    /// Checks that exactly one form is present and the field is valid.
    fn shape(&self) -> Result<&'static str> {
        if let Field::Prime(p) = self.field {
            Field::new_prime(p)?;
        }
        let forms = [
            (self.quiver.is_some(), "quiver"),
            (self.structure_constants.is_some(), "structure_constants"),
            (self.tensor.is_some(), "tensor"),
            (self.category.is_some(), "category"),
            (self.builtin.is_some(), "builtin"),
        ];
        let present: Vec<&str> = forms.iter().filter(|f| f.0).map(|f| f.1).collect();
        match present.as_slice() {
            [one] => Ok(one),
            [] => Err(Error::Schema(
                "expected one of quiver, structure_constants, tensor, category, builtin".into(),
            )),
            many => Err(Error::Schema(format!("more than one algebra form: {}", many.join(", ")))),
        }
    }

    pub fn build(&self) -> Result<Algebra> {
        self.build_in(None)
    }

    /// Builds and validates the algebra; `base` resolves tensor factors
    /// given as paths.
    pub fn build_in(&self, base: Option<&Path>) -> Result<Algebra> {
        let f = self.field;
        match self.shape()? {
            "quiver" => Algebra::from_quiver(self.quiver.as_ref().unwrap().presentation(f)?, f),
            "structure_constants" => {
                let s = self.structure_constants.as_ref().unwrap();
                let table = s
                    .table
                    .iter()
                    .map(|row| row.iter().map(|v| scalars(v, f)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Algebra::from_structure_constants(f, s.labels.clone(), table, scalars(&s.unit, f)?)
            }
            "tensor" => {
                let parts = self.tensor.as_ref().unwrap();
                if parts.len() != 2 {
                    return Err(Error::Schema(format!("tensor takes two factors, got {}", parts.len())));
                }
                let a = parts[0].resolve(base)?;
                let b = parts[1].resolve(base)?;
                for x in [&a, &b] {
                    if x.field() != f {
                        return Err(Error::FieldMismatch(f.to_string(), x.field().to_string()));
                    }
                }
                Algebra::tensor(&a, &b)
            }
            "category" => Algebra::category_algebra(&self.category.as_ref().unwrap().spec(f)?, f),
            _ => self.build_builtin(),
        }
    }

    fn param(&self, key: &str) -> Result<usize> {
        self.params.get(key).copied().ok_or_else(|| Error::Schema(format!("builtin needs parameter {key:?}")))
    }

    fn build_builtin(&self) -> Result<Algebra> {
        let f = self.field;
        let name = self.builtin.as_deref().unwrap();
        let known = ["n", "radical_power"];
        if let Some(k) = self.params.keys().find(|k| !known.contains(&k.as_str())) {
            return Err(Error::Schema(format!("unknown builtin parameter {k:?}")));
        }
        let positive = |key: &str| -> Result<usize> {
            let v = self.param(key)?;
            if v == 0 {
                return Err(Error::Schema(format!("parameter {key} must be positive")));
            }
            Ok(v)
        };
        match name.to_ascii_lowercase().as_str() {
            "linear_an" | "linear_a" => {
                let rp = self.params.get("radical_power").copied();
                Ok(linear_a_over(f, positive("n")?, rp))
            }
            "cyclic_rad_square" => Ok(cyclic_rad_square_over(f, positive("n")?)),
            "dual_numbers" => Ok(poly_trunc_over(f, 2)),
            "semisimple_k_n" | "semisimple" => Ok(Algebra::semisimple(f, positive("n")?)),
            "poly_trunc" => Ok(poly_trunc_over(f, positive("n")?)),
            _ => Err(Error::UnknownName(format!("builtin {name:?}"))),
        }
    }

    /// The category presentation, for specs in category form.
    pub fn category_spec(&self) -> Result<Option<CategorySpec>> {
        self.category.as_ref().map(|c| c.spec(self.field)).transpose()
    }

    /// Short human-readable description of the form.
    pub fn describe(&self) -> String {
        match (&self.builtin, self.shape()) {
            (Some(b), _) => {
                let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                if ps.is_empty() {
                    b.clone()
                } else {
                    format!("{b}({})", ps.join(", "))
                }
            }
            (None, Ok(form)) => form.to_string(),
            (None, Err(_)) => "invalid".into(),
        }
    }
}

impl AlgebraRefDoc {
    fn resolve(&self, base: Option<&Path>) -> Result<Algebra> {
        match self {
            AlgebraRefDoc::Inline(spec) => spec.build_in(base),
            AlgebraRefDoc::Path(p) => {
                let path: PathBuf = base.map(|b| b.join(p)).unwrap_or_else(|| PathBuf::from(p));
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
                AlgebraSpec::from_json(&text)?.build_in(path.parent())
            }
        }
    }
}

impl QuiverDoc {
    pub fn presentation(&self, field: Field) -> Result<QuiverPresentation> {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow {
                    name: a.name.clone(),
                    source: lookup(&self.vertices, &a.from, "vertex")?,
                    target: lookup(&self.vertices, &a.to, "vertex")?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
        let relations = self
            .relations
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| {
                        Ok(RelationTerm {
                            coeff: t.coeff.to_scalar(field)?,
                            path: t.path.iter().map(|n| lookup(&names, n, "arrow")).collect::<Result<_>>()?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuiverPresentation {
            vertices: self.vertices.clone(),
            arrows,
            relations,
            nilpotency_bound: self.nilpotency_bound,
        })
    }
}

impl CategoryDoc {
    pub fn spec(&self, field: Field) -> Result<CategorySpec> {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| {
                Ok(Morphism {
                    name: m.name.clone(),
                    source: lookup(&self.objects, &m.source, "object")?,
                    target: lookup(&self.objects, &m.target, "object")?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
        let identities =
            self.identities.iter().map(|n| lookup(&names, n, "morphism")).collect::<Result<Vec<_>>>()?;
        let compositions = self
            .compositions
            .iter()
            .map(|c| {
                Ok(Composition {
                    left: lookup(&names, &c.left, "morphism")?,
                    right: lookup(&names, &c.right, "morphism")?,
                    result: c
                        .result
                        .iter()
                        .map(|t| Ok((t.coeff.to_scalar(field)?, lookup(&names, &t.morphism, "morphism")?)))
                        .collect::<Result<_>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CategorySpec { objects: self.objects.clone(), morphisms, identities, compositions })
    }

    pub fn from_spec(c: &CategorySpec) -> CategoryDoc {
        let name = |i: usize| c.morphisms[i].name.clone();
        CategoryDoc {
            objects: c.objects.clone(),
            morphisms: c
                .morphisms
                .iter()
                .map(|m| MorphismDoc {
                    name: m.name.clone(),
                    source: c.objects[m.source].clone(),
                    target: c.objects[m.target].clone(),
                })
                .collect(),
            identities: c.identities.iter().map(|&i| name(i)).collect(),
            compositions: c
                .compositions
                .iter()
                .map(|comp| CompositionDoc {
                    left: name(comp.left),
                    right: name(comp.right),
                    result: comp
                        .result
                        .iter()
                        .map(|(s, m)| CategoryTermDoc { coeff: ScalarDoc::from_scalar(s), morphism: name(*m) })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// A module, given by one action matrix per basis element of the algebra,
/// or by vertex dimensions and one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default = "left")]
    pub side: Side,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action_matrices: Option<Vec<Vec<Vec<ScalarDoc>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrow_matrices: Option<Vec<Vec<Vec<ScalarDoc>>>>,
}

fn left() -> Side {
    Side::Left
}

/// A modules file holds a single module, a list of them, or a report whose
/// tested set is replayed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModulesDoc {
    One(ModuleSpec),
    Many(Vec<ModuleSpec>),
    Report { tested_set: Vec<ModuleSpec> },
}

impl ModulesDoc {
    pub fn from_json(text: &str) -> Result<Vec<ModuleSpec>> {
        let doc: ModulesDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Ok(match doc {
            ModulesDoc::One(m) => vec![m],
            ModulesDoc::Many(v) | ModulesDoc::Report { tested_set: v } => v,
        })
    }
}

impl ModuleSpec {
    pub fn from_module(m: &ModuleRep, label: Option<String>) -> ModuleSpec {
        ModuleSpec {
            label,
            side: m.side(),
            action_matrices: Some(m.actions().iter().map(matrix_doc).collect()),
            vertex_dims: None,
            arrow_matrices: None,
        }
    }

    /// Builds the module and checks the representation axioms.
    pub fn build(&self, a: &AlgebraRef) -> Result<ModuleRep> {
        let f = a.field();
        match (&self.action_matrices, &self.vertex_dims, &self.arrow_matrices) {
            (Some(acts), None, None) => {
                if acts.len() != a.dim() {
                    return Err(Error::DimensionMismatch(format!(
                        "{} action matrices for an algebra of dimension {}",
                        acts.len(),
                        a.dim()
                    )));
                }
                let n = acts.first().map_or(0, Vec::len);
                let mats = acts.iter().map(|m| matrix(m, f, (n, n), "action matrix")).collect::<Result<_>>()?;
                ModuleRep::new(a.clone(), self.side, mats)
            }
            (None, Some(dims), Some(arrows)) => {
                let p = a
                    .presentation()
                    .ok_or_else(|| Error::Schema("arrow_matrices need an algebra given by a quiver".into()))?;
                if arrows.len() != p.arrows.len() || dims.len() != p.vertices.len() {
                    return Err(Error::DimensionMismatch("one dimension per vertex and one matrix per arrow".into()));
                }
                let mats = p
                    .arrows
                    .iter()
                    .zip(arrows)
                    .map(|(ar, m)| {
                        let shape = match self.side {
                            Side::Left => (dims[ar.target], dims[ar.source]),
                            Side::Right => (dims[ar.source], dims[ar.target]),
                        };
                        matrix(m, f, shape, &format!("matrix of arrow {}", ar.name))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ModuleRep::from_quiver_rep(a.clone(), self.side, dims, &mats)
            }
            _ => Err(Error::Schema("a module needs action_matrices, or vertex_dims with arrow_matrices".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::builtins::linear_a;

    const A2: &str = r#"{
        "field": "rationals",
        "quiver": {
            "vertices": ["1", "2"],
            "arrows": [{"name": "a", "from": "1", "to": "2"}],
            "nilpotency_bound": 2
        }
    }"#;

    #[test]
    fn quiver_spec_matches_builtin() {
        let a = AlgebraSpec::from_json(A2).unwrap().build().unwrap();
        assert!(a.same_structure(&linear_a(2, None)));
        let b = AlgebraSpec::builtin("linear_An", &[("n", 2)]).build().unwrap();
        assert!(a.same_structure(&b));
    }

    #[test]
    fn structure_constant_round_trip() {
        for spec in [
            AlgebraSpec::from_json(A2).unwrap(),
            AlgebraSpec::builtin("cyclic_rad_square", &[("n", 3)]),
            AlgebraSpec { field: Field::Prime(3), ..AlgebraSpec::builtin("poly_trunc", &[("n", 3)]) },
        ] {
            let a = spec.build().unwrap();
            let text = serde_json::to_string(&AlgebraSpec::from_algebra(&a)).unwrap();
            let b = AlgebraSpec::from_json(&text).unwrap().build().unwrap();
            assert_eq!(a.mult(), b.mult());
            assert_eq!(a.unit(), b.unit());
            assert_eq!(a.field(), b.field());
        }
    }

    #[test]
    fn category_doc_round_trip() {
        let c = CategorySpec::periodic_complexes(3);
        let doc = CategoryDoc::from_spec(&c);
        let text = serde_json::to_string(&doc).unwrap();
        let back: CategoryDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.spec(Field::Rationals).unwrap(), c);
    }

    #[test]
    fn schema_and_semantic_errors() {
        assert_eq!(AlgebraSpec::from_json(r#"{"quiver": 3}"#).unwrap_err().exit_code(), 1);
        let two = r#"{"builtin": "dual_numbers", "structure_constants": {"labels": [], "table": [], "unit": []}}"#;
        assert_eq!(AlgebraSpec::from_json(two).unwrap().build().unwrap_err().exit_code(), 1);
        let bad_field = AlgebraSpec { field: Field::Prime(4), ..AlgebraSpec::builtin("dual_numbers", &[]) };
        assert_eq!(bad_field.build().unwrap_err().kind(), "InvalidField");
        let unknown = AlgebraSpec::builtin("nope", &[]);
        assert_eq!(unknown.build().unwrap_err().kind(), "UnknownName");
    }

    #[test]
    fn modules_from_both_forms() {
        let a = Arc::new(AlgebraSpec::from_json(A2).unwrap().build().unwrap());
        let by_arrows = r#"{"label": "P1", "vertex_dims": [1, 1], "arrow_matrices": [[["1"]]]}"#;
        let m = ModulesDoc::from_json(by_arrows).unwrap().remove(0).build(&a).unwrap();
        assert_eq!(m.dimension_vector(), Some(vec![1, 1]));
        let again = ModuleSpec::from_module(&m, None).build(&a).unwrap();
        assert_eq!(again.actions(), m.actions());
        let list = r#"[{"vertex_dims": [1, 0], "arrow_matrices": [[]]}, {"vertex_dims": [0, 1], "arrow_matrices": [[[]]]}]"#;
        assert_eq!(ModulesDoc::from_json(list).unwrap().len(), 2);
        let wrong = r#"{"vertex_dims": [1, 1], "arrow_matrices": [[["1", "2"]]]}"#;
        let err = ModulesDoc::from_json(wrong).unwrap().remove(0).build(&a).unwrap_err();
        assert_eq!(err.kind(), "DimensionMismatch");
    }
}
