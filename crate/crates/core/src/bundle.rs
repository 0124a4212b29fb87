//! JSON bundles of named structures sharing one field.
//!
//! Layout (version `"1"`):
//!
//! ```text
//! { "version": "1", "field": {"kind": "Q"}, "metadata": {...},
//!   "objects": { name: {"type": ..., ...} }, "reports": { name: [...] } }
//! ```
//!
//! Matrices are `{"rows", "cols", "data"}` with scalars as canonical strings.
//! Serialization goes through `serde_json::Value`, whose maps are sorted, so
//! equal bundles serialize to identical bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::coalg::{Algebra, CoalgError, Coalgebra};
use crate::hopf::{Bialgebra, HopfAlgebra, HopfError};
use crate::multilinear::{LinearMap, VectorSpace};
use crate::pact::{ActionMap, DualActionMap, PactError};
use crate::pcoact::{CoactionMap, PcoactError};
use crate::report::CheckReport;
use crate::scalars::{FieldSpec, Scalar};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unsupported bundle version {0:?}")]
    Version(String),
    #[error("{path}: {message}")]
    Format { path: String, message: String },
    #[error("object {0:?} not found")]
    MissingObject(String),
    #[error("object {name:?} is a {found}, expected a {expected}")]
    WrongType { name: String, expected: &'static str, found: &'static str },
    #[error("object {name:?} does not fit {context}: {message}")]
    Mismatch { name: String, context: String, message: String },
}

fn format_err(path: &str, message: impl Into<String>) -> BundleError {
    BundleError::Format { path: path.to_string(), message: message.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalizationMode {
    Pmc,
    Pcc,
}

impl GlobalizationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            GlobalizationMode::Pmc => "pmc",
            GlobalizationMode::Pcc => "pcc",
        }
    }
}

/// A globalization `(D, θ, π)` by reference: `partial` names the action or
/// coaction on `C`, `global` the one on `D`, `theta` and `pi` linear maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalizationRef {
    pub mode: GlobalizationMode,
    pub partial: String,
    pub global: String,
    pub theta: String,
    pub pi: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Coalgebra(Coalgebra),
    Hopf(HopfAlgebra),
    /// A right action of `hopf` on `coalgebra`.
    Action { coalgebra: String, hopf: String, action: ActionMap },
    /// A left coaction of `hopf` on `coalgebra`.
    Coaction { coalgebra: String, hopf: String, coaction: CoactionMap },
    /// A left action of `hopf` on the dual algebra of `coalgebra`.
    DualAction { coalgebra: String, hopf: String, action: DualActionMap },
    LinearMap(LinearMap),
    Globalization(GlobalizationRef),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Coalgebra(_) => "coalgebra",
            Object::Hopf(_) => "hopf",
            Object::Action { .. } => "action",
            Object::Coaction { .. } => "coaction",
            Object::DualAction { .. } => "dual_action",
            Object::LinearMap(_) => "linear_map",
            Object::Globalization(_) => "globalization",
        }
    }

    fn field(&self) -> Option<FieldSpec> {
        match self {
            Object::Coalgebra(c) => Some(c.field()),
            Object::Hopf(h) => Some(h.field()),
            Object::Action { action, .. } => Some(action.field()),
            Object::Coaction { coaction, .. } => Some(coaction.field()),
            Object::DualAction { action, .. } => Some(action.map.field()),
            Object::LinearMap(m) => Some(m.field()),
            Object::Globalization(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub field: FieldSpec,
    pub objects: BTreeMap<String, Object>,
    pub metadata: Map<String, Value>,
    pub reports: BTreeMap<String, CheckReport>,
}

fn matrix_to_json(m: &LinearMap) -> Value {
    let data: Vec<Vec<String>> = m.rows().map(|row| row.iter().map(Scalar::to_string).collect()).collect();
    json!({ "rows": m.codomain_dim(), "cols": m.domain_dim(), "data": data })
}

fn labels_json(space: &VectorSpace, obj: &mut Map<String, Value>) {
    obj.insert("dim".into(), json!(space.dim));
    if let Some(labels) = &space.labels {
        obj.insert("labels".into(), json!(labels));
    }
}

fn object_to_json(obj: &Object) -> Value {
    let mut out = Map::new();
    out.insert("type".into(), json!(obj.kind()));
    match obj {
        Object::Coalgebra(c) => {
            labels_json(&c.space, &mut out);
            out.insert("delta".into(), matrix_to_json(&c.delta));
            out.insert("epsilon".into(), matrix_to_json(&c.epsilon));
        }
        Object::Hopf(h) => {
            labels_json(&h.alg().space, &mut out);
            out.insert("mul".into(), matrix_to_json(h.mul()));
            out.insert("unit".into(), matrix_to_json(h.unit()));
            out.insert("delta".into(), matrix_to_json(h.delta()));
            out.insert("epsilon".into(), matrix_to_json(h.epsilon()));
            out.insert("antipode".into(), matrix_to_json(&h.antipode));
        }
        Object::Action { coalgebra, hopf, action } => {
            out.insert("coalgebra".into(), json!(coalgebra));
            out.insert("hopf".into(), json!(hopf));
            out.insert("c_dim".into(), json!(action.c_dim));
            out.insert("h_dim".into(), json!(action.h_dim));
            out.insert("matrix".into(), matrix_to_json(&action.map));
        }
        Object::Coaction { coalgebra, hopf, coaction } => {
            out.insert("coalgebra".into(), json!(coalgebra));
            out.insert("hopf".into(), json!(hopf));
            out.insert("c_dim".into(), json!(coaction.c_dim));
            out.insert("h_dim".into(), json!(coaction.h_dim));
            out.insert("matrix".into(), matrix_to_json(&coaction.map));
        }
        Object::DualAction { coalgebra, hopf, action } => {
            out.insert("coalgebra".into(), json!(coalgebra));
            out.insert("hopf".into(), json!(hopf));
            out.insert("h_dim".into(), json!(action.hopf_dim));
            out.insert("a_dim".into(), json!(action.dual_dim));
            out.insert("matrix".into(), matrix_to_json(&action.map));
        }
        Object::LinearMap(m) => {
            out.insert("matrix".into(), matrix_to_json(m));
        }
        Object::Globalization(g) => {
            out.insert("mode".into(), json!(g.mode.as_str()));
            out.insert("partial".into(), json!(g.partial));
            out.insert("global".into(), json!(g.global));
            out.insert("theta".into(), json!(g.theta));
            out.insert("pi".into(), json!(g.pi));
        }
    }
    Value::Object(out)
}

struct Reader<'a> {
    path: String,
    obj: &'a Map<String, Value>,
}

impl<'a> Reader<'a> {
    fn new(path: String, value: &'a Value) -> Result<Self, BundleError> {
        match value.as_object() {
            Some(obj) => Ok(Reader { path, obj }),
            None => Err(format_err(&path, "expected an object")),
        }
    }

    fn at(&self, key: &str) -> String {
        format!("{}.{key}", self.path)
    }

    fn get(&self, key: &str) -> Result<&'a Value, BundleError> {
        self.obj.get(key).ok_or_else(|| format_err(&self.path, format!("missing key {key:?}")))
    }

    fn string(&self, key: &str) -> Result<String, BundleError> {
        self.get(key)?.as_str().map(str::to_string).ok_or_else(|| format_err(&self.at(key), "expected a string"))
    }

    fn usize(&self, key: &str) -> Result<usize, BundleError> {
        self.get(key)?
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| format_err(&self.at(key), "expected a non-negative integer"))
    }

    fn matrix(&self, key: &str, field: FieldSpec) -> Result<LinearMap, BundleError> {
        let path = self.at(key);
        let m = Reader::new(path.clone(), self.get(key)?)?;
        let (rows, cols) = (m.usize("rows")?, m.usize("cols")?);
        let data = m.get("data")?.as_array().ok_or_else(|| format_err(&m.at("data"), "expected an array"))?;
        if data.len() != rows {
            return Err(format_err(&path, format!("{} data rows, expected {rows}", data.len())));
        }
        let mut parsed = Vec::with_capacity(rows);
        for (i, row) in data.iter().enumerate() {
            let row_path = format!("{path}.data[{i}]");
            let row = row.as_array().ok_or_else(|| format_err(&row_path, "expected an array"))?;
            if row.len() != cols {
                return Err(format_err(&row_path, format!("{} entries, expected {cols}", row.len())));
            }
            let mut out = Vec::with_capacity(cols);
            for (j, x) in row.iter().enumerate() {
                let text = match x {
                    Value::String(s) => s.clone(),
                    Value::Number(n) if n.is_i64() => n.to_string(),
                    _ => return Err(format_err(&format!("{row_path}[{j}]"), "expected a scalar string")),
                };
                out.push(field.parse(&text).map_err(|e| format_err(&format!("{row_path}[{j}]"), e.to_string()))?);
            }
            parsed.push(out);
        }
        Ok(LinearMap::from_fn(field, rows, cols, |i, j| parsed[i][j].clone()))
    }

    fn space(&self) -> Result<VectorSpace, BundleError> {
        let dim = self.usize("dim")?;
        match self.obj.get("labels") {
            None => Ok(VectorSpace::new(dim)),
            Some(v) => {
                let labels: Vec<String> = serde_json::from_value(v.clone())
                    .map_err(|e| format_err(&self.at("labels"), e.to_string()))?;
                if labels.len() != dim {
                    return Err(format_err(&self.at("labels"), format!("{} labels for dimension {dim}", labels.len())));
                }
                Ok(VectorSpace::labelled(labels))
            }
        }
    }
}

fn shape_err(path: &str, e: impl std::fmt::Display) -> BundleError {
    format_err(path, e.to_string())
}

fn object_from_json(path: String, value: &Value, field: FieldSpec) -> Result<Object, BundleError> {
    let r = Reader::new(path.clone(), value)?;
    let kind = r.string("type")?;
    Ok(match kind.as_str() {
        "coalgebra" => Object::Coalgebra(
            Coalgebra::new(r.space()?, r.matrix("delta", field)?, r.matrix("epsilon", field)?)
                .map_err(|e: CoalgError| shape_err(&path, e))?,
        ),
        "hopf" => {
            let space = r.space()?;
            let alg = Algebra::new(space.clone(), r.matrix("mul", field)?, r.matrix("unit", field)?)
                .map_err(|e| shape_err(&path, e))?;
            let coalg = Coalgebra::new(space, r.matrix("delta", field)?, r.matrix("epsilon", field)?)
                .map_err(|e| shape_err(&path, e))?;
            let bialg = Bialgebra::new(alg, coalg).map_err(|e: HopfError| shape_err(&path, e))?;
            Object::Hopf(HopfAlgebra::new(bialg, r.matrix("antipode", field)?).map_err(|e| shape_err(&path, e))?)
        }
        "action" => Object::Action {
            coalgebra: r.string("coalgebra")?,
            hopf: r.string("hopf")?,
            action: ActionMap::new(r.usize("c_dim")?, r.usize("h_dim")?, r.matrix("matrix", field)?)
                .map_err(|e: PactError| shape_err(&path, e))?,
        },
        "coaction" => Object::Coaction {
            coalgebra: r.string("coalgebra")?,
            hopf: r.string("hopf")?,
            coaction: CoactionMap::new(r.usize("h_dim")?, r.usize("c_dim")?, r.matrix("matrix", field)?)
                .map_err(|e: PcoactError| shape_err(&path, e))?,
        },
        "dual_action" => Object::DualAction {
            coalgebra: r.string("coalgebra")?,
            hopf: r.string("hopf")?,
            action: DualActionMap::new(r.usize("h_dim")?, r.usize("a_dim")?, r.matrix("matrix", field)?)
                .map_err(|e| shape_err(&path, e))?,
        },
        "linear_map" => Object::LinearMap(r.matrix("matrix", field)?),
        "globalization" => Object::Globalization(GlobalizationRef {
            mode: match r.string("mode")?.as_str() {
                "pmc" => GlobalizationMode::Pmc,
                "pcc" => GlobalizationMode::Pcc,
                other => return Err(format_err(&r.at("mode"), format!("unknown mode {other:?}"))),
            },
            partial: r.string("partial")?,
            global: r.string("global")?,
            theta: r.string("theta")?,
            pi: r.string("pi")?,
        }),
        other => return Err(format_err(&r.at("type"), format!("unknown object type {other:?}"))),
    })
}

/// A resolved action together with the structures it refers to.
pub struct ActionView<'a> {
    pub coalgebra: &'a Coalgebra,
    pub hopf: &'a HopfAlgebra,
    pub action: &'a ActionMap,
}

/// A resolved coaction together with the structures it refers to.
pub struct CoactionView<'a> {
    pub coalgebra: &'a Coalgebra,
    pub hopf: &'a HopfAlgebra,
    pub coaction: &'a CoactionMap,
}

impl Bundle {
    pub fn new(field: FieldSpec) -> Self {
        Bundle { field, objects: BTreeMap::new(), metadata: Map::new(), reports: BTreeMap::new() }
    }

    pub fn insert(&mut self, name: impl Into<String>, object: Object) -> &mut Self {
        self.objects.insert(name.into(), object);
        self
    }

    pub fn get(&self, name: &str) -> Result<&Object, BundleError> {
        self.objects.get(name).ok_or_else(|| BundleError::MissingObject(name.to_string()))
    }

    fn wrong(&self, name: &str, expected: &'static str) -> BundleError {
        match self.objects.get(name) {
            Some(obj) => BundleError::WrongType { name: name.to_string(), expected, found: obj.kind() },
            None => BundleError::MissingObject(name.to_string()),
        }
    }

    /// A coalgebra object, or the underlying coalgebra of a Hopf object.
    pub fn coalgebra(&self, name: &str) -> Result<&Coalgebra, BundleError> {
        match self.get(name)? {
            Object::Coalgebra(c) => Ok(c),
            Object::Hopf(h) => Ok(h.coalg()),
            _ => Err(self.wrong(name, "coalgebra")),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<&HopfAlgebra, BundleError> {
        match self.get(name)? {
            Object::Hopf(h) => Ok(h),
            _ => Err(self.wrong(name, "hopf")),
        }
    }

    pub fn linear_map(&self, name: &str) -> Result<&LinearMap, BundleError> {
        match self.get(name)? {
            Object::LinearMap(m) => Ok(m),
            _ => Err(self.wrong(name, "linear_map")),
        }
    }

    pub fn action(&self, name: &str) -> Result<ActionView<'_>, BundleError> {
        match self.get(name)? {
            Object::Action { coalgebra, hopf, action } => {
                Ok(ActionView { coalgebra: self.coalgebra(coalgebra)?, hopf: self.hopf(hopf)?, action })
            }
            _ => Err(self.wrong(name, "action")),
        }
    }

    pub fn coaction(&self, name: &str) -> Result<CoactionView<'_>, BundleError> {
        match self.get(name)? {
            Object::Coaction { coalgebra, hopf, coaction } => {
                Ok(CoactionView { coalgebra: self.coalgebra(coalgebra)?, hopf: self.hopf(hopf)?, coaction })
            }
            _ => Err(self.wrong(name, "coaction")),
        }
    }

    pub fn globalization(&self, name: &str) -> Result<&GlobalizationRef, BundleError> {
        match self.get(name)? {
            Object::Globalization(g) => Ok(g),
            _ => Err(self.wrong(name, "globalization")),
        }
    }

    /// Names of all objects of the given type, in sorted order.
    pub fn names_of(&self, kind: &str) -> Vec<&str> {
        self.objects.iter().filter(|(_, o)| o.kind() == kind).map(|(n, _)| n.as_str()).collect()
    }

    /// Checks that every reference resolves, that dimensions agree with the
    /// referenced structures, and that every object lives over `field`.
    pub fn validate(&self) -> Result<(), BundleError> {
        let mismatch = |name: &str, context: &str, message: String| BundleError::Mismatch {
            name: name.to_string(),
            context: context.to_string(),
            message,
        };
        for (name, obj) in &self.objects {
            if let Some(f) = obj.field() {
                if f != self.field {
                    return Err(mismatch(name, "the bundle field", format!("object is over {f}, bundle over {}", self.field)));
                }
            }
            match obj {
                Object::Action { .. } => {
                    let v = self.action(name)?;
                    if (v.action.c_dim, v.action.h_dim) != (v.coalgebra.dim(), v.hopf.dim()) {
                        return Err(mismatch(name, "its coalgebra and hopf", "dimensions differ".into()));
                    }
                }
                Object::Coaction { .. } => {
                    let v = self.coaction(name)?;
                    if (v.coaction.c_dim, v.coaction.h_dim) != (v.coalgebra.dim(), v.hopf.dim()) {
                        return Err(mismatch(name, "its coalgebra and hopf", "dimensions differ".into()));
                    }
                }
                Object::DualAction { coalgebra, hopf, action } => {
                    let (c, h) = (self.coalgebra(coalgebra)?, self.hopf(hopf)?);
                    if (action.dual_dim, action.hopf_dim) != (c.dim(), h.dim()) {
                        return Err(mismatch(name, "its coalgebra and hopf", "dimensions differ".into()));
                    }
                }
                Object::Globalization(g) => {
                    let (theta, pi) = (self.linear_map(&g.theta)?, self.linear_map(&g.pi)?);
                    let (nc, nd) = match g.mode {
                        GlobalizationMode::Pmc => (self.action(&g.partial)?.coalgebra.dim(), self.action(&g.global)?.coalgebra.dim()),
                        GlobalizationMode::Pcc => {
                            (self.coaction(&g.partial)?.coalgebra.dim(), self.coaction(&g.global)?.coalgebra.dim())
                        }
                    };
                    if (theta.codomain_dim(), theta.domain_dim()) != (nd, nc) {
                        return Err(mismatch(name, "theta", format!("expected a {nd}x{nc} matrix")));
                    }
                    if (pi.codomain_dim(), pi.domain_dim()) != (nd, nd) {
                        return Err(mismatch(name, "pi", format!("expected a {nd}x{nd} matrix")));
                    }
                }
                Object::Coalgebra(_) | Object::Hopf(_) | Object::LinearMap(_) => {}
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let objects: Map<String, Value> = self.objects.iter().map(|(k, v)| (k.clone(), object_to_json(v))).collect();
        let mut out = Map::new();
        out.insert("version".into(), json!(FORMAT_VERSION));
        out.insert("field".into(), serde_json::to_value(self.field).expect("field serializes"));
        out.insert("objects".into(), Value::Object(objects));
        out.insert("metadata".into(), Value::Object(self.metadata.clone()));
        if !self.reports.is_empty() {
            out.insert("reports".into(), serde_json::to_value(&self.reports).expect("reports serialize"));
        }
        Value::Object(out)
    }

    /// Sorted keys, two-space indentation, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("bundle serializes");
        s.push('\n');
        s
    }

    pub fn from_json(value: &Value) -> Result<Self, BundleError> {
        let r = Reader::new("$".into(), value)?;
        let version = r.string("version")?;
        if version != FORMAT_VERSION {
            return Err(BundleError::Version(version));
        }
        let field: FieldSpec =
            serde_json::from_value(r.get("field")?.clone()).map_err(|e| format_err("$.field", e.to_string()))?;
        let objs = r.get("objects")?.as_object().ok_or_else(|| format_err("$.objects", "expected an object"))?;
        let mut bundle = Bundle::new(field);
        for (name, v) in objs {
            bundle.objects.insert(name.clone(), object_from_json(format!("$.objects.{name}"), v, field)?);
        }
        if let Some(meta) = r.obj.get("metadata") {
            bundle.metadata = meta.as_object().cloned().ok_or_else(|| format_err("$.metadata", "expected an object"))?;
        }
        if let Some(reports) = r.obj.get("reports") {
            bundle.reports =
                serde_json::from_value(reports.clone()).map_err(|e| format_err("$.reports", e.to_string()))?;
        }
        bundle.validate()?;
        Ok(bundle)
    }

    pub fn parse(text: &str) -> Result<Self, BundleError> {
        let value: Value = serde_json::from_str(text).map_err(|e| BundleError::Json(e.to_string()))?;
        Self::from_json(&value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{group_algebra, subgroup_partial_action_on_k, GroupTable};

    fn sample(field: FieldSpec) -> Bundle {
        let g = GroupTable::s3();
        let h = group_algebra(&g, field).unwrap();
        let act = subgroup_partial_action_on_k(&g, &g.subset("A3").unwrap(), field).unwrap();
        let mut b = Bundle::new(field);
        b.insert("C", Object::Coalgebra(Coalgebra::ground(field)));
        b.insert("H", Object::Hopf(h));
        b.insert("act", Object::Action { coalgebra: "C".into(), hopf: "H".into(), action: act });
        b.metadata.insert("generator".into(), json!("subgroup-action"));
        b
    }

    #[test]
    fn round_trip_is_byte_identical() {
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(5)] {
            let b = sample(field);
            let text = b.to_canonical_string();
            let back = Bundle::parse(&text).unwrap();
            assert_eq!(back, b);
            assert_eq!(back.to_canonical_string(), text);
        }
    }

    #[test]
    fn hopf_object_doubles_as_coalgebra() {
        let b = sample(FieldSpec::Rationals);
        assert_eq!(b.coalgebra("H").unwrap().dim(), 6);
        assert!(matches!(b.hopf("C"), Err(BundleError::WrongType { found: "coalgebra", .. })));
        assert!(matches!(b.action("nope"), Err(BundleError::MissingObject(_))));
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        let text = sample(FieldSpec::Rationals).to_canonical_string();
        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["objects"]["act"]["matrix"]["cols"] = json!(5);
        assert!(matches!(Bundle::from_json(&v), Err(BundleError::Format { .. })));

        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["version"] = json!("2");
        assert_eq!(Bundle::from_json(&v), Err(BundleError::Version("2".into())));

        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["objects"]["act"]["hopf"] = json!("C");
        assert!(matches!(Bundle::from_json(&v), Err(BundleError::WrongType { .. })));

        assert!(matches!(Bundle::parse("{"), Err(BundleError::Json(_))));
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let mut b = sample(FieldSpec::Rationals);
        b.insert("D", Object::Coalgebra(Coalgebra::ground(FieldSpec::PrimeField(3))));
        assert!(matches!(b.validate(), Err(BundleError::Mismatch { .. })));
    }
}
