//! JSON files. Every document is an object with `"format": 1`; `"kind"` is
//! written on save and inferred from the keys when a hand-written file
//! omits it. Keys come out in alphabetical order, scalars as exact strings
//! (`"-1/2"`, `"4"`), matrices and structure tensors as sparse entry lists.
//! Loading reports the JSON path of the first problem.
//!
//! ```text
//! field      {"kind": "rational"} | {"kind": "prime", "p": 7}
//! matrix     {"cols", "entries": [{"r", "c", "v"}, …], "rows"}   (+ "field" at top level)
//! algebra    {"basis_names"?, "dim", "field", "mult": [{"i", "j", "k", "c"}, …], "unit": [..]}
//! coalgebra  {"basis_names"?, "comult": [{"i", "j", "k", "c"}, …], "counit": [..], "dim", "field"}
//! bialgebra  algebra and coalgebra keys together
//! hopf       bialgebra keys plus "antipode": matrix
//! smash      {"A": algebra, "B": algebra, "R": matrix}
//! cosmash    {"C": coalgebra, "D": coalgebra, "W": matrix}
//! biproduct  {"H": bialgebra, "L": bialgebra, "R": matrix, "W": matrix}
//! witness    {"H", "K", "L": bialgebra, "iH", "iL", "pH", "pL": matrix}
//! hopfmod    {"H": hopf, "R", "action", "coaction": matrix, "dim"}
//! group      {"cayley": [[…], …], "names"?}
//! ```
//!
//! Tensors are flattened row-major: `mult` entry `(i, j, k, c)` means
//! `e_i e_j` has coefficient `c` on `e_k`; `comult` entry `(i, j, k, c)`
//! means `Δ(e_i)` has coefficient `c` on `e_j ⊗ e_k`; a map `V → W` is a
//! `dim W × dim V` matrix, and `V ⊗ W` has basis `v_a ⊗ w_b` at `a·dim W + b`.

use std::path::Path;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::biproduct::{BialgebraFactorisationWitness, BiproductData};
use crate::catalog::GroupTable;
use crate::cosmash::CosmashData;
use crate::field::{FieldSpec, Scalar};
use crate::hopfmod::TwistedHopfModule;
use crate::linalg::Matrix;
use crate::smash::SmashData;
use crate::structures::{BialgebraCandidate, FiniteDimAlgebra, FiniteDimCoalgebra, HopfAlgebra};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

fn schema<T>(path: &str, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Schema {
        path: path.to_string(),
        msg: msg.into(),
    })
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug)]
pub enum Document {
    Matrix(Matrix),
    Algebra(FiniteDimAlgebra),
    Coalgebra(FiniteDimCoalgebra),
    Bialgebra(BialgebraCandidate),
    Hopf(HopfAlgebra),
    Smash(SmashData),
    Cosmash(CosmashData),
    Biproduct(BiproductData),
    Witness(Box<BialgebraFactorisationWitness>),
    HopfModule(Box<TwistedHopfModule>),
    Group(GroupTable),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Matrix(_) => "matrix",
            Document::Algebra(_) => "algebra",
            Document::Coalgebra(_) => "coalgebra",
            Document::Bialgebra(_) => "bialgebra",
            Document::Hopf(_) => "hopf",
            Document::Smash(_) => "smash",
            Document::Cosmash(_) => "cosmash",
            Document::Biproduct(_) => "biproduct",
            Document::Witness(_) => "witness",
            Document::HopfModule(_) => "hopfmod",
            Document::Group(_) => "group",
        }
    }

    pub fn to_value(&self) -> Value {
        let mut v = match self {
            Document::Matrix(m) => {
                let mut v = matrix_value(m);
                v["field"] = json!(m.field());
                v
            }
            Document::Algebra(a) => algebra_value(a),
            Document::Coalgebra(c) => coalgebra_value(c),
            Document::Bialgebra(b) => bialgebra_value(b),
            Document::Hopf(h) => hopf_value(h),
            Document::Smash(d) => json!({"A": algebra_value(&d.a), "B": algebra_value(&d.b), "R": matrix_value(&d.r)}),
            Document::Cosmash(d) => {
                json!({"C": coalgebra_value(&d.c), "D": coalgebra_value(&d.d), "W": matrix_value(&d.w)})
            }
            Document::Biproduct(d) => json!({
                "H": bialgebra_value(&d.h), "L": bialgebra_value(&d.l),
                "R": matrix_value(&d.r), "W": matrix_value(&d.w),
            }),
            Document::Witness(w) => json!({
                "H": bialgebra_value(&w.h), "K": bialgebra_value(&w.k), "L": bialgebra_value(&w.l),
                "iH": matrix_value(&w.i_h), "iL": matrix_value(&w.i_l),
                "pH": matrix_value(&w.p_h), "pL": matrix_value(&w.p_l),
            }),
            Document::HopfModule(t) => json!({
                "H": hopf_value(&t.h), "R": matrix_value(&t.r), "action": matrix_value(&t.action),
                "coaction": matrix_value(&t.coaction), "dim": t.dim,
            }),
            Document::Group(g) => {
                let mut m = json!({"cayley": g.cayley});
                if let Some(n) = &g.names {
                    m["names"] = json!(n);
                }
                m
            }
        };
        v["format"] = json!(FORMAT_VERSION);
        v["kind"] = json!(self.kind());
        v
    }

    pub fn from_value(v: &Value) -> Result<Document, FormatError> {
        let top = obj(v, "$")?;
        match top.get("format") {
            Some(Value::Number(n)) if n.as_u64() == Some(FORMAT_VERSION) => {}
            Some(other) => {
                return schema(
                    "$.format",
                    format!("unsupported format {other}, expected {FORMAT_VERSION}"),
                )
            }
            None => return schema("$.format", "missing"),
        }
        let kind = match top.get("kind") {
            Some(_) => str_at(top, "kind", "$")?,
            None => infer_kind(top).map_or_else(|| schema("$.kind", "missing and not inferable from the keys"), Ok)?,
        };
        let p = "$";
        Ok(match kind {
            "matrix" => Document::Matrix(read_matrix(v, p, None)?),
            "algebra" => Document::Algebra(read_algebra(v, p, None)?),
            "coalgebra" => Document::Coalgebra(read_coalgebra(v, p, None)?),
            "bialgebra" => Document::Bialgebra(read_bialgebra(v, p, None)?),
            "hopf" => Document::Hopf(read_hopf(v, p, None)?),
            "smash" => {
                let a = read_algebra(get(top, "A", p)?, "$.A", None)?;
                let f = Some(a.field());
                let b = read_algebra(get(top, "B", p)?, "$.B", f)?;
                let r = read_matrix(get(top, "R", p)?, "$.R", f)?;
                Document::Smash(SmashData::new(a, b, r).or_else(|e| schema("$.R", e.to_string()))?)
            }
            "cosmash" => {
                let c = read_coalgebra(get(top, "C", p)?, "$.C", None)?;
                let f = Some(c.field());
                let d = read_coalgebra(get(top, "D", p)?, "$.D", f)?;
                let w = read_matrix(get(top, "W", p)?, "$.W", f)?;
                Document::Cosmash(CosmashData::new(c, d, w).or_else(|e| schema("$.W", e.to_string()))?)
            }
            "biproduct" => {
                let l = read_bialgebra(get(top, "L", p)?, "$.L", None)?;
                let f = Some(l.field());
                let h = read_bialgebra(get(top, "H", p)?, "$.H", f)?;
                let r = read_matrix(get(top, "R", p)?, "$.R", f)?;
                let w = read_matrix(get(top, "W", p)?, "$.W", f)?;
                Document::Biproduct(BiproductData::new(l, h, r, w).or_else(|e| schema("$", e.to_string()))?)
            }
            "witness" => {
                let k = read_bialgebra(get(top, "K", p)?, "$.K", None)?;
                let f = Some(k.field());
                let w = BialgebraFactorisationWitness {
                    l: read_bialgebra(get(top, "L", p)?, "$.L", f)?,
                    h: read_bialgebra(get(top, "H", p)?, "$.H", f)?,
                    i_l: read_matrix(get(top, "iL", p)?, "$.iL", f)?,
                    i_h: read_matrix(get(top, "iH", p)?, "$.iH", f)?,
                    p_l: read_matrix(get(top, "pL", p)?, "$.pL", f)?,
                    p_h: read_matrix(get(top, "pH", p)?, "$.pH", f)?,
                    k,
                };
                Document::Witness(Box::new(w))
            }
            "hopfmod" => {
                let h = read_hopf(get(top, "H", p)?, "$.H", None)?;
                let f = Some(h.field());
                let dim = usize_at(top, "dim", p)?;
                let t = TwistedHopfModule::new(
                    h,
                    dim,
                    read_matrix(get(top, "action", p)?, "$.action", f)?,
                    read_matrix(get(top, "coaction", p)?, "$.coaction", f)?,
                    read_matrix(get(top, "R", p)?, "$.R", f)?,
                )
                .or_else(|e| schema("$", e.to_string()))?;
                Document::HopfModule(Box::new(t))
            }
            "group" => {
                let cayley: Vec<Vec<usize>> = serde_json::from_value(get(top, "cayley", p)?.clone())
                    .or_else(|e| schema("$.cayley", e.to_string()))?;
                let mut g = GroupTable::from_cayley(cayley).or_else(|e| schema("$.cayley", e.to_string()))?;
                if let Some(n) = top.get("names") {
                    let names = read_names(n, "$.names", g.order)?;
                    g.names = Some(names);
                }
                Document::Group(g)
            }
            other => return schema("$.kind", format!("unknown kind {other:?}")),
        })
    }

    /// Canonical text: pretty-printed, keys sorted, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Document, FormatError> {
        let v: Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
        Document::from_value(&v)
    }

    pub fn load(path: &Path) -> Result<Document, FormatError> {
        let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        Document::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), FormatError> {
        std::fs::write(path, self.to_json()).map_err(|e| FormatError::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })
    }

    pub fn as_algebra(&self) -> Option<FiniteDimAlgebra> {
        match self {
            Document::Algebra(a) => Some(a.clone()),
            Document::Bialgebra(b) => Some(b.algebra.clone()),
            Document::Hopf(h) => Some(h.algebra().clone()),
            _ => None,
        }
    }

    pub fn as_coalgebra(&self) -> Option<FiniteDimCoalgebra> {
        match self {
            Document::Coalgebra(c) => Some(c.clone()),
            Document::Bialgebra(b) => Some(b.coalgebra.clone()),
            Document::Hopf(h) => Some(h.coalgebra().clone()),
            _ => None,
        }
    }

    pub fn as_bialgebra(&self) -> Option<BialgebraCandidate> {
        match self {
            Document::Bialgebra(b) => Some(b.clone()),
            Document::Hopf(h) => Some(h.bialgebra.clone()),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<Matrix> {
        match self {
            Document::Matrix(m) => Some(m.clone()),
            _ => None,
        }
    }
}

fn scalar_str(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

/// Matrix without a field key, as nested inside objects that carry one.
pub fn matrix_value(m: &Matrix) -> Value {
    let entries: Vec<Value> = m
        .nonzeros()
        .map(|(r, c, v)| json!({"r": r, "c": c, "v": scalar_str(v)}))
        .collect();
    json!({"cols": m.cols(), "entries": entries, "rows": m.rows()})
}

fn tensor_entries(n: usize, at: impl Fn(usize, usize, usize) -> Scalar) -> Vec<Value> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = at(i, j, k);
                if !v.is_zero() {
                    out.push(json!({"i": i, "j": j, "k": k, "c": scalar_str(&v)}));
                }
            }
        }
    }
    out
}

fn common_fields(field: FieldSpec, dim: usize, names: Option<&[String]>, m: &mut Map<String, Value>) {
    m.insert("dim".into(), json!(dim));
    m.insert("field".into(), json!(field));
    if let Some(n) = names {
        m.insert("basis_names".into(), json!(n));
    }
}

fn algebra_fields(a: &FiniteDimAlgebra, m: &mut Map<String, Value>) {
    common_fields(a.field(), a.dim(), a.basis_names(), m);
    m.insert(
        "mult".into(),
        Value::Array(tensor_entries(a.dim(), |i, j, k| a.m(i, j, k).clone())),
    );
    m.insert("unit".into(), Value::Array(a.unit().iter().map(scalar_str).collect()));
}

fn coalgebra_fields(c: &FiniteDimCoalgebra, m: &mut Map<String, Value>) {
    common_fields(c.field(), c.dim(), c.basis_names(), m);
    m.insert(
        "comult".into(),
        Value::Array(tensor_entries(c.dim(), |i, j, k| c.c(i, j, k).clone())),
    );
    m.insert(
        "counit".into(),
        Value::Array(c.counit().iter().map(scalar_str).collect()),
    );
}

pub fn algebra_value(a: &FiniteDimAlgebra) -> Value {
    let mut m = Map::new();
    algebra_fields(a, &mut m);
    Value::Object(m)
}

pub fn coalgebra_value(c: &FiniteDimCoalgebra) -> Value {
    let mut m = Map::new();
    coalgebra_fields(c, &mut m);
    Value::Object(m)
}

pub fn bialgebra_value(b: &BialgebraCandidate) -> Value {
    let mut m = Map::new();
    coalgebra_fields(&b.coalgebra, &mut m);
    algebra_fields(&b.algebra, &mut m);
    Value::Object(m)
}

pub fn hopf_value(h: &HopfAlgebra) -> Value {
    let mut v = bialgebra_value(&h.bialgebra);
    v["antipode"] = matrix_value(&h.antipode);
    v
}

/// Kind of a document without a `"kind"` key, from the keys it has.
fn infer_kind(m: &Map<String, Value>) -> Option<&'static str> {
    let has = |k: &str| m.contains_key(k);
    Some(if has("K") {
        "witness"
    } else if has("action") {
        "hopfmod"
    } else if has("L") {
        "biproduct"
    } else if has("A") {
        "smash"
    } else if has("C") {
        "cosmash"
    } else if has("cayley") {
        "group"
    } else if has("rows") {
        "matrix"
    } else if has("mult") && has("comult") {
        if has("antipode") {
            "hopf"
        } else {
            "bialgebra"
        }
    } else if has("mult") {
        "algebra"
    } else if has("comult") {
        "coalgebra"
    } else {
        return None;
    })
}

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, FormatError> {
    v.as_object().map_or_else(|| schema(path, "expected an object"), Ok)
}

fn get<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, FormatError> {
    m.get(key)
        .map_or_else(|| schema(&format!("{path}.{key}"), "missing"), Ok)
}

fn str_at<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a str, FormatError> {
    get(m, key, path)?
        .as_str()
        .map_or_else(|| schema(&format!("{path}.{key}"), "expected a string"), Ok)
}

fn as_index(v: &Value, path: &str) -> Result<usize, FormatError> {
    v.as_u64()
        .map_or_else(|| schema(path, "expected a non-negative integer"), |n| Ok(n as usize))
}

fn usize_at(m: &Map<String, Value>, key: &str, path: &str) -> Result<usize, FormatError> {
    as_index(get(m, key, path)?, &format!("{path}.{key}"))
}

fn parse_field(v: &Value, path: &str, expected: Option<FieldSpec>) -> Result<FieldSpec, FormatError> {
    let f: FieldSpec = serde_json::from_value(v.clone()).or_else(|e| schema(path, e.to_string()))?;
    match expected {
        Some(e) if e != f => schema(path, format!("mixed fields: {f} where {e} was expected")),
        _ => Ok(f),
    }
}

fn read_field(m: &Map<String, Value>, path: &str, expected: Option<FieldSpec>) -> Result<FieldSpec, FormatError> {
    parse_field(get(m, "field", path)?, &format!("{path}.field"), expected)
}

fn read_scalar(v: &Value, f: FieldSpec, path: &str) -> Result<Scalar, FormatError> {
    match v {
        Value::String(s) => f.parse(s).or_else(|e| schema(path, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(f.from_i64(n.as_i64().unwrap())),
        _ => schema(path, "expected a scalar string such as \"-1/2\""),
    }
}

fn read_vector(v: &Value, f: FieldSpec, n: usize, path: &str) -> Result<Vec<Scalar>, FormatError> {
    let arr = v.as_array().map_or_else(|| schema(path, "expected an array"), Ok)?;
    if arr.len() != n {
        return schema(path, format!("expected {n} entries, found {}", arr.len()));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| read_scalar(x, f, &format!("{path}[{i}]")))
        .collect()
}

fn read_names(v: &Value, path: &str, n: usize) -> Result<Vec<String>, FormatError> {
    let names: Vec<String> = serde_json::from_value(v.clone()).or_else(|e| schema(path, e.to_string()))?;
    if names.len() != n {
        return schema(path, format!("expected {n} names, found {}", names.len()));
    }
    Ok(names)
}

/// Sparse entries `{idx₁: …, idx₂: …, value_key: "v"}` with each index
/// below its bound.
fn read_entries(
    v: &Value,
    f: FieldSpec,
    bounds: &[(&str, usize)],
    value_key: &str,
    path: &str,
    mut put: impl FnMut(&[usize], Scalar),
) -> Result<(), FormatError> {
    let arr = v
        .as_array()
        .map_or_else(|| schema(path, "expected an array of entries"), Ok)?;
    let mut idx = Vec::with_capacity(bounds.len());
    for (e, entry) in arr.iter().enumerate() {
        let p = format!("{path}[{e}]");
        let m = obj(entry, &p)?;
        idx.clear();
        for &(key, bound) in bounds {
            let i = usize_at(m, key, &p)?;
            if i >= bound {
                return schema(&format!("{p}.{key}"), format!("index {i} out of range (< {bound})"));
            }
            idx.push(i);
        }
        put(
            &idx,
            read_scalar(get(m, value_key, &p)?, f, &format!("{p}.{value_key}"))?,
        );
    }
    Ok(())
}

/// A matrix; `field` is taken from the object when present (and must then
/// agree with `expected`), otherwise from `expected`.
pub fn read_matrix(v: &Value, path: &str, expected: Option<FieldSpec>) -> Result<Matrix, FormatError> {
    let m = obj(v, path)?;
    let f = match (m.get("field"), expected) {
        (Some(fv), _) => parse_field(fv, &format!("{path}.field"), expected)?,
        (None, Some(e)) => e,
        (None, None) => return schema(&format!("{path}.field"), "missing"),
    };
    let rows = usize_at(m, "rows", path)?;
    let cols = usize_at(m, "cols", path)?;
    let mut out = Matrix::zeros(f, rows, cols);
    read_entries(
        get(m, "entries", path)?,
        f,
        &[("r", rows), ("c", cols)],
        "v",
        &format!("{path}.entries"),
        |i, s| out.set(i[0], i[1], s),
    )?;
    Ok(out)
}

fn read_tensor(
    m: &Map<String, Value>,
    key: &str,
    f: FieldSpec,
    n: usize,
    path: &str,
) -> Result<Vec<Scalar>, FormatError> {
    let mut t = vec![f.zero(); n * n * n];
    read_entries(
        get(m, key, path)?,
        f,
        &[("i", n), ("j", n), ("k", n)],
        "c",
        &format!("{path}.{key}"),
        |i, s| t[(i[0] * n + i[1]) * n + i[2]] = s,
    )?;
    Ok(t)
}

fn maybe_names(m: &Map<String, Value>, path: &str, n: usize) -> Result<Option<Vec<String>>, FormatError> {
    m.get("basis_names")
        .filter(|v| !v.is_null())
        .map(|v| read_names(v, &format!("{path}.basis_names"), n))
        .transpose()
}

pub fn read_algebra(v: &Value, path: &str, expected: Option<FieldSpec>) -> Result<FiniteDimAlgebra, FormatError> {
    let m = obj(v, path)?;
    let f = read_field(m, path, expected)?;
    let n = usize_at(m, "dim", path)?;
    let mult = read_tensor(m, "mult", f, n, path)?;
    let unit = read_vector(get(m, "unit", path)?, f, n, &format!("{path}.unit"))?;
    let a = FiniteDimAlgebra::new(f, n, mult, unit).or_else(|e| schema(path, e.to_string()))?;
    Ok(match maybe_names(m, path, n)? {
        Some(names) => a.with_names(names),
        None => a,
    })
}

pub fn read_coalgebra(v: &Value, path: &str, expected: Option<FieldSpec>) -> Result<FiniteDimCoalgebra, FormatError> {
    let m = obj(v, path)?;
    let f = read_field(m, path, expected)?;
    let n = usize_at(m, "dim", path)?;
    let comult = read_tensor(m, "comult", f, n, path)?;
    let counit = read_vector(get(m, "counit", path)?, f, n, &format!("{path}.counit"))?;
    let c = FiniteDimCoalgebra::new(f, n, comult, counit).or_else(|e| schema(path, e.to_string()))?;
    Ok(match maybe_names(m, path, n)? {
        Some(names) => c.with_names(names),
        None => c,
    })
}

pub fn read_bialgebra(v: &Value, path: &str, expected: Option<FieldSpec>) -> Result<BialgebraCandidate, FormatError> {
    let a = read_algebra(v, path, expected)?;
    let c = read_coalgebra(v, path, Some(a.field()))?;
    BialgebraCandidate::new(a, c).or_else(|e| schema(path, e.to_string()))
}

pub fn read_hopf(v: &Value, path: &str, expected: Option<FieldSpec>) -> Result<HopfAlgebra, FormatError> {
    let b = read_bialgebra(v, path, expected)?;
    let m = obj(v, path)?;
    let s = read_matrix(get(m, "antipode", path)?, &format!("{path}.antipode"), Some(b.field()))?;
    HopfAlgebra::new(b, s).or_else(|e| schema(&format!("{path}.antipode"), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sweedler;

    #[test]
    fn hopf_round_trip_is_byte_identical() {
        let h = Document::Hopf(sweedler().k);
        let text = h.to_json();
        let back = Document::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert!(text.contains("\"format\": 1"));
        assert!(text.contains("\"basis_names\""));
        let Document::Hopf(k) = back else { panic!("kind") };
        assert_eq!(k, sweedler().k);
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let m = Matrix::identity(FieldSpec::RATIONAL, 2);
        let mut v = Document::Matrix(m).to_value();
        v["entries"][1]["r"] = json!(2);
        let err = Document::from_value(&v).unwrap_err();
        assert_eq!(
            err,
            FormatError::Schema {
                path: "$.entries[1].r".into(),
                msg: "index 2 out of range (< 2)".into()
            }
        );
    }

    #[test]
    fn rejects_mixed_fields() {
        let q = FieldSpec::RATIONAL;
        let a = crate::classify::kc2_algebra(q);
        let d = SmashData::new(a.clone(), a, crate::linalg::switch(2, 2, q)).unwrap();
        let mut v = Document::Smash(d).to_value();
        v["B"]["field"] = json!({"kind": "prime", "p": 3});
        match Document::from_value(&v).unwrap_err() {
            FormatError::Schema { path, msg } => {
                assert_eq!(path, "$.B.field");
                assert!(msg.contains("mixed fields"));
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn rejects_bad_scalars_and_versions() {
        let m = Matrix::identity(FieldSpec::prime(5).unwrap(), 1);
        let mut v = Document::Matrix(m).to_value();
        v["entries"][0]["v"] = json!("1/x");
        assert!(matches!(Document::from_value(&v), Err(FormatError::Schema { path, .. }) if path == "$.entries[0].v"));
        v["format"] = json!(2);
        assert!(matches!(Document::from_value(&v), Err(FormatError::Schema { path, .. }) if path == "$.format"));
        assert!(matches!(Document::from_json("{"), Err(FormatError::Json(_))));
    }

    #[test]
    fn every_kind_round_trips() {
        let s = sweedler();
        let q = FieldSpec::RATIONAL;
        let d = crate::biproduct::BiproductData::new(
            s.witness.l.clone(),
            s.witness.h.clone(),
            Matrix::identity(q, 4),
            Matrix::identity(q, 4),
        )
        .unwrap();
        let docs = vec![
            Document::Algebra(s.k.algebra().clone()),
            Document::Coalgebra(s.k.coalgebra().clone()),
            Document::Bialgebra(s.k.bialgebra.clone()),
            Document::Biproduct(d),
            Document::Witness(Box::new(s.witness.clone())),
            Document::HopfModule(Box::new(
                TwistedHopfModule::regular(&s.k, crate::hopfmod::r_switch(&s.k)).unwrap(),
            )),
            Document::Group(GroupTable::symmetric3()),
            Document::Cosmash(
                CosmashData::new(
                    s.k.coalgebra().clone(),
                    s.k.coalgebra().clone(),
                    Matrix::identity(q, 16),
                )
                .unwrap(),
            ),
        ];
        for d in docs {
            let text = d.to_json();
            let back = Document::from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", d.kind()));
            assert_eq!(back.kind(), d.kind());
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn hand_written_algebra_without_kind() {
        let text = r#"{"format": 1, "field": {"kind": "prime", "p": 3}, "dim": 2,
            "unit": ["1", "0"],
            "mult": [{"i":0,"j":0,"k":0,"c":"1"}, {"i":0,"j":1,"k":1,"c":"1"},
                     {"i":1,"j":0,"k":1,"c":"1"}, {"i":1,"j":1,"k":0,"c":"1"}]}"#;
        let d = Document::from_json(text).unwrap();
        assert_eq!(d.kind(), "algebra");
        assert!(d.as_algebra().unwrap().check().passed());
    }
}
