//! JSON schemas for scalars, algebras, hypergroups, groups and subgroups.
//!
//! Layouts:
//! - structure algebra: `{"dim": n, "labels": [...], "mult": [[[scalar]]],
//!   "star": {"matrix": [[scalar]]}?}` with `mult[i][j]` the coefficient
//!   list of `e_i·e_j`;
//! - hypergroup: `{"algebra": ..., "comult": [[scalar x n²] x n],
//!   "counit": [scalar x n], "left_integral": [scalar x n],
//!   "antipode": [[scalar]]?, "pairing": [[scalar]]?}` where `comult[j]` is
//!   the flattened tensor `Δ(e_j)` and a supplied antipode is verified
//!   against the derived one rather than trusted ("pairing" appears on
//!   emitted duals and is ignored on input);
//! - group: `{"elements": [...], "table": [[int]]}`; subgroup:
//!   `{"members": [...]}` with labels or indices.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use qhg_core::group::FiniteGroup;
use qhg_core::hypergroup::{HypergroupData, PipelineError};
use qhg_core::linalg::{Matrix, Vector};
use qhg_core::scalar::{parse_rational, rational_string, Rational, Scalar};
use qhg_core::{QuantumHypergroup, StructureAlgebra};

pub fn scalar_to_json(s: &Scalar) -> Value {
    if s.is_real() {
        Value::String(rational_string(&s.re))
    } else {
        json!({
            "re": rational_string(&s.re),
            "im": rational_string(&s.im),
        })
    }
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| anyhow!("scalars must be exact: got {n}"))?;
            Ok(Rational::from_integer(i.into()))
        }
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| anyhow!("not a rational string: {s:?}"))
        }
        other => bail!("expected a rational, got {other}"),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(_) | Value::String(_) => Ok(Scalar::new(
            rational_from_json(v)?,
            Rational::from_integer(0.into()),
        )),
        Value::Object(map) => {
            let re = match map.get("re") {
                Some(r) => rational_from_json(r)?,
                None => Rational::from_integer(0.into()),
            };
            let im = match map.get("im") {
                Some(r) => rational_from_json(r)?,
                None => Rational::from_integer(0.into()),
            };
            Ok(Scalar::new(re, im))
        }
        other => bail!("expected a scalar, got {other}"),
    }
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(v: &Value) -> Result<Vector> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected an array of scalars"))?
        .iter()
        .map(scalar_from_json)
        .collect()
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(&m.row(i))).collect())
}

pub fn matrix_from_json(v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let data = v
        .as_array()
        .ok_or_else(|| anyhow!("expected a matrix (array of rows)"))?;
    if data.len() != rows {
        bail!("matrix has {} rows, expected {rows}", data.len());
    }
    let mut out = Vec::with_capacity(rows);
    for row in data {
        let row = vector_from_json(row)?;
        if row.len() != cols {
            bail!("matrix row has {} entries, expected {cols}", row.len());
        }
        out.push(row);
    }
    Ok(Matrix::from_rows(out))
}

pub fn algebra_to_json(alg: &StructureAlgebra) -> Value {
    let n = alg.dim();
    let mult: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                (0..n)
                    .map(|j| vector_to_json(alg.basis_product(i, j)))
                    .collect(),
            )
        })
        .collect();
    let mut map = Map::new();
    map.insert("dim".into(), json!(n));
    map.insert("labels".into(), json!(alg.labels()));
    map.insert("mult".into(), Value::Array(mult));
    if let Some(k) = alg.star_matrix() {
        map.insert("star".into(), json!({ "matrix": matrix_to_json(k) }));
    }
    Value::Object(map)
}

pub fn algebra_from_json(v: &Value) -> Result<StructureAlgebra> {
    let obj = v
        .as_object()
        .ok_or_else(|| anyhow!("expected an algebra object"))?;
    let labels: Vec<String> = obj
        .get("labels")
        .ok_or_else(|| anyhow!("algebra is missing \"labels\""))?
        .as_array()
        .ok_or_else(|| anyhow!("\"labels\" must be an array"))?
        .iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| anyhow!("labels must be strings"))
        })
        .collect::<Result<_>>()?;
    let n = labels.len();
    if let Some(d) = obj.get("dim") {
        if d.as_u64() != Some(n as u64) {
            bail!("\"dim\" disagrees with the number of labels");
        }
    }
    let mult_json = obj
        .get("mult")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("algebra is missing \"mult\""))?;
    if mult_json.len() != n {
        bail!("\"mult\" must have {n} rows");
    }
    let mut mult = Vec::with_capacity(n);
    for row in mult_json {
        let row = row
            .as_array()
            .ok_or_else(|| anyhow!("\"mult\" rows must be arrays"))?;
        if row.len() != n {
            bail!("\"mult\" rows must have {n} entries");
        }
        let mut out = Vec::with_capacity(n);
        for cell in row {
            let coeffs = vector_from_json(cell)?;
            if coeffs.len() != n {
                bail!("\"mult\" coefficient lists must have length {n}");
            }
            out.push(coeffs);
        }
        mult.push(out);
    }
    let star = match obj.get("star") {
        Some(star) => {
            let m = star
                .get("matrix")
                .ok_or_else(|| anyhow!("\"star\" needs a \"matrix\" field"))?;
            Some(matrix_from_json(m, n, n)?)
        }
        None => None,
    };
    StructureAlgebra::new(labels, mult, star).map_err(|e| anyhow!("{e}"))
}

pub fn hypergroup_to_json(h: &QuantumHypergroup) -> Value {
    let n = h.dim();
    let comult: Vec<Value> = (0..n)
        .map(|j| vector_to_json(&h.comult_matrix().column(j)))
        .collect();
    let mut map = Map::new();
    map.insert("algebra".into(), algebra_to_json(h.algebra()));
    map.insert("comult".into(), Value::Array(comult));
    map.insert("counit".into(), vector_to_json(h.counit()));
    map.insert("left_integral".into(), vector_to_json(h.left_integral()));
    map.insert("antipode".into(), matrix_to_json(h.antipode()));
    Value::Object(map)
}

/// Raw hypergroup data plus an optionally declared antipode.
pub struct ParsedHypergroup {
    pub data: HypergroupData,
    pub declared_antipode: Option<Matrix>,
}

pub fn hypergroup_data_from_json(v: &Value) -> Result<ParsedHypergroup> {
    let obj = v
        .as_object()
        .ok_or_else(|| anyhow!("expected a hypergroup object"))?;
    let alg = algebra_from_json(
        obj.get("algebra")
            .ok_or_else(|| anyhow!("hypergroup is missing \"algebra\""))?,
    )?;
    let n = alg.dim();
    let comult_rows = obj
        .get("comult")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("hypergroup is missing \"comult\""))?;
    if comult_rows.len() != n {
        bail!("\"comult\" must list {n} basis images");
    }
    let mut comult = Matrix::zero(n * n, n);
    for (j, row) in comult_rows.iter().enumerate() {
        let flat = vector_from_json(row)?;
        if flat.len() != n * n {
            bail!("comult[{j}] must have {} entries", n * n);
        }
        for (r, val) in flat.into_iter().enumerate() {
            comult[(r, j)] = val;
        }
    }
    let counit = vector_from_json(
        obj.get("counit")
            .ok_or_else(|| anyhow!("hypergroup is missing \"counit\""))?,
    )?;
    let integral = vector_from_json(
        obj.get("left_integral")
            .ok_or_else(|| anyhow!("hypergroup is missing \"left_integral\""))?,
    )?;
    let declared_antipode = match obj.get("antipode") {
        Some(a) => Some(matrix_from_json(a, n, n)?),
        None => None,
    };
    let data = HypergroupData::new(alg, comult, counit, integral).map_err(|e| anyhow!("{e}"))?;
    Ok(ParsedHypergroup {
        data,
        declared_antipode,
    })
}

/// Parses and runs the full pipeline. The outer error is a schema problem;
/// the inner one a verification failure.
pub fn import_hypergroup(v: &Value) -> Result<Result<QuantumHypergroup, PipelineError>> {
    let parsed = hypergroup_data_from_json(v)?;
    Ok(parsed.data.derive(parsed.declared_antipode.as_ref()))
}

pub fn group_from_json(v: &Value) -> Result<FiniteGroup> {
    let obj = v
        .as_object()
        .ok_or_else(|| anyhow!("expected a group object"))?;
    let labels: Vec<String> = obj
        .get("elements")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("group is missing \"elements\""))?
        .iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| anyhow!("element labels must be strings"))
        })
        .collect::<Result<_>>()?;
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            bail!("duplicate element label {l:?}");
        }
    }
    let table: Vec<Vec<usize>> = obj
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("group is missing \"table\""))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| anyhow!("table rows must be arrays"))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|v| v as usize)
                        .ok_or_else(|| anyhow!("table entries must be indices"))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    FiniteGroup::from_table(labels, table).map_err(|e| anyhow!("{e}"))
}

pub fn subgroup_from_json(v: &Value, group: &FiniteGroup) -> Result<Vec<usize>> {
    let members: Vec<String> = v
        .as_object()
        .and_then(|o| o.get("members"))
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("subgroup file needs a \"members\" array"))?
        .iter()
        .map(|m| match m {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            other => bail!("subgroup members must be labels or indices, got {other}"),
        })
        .collect::<Result<_>>()?;
    group.resolve_members(&members).map_err(|e| anyhow!("{e}"))
}

pub fn read_json(path: &std::path::Path) -> Result<(Value, String)> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let value = serde_json::from_slice(&bytes)
        .with_context(|| format!("{} is not valid JSON", path.display()))?;
    Ok((value, crate::digest(&bytes)))
}
