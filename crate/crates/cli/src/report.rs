//! Deterministic machine-readable reports: a tool stamp, the input digest,
//! one record per executed check (stable name + the law it verifies), and a
//! derived-data summary. Reports on identical inputs are byte-identical;
//! scalars appear as exact fraction strings.

use anyhow::Result;
use serde_json::{json, Map, Value};

use qhg_core::dual::{build_dual, DualError};
use qhg_core::hypergroup::{PipelineError, Side};
use qhg_core::report::{CheckRecord, CheckStatus};
use qhg_core::{checks, QuantumHypergroup};

use crate::schema::{matrix_to_json, scalar_to_json, vector_to_json};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Axioms,
    Derived,
    Full,
}

impl Level {
    pub fn parse(s: &str) -> Option<Level> {
        match s {
            "axioms" => Some(Level::Axioms),
            "derived" => Some(Level::Derived),
            "full" => Some(Level::Full),
            _ => None,
        }
    }
}

fn record_to_json(r: &CheckRecord) -> Value {
    let mut map = Map::new();
    map.insert("name".into(), json!(r.check.name));
    map.insert("law".into(), json!(r.check.law));
    map.insert(
        "status".into(),
        json!(match r.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        }),
    );
    if let Some(w) = &r.witness {
        map.insert("witness".into(), json!(w));
    }
    Value::Object(map)
}

fn pipeline_error_record(e: &PipelineError) -> Value {
    json!({
        "name": e.check.name,
        "law": e.check.law,
        "status": "fail",
        "witness": e.witness,
    })
}

fn dual_error_records(e: &DualError) -> Vec<Value> {
    let rec = |check: &checks::Check, witness: String| {
        json!({
            "name": check.name,
            "law": check.law,
            "status": "fail",
            "witness": witness,
        })
    };
    match e {
        DualError::Pipeline(inner) => vec![rec(
            &checks::DUAL_PIPELINE,
            format!("dual fails '{}': {}", inner.check.name, inner.witness),
        )],
        DualError::AntipodeTranspose => vec![rec(
            &checks::DUAL_ANTIPODE_TRANSPOSE,
            String::from("derived dual antipode differs from ω ↦ ω∘S"),
        )],
        DualError::UnitMismatch => vec![rec(
            &checks::DUAL_UNIT_IS_COUNIT,
            String::from("unit of the dual differs from ε"),
        )],
    }
}

fn derived_summary(h: &QuantumHypergroup) -> Value {
    let d = h.derived();
    let t = h.classify_type();
    let left: Vec<Value> = h
        .cointegral_space(Side::Left)
        .iter()
        .map(|v| vector_to_json(v))
        .collect();
    let right: Vec<Value> = h
        .cointegral_space(Side::Right)
        .iter()
        .map(|v| vector_to_json(v))
        .collect();
    json!({
        "dim": h.dim(),
        "labels": h.algebra().labels(),
        "delta": vector_to_json(&d.delta),
        "delta_inv": vector_to_json(&d.delta_inv),
        "tau": scalar_to_json(&d.tau),
        "sigma": matrix_to_json(&d.sigma),
        "sigma_prime": matrix_to_json(&d.sigma_prime),
        "antipode": matrix_to_json(&d.antipode),
        "right_integral": vector_to_json(&d.psi),
        "type": {
            "compact": t.compact,
            "discrete": t.discrete,
            "finite": t.finite,
        },
        "coproduct_homomorphism": h.coproduct_is_homomorphism(),
        "cointegrals": { "left": left, "right": right },
    })
}

/// Records for every check at the requested level; the boolean is the
/// overall pass flag.
pub fn collect_checks(h: &QuantumHypergroup, level: Level) -> (Vec<Value>, bool) {
    let mut records: Vec<CheckRecord> = Vec::new();
    let mut extra: Vec<Value> = Vec::new();

    records.extend(h.algebra().check_associativity().records);
    records.extend(h.algebra().check_nondegenerate().records);
    if h.algebra().has_star() {
        records.extend(h.algebra().check_star().expect("star present").records);
    }
    records.extend(h.data().verify_comultiplication().records);
    records.extend(h.data().verify_counit().records);
    records.extend(h.data().verify_integral().records);

    if level != Level::Axioms {
        records.extend(h.verify_structural_relations().records);
        records.extend(h.verify_type().records);
        records.extend(h.verify_hopf_conditions().records);
        if h.algebra().has_star() {
            records.extend(h.verify_star_axioms().expect("star present").records);
        }
    }

    if level == Level::Full {
        match build_dual(h) {
            Ok(pkg) => {
                extra.push(json!({
                    "name": checks::DUAL_PIPELINE.name,
                    "law": checks::DUAL_PIPELINE.law,
                    "status": "pass",
                }));
                extra.push(json!({
                    "name": checks::DUAL_ANTIPODE_TRANSPOSE.name,
                    "law": checks::DUAL_ANTIPODE_TRANSPOSE.law,
                    "status": "pass",
                }));
                extra.push(json!({
                    "name": checks::DUAL_UNIT_IS_COUNIT.name,
                    "law": checks::DUAL_UNIT_IS_COUNIT.law,
                    "status": "pass",
                }));
                records.extend(pkg.check_product_formulas().records);
                records.extend(pkg.check_slice_formulas().records);
                records.extend(pkg.check_action_compatibility().records);
                match pkg.bidual_check() {
                    Ok(r) => records.extend(r.records),
                    Err(e) => extra.extend(dual_error_records(&e)),
                }
                records.extend(pkg.dual_data_check().records);
                records.extend(pkg.radford_check().records);
                records.extend(pkg.compact_discrete_duality_check().records);
            }
            Err(e) => extra.extend(dual_error_records(&e)),
        }
    }

    let mut ok = records.iter().all(CheckRecord::passed);
    let mut out: Vec<Value> = records.iter().map(record_to_json).collect();
    for e in extra {
        if e.get("status").and_then(Value::as_str) == Some("fail") {
            ok = false;
        }
        out.push(e);
    }
    (out, ok)
}

/// Full report document for a verified hypergroup.
pub fn verification_report(h: &QuantumHypergroup, level: Level, digest: &str) -> (Value, bool) {
    let (checks, ok) = collect_checks(h, level);
    let mut doc = json!({
        "tool": { "name": "qhg", "version": env!("CARGO_PKG_VERSION") },
        "input_digest": digest,
        "checks": checks,
        "derived": derived_summary(h),
        "status": if ok { "pass" } else { "fail" },
    });
    if level == Level::Full {
        doc.as_object_mut().expect("report is an object").insert(
            "notes".into(),
            json!([
                "multiplier algebras coincide with the algebras in finite dimension; \
                    duals and their functionals are computed without any extension step"
            ]),
        );
    }
    (doc, ok)
}

/// Report document for input that failed the pipeline: a single fail record
/// naming the first violated law.
pub fn failure_report(e: &PipelineError, digest: &str) -> Value {
    json!({
        "tool": { "name": "qhg", "version": env!("CARGO_PKG_VERSION") },
        "input_digest": digest,
        "checks": [pipeline_error_record(e)],
        "status": "fail",
    })
}

pub fn to_stdout_or_file(doc: &Value, out: Option<&std::path::Path>) -> Result<()> {
    let rendered = serde_json::to_string_pretty(doc)?;
    match out {
        Some(path) => std::fs::write(path, rendered + "\n")?,
        None => println!("{rendered}"),
    }
    Ok(())
}
