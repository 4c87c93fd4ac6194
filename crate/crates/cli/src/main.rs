//! `qhg`: build, verify and dualize exact quantum hypergroups.
//!
//! Exit codes: 0 when every executed check passed, 1 on a verification
//! failure (the report names the first violated law and a witness), 2 on
//! input errors (unreadable files, invalid JSON, malformed tables).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qhg::report::{self, Level};
use qhg::schema;
use qhg_core::constructions::{self, BuildError};
use qhg_core::dual::build_dual;
use qhg_core::hypergroup::Side;
use qhg_core::linalg::Vector;
use qhg_core::QuantumHypergroup;

#[derive(Parser)]
#[command(
    name = "qhg",
    version,
    about = "exact engine for algebraic quantum hypergroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a hypergroup from group data and write it as JSON.
    Build(BuildArgs),
    /// Run the verification suite on a hypergroup file.
    Verify {
        file: PathBuf,
        /// axioms | derived | full
        #[arg(long, default_value = "full")]
        level: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct the dual and emit it (with the pairing) as JSON.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the bidual isomorphism for a hypergroup file.
    Bidual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the derived data (modular element and automorphisms, scaling
    /// constant, types, co-integrals) of a hypergroup file.
    Report {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BuildArgs {
    /// double-coset | group-algebra | function-algebra | compression
    kind: String,
    #[arg(long)]
    group: Option<PathBuf>,
    #[arg(long)]
    subgroup: Option<PathBuf>,
    /// Source hypergroup file (for compression).
    #[arg(long)]
    algebra: Option<PathBuf>,
    /// Projection for compression: `hecke:<subgroup.json>` or a JSON file
    /// with a "vector" field.
    #[arg(long)]
    unit: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Outcome distinguishing validation failures (exit 1) from input errors
/// (exit 2, via `anyhow`).
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Build(args) => cmd_build(args),
        Command::Verify { file, level, out } => cmd_verify(&file, &level, out.as_deref()),
        Command::Dual { file, out } => cmd_dual(&file, out.as_deref()),
        Command::Bidual { file, out } => cmd_bidual(&file, out.as_deref()),
        Command::Report { file, out } => cmd_report(&file, out.as_deref()),
    }
}

fn load_group(path: Option<&Path>) -> Result<qhg_core::FiniteGroup> {
    let path = path.ok_or_else(|| anyhow!("this build kind needs --group"))?;
    let (value, _) = schema::read_json(path)?;
    schema::group_from_json(&value)
}

/// Describes a validated hypergroup the way `build` summarizes it.
fn summary_line(h: &QuantumHypergroup) -> String {
    let t = h.classify_type();
    let ty = if t.finite {
        "finite"
    } else if t.compact {
        "compact"
    } else if t.discrete {
        "discrete"
    } else {
        "none"
    };
    format!(
        "hypergroup: dim={} type={} Δ-hom={}",
        h.dim(),
        ty,
        if h.coproduct_is_homomorphism() {
            "yes"
        } else {
            "no"
        }
    )
}

fn build_failure(e: BuildError) -> Result<Outcome> {
    match e {
        BuildError::Group(g) => Err(anyhow!("{g}")),
        BuildError::Algebra(a) => Err(anyhow!("{a}")),
        other => {
            eprintln!("validation failed: {other}");
            Ok(Outcome::Fail)
        }
    }
}

fn resolve_compression_unit(h: &QuantumHypergroup, spec: &str) -> Result<Vector> {
    if let Some(subgroup_path) = spec.strip_prefix("hecke:") {
        let (value, _) = schema::read_json(Path::new(subgroup_path))?;
        let members: Vec<String> = value
            .get("members")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("subgroup file needs a \"members\" array"))?
            .iter()
            .map(|m| match m {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                other => bail!("subgroup members must be labels or indices, got {other}"),
            })
            .collect::<Result<_>>()?;
        if members.is_empty() {
            bail!("subgroup file lists no members");
        }
        // Accept both raw group labels and the λ(...) wrapping used by
        // emitted group algebras.
        let labels = h.algebra().labels();
        let mut unit = qhg_core::linalg::zeros(h.dim());
        let weight = qhg_core::Scalar::from_ratio(1, members.len() as i64);
        for m in &members {
            let idx = labels
                .iter()
                .position(|l| l == m || *l == format!("λ({m})"))
                .or_else(|| m.parse::<usize>().ok().filter(|&i| i < h.dim()))
                .ok_or_else(|| anyhow!("unknown basis label {m:?}"))?;
            unit[idx] = weight.clone();
        }
        Ok(unit)
    } else {
        let (value, _) = schema::read_json(Path::new(spec))?;
        let v = value
            .get("vector")
            .ok_or_else(|| anyhow!("projection file needs a \"vector\" field"))?;
        let unit = schema::vector_from_json(v)?;
        if unit.len() != h.dim() {
            bail!(
                "projection vector has length {}, expected {}",
                unit.len(),
                h.dim()
            );
        }
        Ok(unit)
    }
}

fn cmd_build(args: BuildArgs) -> Result<Outcome> {
    let built = match args.kind.as_str() {
        "double-coset" => {
            let group = load_group(args.group.as_deref())?;
            let sub_path = args
                .subgroup
                .as_deref()
                .ok_or_else(|| anyhow!("double-coset needs --subgroup"))?;
            let (value, _) = schema::read_json(sub_path)?;
            let subgroup = schema::subgroup_from_json(&value, &group)?;
            constructions::double_coset_hypergroup(&group, &subgroup)
        }
        "group-algebra" => {
            let group = load_group(args.group.as_deref())?;
            constructions::group_algebra_hopf(&group)
        }
        "function-algebra" => {
            let group = load_group(args.group.as_deref())?;
            constructions::function_algebra(&group)
        }
        "compression" => {
            let source_path = args
                .algebra
                .as_deref()
                .ok_or_else(|| anyhow!("compression needs --algebra"))?;
            let (value, digest) = schema::read_json(source_path)?;
            let source = match schema::import_hypergroup(&value)? {
                Ok(h) => h,
                Err(e) => {
                    report::to_stdout_or_file(&report::failure_report(&e, &digest), None)?;
                    return Ok(Outcome::Fail);
                }
            };
            let unit_spec = args
                .unit
                .as_deref()
                .ok_or_else(|| anyhow!("compression needs --unit"))?;
            let unit = resolve_compression_unit(&source, unit_spec)?;
            constructions::group_like_projection_compression(&source, &unit)
        }
        other => bail!("unknown build kind {other:?} (expected double-coset, group-algebra, function-algebra or compression)"),
    };
    let h = match built {
        Ok(h) => h,
        Err(e) => return build_failure(e),
    };
    let doc = schema::hypergroup_to_json(&h);
    match &args.out {
        Some(path) => {
            std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
                .with_context(|| format!("cannot write {}", path.display()))?;
        }
        None => println!("{}", serde_json::to_string_pretty(&doc)?),
    }
    println!("{}", summary_line(&h));
    Ok(Outcome::Pass)
}

/// Parses and verifies the input file; on pipeline failure emits the
/// failure report and returns `None`.
fn load_verified(file: &Path, out: Option<&Path>) -> Result<Option<(QuantumHypergroup, String)>> {
    let (value, digest) = schema::read_json(file)?;
    match schema::import_hypergroup(&value)? {
        Ok(h) => Ok(Some((h, digest))),
        Err(e) => {
            report::to_stdout_or_file(&report::failure_report(&e, &digest), out)?;
            Ok(None)
        }
    }
}

fn cmd_verify(file: &Path, level: &str, out: Option<&Path>) -> Result<Outcome> {
    let level =
        Level::parse(level).ok_or_else(|| anyhow!("--level must be axioms, derived or full"))?;
    let Some((h, digest)) = load_verified(file, out)? else {
        return Ok(Outcome::Fail);
    };
    let (doc, ok) = report::verification_report(&h, level, &digest);
    report::to_stdout_or_file(&doc, out)?;
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn cmd_dual(file: &Path, out: Option<&Path>) -> Result<Outcome> {
    let Some((h, _)) = load_verified(file, None)? else {
        return Ok(Outcome::Fail);
    };
    let pkg = match build_dual(&h) {
        Ok(pkg) => pkg,
        Err(e) => {
            eprintln!("dual construction failed: {e}");
            return Ok(Outcome::Fail);
        }
    };
    let mut doc = schema::hypergroup_to_json(pkg.dual());
    doc.as_object_mut()
        .expect("hypergroup JSON is an object")
        .insert("pairing".into(), schema::matrix_to_json(pkg.pairing()));
    match out {
        Some(path) => {
            std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
                .with_context(|| format!("cannot write {}", path.display()))?;
            println!("{}", summary_line(pkg.dual()));
        }
        None => println!("{}", serde_json::to_string_pretty(&doc)?),
    }
    Ok(Outcome::Pass)
}

fn cmd_bidual(file: &Path, out: Option<&Path>) -> Result<Outcome> {
    let Some((h, digest)) = load_verified(file, None)? else {
        return Ok(Outcome::Fail);
    };
    let pkg = match build_dual(&h) {
        Ok(pkg) => pkg,
        Err(e) => {
            eprintln!("dual construction failed: {e}");
            return Ok(Outcome::Fail);
        }
    };
    let report_data = match pkg.bidual_check() {
        Ok(r) => r,
        Err(e) => {
            eprintln!("bidual construction failed: {e}");
            return Ok(Outcome::Fail);
        }
    };
    for record in &report_data.records {
        println!("{record}");
    }
    let ok = report_data.passed();
    if let Some(path) = out {
        let checks: Vec<Value> = report_data
            .records
            .iter()
            .map(|r| {
                json!({
                    "name": r.check.name,
                    "law": r.check.law,
                    "status": if r.passed() { "pass" } else { "fail" },
                    "witness": r.witness,
                })
            })
            .collect();
        let doc = json!({
            "tool": { "name": "qhg", "version": env!("CARGO_PKG_VERSION") },
            "input_digest": digest,
            "checks": checks,
            "status": if ok { "pass" } else { "fail" },
        });
        std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

fn cmd_report(file: &Path, out: Option<&Path>) -> Result<Outcome> {
    let Some((h, digest)) = load_verified(file, None)? else {
        return Ok(Outcome::Fail);
    };
    let d = h.derived();
    let alg = h.algebra();
    let t = h.classify_type();
    println!("dim = {}", h.dim());
    println!(
        "type: compact={} discrete={} finite={}",
        t.compact, t.discrete, t.finite
    );
    println!(
        "Δ-homomorphism: {}",
        if h.coproduct_is_homomorphism() {
            "yes"
        } else {
            "no"
        }
    );
    println!("δ = {}", alg.describe(&d.delta));
    println!("τ = {}", d.tau);
    println!("σ = {:?}", d.sigma);
    println!("σ' = {:?}", d.sigma_prime);
    for v in h.cointegral_space(Side::Left) {
        println!("left co-integral: {}", alg.describe(&v));
    }
    for v in h.cointegral_space(Side::Right) {
        println!("right co-integral: {}", alg.describe(&v));
    }
    let dual_summary = match build_dual(&h) {
        Ok(pkg) => {
            let dd = pkg.dual().derived();
            println!("δ̂ = {}", pkg.dual().algebra().describe(&dd.delta));
            println!("τ̂ = {}", dd.tau);
            Some((
                schema::vector_to_json(&dd.delta),
                schema::scalar_to_json(&dd.tau),
            ))
        }
        Err(e) => {
            eprintln!("dual construction failed: {e}");
            None
        }
    };
    if let Some(path) = out {
        let (doc, _) = report::verification_report(&h, Level::Derived, &digest);
        let mut doc = doc;
        if let Some((delta_hat, tau_hat)) = dual_summary {
            let obj = doc.as_object_mut().expect("report is an object");
            obj.insert("dual_delta".into(), delta_hat);
            obj.insert("dual_tau".into(), tau_hat);
        }
        std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
    }
    Ok(Outcome::Pass)
}
