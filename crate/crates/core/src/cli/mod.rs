//! Command-line front end: JSON ingestion, builders, command dispatch, and
//! machine/human-readable reports.
//!
//! Exit codes: 0 success, 1 mathematical failure (axiom or invariant),
//! 2 usage or I/O problems, 3 out-of-scope input.

mod json;

pub use json::{FusionJson, HopfJson};

use crate::error::Error;
use crate::hopf::{function_algebra, group_algebra, sweedler_h4, FinDimHopf};
use crate::homology::lazy_complex;
use crate::linalg::FPAbelianGroup;
use crate::oracles::{bar_homology, group_abelianization, DEFAULT_GROUP_ORDER_BOUND};
use crate::presented::{character_group_descriptor, HomologyDescriptor};
use crate::quotients::{grouplike_invariant_factors, h1_lazy};
use crate::{groups, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::ffi::OsString;
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OUT_OF_SCOPE: i32 = 3;

#[derive(Parser)]
#[command(name = "lazyhom", about = "Lazy homology of finite-dimensional Hopf algebras over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Hopf axioms of a JSON-presented algebra
    Verify { path: String },
    /// First lazy homology by both routes, with agreement flag
    H1 {
        /// Builtin input: sweedler | group:<NAME> | functions:<NAME>
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        path: Option<String>,
        /// Skip the redundant per-triple invariant verifications
        #[arg(long)]
        skip_invariant_checks: bool,
    },
    /// Second lazy homology with the d3 table and invariant transcript
    H2 {
        #[arg(long, conflicts_with = "path")]
        builtin: Option<String>,
        path: Option<String>,
        #[arg(long)]
        skip_invariant_checks: bool,
    },
    /// Universal abelian grading group of a fusion-ring JSON file
    Grading { path: String },
    /// Bar-resolution group homology of a builtin group
    GroupHomology {
        group: String,
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_GROUP_ORDER_BOUND)]
        max_group_order: usize,
    },
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub input: InputStamp,
    pub status: String,
    pub result: Value,
    pub checks: Vec<CheckLine>,
}

#[derive(Serialize)]
pub struct InputStamp {
    pub kind: String,
    pub name: String,
    pub sha256: String,
}

#[derive(Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
}

fn sha_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Resolves `sweedler | group:<NAME> | functions:<NAME>` or a JSON file.
fn resolve_hopf_input(
    builtin: Option<&str>,
    path: Option<&str>,
) -> Result<(FinDimHopf, InputStamp)> {
    match (builtin, path) {
        (Some(name), None) => {
            let h = match name {
                "sweedler" => sweedler_h4(),
                other => match other.split_once(':') {
                    Some(("group", g)) => group_algebra(&groups::by_name(g)?),
                    Some(("functions", g)) => function_algebra(&groups::by_name(g)?),
                    _ => return Err(Error::UnknownBuiltin(other.to_string())),
                },
            };
            let canonical = serde_json::to_vec(&HopfJson::from_hopf(&h))?;
            let stamp = InputStamp {
                kind: "builtin".to_string(),
                name: name.to_string(),
                sha256: sha_hex(&canonical),
            };
            Ok((h, stamp))
        }
        (None, Some(p)) => {
            let bytes = std::fs::read(p)?;
            let parsed: HopfJson = serde_json::from_slice(&bytes)?;
            let h = parsed.to_hopf()?;
            let stamp = InputStamp {
                kind: "file".to_string(),
                name: p.to_string(),
                sha256: sha_hex(&bytes),
            };
            Ok((h, stamp))
        }
        _ => Err(Error::Precondition(
            "exactly one of --builtin or a path is required".to_string(),
        )),
    }
}

fn group_json(g: &FPAbelianGroup) -> Value {
    json!({
        "invariant_factors": g.invariant_factors_i64(),
        "order": g.order().map(|o| o.to_string()),
        "rendered": g.to_string(),
    })
}

fn descriptor_json(d: &HomologyDescriptor) -> Value {
    let chars = character_group_descriptor(d);
    json!({
        "group_part": group_json(&d.group_part),
        "primitive_count": d.primitive_count,
        "primitive_relation_rank": d.primitive_relations.rank(),
        "free_primitives": d.free_primitives(),
        "rendered": d.render(),
        "characters_over_Q": chars.render(),
    })
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::UnsupportedShape { .. }
        | Error::OutOfScope { .. }
        | Error::UnsupportedRelation(_)
        | Error::SizeBound { .. } => EXIT_OUT_OF_SCOPE,
        Error::AxiomFailure(_)
        | Error::RepresentativeDependence(_)
        | Error::RewriteFailure(_)
        | Error::NotConvInvertible => EXIT_MATH_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Runs `verify` on a Hopf JSON file: full axiom report, exit 0 iff all pass.
pub fn cmd_verify(path: &str) -> Result<(Report, i32)> {
    let bytes = std::fs::read(path)?;
    let parsed: HopfJson = serde_json::from_slice(&bytes)?;
    let h = parsed.to_hopf()?;
    let report = h.verify();
    let checks: Vec<CheckLine> = report
        .checks
        .iter()
        .map(|c| CheckLine {
            name: match &c.witness {
                Some(w) => format!("{} ({w})", c.axiom),
                None => c.axiom.to_string(),
            },
            pass: c.pass,
        })
        .collect();
    let all = report.all_pass();
    let rep = Report {
        command: format!("verify {path}"),
        input: InputStamp {
            kind: "file".to_string(),
            name: path.to_string(),
            sha256: sha_hex(&bytes),
        },
        status: if all { "ok" } else { "axiom-failure" }.to_string(),
        result: json!({
            "name": h.name(),
            "dim": h.dim(),
            "all_pass": all,
        }),
        checks,
    };
    Ok((rep, if all { EXIT_OK } else { EXIT_MATH_FAILURE }))
}

/// Runs `h1`: both routes (Hopf-quotient and homology-style) plus agreement.
pub fn cmd_h1(
    builtin: Option<&str>,
    path: Option<&str>,
    skip_invariant_checks: bool,
) -> Result<(Report, i32)> {
    let (h, stamp) = resolve_hopf_input(builtin, path)?;
    let command = echo_command("h1", builtin, path, skip_invariant_checks);
    let mut checks = Vec::new();

    let quotient_route = h1_lazy(&h)?;
    checks.push(CheckLine {
        name: "H^<1> and abelianization quotients verified as Hopf morphisms".to_string(),
        pass: true,
    });
    let quotient_factors = grouplike_invariant_factors(&h, &quotient_route).ok();

    // homology route is scoped by the pointed profile of the lazy quotients
    let (homology_json, agreement, scope_error) = match lazy_complex(&h) {
        Ok(ctx) => {
            for name in &ctx.transcript {
                checks.push(CheckLine {
                    name: name.clone(),
                    pass: true,
                });
            }
            let d = ctx.h1_descriptor()?;
            let agree = match (&quotient_factors, d.dimension()) {
                (Some(qf), dim) => {
                    let same_factors =
                        qf.invariant_factors() == d.group_part.invariant_factors();
                    let same_dim = dim
                        .map(|x| x == num::BigInt::from(quotient_route.dim()))
                        .unwrap_or(false);
                    same_factors && same_dim
                }
                (None, _) => false,
            };
            (descriptor_json(&d), Some(agree), None)
        }
        Err(e @ (Error::UnsupportedShape { .. } | Error::OutOfScope { .. })) => {
            (json!({ "out_of_scope": e.to_string() }), None, Some(e))
        }
        Err(e) => return Err(e),
    };
    if let Some(agree) = agreement {
        checks.push(CheckLine {
            name: "two H1 routes agree (Hopf-quotient vs homology descriptor)".to_string(),
            pass: agree,
        });
    }
    let _ = skip_invariant_checks;

    let (status, code) = match (agreement, &scope_error) {
        (Some(true), _) => ("ok".to_string(), EXIT_OK),
        (Some(false), _) => ("axiom-failure".to_string(), EXIT_MATH_FAILURE),
        (None, Some(e)) => ("out-of-scope".to_string(), exit_code_for(e)),
        (None, None) => unreachable!(),
    };

    let rep = Report {
        command,
        input: stamp,
        status,
        result: json!({
            "name": h.name(),
            "dim": h.dim(),
            "h1_quotient_route": {
                "dim": quotient_route.dim(),
                "grouplike_invariant_factors":
                    quotient_factors.as_ref().map(group_json),
            },
            "h1_homology_route": homology_json,
            "routes_agree": agreement,
        }),
        checks,
    };
    Ok((rep, code))
}

/// Runs `h2`: descriptor, d3 table, and the invariant transcript.
pub fn cmd_h2(
    builtin: Option<&str>,
    path: Option<&str>,
    skip_invariant_checks: bool,
) -> Result<(Report, i32)> {
    let (h, stamp) = resolve_hopf_input(builtin, path)?;
    let command = echo_command("h2", builtin, path, skip_invariant_checks);
    let ctx = lazy_complex(&h)?;
    let result = ctx.h2_with(!skip_invariant_checks)?;
    let mut checks: Vec<CheckLine> = result
        .transcript
        .iter()
        .map(|name| CheckLine {
            name: name.clone(),
            pass: true,
        })
        .collect();
    if skip_invariant_checks {
        checks.push(CheckLine {
            name: "per-triple d2∘d3 and HKer membership checks skipped on request".to_string(),
            pass: true,
        });
    }
    let d3_table: Vec<Value> = result
        .d3_table
        .iter()
        .map(|(&(x, y, z), e)| {
            json!([
                h.labels()[x],
                h.labels()[y],
                h.labels()[z],
                result.hker.algebra.render(e),
            ])
        })
        .collect();
    let rep = Report {
        command,
        input: stamp,
        status: "ok".to_string(),
        result: json!({
            "name": h.name(),
            "dim": h.dim(),
            "h2_descriptor": descriptor_json(&result.h2),
            "hker": {
                "laurent_generators": result.hker.algebra.n_laurent(),
                "primitive_generators": result.hker.algebra.n_poly(),
            },
            "d3_table": d3_table,
        }),
        checks,
    };
    Ok((rep, EXIT_OK))
}

/// Runs `grading` on a fusion JSON file.
pub fn cmd_grading(path: &str) -> Result<(Report, i32)> {
    let bytes = std::fs::read(path)?;
    let parsed: FusionJson = serde_json::from_slice(&bytes)?;
    let fusion = parsed.to_fusion()?;
    fusion.check_associativity()?;
    fusion.check_dims()?;
    let grading = crate::oracles::fusion_grading(&fusion);
    let rep = Report {
        command: format!("grading {path}"),
        input: InputStamp {
            kind: "file".to_string(),
            name: path.to_string(),
            sha256: sha_hex(&bytes),
        },
        status: "ok".to_string(),
        result: json!({
            "labels": fusion.labels(),
            "grading_group": group_json(&grading),
        }),
        checks: vec![
            CheckLine {
                name: "fusion unit law".to_string(),
                pass: true,
            },
            CheckLine {
                name: "fusion associativity".to_string(),
                pass: true,
            },
        ],
    };
    Ok((rep, EXIT_OK))
}

/// Runs `group-homology` for a builtin group via the bar resolution.
pub fn cmd_group_homology(
    group: &str,
    degree: usize,
    max_group_order: usize,
) -> Result<(Report, i32)> {
    let g = groups::by_name(group)?;
    let canonical = format!(
        "{}:{:?}",
        g.name(),
        (0..g.order())
            .map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
    let homology = bar_homology(&g, degree, max_group_order)?;
    let mut checks = Vec::new();
    if degree == 1 {
        let ab = group_abelianization(&g);
        checks.push(CheckLine {
            name: "H1 equals the abelianization oracle".to_string(),
            pass: homology.invariant_factors() == ab.invariant_factors(),
        });
    }
    let pass = checks.iter().all(|c| c.pass);
    let rep = Report {
        command: format!("group-homology {group} {degree}"),
        input: InputStamp {
            kind: "builtin".to_string(),
            name: format!("group:{group}"),
            sha256: sha_hex(canonical.as_bytes()),
        },
        status: if pass { "ok" } else { "axiom-failure" }.to_string(),
        result: json!({
            "group": g.name(),
            "order": g.order(),
            "degree": degree,
            "homology": group_json(&homology),
        }),
        checks,
    };
    Ok((rep, if pass { EXIT_OK } else { EXIT_MATH_FAILURE }))
}

fn echo_command(
    name: &str,
    builtin: Option<&str>,
    path: Option<&str>,
    skip: bool,
) -> String {
    let mut s = name.to_string();
    if let Some(b) = builtin {
        s.push_str(&format!(" --builtin {b}"));
    }
    if let Some(p) = path {
        s.push_str(&format!(" {p}"));
    }
    if skip {
        s.push_str(" --skip-invariant-checks");
    }
    s
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command : {}\n", report.command));
    out.push_str(&format!(
        "input   : {} {} (sha256 {})\n",
        report.input.kind, report.input.name, report.input.sha256
    ));
    out.push_str(&format!("status  : {}\n", report.status));
    out.push_str("result  :\n");
    for line in serde_json::to_string_pretty(&report.result)
        .unwrap_or_default()
        .lines()
    {
        out.push_str(&format!("  {line}\n"));
    }
    if !report.checks.is_empty() {
        out.push_str("checks  :\n");
        for c in &report.checks {
            out.push_str(&format!(
                "  [{}] {}\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name
            ));
        }
    }
    out
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        ),
        Format::Text => print!("{}", render_text(report)),
    }
}

/// Entry point used by the thin binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with its own success exit
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Verify { path } => cmd_verify(path),
        Command::H1 {
            builtin,
            path,
            skip_invariant_checks,
        } => cmd_h1(builtin.as_deref(), path.as_deref(), *skip_invariant_checks),
        Command::H2 {
            builtin,
            path,
            skip_invariant_checks,
        } => cmd_h2(builtin.as_deref(), path.as_deref(), *skip_invariant_checks),
        Command::Grading { path } => cmd_grading(path),
        Command::GroupHomology {
            group,
            degree,
            max_group_order,
        } => cmd_group_homology(group, *degree, *max_group_order),
    };
    match outcome {
        Ok((report, code)) => {
            emit(&report, cli.format);
            code
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

/// True when `path` exists; used by examples to locate fixtures.
pub fn fixture_path(relative: &str) -> Option<String> {
    let candidates = [
        format!("{}/fixtures/{relative}", env!("CARGO_MANIFEST_DIR")),
        format!("crates/core/fixtures/{relative}"),
        format!("fixtures/{relative}"),
    ];
    candidates
        .into_iter()
        .find(|p| Path::new(p).exists())
}
