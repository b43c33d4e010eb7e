//! `coxcx` — exact computations in spherical Coxeter complexes.
//!
//! Subcommands: `realize` (coordinate model of a complex), `orbit` (vertex
//! orbit with display classes, optionally cached), `segment` (classify the
//! geodesic between two points), `bigon` (distance table of a vertex orbit
//! around a base vertex), `verify-tables` (regenerate the frozen reference
//! tables and diff), and `lab` (scripted geometric experiments).
//!
//! Exit codes: 0 success, 1 verification/check failure or runtime error,
//! 2 usage error.

mod cache;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxeter_complex::bigon::enumerate_bigon_constrained;
use coxeter_complex::gap::run_gap_experiment;
use coxeter_complex::lab::{
    check_root_type_vertices, check_wall_orthogonal_vertices, find_configuration_star,
    find_configuration_star_star, Check,
};
use coxeter_complex::segment::trace_segment;
use coxeter_complex::tables::{
    display_key, verify_orbits, verify_tables, GoldenOrbits, GoldenTables, TableReport,
};
use coxeter_complex::{Cos, Family, Realization, Ray, TypeSet};
use serde_json::json;
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "coxcx",
    version,
    about = "Exact-arithmetic spherical Coxeter complexes: orbits, geodesic segments, distance tables",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Commands {
    /// Print the coordinate model: simple roots, fundamental vertices, diagram.
    Realize(RealizeArgs),
    /// Enumerate a vertex orbit and its display-symmetry classes.
    Orbit(OrbitArgs),
    /// Classify the geodesic segment between two points.
    Segment(SegmentArgs),
    /// Decompose a vertex orbit into distance classes around a base vertex.
    Bigon(BigonArgs),
    /// Regenerate the frozen reference tables and report any differences.
    #[command(name = "verify-tables")]
    VerifyTables(VerifyArgs),
    /// Scripted geometric experiments and consistency checks.
    Lab(LabArgs),
}

#[derive(Args)]
struct RealizeArgs {
    /// Family and rank, e.g. E8, E7, E6, D5, A4.
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct OrbitArgs {
    #[arg(long)]
    family: String,
    /// Vertex-type label (1-based diagram node).
    #[arg(long = "type")]
    vertex_type: usize,
    /// Also list every orbit vector, not only the class summary.
    #[arg(long)]
    full: bool,
    /// Cache directory (overrides the COXETER_CACHE_DIR environment variable).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Disable the orbit cache even if an environment variable configures one.
    #[arg(long)]
    no_cache: bool,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct SegmentArgs {
    #[arg(long)]
    family: String,
    /// Endpoint: a fundamental vertex like `v2`, or coordinates `(1,-1,0,0)`.
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct BigonArgs {
    #[arg(long)]
    family: String,
    /// Base vertex label; distances are measured from `v_base`.
    #[arg(long)]
    base: usize,
    /// Target vertex-type label whose orbit is decomposed.
    #[arg(long)]
    target: usize,
    /// Comma-separated wall labels; restrict to classes lying on these walls.
    #[arg(long)]
    exclude: Option<String>,
    /// Keep only rows at this distance or farther: `90deg`, `pi/2`, `2.1rad`,
    /// or an exact angle string like `arccos(-1/4)`.
    #[arg(long)]
    min_angle: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to one family (e.g. E8 or D5); default verifies everything.
    #[arg(long)]
    family: Option<String>,
    /// Read golden files from this directory instead of the embedded copies.
    #[arg(long)]
    golden_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct LabArgs {
    #[command(subcommand)]
    experiment: LabCommand,
}

#[derive(Subcommand)]
enum LabCommand {
    /// Random root-wall intersections: every non-sphere must have intrinsic
    /// radius at most π/2 at the configured sampling depth.
    Gap(GapArgs),
    /// Find and verify the first scripted vertex configuration.
    ConfigStar(ConfigArgs),
    /// Find and verify the second scripted vertex configuration.
    ConfigStarStar(ConfigArgs),
    /// Check that the designated vertex orbit is exactly the set of root rays.
    RootTypes(FamilyOnlyArgs),
    /// Check the orthogonal-vertex wall facts of the D family.
    Walls(FamilyOnlyArgs),
}

#[derive(Args)]
struct GapArgs {
    #[arg(long)]
    family: String,
    /// Number of random roots intersected per run.
    #[arg(long, default_value_t = 5)]
    roots: usize,
    /// Number of seeded runs.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 20260816)]
    seed: u64,
    /// Barycentric subdivision depth for the radius estimate.
    #[arg(long, default_value_t = 2)]
    depth: usize,
    #[arg(long = "emit", visible_alias = "format", value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, default_value = "E8")]
    family: String,
    #[arg(long = "emit", visible_alias = "format", value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
struct FamilyOnlyArgs {
    #[arg(long)]
    family: String,
    #[arg(long = "emit", visible_alias = "format", value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

/// Argument-level mistakes (unknown family, bad vertex label, malformed
/// point or angle) exit with the usage code 2; computational failures and
/// verification mismatches use 1.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl std::fmt::Display) -> anyhow::Error {
    anyhow::Error::new(UsageError(msg.to_string()))
}

fn main() {
    // Die quietly when the read end of a pipe closes (e.g. `coxcx ... | head`).
    // SAFETY: restoring a default signal disposition before any other thread
    // exists has no preconditions.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // `--help` and `--version` are successes; anything else —
            // including a bare invocation with no subcommand — is a usage
            // error and exits 2.
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            if e.downcast_ref::<UsageError>().is_some() {
                eprintln!("usage error: {e}");
                eprintln!("run `coxcx --help` for command syntax");
                std::process::exit(2);
            }
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Commands::Realize(a) => cmd_realize(a),
        Commands::Orbit(a) => cmd_orbit(a),
        Commands::Segment(a) => cmd_segment(a),
        Commands::Bigon(a) => cmd_bigon(a),
        Commands::VerifyTables(a) => cmd_verify(a),
        Commands::Lab(a) => match a.experiment {
            LabCommand::Gap(g) => cmd_gap(g),
            LabCommand::ConfigStar(c) => cmd_config_star(c, false),
            LabCommand::ConfigStarStar(c) => cmd_config_star(c, true),
            LabCommand::RootTypes(f) => cmd_root_types(f),
            LabCommand::Walls(f) => cmd_walls(f),
        },
    }
}

fn build_realization(family: &str) -> Result<Realization> {
    let (fam, rank) = Family::parse(family).map_err(usage)?;
    Realization::new(fam, rank).map_err(usage)
}

fn check_label(real: &Realization, label: usize) -> Result<()> {
    if label == 0 || label > real.rank() {
        return Err(usage(format!(
            "vertex label {label} is outside 1..={} for {}",
            real.rank(),
            real.name()
        )));
    }
    Ok(())
}

fn coords_str(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

fn parse_point(real: &Realization, s: &str) -> Result<Ray> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix('v').or_else(|| t.strip_prefix('V')) {
        if let Ok(i) = rest.trim().parse::<usize>() {
            return Ok(real.vertex(i)?.clone());
        }
    }
    let inner = t
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    let coords: Vec<i64> = inner
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("cannot parse point {s:?} (use v<label> or (c1,c2,...))"))?;
    let ray = Ray::new(coords)?;
    if !real.contains(&ray)? {
        bail!(
            "point {} does not lie in the {} coordinate subspace",
            coords_str(ray.coords()),
            real.name()
        );
    }
    Ok(ray)
}

/// Cosine threshold for a `--min-angle` value: rows are kept when their
/// cosine is at most this (distance at least the given angle).
fn min_angle_cos_threshold(s: &str) -> Result<f64> {
    let t = s.trim();
    if let Some(d) = t.strip_suffix("deg") {
        let degrees: f64 = d.trim().parse().context("bad degree value")?;
        return Ok(degrees.to_radians().cos());
    }
    if let Some(r) = t.strip_suffix("rad") {
        let radians: f64 = r.trim().parse().context("bad radian value")?;
        return Ok(radians.cos());
    }
    Ok(Cos::parse_angle(t)?.value_f64())
}

// ---------------------------------------------------------------------------
// realize
// ---------------------------------------------------------------------------

fn cmd_realize(a: RealizeArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    let doc = real.to_doc();
    match a.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Tsv => {
            println!("name\t{}", real.name());
            println!("rank\t{}", real.rank());
            println!("ambient_dim\t{}", real.ambient_dim());
            println!("space_dim\t{}", real.space_dim());
            println!("positive_roots\t{}", real.positive_roots().len());
            for (i, r) in doc.simple_roots.iter().enumerate() {
                println!("simple_root\t{}\t{}", i + 1, coords_str(r));
            }
            for (i, v) in doc.vertices.iter().enumerate() {
                println!("vertex\t{}\t{}", i + 1, coords_str(v));
            }
            for (x, y) in real.diagram().edges() {
                println!("diagram_edge\t{x}\t{y}");
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

fn cmd_orbit(a: OrbitArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    check_label(&real, a.vertex_type)?;
    let cache_dir = cache::resolve_cache_dir(a.cache_dir, a.no_cache);
    let vectors = cache::orbit_vectors(&real, a.vertex_type, cache_dir.as_deref())?;

    let mut classes: BTreeMap<_, (Vec<i64>, u128)> = BTreeMap::new();
    for v in &vectors {
        let ray = Ray::new(v.clone())?;
        let key = display_key(&real, &ray)?;
        let entry = classes.entry(key).or_insert_with(|| (v.clone(), 0));
        entry.1 += 1;
        if v < &entry.0 {
            entry.0 = v.clone();
        }
    }
    let mut class_list: Vec<(Vec<i64>, u128)> = classes.into_values().collect();
    class_list.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

    match a.format {
        Format::Json => {
            let value = json!({
                "family": format!("{:?}", real.family()),
                "rank": real.rank(),
                "vertex_type": a.vertex_type,
                "size": vectors.len(),
                "classes": class_list.iter().map(|(rep, size)| json!({
                    "representative": rep,
                    "size": size,
                })).collect::<Vec<_>>(),
                "vectors": if a.full { json!(vectors) } else { serde_json::Value::Null },
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            println!(
                "# {} type-{} orbit: {} vertices",
                real.name(),
                a.vertex_type,
                vectors.len()
            );
            for (rep, size) in &class_list {
                println!("class\t{}\t{}", coords_str(rep), size);
            }
            if a.full {
                for v in &vectors {
                    println!("vertex\t{}", coords_str(v));
                }
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// segment
// ---------------------------------------------------------------------------

fn cmd_segment(a: SegmentArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    let from = parse_point(&real, &a.from).map_err(usage)?;
    let to = parse_point(&real, &a.to).map_err(usage)?;
    let trace = trace_segment(&real, &from, &to)?;
    match a.format {
        Format::Json => {
            let value = json!({
                "family": format!("{:?}", real.family()),
                "rank": real.rank(),
                "from": trace.from.coords(),
                "to": trace.to.coords(),
                "angle": trace.cos.angle_str(),
                "cos": trace.cos.cos_str(),
                "from_labels": trace.from_labels.to_string(),
                "to_labels": trace.to_labels.to_string(),
                "type_string": trace.type_string,
                "singular": trace.singular,
                "hull_dim": trace.hull_dim,
                "breakpoints": trace.breakpoints.iter().map(|b| json!({
                    "parameter": format!("{}/{}", b.parameter.numer(), b.parameter.denom()),
                    "point": b.point.coords(),
                    "labels": b.labels.to_string(),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            println!("from\t{}", coords_str(trace.from.coords()));
            println!("to\t{}", coords_str(trace.to.coords()));
            println!("angle\t{}", trace.cos.angle_str());
            println!("cos\t{}", trace.cos.cos_str());
            println!("from_labels\t{}", trace.from_labels);
            println!("to_labels\t{}", trace.to_labels);
            println!("type\t{}", trace.type_string);
            println!("singular\t{}", trace.singular);
            println!("hull_dim\t{}", trace.hull_dim);
            for b in &trace.breakpoints {
                println!(
                    "breakpoint\t{}/{}\t{}\t{}",
                    b.parameter.numer(),
                    b.parameter.denom(),
                    coords_str(b.point.coords()),
                    b.labels
                );
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// bigon
// ---------------------------------------------------------------------------

fn cmd_bigon(a: BigonArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    check_label(&real, a.base)?;
    check_label(&real, a.target)?;
    let excluded = match &a.exclude {
        Some(s) => TypeSet::parse(s).map_err(usage)?,
        None => TypeSet::empty(),
    };
    let table = enumerate_bigon_constrained(&real, a.base, a.target, &excluded)?;
    let threshold = match &a.min_angle {
        Some(s) => Some(min_angle_cos_threshold(s).map_err(usage)?),
        None => None,
    };
    let keep = |cos: &Cos| match threshold {
        Some(t) => cos.value_f64() <= t + 1e-12,
        None => true,
    };
    let doc = table.to_doc();
    let kept: Vec<_> = table
        .rows
        .iter()
        .zip(&doc.rows)
        .filter(|(row, _)| keep(&row.cos))
        .map(|(_, rowdoc)| rowdoc)
        .collect();
    match a.format {
        Format::Json => {
            let value = json!({
                "realization": doc.realization,
                "base": doc.base,
                "target": doc.target,
                "excluded": excluded.iter().collect::<Vec<_>>(),
                "min_angle": a.min_angle,
                "orbit_total": doc.total,
                "rows": kept,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            println!(
                "# {} bigon base={} target={}{}{} | orbit total {}",
                doc.realization,
                doc.base,
                doc.target,
                if excluded.is_empty() {
                    String::new()
                } else {
                    format!(" on walls {excluded}")
                },
                match &a.min_angle {
                    Some(s) => format!(" at angle >= {s}"),
                    None => String::new(),
                },
                doc.total
            );
            println!("representative\tangle\tcos\tsigma\tsize");
            for r in kept {
                println!(
                    "{}\t{}\t{}\t{}\t{}",
                    coords_str(&r.representative),
                    r.angle,
                    r.cos,
                    r.sigma,
                    r.size
                );
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify-tables
// ---------------------------------------------------------------------------

/// Embedded golden files, regenerated by the `gen-golden` binary from the
/// library and frozen in the repository's `golden/` directory.
const EMBEDDED_GOLDEN: &[(&str, &str, &str)] = &[
    (
        "e6",
        include_str!("../../../golden/tables_e6.json"),
        include_str!("../../../golden/orbits_e6.json"),
    ),
    (
        "e7",
        include_str!("../../../golden/tables_e7.json"),
        include_str!("../../../golden/orbits_e7.json"),
    ),
    (
        "e8",
        include_str!("../../../golden/tables_e8.json"),
        include_str!("../../../golden/orbits_e8.json"),
    ),
    (
        "d4",
        include_str!("../../../golden/tables_d4.json"),
        include_str!("../../../golden/orbits_d4.json"),
    ),
    (
        "d5",
        include_str!("../../../golden/tables_d5.json"),
        include_str!("../../../golden/orbits_d5.json"),
    ),
    (
        "d6",
        include_str!("../../../golden/tables_d6.json"),
        include_str!("../../../golden/orbits_d6.json"),
    ),
    (
        "d7",
        include_str!("../../../golden/tables_d7.json"),
        include_str!("../../../golden/orbits_d7.json"),
    ),
    (
        "d8",
        include_str!("../../../golden/tables_d8.json"),
        include_str!("../../../golden/orbits_d8.json"),
    ),
];

fn family_key(s: &str) -> String {
    s.trim().to_ascii_lowercase()
}

fn realization_for_golden(family: &str, rank: usize) -> Result<Realization> {
    let fam = match family {
        "A" => Family::A,
        "D" => Family::D,
        "E6" => Family::E6,
        "E7" => Family::E7,
        "E8" => Family::E8,
        other => bail!("unknown family {other:?} in golden file"),
    };
    Ok(Realization::new(fam, rank)?)
}

fn cmd_verify(a: VerifyArgs) -> Result<i32> {
    let wanted: Option<String> = a.family.as_deref().map(family_key);
    let mut selected: Vec<(String, String, String)> = Vec::new();
    match &a.golden_dir {
        Some(dir) => {
            let keys: Vec<String> = match &wanted {
                Some(k) => vec![k.clone()],
                None => EMBEDDED_GOLDEN.iter().map(|(k, _, _)| k.to_string()).collect(),
            };
            for key in keys {
                let tables_path = dir.join(format!("tables_{key}.json"));
                let orbits_path = dir.join(format!("orbits_{key}.json"));
                let tables = std::fs::read_to_string(&tables_path)
                    .with_context(|| format!("reading {}", tables_path.display()))?;
                let orbits = std::fs::read_to_string(&orbits_path)
                    .with_context(|| format!("reading {}", orbits_path.display()))?;
                selected.push((key, tables, orbits));
            }
        }
        None => {
            for (key, tables, orbits) in EMBEDDED_GOLDEN {
                if wanted.as_deref().is_none_or(|w| w == *key) {
                    selected.push((key.to_string(), tables.to_string(), orbits.to_string()));
                }
            }
            if selected.is_empty() {
                bail!(
                    "no golden files for family {:?} (available: e6 e7 e8 d4..d8)",
                    a.family.as_deref().unwrap_or("")
                );
            }
        }
    }

    let mut all_reports: Vec<(String, TableReport)> = Vec::new();
    for (key, tables_json, orbits_json) in &selected {
        let golden_tables: GoldenTables = serde_json::from_str(tables_json)
            .with_context(|| format!("parsing tables_{key}.json"))?;
        let golden_orbits: GoldenOrbits = serde_json::from_str(orbits_json)
            .with_context(|| format!("parsing orbits_{key}.json"))?;
        let real = realization_for_golden(&golden_tables.family, golden_tables.rank)?;
        for report in verify_tables(&real, &golden_tables)? {
            all_reports.push((real.name(), report));
        }
        for report in verify_orbits(&real, &golden_orbits)? {
            all_reports.push((real.name(), report));
        }
    }

    let failures = all_reports.iter().filter(|(_, r)| !r.pass).count();
    match a.format {
        Format::Json => {
            let value = json!({
                "tables": all_reports.iter().map(|(name, r)| json!({
                    "realization": name,
                    "label": r.label,
                    "rows": r.rows,
                    "pass": r.pass,
                    "diffs": r.diffs,
                })).collect::<Vec<_>>(),
                "regenerated": all_reports.len(),
                "mismatched": failures,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            for (name, r) in &all_reports {
                println!(
                    "{}\t{}\t{}\t{} rows",
                    if r.pass { "PASS" } else { "FAIL" },
                    name,
                    r.label,
                    r.rows
                );
                for d in &r.diffs {
                    println!("\t{d}");
                }
            }
            println!(
                "# regenerated {} tables across {} golden sets: {} matched, {} mismatched",
                all_reports.len(),
                selected.len(),
                all_reports.len() - failures,
                failures
            );
        }
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// lab
// ---------------------------------------------------------------------------

fn cmd_gap(a: GapArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    let report = run_gap_experiment(&real, a.roots, a.samples, a.seed, a.depth)?;
    match a.format {
        Format::Json => {
            let value = json!({
                "realization": report.realization,
                "roots_per_run": report.roots_per_run,
                "depth": report.depth,
                "runs": report.runs.iter().map(|r| json!({
                    "seed": r.seed,
                    "constraints": r.constraints.iter().map(|c| c.coords().to_vec()).collect::<Vec<_>>(),
                    "kept_cells": r.kept_cells,
                    "kept_vertices": r.kept_vertices,
                    "is_empty": r.is_empty,
                    "estimate": r.estimate.as_ref().map(|e| json!({
                        "is_sphere": e.is_sphere,
                        "radius_estimate": e.radius_estimate,
                        "mesh": e.mesh,
                        "radius_upper_bound": e.radius_upper_bound,
                        "radius_cos_lower_bound": e.radius_cos_lower_bound,
                        "exact_center": e.exact_center.as_ref().map(|c| c.coords().to_vec()),
                        "samples": e.samples,
                        "depth": e.depth,
                    })),
                    "passes": r.passes,
                })).collect::<Vec<_>>(),
                "all_pass": report.all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            println!(
                "# {} gap experiment: {} runs x {} roots, subdivision depth {}",
                report.realization,
                report.runs.len(),
                report.roots_per_run,
                report.depth
            );
            println!("seed\tempty\tcells\tvertices\tsphere\tradius\tupper_bound\tpass");
            for r in &report.runs {
                let (sphere, radius, upper) = match &r.estimate {
                    Some(e) => (
                        e.is_sphere.to_string(),
                        format!("{:.6}", e.radius_estimate),
                        format!("{:.6}", e.radius_upper_bound),
                    ),
                    None => ("-".into(), "-".into(), "-".into()),
                };
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.seed, r.is_empty, r.kept_cells, r.kept_vertices, sphere, radius, upper, r.passes
                );
            }
            println!("# all_pass\t{}", report.all_pass);
        }
    }
    Ok(if report.all_pass { 0 } else { 1 })
}

fn checks_json(checks: &[Check]) -> serde_json::Value {
    json!(checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
        .collect::<Vec<_>>())
}

fn print_checks_tsv(checks: &[Check]) {
    for c in checks {
        println!(
            "{}\t{}\t{}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
}

fn cmd_config_star(a: ConfigArgs, second: bool) -> Result<i32> {
    let real = build_realization(&a.family)?;
    if second {
        let report = find_configuration_star_star(&real)?;
        match a.format {
            Format::Json => {
                let value = json!({
                    "witnesses": {
                        "x1": report.star.x1.coords(), "x2": report.star.x2.coords(),
                        "x3": report.star.x3.coords(), "y3": report.star.y3.coords(),
                        "y2": report.star.y2.coords(), "z1": report.star.z1.coords(),
                        "xi2": report.xi2.coords(), "xi3": report.xi3.coords(),
                        "zeta": report.zeta.coords(), "x": report.x.coords(),
                        "xi": report.xi.coords(), "gamma": report.gamma.coords(),
                        "w": report.w.coords(), "omega": report.omega.coords(),
                        "z": report.z.coords(), "v": report.v.coords(),
                    },
                    "base_checks": checks_json(&report.star.checks),
                    "checks": checks_json(&report.checks),
                    "all_pass": report.all_pass && report.star.all_pass,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            }
            Format::Tsv => {
                for (name, ray) in [
                    ("x1", &report.star.x1),
                    ("x2", &report.star.x2),
                    ("x3", &report.star.x3),
                    ("y3", &report.star.y3),
                    ("y2", &report.star.y2),
                    ("z1", &report.star.z1),
                    ("xi2", &report.xi2),
                    ("xi3", &report.xi3),
                    ("zeta", &report.zeta),
                    ("x", &report.x),
                    ("xi", &report.xi),
                    ("gamma", &report.gamma),
                    ("w", &report.w),
                    ("omega", &report.omega),
                    ("z", &report.z),
                    ("v", &report.v),
                ] {
                    println!("witness\t{name}\t{}", coords_str(ray.coords()));
                }
                print_checks_tsv(&report.star.checks);
                print_checks_tsv(&report.checks);
                println!("# all_pass\t{}", report.all_pass && report.star.all_pass);
            }
        }
        Ok(if report.all_pass && report.star.all_pass { 0 } else { 1 })
    } else {
        let report = find_configuration_star(&real)?;
        match a.format {
            Format::Json => {
                let value = json!({
                    "witnesses": {
                        "x1": report.x1.coords(), "x2": report.x2.coords(),
                        "x3": report.x3.coords(), "y3": report.y3.coords(),
                        "y2": report.y2.coords(), "z1": report.z1.coords(),
                    },
                    "checks": checks_json(&report.checks),
                    "all_pass": report.all_pass,
                });
                println!("{}", serde_json::to_string_pretty(&value)?);
            }
            Format::Tsv => {
                for (name, ray) in [
                    ("x1", &report.x1),
                    ("x2", &report.x2),
                    ("x3", &report.x3),
                    ("y3", &report.y3),
                    ("y2", &report.y2),
                    ("z1", &report.z1),
                ] {
                    println!("witness\t{name}\t{}", coords_str(ray.coords()));
                }
                print_checks_tsv(&report.checks);
                println!("# all_pass\t{}", report.all_pass);
            }
        }
        Ok(if report.all_pass { 0 } else { 1 })
    }
}

fn cmd_root_types(a: FamilyOnlyArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    let report = check_root_type_vertices(&real)?;
    match a.format {
        Format::Json => {
            let value = json!({
                "realization": report.realization,
                "label": report.label,
                "orbit_size": report.orbit_size,
                "root_ray_count": report.root_ray_count,
                "matches": report.matches,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            println!(
                "{}\troot-type vertices: label {} orbit {} root rays {}",
                if report.matches { "PASS" } else { "FAIL" },
                report.label,
                report.orbit_size,
                report.root_ray_count
            );
        }
    }
    Ok(if report.matches { 0 } else { 1 })
}

fn cmd_walls(a: FamilyOnlyArgs) -> Result<i32> {
    let real = build_realization(&a.family)?;
    let report = check_wall_orthogonal_vertices(&real)?;
    match a.format {
        Format::Json => {
            let value = json!({
                "realization": report.realization,
                "on_wall": report.on_wall.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
                "wall_root": report.wall_root.coords(),
                "extended": report.extended.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
                "interior_witness": report.interior_witness.coords(),
                "checks": checks_json(&report.checks),
                "all_pass": report.all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Tsv => {
            println!("wall_root\t{}", coords_str(report.wall_root.coords()));
            for v in &report.on_wall {
                println!("on_wall\t{}", coords_str(v.coords()));
            }
            for v in &report.extended {
                println!("extended\t{}", coords_str(v.coords()));
            }
            println!(
                "interior_witness\t{}",
                coords_str(report.interior_witness.coords())
            );
            print_checks_tsv(&report.checks);
            println!("# all_pass\t{}", report.all_pass);
        }
    }
    Ok(if report.all_pass { 0 } else { 1 })
}
