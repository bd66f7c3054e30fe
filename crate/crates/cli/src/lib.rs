//! `torus-strata` command line: validate, classify, compare and compute
//! homology of characteristic data files, or print the classification tables.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation failure, 3 unknown
//! isomorphism verdict.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use torus_strata::chardata::check_homotopy_equivalence_condition;
use torus_strata::classify::{classify_components, enumerate_tables};
use torus_strata::document::{load, ParsedDocument};
use torus_strata::iso::{decide_iso, IsoVerdict};
use torus_strata::model::{build_canonical_complex, homology};
use torus_strata::report;
use torus_strata::strata::is_normal;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

pub const COLOR_ENV: &str = "TORUS_STRATA_COLOR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "torus-strata",
    version,
    about = "Characteristic data of torus actions on pseudomanifolds"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check input files and report warnings.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Name the homeomorphism type and decide manifold structure.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Decide whether two data are (weakly) isomorphic.
    Iso {
        left: PathBuf,
        right: PathBuf,
        /// Allow a global torus automorphism.
        #[arg(long)]
        weak: bool,
    },
    /// Integral homology of the canonical model over a graph.
    Homology {
        file: PathBuf,
        /// Write the cellular chain complex to PATH.
        #[arg(long, value_name = "PATH")]
        dump_complex: Option<PathBuf>,
    },
    /// Print the three classification tables.
    Tables,
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
    color: bool,
}

impl Ctx<'_> {
    fn paint(&self, text: &str, good: bool) -> String {
        if self.color {
            let code = if good { 32 } else { 31 };
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn json(&mut self, v: &Value) {
        let _ = writeln!(
            self.out,
            "{}",
            serde_json::to_string_pretty(v).expect("json values serialize")
        );
    }
}

/// Whether the environment asks for ANSI colors.
pub fn color_from_env() -> bool {
    std::env::var(COLOR_ENV).is_ok_and(|v| v.trim() == "1")
}

/// Runs the command line with colors taken from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_color(args, color_from_env(), out, err)
}

pub fn run_with_color<I, T>(args: I, color: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut ctx = Ctx {
        out,
        err,
        format: cli.format,
        color,
    };
    match cli.command {
        Command::Validate { files } => validate(&mut ctx, &files),
        Command::Classify { files } => classify(&mut ctx, &files),
        Command::Iso { left, right, weak } => iso(&mut ctx, &left, &right, weak),
        Command::Homology { file, dump_complex } => {
            homology_cmd(&mut ctx, &file, dump_complex.as_deref())
        }
        Command::Tables => tables(&mut ctx),
    }
}

enum LoadError {
    Read(String),
    Invalid(torus_strata::document::DocumentError),
}

fn read(path: &Path) -> Result<ParsedDocument, LoadError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| LoadError::Read(format!("{}: cannot read: {e}", path.display())))?;
    load(&text).map_err(LoadError::Invalid)
}

/// Loads a file or reports the failure; returns the exit code on failure.
fn read_or_report(ctx: &mut Ctx, path: &Path) -> Result<ParsedDocument, i32> {
    match read(path) {
        Ok(p) => Ok(p),
        Err(LoadError::Read(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            Err(EXIT_USAGE)
        }
        Err(LoadError::Invalid(e)) => {
            if ctx.format == Format::Json {
                ctx.json(&json!({ "file": path.display().to_string(), "valid": false, "error": report::document_error(&e) }));
            }
            let _ = writeln!(ctx.err, "error: {}: {e}", path.display());
            Err(EXIT_INVALID)
        }
    }
}

fn warnings(p: &ParsedDocument) -> Vec<String> {
    let d = &p.data;
    if d.lmn().n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let normality = is_normal(d.orbit_space());
    if !normality.normal {
        let detail: Vec<String> = normality
            .failures()
            .map(|(name, link)| format!("link of `{name}` has {} components", link.component_count))
            .collect();
        out.push(format!(
            "not normal; total space is not a topological manifold ({})",
            detail.join(", ")
        ));
    }
    let (holds, why) = check_homotopy_equivalence_condition(d.orbit_space());
    if !holds {
        out.push(format!("homotopy-equivalence condition fails: {why}"));
    }
    out
}

fn validate(ctx: &mut Ctx, files: &[PathBuf]) -> i32 {
    let mut code = EXIT_OK;
    let mut results = Vec::new();
    for path in files {
        let name = path.display().to_string();
        match read(path) {
            Ok(p) => {
                let warns = warnings(&p);
                if ctx.format == Format::Json {
                    let mut v = report::parsed(&p);
                    v["file"] = json!(name);
                    v["valid"] = json!(true);
                    v["warnings"] = json!(warns);
                    results.push(v);
                } else {
                    let status = ctx.paint("valid", true);
                    let _ = writeln!(ctx.out, "{name}: {status}, profile {}", p.data.lmn());
                    for n in &p.notes {
                        let _ = writeln!(ctx.out, "  note: {n}");
                    }
                    for w in &warns {
                        let _ = writeln!(ctx.out, "  warning: {w}");
                    }
                }
            }
            Err(LoadError::Read(msg)) => {
                let _ = writeln!(ctx.err, "error: {msg}");
                code = code.max(EXIT_USAGE);
            }
            Err(LoadError::Invalid(e)) => {
                if ctx.format == Format::Json {
                    results.push(json!({ "file": name, "valid": false, "error": report::document_error(&e) }));
                } else {
                    let status = ctx.paint("invalid", false);
                    let _ = writeln!(ctx.out, "{name}: {status}");
                }
                let _ = writeln!(ctx.err, "error: {name}: {e}");
                code = EXIT_INVALID;
            }
        }
    }
    if ctx.format == Format::Json {
        ctx.json(&json!({ "command": "validate", "results": results }));
    }
    code
}

fn classify(ctx: &mut Ctx, files: &[PathBuf]) -> i32 {
    let mut code = EXIT_OK;
    let mut results = Vec::new();
    for path in files {
        let name = path.display().to_string();
        let p = match read_or_report(ctx, path) {
            Ok(p) => p,
            Err(c) => {
                code = code.max(c);
                continue;
            }
        };
        let parts = match classify_components(&p.data) {
            Ok(parts) => parts,
            Err(e) => {
                let _ = writeln!(ctx.err, "error: {name}: {e}");
                code = code.max(EXIT_INVALID);
                continue;
            }
        };
        if ctx.format == Format::Json {
            results.push(json!({
                "file": name,
                "notes": p.notes,
                "components": parts.iter().map(report::classification).collect::<Vec<_>>(),
            }));
            continue;
        }
        let count = parts.len();
        for (i, r) in parts.iter().enumerate() {
            let label = if count == 1 {
                name.clone()
            } else {
                format!("{name} [component {}/{count}]", i + 1)
            };
            let verdict = ctx.paint(
                if r.is_manifold.manifold { "yes" } else { "no" },
                r.is_manifold.manifold,
            );
            let _ = writeln!(ctx.out, "{label}: {}; manifold: {verdict}", r.named_type);
            let _ = writeln!(ctx.out, "  profile: {}", r.lmn);
            if let Some(h) = &r.homology {
                let _ = writeln!(ctx.out, "  homology: {h}");
            }
            for t in &r.tags {
                let _ = writeln!(ctx.out, "  also: {t}");
            }
            let _ = writeln!(ctx.out, "  reason: {}", r.is_manifold.reason);
        }
        for n in &p.notes {
            let _ = writeln!(ctx.out, "  note: {n}");
        }
    }
    if ctx.format == Format::Json {
        ctx.json(&json!({ "command": "classify", "results": results }));
    }
    code
}

fn iso(ctx: &mut Ctx, left: &Path, right: &Path, weak: bool) -> i32 {
    let a = match read_or_report(ctx, left) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let b = match read_or_report(ctx, right) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let verdict = match decide_iso(&a.data, &b.data, weak) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    if ctx.format == Format::Json {
        let mut v = report::verdict(&verdict);
        v["command"] = json!("iso");
        v["weak"] = json!(weak);
        ctx.json(&v);
    } else {
        match &verdict {
            IsoVerdict::Isomorphic(w) => {
                let head = ctx.paint("Isomorphic", true);
                let _ = writeln!(ctx.out, "{head}");
                let _ = writeln!(ctx.out, "psi: {}", w.psi);
                let map: Vec<String> = w
                    .stratum_map
                    .iter()
                    .map(|(k, v)| format!("{k} -> {v}"))
                    .collect();
                let _ = writeln!(ctx.out, "strata: {}", map.join(", "));
            }
            IsoVerdict::NotIsomorphic(c) => {
                let head = ctx.paint("NotIsomorphic", false);
                let _ = writeln!(ctx.out, "{head}: {c}");
            }
            IsoVerdict::Unknown(why) => {
                let _ = writeln!(ctx.out, "Unknown: {why}");
            }
        }
    }
    match verdict {
        IsoVerdict::Unknown(_) => EXIT_UNKNOWN,
        _ => EXIT_OK,
    }
}

fn homology_cmd(ctx: &mut Ctx, file: &Path, dump: Option<&Path>) -> i32 {
    let p = match read_or_report(ctx, file) {
        Ok(p) => p,
        Err(c) => return c,
    };
    let complex = match build_canonical_complex(&p.data) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {}: {e}", file.display());
            return EXIT_INVALID;
        }
    };
    if let Some(path) = dump {
        if let Err(e) = std::fs::write(path, complex.to_dump_text()) {
            let _ = writeln!(ctx.err, "error: {}: cannot write: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    let h = homology(&complex);
    if ctx.format == Format::Json {
        ctx.json(&json!({
            "command": "homology",
            "file": file.display().to_string(),
            "dims": complex.dims(),
            "homology": report::homology(&h),
            "euler_characteristic": complex.euler_characteristic(),
        }));
    } else {
        let _ = writeln!(ctx.out, "{h}");
        let _ = writeln!(ctx.out, "cells per degree: {:?}", complex.dims());
        if let Some(path) = dump {
            let _ = writeln!(ctx.out, "chain complex written to {}", path.display());
        }
    }
    EXIT_OK
}

fn tables(ctx: &mut Ctx) -> i32 {
    let t = match enumerate_tables() {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    if ctx.format == Format::Json {
        ctx.json(&json!({ "command": "tables", "table1": t.table1, "table2": t.table2, "table3": t.table3 }));
    } else {
        let _ = write!(ctx.out, "{t}");
    }
    EXIT_OK
}
