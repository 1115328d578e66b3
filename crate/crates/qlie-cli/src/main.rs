//! `qlie`: build, verify, decompose, and fingerprint quadratic Lie
//! algebras, either from the bundled catalogue or from JSON files.
//!
//! Exit codes: 0 when every check passed, 1 when the input was readable
//! but a check failed, 2 when the input could not be used at all
//! (missing file, schema violation, unknown identifier, bad arguments).

use clap::{Args, Parser, Subcommand, ValueEnum};
use qlie_core::catalogue::{self, CatalogueEntry, EntryReport};
use qlie_core::io;
use qlie_core::scalar::parse_scalar;
use qlie_core::sl2::decompose;
use qlie_core::{FieldMode, Fingerprint, Irreducibility, QuadraticLieAlgebra, Scalar};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Version of the report documents this binary prints.
const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "qlie",
    version,
    about = "Exact-arithmetic toolkit for low-dimensional quadratic Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format; json reports are byte-identical across runs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Closed,
    Real,
}

impl From<ModeArg> for FieldMode {
    fn from(m: ModeArg) -> FieldMode {
        match m {
            ModeArg::Closed => FieldMode::Closed,
            ModeArg::Real => FieldMode::Real,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the bracket and form axioms plus the structural identities
    /// of an algebra file.
    Verify {
        file: PathBuf,
        /// Reinterpret the algebra in this field mode instead of the
        /// mode recorded in the file.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Work with the bundled catalogue.
    #[command(subcommand)]
    Catalogue(CatalogueCommand),
    /// Split an algebra file with a designated generator triple into
    /// isotypic components.
    Decompose { file: PathBuf },
    /// Fingerprint an algebra file and match it against the catalogue.
    Identify { file: PathBuf },
    /// Compute the space of invariant symmetric forms and sweep the
    /// signatures it attains.
    Forms {
        file: PathBuf,
        /// Comma-separated exact coefficients for the signature sweep.
        #[arg(long, default_value = "-2,-1,1,2", allow_hyphen_values = true)]
        samples: String,
    },
}

#[derive(Subcommand)]
enum CatalogueCommand {
    /// List the roster.
    List(ModeOpt),
    /// Build one entry and write it as an algebra file.
    Build {
        id: String,
        #[arg(long)]
        out: PathBuf,
        /// Required when the identifier exists in both rosters.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
    },
    /// Build and verify every roster entry.
    VerifyAll(ModeOpt),
}

#[derive(Args)]
struct ModeOpt {
    /// Restrict to one roster; default is both.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
}

/// Input that could not be used; always exits with code 2.
#[derive(Debug)]
struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<io::IoError> for InputError {
    fn from(e: io::IoError) -> Self {
        InputError(e.to_string())
    }
}

impl From<catalogue::CatalogueError> for InputError {
    fn from(e: catalogue::CatalogueError) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    if cli.format == Format::Text {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qlie: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, InputError> {
    match &cli.command {
        Command::Verify { file, mode } => cmd_verify(file, mode.map(Into::into), cli.format),
        Command::Catalogue(CatalogueCommand::List(opt)) => {
            cmd_list(opt.mode.map(Into::into), cli.format)
        }
        Command::Catalogue(CatalogueCommand::Build { id, out, mode }) => {
            cmd_build(id, out, mode.map(Into::into), cli.format)
        }
        Command::Catalogue(CatalogueCommand::VerifyAll(opt)) => {
            cmd_verify_all(opt.mode.map(Into::into), cli.format)
        }
        Command::Decompose { file } => cmd_decompose(file, cli.format),
        Command::Identify { file } => cmd_identify(file, cli.format),
        Command::Forms { file, samples } => cmd_forms(file, samples, cli.format),
    }
}

fn emit(format: Format, report: &impl Serialize, text: String) {
    match format {
        Format::Json => {
            let mut doc = serde_json::to_string_pretty(report).expect("report serialization");
            doc.push('\n');
            print!("{doc}");
        }
        Format::Text => print!("{text}"),
    }
}

#[derive(Serialize)]
struct CheckDoc {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    command: &'static str,
    name: String,
    dim: usize,
    mode: FieldMode,
    checks: Vec<CheckDoc>,
    /// Checks that do not apply to this input, with the reason.
    skipped: Vec<String>,
    irreducibility: String,
    passed: bool,
}

fn irreducibility_line(irr: &Irreducibility) -> String {
    match irr {
        Irreducibility::Irreducible { evidence } => {
            format!("certified irreducible ({evidence})")
        }
        Irreducibility::Reducible { reason, .. } => format!("reducible ({reason})"),
        Irreducibility::Inconclusive { detail, .. } => format!("not certified ({detail})"),
    }
}

/// Axioms plus the structural identities that hold for every valid
/// input: the derived subalgebra's orthogonal is the center, and
/// perfect is equivalent to centerless. The radical identities are
/// checked only where they are theorems, namely for non-solvable
/// algebras certified to have no proper nondegenerate ideal.
fn verify_checks(q: &QuadraticLieAlgebra) -> (Vec<CheckDoc>, Vec<String>, String) {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let lie_defects = q.lie.validate();
    checks.push(CheckDoc {
        name: "bracket-axioms".into(),
        passed: lie_defects.is_empty(),
        detail: lie_defects
            .first()
            .map(|d| d.to_string())
            .unwrap_or_else(|| "antisymmetry and the Jacobi identity hold".into()),
    });
    let quad_defects = q.validate_quadratic();
    checks.push(CheckDoc {
        name: "form-axioms".into(),
        passed: quad_defects.is_empty(),
        detail: quad_defects
            .first()
            .map(|d| d.to_string())
            .unwrap_or_else(|| "symmetric, nondegenerate, invariant".into()),
    });
    if !(lie_defects.is_empty() && quad_defects.is_empty()) {
        return (checks, skipped, "skipped: axioms failed".into());
    }
    let orth = q.orthogonality_report();
    checks.push(CheckDoc {
        name: "orthogonality".into(),
        passed: orth.passes(),
        detail: format!(
            "derived-perp equals center: {}; perfect: {}; centerless: {}; ideal-perp brackets vanish: {}",
            orth.derived_perp_equals_center,
            orth.perfect,
            orth.centerless,
            orth.ideal_perp_brackets.iter().all(|(_, ok)| *ok)
        ),
    });
    let irr = q.is_irreducible();
    let irr_line = irreducibility_line(&irr);
    let radical_dim = q.lie.radical().dim();
    if radical_dim == q.dim() {
        skipped.push("radical identities: algebra is solvable".into());
    } else if radical_dim == 0 {
        skipped.push("radical identities: radical is zero".into());
    } else if !irr.is_certified_irreducible() {
        skipped.push(
            "radical identities: they are theorems only without proper nondegenerate ideals"
                .into(),
        );
    } else {
        let report = q.levi_radical_report();
        checks.push(CheckDoc {
            name: "radical-isotropy".into(),
            passed: report.rperp_contained_in_radical && report.rperp_central_in_radical,
            detail: format!(
                "radical-perp contained in radical: {}; central in it: {}",
                report.rperp_contained_in_radical, report.rperp_central_in_radical
            ),
        });
        checks.push(CheckDoc {
            name: "radical-dichotomy".into(),
            passed: report.dichotomy_holds(),
            detail: format!(
                "radical equals its perp: {}; perp inside derived radical: {}",
                report.r_equals_rperp, report.rperp_in_derived_radical
            ),
        });
    }
    (checks, skipped, irr_line)
}

fn cmd_verify(file: &PathBuf, mode: Option<FieldMode>, format: Format) -> Result<bool, InputError> {
    let mut q = io::read_file(file)?;
    if let Some(m) = mode {
        q.mode = m;
    }
    let (checks, skipped, irreducibility) = verify_checks(&q);
    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        schema_version: REPORT_SCHEMA_VERSION,
        command: "verify",
        name: q.lie.name().to_string(),
        dim: q.dim(),
        mode: q.mode,
        checks,
        skipped,
        irreducibility,
        passed,
    };
    let mut text = format!(
        "algebra {} (dim {}, mode {})\n",
        report.name, report.dim, report.mode
    );
    for c in &report.checks {
        let _ = writeln!(
            text,
            "check {}: {} ({})",
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    for s in &report.skipped {
        let _ = writeln!(text, "skipped {s}");
    }
    let _ = writeln!(text, "irreducibility: {}", report.irreducibility);
    let _ = writeln!(text, "result: {}", if passed { "pass" } else { "FAIL" });
    emit(format, &report, text);
    Ok(passed)
}

#[derive(Serialize)]
struct ListEntryDoc {
    id: &'static str,
    mode: FieldMode,
    dim: usize,
    radical_dim: usize,
    killing_rank: usize,
    #[serde(skip_serializing_if = "str::is_empty")]
    notes: &'static str,
}

#[derive(Serialize)]
struct ListReport {
    schema_version: u32,
    command: &'static str,
    entries: Vec<ListEntryDoc>,
}

fn selected_modes(mode: Option<FieldMode>) -> Vec<FieldMode> {
    match mode {
        Some(m) => vec![m],
        None => vec![FieldMode::Closed, FieldMode::Real],
    }
}

fn cmd_list(mode: Option<FieldMode>, format: Format) -> Result<bool, InputError> {
    let entries: Vec<ListEntryDoc> = selected_modes(mode)
        .into_iter()
        .flat_map(|m| catalogue::catalogue(m).iter())
        .map(|e| ListEntryDoc {
            id: e.id,
            mode: e.mode,
            dim: e.dim,
            radical_dim: e.radical_dim,
            killing_rank: e.killing_rank,
            notes: e.notes,
        })
        .collect();
    let report = ListReport {
        schema_version: REPORT_SCHEMA_VERSION,
        command: "catalogue-list",
        entries,
    };
    let mut text = String::new();
    for e in &report.entries {
        let _ = writeln!(
            text,
            "{}/{}  dim {}  radical {}  killing rank {}",
            e.mode, e.id, e.dim, e.radical_dim, e.killing_rank
        );
    }
    let _ = writeln!(text, "total: {} entries", report.entries.len());
    emit(format, &report, text);
    Ok(true)
}

#[derive(Serialize)]
struct BuildReport {
    schema_version: u32,
    command: &'static str,
    id: String,
    mode: FieldMode,
    dim: usize,
    out: String,
}

fn cmd_build(
    id: &str,
    out: &PathBuf,
    mode: Option<FieldMode>,
    format: Format,
) -> Result<bool, InputError> {
    let mode = match mode {
        Some(m) => m,
        None => {
            let hits: Vec<FieldMode> = [FieldMode::Closed, FieldMode::Real]
                .into_iter()
                .filter(|m| catalogue::find(id, *m).is_some())
                .collect();
            match hits.as_slice() {
                [only] => *only,
                [] => {
                    return Err(InputError(format!("no entry named {id} in either roster")))
                }
                _ => {
                    return Err(InputError(format!(
                        "{id} exists in both rosters; pass --mode closed or --mode real"
                    )))
                }
            }
        }
    };
    let q = catalogue::build(id, mode)?;
    io::write_file(out, &q)?;
    let report = BuildReport {
        schema_version: REPORT_SCHEMA_VERSION,
        command: "catalogue-build",
        id: id.to_string(),
        mode,
        dim: q.dim(),
        out: out.display().to_string(),
    };
    let text = format!("wrote {}/{} (dim {}) to {}\n", mode, id, q.dim(), report.out);
    emit(format, &report, text);
    Ok(true)
}

#[derive(Serialize)]
struct VerifyAllEntryDoc {
    id: String,
    mode: FieldMode,
    dim: usize,
    passed: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct VerifyAllReport {
    schema_version: u32,
    command: &'static str,
    entries: Vec<VerifyAllEntryDoc>,
    passed: bool,
}

fn cmd_verify_all(mode: Option<FieldMode>, format: Format) -> Result<bool, InputError> {
    let targets: Vec<&'static CatalogueEntry> = selected_modes(mode)
        .into_iter()
        .flat_map(|m| catalogue::catalogue(m).iter())
        .collect();
    let reports: Vec<(usize, EntryReport)> = targets
        .par_iter()
        .enumerate()
        .map(|(i, e)| (i, catalogue::verify_entry(e)))
        .collect();
    let entries: Vec<VerifyAllEntryDoc> = reports
        .into_iter()
        .map(|(i, r)| VerifyAllEntryDoc {
            id: r.id.clone(),
            mode: r.mode,
            dim: targets[i].dim,
            passed: r.passed(),
            failures: r.failures(),
        })
        .collect();
    let passed = entries.iter().all(|e| e.passed);
    let report = VerifyAllReport {
        schema_version: REPORT_SCHEMA_VERSION,
        command: "catalogue-verify-all",
        entries,
        passed,
    };
    let mut text = String::new();
    for e in &report.entries {
        let _ = writeln!(
            text,
            "{}/{} (dim {}): {}{}",
            e.mode,
            e.id,
            e.dim,
            if e.passed { "pass" } else { "FAIL" },
            if e.failures.is_empty() {
                String::new()
            } else {
                format!(" [{}]", e.failures.join("; "))
            }
        );
    }
    let _ = writeln!(
        text,
        "result: {} ({} entries)",
        if passed { "pass" } else { "FAIL" },
        report.entries.len()
    );
    emit(format, &report, text);
    Ok(passed)
}

#[derive(Serialize)]
struct SummandDoc {
    label: String,
    multiplicity: usize,
    isotypic_dim: usize,
}

#[derive(Serialize)]
struct DecomposeReport {
    schema_version: u32,
    command: &'static str,
    name: String,
    dim: usize,
    triple_kind: String,
    summands: Vec<SummandDoc>,
    total_summands: usize,
    passed: bool,
}

fn cmd_decompose(file: &PathBuf, format: Format) -> Result<bool, InputError> {
    let q = io::read_file(file)?;
    let Some(levi) = q.levi.clone() else {
        return Err(InputError(format!(
            "{} designates no generator triple; decomposition needs one",
            file.display()
        )));
    };
    let defects = q.lie.validate();
    if let Some(d) = defects.first() {
        emit(
            format,
            &serde_json::json!({
                "schema_version": REPORT_SCHEMA_VERSION,
                "command": "decompose",
                "error": d.to_string(),
                "passed": false,
            }),
            format!("check bracket-axioms: FAIL ({d})\nresult: FAIL\n"),
        );
        return Ok(false);
    }
    match decompose(&q.lie, &levi) {
        Ok(dec) => {
            let summands: Vec<SummandDoc> = dec
                .summands
                .iter()
                .map(|s| SummandDoc {
                    label: s.label.clone(),
                    multiplicity: s.multiplicity,
                    isotypic_dim: s.isotypic.dim(),
                })
                .collect();
            let report = DecomposeReport {
                schema_version: REPORT_SCHEMA_VERSION,
                command: "decompose",
                name: q.lie.name().to_string(),
                dim: q.dim(),
                triple_kind: format!("{:?}", dec.kind).to_lowercase(),
                total_summands: dec.summand_count(),
                summands,
                passed: true,
            };
            let mut text = format!(
                "algebra {} (dim {}), {} triple\n",
                report.name, report.dim, report.triple_kind
            );
            for s in &report.summands {
                let _ = writeln!(
                    text,
                    "{} x {} (isotypic dim {})",
                    s.label, s.multiplicity, s.isotypic_dim
                );
            }
            let _ = writeln!(text, "summands: {}", report.total_summands);
            emit(format, &report, text);
            Ok(true)
        }
        Err(e) => {
            emit(
                format,
                &serde_json::json!({
                    "schema_version": REPORT_SCHEMA_VERSION,
                    "command": "decompose",
                    "error": e.to_string(),
                    "passed": false,
                }),
                format!("check designated-triple: FAIL ({e})\nresult: FAIL\n"),
            );
            Ok(false)
        }
    }
}

#[derive(Serialize)]
struct IdentifyReport {
    schema_version: u32,
    command: &'static str,
    name: String,
    dim: usize,
    mode: FieldMode,
    fingerprint: Fingerprint,
    matches: Vec<String>,
    passed: bool,
}

/// Equality on fingerprints, ignoring module multiplicities when the
/// probe carries none (files without a designated triple can still be
/// identified).
fn fingerprint_matches(probe: &Fingerprint, entry: &Fingerprint) -> bool {
    if probe.module_multiplicities.is_some() {
        probe == entry
    } else {
        let mut stripped = entry.clone();
        stripped.module_multiplicities = None;
        *probe == stripped
    }
}

fn cmd_identify(file: &PathBuf, format: Format) -> Result<bool, InputError> {
    let q = io::read_file(file)?;
    let defects = q.lie.validate();
    let quad_defects = q.validate_quadratic();
    if !(defects.is_empty() && quad_defects.is_empty()) {
        let first = defects
            .first()
            .map(|d| d.to_string())
            .or_else(|| quad_defects.first().map(|d| d.to_string()))
            .unwrap_or_default();
        emit(
            format,
            &serde_json::json!({
                "schema_version": REPORT_SCHEMA_VERSION,
                "command": "identify",
                "error": first,
                "passed": false,
            }),
            format!("check axioms: FAIL ({first})\nresult: FAIL\n"),
        );
        return Ok(false);
    }
    let probe = q
        .fingerprint()
        .map_err(|e| InputError(format!("designated triple is unusable: {e}")))?;
    let mut matches = Vec::new();
    for entry in catalogue::catalogue(q.mode) {
        if entry.dim != probe.dim {
            continue;
        }
        let candidate = catalogue::build(entry.id, entry.mode)
            .expect("catalogue entries build")
            .fingerprint()
            .expect("catalogue entries fingerprint");
        if fingerprint_matches(&probe, &candidate) {
            matches.push(entry.id.to_string());
        }
    }
    let report = IdentifyReport {
        schema_version: REPORT_SCHEMA_VERSION,
        command: "identify",
        name: q.lie.name().to_string(),
        dim: q.dim(),
        mode: q.mode,
        fingerprint: probe,
        matches,
        passed: true,
    };
    let mut text = format!(
        "algebra {} (dim {}, mode {})\n",
        report.name, report.dim, report.mode
    );
    let _ = writeln!(
        text,
        "fingerprint: {}",
        serde_json::to_string(&report.fingerprint).expect("fingerprint serialization")
    );
    if report.matches.is_empty() {
        let _ = writeln!(text, "matches: none");
    } else {
        let _ = writeln!(text, "matches: {}", report.matches.join(", "));
    }
    emit(format, &report, text);
    Ok(true)
}

#[derive(Serialize)]
struct FormsReport {
    schema_version: u32,
    command: &'static str,
    name: String,
    dim: usize,
    mode: FieldMode,
    form_space_dim: usize,
    samples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    signatures: Option<Vec<(usize, usize)>>,
    passed: bool,
}

fn cmd_forms(file: &PathBuf, samples: &str, format: Format) -> Result<bool, InputError> {
    let parsed: Result<Vec<Scalar>, _> = samples
        .split(',')
        .map(|t| parse_scalar(t.trim()))
        .collect();
    let coeffs =
        parsed.map_err(|e| InputError(format!("bad --samples value {samples:?}: {e}")))?;
    if coeffs.is_empty() {
        return Err(InputError("--samples needs at least one coefficient".into()));
    }
    let q = io::read_file(file)?;
    let defects = q.lie.validate();
    if let Some(d) = defects.first() {
        emit(
            format,
            &serde_json::json!({
                "schema_version": REPORT_SCHEMA_VERSION,
                "command": "forms",
                "error": d.to_string(),
                "passed": false,
            }),
            format!("check bracket-axioms: FAIL ({d})\nresult: FAIL\n"),
        );
        return Ok(false);
    }
    let space = q.invariant_form_space();
    let signatures = q
        .signature_set_with(&coeffs)
        .map(|set| set.into_iter().collect::<Vec<_>>());
    let report = FormsReport {
        schema_version: REPORT_SCHEMA_VERSION,
        command: "forms",
        name: q.lie.name().to_string(),
        dim: q.dim(),
        mode: q.mode,
        form_space_dim: space.len(),
        samples: samples.split(',').map(|t| t.trim().to_string()).collect(),
        signatures,
        passed: true,
    };
    let mut text = format!(
        "algebra {} (dim {}, mode {})\n",
        report.name, report.dim, report.mode
    );
    let _ = writeln!(
        text,
        "invariant form space dimension: {}",
        report.form_space_dim
    );
    let _ = writeln!(text, "samples: {}", report.samples.join(", "));
    match &report.signatures {
        Some(sigs) => {
            let rendered: Vec<String> =
                sigs.iter().map(|(p, n)| format!("({p}, {n})")).collect();
            let _ = writeln!(text, "signatures: {}", rendered.join(", "));
        }
        None => {
            let _ = writeln!(text, "signatures: not applicable in closed mode");
        }
    }
    emit(format, &report, text);
    Ok(true)
}
