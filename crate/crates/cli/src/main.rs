//! `lauder` — build weighted products of finite-dimensional algebras, solve
//! for derivation-style map spaces, and verify the structure claims, all in
//! exact rational arithmetic.
//!
//! Exit codes: `0` success, `1` claim failure, `2` input or context error,
//! `3` JSON parse error, `4` at least one claim was skipped for unmet
//! hypotheses and `--allow-vacuous` was not given.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use lauder_core::algebra::{Algebra, AlgebraJson, Character};
use lauder_core::lau::{direct_product, LauContext};
use lauder_core::sampling::seed_from_env;
use lauder_core::scalar::Scalar;
use lauder_core::solver::{
    derivation_space, generalized_derivation_space, generalized_jordan_space,
    jordan_derivation_space, MapSpace,
};
use lauder_core::theorems::{run_claims, ClaimRun, ClaimStatus, RunOptions, TheoremError};
use lauder_core::zoo::{zoo_contexts, zoo_get, zoo_list, ZooEntry};

const EXIT_OK: u8 = 0;
const EXIT_CLAIM_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_VACUOUS: u8 = 4;

/// Errors that abort a command, tagged with the exit code they map to.
#[derive(Debug)]
enum CliError {
    /// Unusable input: missing files, unknown names, failed validation.
    Input(String),
    /// Structurally unreadable input: invalid JSON or wrong schema shape.
    Parse(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Parse(_) => EXIT_PARSE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(msg) | CliError::Parse(msg) => msg,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lauder",
    version,
    about = "Weighted products of finite-dimensional algebras: construction, \
             derivation-space solving, and claim verification in exact arithmetic",
    long_about = "Weighted products of finite-dimensional algebras: construction, \
                  derivation-space solving, and claim verification in exact rational \
                  arithmetic.\n\n\
                  Algebra and character inputs are either names from the built-in \
                  collection (see `lauder zoo list`) or paths to JSON files \
                  (`{\"dim\", \"labels\", \"sc\"}` and `{\"values\"}`; rationals are \
                  strings like \"2/3\").  Wherever the three weighting functionals \
                  appear, `--phi` defaults to `--theta` and `--gamma` defaults to \
                  `--phi`, so giving only `--theta` reproduces the classical \
                  single-character setting.\n\n\
                  The environment variable LAUDER_SEED (u64) fixes the seed of the \
                  random-point sampler used by closure spot-checks; the default is a \
                  fixed constant, so runs are reproducible."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra or character JSON file.
    Check(CheckArgs),
    /// Build the weighted product of two algebras and write its JSON.
    Lau(LauArgs),
    /// Solve for a derivation-style map space and write its basis.
    Solve(SolveArgs),
    /// Run claim checks against a context and write a report.
    Verify(VerifyArgs),
    /// Inspect or export the built-in algebra collection.
    Zoo(ZooArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Path to an algebra (`{"dim", "labels", "sc"}`) or character
    /// (`{"values"}`) JSON file.
    path: PathBuf,
    /// For character files: algebra (name or path) to check
    /// multiplicativity against.
    #[arg(long)]
    algebra: Option<String>,
}

#[derive(Args)]
struct LauArgs {
    /// A factor: collection name or algebra JSON path.
    #[arg(long)]
    a: String,
    /// B factor: collection name or algebra JSON path.
    #[arg(long)]
    b: String,
    /// Weighting character on B: named character of a collection B, or a
    /// character JSON path.  Required unless --direct.
    #[arg(long)]
    theta: Option<String>,
    /// First substitution character; defaults to theta.
    #[arg(long)]
    phi: Option<String>,
    /// Second substitution character; defaults to phi.
    #[arg(long)]
    gamma: Option<String>,
    /// Build the plain direct product instead (no character weighting);
    /// for cross-checks only.
    #[arg(long)]
    direct: bool,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum SolveKind {
    /// Two-variable product rule on a single algebra.
    Der,
    /// Squared product rule on a single algebra.
    Jder,
    /// Two-variable rule on a weighted product context.
    LauDer,
    /// Squared rule on a weighted product context.
    LauJder,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    kind: SolveKind,
    /// For der/jder: the algebra (name or path).
    #[arg(long)]
    algebra: Option<String>,
    /// For lau-der/lau-jder: the A factor.
    #[arg(long)]
    a: Option<String>,
    /// For lau-der/lau-jder: the B factor.
    #[arg(long)]
    b: Option<String>,
    /// Weighting character on B (see `lauder lau --help` for resolution).
    #[arg(long)]
    theta: Option<String>,
    /// First substitution character; defaults to theta.
    #[arg(long)]
    phi: Option<String>,
    /// Second substitution character; defaults to phi.
    #[arg(long)]
    gamma: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Context: a collection context name (see `lauder zoo list`) or a path
    /// to a context-spec JSON file with fields `a_source`, `b_source`,
    /// `theta`, optional `phi`/`gamma` (same defaulting as `lauder lau`),
    /// and optional `options.claims` / `options.strict`.
    #[arg(long)]
    ctx: String,
    /// Comma-separated claim ids or dotted prefixes (e.g. `Thm2.2,Cor2.5`);
    /// all claims when omitted.  Overrides the context-spec filter.
    #[arg(long, value_delimiter = ',')]
    claims: Option<Vec<String>>,
    /// Exit 0 even when some claims were skipped for unmet hypotheses.
    #[arg(long)]
    allow_vacuous: bool,
    /// Report output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ZooArgs {
    #[command(subcommand)]
    command: ZooCommand,
}

#[derive(Subcommand)]
enum ZooCommand {
    /// List built-in algebras (with characters and tags) and contexts.
    List,
    /// Write the JSON files for a built-in algebra or context into a
    /// directory.
    Export {
        /// Algebra or context name.
        name: String,
        /// Target directory (created if missing).
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Lau(args) => cmd_lau(&args),
        Command::Solve(args) => cmd_solve(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Zoo(args) => match args.command {
            ZooCommand::List => cmd_zoo_list(),
            ZooCommand::Export { name, out } => cmd_zoo_export(&name, &out),
        },
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

fn read_json_file(path: &Path) -> Result<serde_json::Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{} is not valid JSON: {e}", path.display())))
}

fn algebra_from_value(
    value: serde_json::Value,
    origin: &str,
) -> Result<Algebra, CliError> {
    let raw: AlgebraJson = serde_json::from_value(value)
        .map_err(|e| CliError::Parse(format!("{origin}: not an algebra document: {e}")))?;
    let alg = Algebra::from_json(raw)
        .map_err(|e| CliError::Input(format!("{origin}: {e}")))?;
    let violations = alg.check_associativity();
    if !violations.is_empty() {
        let mut msg = format!("{origin}: structure constants are not associative:");
        for v in violations.iter().take(5) {
            let _ = write!(msg, "\n  {v}");
        }
        if violations.len() > 5 {
            let _ = write!(msg, "\n  … and {} more", violations.len() - 5);
        }
        return Err(CliError::Input(msg));
    }
    Ok(alg)
}

/// A source is a collection name when it matches one, otherwise a file path.
fn resolve_algebra(src: &str) -> Result<(Algebra, Option<ZooEntry>), CliError> {
    if zoo_list().iter().any(|n| *n == src) {
        let entry = zoo_get(src).map_err(|e| CliError::Input(e.to_string()))?;
        return Ok((entry.algebra.clone(), Some(entry)));
    }
    let value = read_json_file(Path::new(src))?;
    Ok((algebra_from_value(value, src)?, None))
}

/// A character source is a named character of the B entry when B came from
/// the collection and the name matches, otherwise a file path.
fn resolve_character(
    src: &str,
    b_entry: Option<&ZooEntry>,
    b: &Algebra,
    role: &str,
) -> Result<Character, CliError> {
    if let Some(entry) = b_entry {
        if let Some((_, chi)) = entry.characters.iter().find(|(name, _)| name == src) {
            return Ok(chi.clone());
        }
    }
    let path = Path::new(src);
    if !path.exists() {
        let mut msg = format!("{role} = {src:?} is neither a character of the B factor nor a file");
        if let Some(entry) = b_entry {
            let names: Vec<&str> = entry
                .characters
                .iter()
                .map(|(name, _)| name.as_str())
                .collect();
            let _ = write!(msg, " (characters of {}: {})", entry.name, names.join(", "));
        }
        return Err(CliError::Input(msg));
    }
    let value = read_json_file(path)?;
    #[derive(Deserialize)]
    struct CharacterJson {
        values: Vec<Scalar>,
    }
    let raw: CharacterJson = serde_json::from_value(value)
        .map_err(|e| CliError::Parse(format!("{src}: not a character document: {e}")))?;
    let chi = Character::new(raw.values);
    let violations = b.verify_character(&chi);
    if let Some(first) = violations.first() {
        return Err(CliError::Input(format!(
            "{role} from {src} is not a valid character on the B factor: {first}"
        )));
    }
    Ok(chi)
}

struct ContextArgs<'s> {
    a: &'s str,
    b: &'s str,
    theta: Option<&'s str>,
    phi: Option<&'s str>,
    gamma: Option<&'s str>,
}

/// Resolves factors and characters and applies the defaulting chain
/// `phi := theta`, `gamma := phi`.
fn build_context(args: &ContextArgs) -> Result<LauContext, CliError> {
    let (a, _) = resolve_algebra(args.a)?;
    let (b, b_entry) = resolve_algebra(args.b)?;
    let theta_src = args
        .theta
        .ok_or_else(|| CliError::Input("--theta is required".to_string()))?;
    let theta = resolve_character(theta_src, b_entry.as_ref(), &b, "theta")?;
    let phi = match args.phi {
        Some(src) => resolve_character(src, b_entry.as_ref(), &b, "phi")?,
        None => theta.clone(),
    };
    let gamma = match args.gamma {
        Some(src) => resolve_character(src, b_entry.as_ref(), &b, "gamma")?,
        None => phi.clone(),
    };
    LauContext::new(a, b, theta, phi, gamma).map_err(|e| CliError::Input(e.to_string()))
}

/// Context-spec file consumed by `verify --ctx <path>`.
#[derive(Deserialize)]
struct ContextSpecFile {
    a_source: String,
    b_source: String,
    theta: String,
    #[serde(default)]
    phi: Option<String>,
    #[serde(default)]
    gamma: Option<String>,
    #[serde(default)]
    options: SpecOptions,
}

#[derive(Default, Deserialize)]
struct SpecOptions {
    /// Claim ids or dotted prefixes to run; all when absent.
    #[serde(default)]
    claims: Option<Vec<String>>,
    /// Treat skipped-for-hypotheses claims as hard failures (exit 4 even
    /// with --allow-vacuous).
    #[serde(default)]
    strict: Option<bool>,
}

fn resolve_verify_context(src: &str) -> Result<(LauContext, SpecOptions), CliError> {
    if let Some((_, ctx)) = zoo_contexts().into_iter().find(|(name, _)| name == src) {
        return Ok((ctx, SpecOptions::default()));
    }
    let path = Path::new(src);
    if !path.exists() {
        return Err(CliError::Input(format!(
            "{src:?} is neither a collection context (try `lauder zoo list`) nor a file"
        )));
    }
    let value = read_json_file(path)?;
    let spec: ContextSpecFile = serde_json::from_value(value)
        .map_err(|e| CliError::Parse(format!("{src}: not a context spec: {e}")))?;
    let ctx = build_context(&ContextArgs {
        a: &spec.a_source,
        b: &spec.b_source,
        theta: Some(&spec.theta),
        phi: spec.phi.as_deref(),
        gamma: spec.gamma.as_deref(),
    })?;
    Ok((ctx, spec.options))
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

fn emit(out: Option<&Path>, payload: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output types serialize");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn cmd_check(args: &CheckArgs) -> Result<u8, CliError> {
    let value = read_json_file(&args.path)?;
    let origin = args.path.display().to_string();
    let object = value
        .as_object()
        .ok_or_else(|| CliError::Parse(format!("{origin}: expected a JSON object")))?;
    if object.contains_key("sc") {
        let alg = algebra_from_value(value.clone(), &origin)?;
        println!(
            "OK: associative algebra, dim {}, labels [{}]",
            alg.dim(),
            alg.labels().join(", ")
        );
        return Ok(EXIT_OK);
    }
    if object.contains_key("values") {
        #[derive(Deserialize)]
        struct CharacterJson {
            values: Vec<Scalar>,
        }
        let raw: CharacterJson = serde_json::from_value(value.clone())
            .map_err(|e| CliError::Parse(format!("{origin}: not a character document: {e}")))?;
        let chi = Character::new(raw.values);
        if let Some(alg_src) = &args.algebra {
            let (alg, _) = resolve_algebra(alg_src)?;
            let violations = alg.verify_character(&chi);
            if !violations.is_empty() {
                let mut msg = format!("{origin}: not a character on {alg_src}:");
                for v in &violations {
                    let _ = write!(msg, "\n  {v}");
                }
                return Err(CliError::Input(msg));
            }
            println!("OK: character on {alg_src}, dim {}", chi.dim());
        } else {
            if chi.is_zero() {
                return Err(CliError::Input(format!(
                    "{origin}: functional is identically zero"
                )));
            }
            println!("OK: nonzero functional, dim {} (no algebra given, multiplicativity unchecked)", chi.dim());
        }
        return Ok(EXIT_OK);
    }
    Err(CliError::Input(format!(
        "{origin}: unrecognized document — expected an algebra {{\"dim\", \"labels\", \"sc\"}} \
         or a character {{\"values\"}}"
    )))
}

fn cmd_lau(args: &LauArgs) -> Result<u8, CliError> {
    let (product, a_dim, b_dim) = if args.direct {
        let (a, _) = resolve_algebra(&args.a)?;
        let (b, _) = resolve_algebra(&args.b)?;
        let product = direct_product(&a, &b);
        (product, a.dim(), b.dim())
    } else {
        let ctx = build_context(&ContextArgs {
            a: &args.a,
            b: &args.b,
            theta: args.theta.as_deref(),
            phi: args.phi.as_deref(),
            gamma: args.gamma.as_deref(),
        })?;
        (ctx.product().clone(), ctx.a().dim(), ctx.b().dim())
    };
    let mut doc = serde_json::to_value(&product).expect("algebra serializes");
    doc.as_object_mut()
        .expect("algebra serializes to an object")
        .insert("blocks".to_string(), serde_json::json!({ "a": a_dim, "b": b_dim }));
    emit(args.out.as_deref(), &to_pretty_json(&doc))?;
    if args.out.is_some() {
        eprintln!(
            "wrote product algebra (dim {}) to {}",
            product.dim(),
            args.out.as_ref().expect("checked").display()
        );
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SpaceDocument {
    dim: usize,
    basis: Vec<Vec<Vec<Scalar>>>,
}

fn space_document(space: &MapSpace) -> SpaceDocument {
    let basis = space
        .basis()
        .iter()
        .map(|map| {
            (0..map.dim())
                .map(|r| map.matrix().row(r).to_vec())
                .collect()
        })
        .collect();
    SpaceDocument {
        dim: space.dim(),
        basis,
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<u8, CliError> {
    let space = match args.kind {
        SolveKind::Der | SolveKind::Jder => {
            let src = args.algebra.as_deref().ok_or_else(|| {
                CliError::Input("--algebra is required for kinds der and jder".to_string())
            })?;
            let (alg, _) = resolve_algebra(src)?;
            match args.kind {
                SolveKind::Der => derivation_space(&alg),
                _ => jordan_derivation_space(&alg),
            }
        }
        SolveKind::LauDer | SolveKind::LauJder => {
            let (a, b) = match (args.a.as_deref(), args.b.as_deref()) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(CliError::Input(
                        "--a and --b are required for kinds lau-der and lau-jder".to_string(),
                    ))
                }
            };
            let ctx = build_context(&ContextArgs {
                a,
                b,
                theta: args.theta.as_deref(),
                phi: args.phi.as_deref(),
                gamma: args.gamma.as_deref(),
            })?;
            match args.kind {
                SolveKind::LauDer => generalized_derivation_space(&ctx),
                _ => generalized_jordan_space(&ctx),
            }
        }
    };
    emit(args.out.as_deref(), &to_pretty_json(&space_document(&space)))?;
    if args.out.is_some() {
        eprintln!(
            "wrote space of dimension {} to {}",
            space.dim(),
            args.out.as_ref().expect("checked").display()
        );
    }
    Ok(EXIT_OK)
}

fn status_label(status: ClaimStatus) -> &'static str {
    match status {
        ClaimStatus::Pass => "pass",
        ClaimStatus::Fail => "FAIL",
        ClaimStatus::HypothesisNotMet => "hypothesis-not-met",
    }
}

/// Exit-code policy for a finished claim run: failures dominate, then
/// skipped hypotheses unless waived.
fn verdict(run: &ClaimRun, allow_vacuous: bool, strict: bool) -> u8 {
    if run
        .claims
        .iter()
        .any(|c| c.status == ClaimStatus::Fail)
    {
        return EXIT_CLAIM_FAIL;
    }
    let any_vacuous = run
        .claims
        .iter()
        .any(|c| c.status == ClaimStatus::HypothesisNotMet);
    if any_vacuous && (strict || !allow_vacuous) {
        return EXIT_VACUOUS;
    }
    EXIT_OK
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let (ctx, spec_options) = resolve_verify_context(&args.ctx)?;
    let claims = args.claims.clone().or(spec_options.claims);
    let strict = spec_options.strict.unwrap_or(false);
    let opts = RunOptions {
        claims,
        seed: seed_from_env(),
        ..RunOptions::default()
    };
    let run = run_claims(&ctx, &opts).map_err(|e| match e {
        TheoremError::UnknownClaim(_) => CliError::Input(e.to_string()),
        other => CliError::Input(other.to_string()),
    })?;

    for claim in &run.claims {
        eprintln!(
            "{:<18} {:<18} {}",
            claim.claim_id,
            status_label(claim.status),
            claim.notes
        );
        for w in &claim.witnesses {
            eprintln!("    at {}\n      got      {}\n      expected {}", w.input, w.lhs, w.rhs);
        }
    }
    emit(args.out.as_deref(), &to_pretty_json(&run))?;
    if let Some(path) = &args.out {
        eprintln!("wrote report to {}", path.display());
    }
    Ok(verdict(&run, args.allow_vacuous, strict))
}

fn cmd_zoo_list() -> Result<u8, CliError> {
    println!("algebras:");
    for name in zoo_list() {
        let entry = zoo_get(&name).map_err(|e| CliError::Input(e.to_string()))?;
        let tags: Vec<String> = entry.tags.iter().map(ToString::to_string).collect();
        let characters: Vec<&str> = entry
            .characters
            .iter()
            .map(|(chi_name, _)| chi_name.as_str())
            .collect();
        println!(
            "  {:<8} dim {}  [{}]  characters: {}",
            entry.name,
            entry.algebra.dim(),
            tags.join(", "),
            if characters.is_empty() {
                "—".to_string()
            } else {
                characters.join(", ")
            }
        );
    }
    println!("contexts:");
    for (name, ctx) in zoo_contexts() {
        println!(
            "  {:<24} A dim {}, B dim {}, θ{} φ{} γ{}",
            name,
            ctx.a().dim(),
            ctx.b().dim(),
            character_brief(ctx.theta()),
            character_brief(ctx.phi()),
            character_brief(ctx.gamma()),
        );
    }
    Ok(EXIT_OK)
}

fn character_brief(chi: &Character) -> String {
    let parts: Vec<String> = chi.values.iter().map(ToString::to_string).collect();
    format!("=({})", parts.join(","))
}

fn cmd_zoo_export(name: &str, out: &Path) -> Result<u8, CliError> {
    fs::create_dir_all(out)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", out.display())))?;
    if zoo_list().iter().any(|n| *n == name) {
        let entry = zoo_get(name).map_err(|e| CliError::Input(e.to_string()))?;
        let algebra_path = out.join(format!("{name}.algebra.json"));
        emit(Some(&algebra_path), &to_pretty_json(&entry.algebra))?;
        eprintln!("wrote {}", algebra_path.display());
        for (chi_name, chi) in &entry.characters {
            let chi_path = out.join(format!("{name}.{chi_name}.json"));
            emit(Some(&chi_path), &to_pretty_json(chi))?;
            eprintln!("wrote {}", chi_path.display());
        }
        return Ok(EXIT_OK);
    }
    if let Some((ctx_name, ctx)) = zoo_contexts().into_iter().find(|(n, _)| n == name) {
        let spec = context_spec_for(&ctx).ok_or_else(|| {
            CliError::Input(format!("{ctx_name}: cannot resolve factors back to collection names"))
        })?;
        let spec_path = out.join(format!("{ctx_name}.context.json"));
        emit(Some(&spec_path), &to_pretty_json(&spec))?;
        eprintln!("wrote {}", spec_path.display());
        return Ok(EXIT_OK);
    }
    Err(CliError::Input(format!(
        "{name:?} is neither a collection algebra nor a context (try `lauder zoo list`)"
    )))
}

#[derive(Serialize)]
struct ContextSpecOut {
    a_source: String,
    b_source: String,
    theta: String,
    phi: String,
    gamma: String,
}

/// Reverse-resolves a collection context to source names, by exact algebra
/// and character-value matching.
fn context_spec_for(ctx: &LauContext) -> Option<ContextSpecOut> {
    let entry_for = |alg: &Algebra| -> Option<ZooEntry> {
        zoo_list()
            .into_iter()
            .filter_map(|n| zoo_get(&n).ok())
            .find(|entry| entry.algebra == *alg)
    };
    let a_entry = entry_for(ctx.a())?;
    let b_entry = entry_for(ctx.b())?;
    let chi_name = |chi: &Character| -> Option<String> {
        b_entry
            .characters
            .iter()
            .find(|(_, c)| c.values == chi.values)
            .map(|(n, _)| n.clone())
    };
    Some(ContextSpecOut {
        a_source: a_entry.name,
        b_source: b_entry.name,
        theta: chi_name(ctx.theta())?,
        phi: chi_name(ctx.phi())?,
        gamma: chi_name(ctx.gamma())?,
    })
}
