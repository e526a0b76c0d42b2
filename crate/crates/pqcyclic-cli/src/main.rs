//! Deterministic batch calculator over the coset/idempotent/code library.
//!
//! Every run is a pure function of its flags: the α search is a fixed
//! deterministic scan (selectable with `--alpha-index`), there is no
//! randomness, and identical invocations produce byte-identical output in
//! both `text` and `json` modes.
//!
//! Exit codes: `0` success, `1` usage error (including enumeration budgets
//! that are too small), `2` violated parameter hypothesis, `3` verification
//! failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pqcyclic::codes::{
    default_budget, duadic_code, minimal_code, odd_like_min_weight, repetition_decomposition,
    CodeSpec, DistanceKind, SelectionMatrix,
};
use pqcyclic::cosets::{all_labels, cyclotomic_classes, enumerate_cosets, CosetSystem};
use pqcyclic::gf::{gauss_data, primitive_nth_root, ExtElement, ExtField, GaussData};
use pqcyclic::idempotents::{alpha_power_table, idempotent_closed_form, Idempotent};
use pqcyclic::numtheory::{is_prime, validate_parameters, Parameters};
use pqcyclic::ring::chi;
use pqcyclic::verify::verify_all;

/// Lengths above this would make the dense length-n vectors unwieldy.
const LENGTH_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "pqcyclic",
    version,
    about = "Cyclotomic cosets, χ-identities, primitive idempotents, and minimal \
             cyclic code parameters for length p^s·q^t over F_l",
    after_help = "Exit codes: 0 ok, 1 usage error, 2 hypothesis violation, 3 verification failure.\n\
                  The enumeration budget may also be set via the PQCYCLIC_BUDGET env var."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// The parameter tuple shared by every command except `sweep`.
#[derive(Args)]
struct TupleArgs {
    /// Odd prime with p ≡ 3 (mod 4)
    #[arg(long)]
    p: u64,
    /// Odd prime distinct from p
    #[arg(long)]
    q: u64,
    /// Exponent of p (n = p^s·q^t)
    #[arg(long)]
    s: u32,
    /// Exponent of q
    #[arg(long)]
    t: u32,
    /// Coefficient field order (prime, distinct from p and q)
    #[arg(long)]
    l: u64,
    /// Override the common primitive root g (default: CRT lift of the
    /// smallest primitive roots modulo p^s and q^t)
    #[arg(long)]
    g: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Args)]
struct OutputArg {
    /// Report format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Check the standing hypotheses and report the derived constants
    Validate {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
    },
    /// List every l-cyclotomic coset C_γ with its label and elements
    Cosets {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
    },
    /// List the order-2 cyclotomic classes D_0, D_1 and compare with C_1, C_g
    Classes {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Print the coset indicator polynomials χ_γ
    Chi {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Construct every primitive idempotent θ_γ as a χ-combination
    Idempotents {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
        /// Pick the k-th accepted candidate in the deterministic α search
        /// (the two orbits swap the 𝓡/𝓝 character sums)
        #[arg(long, default_value_t = 0)]
        alpha_index: usize,
    },
    /// Run every cross-check sweep; nonzero exit on any mismatch
    Verify {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
        #[arg(long, default_value_t = 0)]
        alpha_index: usize,
    },
    /// Report code parameters: minimal codes, selection-product codes,
    /// or the repetition decomposition
    Codes {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        out: OutputArg,
        #[arg(long, default_value_t = 0)]
        alpha_index: usize,
        /// Codeword-enumeration cap for exact distances (default 2^24,
        /// or the PQCYCLIC_BUDGET env var)
        #[arg(long)]
        budget: Option<u128>,
        /// Flavor-selection matrix as comma-separated 0/1 rows
        /// (e.g. "10,01"); shape s×(t+1), minus the anchor offsets
        #[arg(long)]
        matrix: Option<String>,
        /// Anchor "i,j" (i < s, j < t) for the anchored selection code
        #[arg(long)]
        anchor: Option<String>,
        /// With --matrix: also compute the exact odd-like minimum weight
        /// by full message enumeration (subject to --budget)
        #[arg(long)]
        odd_like: bool,
        /// Report the repetition decomposition of the minimal code at
        /// level (s, j) instead of the minimal-code table
        #[arg(long)]
        repetition: Option<u32>,
    },
    /// Scan a parameter range and list every tuple satisfying the hypotheses
    Sweep {
        #[arg(long, default_value_t = 30)]
        max_p: u64,
        #[arg(long, default_value_t = 30)]
        max_q: u64,
        #[arg(long, default_value_t = 2)]
        max_s: u32,
        #[arg(long, default_value_t = 2)]
        max_t: u32,
        #[arg(long, default_value_t = 30)]
        max_l: u64,
        /// Skip tuples with n above this (hard cap 10^6)
        #[arg(long, default_value_t = 10_000)]
        max_n: u64,
        #[command(flatten)]
        out: OutputArg,
    },
}

// ==================== error / exit handling ====================

enum CliError {
    Usage(String),
    Hypothesis(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Hypothesis(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Verification(m) => f.write_str(m),
            CliError::Hypothesis(m) => write!(f, "hypothesis violation: {m}"),
        }
    }
}

/// Print one output line, exiting quietly if the reader has gone away
/// (e.g. `pqcyclic cosets … | head`) instead of panicking on broken pipe.
fn emit(text: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!($($arg)*)) };
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.code());
    }
}

// ==================== shared construction ====================

/// Validate the tuple, enforcing the length cap before anything else.
fn params_for(tuple: &TupleArgs) -> Result<Parameters, CliError> {
    let n = (tuple.p as u128)
        .checked_pow(tuple.s)
        .and_then(|a| a.checked_mul((tuple.q as u128).checked_pow(tuple.t)?))
        .ok_or_else(|| CliError::Usage("p^s·q^t overflows".into()))?;
    if n > LENGTH_CAP as u128 {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the length cap of {LENGTH_CAP}"
        )));
    }
    validate_parameters(tuple.p, tuple.q, tuple.s, tuple.t, tuple.l, tuple.g)
        .map_err(|e| CliError::Hypothesis(e.to_string()))
}

/// Everything the α-dependent commands need, built deterministically.
struct Session {
    params: Parameters,
    system: CosetSystem,
    field: ExtField,
    gauss: GaussData,
    powers: Vec<ExtElement>,
}

fn open_session(tuple: &TupleArgs, alpha_index: usize) -> Result<Session, CliError> {
    let params = params_for(tuple)?;
    let system = enumerate_cosets(&params);
    let field = ExtField::new(params.l, params.m as usize);
    let alpha = primitive_nth_root(&field, params.n, params.p, params.q, alpha_index)
        .map_err(|e| CliError::Usage(format!("α selection failed: {e}")))?;
    let gauss = gauss_data(&field, &params, &alpha)
        .map_err(|e| CliError::Verification(format!("character-sum construction failed: {e}")))?;
    let powers = alpha_power_table(&field, &gauss.alpha, params.n);
    Ok(Session {
        params,
        system,
        field,
        gauss,
        powers,
    })
}

fn print_json(value: &serde_json::Value) {
    outln!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn set_string(elements: &[u64]) -> String {
    let inner: Vec<String> = elements.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

// ==================== dispatch ====================

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { tuple, out } => cmd_validate(&tuple, out.output),
        Command::Cosets { tuple, out } => cmd_cosets(&tuple, out.output),
        Command::Classes { tuple, out } => cmd_classes(&tuple, out.output),
        Command::Chi { tuple, out } => cmd_chi(&tuple, out.output),
        Command::Idempotents {
            tuple,
            out,
            alpha_index,
        } => cmd_idempotents(&tuple, out.output, alpha_index),
        Command::Verify {
            tuple,
            out,
            alpha_index,
        } => cmd_verify(&tuple, out.output, alpha_index),
        Command::Codes {
            tuple,
            out,
            alpha_index,
            budget,
            matrix,
            anchor,
            odd_like,
            repetition,
        } => cmd_codes(
            &tuple,
            out.output,
            alpha_index,
            budget.unwrap_or_else(default_budget),
            matrix.as_deref(),
            anchor.as_deref(),
            odd_like,
            repetition,
        ),
        Command::Sweep {
            max_p,
            max_q,
            max_s,
            max_t,
            max_l,
            max_n,
            out,
        } => cmd_sweep(max_p, max_q, max_s, max_t, max_l, max_n, out.output),
    }
}

// ==================== commands ====================

fn cmd_validate(tuple: &TupleArgs, output: OutputFormat) -> Result<(), CliError> {
    let params = params_for(tuple)?;
    match output {
        OutputFormat::Text => {
            outln!("ok: all hypotheses hold");
            outln!(
                "n = {} = {}^{}·{}^{}",
                params.n, params.p, params.s, params.q, params.t
            );
            outln!("ord_n({}) = {} = φ(n)/2", params.l, params.m);
            outln!(
                "g = {} (common primitive root; g1 = {}, g2 = {}), v = {}",
                params.g, params.g1, params.g2, params.v
            );
            outln!(
                "case: q = {} is a quadratic {} modulo p = {}",
                params.q,
                if params.qr_case { "residue" } else { "non-residue" },
                params.p
            );
            outln!(
                "cosets: (2s+1)(t+1) = {}",
                (2 * params.s + 1) * (params.t + 1)
            );
        }
        OutputFormat::Json => print_json(&json!({
            "ok": true,
            "parameters": params,
        })),
    }
    Ok(())
}

fn cmd_cosets(tuple: &TupleArgs, output: OutputFormat) -> Result<(), CliError> {
    let params = params_for(tuple)?;
    let system = enumerate_cosets(&params);
    match output {
        OutputFormat::Text => {
            outln!(
                "n = {}, l = {}, g = {}: {} cosets",
                params.n,
                params.l,
                params.g,
                system.cosets.len()
            );
            for coset in &system.cosets {
                outln!(
                    "C_{} = {}    [label {}, size {}]",
                    coset.representative,
                    set_string(&coset.elements),
                    coset.label,
                    coset.elements.len()
                );
            }
        }
        OutputFormat::Json => {
            let cosets: Vec<_> = system
                .cosets
                .iter()
                .map(|c| {
                    json!({
                        "label": c.label.to_string(),
                        "representative": c.representative,
                        "size": c.elements.len(),
                        "elements": c.elements,
                    })
                })
                .collect();
            print_json(&json!({ "parameters": params, "cosets": cosets }));
        }
    }
    Ok(())
}

fn cmd_classes(tuple: &TupleArgs, output: OutputFormat) -> Result<(), CliError> {
    let params = params_for(tuple)?;
    let system = enumerate_cosets(&params);
    let (d0, d1) = cyclotomic_classes(&params);
    let c1 = &system.coset_of(1).elements;
    let cg = &system.coset_of(params.g).elements;
    let c1_is_d0 = c1 == &d0;
    let cg_is_d1 = cg == &d1;
    match output {
        OutputFormat::Text => {
            outln!("D_0 = {}", set_string(&d0));
            outln!("D_1 = {}", set_string(&d1));
            outln!("C_1 = D_0: {c1_is_d0}");
            outln!("C_{} = D_1: {cg_is_d1}", params.g);
        }
        OutputFormat::Json => print_json(&json!({
            "parameters": params,
            "d0": d0,
            "d1": d1,
            "c1_equals_d0": c1_is_d0,
            "cg_equals_d1": cg_is_d1,
        })),
    }
    if c1_is_d0 && cg_is_d1 {
        Ok(())
    } else {
        Err(CliError::Verification(
            "cyclotomic classes disagree with the cosets of 1 and g".into(),
        ))
    }
}

fn cmd_chi(tuple: &TupleArgs, output: OutputFormat) -> Result<(), CliError> {
    let params = params_for(tuple)?;
    let system = enumerate_cosets(&params);
    match output {
        OutputFormat::Text => {
            for coset in &system.cosets {
                let poly = chi(&system, &coset.label);
                outln!("χ_{}(x) = {}", coset.representative, poly.to_sparse_string());
            }
        }
        OutputFormat::Json => {
            let chis: Vec<_> = system
                .cosets
                .iter()
                .map(|c| {
                    json!({
                        "label": c.label.to_string(),
                        "representative": c.representative,
                        "exponents": c.elements,
                        "polynomial": chi(&system, &c.label).to_sparse_string(),
                    })
                })
                .collect();
            print_json(&json!({ "parameters": params, "chi": chis }));
        }
    }
    Ok(())
}

/// Render θ as the reference notation does: constant first (the coefficient
/// on the zero coset, whose χ is x⁰), then `c·χ_rep(x)` terms in label order.
fn theta_string(system: &CosetSystem, idem: &Idempotent) -> String {
    let coeffs = idem.coset_coefficients(system);
    let mut terms = Vec::new();
    for (coset, &c) in system.cosets.iter().zip(&coeffs) {
        if c == 0 {
            continue;
        }
        if coset.label.is_zero(&system.params) {
            terms.insert(0, format!("{c}"));
        } else if c == 1 {
            terms.push(format!("χ_{}(x)", coset.representative));
        } else {
            terms.push(format!("{c}χ_{}(x)", coset.representative));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn cmd_idempotents(
    tuple: &TupleArgs,
    output: OutputFormat,
    alpha_index: usize,
) -> Result<(), CliError> {
    let sx = open_session(tuple, alpha_index)?;
    let labels = all_labels(&sx.params);
    let idempotents: Vec<Idempotent> = labels
        .iter()
        .map(|lab| idempotent_closed_form(&sx.system, &sx.gauss, lab))
        .collect();
    match output {
        OutputFormat::Text => {
            outln!(
                "α candidate {}: 𝓡 = {}, 𝓝 = {}",
                alpha_index, sx.gauss.residue_sum.value, sx.gauss.nonresidue_sum.value
            );
            for idem in &idempotents {
                let rep = sx.system.coset(&idem.label).representative;
                outln!("θ_{}(x) = {}", rep, theta_string(&sx.system, idem));
            }
        }
        OutputFormat::Json => {
            let items: Vec<_> = idempotents
                .iter()
                .map(|idem| {
                    let coeffs = idem.coset_coefficients(&sx.system);
                    let table: Vec<_> = sx
                        .system
                        .cosets
                        .iter()
                        .zip(&coeffs)
                        .map(|(c, &v)| {
                            json!({
                                "label": c.label.to_string(),
                                "representative": c.representative,
                                "value": v,
                            })
                        })
                        .collect();
                    json!({
                        "label": idem.label.to_string(),
                        "representative": sx.system.coset(&idem.label).representative,
                        "chi_coefficients": table,
                    })
                })
                .collect();
            print_json(&json!({
                "parameters": sx.params,
                "alpha_index": alpha_index,
                "residue_sum": sx.gauss.residue_sum.value,
                "nonresidue_sum": sx.gauss.nonresidue_sum.value,
                "idempotents": items,
            }));
        }
    }
    Ok(())
}

fn cmd_verify(tuple: &TupleArgs, output: OutputFormat, alpha_index: usize) -> Result<(), CliError> {
    // Pre-flight the α selection so a bad index is a usage error, not a panic.
    let sx = open_session(tuple, alpha_index)?;
    let report = verify_all(&sx.params, alpha_index);
    match output {
        OutputFormat::Text => {
            for line in report.lines() {
                outln!(
                    "{}: {} — {}",
                    line.name,
                    if line.pass { "ok" } else { "FAIL" },
                    line.detail
                );
            }
            outln!(
                "verification: {}",
                if report.pass() { "PASS" } else { "FAIL" }
            );
        }
        OutputFormat::Json => {
            let checks: Vec<_> = report
                .lines()
                .iter()
                .map(|l| json!({ "name": l.name, "pass": l.pass, "detail": l.detail }))
                .collect();
            print_json(&json!({ "pass": report.pass(), "checks": checks }));
        }
    }
    if report.pass() {
        Ok(())
    } else {
        Err(CliError::Verification("verification sweep found mismatches".into()))
    }
}

fn distance_string(code: &CodeSpec) -> String {
    match code.distance.kind {
        DistanceKind::Exact => format!("d = {} (exact)", code.distance.value),
        DistanceKind::Bound => format!("d ≥ {} (bound)", code.distance.value),
    }
}

fn generator_degree(code: &CodeSpec) -> usize {
    code.generator.len().saturating_sub(1)
}

#[allow(clippy::too_many_arguments)]
fn cmd_codes(
    tuple: &TupleArgs,
    output: OutputFormat,
    alpha_index: usize,
    budget: u128,
    matrix: Option<&str>,
    anchor: Option<&str>,
    odd_like: bool,
    repetition: Option<u32>,
) -> Result<(), CliError> {
    if matrix.is_some() && repetition.is_some() {
        return Err(CliError::Usage(
            "--matrix and --repetition are mutually exclusive".into(),
        ));
    }
    let sx = open_session(tuple, alpha_index)?;

    if let Some(text) = matrix {
        let sel = SelectionMatrix::parse(text).ok_or_else(|| {
            CliError::Usage(format!(
                "--matrix '{text}' is not comma-separated rows of 0/1 digits"
            ))
        })?;
        let anchor = anchor
            .map(|a| -> Result<(u32, u32), CliError> {
                let parts: Vec<_> = a.split(',').collect();
                let parse =
                    |s: &str| s.trim().parse::<u32>().map_err(|e| CliError::Usage(e.to_string()));
                match parts.as_slice() {
                    [i, j] => Ok((parse(i)?, parse(j)?)),
                    _ => Err(CliError::Usage(format!("--anchor '{a}' is not of the form i,j"))),
                }
            })
            .transpose()?;
        let code = duadic_code(&sx.field, &sx.gauss, &sx.system, &sel, anchor)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let min_odd = if odd_like {
            Some(
                odd_like_min_weight(&code, &sx.params, budget)
                    .map_err(|e| CliError::Usage(e.to_string()))?,
            )
        } else {
            None
        };
        match output {
            OutputFormat::Text => {
                let (ai, aj) = anchor.unwrap_or((0, 0));
                outln!("selection matrix \"{text}\", anchor ({ai},{aj}):");
                outln!(
                    "[{}, {}] {}, generator degree {}, provenance {}",
                    code.n,
                    code.dimension,
                    distance_string(&code),
                    generator_degree(&code),
                    code.provenance
                );
                if let Some(w) = min_odd {
                    outln!("odd-like minimum weight (full enumeration): {w}");
                }
            }
            OutputFormat::Json => print_json(&json!({
                "parameters": sx.params,
                "matrix": text,
                "anchor": anchor.map(|(i, j)| vec![i, j]),
                "code": code,
                "odd_like_min_weight": min_odd,
            })),
        }
        return Ok(());
    }

    if let Some(j) = repetition {
        if j >= sx.params.t {
            return Err(CliError::Usage(format!(
                "--repetition level j = {j} must satisfy j < t = {}",
                sx.params.t
            )));
        }
        let (inner, factor) = repetition_decomposition(&sx.field, &sx.powers, &sx.system, j);
        match output {
            OutputFormat::Text => {
                outln!(
                    "level j = {j}: minimal code at label ({},{j}) = inner code repeated {factor}×",
                    sx.params.s
                );
                outln!(
                    "inner: [{}, {}] {}, generator degree {}",
                    inner.n,
                    inner.dimension,
                    distance_string(&inner),
                    generator_degree(&inner)
                );
            }
            OutputFormat::Json => print_json(&json!({
                "parameters": sx.params,
                "level": j,
                "inner": inner,
                "repetition_factor": factor,
            })),
        }
        return Ok(());
    }

    // Default report: every minimal code, one per coset label.
    let labels = all_labels(&sx.params);
    let codes: Vec<(String, u64, CodeSpec)> = labels
        .iter()
        .map(|lab| {
            let rep = sx.system.coset(lab).representative;
            let spec = minimal_code(&sx.field, &sx.powers, &sx.system, lab, budget);
            (lab.to_string(), rep, spec)
        })
        .collect();
    match output {
        OutputFormat::Text => {
            outln!(
                "n = {}, l = {}, budget = {budget}: {} minimal codes",
                sx.params.n,
                sx.params.l,
                codes.len()
            );
            for (label, rep, spec) in &codes {
                outln!(
                    "C_{rep}: [{}, {}] {}, generator degree {}    [label {label}]",
                    spec.n,
                    spec.dimension,
                    distance_string(spec),
                    generator_degree(spec)
                );
            }
        }
        OutputFormat::Json => {
            let items: Vec<_> = codes
                .iter()
                .map(|(label, rep, spec)| {
                    json!({ "label": label, "representative": rep, "code": spec })
                })
                .collect();
            print_json(&json!({
                "parameters": sx.params,
                "budget": budget.to_string(),
                "codes": items,
            }));
        }
    }
    Ok(())
}

fn cmd_sweep(
    max_p: u64,
    max_q: u64,
    max_s: u32,
    max_t: u32,
    max_l: u64,
    max_n: u64,
    output: OutputFormat,
) -> Result<(), CliError> {
    if max_n > LENGTH_CAP {
        return Err(CliError::Usage(format!(
            "--max-n {max_n} exceeds the length cap of {LENGTH_CAP}"
        )));
    }
    let primes_to = |hi: u64| (2..=hi).filter(|&x| is_prime(x)).collect::<Vec<_>>();
    let mut found: Vec<Parameters> = Vec::new();
    for &p in &primes_to(max_p) {
        for &q in &primes_to(max_q) {
            if q == p {
                continue;
            }
            for s in 1..=max_s {
                for t in 1..=max_t {
                    let n = (p as u128).checked_pow(s).and_then(|a| {
                        a.checked_mul((q as u128).checked_pow(t)?)
                    });
                    match n {
                        Some(n) if n <= max_n as u128 => {}
                        _ => continue,
                    }
                    for &l in &primes_to(max_l) {
                        if l == p || l == q {
                            continue;
                        }
                        if let Ok(params) = validate_parameters(p, q, s, t, l, None) {
                            found.push(params);
                        }
                    }
                }
            }
        }
    }
    match output {
        OutputFormat::Text => {
            for params in &found {
                outln!(
                    "p={} q={} s={} t={} l={} g={} n={} m={} case={}",
                    params.p,
                    params.q,
                    params.s,
                    params.t,
                    params.l,
                    params.g,
                    params.n,
                    params.m,
                    if params.qr_case { "residue" } else { "non-residue" }
                );
            }
            outln!("found {} valid tuples", found.len());
        }
        OutputFormat::Json => print_json(&json!({
            "count": found.len(),
            "tuples": found,
        })),
    }
    Ok(())
}
