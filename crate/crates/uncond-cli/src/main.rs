//! Command-line front end: classification, sign-constant searches, walk
//! tables, family evidence, support constructions, and norm evaluations,
//! reported as versioned JSON (`"schema": 1`) or a plain-text rendering of
//! the same data.
//!
//! Exit codes: 0 success, 2 input error, 3 budget exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use uncond::classifier::{check_jk, classify, star_union_tensor_verdict, SupportFamily};
use uncond::extremal::{
    cycle_support, fano_incidence, hankel_support, is_n_independent, moore_check,
    transfer_support, IndependenceCheck,
};
use uncond::multiplier::{
    cycle_norm_endpoint, forest_factorize, fourier_multiplier_norm, positive_multiplier_norm,
    CyclicSpectrum,
};
use uncond::numeric::{
    complex_unconditional_constant, parse_matrix, real_unconditional_constant, schatten_norm,
    ComplexMatrix, SignAssignment, SignMode,
};
use uncond::support::{parse_support, BipartiteSupport, SupportDoc};
use uncond::walks::relation_table;
use uncond::DEFAULT_WALK_BUDGET;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "uncond", version)]
#[command(about = "Classify matrix supports by the Schatten exponents with 1-unconditional signs")]
struct Cli {
    /// Emit the JSON report; the default text output renders the same data.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exponent profile and certificate for a support edge-list file.
    Classify(ClassifyArgs),
    /// Search the 1-unconditionality constant at an exponent; report exact
    /// closed forms for recognized shapes.
    Constant(ConstantArgs),
    /// Dump the closed-walk relation table at an even exponent.
    Walks(WalksArgs),
    /// Completion-property evidence for a support family.
    Family(FamilyArgs),
    /// Build reference supports and run counting checks.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Evaluate individual norms and closed-form constants.
    #[command(subcommand)]
    Norm(NormCmd),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Support JSON: {"rows": m, "cols": n, "edges": [[r, c], …]}.
    path: PathBuf,
    /// Factor the sign pattern in `--signs` through diagonal unitaries
    /// (forests only).
    #[arg(long, requires = "signs")]
    factorize: bool,
    /// Sign JSON: {"signs": [[row, col, re, im], …]}, one per edge.
    #[arg(long)]
    signs: Option<PathBuf>,
}

#[derive(Args)]
struct ConstantArgs {
    path: PathBuf,
    /// Schatten exponent: a positive number or "inf".
    #[arg(long, default_value = "inf")]
    p: String,
    #[arg(long, value_enum, default_value_t = Mode::Real)]
    mode: Mode,
    /// Random coefficient draws added to the deterministic probes.
    #[arg(long, default_value_t = 200)]
    trials: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Real,
    Complex,
}

#[derive(Args)]
struct WalksArgs {
    path: PathBuf,
    /// Even Schatten exponent 2k; the table lists length-2k closed walks.
    #[arg(long, default_value = "4")]
    p: u64,
}

#[derive(Args)]
struct FamilyArgs {
    /// Built-in family `theta:J` or `hankel:a,b,c`, or a path to JSON —
    /// either {"levels": [support, …]} or a single support (constant family).
    name: String,
    /// Cycle-completion parameter; covers Schatten exponent p = 2k.
    #[arg(long)]
    k: usize,
    /// Completions are drawn from this level; hulls of lower levels are the
    /// tested deletions.
    #[arg(long, default_value_t = 8)]
    max_level: usize,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// 2s-gon support on an s×s grid.
    Cycle {
        #[arg(long)]
        s: usize,
    },
    /// Sum pattern {(r, c) : r + c ∈ Λ} on a rows×cols grid.
    Hankel {
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        rows: usize,
        #[arg(long, default_value_t = 8)]
        cols: usize,
    },
    /// Point-line incidence of the 7-point projective plane.
    Fano,
    /// Level of the theta family: level+1 internally disjoint paths of
    /// length 2j+1 between one row and one column.
    Theta {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        level: usize,
    },
    /// Sum pattern transferred to the index grid of R × C, with a collision
    /// check on the representations r + c.
    Transfer {
        #[arg(long, value_delimiter = ',')]
        row_set: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        col_set: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<usize>,
    },
    /// Whether every integer has at most one representation as a sum of n
    /// elements of Λ.
    Independence {
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Counting-bound slack of a support at girth parameter k.
    Moore {
        path: PathBuf,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand)]
enum NormCmd {
    /// Schatten p-norm of a dense matrix file
    /// {"rows": m, "cols": n, "re": [[…]], "im": [[…]]}.
    Schatten {
        path: PathBuf,
        #[arg(long, default_value = "2")]
        p: String,
    },
    /// Endpoint multiplier norm of a reduced cycle sign pattern with product
    /// angle s·θ; `--theta-arg` gives arg θ in radians.
    CycleEndpoint {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0.0)]
        theta_arg: f64,
    },
    /// Multiplier norm of a positive semidefinite pattern (its largest
    /// diagonal entry).
    Positive {
        path: PathBuf,
        /// Eigenvalue tolerance for the semidefiniteness check.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Multiplier norm at p ∈ {1, ∞} of a real symbol on Z/s, s = symbol
    /// length (the ℓ¹ norm of its inverse transform).
    Fourier {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phi: Vec<f64>,
        #[arg(long, default_value = "inf")]
        p: String,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<uncond::Error> for CliError {
    fn from(e: uncond::Error) -> Self {
        let code = match e {
            uncond::Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&report).unwrap();
                s.push('\n');
                s
            } else {
                render_text(&report)
            };
            // tolerate closed pipes (e.g. output piped into `head`)
            use std::io::Write;
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: &Command) -> Result<Value, CliError> {
    match command {
        Command::Classify(args) => cmd_classify(args),
        Command::Constant(args) => cmd_constant(args),
        Command::Walks(args) => cmd_walks(args),
        Command::Family(args) => cmd_family(args),
        Command::Construct(cmd) => cmd_construct(cmd),
        Command::Norm(cmd) => cmd_norm(cmd),
    }
}

// ── shared plumbing ──────────────────────────────────────────────────────

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn load_support(path: &Path) -> Result<BipartiteSupport, CliError> {
    Ok(parse_support(&read_file(path)?)?)
}

fn load_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    Ok(parse_matrix(&read_file(path)?)?)
}

fn parse_exponent(text: &str) -> Result<f64, CliError> {
    let trimmed = text.trim();
    let p = match trimmed {
        "inf" | "infinity" | "∞" => f64::INFINITY,
        _ => trimmed
            .parse::<f64>()
            .map_err(|_| CliError::input(format!("exponent {trimmed:?} is not a number or \"inf\"")))?,
    };
    if p.is_nan() || p <= 0.0 {
        return Err(CliError::input(format!(
            "exponent must be positive, got {trimmed}"
        )));
    }
    Ok(p)
}

/// Exponent echo for reports: `"inf"` or the number itself.
fn exponent_value(p: f64) -> Value {
    if p.is_finite() {
        json!(p)
    } else {
        json!("inf")
    }
}

fn walk_budget() -> Result<u64, CliError> {
    match std::env::var("UNCOND_BUDGET") {
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            CliError::input(format!(
                "UNCOND_BUDGET must be a non-negative integer, got {text:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_WALK_BUDGET),
    }
}

fn support_value(s: &BipartiteSupport) -> Value {
    serde_json::to_value(s.to_doc()).unwrap()
}

fn complex_value(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn complex_vec_value(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|&z| complex_value(z)).collect())
}

fn report_frame(command: &str) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("schema".into(), json!(1));
    map.insert("version".into(), json!(VERSION));
    map.insert("command".into(), json!(command));
    map
}

// ── classify ─────────────────────────────────────────────────────────────

#[derive(Deserialize)]
struct SignsDoc {
    signs: Vec<(usize, usize, f64, f64)>,
}

fn cmd_classify(args: &ClassifyArgs) -> Result<Value, CliError> {
    let support = load_support(&args.path)?;
    let profile = classify(&support);
    let mut report = report_frame("classify");
    report.insert("input".into(), support_value(&support));
    report.insert("profile".into(), serde_json::to_value(&profile).unwrap());
    report.insert(
        "star_union".into(),
        json!(star_union_tensor_verdict(&support)),
    );
    if let Some(signs_path) = &args.signs {
        let doc: SignsDoc = serde_json::from_str(&read_file(signs_path)?)
            .map_err(|e| CliError::input(format!("malformed sign file: {e}")))?;
        let entries: Vec<((usize, usize), Complex64)> = doc
            .signs
            .iter()
            .map(|&(r, c, re, im)| ((r, c), Complex64::new(re, im)))
            .collect();
        let eps = SignAssignment::new(&support, &entries, SignMode::Complex)?;
        if args.factorize {
            let f = forest_factorize(&support, &eps)?;
            report.insert(
                "factorization".into(),
                json!({
                    "eta": complex_vec_value(&f.eta),
                    "zeta": complex_vec_value(&f.zeta),
                    "label": "exact",
                }),
            );
        }
    }
    Ok(Value::Object(report))
}

// ── constant ─────────────────────────────────────────────────────────────

/// `Some(s)` when the support is exactly the 2s-gon on an s×s grid.
fn as_cycle(s: &BipartiteSupport) -> Option<usize> {
    let n = s.n_rows();
    if n < 2 || s.n_cols() != n || s.n_edges() != 2 * n {
        return None;
    }
    let gon = cycle_support(n).unwrap();
    (s.edges() == gon.edges()).then_some(n)
}

/// Exact constant and its origin, for the shapes with a closed form.
fn closed_form(s: &BipartiteSupport, p: f64, mode: Mode) -> Option<(f64, &'static str)> {
    if s.is_forest() {
        return Some((1.0, "forest: signs factor through diagonal unitaries"));
    }
    let profile = classify(s);
    if profile.one_unconditional_p.contains(p) {
        return Some((1.0, "even exponent inside the girth window"));
    }
    if let Some(half) = as_cycle(s) {
        if p == 1.0 || p.is_infinite() {
            let value = 1.0 / (PI / (2.0 * half as f64)).cos();
            return Some((value, "one flipped sign on the 2s-gon: sec(π/2s)"));
        }
    }
    let full_square = s.n_rows() == s.n_cols() && s.n_edges() == s.n_rows() * s.n_cols();
    if full_square && p.is_infinite() {
        match mode {
            Mode::Complex => {
                return Some((
                    (s.n_rows() as f64).sqrt(),
                    "full square: discrete Fourier phase pair gives √n",
                ));
            }
            Mode::Real if s.n_rows() == 3 => {
                return Some((5.0 / 3.0, "full 3×3: cyclic sign pattern (−1, 1, 1)"));
            }
            Mode::Real => {}
        }
    }
    None
}

fn cmd_constant(args: &ConstantArgs) -> Result<Value, CliError> {
    let support = load_support(&args.path)?;
    let p = parse_exponent(&args.p)?;
    let estimate = match args.mode {
        Mode::Real => real_unconditional_constant(&support, p, args.trials, args.seed)?,
        Mode::Complex => complex_unconditional_constant(&support, p, args.trials, args.seed)?,
    };
    let mut search = serde_json::to_value(&estimate).unwrap();
    let label = if estimate.exact { "exact" } else { "lower-bound" };
    search
        .as_object_mut()
        .unwrap()
        .insert("label".into(), json!(label));
    let mut report = report_frame("constant");
    report.insert("input".into(), support_value(&support));
    report.insert("p".into(), exponent_value(p));
    report.insert(
        "mode".into(),
        json!(match args.mode {
            Mode::Real => "real",
            Mode::Complex => "complex",
        }),
    );
    report.insert("search".into(), search);
    let closed = match closed_form(&support, p, args.mode) {
        Some((value, origin)) => json!({"value": value, "label": "exact", "origin": origin}),
        None => Value::Null,
    };
    report.insert("closed_form".into(), closed);
    Ok(Value::Object(report))
}

// ── walks ────────────────────────────────────────────────────────────────

fn cmd_walks(args: &WalksArgs) -> Result<Value, CliError> {
    let support = load_support(&args.path)?;
    if args.p == 0 || args.p % 2 != 0 {
        return Err(CliError::input(format!(
            "walk tables need an even exponent ≥ 2, got {}",
            args.p
        )));
    }
    let k = (args.p / 2) as usize;
    let budget = walk_budget()?;
    let table = relation_table(&support, k, budget)?;
    let mut all_diagonal = true;
    let relations: Vec<Value> = table
        .iter()
        .map(|(relation, &count)| {
            let diagonal = relation.is_diagonal();
            all_diagonal &= diagonal;
            json!({
                "alpha": serde_json::to_value(&relation.alpha).unwrap(),
                "beta": serde_json::to_value(&relation.beta).unwrap(),
                "count": count,
                "diagonal": diagonal,
            })
        })
        .collect();
    let mut report = report_frame("walks");
    report.insert("input".into(), support_value(&support));
    report.insert("p".into(), json!(args.p));
    report.insert("k".into(), json!(k));
    report.insert("budget".into(), json!(budget));
    report.insert("all_diagonal".into(), json!(all_diagonal));
    report.insert("relations".into(), Value::Array(relations));
    Ok(Value::Object(report))
}

// ── family ───────────────────────────────────────────────────────────────

#[derive(Deserialize)]
struct LevelsDoc {
    levels: Vec<SupportDoc>,
}

fn parse_family(name: &str) -> Result<SupportFamily, CliError> {
    if let Some(rest) = name.strip_prefix("theta:") {
        let j = rest
            .parse::<usize>()
            .map_err(|_| CliError::input(format!("theta parameter {rest:?} is not an integer")))?;
        return Ok(SupportFamily::theta(j)?);
    }
    if let Some(rest) = name.strip_prefix("hankel:") {
        let lambda = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::input(format!("hankel set {rest:?} must be integers")))?;
        return Ok(SupportFamily::hankel(lambda)?);
    }
    let text = read_file(Path::new(name))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("malformed family file: {e}")))?;
    if value.get("levels").is_some() {
        let doc: LevelsDoc = serde_json::from_value(value)
            .map_err(|e| CliError::input(format!("malformed family levels: {e}")))?;
        let levels = doc
            .levels
            .into_iter()
            .map(BipartiteSupport::from_doc)
            .collect::<uncond::Result<Vec<_>>>()?;
        Ok(SupportFamily::explicit(levels)?)
    } else {
        let support = parse_support(&text)?;
        Ok(SupportFamily::constant(support))
    }
}

fn cmd_family(args: &FamilyArgs) -> Result<Value, CliError> {
    let family = parse_family(&args.name)?;
    let max_level = match family.max_explicit_level() {
        Some(depth) => args.max_level.min(depth),
        None => args.max_level,
    };
    let jk = check_jk(&family, args.k, max_level)?;
    let mut report = report_frame("family");
    report.insert("family".into(), json!(args.name));
    report.insert("description".into(), json!(family.description()));
    report.insert("holds".into(), json!(jk.holds()));
    report.insert("label".into(), json!("evidence"));
    report.insert("report".into(), serde_json::to_value(&jk).unwrap());
    Ok(Value::Object(report))
}

// ── construct ────────────────────────────────────────────────────────────

fn support_report(command: &str, kind: &str, s: &BipartiteSupport) -> Value {
    let mut report = report_frame(command);
    report.insert("kind".into(), json!(kind));
    report.insert("support".into(), support_value(s));
    report.insert(
        "even_girth".into(),
        match s.even_girth() {
            Some(g) => json!(g.length),
            None => Value::Null,
        },
    );
    Value::Object(report)
}

fn cmd_construct(cmd: &ConstructCmd) -> Result<Value, CliError> {
    match cmd {
        ConstructCmd::Cycle { s } => Ok(support_report("construct", "cycle", &cycle_support(*s)?)),
        ConstructCmd::Hankel { lambda, rows, cols } => Ok(support_report(
            "construct",
            "hankel",
            &hankel_support(lambda, *rows, *cols)?,
        )),
        ConstructCmd::Fano => Ok(support_report("construct", "fano", &fano_incidence())),
        ConstructCmd::Theta { j, level } => {
            let support = SupportFamily::theta(*j)?.level(*level)?;
            Ok(support_report("construct", "theta", &support))
        }
        ConstructCmd::Transfer {
            row_set,
            col_set,
            lambda,
        } => {
            let check = transfer_support(row_set, col_set, lambda)?;
            let mut report = report_frame("construct");
            report.insert("kind".into(), json!("transfer"));
            report.insert("support".into(), support_value(&check.support));
            report.insert("valid".into(), json!(check.valid));
            report.insert(
                "collision".into(),
                match check.collision {
                    Some((a, b)) => json!([[a.0, a.1], [b.0, b.1]]),
                    None => Value::Null,
                },
            );
            Ok(Value::Object(report))
        }
        ConstructCmd::Independence { lambda, n } => {
            let check = is_n_independent(lambda, *n)?;
            let mut report = report_frame("construct");
            report.insert("kind".into(), json!("independence"));
            report.insert("lambda".into(), json!(lambda));
            report.insert("n".into(), json!(n));
            report.insert("independent".into(), json!(check.is_independent()));
            report.insert(
                "witness".into(),
                match &check {
                    IndependenceCheck::Independent => Value::Null,
                    IndependenceCheck::Witness { left, right } => {
                        json!({"left": left, "right": right})
                    }
                },
            );
            Ok(Value::Object(report))
        }
        ConstructCmd::Moore { path, k } => {
            let support = load_support(path)?;
            let rep = moore_check(&support, *k);
            let mut report = report_frame("construct");
            report.insert("kind".into(), json!("moore"));
            report.insert("input".into(), support_value(&support));
            report.insert("k".into(), json!(k));
            report.insert("girth_ok".into(), json!(rep.girth_ok));
            report.insert("meaningful".into(), json!(rep.meaningful));
            report.insert("slack_cols".into(), json!(rep.slack_cols));
            report.insert("slack_rows".into(), json!(rep.slack_rows));
            report.insert("slack".into(), json!(rep.slack()));
            report.insert("label".into(), json!("exact"));
            Ok(Value::Object(report))
        }
    }
}

// ── norm ─────────────────────────────────────────────────────────────────

fn norm_report(kind: &str, value: f64, extra: Vec<(&str, Value)>) -> Value {
    let mut report = report_frame("norm");
    report.insert("kind".into(), json!(kind));
    for (key, val) in extra {
        report.insert(key.into(), val);
    }
    report.insert("value".into(), json!(value));
    report.insert("label".into(), json!("exact"));
    Value::Object(report)
}

fn cmd_norm(cmd: &NormCmd) -> Result<Value, CliError> {
    match cmd {
        NormCmd::Schatten { path, p } => {
            let matrix = load_matrix(path)?;
            let p = parse_exponent(p)?;
            let value = schatten_norm(&matrix, p)?;
            Ok(norm_report(
                "schatten",
                value,
                vec![
                    ("p", exponent_value(p)),
                    ("rows", json!(matrix.n_rows())),
                    ("cols", json!(matrix.n_cols())),
                ],
            ))
        }
        NormCmd::CycleEndpoint { s, theta_arg } => {
            let theta = Complex64::from_polar(1.0, *theta_arg);
            let value = cycle_norm_endpoint(*s, theta)?;
            Ok(norm_report(
                "cycle-endpoint",
                value,
                vec![("s", json!(s)), ("theta", complex_value(theta))],
            ))
        }
        NormCmd::Positive { path, tol } => {
            let matrix = load_matrix(path)?;
            let value = positive_multiplier_norm(&matrix, *tol)?;
            Ok(norm_report("positive", value, vec![]))
        }
        NormCmd::Fourier { phi, p } => {
            let p = parse_exponent(p)?;
            let symbol: Vec<Complex64> = phi.iter().map(|&x| Complex64::new(x, 0.0)).collect();
            let spectrum = CyclicSpectrum::full(symbol)?;
            let value = fourier_multiplier_norm(&spectrum, p)?;
            Ok(norm_report(
                "fourier",
                value,
                vec![("phi", json!(phi)), ("p", exponent_value(p))],
            ))
        }
    }
}

// ── text rendering ───────────────────────────────────────────────────────

/// Plain-text view of the JSON report: nested `key: value` lines; arrays of
/// scalars inline, arrays of objects itemized. No data beyond the JSON.
fn render_text(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => render_object(map, 0, &mut out),
        other => out.push_str(&format!("{other}\n")),
    }
    out
}

fn is_scalar(value: &Value) -> bool {
    !matches!(value, Value::Object(_)) && !matches!(value, Value::Array(a) if a.iter().any(|x| x.is_object()))
}

fn render_object(map: &serde_json::Map<String, Value>, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for (key, value) in map {
        if is_scalar(value) {
            out.push_str(&format!("{pad}{key}: {value}\n"));
        } else {
            out.push_str(&format!("{pad}{key}:\n"));
            render_nested(value, indent + 1, out);
        }
    }
}

fn render_nested(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => render_object(map, indent, out),
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    out.push_str(&format!("{pad}- {item}\n"));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_nested(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}
