//! Command-line front end: classification, h-vector tools, synthesis,
//! replay, deficiency bounds, batch corpus processing, and the oracle
//! self-check.
//!
//! JSON is the single interchange format; `--pretty` switches to a
//! human-readable rendering. Exit codes: 0 success, 1 domain errors
//! (reported as structured JSON on stdout), 2 input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hburch::buchsbaum::{deficiency_bounds, per_degree_dim_bounds};
use hburch::classify::{classify_hvector, classify_lifting_matrix, classify_plane_section};
use hburch::enumerate::homogeneous_grids;
use hburch::hvector::hvector_from_degree_matrix;
use hburch::matrix::canonicalize_homogeneous;
use hburch::recipe::{
    synthesize_buchsbaum, synthesize_integral_smooth, synthesize_max_deficiency,
    synthesize_non_acm, synthesize_non_acm_all_pivots, verify_recipe, CurveRecipe, Mode,
};
use hburch::transforms::{replay as replay_pipeline, Step};
use hburch::{
    degree_matrix_from_betti, degree_matrix_from_hvector, hvector_from_betti, BettiTable,
    DegreeMatrix, Error, HVector,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hburch", version, about = "Degree-matrix calculus for plane sections of space curves")]
struct Cli {
    /// Render human-readable tables instead of JSON where available.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MatrixInput {
    /// JSON file {"rows": [[int,...],...]}
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a degree matrix, Betti table, or h-vector.
    Classify {
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Betti table of points in P^n; classified through its lifting matrix.
        #[arg(long)]
        betti: Option<PathBuf>,
        #[arg(long)]
        hvector: Option<PathBuf>,
        /// Print only the integral-track fields.
        #[arg(long)]
        integral_only: bool,
        /// Print only the Buchsbaum fields.
        #[arg(long)]
        buchsbaum: bool,
    },
    /// h-vector of a degree matrix or Betti table.
    Hvector {
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        betti: Option<PathBuf>,
    },
    /// Invert an h-vector to its canonical zero-free degree matrix.
    Invert {
        #[arg(long)]
        hvector: PathBuf,
    },
    /// Betti table of a degree matrix, or the lifting matrix of a table.
    Betti {
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        betti: Option<PathBuf>,
    },
    /// Synthesize a curve recipe realizing the matrix.
    Synthesize {
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long, value_enum)]
        goal: GoalArg,
        #[arg(long, value_enum, default_value = "bdl-chain")]
        mode: ModeArg,
        /// Emit one recipe per qualifying pivot.
        #[arg(long)]
        all_pivots: bool,
    },
    /// Replay a recipe (optionally against a target) or a raw pipeline.
    Replay {
        #[arg(long)]
        recipe: Option<PathBuf>,
        #[arg(long)]
        target: Option<PathBuf>,
        /// Starting Betti table for a raw pipeline.
        #[arg(long)]
        start: Option<PathBuf>,
        /// JSON array of transform descriptors.
        #[arg(long)]
        pipeline: Option<PathBuf>,
    },
    /// Deficiency-module bounds from a degree matrix or Betti table.
    Bounds {
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        betti: Option<PathBuf>,
    },
    /// Exhaustive oracle identity and round-trip checks.
    Selfcheck {
        #[arg(long, default_value_t = 3)]
        max_t: usize,
        #[arg(long, default_value_t = 5)]
        max_entry: i64,
    },
    /// Run a corpus of entries; output order follows input order.
    Batch {
        #[arg(long)]
        corpus: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    Nonacm,
    Buchsbaum,
    Integral,
    Maxdef,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Union,
    BdlChain,
    Nice,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Union => Mode::Union,
            ModeArg::BdlChain => Mode::BdlChain,
            ModeArg::Nice => Mode::Nice,
        }
    }
}

/// Input-level failure: bad file, bad JSON, bad flag combination. Exit 2.
struct InputError(String);

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        InputError(format!(
            "invalid JSON in {} at line {}, column {}: {e}",
            path.display(),
            e.line(),
            e.column()
        ))
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Domain(e)) => {
            print_json(&json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            ExitCode::from(1)
        }
        Err(RunError::Input(InputError(msg))) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
    }
}

enum RunError {
    Domain(Error),
    Input(InputError),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Domain(e)
    }
}

impl From<InputError> for RunError {
    fn from(e: InputError) -> Self {
        RunError::Input(e)
    }
}

fn run(cli: &Cli) -> Result<(), RunError> {
    match &cli.command {
        Command::Classify { matrix, betti, hvector, integral_only, buchsbaum } => {
            let out = classify_value(
                matrix.as_deref(),
                betti.as_deref(),
                hvector.as_deref(),
                *integral_only,
                *buchsbaum,
            )?;
            if cli.pretty {
                print_classify_pretty(&out);
            } else {
                print_json(&out);
            }
        }
        Command::Hvector { matrix, betti } => {
            let h = match (matrix, betti) {
                (Some(path), None) => {
                    hvector_from_degree_matrix(&read_json::<DegreeMatrix>(path)?)
                }
                (None, Some(path)) => hvector_from_betti(&read_json::<BettiTable>(path)?)?,
                _ => {
                    return Err(InputError(
                        "hvector needs exactly one of --matrix or --betti".into(),
                    )
                    .into())
                }
            };
            let out = hvector_report(&h);
            if cli.pretty {
                println!("h(z) = {}", h.polynomial_string());
                println!("degree {}  genus {}", h.degree(), h.genus());
            } else {
                print_json(&out);
            }
        }
        Command::Invert { hvector } => {
            let h: HVector = read_json(hvector)?;
            let m = degree_matrix_from_hvector(&h)?;
            print_json(&json!({ "matrix": m }));
        }
        Command::Betti { matrix, betti } => match (matrix, betti) {
            (Some(path), None) => {
                let m: DegreeMatrix = read_json(path)?;
                print_json(&json!({ "betti": m.betti() }));
            }
            (None, Some(path)) => {
                let b: BettiTable = read_json(path)?;
                if b.ambient() == 2 {
                    let grid = degree_matrix_from_betti(&b)?;
                    print_json(&json!({ "matrix": { "rows": grid.rows() } }));
                } else {
                    print_json(&json!({ "lifting_matrix": b.lifting_grid() }));
                }
            }
            _ => {
                return Err(
                    InputError("betti needs exactly one of --matrix or --betti".into()).into(),
                )
            }
        },
        Command::Synthesize { input, goal, mode, all_pivots } => {
            let m: DegreeMatrix = read_json(&input.matrix)?;
            match goal {
                GoalArg::Nonacm => {
                    if *all_pivots {
                        let recipes = synthesize_non_acm_all_pivots(&m, (*mode).into())?;
                        print_json(&json!({ "recipes": recipes }));
                    } else {
                        print_recipe(&synthesize_non_acm(&m, (*mode).into())?, &m);
                    }
                }
                GoalArg::Buchsbaum => print_recipe(&synthesize_buchsbaum(&m)?, &m),
                GoalArg::Integral => print_recipe(&synthesize_integral_smooth(&m)?, &m),
                GoalArg::Maxdef => print_recipe(&synthesize_max_deficiency(&m)?, &m),
            }
        }
        Command::Replay { recipe, target, start, pipeline } => match (recipe, start, pipeline) {
            (Some(path), None, None) => {
                let r: CurveRecipe = read_json(path)?;
                if let Some(target_path) = target {
                    let m: DegreeMatrix = read_json(target_path)?;
                    let report = verify_recipe(&r, &m)?;
                    print_json(&json!({ "report": report }));
                } else {
                    let table = r.replay()?;
                    print_json(&json!({ "final": table }));
                }
            }
            (None, Some(start_path), Some(pipe_path)) => {
                let b: BettiTable = read_json(start_path)?;
                let steps: Vec<Step> = read_json(pipe_path)?;
                let table = replay_pipeline(&b, &steps)?;
                print_json(&json!({ "final": table }));
            }
            _ => {
                return Err(InputError(
                    "replay needs --recipe [--target], or --start with --pipeline".into(),
                )
                .into())
            }
        },
        Command::Bounds { matrix, betti } => match (matrix, betti) {
            (Some(path), None) => {
                let m: DegreeMatrix = read_json(path)?;
                let b = per_degree_dim_bounds(&m);
                if cli.pretty {
                    println!("alpha in [{}, {}]  delta = {}", b.alpha_lower, b.alpha_plus_upper, b.delta);
                    for (deg, bound) in &b.per_degree {
                        println!("  degree {deg}: dim <= {bound}");
                    }
                } else {
                    print_json(&bounds_output(&m));
                }
            }
            (None, Some(path)) => {
                let b: BettiTable = read_json(path)?;
                let (lo, hi) = deficiency_bounds(&b);
                print_json(&json!({ "alpha_lower": lo, "alpha_plus_upper": hi }));
            }
            _ => {
                return Err(
                    InputError("bounds needs exactly one of --matrix or --betti".into()).into(),
                )
            }
        },
        Command::Selfcheck { max_t, max_entry } => {
            let report = selfcheck(*max_t, *max_entry)?;
            print_json(&report);
        }
        Command::Batch { corpus } => {
            let entries: Vec<CorpusEntry> = {
                let doc: Value = read_json(corpus)?;
                let list = doc
                    .get("entries")
                    .cloned()
                    .ok_or_else(|| InputError("corpus must have an \"entries\" array".into()))?;
                serde_json::from_value(list)
                    .map_err(|e| InputError(format!("invalid corpus entry: {e}")))?
            };
            let mut seen = std::collections::BTreeSet::new();
            for entry in &entries {
                if !seen.insert(entry.id.clone()) {
                    return Err(InputError(format!("duplicate corpus id {:?}", entry.id)).into());
                }
            }
            let results: Vec<Value> = entries.iter().map(run_corpus_entry).collect();
            print_json(&json!({ "results": results }));
        }
    }
    Ok(())
}

fn print_recipe(recipe: &CurveRecipe, target: &DegreeMatrix) {
    let report = verify_recipe(recipe, target).ok();
    print_json(&json!({ "recipe": recipe, "verification": report }));
}

fn bounds_output(m: &DegreeMatrix) -> Value {
    let b = per_degree_dim_bounds(m);
    let mut out = serde_json::to_value(&b).expect("bounds serialize");
    out["sharpness_certificate"] = if b.delta > 0 {
        json!("attained; emit a witness with: synthesize --goal maxdef")
    } else {
        json!("trivial; no entry equals 2")
    };
    out
}

fn hvector_report(h: &HVector) -> Value {
    let (deg, genus) = (h.degree(), h.genus());
    json!({
        "h": h.coeffs(),
        "polynomial": h.polynomial_string(),
        "degree": deg,
        "genus": genus,
        "decreasing_type": h.is_decreasing_type(),
        "uvws": h.uvws(),
    })
}

fn classify_value(
    matrix: Option<&Path>,
    betti: Option<&Path>,
    hvector: Option<&Path>,
    integral_only: bool,
    buchsbaum: bool,
) -> Result<Value, RunError> {
    match (matrix, betti, hvector) {
        (Some(path), None, None) => {
            let m: DegreeMatrix = read_json(path)?;
            let v = classify_plane_section(&m);
            let full = serde_json::to_value(&v).expect("verdict serializes");
            Ok(if integral_only {
                json!({
                    "realizable_integral_smooth_nonacm": full["realizable_integral_smooth_nonacm"],
                    "integral_buchsbaum_nonacm": full["integral_buchsbaum_nonacm"],
                    "assumptions": full["assumptions"],
                })
            } else if buchsbaum {
                json!({
                    "buchsbaum_nonacm": full["buchsbaum_nonacm"],
                    "integral_buchsbaum_nonacm": full["integral_buchsbaum_nonacm"],
                })
            } else {
                json!({ "verdict": full })
            })
        }
        (None, Some(path), None) => {
            let b: BettiTable = read_json(path)?;
            let v = classify_lifting_matrix(&b);
            Ok(json!({ "verdict": v }))
        }
        (None, None, Some(path)) => {
            let h: HVector = read_json(path)?;
            let v = classify_hvector(&h)?;
            Ok(json!({ "verdict": v }))
        }
        _ => Err(InputError(
            "classify needs exactly one of --matrix, --betti, or --hvector".into(),
        )
        .into()),
    }
}

fn print_classify_pretty(v: &Value) {
    fn walk(prefix: &str, v: &Value) {
        match v {
            Value::Object(map) => {
                if let (Some(holds), Some(rule)) = (map.get("holds").or(map.get("state")), map.get("rule")) {
                    let note = map.get("note").and_then(Value::as_str).unwrap_or("");
                    println!("{prefix:<42} {holds}  [{}] {note}", rule.as_str().unwrap_or(""));
                } else {
                    for (k, val) in map {
                        let label = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                        walk(&label, val);
                    }
                }
            }
            other => println!("{prefix:<42} {other}"),
        }
    }
    walk("", v);
}

#[derive(Serialize)]
struct SelfcheckReport {
    max_t: usize,
    max_entry: i64,
    grids: usize,
    degree_matrices: usize,
    oracle_matches: usize,
    inversion_roundtrips: usize,
}

fn selfcheck(max_t: usize, max_entry: i64) -> Result<SelfcheckReport, RunError> {
    let verbose = std::env::var_os("HBURCH_VERBOSE").is_some();
    let (mut grids, mut dms, mut oracle, mut inversions) = (0usize, 0usize, 0usize, 0usize);
    for t in 1..=max_t {
        if verbose {
            eprintln!("selfcheck: t = {t}");
        }
        for grid in homogeneous_grids(t, -1, max_entry) {
            grids += 1;
            let canonical = canonicalize_homogeneous(&grid).expect("enumerated grid");
            let Ok(m) = DegreeMatrix::new(canonical) else {
                continue;
            };
            dms += 1;
            let closed = hvector_from_degree_matrix(&m);
            let expanded = hvector_from_betti(&m.betti())?;
            if closed != expanded {
                return Err(Error::InvalidInput(format!(
                    "oracle mismatch on {:?}",
                    m.rows()
                ))
                .into());
            }
            oracle += 1;
            if !m.base().has_entry(0) {
                let back = degree_matrix_from_hvector(&closed)?;
                if back != m {
                    return Err(Error::InvalidInput(format!(
                        "inversion mismatch on {:?}",
                        m.rows()
                    ))
                    .into());
                }
                inversions += 1;
            }
        }
    }
    Ok(SelfcheckReport {
        max_t,
        max_entry,
        grids,
        degree_matrices: dms,
        oracle_matches: oracle,
        inversion_roundtrips: inversions,
    })
}

#[derive(serde::Deserialize)]
struct CorpusEntry {
    id: String,
    command: String,
    payload: Value,
    #[serde(default)]
    expected: Option<Value>,
}

fn run_corpus_entry(entry: &CorpusEntry) -> Value {
    let output = corpus_output(&entry.command, &entry.payload);
    let mut result = json!({ "id": entry.id, "output": output });
    if let Some(expected) = &entry.expected {
        result["matches_expected"] = json!(&result["output"] == expected);
    }
    result
}

fn corpus_output(command: &str, payload: &Value) -> Value {
    let domain_err = |e: Error| json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
    let parse_err = |e: serde_json::Error| json!({ "error": { "kind": "ParseError", "message": e.to_string() } });
    match command {
        "classify" => match serde_json::from_value::<DegreeMatrix>(payload.clone()) {
            Ok(m) => json!({ "verdict": classify_plane_section(&m) }),
            Err(e) => parse_err(e),
        },
        "classify_hvector" => match serde_json::from_value::<HVector>(payload.clone()) {
            Ok(h) => classify_hvector(&h)
                .map(|v| json!({ "verdict": v }))
                .unwrap_or_else(domain_err),
            Err(e) => parse_err(e),
        },
        "hvector" => match serde_json::from_value::<DegreeMatrix>(payload.clone()) {
            Ok(m) => hvector_report(&hvector_from_degree_matrix(&m)),
            Err(e) => parse_err(e),
        },
        "invert" => match serde_json::from_value::<HVector>(payload.clone()) {
            Ok(h) => degree_matrix_from_hvector(&h)
                .map(|m| json!({ "matrix": m }))
                .unwrap_or_else(domain_err),
            Err(e) => parse_err(e),
        },
        "betti" => match serde_json::from_value::<DegreeMatrix>(payload.clone()) {
            Ok(m) => json!({ "betti": m.betti() }),
            Err(e) => parse_err(e),
        },
        "bounds" => match serde_json::from_value::<DegreeMatrix>(payload.clone()) {
            Ok(m) => bounds_output(&m),
            Err(e) => parse_err(e),
        },
        "replay" => match serde_json::from_value::<CurveRecipe>(payload.clone()) {
            Ok(r) => r
                .replay()
                .map(|t| json!({ "final": t }))
                .unwrap_or_else(domain_err),
            Err(e) => parse_err(e),
        },
        other => json!({ "error": { "kind": "UnknownCommand", "message": other } }),
    }
}
