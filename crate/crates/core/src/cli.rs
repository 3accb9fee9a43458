//! Command-line front end. Every invocation writes one JSON report on
//! stdout; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 resource guard,
//! 4 internal invariant violation.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cliques::maximal_homogeneous;
use crate::coloring::{Coloring, VertexSet};
use crate::error::{Error, Result};
use crate::generators::{generate, GeneratorSpec};
use crate::io::{
    coloring_value, emit_dot, pairs_json, parse_coloring, parse_triples, report, triples_json,
    vertex_set_json, DotMode, Format,
};
use crate::reconstruct::{
    classify, critical_pairs, e_property, four_suffices_certificate, reconstructions,
};
use crate::survey::{
    hunt_no_critical, hunt_segment_question, prefix_profile, recognize_triples, survey,
    CampaignOptions, SurveyMode, DEFAULT_SAMPLES, DEFAULT_SEED,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Graph6,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Ones,
    Zeros,
    Both,
}

#[derive(Parser, Debug)]
#[command(
    name = "homrecon",
    version,
    about = "Reconstruct pair-colorings from their homogeneous sets"
)]
struct Cli {
    /// Coloring format for input and output.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,
    /// Worker threads for campaigns (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a coloring from a family spec such as `partition(0,1,2|3,4|5)`.
    Gen { spec: String },
    /// Reconstructibility, solution count, r-value and critical pairs.
    Classify { input: Option<PathBuf> },
    /// Every coloring with the same homogeneous sets, in increasing order.
    Reconstructions {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
    /// Critical pairs.
    Critical { input: Option<PathBuf> },
    /// Least distance to a nontrivial reconstruction (0 when reconstructible).
    Rvalue { input: Option<PathBuf> },
    /// Maximal homogeneous sets.
    Maximal { input: Option<PathBuf> },
    /// Least reconstructible superset of each 4-set.
    Certify4 { input: Option<PathBuf> },
    /// Extension property: every set of at most `max-f` vertices has a common `color`-neighbour.
    Eprop {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        color: u8,
        #[arg(long, default_value_t = 1)]
        max_f: usize,
    },
    /// Whether a triple family is the homogeneous-triple family of some coloring.
    Recognize { input: Option<PathBuf> },
    /// Classify every canonical coloring on n vertices (sampled for n = 7, 8).
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Search for witnesses to open questions.
    Hunt {
        #[command(subcommand)]
        kind: HuntKind,
    },
    /// Reconstruction data of every prefix of a generated coloring.
    Prefix {
        spec: String,
        #[arg(long)]
        n_max: usize,
    },
    /// Graphviz rendering, wrapped in the report.
    Dot {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "ones")]
        mode: ModeArg,
    },
}

#[derive(Subcommand, Debug)]
enum HuntKind {
    /// Unreconstructible colorings without a critical pair.
    NoCritical {
        #[arg(long)]
        n: usize,
    },
    /// Reconstructible colorings whose prefixes from n0 on are not.
    Segment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n0: usize,
    },
}

/// Runs the CLI on `args` (including the program name) against real stdio.
pub fn run_cli(args: impl IntoIterator<Item = String>) -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(
        args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Same as [`run_cli`] with explicit streams.
pub fn run_cli_with(
    args: impl IntoIterator<Item = String>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok((doc, code)) => {
            let _ = writeln!(stdout, "{doc}");
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "homrecon: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Validation(_) | Error::Domain(_) => 2,
        Error::Resource(_) => 3,
        Error::Invariant(_) => 4,
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    let res = match path {
        Some(p) => std::fs::File::open(p).and_then(|mut f| f.read_to_end(&mut buf)),
        None => stdin.read_to_end(&mut buf),
    };
    res.map_err(|e| Error::Validation(format!("cannot read input: {e}")))?;
    Ok(buf)
}

fn text(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 1,
        column: e.valid_up_to() + 1,
        message: "input is not UTF-8".into(),
    })
}

fn format_of(cli: &Cli) -> Format {
    match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Graph6 => Format::Graph6,
    }
}

fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(vertex_set_json).collect())
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Value, i32)> {
    let fmt = format_of(cli);
    let load = |input: &Option<PathBuf>, stdin: &mut dyn Read| -> Result<(Vec<u8>, Coloring)> {
        let bytes = read_input(input, stdin)?;
        let phi = parse_coloring(text(&bytes)?, fmt)?;
        Ok((bytes, phi))
    };
    let ok = |doc: Value| Ok((doc, 0));
    match &cli.command {
        Command::Gen { spec } => {
            let parsed: GeneratorSpec = spec.parse()?;
            let phi = generate(&parsed)?;
            ok(report(
                "gen",
                spec.as_bytes(),
                json!({ "spec": parsed.to_string(), "coloring": coloring_value(&phi, fmt) }),
                None,
            ))
        }
        Command::Classify { input } => {
            let (bytes, phi) = load(input, stdin)?;
            let r = classify(&phi)?;
            ok(report(
                "classify",
                &bytes,
                json!({
                    "n": phi.n(),
                    "reconstructible": r.reconstructible,
                    "solution_count": r.solution_count,
                    "r_value": r.r_value,
                    "critical_pairs": pairs_json(&r.critical_pairs),
                    "witness": r.witness.as_ref().map(|w| coloring_value(w, fmt)),
                }),
                None,
            ))
        }
        Command::Reconstructions { input, limit } => {
            let (bytes, phi) = load(input, stdin)?;
            let sols = reconstructions(&phi, *limit)?;
            let list: Vec<Value> = sols
                .colorings
                .iter()
                .map(|c| coloring_value(c, fmt))
                .collect();
            ok(report(
                "reconstructions",
                &bytes,
                json!({ "count": list.len(), "truncated": sols.truncated, "colorings": list }),
                None,
            ))
        }
        Command::Critical { input } => {
            let (bytes, phi) = load(input, stdin)?;
            let pairs = critical_pairs(&phi)?;
            ok(report(
                "critical",
                &bytes,
                json!({ "critical_pairs": pairs_json(&pairs) }),
                None,
            ))
        }
        Command::Rvalue { input } => {
            let (bytes, phi) = load(input, stdin)?;
            let r = classify(&phi)?.r_value;
            ok(report("rvalue", &bytes, json!({ "r_value": r }), None))
        }
        Command::Maximal { input } => {
            let (bytes, phi) = load(input, stdin)?;
            let sets = maximal_homogeneous(&phi)?;
            ok(report(
                "maximal",
                &bytes,
                json!({ "maximal": sets_json(&sets) }),
                None,
            ))
        }
        Command::Certify4 { input } => {
            let (bytes, phi) = load(input, stdin)?;
            let cert = four_suffices_certificate(&phi)?;
            let entries: Vec<Value> = cert
                .entries
                .iter()
                .map(|(f, y)| json!({ "set": vertex_set_json(f), "witness": y.as_ref().map(vertex_set_json) }))
                .collect();
            ok(report(
                "certify4",
                &bytes,
                json!({ "total": cert.is_total(), "entries": entries }),
                None,
            ))
        }
        Command::Eprop {
            input,
            color,
            max_f,
        } => {
            if *color > 1 {
                return Err(Error::Validation(format!(
                    "color must be 0 or 1, got {color}"
                )));
            }
            let (bytes, phi) = load(input, stdin)?;
            let out = e_property(&phi, *color, *max_f)?;
            ok(report(
                "eprop",
                &bytes,
                json!({
                    "color": color,
                    "max_f": max_f,
                    "holds": out.holds,
                    "first_failing": out.first_failing.as_ref().map(vertex_set_json),
                }),
                None,
            ))
        }
        Command::Recognize { input } => {
            let bytes = read_input(input, stdin)?;
            let t = parse_triples(text(&bytes)?)?;
            let out = recognize_triples(&t)?;
            ok(report(
                "recognize",
                &bytes,
                json!({
                    "realizable": out.realizable,
                    "canonical_reconstruction": out.canonical_reconstruction.as_ref().map(|c| coloring_value(c, fmt)),
                    "infeasibility_witness": out.infeasibility_witness.map(|(a, b, c)| json!([a, b, c])),
                    "triples": triples_json(&t),
                }),
                None,
            ))
        }
        Command::Survey { n, samples, seed } => {
            let opts = CampaignOptions {
                workers: cli.workers,
                samples: *samples,
                seed: *seed,
            };
            let s = survey(*n, &opts)?;
            let (mode, used_seed) = match s.mode {
                SurveyMode::Exhaustive => (json!("exhaustive"), None),
                SurveyMode::Sampled { samples, seed } => {
                    (json!({ "sampled": samples }), Some(seed))
                }
            };
            let hist: serde_json::Map<String, Value> = s
                .r_histogram
                .iter()
                .map(|(r, c)| (r.to_string(), json!(c)))
                .collect();
            let violations: Vec<Value> = s
                .violations
                .iter()
                .map(|v| json!({ "coloring": coloring_value(&v.coloring, fmt), "property": v.property, "detail": v.detail }))
                .collect();
            let code = if violations.is_empty() { 0 } else { 4 };
            let input = format!("survey n={n} samples={samples} seed={seed}");
            let doc = report(
                "survey",
                input.as_bytes(),
                json!({
                    "n": s.n,
                    "mode": mode,
                    "total": s.total,
                    "reconstructible": s.reconstructible,
                    "unreconstructible_with_critical": s.unreconstructible_with_critical,
                    "unreconstructible_without_critical": s.unreconstructible_without_critical,
                    "r_histogram": hist,
                    "violations": violations,
                }),
                used_seed,
            );
            Ok((doc, code))
        }
        Command::Hunt { kind } => match kind {
            HuntKind::NoCritical { n } => {
                let found = hunt_no_critical(*n, cli.workers)?;
                let list: Vec<Value> = found.iter().map(|c| coloring_value(c, fmt)).collect();
                let input = format!("hunt no-critical n={n}");
                ok(report(
                    "hunt",
                    input.as_bytes(),
                    json!({ "kind": "no-critical", "n": n, "count": list.len(), "witnesses": list, "note": note(list.is_empty()) }),
                    None,
                ))
            }
            HuntKind::Segment { n, n0 } => {
                let found = hunt_segment_question(*n, *n0, cli.workers)?;
                let list: Vec<Value> = found
                    .iter()
                    .map(|w| json!({ "coloring": coloring_value(&w.coloring, fmt), "critical_at_new_vertex": w.critical_at_new_vertex }))
                    .collect();
                let input = format!("hunt segment n={n} n0={n0}");
                ok(report(
                    "hunt",
                    input.as_bytes(),
                    json!({ "kind": "segment", "n": n, "n0": n0, "count": list.len(), "witnesses": list, "note": note(list.is_empty()) }),
                    None,
                ))
            }
        },
        Command::Prefix { spec, n_max } => {
            let parsed: GeneratorSpec = spec.parse()?;
            let rows: Vec<Value> = prefix_profile(&parsed, *n_max)?
                .iter()
                .map(|p| {
                    json!({
                        "m": p.m,
                        "reconstructible": p.reconstructible,
                        "critical_pairs": pairs_json(&p.critical_pairs),
                        "r_value": p.r_value,
                    })
                })
                .collect();
            let input = format!("{parsed} n_max={n_max}");
            ok(report(
                "prefix",
                input.as_bytes(),
                json!({ "spec": parsed.to_string(), "prefixes": rows }),
                None,
            ))
        }
        Command::Dot { input, mode } => {
            let (bytes, phi) = load(input, stdin)?;
            let mode = match mode {
                ModeArg::Ones => DotMode::Ones,
                ModeArg::Zeros => DotMode::Zeros,
                ModeArg::Both => DotMode::Both,
            };
            ok(report(
                "dot",
                &bytes,
                json!({ "dot": emit_dot(&phi, mode) }),
                None,
            ))
        }
    }
}

fn note(empty: bool) -> Value {
    if empty {
        json!("no witness at this scale")
    } else {
        Value::Null
    }
}
