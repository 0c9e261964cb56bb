//! The `ehig` command line tool.
//!
//! Every command reads a graph (or an interval hypergraph) from a file, from
//! standard input when the path is `-`, or from a built-in fixture, and
//! exits with 0 for a positive answer, 1 for a negative one and 2 when the
//! input is unusable.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ehig_core::canonical::{build_canonical, build_canonical_unreduced, write_model, StretchedModel};
use ehig_core::ehig::{
    extract_forbidden_witness, recognize, verify_forbidden_witness, write_certificate, ForbiddenWitness, Outcome,
    Recognition, RecognizeOptions, DEFAULT_WITNESS_CAP,
};
use ehig_core::format::{parse_graph, parse_hypergraph, write_graph, write_hypergraph};
use ehig_core::generate::{generate, random_interval_graph, rng, Family, Fixture, Generated, GeneratorSpec};
use ehig_core::graphs::{interval_clique_path, reduce_twins, Graph};
use ehig_core::hyperkit::{brute_force_ehs, exact_hit_check, exactly_hittable, min_membership_hitting};
use ehig_core::models::{chordal_subtree_model, harary_model, write_set_system, write_subtree_model};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ehig", version, about = "Recognise exactly hittable interval graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership and print a certificate.
    Recognize {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        opts: DecideFlags,
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical interval model of the twin-reduced graph.
    Canonical {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        reverse: bool,
        #[arg(long)]
        skip_twin_reduction: bool,
        #[arg(long)]
        json: bool,
    },
    /// Look for an exact hitting set of an interval hypergraph.
    Hittable {
        /// Hypergraph file, or `-` for standard input.
        input: String,
        /// Use exhaustive search instead of the membership solver.
        #[arg(long)]
        brute_force: bool,
    },
    /// Minimum-membership hitting set of an interval hypergraph.
    Mmsc {
        /// Hypergraph file, or `-` for standard input.
        input: String,
    },
    /// Search for an induced path whose neighbourhood is too spread out.
    Witness {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Exactly hittable set-system or subtree model of any graph.
    Model {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = ModelKind::Sets)]
        kind: ModelKind,
    },
    /// Write a generated graph or hypergraph.
    Gen {
        /// random-interval, random-proper-interval, random-graph,
        /// random-chordal, random-hypergraph or a fixture name.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for random-graph.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Interval count for random-hypergraph.
        #[arg(long, default_value_t = 5)]
        m: usize,
    },
    /// Compare the decision against exhaustive search on random graphs.
    Oracle {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        cap: usize,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph file, or `-` for standard input.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    input: Option<String>,
    /// Use a built-in graph: fig1i, fig1ii, fig2 or fig4-k13.
    #[arg(long)]
    fixture: Option<String>,
}

#[derive(Args, Debug)]
struct DecideFlags {
    /// Walk the clique path right to left.
    #[arg(long)]
    reverse: bool,
    /// Keep vertices with identical clique ranges.
    #[arg(long)]
    skip_twin_reduction: bool,
    /// Longest induced path tried by the witness search.
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    cap: usize,
}

impl DecideFlags {
    fn options(&self) -> RecognizeOptions {
        RecognizeOptions {
            skip_twin_reduction: self.skip_twin_reduction,
            witness_cap: self.cap,
            reverse: self.reverse,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    /// Vertices and edges as elements; works for every graph.
    Sets,
    /// Subtrees of a clique tree; connected chordal graphs only.
    Subtrees,
}

/// Failure to get usable input; reported on stderr with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Reply = Result<(i32, String), InputError>;

/// Runs one command line. `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_YES
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok((code, text)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(InputError(message)) => {
            let _ = writeln!(stderr, "ehig: {message}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Reply {
    match command {
        Command::Recognize { input, opts, json } => {
            let g = read_graph(&input, stdin)?;
            run_recognize(&g, &opts.options(), json)
        }
        Command::Canonical {
            input,
            reverse,
            skip_twin_reduction,
            json,
        } => {
            let g = read_graph(&input, stdin)?;
            run_canonical(&g, reverse, skip_twin_reduction, json)
        }
        Command::Hittable { input, brute_force } => {
            let h = parse_hypergraph(&read_text(&input, stdin)?)?;
            let found = if brute_force { brute_force_ehs(&h, None)? } else { exactly_hittable(&h)? };
            Ok(match found {
                Some(s) => (EXIT_YES, format!("hittable {s}\n")),
                None => (EXIT_NO, "not-hittable\n".to_string()),
            })
        }
        Command::Mmsc { input } => {
            let h = parse_hypergraph(&read_text(&input, stdin)?)?;
            let r = min_membership_hitting(&h)?;
            let code = if r.k <= 1 { EXIT_YES } else { EXIT_NO };
            Ok((code, format!("membership {}\npoints {}\n", r.k, r.points)))
        }
        Command::Witness { input, cap, json } => {
            let g = read_graph(&input, stdin)?;
            run_witness(&g, cap, json)
        }
        Command::Model { input, kind } => {
            let g = read_graph(&input, stdin)?;
            let text = match kind {
                ModelKind::Sets => write_set_system(&harary_model(&g)),
                ModelKind::Subtrees => write_subtree_model(&g, &chordal_subtree_model(&g)?),
            };
            Ok((EXIT_YES, text))
        }
        Command::Gen { family, n, seed, p, m } => {
            let spec = GeneratorSpec {
                family: Family::parse(&family, p, m)?,
                n,
                seed,
            };
            let text = match generate(&spec)? {
                Generated::Graph(g) => write_graph(&g),
                Generated::Hypergraph(h) => write_hypergraph(&h),
            };
            Ok((EXIT_YES, text))
        }
        Command::Oracle {
            trials,
            max_n,
            seed,
            cap,
        } => run_oracle(trials, max_n, seed, cap),
    }
}

fn read_text(path: &str, stdin: &mut dyn Read) -> Result<String, InputError> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn read_graph(input: &GraphInput, stdin: &mut dyn Read) -> Result<Graph, InputError> {
    match (&input.fixture, &input.input) {
        (Some(name), _) => Ok(name.parse::<Fixture>()?.graph()),
        (None, Some(path)) => Ok(parse_graph(&read_text(path, stdin)?)?),
        (None, None) => Err(InputError("no input given".into())),
    }
}

fn decide(g: &Graph, opts: &RecognizeOptions) -> Result<Recognition, InputError> {
    recognize(g, opts).map_err(|e| InputError(format!("not an interval graph: {}", e.describe(g))))
}

fn labels(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn model_json(m: &StretchedModel) -> Value {
    let intervals: Vec<Value> = m
        .vertex_map
        .iter()
        .map(|(v, id)| {
            let i = m.hypergraph.interval(id).expect("mapped intervals exist");
            json!({ "vertex": v, "id": id, "l": i.l, "r": i.r })
        })
        .collect();
    json!({
        "points": m.hypergraph.points(),
        "zeros": m.zeros(),
        "separators": m.separators,
        "intervals": intervals,
    })
}

fn witness_fields(g: &Graph, w: Option<&ForbiddenWitness>) -> (Value, Value) {
    match w {
        Some(w) => (json!(labels(g, &w.path)), json!(labels(g, &w.independents))),
        None => (Value::Null, Value::Null),
    }
}

fn run_recognize(g: &Graph, opts: &RecognizeOptions, as_json: bool) -> Reply {
    let rec = decide(g, opts)?;
    let code = if rec.is_ehig() { EXIT_YES } else { EXIT_NO };
    if !as_json {
        return Ok((code, write_certificate(g, &rec)));
    }
    let mut value = match &rec.outcome {
        Outcome::Ehig { hitting, .. } => {
            let partition: Vec<Vec<String>> = rec.original_partition().iter().map(|b| labels(g, b)).collect();
            json!({
                "verdict": "ehig",
                "hitting": hitting.points(),
                "partition": partition,
                "witness_path": Value::Null,
                "witness_independent": Value::Null,
                "model": model_json(&rec.model),
            })
        }
        Outcome::NotEhig { k, witness } => {
            let (path, indep) = witness_fields(g, witness.as_ref());
            json!({
                "verdict": "not-ehig",
                "membership": k,
                "hitting": Value::Null,
                "partition": Value::Null,
                "witness_path": path,
                "witness_independent": indep,
                "model": model_json(&rec.model),
            })
        }
    };
    let twins: Vec<Value> = rec
        .reduction
        .merged
        .iter()
        .map(|&(gone, rep)| json!([g.label(gone), g.label(rep)]))
        .collect();
    value["twins"] = json!(twins);
    Ok((code, format!("{}\n", serde_json::to_string_pretty(&value)?)))
}

fn run_canonical(g: &Graph, reverse: bool, skip_twin_reduction: bool, as_json: bool) -> Reply {
    let cp = interval_clique_path(g).map_err(|e| InputError(format!("not an interval graph: {}", e.describe(g))))?;
    let model = if skip_twin_reduction {
        build_canonical_unreduced(g, &if reverse { cp.reversed() } else { cp })?
    } else {
        let reduced = reduce_twins(g)?.graph;
        let cp = interval_clique_path(&reduced).expect("induced subgraphs of interval graphs are interval");
        build_canonical(&reduced, &if reverse { cp.reversed() } else { cp })?
    };
    if as_json {
        let value = json!({ "model": model_json(&model) });
        return Ok((EXIT_YES, format!("{}\n", serde_json::to_string_pretty(&value)?)));
    }
    Ok((EXIT_YES, write_model(&model)))
}

fn run_witness(g: &Graph, cap: usize, as_json: bool) -> Reply {
    let rec = decide(g, &RecognizeOptions::default())?;
    let found = match &rec.outcome {
        Outcome::NotEhig { witness, .. } if cap == DEFAULT_WITNESS_CAP => witness.clone(),
        _ => extract_forbidden_witness(&rec.reduction.graph, &rec.clique_path, &rec.backbone, cap)
            .map(|w| w.map(|v| rec.reduction.kept[v])),
    };
    let found = found.filter(|w| verify_forbidden_witness(g, w));
    let code = if found.is_some() { EXIT_YES } else { EXIT_NO };
    if as_json {
        let (path, indep) = witness_fields(g, found.as_ref());
        let value = json!({
            "verdict": if rec.is_ehig() { "ehig" } else { "not-ehig" },
            "witness_path": path,
            "witness_independent": indep,
        });
        return Ok((code, format!("{}\n", serde_json::to_string_pretty(&value)?)));
    }
    let mut out = String::new();
    match &found {
        Some(w) => {
            let _ = writeln!(out, "witness-path {}", labels(g, &w.path).join(" "));
            let _ = writeln!(out, "witness-indep {}", labels(g, &w.independents).join(" "));
        }
        None => out.push_str("no-witness\n"),
    }
    Ok((code, out))
}

fn run_oracle(trials: usize, max_n: usize, seed: u64, cap: usize) -> Reply {
    if max_n == 0 {
        return Err(InputError("--max-n must be at least 1".into()));
    }
    let mut r = rng(seed);
    let opts = RecognizeOptions {
        witness_cap: cap,
        ..Default::default()
    };
    let (mut ehig, mut disagreements, mut unverified) = (0, 0, 0);
    let mut out = String::new();
    for trial in 0..trials {
        let n = 1 + trial % max_n;
        let (g, _) = random_interval_graph(n, &mut r);
        let rec = recognize(&g, &opts).expect("generated graphs are interval graphs");
        let brute = brute_force_ehs(&rec.model.hypergraph, None)?.is_some();
        if brute != rec.is_ehig() {
            disagreements += 1;
            let _ = writeln!(out, "# disagreement on trial {trial}:\n{}", write_graph(&g));
        }
        let sound = match &rec.outcome {
            Outcome::Ehig { hitting, .. } => exact_hit_check(&rec.model.hypergraph, hitting)?.is_exact,
            Outcome::NotEhig { witness, .. } => witness.as_ref().is_some_and(|w| verify_forbidden_witness(&g, w)),
        };
        if !sound {
            unverified += 1;
            let _ = writeln!(out, "# unverified certificate on trial {trial}:\n{}", write_graph(&g));
        }
        ehig += usize::from(rec.is_ehig());
    }
    let _ = writeln!(
        out,
        "trials {trials}\nehig {ehig}\nnot-ehig {}\ndisagreements {disagreements}\nunverified {unverified}",
        trials - ehig
    );
    let code = if disagreements == 0 && unverified == 0 { EXIT_YES } else { EXIT_NO };
    Ok((code, out))
}
