use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use proxgraph::dot::export_dot;
use proxgraph::dynamics::{orbit_check, validate_map, verify_self_homomorphism, Verdict};
use proxgraph::io;
use proxgraph::realize::{self, DecisionLevel, Target};
use proxgraph::{BipartiteGraph, Error, FiniteSpace, Mode, Rational};

mod sweep;

#[derive(Parser)]
#[command(name = "proxgraph", version, about = "Proximinal and farthest graphs of finite metric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Proximinal,
    Farthest,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Metric,
    Ultrametric,
    Farthest,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Exact,
    Iso,
}

#[derive(Subcommand)]
enum Command {
    /// Semimetric, metric or ultrametric, with a violating triple.
    Classify { space: PathBuf },
    /// Proximinal or farthest graph of two parts of a space.
    Graph {
        space: PathBuf,
        #[arg(long, value_enum, default_value = "proximinal")]
        mode: ModeArg,
        #[arg(long, num_args = 2, value_names = ["A", "B"], default_values = ["A", "B"])]
        parts: Vec<String>,
    },
    /// Whether a graph file is a proximinal or farthest graph.
    Decide {
        graph: PathBuf,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long, value_enum, default_value = "exact")]
        level: LevelArg,
    },
    /// A witness space realizing a graph file.
    Realize {
        graph: PathBuf,
        #[arg(long, value_enum)]
        target: TargetArg,
    },
    /// Recomputes the graph of a space and compares it with a graph file.
    Verify {
        graph: PathBuf,
        space: PathBuf,
        #[arg(long, value_enum, default_value = "proximinal")]
        mode: ModeArg,
        #[arg(long, num_args = 2, value_names = ["A", "B"], default_values = ["A", "B"])]
        parts: Vec<String>,
    },
    /// Closed balls of a given radius in an ultrametric space.
    Balls {
        space: PathBuf,
        #[arg(long)]
        radius: String,
    },
    /// Orbit distances of a best proximity pair under a cyclic map.
    Orbit {
        space: PathBuf,
        map: PathBuf,
        #[arg(long)]
        a0: String,
        #[arg(long)]
        b0: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, num_args = 2, value_names = ["A", "B"], default_values = ["A", "B"])]
        parts: Vec<String>,
    },
    /// Graphviz rendering of a graph file.
    Dot { graph: PathBuf },
    /// Runs a named invariant suite.
    Sweep {
        #[arg(long, value_enum)]
        suite: sweep::Suite,
        #[arg(long, default_value_t = 3)]
        max_part_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Instance count for the random suites.
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
}

enum Failure {
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

struct Output {
    stdout: String,
    summary: Option<String>,
    ok: bool,
}

impl Output {
    fn json(value: Value) -> Self {
        Output { stdout: io::pretty(&value), summary: None, ok: true }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<FiniteSpace, Failure> {
    Ok(io::parse_space(&read(path)?)?)
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn parts<'s>(space: &'s FiniteSpace, names: &[String]) -> Result<(&'s [usize], &'s [usize]), Failure> {
    Ok((space.part(&names[0])?, space.part(&names[1])?))
}

fn target(t: TargetArg) -> Target {
    match t {
        TargetArg::Metric => Target::ProximinalMetric,
        TargetArg::Ultrametric => Target::ProximinalUltrametric,
        TargetArg::Farthest => Target::Farthest,
    }
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Proximinal => Mode::Proximinal,
        ModeArg::Farthest => Mode::Farthest,
    }
}

fn edge_set(g: &BipartiteGraph) -> BTreeSet<(String, String)> {
    g.edge_labels().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Classify { space } => {
            let s = load_space(&space)?;
            let class = s.classify();
            let mut out = Output::json(serde_json::to_value(&class).expect("class serializes"));
            out.summary = Some(format!("{:?}", class.level).to_lowercase());
            Ok(out)
        }
        Command::Graph { space, mode: m, parts: names } => {
            let s = load_space(&space)?;
            let (a, b) = parts(&s, &names)?;
            let g = proxgraph::proximity::graph(&s, a, b, mode(m))?;
            Ok(Output {
                stdout: io::write_graph(&g),
                summary: Some(format!("{} edges", g.edges().len())),
                ok: true,
            })
        }
        Command::Decide { graph, target: t, level } => {
            let g = load_graph(&graph)?;
            let level = match level {
                LevelArg::Exact => DecisionLevel::ExactParts,
                LevelArg::Iso => DecisionLevel::UpToIsomorphism,
            };
            let d = realize::decide(&g, target(t), level);
            let mut out = Output::json(io::decision_json(&d));
            out.summary = Some(format!("realizable: {} ({})", d.realizable, d.reason));
            Ok(out)
        }
        Command::Realize { graph, target: t } => {
            let g = load_graph(&graph)?;
            let s = match target(t) {
                Target::ProximinalMetric => realize::realize_metric(&g)?,
                Target::ProximinalUltrametric => realize::realize_ultrametric(&g)?,
                Target::Farthest => realize::realize_farthest(&g)?,
            };
            Ok(Output { stdout: io::write_space(&s), summary: None, ok: true })
        }
        Command::Verify { graph, space, mode: m, parts: names } => {
            let expected = load_graph(&graph)?;
            let s = load_space(&space)?;
            let (a, b) = parts(&s, &names)?;
            let actual = proxgraph::proximity::graph(&s, a, b, mode(m))?;
            let same_parts = actual.part_a() == expected.part_a() && actual.part_b() == expected.part_b();
            let (have, want) = (edge_set(&actual), edge_set(&expected));
            let only_space: Vec<&(String, String)> = have.difference(&want).collect();
            let only_file: Vec<&(String, String)> = want.difference(&have).collect();
            let equal = same_parts && only_space.is_empty() && only_file.is_empty();
            let value = json!({
                "equal": equal,
                "same_parts": same_parts,
                "only_in_space": only_space,
                "only_in_file": only_file,
            });
            Ok(Output {
                stdout: io::pretty(&value),
                summary: Some(if equal { "equal".into() } else { "unequal".into() }),
                ok: equal,
            })
        }
        Command::Balls { space, radius } => {
            let s = load_space(&space)?;
            let r: Rational = radius.parse()?;
            let p = s.ball_partition(&r)?;
            let mut out = Output::json(io::ball_partition_json(&s, &p));
            out.summary = Some(format!("{} balls", p.blocks.len()));
            Ok(out)
        }
        Command::Orbit { space, map, a0, b0, steps, parts: names } => {
            let s = load_space(&space)?;
            let table = io::parse_map(&read(&map)?)?;
            let (a, b) = parts(&s, &names)?;
            let (f, _) = validate_map(&table, &s, a, b)?;
            let (x, y) = (s.index_of(&a0)?, s.index_of(&b0)?);
            let dists = orbit_check(&f, &s, x, y, steps)?;
            let homomorphism = verify_self_homomorphism(&f, &s)? == Verdict::Homomorphism;
            let value = json!({ "distances": dists, "self_homomorphism": homomorphism });
            Ok(Output { stdout: io::pretty(&value), summary: None, ok: homomorphism })
        }
        Command::Dot { graph } => {
            let g = load_graph(&graph)?;
            Ok(Output { stdout: export_dot(&g), summary: None, ok: true })
        }
        Command::Sweep { suite, max_part_size, seed, count } => {
            let report = sweep::run(suite, max_part_size, seed, count)?;
            let ok = report.failed == 0;
            let summary = format!("{}: {} passed, {} failed", report.suite, report.passed, report.failed);
            let mut out = Output::json(serde_json::to_value(&report).expect("report serializes"));
            out.summary = Some(summary);
            out.ok = ok;
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            if let Some(s) = out.summary {
                eprintln!("{s}");
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
