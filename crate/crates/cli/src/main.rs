use std::fmt::Write as _;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kgraph::actions::{Action, ZlAction};
use kgraph::alignment::mce;
use kgraph::constructions::{crossed_product, recognize, skew_product, takai_check, Cocycle};
use kgraph::dynamics::{simplicity, Aperiodicity, Verdict, DEFAULT_DEPTH, DEFAULT_PAIR_BOUND};
use kgraph::gallery;
use kgraph::ktheory::{k_theory, Method};
use kgraph::skeleton::{Degree, KGraph, Path, PathView, Skeleton};
use kgraph::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "kgraph", version, about = "Higher-rank graph toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Pv,
    Orbits,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Part {
    All,
    Skeleton,
    Action,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a skeleton is a permissible k-coloured graph.
    Validate { skeleton: PathBuf },
    /// List the paths of a given degree with range V.
    Paths {
        skeleton: PathBuf,
        #[arg(short = 'v', long = "vertex")]
        vertex: String,
        /// Degree as comma-separated coordinates, e.g. `2,1`.
        #[arg(short = 'n', long = "degree")]
        degree: String,
    },
    /// Minimal common extensions of two paths (edge ids joined by `.`).
    Mce {
        skeleton: PathBuf,
        #[arg(short = 'a')]
        first: String,
        #[arg(short = 'b')]
        second: String,
    },
    /// The crossed-product (k+l)-graph of an action.
    Crossprod { skeleton: PathBuf, action: PathBuf },
    /// Recover base graph and action from a (k+l)-graph.
    Recognize {
        skeleton: PathBuf,
        /// 1-based colours carrying the group, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        zl_colors: Vec<u32>,
    },
    /// Windowed skew product by a cocycle.
    Skew {
        skeleton: PathBuf,
        cocycle: PathBuf,
        #[arg(long)]
        window: u32,
    },
    /// Check the duality isomorphism on a window.
    Takai {
        skeleton: PathBuf,
        action: PathBuf,
        #[arg(long)]
        window: u32,
    },
    /// Cofinality and aperiodicity diagnostics for the crossed product.
    Simplicity {
        skeleton: PathBuf,
        action: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: u32,
        #[arg(long, default_value_t = DEFAULT_PAIR_BOUND)]
        pair_bound: u32,
    },
    /// K-groups of the graph algebra, or of its crossed product.
    Ktheory {
        skeleton: PathBuf,
        action: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Emit a built-in instance; without a name, list them.
    Gallery {
        name: Option<String>,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Part::All)]
        part: Part,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSkeleton(_)
            | Error::InvalidAction(_)
            | Error::InvalidCocycle(_)
            | Error::NonSingletonDegree { .. }
            | Error::NoSources(_)
            | Error::NoSinks(_)
            | Error::Inapplicable(_)
            | Error::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

struct Output {
    json: String,
    text: String,
    code: u8,
}

impl Output {
    fn new<T: Serialize>(value: &T, text: String, code: u8) -> Self {
        Output {
            json: serde_json::to_string_pretty(value).expect("output serialises"),
            text,
            code,
        }
    }
}

fn read(path: &FsPath) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_skeleton(path: &FsPath) -> Result<Skeleton, Failure> {
    Skeleton::from_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &FsPath) -> Result<KGraph, Failure> {
    Ok(KGraph::new(&load_skeleton(path)?)?)
}

fn load_action(g: &KGraph, path: &FsPath) -> Result<Action, Failure> {
    let spec = ZlAction::from_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Action::new(g, &spec)?)
}

fn parse_path(g: &KGraph, s: &str) -> Result<Path, Failure> {
    let ids: Vec<&str> = s.split('.').collect();
    Ok(g.path_from_ids(&ids)?)
}

fn parse_degree(s: &str) -> Result<Degree, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map(Degree::new)
        .map_err(|_| {
            usage(format!(
                "bad degree `{s}`; expected comma-separated nonnegative integers"
            ))
        })
}

fn skeleton_line(sk: &Skeleton) -> String {
    format!(
        "k = {}, {} vertices, {} edges, {} squares\n",
        sk.k,
        sk.vertices.len(),
        sk.edges.len(),
        sk.squares.len()
    )
}

fn word(view: &PathView) -> String {
    if view.word.is_empty() {
        view.range.clone()
    } else {
        view.word.join(".")
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Validate { skeleton } => {
            let sk = load_skeleton(skeleton)?;
            let report = sk.validate();
            let mut text = format!("{}\n", report.summary());
            for v in &report.violations {
                writeln!(text, "  {}: {}", v.kind, v.detail).unwrap();
            }
            let code = if report.ok { 0 } else { 1 };
            Ok(Output::new(&report, text, code))
        }
        Command::Paths {
            skeleton,
            vertex,
            degree,
        } => {
            let g = load_graph(skeleton)?;
            let v = g.vertex(vertex)?;
            let paths = g.enumerate_paths(v, &parse_degree(degree)?)?;
            let views: Vec<PathView> = paths.iter().map(|p| g.view(p)).collect();
            let mut text = String::new();
            for view in &views {
                writeln!(text, "{}  ({} <- {})", word(view), view.range, view.source).unwrap();
            }
            Ok(Output::new(&views, text, 0))
        }
        Command::Mce {
            skeleton,
            first,
            second,
        } => {
            let g = load_graph(skeleton)?;
            let (mu, nu) = (parse_path(&g, first)?, parse_path(&g, second)?);
            #[derive(Serialize)]
            struct Entry {
                lambda: PathView,
                xi: PathView,
                eta: PathView,
            }
            let entries: Vec<Entry> = mce(&g, &mu, &nu)?
                .pairs
                .iter()
                .map(|e| Entry {
                    lambda: g.view(&e.lambda),
                    xi: g.view(&e.xi),
                    eta: g.view(&e.eta),
                })
                .collect();
            let mut text = format!("{} minimal common extensions\n", entries.len());
            for e in &entries {
                writeln!(
                    text,
                    "  {} = {}·{} = {}·{}",
                    word(&e.lambda),
                    first,
                    word(&e.xi),
                    second,
                    word(&e.eta)
                )
                .unwrap();
            }
            Ok(Output::new(&entries, text, 0))
        }
        Command::Crossprod { skeleton, action } => {
            let g = load_graph(skeleton)?;
            let a = load_action(&g, action)?;
            let cp = crossed_product(&g, &a)?;
            Ok(Output::new(&cp.skeleton, skeleton_line(&cp.skeleton), 0))
        }
        Command::Recognize { skeleton, zl_colors } => {
            let g = load_graph(skeleton)?;
            let rec = recognize(&g, zl_colors)?;
            let text = format!("base: {}l = {}\n", skeleton_line(&rec.base), rec.action.l);
            Ok(Output::new(&rec, text, 0))
        }
        Command::Skew {
            skeleton,
            cocycle,
            window,
        } => {
            let g = load_graph(skeleton)?;
            let c = Cocycle::from_json(&read(cocycle)?).map_err(|e| usage(format!("{}: {e}", cocycle.display())))?;
            let sp = skew_product(&g, &c, *window)?;
            Ok(Output::new(&sp.skeleton, skeleton_line(&sp.skeleton), 0))
        }
        Command::Takai {
            skeleton,
            action,
            window,
        } => {
            let g = load_graph(skeleton)?;
            let a = load_action(&g, action)?;
            let r = takai_check(&g, &a, *window)?;
            let text = match &r.failure {
                None => format!(
                    "ok: window {}, {} vertices, {} cells, {} products\n",
                    r.window, r.vertices, r.cells_checked, r.products_checked
                ),
                Some(f) => format!("failed: {f}\n"),
            };
            let code = if r.ok { 0 } else { 1 };
            Ok(Output::new(&r, text, code))
        }
        Command::Simplicity {
            skeleton,
            action,
            depth,
            pair_bound,
        } => {
            let g = load_graph(skeleton)?;
            let a = match action {
                Some(p) => load_action(&g, p)?,
                None => Action::trivial(&g, 0),
            };
            let r = simplicity(&g, &a, *pair_bound, *depth)?;
            let mut text = format!("verdict: {:?}\nalpha-cofinal: {}\n", r.verdict, r.alpha_cofinal);
            match &r.aperiodicity {
                Aperiodicity::AperiodicWitnessed { witnesses } => {
                    writeln!(text, "aperiodic: {} separating witnesses", witnesses.len()).unwrap()
                }
                Aperiodicity::PeriodicPairFound {
                    vertex,
                    first,
                    second,
                    depth,
                    exact,
                } => writeln!(
                    text,
                    "periodic pair at {vertex}: {first:?} ~ {second:?} (depth {depth}, {})",
                    if *exact { "exact" } else { "evidence" }
                )
                .unwrap(),
                Aperiodicity::UndecidedAtDepth { depth } => writeln!(text, "undecided at depth {depth}").unwrap(),
            }
            for n in &r.notes {
                writeln!(text, "note: {n}").unwrap();
            }
            let code = if r.verdict == Verdict::Simple { 0 } else { 1 };
            Ok(Output::new(&r, text, code))
        }
        Command::Ktheory {
            skeleton,
            action,
            method,
        } => {
            let g = load_graph(skeleton)?;
            let a = action.as_ref().map(|p| load_action(&g, p)).transpose()?;
            let method = match method {
                MethodArg::Pv => Method::Pv,
                MethodArg::Orbits => Method::Orbits,
                MethodArg::Both => Method::Both,
            };
            let r = k_theory(&g, a.as_ref(), method)?;
            let text = format!("K0 = {}\nK1 = {}\nmethod: {}\n", r.groups.k0, r.groups.k1, r.method);
            Ok(Output::new(&r, text, 0))
        }
        Command::Gallery { name, params, part } => {
            let Some(name) = name else {
                return Ok(Output::new(&gallery::NAMES, gallery::NAMES.join("\n") + "\n", 0));
            };
            let inst = gallery::by_name(name, params)?;
            let text = format!("{}: {}\n{}", inst.name, inst.note, skeleton_line(&inst.skeleton));
            Ok(match part {
                Part::All => Output::new(&inst, text, 0),
                Part::Skeleton => Output::new(&inst.skeleton, text, 0),
                Part::Action => match &inst.action {
                    Some(a) => Output::new(a, text, 0),
                    None => return Err(usage(format!("instance `{}` has no action", inst.name))),
                },
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => out.json + "\n",
                Format::Text => out.text,
            };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, body) {
                        eprintln!("kgraph: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("kgraph: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
