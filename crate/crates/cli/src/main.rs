use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use throttle_core::families::{fixture_names, Fixture};
use throttle_core::io::to_graph6;
use throttle_core::{Graph, RuleKind, ThrottlingKind};
use throttle_verify::compute::{compute, ComputeRequest, Parameter, Quantity};
use throttle_verify::props::{run_suite, suites, PropsConfig};
use throttle_verify::report::Report;
use throttle_verify::source::{apply, ingest, resolve, Operation};
use throttle_verify::table::{parse_filter, run_table, table_cases};

/// Exact throttling computations and verification suites for small graphs.
#[derive(Parser)]
#[command(name = "throttle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one throttling number or graph parameter.
    Compute(ComputeArgs),
    /// Recompute the table of published values.
    PaperSuite {
        /// Keep only cases tagged key=value (repeatable; all must match).
        #[arg(long)]
        filter: Vec<String>,
        /// Print the case ids and tags instead of running them.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a property suite over enumerated or supplied graphs.
    Props {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Graphs sampled per order above the exhaustive limit, and choice
        /// functions sampled per dominating set.
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Check the graphs in this file instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "graph6")]
        format: String,
        /// Print the available suites.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Validate a graph file and print one graph6 line per graph.
    Ingest {
        /// File to read, or `-` for standard input.
        path: PathBuf,
        #[arg(long, default_value = "graph6")]
        format: String,
        #[arg(long)]
        json: bool,
    },
    /// Named graphs and families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
}

#[derive(Subcommand)]
enum FamiliesAction {
    List,
}

#[derive(Args)]
struct ComputeArgs {
    /// zf, psd or pd.
    #[arg(long, requires = "kind", conflicts_with = "parameter")]
    rule: Option<String>,
    /// sum, prodx or prodstar.
    #[arg(long, requires = "rule")]
    kind: Option<String>,
    /// gamma, Z, Zplus or gammaP.
    #[arg(long, required_unless_present = "rule")]
    parameter: Option<String>,
    /// A fixture name or family spec such as spider:2,2,1,1.
    #[arg(long, group = "source")]
    fixture: Option<String>,
    #[arg(long, group = "source")]
    graph6: Option<String>,
    #[arg(long, group = "source")]
    file: Option<PathBuf>,
    /// Format of --file.
    #[arg(long, default_value = "graph6")]
    format: String,
    /// Which graph of --file to use.
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(long = "delete-vertex")]
    delete_vertex: Vec<String>,
    #[arg(long = "delete-edge")]
    delete_edge: Vec<String>,
    #[arg(long)]
    contract: Vec<String>,
    #[arg(long)]
    subdivide: Vec<String>,
    /// Include the propagation trace of the witness.
    #[arg(long)]
    trace: bool,
    /// Include the per-cardinality table.
    #[arg(long = "per-k")]
    per_k: bool,
    /// Fail unless the computed value equals this.
    #[arg(long)]
    expect: Option<u64>,
    #[arg(long)]
    json: bool,
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graphs(path: &PathBuf, format: &str) -> Result<Vec<Graph>> {
    ingest(&read_input(path)?, format).with_context(|| format!("in {}", path.display()))
}

/// Operations in command-line order.
fn operations(args: &ComputeArgs, matches: &ArgMatches) -> Vec<Operation> {
    let mut ops: Vec<(usize, Operation)> = Vec::new();
    let mut collect = |id: &str, values: &[String], make: fn(String) -> Operation| {
        if let Some(indices) = matches.indices_of(id) {
            ops.extend(indices.zip(values).map(|(i, v)| (i, make(v.clone()))));
        }
    };
    collect("delete_vertex", &args.delete_vertex, Operation::DeleteVertex);
    collect("delete_edge", &args.delete_edge, Operation::DeleteEdge);
    collect("contract", &args.contract, Operation::Contract);
    collect("subdivide", &args.subdivide, Operation::Subdivide);
    ops.sort_by_key(|(i, _)| *i);
    ops.into_iter().map(|(_, op)| op).collect()
}

fn source(args: &ComputeArgs) -> Result<Fixture> {
    if let Some(spec) = &args.fixture {
        return resolve(spec);
    }
    if let Some(g6) = &args.graph6 {
        let g = ingest(g6, "graph6")?.into_iter().next().context("empty graph6 string")?;
        return Ok(Fixture::new(g6.trim(), g));
    }
    if let Some(path) = &args.file {
        let graphs = read_graphs(path, &args.format)?;
        let count = graphs.len();
        let g =
            graphs.into_iter().nth(args.index).with_context(|| format!("{} holds {count} graphs", path.display()))?;
        return Ok(Fixture::new(format!("{}#{}", path.display(), args.index), g));
    }
    bail!("give one of --fixture, --graph6 or --file")
}

fn quantity(args: &ComputeArgs) -> Result<Quantity> {
    match (&args.rule, &args.kind, &args.parameter) {
        (Some(rule), Some(kind), None) => {
            Ok(Quantity::Throttling(rule.parse::<RuleKind>()?, kind.parse::<ThrottlingKind>()?))
        }
        (None, None, Some(p)) => Ok(Quantity::Parameter(p.parse::<Parameter>()?)),
        _ => bail!("give --rule with --kind, or --parameter"),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn emit(report: &Report, json: bool) -> ExitCode {
    if json {
        out(&format!("{}\n", report.to_json()));
    } else {
        out(&report.to_table());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn configure_workers() -> Result<()> {
    if let Ok(value) = std::env::var("THROTTLE_WORKERS") {
        let n: usize = value.parse().with_context(|| format!("THROTTLE_WORKERS must be a number, got `{value}`"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

/// Runs the command; errors are usage or input problems.
fn run(cli: Cli, matches: &ArgMatches) -> Result<ExitCode> {
    configure_workers()?;
    match cli.command {
        Command::Compute(args) => {
            let sub = matches.subcommand_matches("compute").expect("compute matches");
            let mut fx = source(&args)?;
            for op in operations(&args, sub) {
                fx = apply(&fx, &op)?;
            }
            let req = ComputeRequest {
                quantity: quantity(&args)?,
                per_k: args.per_k,
                trace: args.trace,
                expect: args.expect,
            };
            Ok(emit(&compute(&fx, &req)?, args.json))
        }
        Command::PaperSuite { filter, list, json } => {
            let filter = filter.iter().map(|f| parse_filter(f)).collect::<Result<Vec<_>>>()?;
            if list {
                for case in table_cases().iter().filter(|c| c.matches(&filter)) {
                    let tags: Vec<String> = case.tags.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    out(&format!("{}\t{}\n", case.id, tags.join(" ")));
                }
                return Ok(ExitCode::SUCCESS);
            }
            Ok(emit(&run_table(&filter), json))
        }
        Command::Props { suite, nmax, budget, seed, input, format, list, json } => {
            if list {
                for s in suites() {
                    out(&format!("{:<14} n <= {}  {}\n", s.name, s.default_nmax, s.description));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let suite = suite.context("--suite is required (see --list)")?;
            let input = input.map(|p| read_graphs(&p, &format)).transpose()?;
            let cfg = PropsConfig { nmax, budget, seed, input };
            Ok(emit(&run_suite(&suite, &cfg)?, json))
        }
        Command::Ingest { path, format, json } => {
            let graphs = read_graphs(&path, &format)?;
            if json {
                let rows: Vec<_> = graphs
                    .iter()
                    .map(|g| serde_json::json!({ "order": g.order(), "size": g.size(), "graph6": to_graph6(g) }))
                    .collect();
                out(&format!("{}\n", serde_json::to_string_pretty(&rows)?));
            } else {
                let lines: String = graphs.iter().map(|g| to_graph6(g) + "\n").collect();
                out(&lines);
            }
            eprintln!("{} graphs", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Families { action: FamiliesAction::List } => {
            for name in fixture_names() {
                out(&format!("{name}\n"));
            }
            for spec in [
                "K<n> P<n> C<n> S<n> E<n>",
                "path:<n> complete:<n> cycle:<n> star:<n> empty:<n>",
                "spider:<a>,<b>,<c>,...",
                "book:<k>",
                "matched_sum:<r>",
                "corona:<base>:<r>",
                "family_6n7:<base>",
            ] {
                out(&format!("{spec}\n"));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli, &matches) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
