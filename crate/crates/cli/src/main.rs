use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wepart_core::cograph::{c_homogeneous_search, two_homogeneous_partition};
use wepart_core::equitability::{
    is_b_invariant, is_equitable, is_weight_equitable, is_weight_equitable_commute, IntersectionTable,
};
use wepart_core::experiment::{run_experiment, ExperimentConfig, Source};
use wepart_core::format::{
    format_partition, parse_edge_list, parse_graph6, parse_graph_auto, parse_partition, parse_partition_infer,
};
use wepart_core::oracle::{
    all_automorphisms, enumerate_weight_equitable, find_fixed_point_free_involution, max_we_refinement,
    EnumerationBudget,
};
use wepart_core::spectral::{perron, DEFAULT_PERRON_TOL};
use wepart_core::{Cotree, Error, Graph, JointContext, Partition, WeightedView};

/// Weight-equitable partitions of graphs.
///
/// Graph files are graph6 (one record) or an edge list (`n m` then `m`
/// lines `u v`); `-` reads standard input. Partition files list one cell per
/// line with 1-based vertex ids.
///
/// Exit status: 0 when the property holds, 1 when it fails, 2 on errors.
#[derive(Parser)]
#[command(name = "wepart", version)]
struct Cli {
    /// Absolute tolerance for equitability tests.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Graph file format; guessed from the content when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<GraphFormat>,
    /// Seed for randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of standard output. For `experiment` this
    /// is a directory, by default the current one.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    /// Plain neighbor counts are constant on cells.
    Equitable,
    /// Weight-intersection numbers are constant on cells.
    Weight,
    /// The weighted projector commutes with the adjacency matrix.
    Commute,
    /// Cell indicator vectors span an invariant subspace of the weighted
    /// neighbor-average operator.
    Binv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectral radius and the Perron vector (minimum entry 1).
    Perron { graph: PathBuf },
    /// Test a partition for (weight-)equitability.
    Check {
        graph: PathBuf,
        partition: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckMode::Weight)]
        mode: CheckMode,
    },
    /// Print the normalized weight-quotient matrix and the cell norms.
    Condense { graph: PathBuf, partition: PathBuf },
    /// Join (coarsest common coarsening) of two partitions.
    Join { first: PathBuf, second: PathBuf },
    /// Meet (cellwise intersections) of two partitions.
    Meet { first: PathBuf, second: PathBuf },
    /// Print the canonical cotree of a cograph.
    Cotree { graph: PathBuf },
    /// A 2-homogeneous equitable partition of a connected cograph.
    Homog2 { graph: PathBuf },
    /// Whether isomorphic sibling subtrees can be grouped into sets of c.
    Chomog {
        graph: PathBuf,
        #[arg(long)]
        c: usize,
    },
    /// Report on a joint partition of two graphs; vertices of the second
    /// graph are numbered after those of the first.
    Joint { g: PathBuf, h: PathBuf, partition: PathBuf },
    /// Brute-force reference computations for small graphs.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Join-coarseness experiment on connected cographs.
    Experiment(ExperimentArgs),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// All weight-equitable partitions, separated by blank lines.
    WeEnum {
        graph: PathBuf,
        /// Only partitions with this many cells.
        #[arg(long)]
        cells: Option<usize>,
    },
    /// All automorphisms in cycle notation.
    Aut { graph: PathBuf },
    /// A fixed-point-free involutive automorphism, or `none`.
    FpfInvolution { graph: PathBuf },
    /// The maximal weight-equitable refinement of a partition.
    MaxRefine { graph: PathBuf, partition: PathBuf },
}

#[derive(Args)]
struct ExperimentArgs {
    /// Use every connected cograph on N vertices.
    #[arg(long, value_name = "N", conflicts_with = "random", required_unless_present = "random")]
    enumerate: Option<usize>,
    /// Use COUNT random connected cographs (needs --n).
    #[arg(long, value_name = "COUNT", requires = "n")]
    random: Option<usize>,
    /// Vertex count for --random.
    #[arg(long = "n", value_name = "N")]
    n: Option<usize>,
    /// Fraction of joins re-verified as weight-equitable.
    #[arg(long, default_value_t = 0.1)]
    spot_check_rate: f64,
}

enum Outcome {
    Holds,
    Fails,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &out) {
                eprintln!("wepart: {e}");
                return ExitCode::from(2);
            }
            match outcome {
                Outcome::Holds => ExitCode::SUCCESS,
                Outcome::Fails => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("wepart: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, out: &str) -> std::io::Result<()> {
    match (&cli.out, &cli.command) {
        (_, Command::Experiment(_)) | (None, _) => {
            print!("{out}");
            Ok(())
        }
        (Some(path), _) => std::fs::write(path, out),
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn read_text(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_graph(cli: &Cli, path: &Path) -> CliResult<Graph> {
    let text = read_text(path)?;
    let g = match cli.format {
        Some(GraphFormat::Graph6) => parse_graph6(text.trim().as_bytes()),
        Some(GraphFormat::Edges) => parse_edge_list(&text),
        None => parse_graph_auto(&text),
    };
    g.map_err(|e| format!("{}: {e}", path.display()).into())
}

fn read_partition(path: &Path, n: usize) -> CliResult<Partition> {
    parse_partition(&read_text(path)?, n).map_err(|e| format!("{}: {e}", path.display()).into())
}

/// `x` with 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn verdict(out: &mut String, holds: bool) -> Outcome {
    let _ = writeln!(out, "{holds}");
    if holds {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

fn run(cli: &Cli, out: &mut String) -> CliResult<Outcome> {
    let tol = cli.tol;
    match &cli.command {
        Command::Perron { graph } => {
            let g = read_graph(cli, graph)?;
            let pd = perron(&g, DEFAULT_PERRON_TOL)?;
            let _ = writeln!(out, "{}", sig12(pd.lambda1));
            for x in &pd.nu {
                let _ = writeln!(out, "{}", sig12(*x));
            }
            Ok(Outcome::Holds)
        }
        Command::Check { graph, partition, mode } => {
            let g = read_graph(cli, graph)?;
            let p = read_partition(partition, g.n())?;
            let holds = match mode {
                CheckMode::Equitable => is_equitable(&g, &p),
                _ => {
                    let nu = perron(&g, DEFAULT_PERRON_TOL)?.nu;
                    match mode {
                        CheckMode::Weight => is_weight_equitable(&g, &nu, &p, tol)?,
                        CheckMode::Commute => is_weight_equitable_commute(&g, &nu, &p, tol)?,
                        _ => is_b_invariant(&g, &nu, &p, tol)?,
                    }
                }
            };
            Ok(verdict(out, holds))
        }
        Command::Condense { graph, partition } => {
            let g = read_graph(cli, graph)?;
            let p = read_partition(partition, g.n())?;
            let nu = perron(&g, DEFAULT_PERRON_TOL)?.nu;
            let view = WeightedView::build(&g, &nu, &p)?;
            let table = IntersectionTable::compute(&g, &nu, &p, tol)?;
            out.push_str("B_bar\n");
            for i in 0..view.num_cells() {
                let row: Vec<String> = (0..view.num_cells()).map(|j| sig12(view.b_bar[(i, j)])).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
            out.push_str("D\n");
            let d: Vec<String> = view.cell_norms.iter().map(|&x| sig12(x)).collect();
            let _ = writeln!(out, "{}", d.join(" "));
            let _ = writeln!(out, "weight-equitable {}", table.is_we);
            Ok(Outcome::Holds)
        }
        Command::Join { first, second } | Command::Meet { first, second } => {
            let p = parse_partition_infer(&read_text(first)?)?;
            let q = parse_partition_infer(&read_text(second)?)?;
            let r = match &cli.command {
                Command::Join { .. } => p.join(&q)?,
                _ => p.meet(&q)?,
            };
            out.push_str(&format_partition(&r));
            Ok(Outcome::Holds)
        }
        Command::Cotree { graph } => {
            let t = Cotree::from_graph(&read_graph(cli, graph)?)?;
            let _ = writeln!(out, "{t}");
            Ok(Outcome::Holds)
        }
        Command::Homog2 { graph } => {
            let g = read_graph(cli, graph)?;
            if !g.is_connected() {
                return Err(Error::NotConnected.into());
            }
            match two_homogeneous_partition(&g)? {
                Some(p) => {
                    out.push_str(&format_partition(&p));
                    Ok(Outcome::Holds)
                }
                None => {
                    out.push_str("none\n");
                    Ok(Outcome::Fails)
                }
            }
        }
        Command::Chomog { graph, c } => {
            let t = Cotree::from_graph(&read_graph(cli, graph)?)?;
            Ok(verdict(out, c_homogeneous_search(&t, *c)?))
        }
        Command::Joint { g, h, partition } => {
            let (g, h) = (read_graph(cli, g)?, read_graph(cli, h)?);
            let ctx = JointContext::new(&g, &h, tol)?;
            let p = read_partition(partition, ctx.union.n())?;
            joint_report(&ctx, &p, tol, out)
        }
        Command::Oracle(cmd) => oracle(cli, cmd, out),
        Command::Experiment(args) => experiment(cli, args, out),
    }
}

fn joint_report(ctx: &JointContext, p: &Partition, tol: f64, out: &mut String) -> CliResult<Outcome> {
    let balanced = ctx.is_balanced(p)?;
    let we = is_weight_equitable(&ctx.union, ctx.nu(), p, tol)?;
    let ratio = match ctx.ratio_check(p, tol) {
        Ok(b) => b.to_string(),
        Err(e) => format!("n/a ({e})"),
    };
    let witness = match ctx.fractional_isomorphism_witness(p, tol) {
        Ok(_) => "ok".to_string(),
        Err(e) => format!("none ({e})"),
    };
    let _ = writeln!(out, "{:<18}{}", "lambda", sig12(ctx.lambda()));
    let _ = writeln!(out, "{:<18}{balanced}", "balanced");
    let _ = writeln!(out, "{:<18}{we}", "weight-equitable");
    let _ = writeln!(out, "{:<18}{ratio}", "ratio law");
    let _ = writeln!(out, "{:<18}{witness}", "witness");
    Ok(if balanced && we && ratio == "true" {
        Outcome::Holds
    } else {
        Outcome::Fails
    })
}

fn oracle(cli: &Cli, cmd: &OracleCommand, out: &mut String) -> CliResult<Outcome> {
    match cmd {
        OracleCommand::WeEnum { graph, cells } => {
            let g = read_graph(cli, graph)?;
            let found = enumerate_weight_equitable(&g, cli.tol, &EnumerationBudget::partitions())?;
            let chosen: Vec<String> = found
                .iter()
                .filter(|p| cells.is_none_or(|m| p.num_cells() == m))
                .map(format_partition)
                .collect();
            out.push_str(&chosen.join("\n"));
            Ok(Outcome::Holds)
        }
        OracleCommand::Aut { graph } => {
            let g = read_graph(cli, graph)?;
            for a in all_automorphisms(&g, &EnumerationBudget::automorphisms())? {
                let _ = writeln!(out, "{a}");
            }
            Ok(Outcome::Holds)
        }
        OracleCommand::FpfInvolution { graph } => {
            let g = read_graph(cli, graph)?;
            match find_fixed_point_free_involution(&g, &EnumerationBudget::involutions())? {
                Some(gamma) => {
                    let _ = writeln!(out, "{gamma}");
                    Ok(Outcome::Holds)
                }
                None => {
                    out.push_str("none\n");
                    Ok(Outcome::Fails)
                }
            }
        }
        OracleCommand::MaxRefine { graph, partition } => {
            let g = read_graph(cli, graph)?;
            let p = read_partition(partition, g.n())?;
            let r = max_we_refinement(&g, &p, cli.tol, &EnumerationBudget::partitions())?;
            out.push_str(&format_partition(&r));
            Ok(Outcome::Holds)
        }
    }
}

fn experiment(cli: &Cli, args: &ExperimentArgs, out: &mut String) -> CliResult<Outcome> {
    let source = match (args.enumerate, args.random, args.n) {
        (Some(n), None, _) => Source::Enumerate { n },
        (None, Some(count), Some(n)) => Source::Random { count, n },
        _ => return Err("use either --enumerate N or --random COUNT --n N".into()),
    };
    let config = ExperimentConfig {
        seed: cli.seed,
        tol: cli.tol,
        spot_check_rate: args.spot_check_rate,
        ..ExperimentConfig::default()
    };
    let result = run_experiment(source, &config)?;
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join("records.csv"), result.records_csv())?;
    std::fs::write(dir.join("hist_k.csv"), result.histogram_csv())?;
    std::fs::write(dir.join("meta.txt"), result.meta())?;
    out.push_str(&result.meta());
    let mode = result.mode(wepart_core::experiment::PARTITIONS_PER_GRAPH);
    let _ = writeln!(out, "k10_mode: {}", mode.map_or("n/a".to_string(), |m| m.to_string()));
    Ok(if result.spot_check_failures == 0 {
        Outcome::Holds
    } else {
        Outcome::Fails
    })
}
