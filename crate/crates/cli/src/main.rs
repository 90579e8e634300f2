//! `npc-audit`: load simplicial complexes, run curvature-certificate audits,
//! compute links, distances and minimal spanning disks, and generate the
//! standard fixture complexes.
//!
//! Exit codes: 0 when every requested check passes, 1 when at least one check
//! definitively fails (or a distance is unreachable / no disk is found),
//! 2 on input or usage errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use npc_core::generators::GeneratorSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exit semantics of a successfully executed command.
pub enum ExitStatus {
    Pass,
    Fail,
}

#[derive(Parser)]
#[command(
    name = "npc-audit",
    version,
    about = "Nonpositive-curvature audits for regular simplicial complexes",
    after_help = "The environment variable NPC_AUDIT_THREADS caps internal parallelism (0 = auto)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run certificate checks on a complex file and emit a report.
    ///
    /// With no check flags, runs the standard suite: flag, empty-gons 6,
    /// snpc, edge-links.
    Audit(AuditArgs),
    /// Print the combinatorial link of a simplex; optionally its metric
    /// codimension-2 link graph with girth and the 2π test.
    Link(LinkArgs),
    /// Find all minimal spanning disks for a tight loop.
    Disk(DiskArgs),
    /// Generate a fixture complex and write it in the canonical JSON format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Combinatorial distance between two vertices in the 1-skeleton.
    Distance(DistanceArgs),
}

#[derive(Args)]
struct AuditArgs {
    /// Complex file (JSON with a "facets" array).
    file: PathBuf,
    /// Check that the complex is flag.
    #[arg(long)]
    flag: bool,
    /// Scan for empty n-gons with n < K (default K = 6 when the flag is given bare).
    #[arg(long, value_name = "K", num_args = 0..=1, default_missing_value = "6")]
    empty_gons: Option<usize>,
    /// Check k-largeness for the given K.
    #[arg(long, value_name = "K")]
    k_large: Option<usize>,
    /// Check simplicial nonpositive curvature (every combinatorial link 6-large).
    #[arg(long)]
    snpc: bool,
    /// Run the 2π girth test on every codimension-2 metric link.
    #[arg(long)]
    edge_links: bool,
    /// Check that the complex is a full subcomplex of the given ambient complex.
    #[arg(long, value_name = "AMBIENT_FILE")]
    full: Option<PathBuf>,
    /// Tolerance for metric (2π) comparisons only; combinatorial checks are exact.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct LinkArgs {
    file: PathBuf,
    /// Simplex as comma-separated vertex ids, e.g. 0,1,2.
    #[arg(long, value_parser = parse_ids)]
    simplex: IdList,
    /// Also compute the weighted codimension-2 link graph and its girth.
    #[arg(long)]
    metric: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct DiskArgs {
    file: PathBuf,
    /// Tight loop as comma-separated vertex ids; the closing edge is implied.
    #[arg(long = "loop", value_parser = parse_ids)]
    loop_ids: IdList,
    /// Maximum number of interior vertices to try.
    #[arg(long, default_value_t = 3)]
    max_interior: usize,
    /// Maximum combinatorial area to try.
    #[arg(long, default_value_t = 12)]
    max_area: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Cycle C_n on vertices 0..n-1.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Single d-simplex on vertices 0..=d.
    Simplex {
        #[arg(long)]
        d: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Boundary of the octahedron.
    Octahedron {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cone over C_n: apex 0, cycle 1..=n.
    Wheel {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Join of a d-simplex with C_n.
    Join {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Join of an (n-2)-simplex with C_5: five n-simplices around a common face.
    Counterexample {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// k tetrahedra glued cyclically around the edge {0,1}.
    TetraFan {
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Clique complex of a seeded random graph.
    RandomFlag {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DistanceArgs {
    file: PathBuf,
    #[arg(long)]
    from: u32,
    #[arg(long)]
    to: u32,
}

#[derive(Debug, Clone)]
struct IdList(Vec<u32>);

fn parse_ids(s: &str) -> Result<IdList, String> {
    let ids = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad vertex id {part:?}: {e}"))
        })
        .collect::<Result<Vec<u32>, String>>()?;
    if ids.is_empty() {
        return Err("expected at least one vertex id".into());
    }
    Ok(IdList(ids))
}

fn configure_threads() {
    if let Ok(value) = std::env::var("NPC_AUDIT_THREADS") {
        match value.trim().parse::<usize>() {
            Ok(0) | Err(_) => {}
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Audit(args) => commands::cmd_audit(commands::AuditOptions {
            file: args.file,
            flag: args.flag,
            empty_gons: args.empty_gons,
            k_large: args.k_large,
            snpc: args.snpc,
            edge_links: args.edge_links,
            full: args.full,
            tol: args.tol,
            format: args.format,
        }),
        Command::Link(args) => commands::cmd_link(commands::LinkOptions {
            file: args.file,
            simplex: args.simplex.0,
            metric: args.metric,
            tol: args.tol,
            format: args.format,
        }),
        Command::Disk(args) => commands::cmd_disk(commands::DiskOptions {
            file: args.file,
            loop_ids: args.loop_ids.0,
            max_interior: args.max_interior,
            max_area: args.max_area,
            format: args.format,
        }),
        Command::Gen(gen) => {
            let (spec, output) = match gen {
                GenCommand::Cycle { n, output } => (GeneratorSpec::Cycle { n }, output),
                GenCommand::Simplex { d, output } => (GeneratorSpec::Simplex { d }, output),
                GenCommand::Octahedron { output } => (GeneratorSpec::Octahedron, output),
                GenCommand::Wheel { n, output } => (GeneratorSpec::Wheel { n }, output),
                GenCommand::Join { d, n, output } => (GeneratorSpec::Join { d, n }, output),
                GenCommand::Counterexample { n, output } => {
                    (GeneratorSpec::Counterexample { n }, output)
                }
                GenCommand::TetraFan { k, output } => (GeneratorSpec::TetraFan { k }, output),
                GenCommand::RandomFlag {
                    vertices,
                    p,
                    seed,
                    output,
                } => (GeneratorSpec::RandomFlag { vertices, p, seed }, output),
            };
            commands::cmd_gen(commands::GenOptions { spec, output })
        }
        Command::Distance(args) => commands::cmd_distance(commands::DistanceOptions {
            file: args.file,
            from: args.from,
            to: args.to,
        }),
    };
    match result {
        Ok(ExitStatus::Pass) => ExitCode::SUCCESS,
        Ok(ExitStatus::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
