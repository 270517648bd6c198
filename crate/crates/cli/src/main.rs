use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twolevel_cli::solve::Length;
use twolevel_cli::{
    generate_instance, parse_instance, parse_point_list, print_instance, render_svg, run_bench, solve_report,
    Algorithm, BenchConfig, Distribution, SolveOptions,
};
use twolevel_core::oracle::exact_two_level;
use twolevel_core::{Coord, Instance, SteinerSubroutine};

#[derive(Parser)]
#[command(name = "twolevel", version, about = "Two-level rectilinear Steiner tree solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sub {
    Rmst,
    /// Rectilinear MST followed by local Steiner point insertion.
    RmstSteinerize,
    Exact,
}

impl Sub {
    fn subroutine(self) -> SteinerSubroutine {
        match self {
            Sub::Rmst => SteinerSubroutine::rmst(),
            Sub::RmstSteinerize => SteinerSubroutine::rmst_steinerized(),
            Sub::Exact => SteinerSubroutine::exact(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file with one of the approximation algorithms.
    Solve {
        /// Instance file: `{"groups": [[[x, y], ...], ...]}`.
        file: PathBuf,
        /// simple, bbox-center, adjusted or small-top.
        #[arg(long, default_value = "adjusted")]
        algo: Algorithm,
        #[arg(long, value_enum, default_value = "rmst")]
        sub: Sub,
        /// Offset parameter of the adjusted strategy, as `p/q` or a decimal.
        #[arg(long)]
        beta: Option<Coord>,
        /// Forced connection points, `"x,y;x,y;..."`.
        #[arg(long)]
        connect: Option<String>,
        /// Also compute the exact optimum and the ratio.
        #[arg(long)]
        oracle: bool,
        /// Write a drawing of the solution.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Solve an instance file exactly (small instances only).
    Oracle {
        /// Instance file: `{"groups": [[[x, y], ...], ...]}`.
        file: PathBuf,
        /// Write a drawing of the solution.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Write a random instance file.
    Gen {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        per_group: usize,
        /// uniform or clustered.
        #[arg(long, default_value = "uniform")]
        dist: Distribution,
        #[arg(long, default_value_t = 100)]
        extent: u32,
        /// Output path; standard output if absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the adjusted solver on random instances of growing size.
    Bench {
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',')]
        ladder: Option<Vec<usize>>,
        #[arg(long, default_value_t = 100)]
        group_size: usize,
        #[arg(long, default_value = "uniform")]
        dist: Distribution,
        #[arg(long, default_value_t = 1_000_000)]
        extent: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "rmst")]
        sub: Sub,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long)]
        json: bool,
    },
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = parse_instance(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(parsed.instance)
}

fn write_svg(path: &Path, svg: &str) -> Result<()> {
    std::fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}

#[derive(Serialize)]
struct OracleOutput {
    optimum: Length,
    top_length: Length,
    subtree_lengths: Vec<Length>,
    connection_points: Vec<[String; 2]>,
    wall_time_ms: f64,
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve { file, algo, sub, beta, connect, oracle, svg, json } => {
            let instance = read_instance(&file)?;
            if let Some(b) = &beta {
                if b.is_negative() || *b > Coord::one() {
                    bail!("--beta must lie in [0, 1], got {b}");
                }
            }
            let mut opts = SolveOptions::new(algo, sub.subroutine());
            opts.beta = beta;
            opts.oracle = oracle;
            if let Some(c) = connect {
                opts.connect = Some(parse_point_list(&c).map_err(anyhow::Error::msg).context("parsing --connect")?);
            }
            let (tree, report) = solve_report(&instance, &opts)?;
            if let Some(path) = svg {
                write_svg(&path, &render_svg(&instance, &tree))?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
        }
        Command::Oracle { file, svg, json } => {
            let instance = read_instance(&file)?;
            let start = Instant::now();
            let (tree, opt) = exact_two_level(&instance)?;
            let out = OracleOutput {
                optimum: Length::from(&opt),
                top_length: Length::from(&tree.top_length()),
                subtree_lengths: tree.subtree_lengths().iter().map(Length::from).collect(),
                connection_points: tree
                    .connection_points()
                    .iter()
                    .map(|p| [p.x.to_string(), p.y.to_string()])
                    .collect(),
                wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            };
            if let Some(path) = svg {
                write_svg(&path, &render_svg(&instance, &tree))?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                println!("optimum: {}", out.optimum);
                println!("top length: {}", out.top_length);
                for (i, l) in out.subtree_lengths.iter().enumerate() {
                    println!("subtree {}: {l}", i + 1);
                }
            }
        }
        Command::Gen { seed, k, per_group, dist, extent, output } => {
            if k == 0 || per_group == 0 || extent == 0 {
                bail!("--k, --per-group and --extent must be positive");
            }
            let text = print_instance(&generate_instance(seed, k, per_group, dist, extent));
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Bench { ladder, group_size, dist, extent, seed, sub, repeats, json } => {
            let mut cfg = BenchConfig {
                group_size,
                distribution: dist,
                extent,
                seed,
                sub: sub.subroutine(),
                repeats,
                ..BenchConfig::default()
            };
            if let Some(l) = ladder {
                cfg.ladder = l;
            }
            if cfg.ladder.contains(&0) || group_size == 0 {
                bail!("ladder sizes and --group-size must be positive");
            }
            let report = run_bench(&cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("{report}");
            }
        }
    }
    Ok(())
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}
