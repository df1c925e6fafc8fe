//! Command-line front end: analyze, generate, verify, bench.

mod bench;
mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use rep2d::{analyze, parse_grid, AnalyzeOptions, Exec, GenParams, GeneratorKind, Sections};

pub use bench::BenchArgs;
pub use verify::{Fault, VerifyArgs};

#[derive(Debug, Parser)]
#[command(name = "rep2d", version, about = "Repetitions in 2D strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute runs, quartics and tandems of a grid file and print JSON.
    Analyze(AnalyzeArgs),
    /// Write a fixture grid in the text format.
    Generate(GenerateArgs),
    /// Compare the efficient algorithms with brute force.
    Verify(VerifyArgs),
    /// Time the pipeline over generated grids and write CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Grid file ("-" for standard input).
    pub input: PathBuf,
    /// Comma-separated sections: runs2d, prq, quartics, tandems, all.
    #[arg(long, default_value = "all")]
    pub report: String,
    /// Include full listings, not just counts.
    #[arg(long)]
    pub listings: bool,
    /// Include wall-clock milliseconds per phase.
    #[arg(long)]
    pub timings: bool,
    /// Run independent tasks on the thread pool.
    #[arg(long)]
    pub parallel: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// unary, fig3, rowladder or random.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub sigma: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Process exit status on success paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Discrepancy,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Discrepancy => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Analyze(a) => run_analyze(&a).map(|_| Status::Ok),
        Command::Generate(g) => run_generate(&g).map(|_| Status::Ok),
        Command::Verify(v) => verify::run(&v),
        Command::Bench(b) => bench::run(&b).map(|_| Status::Ok),
    }
}

pub fn parse_sections(spec: &str) -> Result<Sections> {
    let mut s = Sections::default();
    for name in spec.split(',').map(str::trim) {
        match name {
            "all" => s = Sections::all(),
            "runs2d" | "runs" => s.runs2d = true,
            "prq" => s.prq = true,
            "quartics" => s.quartics = true,
            "tandems" => s.tandems = true,
            other => bail!("unknown report `{other}` (expected runs2d, prq, quartics, tandems, all)"),
        }
    }
    Ok(s)
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

pub(crate) fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn analyze_json(text: &str, args: &AnalyzeArgs) -> Result<String> {
    let sections = parse_sections(&args.report)?;
    let grid = parse_grid(text)?;
    let opts = AnalyzeOptions {
        sections,
        listings: args.listings,
        timings: args.timings,
        exec: Exec::from_flag(args.parallel),
    };
    let report = analyze(&grid, &opts);
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    Ok(json)
}

fn run_analyze(args: &AnalyzeArgs) -> Result<()> {
    let text = read_input(&args.input)?;
    let json = analyze_json(&text, args).with_context(|| format!("analyzing {}", args.input.display()))?;
    write_output(args.output.as_deref(), json.as_bytes())
}

fn run_generate(args: &GenerateArgs) -> Result<()> {
    let kind: GeneratorKind = args.kind.parse()?;
    let params = GenParams {
        m: args.m,
        n: args.n,
        sigma: args.sigma,
        seed: args.seed,
    };
    let grid = rep2d::generate(kind, &params)?;
    write_output(args.output.as_deref(), grid.to_text().as_bytes())
}
