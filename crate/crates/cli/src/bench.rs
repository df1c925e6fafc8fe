//! Scaling table over generated grids, as CSV.

use anyhow::{bail, Context, Result};
use clap::Args;
use serde::Serialize;

use rep2d::{analyze, AnalyzeOptions, Exec, GenParams, GeneratorKind, Sections};

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Grid sides, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Generator kinds, comma-separated (unary, rowladder, random).
    #[arg(long, value_delimiter = ',', default_value = "random")]
    pub kinds: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    #[arg(long)]
    pub parallel: bool,
    #[arg(long, short)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub kind: String,
    pub n: usize,
    pub runs2d: usize,
    pub prq_occurrences: usize,
    pub distinct_quartics: usize,
    pub distinct_tandems: usize,
    /// `count / (n^2 log2^2 n)`, empty for `n < 2`.
    pub runs2d_normalized: Option<f64>,
    pub quartics_normalized: Option<f64>,
    pub dbf_ms: f64,
    pub runs2d_ms: f64,
    pub prq_ms: f64,
    pub components_ms: f64,
    pub quartics_ms: f64,
    pub tandems_ms: f64,
}

fn normalized(count: usize, n: usize) -> Option<f64> {
    (n >= 2).then(|| {
        let lg = (n as f64).log2();
        count as f64 / ((n * n) as f64 * lg * lg)
    })
}

pub fn rows(args: &BenchArgs) -> Result<Vec<Row>> {
    let opts = AnalyzeOptions {
        sections: Sections::all(),
        listings: false,
        timings: true,
        exec: Exec::from_flag(args.parallel),
    };
    let mut out = Vec::new();
    for kind_name in &args.kinds {
        let kind: GeneratorKind = kind_name.parse()?;
        if kind == GeneratorKind::Fig3 {
            bail!("fig3 has a fixed size and cannot be benchmarked over --sizes");
        }
        for &n in &args.sizes {
            let params = GenParams {
                m: Some(n),
                n: Some(n),
                sigma: (kind == GeneratorKind::Random).then_some(args.sigma),
                seed: (kind == GeneratorKind::Random).then_some(args.seed),
            };
            let grid = rep2d::generate(kind, &params).with_context(|| format!("generating {kind} of side {n}"))?;
            let report = analyze(&grid, &opts);
            let c = report.counts;
            let t = report.timings_ms.unwrap_or_default();
            let ms = |phase: &str| (t.get(phase).copied().unwrap_or(0.0) * 1e3).round() / 1e3;
            let runs = c.runs2d.unwrap_or(0);
            let quartics = c.distinct_quartics.unwrap_or(0);
            out.push(Row {
                kind: kind.to_string(),
                n,
                runs2d: runs,
                prq_occurrences: c.prq_occurrences.unwrap_or(0),
                distinct_quartics: quartics,
                distinct_tandems: c.distinct_tandems.unwrap_or(0),
                runs2d_normalized: normalized(runs, n),
                quartics_normalized: normalized(quartics, n),
                dbf_ms: ms("dbf"),
                runs2d_ms: ms("runs2d"),
                prq_ms: ms("prq"),
                components_ms: ms("components"),
                quartics_ms: ms("quartics"),
                tandems_ms: ms("tandems"),
            });
        }
    }
    Ok(out)
}

pub fn run(args: &BenchArgs) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows(args)? {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().context("flushing CSV")?;
    crate::write_output(args.output.as_deref(), &bytes)
}
