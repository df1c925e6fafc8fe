//! Oracle harness: every efficient algorithm against its brute-force twin.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rep2d::grid::{binary_grid, random_grid};
use rep2d::oracle::{
    brute_distinct_quartics, brute_distinct_tandems, brute_max_white_rectangles, brute_prq_occurrences,
    brute_runs2d, naive_union, Content,
};
use rep2d::quartics::{
    build_components, distinct_quartics_from_groups, distinct_tandems, max_white_rectangles, prq_families,
    prq_from_union, union_report, MwrVariant, RectFamily, Staircase,
};
use rep2d::{enumerate_runs2d, Dbf2D, Grid, Rect};

use crate::Status;

/// Largest grid side the oracles are allowed to run on.
pub const MAX_SIDE: usize = 10;
const LOGGED_PER_CHECK: usize = 5;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Also sweep all 2^16 binary 4x4 grids.
    #[arg(long = "exhaustive-binary-4x4")]
    pub exhaustive: bool,
    /// Largest side of the random grids.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Plants a bug, to check that the harness notices.
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Drop one reported point from the rectangle-union sweep.
    Sweep,
}

const CHECKS: [&str; 6] = [
    "runs2d",
    "prq_occurrences",
    "distinct_quartics",
    "distinct_tandems",
    "union_report",
    "max_white_rectangles",
];

#[derive(Default)]
struct Tally {
    cases: [usize; 6],
    failures: [usize; 6],
}

impl Tally {
    fn record(&mut self, check: usize, ok: bool, reproducer: impl FnOnce() -> String) {
        self.cases[check] += 1;
        if !ok {
            self.failures[check] += 1;
            if self.failures[check] <= LOGGED_PER_CHECK {
                eprintln!("discrepancy in {}; reproducer:\n{}", CHECKS[check], reproducer());
            }
        }
    }
}

fn union_with_fault(families: &[RectFamily], m: usize, n: usize, fault: Option<Fault>) -> Vec<Vec<(usize, usize)>> {
    let mut points = union_report(families, m, n).expect("families lie inside the grid");
    if fault == Some(Fault::Sweep) {
        if let Some(pts) = points.iter_mut().find(|p| !p.is_empty()) {
            pts.pop();
        }
    }
    points
}

fn contents<I: Iterator<Item = Rect>>(g: &Grid, rects: I) -> BTreeSet<Content> {
    rects.map(|r| (r.height(), r.width(), g.subarray(&r))).collect()
}

fn check_grid(g: &Grid, fault: Option<Fault>, tally: &mut Tally) {
    let d = Dbf2D::build(g);
    let repro = || g.to_text();

    let runs = enumerate_runs2d(&d);
    tally.record(0, runs == brute_runs2d(g), repro);

    let families = prq_families(&runs);
    let points = union_with_fault(&families, g.rows(), g.cols(), fault);
    let rects: Vec<Vec<Rect>> = families.iter().map(|f| f.rects.clone()).collect();
    tally.record(4, points == naive_union(&rects), repro);

    let occs = prq_from_union(&families, &points);
    tally.record(1, occs == brute_prq_occurrences(g), repro);

    let qs = distinct_quartics_from_groups(&d, &build_components(&d, &occs));
    let got = contents(g, qs.iter().map(|q| q.rect()));
    tally.record(2, got.len() == qs.len() && got == brute_distinct_quartics(g), repro);

    let ts = distinct_tandems(&d);
    let got = contents(g, ts.iter().map(|t| t.rect()));
    tally.record(3, got.len() == ts.len() && got == brute_distinct_tandems(g), repro);
}

fn check_union(rng: &mut ChaCha8Rng, fault: Option<Fault>, tally: &mut Tally) {
    let (m, n) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
    let families: Vec<RectFamily> = (0..rng.gen_range(1..=3))
        .map(|p| RectFamily {
            p: p + 1,
            q: 1,
            rects: (0..rng.gen_range(1..=6))
                .map(|_| {
                    let (a, b) = (rng.gen_range(1..=m), rng.gen_range(1..=m));
                    let (c, d) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                    Rect::new(a.min(b), a.max(b), c.min(d), c.max(d))
                })
                .collect(),
        })
        .collect();
    let rects: Vec<Vec<Rect>> = families.iter().map(|f| f.rects.clone()).collect();
    let ok = union_with_fault(&families, m, n, fault) == naive_union(&rects);
    tally.record(4, ok, || {
        let mut s = format!("{m}x{n} lattice\n");
        for (t, f) in rects.iter().enumerate() {
            let list: Vec<String> = f.iter().map(Rect::to_string).collect();
            let _ = writeln!(s, "family {t}: {}", list.join(" "));
        }
        s
    });
}

fn check_staircase(rng: &mut ChaCha8Rng, tally: &mut Tally) {
    let m = rng.gen_range(1..=12);
    let w: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=20)).collect();
    let st = Staircase::new(&w).expect("positive widths");
    let oracle = brute_max_white_rectangles(&w);
    let ok = [MwrVariant::Nsv, MwrVariant::Stack]
        .iter()
        .all(|&v| max_white_rectangles(&st, v) == oracle);
    tally.record(5, ok, || format!("whites {w:?}"));
}

pub fn run(args: &VerifyArgs) -> Result<Status> {
    if args.max_n == 0 || args.max_n > MAX_SIDE {
        bail!("--max-n must be between 1 and {MAX_SIDE}");
    }
    if args.sigma == 0 || args.sigma > rep2d::grid::ALPHABET.len() {
        bail!("--sigma must be between 1 and {}", rep2d::grid::ALPHABET.len());
    }
    let mut tally = Tally::default();
    if args.exhaustive {
        for bits in 0u64..1 << 16 {
            check_grid(&binary_grid(4, 4, bits), args.inject_fault, &mut tally);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for _ in 0..args.trials {
        let (m, n) = (rng.gen_range(1..=args.max_n), rng.gen_range(1..=args.max_n));
        let seed = rng.gen();
        check_grid(&random_grid(m, n, args.sigma, seed), args.inject_fault, &mut tally);
        check_union(&mut rng, args.inject_fault, &mut tally);
        check_staircase(&mut rng, &mut tally);
    }
    for (t, name) in CHECKS.iter().enumerate() {
        println!("{name}: {} cases, {} discrepancies", tally.cases[t], tally.failures[t]);
    }
    let total: usize = tally.failures.iter().sum();
    Ok(if total == 0 { Status::Ok } else { Status::Discrepancy })
}
