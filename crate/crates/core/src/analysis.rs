//! End-to-end analysis of one grid, with optional listings and timings.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::dbf::Dbf2D;
use crate::grid::Grid;
use crate::par::Exec;
use crate::quartics::{
    build_components, distinct_quartics_from_groups, distinct_tandems_with, prq_occurrences_with, Classification,
    DistinctQuartic, QuarticOcc, Tandem,
};
use crate::runs2d::{enumerate_runs2d_with, Run2D};

/// Which parts of the repetition structure to compute.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Sections {
    pub runs2d: bool,
    /// Occurrences of primitively rooted quartics.
    pub prq: bool,
    pub quartics: bool,
    pub tandems: bool,
}

impl Sections {
    pub fn all() -> Self {
        Sections {
            runs2d: true,
            prq: true,
            quartics: true,
            tandems: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub sections: Sections,
    pub listings: bool,
    pub timings: bool,
    pub exec: Exec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runs2d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prq_occurrences: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_prq: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_quartics: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thin_quartics: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thick_quartics: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_tandems: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Listings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runs2d: Option<Vec<Run2D>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prq_occurrences: Option<Vec<QuarticOcc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_quartics: Option<Vec<DistinctQuartic>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_tandems: Option<Vec<Tandem>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub rows: usize,
    pub cols: usize,
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub listings: Option<Listings>,
    /// Wall-clock milliseconds per phase.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

struct Clock {
    on: bool,
    phases: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.on {
            *self.phases.entry(phase.to_string()).or_default() += start.elapsed().as_secs_f64() * 1e3;
        }
        out
    }
}

pub fn analyze(grid: &Grid, opts: &AnalyzeOptions) -> AnalysisReport {
    let s = opts.sections;
    let mut clock = Clock {
        on: opts.timings,
        phases: BTreeMap::new(),
    };
    let mut counts = Counts::default();
    let mut listings = Listings::default();

    let d = clock.time("dbf", || Dbf2D::build(grid));
    let need_runs = s.runs2d || s.prq || s.quartics;
    let runs = if need_runs {
        clock.time("runs2d", || enumerate_runs2d_with(&d, opts.exec))
    } else {
        Vec::new()
    };
    if s.runs2d {
        counts.runs2d = Some(runs.len());
    }
    if s.prq || s.quartics {
        let occs = clock.time("prq", || prq_occurrences_with(&d, &runs, opts.exec));
        let groups = clock.time("components", || build_components(&d, &occs));
        counts.prq_occurrences = Some(occs.len());
        counts.distinct_prq = Some(groups.len());
        if s.quartics {
            let qs = clock.time("quartics", || distinct_quartics_from_groups(&d, &groups));
            let class = |c| Some(qs.iter().filter(|q| q.class == c).count());
            counts.distinct_quartics = Some(qs.len());
            counts.thin_quartics = class(Classification::Thin);
            counts.thick_quartics = class(Classification::Thick);
            if opts.listings {
                listings.distinct_quartics = Some(qs);
            }
        }
        if opts.listings {
            listings.prq_occurrences = Some(occs);
        }
    }
    if s.runs2d && opts.listings {
        listings.runs2d = Some(runs);
    }
    if s.tandems {
        let ts = clock.time("tandems", || distinct_tandems_with(&d, opts.exec));
        counts.distinct_tandems = Some(ts.len());
        if opts.listings {
            listings.distinct_tandems = Some(ts);
        }
    }

    AnalysisReport {
        rows: grid.rows(),
        cols: grid.cols(),
        counts,
        listings: opts.listings.then_some(listings),
        timings_ms: opts.timings.then_some(clock.phases),
    }
}
