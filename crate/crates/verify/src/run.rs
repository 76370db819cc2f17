//! Suite execution: flatten matching claims into an instance list, run
//! them (in parallel when the feature allows), and summarize.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::registry::{evaluate, EvalCtx, Instance, Registry};
use crate::report::{ClaimReport, Verdict};
use pfrob_core::DEFAULT_MAX_CELLS;

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// Claim-id prefix; None runs everything.
    pub filter: Option<String>,
    /// Record engine values for skipped instances.
    pub probe: bool,
    pub max_cells: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            filter: None,
            probe: false,
            max_cells: DEFAULT_MAX_CELLS,
        }
    }
}

impl RunOptions {
    pub fn with_filter(filter: &str) -> Self {
        Self {
            filter: Some(filter.to_string()),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

impl Summary {
    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.skipped
    }

    pub fn line(&self) -> String {
        format!(
            "pass/fail/skip = {}/{}/{}",
            self.pass, self.fail, self.skipped
        )
    }

    fn tally(reports: &[ClaimReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

fn work_list<'r>(registry: &'r Registry, opts: &RunOptions) -> Vec<(&'r str, &'r Instance)> {
    registry
        .matching(opts.filter.as_deref())
        .into_iter()
        .flat_map(|c| c.instances.iter().map(move |i| (c.id, i)))
        .collect()
}

/// Single-threaded run; reports come out in (claim id, instance) order.
pub fn run_suite_seq(registry: &Registry, opts: &RunOptions) -> (Vec<ClaimReport>, Summary) {
    let ctx = EvalCtx {
        probe: opts.probe,
        max_cells: opts.max_cells,
    };
    let reports: Vec<ClaimReport> = work_list(registry, opts)
        .into_iter()
        .map(|(id, inst)| evaluate(id, inst, &ctx))
        .collect();
    let summary = Summary::tally(&reports);
    (reports, summary)
}

/// Parallel run over rayon; instance order in the output is identical to
/// the sequential run.
#[cfg(feature = "parallel")]
pub fn run_suite(registry: &Registry, opts: &RunOptions) -> (Vec<ClaimReport>, Summary) {
    let ctx = EvalCtx {
        probe: opts.probe,
        max_cells: opts.max_cells,
    };
    let reports: Vec<ClaimReport> = work_list(registry, opts)
        .into_par_iter()
        .map(|(id, inst)| evaluate(id, inst, &ctx))
        .collect();
    let summary = Summary::tally(&reports);
    (reports, summary)
}

#[cfg(not(feature = "parallel"))]
pub fn run_suite(registry: &Registry, opts: &RunOptions) -> (Vec<ClaimReport>, Summary) {
    run_suite_seq(registry, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_filter_match_is_an_empty_summary() {
        let registry = Registry::standard();
        let (reports, summary) = run_suite(&registry, &RunOptions::with_filter("nosuch"));
        assert!(reports.is_empty());
        assert_eq!(summary, Summary::default());
        assert_eq!(summary.line(), "pass/fail/skip = 0/0/0");
    }

    #[test]
    fn prop1_has_six_passing_instances() {
        let registry = Registry::standard();
        let (reports, summary) = run_suite(&registry, &RunOptions::with_filter("prop1"));
        assert_eq!(reports.len(), 6);
        assert_eq!(summary.pass, 6);
        assert_eq!(summary.fail, 0);
    }
}
