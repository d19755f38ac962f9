use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    index_labels, verify_with, CheckId, Corruption, Hyperspaces, Status, VerificationReport,
    VerifyOptions,
};
use crate::error::{Error, Result};
use crate::finspace::{enumerate_topologies, FinTopSpace};
use crate::hyperspace::is_connected_hyper;
use crate::limitsets::CarrierKind;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub verify: VerifyOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub check_id: CheckId,
    pub pass: usize,
    pub trivially_true: usize,
    pub proxy: usize,
    pub fail: usize,
    /// Canonical key of the first failing space in enumeration order.
    pub first_counterexample: Option<String>,
}

/// Something the sweep observed that is not asserted by any check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub description: String,
    pub count: usize,
    pub first: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n: usize,
    pub spaces: usize,
    /// Spaces on which at least one check failed.
    pub failures: usize,
    pub checks: Vec<CheckTally>,
    pub findings: Vec<Finding>,
}

impl SweepReport {
    pub fn summary(&self) -> String {
        format!("{} spaces, {} failures", self.spaces, self.failures)
    }
}

struct SpaceOutcome {
    key: String,
    statuses: Vec<Status>,
    fell_disconnected: bool,
}

fn examine(space: FinTopSpace, opts: &VerifyOptions) -> Result<SpaceOutcome> {
    let key = space.canonical_key();
    let connected = space.is_connected();
    let labels = index_labels(space.len());
    let ctx = Hyperspaces::new(space);
    let report = verify_with(&ctx, labels, opts)?;
    Ok(SpaceOutcome {
        key,
        statuses: report.results.iter().map(|r| r.status).collect(),
        fell_disconnected: connected && !is_connected_hyper(ctx.strong(CarrierKind::L)),
    })
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::BudgetExceeded(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Verify every topology on `n` labeled points. Results are aggregated in
/// enumeration order, so the report does not depend on the worker count.
pub fn sweep(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let spaces = enumerate_topologies(n)?;
    let count = spaces.len();
    let outcomes: Vec<Result<SpaceOutcome>> = with_pool(opts.jobs, || {
        spaces
            .into_par_iter()
            .map(|s| examine(s, &opts.verify))
            .collect()
    })?;

    let mut checks: Vec<CheckTally> = CheckId::ALL
        .iter()
        .map(|&check_id| CheckTally {
            check_id,
            pass: 0,
            trivially_true: 0,
            proxy: 0,
            fail: 0,
            first_counterexample: None,
        })
        .collect();
    let mut failures = 0;
    let mut fell = Finding {
        description: "connected spaces with (L, tau_s) disconnected".to_string(),
        count: 0,
        first: None,
    };
    for outcome in outcomes {
        let o = outcome?;
        if o.statuses.iter().any(|s| s.is_fail()) {
            failures += 1;
        }
        for (tally, status) in checks.iter_mut().zip(&o.statuses) {
            match status {
                Status::Pass => tally.pass += 1,
                Status::TriviallyTrue => tally.trivially_true += 1,
                Status::Proxy => tally.proxy += 1,
                Status::Fail => {
                    tally.fail += 1;
                    tally
                        .first_counterexample
                        .get_or_insert_with(|| o.key.clone());
                }
            }
        }
        if o.fell_disconnected {
            fell.count += 1;
            fell.first.get_or_insert(o.key);
        }
    }
    Ok(SweepReport {
        n,
        spaces: count,
        failures,
        checks,
        findings: vec![fell],
    })
}

#[derive(Clone, Debug)]
pub struct CorruptionOutcome {
    pub corruption: Corruption,
    pub context: Hyperspaces,
    pub report: VerificationReport,
}

impl CorruptionOutcome {
    pub fn failed_checks(&self) -> Vec<CheckId> {
        self.report.failures().map(|r| r.check_id).collect()
    }
}

/// Run the full suite on every candidate corruption of `space`.
pub fn explore_corruptions(
    space: &FinTopSpace,
    opts: &VerifyOptions,
) -> Result<Vec<CorruptionOutcome>> {
    let honest = Hyperspaces::new(space.clone());
    honest
        .corruption_candidates()
        .into_par_iter()
        .map(|corruption| {
            let context = Hyperspaces::corrupted(space.clone(), &corruption);
            let report = verify_with(&context, index_labels(space.len()), opts)?;
            Ok(CorruptionOutcome {
                corruption,
                context,
                report,
            })
        })
        .collect()
}
