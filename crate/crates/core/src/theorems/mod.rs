//! One named check per structural theorem about the hyperspaces, a driver
//! that runs them all on a space, and an enumeration sweep.
//!
//! Checks assert theorem statements by direct computation on the finite
//! hyperspaces. A failing check always carries a [`Witness`] that
//! [`confirm_witness`] re-evaluates through the public hyperspace operations.

mod checks;
mod context;
mod sweep;
mod witness;

pub use checks::{
    check_baire, check_closure_singleton, check_compactness_lemma, check_connectedness,
    check_cont_iff_maximal, check_conv_props, check_eta_closure_and_density,
    check_fell_compact_hausdorff, check_gdelta_ml, check_local_compactness, check_product_lemmas,
    check_separated_iff_maximal, check_separated_points_corollary, default_families, run_check,
};
pub use context::{Corruption, Hyperspaces};
pub use sweep::{
    explore_corruptions, sweep, CheckTally, CorruptionOutcome, Finding, SweepOptions, SweepReport,
};
pub use witness::confirm_witness;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::finspace::{FinTopSpace, PointSet};
use crate::hyperspace::Flavor;
use crate::limitsets::CarrierKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    #[serde(rename = "check_closure_singleton")]
    ClosureSingleton,
    #[serde(rename = "check_eta_closure_and_density")]
    EtaClosureAndDensity,
    #[serde(rename = "check_cont_iff_maximal")]
    ContIffMaximal,
    #[serde(rename = "check_separated_iff_maximal")]
    SeparatedIffMaximal,
    #[serde(rename = "check_connectedness")]
    Connectedness,
    #[serde(rename = "check_compactness_lemma")]
    CompactnessLemma,
    #[serde(rename = "check_local_compactness")]
    LocalCompactness,
    #[serde(rename = "check_baire")]
    Baire,
    #[serde(rename = "check_gdelta_ML")]
    GdeltaMl,
    #[serde(rename = "check_separated_points_corollary")]
    SeparatedPointsCorollary,
    #[serde(rename = "check_product_lemmas")]
    ProductLemmas,
    #[serde(rename = "check_fell_compact_hausdorff")]
    FellCompactHausdorff,
    #[serde(rename = "check_conv_props")]
    ConvProps,
}

impl CheckId {
    /// Every registered check, in report order.
    pub const ALL: [CheckId; 13] = [
        CheckId::ClosureSingleton,
        CheckId::EtaClosureAndDensity,
        CheckId::ContIffMaximal,
        CheckId::SeparatedIffMaximal,
        CheckId::Connectedness,
        CheckId::CompactnessLemma,
        CheckId::LocalCompactness,
        CheckId::Baire,
        CheckId::GdeltaMl,
        CheckId::SeparatedPointsCorollary,
        CheckId::ProductLemmas,
        CheckId::FellCompactHausdorff,
        CheckId::ConvProps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::ClosureSingleton => "check_closure_singleton",
            CheckId::EtaClosureAndDensity => "check_eta_closure_and_density",
            CheckId::ContIffMaximal => "check_cont_iff_maximal",
            CheckId::SeparatedIffMaximal => "check_separated_iff_maximal",
            CheckId::Connectedness => "check_connectedness",
            CheckId::CompactnessLemma => "check_compactness_lemma",
            CheckId::LocalCompactness => "check_local_compactness",
            CheckId::Baire => "check_baire",
            CheckId::GdeltaMl => "check_gdelta_ML",
            CheckId::SeparatedPointsCorollary => "check_separated_points_corollary",
            CheckId::ProductLemmas => "check_product_lemmas",
            CheckId::FellCompactHausdorff => "check_fell_compact_hausdorff",
            CheckId::ConvProps => "check_conv_props",
        }
    }

    /// Status reported when the check finds no violation.
    pub fn success_status(self) -> Status {
        match self {
            CheckId::CompactnessLemma | CheckId::LocalCompactness | CheckId::Baire => {
                Status::TriviallyTrue
            }
            CheckId::ConvProps => Status::Proxy,
            _ => Status::Pass,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    TriviallyTrue,
    Proxy,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::TriviallyTrue => "trivially_true",
            Status::Proxy => "proxy",
        }
    }

    pub fn is_fail(self) -> bool {
        self == Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        [
            Status::Pass,
            Status::Fail,
            Status::TriviallyTrue,
            Status::Proxy,
        ]
        .into_iter()
        .find(|st| st.name() == s)
        .ok_or_else(|| format!("unknown status {s:?}"))
    }
}

/// The specific statement a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// `cl_w{A} = {B ∈ F : B ⊆ A}` fails at `A`.
    ClosureOfSingleton,
    /// Two distinct closed sets with the same `τ_w`-closure.
    WeakT0,
    /// `A` is in exactly one of `cl_w η(X)` and `L`.
    EtaClosure,
    FprimeDense,
    LprimeDense,
    MlDense,
    /// `L` is not closed in `F` for the witness flavor.
    LClosed,
    /// `y ∈ N(x)` but `η(y) ∉ N_w(η(x))`.
    EtaContinuous,
    /// `η` is not injective, or not open onto its image, on a T0 space.
    EtaEmbedding,
    ContinuityIffMaximal,
    MlTopologiesAgree,
    SeparatedIffMaximal,
    /// A proper non-empty clopen part of `(L, τ_w)` over a connected space.
    Connectedness,
    CompactnessLemma,
    /// No compact sandwich between a point and a basic neighbourhood.
    LocalCompactness,
    /// A basic neighbourhood that is not open and compact.
    OpenCompactBase,
    Baire,
    /// Minimal neighbourhoods that are not reflexive and transitive.
    Representation,
    MlSubsetOfL,
    MlOpenInL,
    SeparatedPointsIdentity,
    SeparatedPointsDense,
    SeparatedPointsOpen,
    InclusionClosed,
    SliceOpen,
    FellHausdorff,
    FellIffConv1,
    FellIffPrimitive,
}

impl Claim {
    pub fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default()
    }
}

/// Concrete objects exhibiting a violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Set(PointSet),
    Pair(PointSet, PointSet),
    Sets(Vec<PointSet>),
    /// Two points of the base space.
    Points(usize, usize),
    /// A closed set together with a family of opens it meets.
    Hit {
        at: PointSet,
        family: Vec<PointSet>,
    },
    /// A subset of a carrier product.
    Relation(Vec<(PointSet, PointSet)>),
    Sequence {
        preperiod: Vec<PointSet>,
        cycle: Vec<PointSet>,
        target: PointSet,
    },
}

fn render_sets(sets: &[PointSet], labels: &[String]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.render(labels)).collect();
    format!("[{}]", parts.join(","))
}

fn point_label(x: usize, labels: &[String]) -> String {
    labels.get(x).cloned().unwrap_or_else(|| x.to_string())
}

impl Evidence {
    /// Text form using point labels.
    pub fn render(&self, labels: &[String]) -> String {
        match self {
            Evidence::Set(a) => a.render(labels),
            Evidence::Pair(a, b) => format!("({}, {})", a.render(labels), b.render(labels)),
            Evidence::Sets(s) => render_sets(s, labels),
            Evidence::Points(x, y) => {
                format!("({}, {})", point_label(*x, labels), point_label(*y, labels))
            }
            Evidence::Hit { at, family } => {
                format!(
                    "{} meeting {}",
                    at.render(labels),
                    render_sets(family, labels)
                )
            }
            Evidence::Relation(pairs) => {
                let parts: Vec<String> = pairs
                    .iter()
                    .map(|(a, b)| format!("({},{})", a.render(labels), b.render(labels)))
                    .collect();
                format!("[{}]", parts.join(","))
            }
            Evidence::Sequence {
                preperiod,
                cycle,
                target,
            } => format!(
                "pre:{};cyc:{} -> {}",
                render_sets(preperiod, labels),
                render_sets(cycle, labels),
                target.render(labels)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub claim: Claim,
    pub carrier: Option<CarrierKind>,
    pub flavor: Option<Flavor>,
    pub evidence: Evidence,
}

impl Witness {
    pub fn new(claim: Claim, evidence: Evidence) -> Self {
        Witness {
            claim,
            carrier: None,
            flavor: None,
            evidence,
        }
    }

    pub fn on(mut self, carrier: CarrierKind, flavor: Flavor) -> Self {
        self.carrier = Some(carrier);
        self.flavor = Some(flavor);
        self
    }

    pub fn in_carrier(mut self, carrier: CarrierKind) -> Self {
        self.carrier = Some(carrier);
        self
    }

    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = Some(flavor);
        self
    }

    pub fn render(&self, labels: &[String]) -> String {
        let mut s = self.claim.name();
        match (self.carrier, self.flavor) {
            (Some(k), Some(f)) => s.push_str(&format!(" in ({k}, {f})")),
            (Some(k), None) => s.push_str(&format!(" in {k}")),
            (None, Some(f)) => s.push_str(&format!(" for {f}")),
            (None, None) => {}
        }
        s.push_str(": ");
        s.push_str(&self.evidence.render(labels));
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: CheckId,
    pub status: Status,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

/// Bounds on the eventually periodic sequences used for convergence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqBudget {
    pub max_preperiod: usize,
    pub max_cycle: usize,
}

impl SeqBudget {
    /// Longest cycle accepted; conditions quantify over all subsets of cycle
    /// positions.
    pub const CYCLE_LIMIT: usize = 6;
    /// Most sequences one check may enumerate.
    pub const SEQUENCE_LIMIT: usize = 5_000_000;

    pub fn sequence_count(self, carrier_len: usize) -> usize {
        let mut total = 0usize;
        for p in 0..=self.max_preperiod {
            for c in 1..=self.max_cycle {
                let e = u32::try_from(p + c).unwrap_or(u32::MAX);
                total = total.saturating_add(carrier_len.saturating_pow(e));
            }
        }
        total
    }

    pub fn validate(self, carrier_len: usize) -> Result<()> {
        if self.max_cycle == 0 || self.max_cycle > Self::CYCLE_LIMIT {
            return Err(Error::BudgetExceeded(format!(
                "cycle length must be in 1..={}, got {}",
                Self::CYCLE_LIMIT,
                self.max_cycle
            )));
        }
        let count = self.sequence_count(carrier_len);
        if count > Self::SEQUENCE_LIMIT {
            return Err(Error::BudgetExceeded(format!(
                "{count} sequences over {carrier_len} closed sets exceeds {}",
                Self::SEQUENCE_LIMIT
            )));
        }
        Ok(())
    }
}

impl Default for SeqBudget {
    fn default() -> Self {
        SeqBudget {
            max_preperiod: 1,
            max_cycle: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seq_budget: SeqBudget,
    /// Open-set enumerations stop and fall back to sampling past this count.
    pub open_limit: usize,
    /// Random open sets drawn when sampling.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seq_budget: SeqBudget::default(),
            open_limit: 1 << 16,
            samples: 256,
            seed: 0x1ad5_2e11,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub digest: String,
    pub space: FinTopSpace,
    pub labels: Vec<String>,
    pub results: Vec<CheckResult>,
    /// Wall time; never serialized so emitted reports stay byte-stable.
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status.is_fail())
    }

    pub fn all_ok(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn result(&self, id: CheckId) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == id)
    }
}

/// First 16 hex digits of the SHA-256 of the space's canonical key.
pub fn space_digest(space: &FinTopSpace) -> String {
    let hash = Sha256::digest(space.canonical_key().as_bytes());
    hex::encode(&hash[..8])
}

/// Default labels `0, 1, ..` for a space read without names.
pub fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub fn verify_all(space: &FinTopSpace) -> VerificationReport {
    let labels = index_labels(space.len());
    verify_with(
        &Hyperspaces::new(space.clone()),
        labels,
        &VerifyOptions::default(),
    )
    .expect("default budget fits every space with at most 16 points")
}

/// Run every registered check on `ctx`.
pub fn verify_with(
    ctx: &Hyperspaces,
    labels: Vec<String>,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    opts.seq_budget
        .validate(ctx.carrier(CarrierKind::F).len())?;
    let start = Instant::now();
    let mut results = Vec::with_capacity(CheckId::ALL.len());
    for id in CheckId::ALL {
        results.push(run_check(ctx, id, opts)?);
    }
    Ok(VerificationReport {
        digest: space_digest(ctx.space()),
        space: ctx.space().clone(),
        labels,
        results,
        elapsed: start.elapsed(),
    })
}
