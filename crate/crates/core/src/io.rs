//! File formats: labeled space documents, set and sequence syntax for the
//! command line, and text/JSON verification reports.
//!
//! A space document is JSON with a `points` list of distinct labels and
//! exactly one of
//!
//! * `opens`: the open sets as lists of labels, or
//! * `preorder`: pairs `[x, y]` meaning `x ≤ y`, i.e. `x ∈ cl{y}`; the opens
//!   are the up-sets of the reflexive-transitive closure.
//!
//! Report JSON carries `"schema": 1`. Every set in user-facing output is
//! written with point labels, never indices.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finspace::{from_preorder, validate_topology, FinTopSpace, PointSet};
use crate::hyperspace::{hyper_closure, is_separated_in, singleton, EvPerSeq, Flavor};
use crate::limitsets::CarrierKind;
use crate::theorems::{CheckId, Hyperspaces, Status, SweepReport, VerificationReport};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preorder: Option<Vec<[String; 2]>>,
}

/// A space together with the labels of its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSpace {
    pub space: FinTopSpace,
    pub labels: Vec<String>,
}

impl LabeledSpace {
    pub fn unlabeled(space: FinTopSpace) -> Self {
        let labels = (0..space.len()).map(|i| i.to_string()).collect();
        LabeledSpace { space, labels }
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    }

    pub fn render(&self, s: PointSet) -> String {
        s.render(&self.labels)
    }

    pub fn render_family(&self, sets: &[PointSet]) -> String {
        let parts: Vec<String> = sets.iter().map(|&s| self.render(s)).collect();
        format!("[{}]", parts.join(","))
    }

    /// Document listing the opens in canonical order.
    pub fn to_document(&self) -> SpaceDocument {
        let label = |s: PointSet| s.iter().map(|x| self.labels[x].clone()).collect();
        SpaceDocument {
            points: self.labels.clone(),
            opens: Some(self.space.opens().iter().map(|&u| label(u)).collect()),
            preorder: None,
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn parse_space(text: &str) -> Result<LabeledSpace> {
    let doc: SpaceDocument = serde_json::from_str(text).map_err(json_error)?;
    space_from_document(&doc)
}

pub fn space_from_document(doc: &SpaceDocument) -> Result<LabeledSpace> {
    let n = doc.points.len();
    if n > PointSet::MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    let mut seen = HashMap::new();
    for (i, l) in doc.points.iter().enumerate() {
        if seen.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    let partial = LabeledSpace {
        space: FinTopSpace::indiscrete(n),
        labels: doc.points.clone(),
    };
    let space = match (&doc.opens, &doc.preorder) {
        (Some(opens), None) => {
            let sets = opens
                .iter()
                .map(|o| partial.set_of(o))
                .collect::<Result<Vec<_>>>()?;
            validate_topology(n, &sets)?
        }
        (None, Some(pairs)) => {
            let rel = pairs
                .iter()
                .map(|[x, y]| Ok((partial.index_of(x)?, partial.index_of(y)?)))
                .collect::<Result<Vec<_>>>()?;
            from_preorder(n, &rel)?
        }
        _ => {
            return Err(Error::InvalidDocument(
                "expected exactly one of \"opens\" and \"preorder\"".to_string(),
            ))
        }
    };
    Ok(LabeledSpace {
        space,
        labels: partial.labels,
    })
}

pub fn emit_space(space: &LabeledSpace) -> String {
    let mut s = serde_json::to_string(&space.to_document()).expect("plain data");
    s.push('\n');
    s
}

/// Parse `{a,b}` (whitespace allowed around labels) into a point set.
pub fn parse_set(space: &LabeledSpace, text: &str) -> Result<PointSet> {
    parse_set_at(space, text, 1)
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

fn parse_set_at(space: &LabeledSpace, text: &str, column: usize) -> Result<PointSet> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| syntax(column, format!("expected {{...}}, found {t:?}")))?;
    if inner.trim().is_empty() {
        return Ok(PointSet::EMPTY);
    }
    let labels: Vec<&str> = inner.split(',').map(str::trim).collect();
    space.set_of(&labels)
}

/// Split `[{..},{..}]` into its set literals, each with its starting column.
fn parse_set_list(space: &LabeledSpace, text: &str, column: usize) -> Result<Vec<PointSet>> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| syntax(column, format!("expected [...], found {:?}", text.trim())))?;
    let mut out = Vec::new();
    let mut rest = inner;
    let mut col = column + 1;
    loop {
        let trimmed = rest.trim_start();
        col += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return Ok(out);
        }
        if !trimmed.starts_with('{') {
            return Err(syntax(col, "expected a set literal"));
        }
        let end = trimmed
            .find('}')
            .ok_or_else(|| syntax(col, "unterminated set literal"))?;
        out.push(parse_set_at(space, &trimmed[..=end], col)?);
        let after = trimmed[end + 1..].trim_start();
        col += trimmed.len() - after.len();
        rest = match after.strip_prefix(',') {
            Some(r) => {
                col += 1;
                r
            }
            None if after.is_empty() => after,
            None => return Err(syntax(col, "expected ',' between sets")),
        };
    }
}

/// Parse `pre:[{..},..];cyc:[{..},..]` into a sequence of point sets.
pub fn parse_seq_spec(space: &LabeledSpace, text: &str) -> Result<EvPerSeq<PointSet>> {
    let (pre_part, cyc_part) = text
        .split_once(';')
        .ok_or_else(|| syntax(1, "expected pre:[...];cyc:[...]"))?;
    let pre = pre_part
        .trim()
        .strip_prefix("pre:")
        .ok_or_else(|| syntax(1, "expected pre:"))?;
    let cyc_col = pre_part.len() + 2;
    let cyc = cyc_part
        .trim()
        .strip_prefix("cyc:")
        .ok_or_else(|| syntax(cyc_col, "expected cyc:"))?;
    let preperiod = parse_set_list(space, pre, 5)?;
    let cycle = parse_set_list(space, cyc, cyc_col + 4)?;
    EvPerSeq::new(preperiod, cycle)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDocument {
    pub claim: String,
    pub carrier: Option<String>,
    pub topology: Option<String>,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultDocument {
    pub check: CheckId,
    pub status: Status,
    pub witness: Option<WitnessDocument>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema: u32,
    pub digest: String,
    pub space: SpaceDocument,
    pub results: Vec<ResultDocument>,
}

impl ReportDocument {
    pub fn from_report(report: &VerificationReport) -> Self {
        let labeled = LabeledSpace {
            space: report.space.clone(),
            labels: report.labels.clone(),
        };
        ReportDocument {
            schema: REPORT_SCHEMA,
            digest: report.digest.clone(),
            space: labeled.to_document(),
            results: report
                .results
                .iter()
                .map(|r| ResultDocument {
                    check: r.check_id,
                    status: r.status,
                    witness: r.witness.as_ref().map(|w| WitnessDocument {
                        claim: w.claim.name(),
                        carrier: w.carrier.map(|k| k.to_string()),
                        topology: w.flavor.map(|f| f.to_string()),
                        evidence: w.evidence.render(&report.labels),
                    }),
                    notes: r.notes.clone(),
                })
                .collect(),
        }
    }
}

pub fn emit_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => emit_report_document(&ReportDocument::from_report(report)),
        Format::Text => {
            let mut out = String::new();
            let labeled = LabeledSpace {
                space: report.space.clone(),
                labels: report.labels.clone(),
            };
            let _ = writeln!(
                out,
                "space {}: points {}",
                report.digest,
                report.labels.join(", ")
            );
            let _ = writeln!(out, "opens {}", labeled.render_family(report.space.opens()));
            for r in &report.results {
                let _ = writeln!(out, "{}: {}", r.check_id, r.status);
                if let Some(w) = &r.witness {
                    let _ = writeln!(out, "  witness: {}", w.render(&report.labels));
                }
                for note in &r.notes {
                    let _ = writeln!(out, "  note: {note}");
                }
            }
            out
        }
    }
}

pub fn emit_report_document(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data");
    s.push('\n');
    s
}

pub fn parse_report(text: &str) -> Result<ReportDocument> {
    let doc: ReportDocument = serde_json::from_str(text).map_err(json_error)?;
    if doc.schema != REPORT_SCHEMA {
        return Err(Error::InvalidDocument(format!(
            "unsupported report schema {}; expected {REPORT_SCHEMA}",
            doc.schema
        )));
    }
    Ok(doc)
}

pub fn emit_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "sweep n={}: {}", report.n, report.summary());
            for t in &report.checks {
                let _ = writeln!(
                    out,
                    "{}: pass={} trivially_true={} proxy={} fail={}",
                    t.check_id, t.pass, t.trivially_true, t.proxy, t.fail
                );
                if let Some(key) = &t.first_counterexample {
                    let _ = writeln!(out, "  first counterexample: {key}");
                }
            }
            for f in &report.findings {
                let _ = write!(out, "finding: {}: {}", f.description, f.count);
                if let Some(first) = &f.first {
                    let _ = write!(out, " (first: {first})");
                }
                out.push('\n');
            }
            out
        }
    }
}

/// Carrier listing plus, for each element of `kind` under `flavor`: its
/// minimal neighbourhood, the closure of its singleton, ML membership, and
/// whether it is separated.
pub fn emit_hyperspace_report(space: &LabeledSpace, kind: CarrierKind, flavor: Flavor) -> String {
    let ctx = Hyperspaces::new(space.space.clone());
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", space.labels.join(", "));
    let _ = writeln!(out, "opens: {}", space.render_family(space.space.opens()));
    let _ = writeln!(
        out,
        "separated points: {}",
        space.render(space.space.separated_points())
    );
    for k in CarrierKind::ALL {
        let _ = writeln!(
            out,
            "{k}: {}",
            space.render_family(ctx.carrier(k).elements())
        );
    }
    let t = ctx.topology(kind, flavor);
    let ml = ctx.carrier(CarrierKind::ML);
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "({kind}, {flavor}):");
    for (i, &a) in t.carrier().elements().iter().enumerate() {
        let closure = hyper_closure(t, &singleton(t.len(), i));
        let separated = is_separated_in(t, a).expect("carrier element");
        let _ = writeln!(
            out,
            "  {}: nbhd {}; closure {}; maximal {}; separated {}",
            space.render(a),
            space.render_family(&t.sets_of(t.min_nbhd(i))),
            space.render_family(&t.sets_of(&closure)),
            yes_no(ml.contains(a)),
            yes_no(separated),
        );
    }
    out
}
