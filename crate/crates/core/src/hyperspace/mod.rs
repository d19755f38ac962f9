//! The lower semifinite topology `τ_w` and the Fell topology `τ_s` on
//! hyperspaces of closed sets.
//!
//! Both are generated by hit-and-miss sets `U(C, Φ) = {A : A ∩ C = ∅, A meets
//! every O ∈ Φ}`, with `C = ∅` for `τ_w`. On a finite space each has a minimal
//! open neighbourhood at every closed set `A`:
//!
//! * `N_w(A) = {B : B meets every open that meets A}`
//! * `N_s(A) = {B ⊆ A : B meets every open that meets A}`
//!
//! The Fell form uses that every subset of a finite space is compact, so the
//! largest admissible miss set is `X ∖ A`. [`min_nbhd_oracle`] recomputes both
//! by intersecting every basic open literally.

mod alexandrov;
mod product;
mod sequence;

pub use alexandrov::{index_set, singleton, Alexandrov, IndexSet};
pub use product::{inclusion_relation, product_min_nbhd, product_topology, s_of};
pub use sequence::{
    conv1_conditions, is_primitive, seq_clusters, seq_limits, sequences, Conv1, EvPerSeq,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finspace::{FinTopSpace, PointSet};
use crate::limitsets::{CarrierKind, HyperCarrier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// Lower semifinite topology.
    #[serde(rename = "w")]
    Weak,
    /// Fell topology.
    #[serde(rename = "s")]
    Strong,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::Weak, Flavor::Strong];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Weak => "tau_w",
            Flavor::Strong => "tau_s",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "w" | "tau_w" => Ok(Flavor::Weak),
            "s" | "tau_s" => Ok(Flavor::Strong),
            _ => Err(format!("unknown topology {s:?}; expected w or s")),
        }
    }
}

/// `τ_w` or `τ_s` restricted to a carrier, in minimal-neighbourhood form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperTopology {
    carrier: HyperCarrier,
    flavor: Flavor,
    alex: Alexandrov,
}

impl HyperTopology {
    pub fn carrier(&self) -> &HyperCarrier {
        &self.carrier
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn kind(&self) -> CarrierKind {
        self.carrier.kind()
    }

    pub fn alexandrov(&self) -> &Alexandrov {
        &self.alex
    }

    pub(crate) fn alexandrov_mut(&mut self) -> &mut Alexandrov {
        &mut self.alex
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn min_nbhd(&self, i: usize) -> &IndexSet {
        self.alex.nbhd(i)
    }

    /// Index of `a` in the carrier.
    pub fn index(&self, a: PointSet) -> Result<usize> {
        self.carrier.index_of(a).ok_or(Error::NotInCarrier(a))
    }

    /// Carrier indices of the given sets; fails on the first non-member.
    pub fn index_set_of(&self, sets: &[PointSet]) -> Result<IndexSet> {
        let mut s = self.alex.empty_set();
        for &a in sets {
            s.insert(self.index(a)?);
        }
        Ok(s)
    }

    /// The carrier elements at the given indices, in canonical order.
    pub fn sets_of(&self, s: &IndexSet) -> Vec<PointSet> {
        s.ones().map(|i| self.carrier.get(i)).collect()
    }

    /// `B ∈ min_nbhd(A)` as carrier elements.
    pub fn in_nbhd(&self, a: PointSet, b: PointSet) -> Result<bool> {
        Ok(self.alex.nbhd(self.index(a)?).contains(self.index(b)?))
    }

    pub fn full_set(&self) -> IndexSet {
        self.alex.full_set()
    }
}

/// Whether `a ∈ U(C, Φ)`. Members of `Φ` must be open in `space`.
pub fn basic_open_membership(
    space: &FinTopSpace,
    a: PointSet,
    c: PointSet,
    phi: &[PointSet],
) -> Result<bool> {
    if let Some(o) = phi.iter().find(|&&o| !space.is_open(o)) {
        return Err(Error::NotOpen(format!("{o} is not open in the base space")));
    }
    Ok(!a.meets(c) && phi.iter().all(|&o| a.meets(o)))
}

/// Minimal neighbourhood of the closed set `a` inside `carrier`, by the
/// closed forms in the module docs. `a` need not belong to the carrier.
pub fn min_nbhd_closed_form(carrier: &HyperCarrier, flavor: Flavor, a: PointSet) -> IndexSet {
    let space = carrier.space();
    let meeting: Vec<PointSet> = space
        .opens()
        .iter()
        .copied()
        .filter(|u| u.meets(a))
        .collect();
    let mut out = IndexSet::with_capacity(carrier.len());
    for (j, &b) in carrier.elements().iter().enumerate() {
        let hits = meeting.iter().all(|&u| b.meets(u));
        let misses = match flavor {
            Flavor::Weak => true,
            Flavor::Strong => b.is_subset(a),
        };
        if hits && misses {
            out.insert(j);
        }
    }
    out
}

pub fn build_topology(carrier: &HyperCarrier, flavor: Flavor) -> HyperTopology {
    let nbhds = carrier
        .elements()
        .iter()
        .map(|&a| min_nbhd_closed_form(carrier, flavor, a))
        .collect();
    HyperTopology {
        carrier: carrier.clone(),
        flavor,
        alex: Alexandrov::new(nbhds),
    }
}

/// Opens beyond which [`min_nbhd_oracle`] refuses to run.
pub const NBHD_ORACLE_MAX_OPENS: usize = 12;

/// Intersection, restricted to `carrier`, of every basic open `U(C, Φ)` that
/// contains `a`: `Φ` over all subfamilies of distinct opens, and `C` over all
/// subsets of the ground set for `τ_s` (only `C = ∅` for `τ_w`).
pub fn min_nbhd_oracle(carrier: &HyperCarrier, flavor: Flavor, a: PointSet) -> Result<IndexSet> {
    let space = carrier.space();
    let opens = space.opens();
    if opens.len() > NBHD_ORACLE_MAX_OPENS {
        return Err(Error::BudgetExceeded(format!(
            "neighbourhood oracle needs at most {NBHD_ORACLE_MAX_OPENS} opens, space has {}",
            opens.len()
        )));
    }
    let miss_sets: Vec<PointSet> = match flavor {
        Flavor::Weak => vec![PointSet::EMPTY],
        Flavor::Strong => space.ground().subsets().collect(),
    };
    let mut result = IndexSet::with_capacity(carrier.len());
    result.insert_range(..);
    for &c in &miss_sets {
        for family in 0u32..(1u32 << opens.len()) {
            let phi: Vec<PointSet> = (0..opens.len())
                .filter(|i| family & (1 << i) != 0)
                .map(|i| opens[i])
                .collect();
            if !basic_open_membership(space, a, c, &phi)? {
                continue;
            }
            for (j, &b) in carrier.elements().iter().enumerate() {
                if !basic_open_membership(space, b, c, &phi)? {
                    result.set(j, false);
                }
            }
        }
    }
    Ok(result)
}

pub fn hyper_closure(topology: &HyperTopology, s: &IndexSet) -> IndexSet {
    topology.alex.closure(s)
}

pub fn is_dense(topology: &HyperTopology, s: &IndexSet) -> bool {
    topology.alex.is_dense(s)
}

pub fn is_closed_sub(topology: &HyperTopology, s: &IndexSet) -> bool {
    topology.alex.is_closed(s)
}

/// Continuity at `a` of the identity from `weak` to `strong`, which must be
/// topologies on the same carrier: `N_weak(a) ⊆ N_strong(a)`.
pub fn identity_continuous_at(
    weak: &HyperTopology,
    strong: &HyperTopology,
    a: PointSet,
) -> Result<bool> {
    let i = weak.index(a)?;
    let j = strong.index(a)?;
    let nw = weak.sets_of(weak.min_nbhd(i));
    let ns = strong.sets_of(strong.min_nbhd(j));
    Ok(nw.iter().all(|b| ns.binary_search(b).is_ok()))
}

pub fn is_separated_in(topology: &HyperTopology, a: PointSet) -> Result<bool> {
    Ok(topology.alex.is_separated(topology.index(a)?))
}

pub fn is_hausdorff(topology: &HyperTopology) -> bool {
    topology.alex.is_hausdorff()
}

pub fn is_connected_hyper(topology: &HyperTopology) -> bool {
    topology.alex.is_connected()
}

/// Whether `cover` (open sets of carrier indices) covers `s` and admits a
/// finite subcover of it.
///
/// The subcover is extracted greedily and re-verified, so the check still
/// exercises the cover rather than assuming compactness.
pub fn is_compact_cover(
    topology: &HyperTopology,
    s: &IndexSet,
    cover: &[IndexSet],
) -> Result<bool> {
    is_compact_cover_in(&topology.alex, s, cover)
}

pub(crate) fn is_compact_cover_in(
    alex: &Alexandrov,
    s: &IndexSet,
    cover: &[IndexSet],
) -> Result<bool> {
    if let Some(k) = cover.iter().position(|u| !alex.is_open(u)) {
        return Err(Error::NotOpen(format!("cover member #{k}")));
    }
    let mut uncovered = s.clone();
    let mut sub: Vec<&IndexSet> = Vec::new();
    while let Some(i) = uncovered.ones().next() {
        match cover.iter().find(|u| u.contains(i)) {
            Some(u) => {
                uncovered.difference_with(u);
                sub.push(u);
            }
            None => return Ok(false),
        }
    }
    let mut union = alex.empty_set();
    for u in &sub {
        union.union_with(u);
    }
    Ok(s.is_subset(&union))
}
