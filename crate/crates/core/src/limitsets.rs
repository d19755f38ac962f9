//! Limit sets and the hyperspace carriers built from them.
//!
//! `L ⊆ X` is a limit set iff every finite family of opens that each meet `L`
//! has a common point. In a finite space the family of *all* opens meeting `L`
//! is itself finite, so one intersection decides it; [`is_limit_set_oracle`]
//! keeps the literal quantification over subfamilies for cross-checking.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finspace::{canonicalize, FinTopSpace, PointSet};

/// Intersection of every open set that meets `l` (the ground set when none does).
fn meeting_core(space: &FinTopSpace, l: PointSet) -> PointSet {
    space
        .opens()
        .iter()
        .filter(|u| u.meets(l))
        .fold(space.ground(), |acc, &u| acc.intersection(u))
}

pub fn is_limit_set(space: &FinTopSpace, l: PointSet) -> bool {
    !meeting_core(space, l).is_empty()
}

/// Opens beyond which [`is_limit_set_oracle`] refuses to run.
pub const ORACLE_MAX_OPENS: usize = 20;

/// Literal criterion: every subfamily of opens whose members all meet `l`
/// has non-empty intersection. Exponential in the number of opens.
pub fn is_limit_set_oracle(space: &FinTopSpace, l: PointSet) -> Result<bool> {
    let opens = space.opens();
    if opens.len() > ORACLE_MAX_OPENS {
        return Err(Error::BudgetExceeded(format!(
            "limit-set oracle needs at most {ORACLE_MAX_OPENS} opens, space has {}",
            opens.len()
        )));
    }
    for family in 0u32..(1u32 << opens.len()) {
        let mut all_meet = true;
        let mut common = space.ground();
        for (i, &u) in opens.iter().enumerate() {
            if family & (1 << i) != 0 {
                if !u.meets(l) {
                    all_meet = false;
                    break;
                }
                common = common.intersection(u);
            }
        }
        if all_meet && common.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A point lying in every open that meets `l`; the constant sequence at it
/// converges to each point of `l`. Present exactly when `l` is a limit set.
pub fn limit_witness(space: &FinTopSpace, l: PointSet) -> Option<usize> {
    meeting_core(space, l).first()
}

/// `η(x) = cl{x}`.
pub fn eta(space: &FinTopSpace, x: usize) -> PointSet {
    space.point_closure(x)
}

/// Which hyperspace of closed sets a carrier holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CarrierKind {
    /// All closed sets.
    F,
    /// Non-empty closed sets.
    Fprime,
    /// Closed limit sets.
    L,
    /// Non-empty closed limit sets.
    Lprime,
    /// Maximal limit sets.
    ML,
}

impl CarrierKind {
    pub const ALL: [CarrierKind; 5] = [
        CarrierKind::F,
        CarrierKind::Fprime,
        CarrierKind::L,
        CarrierKind::Lprime,
        CarrierKind::ML,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CarrierKind::F => "F",
            CarrierKind::Fprime => "Fprime",
            CarrierKind::L => "L",
            CarrierKind::Lprime => "Lprime",
            CarrierKind::ML => "ML",
        }
    }
}

impl fmt::Display for CarrierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CarrierKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CarrierKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!("unknown carrier {s:?}; expected one of F, Fprime, L, Lprime, ML")
            })
    }
}

/// An indexed, canonically ordered family of closed sets of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperCarrier {
    space: Arc<FinTopSpace>,
    kind: CarrierKind,
    elements: Vec<PointSet>,
}

impl HyperCarrier {
    /// Wrap an arbitrary element list without checking the kind's invariants.
    /// Used to build deliberately corrupted carriers.
    pub fn from_elements_unchecked(
        space: Arc<FinTopSpace>,
        kind: CarrierKind,
        mut elements: Vec<PointSet>,
    ) -> Self {
        canonicalize(&mut elements);
        HyperCarrier {
            space,
            kind,
            elements,
        }
    }

    pub fn space(&self) -> &FinTopSpace {
        &self.space
    }

    pub fn space_arc(&self) -> &Arc<FinTopSpace> {
        &self.space
    }

    pub fn kind(&self) -> CarrierKind {
        self.kind
    }

    pub fn elements(&self) -> &[PointSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> PointSet {
        self.elements[i]
    }

    pub fn index_of(&self, a: PointSet) -> Option<usize> {
        self.elements.binary_search(&a).ok()
    }

    pub fn contains(&self, a: PointSet) -> bool {
        self.index_of(a).is_some()
    }
}

/// Build one of the five hyperspace carriers of `space`.
pub fn carrier(space: &Arc<FinTopSpace>, kind: CarrierKind) -> HyperCarrier {
    let closed = space.closed_sets();
    let limit = || closed.iter().copied().filter(|&a| is_limit_set(space, a));
    let elements: Vec<PointSet> = match kind {
        CarrierKind::F => closed.clone(),
        CarrierKind::Fprime => closed.iter().copied().filter(|a| !a.is_empty()).collect(),
        CarrierKind::L => limit().collect(),
        CarrierKind::Lprime => limit().filter(|a| !a.is_empty()).collect(),
        CarrierKind::ML => {
            let nonempty: Vec<PointSet> = limit().filter(|a| !a.is_empty()).collect();
            nonempty
                .iter()
                .copied()
                .filter(|&a| !nonempty.iter().any(|&b| b != a && a.is_subset(b)))
                .collect()
        }
    };
    HyperCarrier::from_elements_unchecked(Arc::clone(space), kind, elements)
}
