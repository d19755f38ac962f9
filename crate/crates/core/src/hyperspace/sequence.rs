//! Eventually periodic sequences, the decidable stand-in for nets.
//!
//! In a finite Alexandrov space a sequence is eventually inside `N(A)` iff
//! every cycle term is, and frequently inside iff some cycle term is, so
//! limits and cluster points depend on the cycle alone.

use super::{HyperTopology, IndexSet};
use crate::error::{Error, Result};
use crate::finspace::{FinTopSpace, PointSet};

/// `preperiod` followed by `cycle` repeated forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvPerSeq<T> {
    preperiod: Vec<T>,
    cycle: Vec<T>,
}

impl<T: Clone> EvPerSeq<T> {
    pub fn new(preperiod: Vec<T>, cycle: Vec<T>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        Ok(EvPerSeq { preperiod, cycle })
    }

    pub fn constant(x: T) -> Self {
        EvPerSeq {
            preperiod: Vec::new(),
            cycle: vec![x],
        }
    }

    pub fn preperiod(&self) -> &[T] {
        &self.preperiod
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }

    pub fn term(&self, k: usize) -> &T {
        match self.preperiod.get(k) {
            Some(t) => t,
            None => &self.cycle[(k - self.preperiod.len()) % self.cycle.len()],
        }
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> EvPerSeq<U> {
        EvPerSeq {
            preperiod: self.preperiod.iter().map(&mut f).collect(),
            cycle: self.cycle.iter().map(f).collect(),
        }
    }
}

/// Carrier points the sequence converges to.
pub fn seq_limits(topology: &HyperTopology, seq: &EvPerSeq<usize>) -> IndexSet {
    let mut out = IndexSet::with_capacity(topology.len());
    for a in 0..topology.len() {
        let n = topology.min_nbhd(a);
        if seq.cycle().iter().all(|&c| n.contains(c)) {
            out.insert(a);
        }
    }
    out
}

pub fn seq_clusters(topology: &HyperTopology, seq: &EvPerSeq<usize>) -> IndexSet {
    let mut out = IndexSet::with_capacity(topology.len());
    for a in 0..topology.len() {
        let n = topology.min_nbhd(a);
        if seq.cycle().iter().any(|&c| n.contains(c)) {
            out.insert(a);
        }
    }
    out
}

/// Limits and cluster points coincide.
pub fn is_primitive(topology: &HyperTopology, seq: &EvPerSeq<usize>) -> bool {
    seq_limits(topology, seq) == seq_clusters(topology, seq)
}

/// The two pointwise conditions characterising Fell convergence of a sequence
/// of closed sets `A_k` to `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conv1 {
    /// Every limit of points `x_k ∈ A_k` along any subsequence lies in `A`.
    pub cond_a: bool,
    /// Every `x ∈ A` is, along every subsequence, the limit of some further
    /// choice of points `x_k ∈ A_k`.
    pub cond_b: bool,
}

impl Conv1 {
    pub fn both(self) -> bool {
        self.cond_a && self.cond_b
    }
}

/// Every choice of one point from each listed set.
fn selections(sets: &[PointSet]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for s in sets {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                s.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Points a sequence with the given tail values converges to.
fn point_limits(space: &FinTopSpace, tail: &[usize]) -> PointSet {
    (0..space.len())
        .filter(|&x| tail.iter().all(|&y| space.min_nbhd(x).contains(y)))
        .collect()
}

/// Evaluate [`Conv1`] for an eventually periodic sequence of closed sets.
///
/// Up to tails, a subsequence is determined by the non-empty set `P` of cycle
/// positions it visits infinitely often, and a choice of points along it that
/// is periodic over `P` realises every achievable limit. Both conditions are
/// quantified literally over those `P` and selections.
pub fn conv1_conditions(space: &FinTopSpace, seq: &EvPerSeq<PointSet>, a: PointSet) -> Conv1 {
    let cycle = seq.cycle();
    let positions: Vec<Vec<PointSet>> = (1u32..(1u32 << cycle.len()))
        .map(|p| {
            (0..cycle.len())
                .filter(|k| p & (1 << k) != 0)
                .map(|k| cycle[k])
                .collect()
        })
        .collect();

    let cond_a = positions.iter().all(|sub| {
        selections(sub)
            .iter()
            .all(|sel| point_limits(space, sel).is_subset(a))
    });
    let cond_b = a.iter().all(|x| {
        positions.iter().all(|sub| {
            selections(sub)
                .iter()
                .any(|sel| point_limits(space, sel).contains(x))
        })
    });
    Conv1 { cond_a, cond_b }
}

/// Every eventually periodic sequence over `{0, .., m-1}` with preperiod
/// length `≤ max_pre` and cycle length in `1..=max_cycle`.
pub fn sequences(
    m: usize,
    max_pre: usize,
    max_cycle: usize,
) -> impl Iterator<Item = EvPerSeq<usize>> {
    (0..=max_pre)
        .flat_map(move |p| (1..=max_cycle).map(move |c| (p, c)))
        .flat_map(move |(p, c)| {
            let total = p + c;
            let count = if m == 0 { 0 } else { m.pow(total as u32) };
            (0..count).map(move |mut code| {
                let mut terms = Vec::with_capacity(total);
                for _ in 0..total {
                    terms.push(code % m);
                    code /= m;
                }
                let cycle = terms.split_off(p);
                EvPerSeq {
                    preperiod: terms,
                    cycle,
                }
            })
        })
}
