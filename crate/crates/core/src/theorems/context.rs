use std::fmt;
use std::sync::Arc;

use crate::finspace::{FinTopSpace, PointSet};
use crate::hyperspace::{build_topology, Flavor, HyperTopology};
use crate::limitsets::{carrier, CarrierKind, HyperCarrier};

/// All five carriers of one space with both topologies on each.
#[derive(Clone, Debug)]
pub struct Hyperspaces {
    space: Arc<FinTopSpace>,
    carriers: Vec<HyperCarrier>,
    // topologies[kind][flavor]
    topologies: Vec<[HyperTopology; 2]>,
}

fn kind_slot(kind: CarrierKind) -> usize {
    CarrierKind::ALL
        .iter()
        .position(|&k| k == kind)
        .expect("listed")
}

fn flavor_slot(flavor: Flavor) -> usize {
    match flavor {
        Flavor::Weak => 0,
        Flavor::Strong => 1,
    }
}

/// A deliberate defect planted in a [`Hyperspaces`] to show that checks can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Add a set to one carrier.
    Inject { kind: CarrierKind, set: PointSet },
    /// Drop a set from one carrier.
    Remove { kind: CarrierKind, set: PointSet },
    /// Exchange the `τ_w` and `τ_s` neighbourhoods on one carrier.
    SwapFlavor { kind: CarrierKind },
    /// Put `extra` into the minimal neighbourhood of `at`.
    AddNeighbor {
        kind: CarrierKind,
        flavor: Flavor,
        at: PointSet,
        extra: PointSet,
    },
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corruption::Inject { kind, set } => write!(f, "inject {set} into {kind}"),
            Corruption::Remove { kind, set } => write!(f, "remove {set} from {kind}"),
            Corruption::SwapFlavor { kind } => write!(f, "swap tau_w and tau_s on {kind}"),
            Corruption::AddNeighbor {
                kind,
                flavor,
                at,
                extra,
            } => write!(
                f,
                "add {extra} to the {flavor} neighbourhood of {at} in {kind}"
            ),
        }
    }
}

impl Hyperspaces {
    pub fn new(space: FinTopSpace) -> Self {
        Self::from_arc(Arc::new(space))
    }

    pub fn from_arc(space: Arc<FinTopSpace>) -> Self {
        let carriers: Vec<HyperCarrier> = CarrierKind::ALL
            .iter()
            .map(|&k| carrier(&space, k))
            .collect();
        Self::from_carriers(space, carriers)
    }

    fn from_carriers(space: Arc<FinTopSpace>, carriers: Vec<HyperCarrier>) -> Self {
        let topologies = carriers
            .iter()
            .map(|c| {
                [
                    build_topology(c, Flavor::Weak),
                    build_topology(c, Flavor::Strong),
                ]
            })
            .collect();
        Hyperspaces {
            space,
            carriers,
            topologies,
        }
    }

    /// The honest hyperspaces of `space` with `corruption` applied.
    ///
    /// Carrier edits happen before the topologies are built; neighbourhood
    /// edits afterwards. An `AddNeighbor` naming a set outside the carrier is
    /// ignored.
    pub fn corrupted(space: FinTopSpace, corruption: &Corruption) -> Self {
        let space = Arc::new(space);
        let mut carriers: Vec<HyperCarrier> = CarrierKind::ALL
            .iter()
            .map(|&k| carrier(&space, k))
            .collect();
        match *corruption {
            Corruption::Inject { kind, set } => {
                let c = &mut carriers[kind_slot(kind)];
                let mut elems = c.elements().to_vec();
                elems.push(set);
                *c = HyperCarrier::from_elements_unchecked(Arc::clone(&space), kind, elems);
            }
            Corruption::Remove { kind, set } => {
                let c = &mut carriers[kind_slot(kind)];
                let elems = c.elements().iter().copied().filter(|&a| a != set).collect();
                *c = HyperCarrier::from_elements_unchecked(Arc::clone(&space), kind, elems);
            }
            _ => {}
        }
        let mut ctx = Self::from_carriers(space, carriers);
        match *corruption {
            Corruption::SwapFlavor { kind } => {
                let [w, s] = &mut ctx.topologies[kind_slot(kind)];
                std::mem::swap(w.alexandrov_mut(), s.alexandrov_mut());
            }
            Corruption::AddNeighbor {
                kind,
                flavor,
                at,
                extra,
            } => {
                let t = &mut ctx.topologies[kind_slot(kind)][flavor_slot(flavor)];
                if let (Ok(i), Ok(j)) = (t.index(at), t.index(extra)) {
                    t.alexandrov_mut().nbhd_mut(i).insert(j);
                }
            }
            _ => {}
        }
        ctx
    }

    pub fn space(&self) -> &FinTopSpace {
        &self.space
    }

    pub fn space_arc(&self) -> &Arc<FinTopSpace> {
        &self.space
    }

    pub fn carrier(&self, kind: CarrierKind) -> &HyperCarrier {
        &self.carriers[kind_slot(kind)]
    }

    pub fn topology(&self, kind: CarrierKind, flavor: Flavor) -> &HyperTopology {
        &self.topologies[kind_slot(kind)][flavor_slot(flavor)]
    }

    pub fn weak(&self, kind: CarrierKind) -> &HyperTopology {
        self.topology(kind, Flavor::Weak)
    }

    pub fn strong(&self, kind: CarrierKind) -> &HyperTopology {
        self.topology(kind, Flavor::Strong)
    }

    /// Corruptions worth trying on this space: carrier injections and
    /// removals for `L` and `ML`, flavor swaps, and one added neighbour per
    /// carrier and flavor where a non-neighbour exists.
    pub fn corruption_candidates(&self) -> Vec<Corruption> {
        let mut out = Vec::new();
        let closed = self.space.closed_sets();
        for kind in [CarrierKind::L, CarrierKind::ML] {
            let c = self.carrier(kind);
            for &set in &closed {
                if c.contains(set) {
                    out.push(Corruption::Remove { kind, set });
                } else {
                    out.push(Corruption::Inject { kind, set });
                }
            }
        }
        for kind in [CarrierKind::F, CarrierKind::L, CarrierKind::ML] {
            out.push(Corruption::SwapFlavor { kind });
        }
        for kind in [CarrierKind::F, CarrierKind::L, CarrierKind::ML] {
            for flavor in Flavor::BOTH {
                let t = self.topology(kind, flavor);
                let pair = (0..t.len())
                    .flat_map(|i| (0..t.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !t.min_nbhd(i).contains(j));
                if let Some((i, j)) = pair {
                    out.push(Corruption::AddNeighbor {
                        kind,
                        flavor,
                        at: t.carrier().get(i),
                        extra: t.carrier().get(j),
                    });
                }
            }
        }
        out
    }
}
