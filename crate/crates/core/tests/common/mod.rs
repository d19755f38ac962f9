#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperlimit::finspace::{from_preorder, validate_topology, FinTopSpace, PointSet};

/// Every family of subsets of an `n`-set containing ∅ and X that is closed
/// under pairwise union and intersection, as sorted mask lists.
pub fn brute_force_topologies(n: usize) -> BTreeSet<Vec<u16>> {
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = BTreeSet::new();
    for choice in 0u64..(1u64 << middle.len()) {
        let mut fam = vec![0u32, full];
        fam.extend(
            (0..middle.len())
                .filter(|k| choice & (1 << k) != 0)
                .map(|k| middle[k]),
        );
        fam.sort();
        fam.dedup();
        let has = |m: u32| fam.contains(&m);
        if fam
            .iter()
            .all(|&a| fam.iter().all(|&b| has(a | b) && has(a & b)))
        {
            let mut sets: Vec<PointSet> =
                fam.iter().map(|&m| PointSet::from_mask(m as u16)).collect();
            sets.sort();
            out.insert(sets.iter().map(|s| s.mask()).collect());
        }
    }
    out
}

pub fn opens_key(s: &FinTopSpace) -> Vec<u16> {
    s.opens().iter().map(|u| u.mask()).collect()
}

fn opens(n: usize, masks: &[u16]) -> FinTopSpace {
    let sets: Vec<PointSet> = masks.iter().map(|&m| PointSet::from_mask(m)).collect();
    validate_topology(n, &sets).unwrap()
}

/// Small spaces on which every check class can be made to fail.
pub fn corruption_panel() -> Vec<(&'static str, FinTopSpace)> {
    vec![
        ("Sierpinski", FinTopSpace::sierpinski()),
        (
            "Sierpinski plus isolated point",
            opens(3, &[0, 1, 4, 5, 3, 7]),
        ),
        ("3-point space", opens(3, &[0, 1, 2, 3, 7])),
        ("discrete 2", FinTopSpace::discrete(2)),
        ("indiscrete 2", FinTopSpace::indiscrete(2)),
        ("3-chain", from_preorder(3, &[(2, 1), (1, 0)]).unwrap()),
    ]
}
