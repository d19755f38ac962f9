//! Cross-checks of the fast paths against brute-force definitions.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperlimit::finspace::{enumerate_topologies, from_preorder, PointSet};
use hyperlimit::hyperspace::{
    build_topology, inclusion_relation, min_nbhd_oracle, product_topology, Flavor, IndexSet,
};
use hyperlimit::limitsets::{
    carrier, is_limit_set, is_limit_set_oracle, limit_witness, CarrierKind,
};
use hyperlimit::theorems::{confirm_witness, Claim, Evidence, Hyperspaces, Witness};

mod common;
use common::{brute_force_topologies, opens_key};

#[test]
fn enumeration_matches_family_filter() {
    for n in 0..=4 {
        let fast: BTreeSet<Vec<u16>> = enumerate_topologies(n)
            .unwrap()
            .iter()
            .map(opens_key)
            .collect();
        let slow = brute_force_topologies(n);
        assert_eq!(
            fast.len(),
            enumerate_topologies(n).unwrap().len(),
            "duplicates at n={n}"
        );
        assert_eq!(fast, slow, "n={n}");
    }
}

#[test]
fn enumeration_matches_preorder_closures() {
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|(x, y)| x != y)
            .collect();
        let mut seen = BTreeSet::new();
        for rel in 0u32..(1u32 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|k| rel & (1 << k) != 0)
                .map(|k| pairs[k])
                .collect();
            seen.insert(opens_key(&from_preorder(n, &chosen).unwrap()));
        }
        let fast: BTreeSet<Vec<u16>> = enumerate_topologies(n)
            .unwrap()
            .iter()
            .map(opens_key)
            .collect();
        assert_eq!(fast, seen, "n={n}");
    }
}

#[test]
fn closure_and_neighbourhoods_match_definitions() {
    for n in 0..=3 {
        for s in enumerate_topologies(n).unwrap() {
            let closed = s.closed_sets();
            for a in s.ground().subsets() {
                let oracle = closed
                    .iter()
                    .filter(|c| a.is_subset(**c))
                    .fold(s.ground(), |acc, &c| acc.intersection(c));
                assert_eq!(s.closure(a), oracle, "{} closure of {a}", s.canonical_key());
            }
            for x in 0..n {
                let oracle = s
                    .opens()
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(s.ground(), |acc, &u| acc.intersection(u));
                assert_eq!(s.min_nbhd(x), oracle);
            }
        }
    }
}

#[test]
fn separated_points_match_open_pairs() {
    for n in 0..=4 {
        for s in enumerate_topologies(n).unwrap() {
            let oracle: PointSet = (0..n)
                .filter(|&y| {
                    let cl = s.point_closure(y);
                    (0..n).filter(|&z| !cl.contains(z)).all(|z| {
                        s.opens().iter().any(|&u| {
                            u.contains(y) && s.opens().iter().any(|&v| v.contains(z) && !u.meets(v))
                        })
                    })
                })
                .collect();
            assert_eq!(s.separated_points(), oracle, "{}", s.canonical_key());
        }
    }
}

#[test]
fn limit_sets_match_oracle_exhaustively() {
    let mut checked = 0;
    for n in 0..=3 {
        for s in enumerate_topologies(n).unwrap() {
            for l in s.ground().subsets() {
                let fast = is_limit_set(&s, l);
                assert_eq!(
                    fast,
                    is_limit_set_oracle(&s, l).unwrap(),
                    "{} L={l}",
                    s.canonical_key()
                );
                assert_eq!(fast, limit_witness(&s, l).is_some());
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 1 + 2 + 4 * 4 + 29 * 8);
}

#[test]
fn limit_sets_match_oracle_on_samples() {
    let spaces = enumerate_topologies(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let s = &spaces[rng.random_range(0..spaces.len())];
        let l = PointSet::from_mask(rng.random_range(0..16u16));
        assert_eq!(
            is_limit_set(s, l),
            is_limit_set_oracle(s, l).unwrap(),
            "{} L={l}",
            s.canonical_key()
        );
    }
}

#[test]
fn neighbourhoods_match_basic_open_intersections() {
    for n in 0..=3 {
        for s in enumerate_topologies(n).unwrap() {
            let s = Arc::new(s);
            for kind in CarrierKind::ALL {
                let c = carrier(&s, kind);
                for flavor in Flavor::BOTH {
                    let t = build_topology(&c, flavor);
                    for (i, &a) in c.elements().iter().enumerate() {
                        let oracle = min_nbhd_oracle(&c, flavor, a).unwrap();
                        assert_eq!(
                            t.min_nbhd(i),
                            &oracle,
                            "{} {kind} {flavor} at {a}",
                            s.canonical_key()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn carriers_match_definitions() {
    for n in 0..=4 {
        for s in enumerate_topologies(n).unwrap() {
            let s = Arc::new(s);
            let closed: Vec<PointSet> = s
                .ground()
                .subsets()
                .filter(|&a| s.is_open(a.complement(n)))
                .collect();
            let limits: Vec<PointSet> = closed
                .iter()
                .copied()
                .filter(|&a| is_limit_set(&s, a))
                .collect();
            let mut sorted = closed.clone();
            sorted.sort();
            assert_eq!(carrier(&s, CarrierKind::F).elements(), sorted.as_slice());
            let maximal: BTreeSet<PointSet> = limits
                .iter()
                .copied()
                .filter(|a| !a.is_empty() && limits.iter().all(|b| !a.is_subset(*b) || a == b))
                .collect();
            let got: BTreeSet<PointSet> = carrier(&s, CarrierKind::ML)
                .elements()
                .iter()
                .copied()
                .collect();
            assert_eq!(got, maximal, "{}", s.canonical_key());
        }
    }
}

#[test]
fn open_set_enumeration_matches_subset_filter() {
    for s in enumerate_topologies(3).unwrap() {
        let s = Arc::new(s);
        let c = carrier(&s, CarrierKind::F);
        for flavor in Flavor::BOTH {
            let alex = build_topology(&c, flavor).alexandrov().clone();
            let m = alex.len();
            let mut brute = BTreeSet::new();
            for mask in 0u32..(1u32 << m) {
                let mut u = IndexSet::with_capacity(m);
                u.extend((0..m).filter(|i| mask & (1 << i) != 0));
                if alex.is_open(&u) {
                    brute.insert(mask);
                }
            }
            let fast: BTreeSet<u32> = alex
                .open_sets(usize::MAX)
                .unwrap()
                .iter()
                .map(|u| u.ones().map(|i| 1u32 << i).sum())
                .collect();
            assert_eq!(fast, brute);
        }
    }
}

#[test]
fn inclusion_closure_matches_pairwise_definition() {
    for n in 0..=3 {
        for s in enumerate_topologies(n).unwrap() {
            let s = Arc::new(s);
            let c = carrier(&s, CarrierKind::L);
            let t = build_topology(&c, Flavor::Strong);
            let p = product_topology(&t, &t);
            let m = c.len();
            let e = inclusion_relation(&c);
            let closure = p.closure(&e);
            for i in 0..m {
                for j in 0..m {
                    // (i, j) is in the closure iff N(i) × N(j) meets E.
                    let hit = t
                        .min_nbhd(i)
                        .ones()
                        .any(|a| t.min_nbhd(j).ones().any(|b| c.get(a).is_subset(c.get(b))));
                    assert_eq!(closure.contains(i * m + j), hit);
                }
            }
        }
    }
}

/// On honest hyperspaces no fabricated witness may re-validate: every claim
/// is a theorem, so the witness checker must reject all of them.
#[test]
fn honest_spaces_reject_every_fabricated_witness() {
    let set_claims = [
        Claim::ClosureOfSingleton,
        Claim::EtaClosure,
        Claim::FprimeDense,
        Claim::LprimeDense,
        Claim::MlDense,
        Claim::ContinuityIffMaximal,
        Claim::MlTopologiesAgree,
        Claim::SeparatedIffMaximal,
        Claim::MlSubsetOfL,
        Claim::SeparatedPointsIdentity,
        Claim::SeparatedPointsDense,
    ];
    let pair_claims = [
        Claim::WeakT0,
        Claim::MlOpenInL,
        Claim::SeparatedPointsOpen,
        Claim::InclusionClosed,
    ];
    for n in 0..=3 {
        for s in enumerate_topologies(n).unwrap() {
            let key = s.canonical_key();
            let ctx = Hyperspaces::new(s);
            let closed = ctx.space().closed_sets();
            for &a in &closed {
                for claim in set_claims {
                    assert!(
                        !confirm_witness(&ctx, &Witness::new(claim, Evidence::Set(a))),
                        "{key} {claim:?} {a}"
                    );
                }
                for flavor in Flavor::BOTH {
                    let w = Witness::new(Claim::LClosed, Evidence::Set(a)).with_flavor(flavor);
                    assert!(!confirm_witness(&ctx, &w));
                }
                for &b in &closed {
                    for claim in pair_claims {
                        let w = Witness::new(claim, Evidence::Pair(a, b));
                        assert!(!confirm_witness(&ctx, &w), "{key} {claim:?} {a} {b}");
                    }
                    for kind in [CarrierKind::F, CarrierKind::L] {
                        let w = Witness::new(Claim::FellHausdorff, Evidence::Pair(a, b))
                            .on(kind, Flavor::Strong);
                        assert!(!confirm_witness(&ctx, &w));
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for claim in [Claim::EtaContinuous, Claim::EtaEmbedding] {
                        assert!(!confirm_witness(
                            &ctx,
                            &Witness::new(claim, Evidence::Points(x, y))
                        ));
                    }
                }
            }
        }
    }
}
