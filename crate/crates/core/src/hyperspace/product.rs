//! Products of hyperspace topologies and the slice operator
//! `S(M) = {A : {A} × Y ⊆ M}`.

use super::{Alexandrov, HyperTopology, IndexSet};
use crate::limitsets::HyperCarrier;

/// Product of the two topologies; pair `(i, j)` has index `i * t2.len() + j`.
pub fn product_topology(t1: &HyperTopology, t2: &HyperTopology) -> Alexandrov {
    t1.alexandrov().product(t2.alexandrov())
}

/// `N(i) × N(j)` as index pairs, row-major.
pub fn product_min_nbhd(
    t1: &HyperTopology,
    t2: &HyperTopology,
    (i, j): (usize, usize),
) -> Vec<(usize, usize)> {
    let right: Vec<usize> = t2.min_nbhd(j).ones().collect();
    t1.min_nbhd(i)
        .ones()
        .flat_map(|a| right.iter().map(move |&b| (a, b)))
        .collect()
}

/// `{i : (i, j) ∈ m for every j}` for `m` over a `left × right` product.
pub fn s_of(m: &IndexSet, left: usize, right: usize) -> IndexSet {
    let mut out = IndexSet::with_capacity(left);
    for i in 0..left {
        if (0..right).all(|j| m.contains(i * right + j)) {
            out.insert(i);
        }
    }
    out
}

/// `E = {(A, B) : A ⊆ B}` over `carrier × carrier`.
pub fn inclusion_relation(carrier: &HyperCarrier) -> IndexSet {
    let m = carrier.len();
    let mut e = IndexSet::with_capacity(m * m);
    for (i, &a) in carrier.elements().iter().enumerate() {
        for (j, &b) in carrier.elements().iter().enumerate() {
            if a.is_subset(b) {
                e.insert(i * m + j);
            }
        }
    }
    e
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::finspace::FinTopSpace;
    use crate::hyperspace::{build_topology, Flavor};
    use crate::limitsets::{carrier, CarrierKind};

    #[test]
    fn inclusion_is_closed_for_fell_on_sierpinski() {
        let l = carrier(&Arc::new(FinTopSpace::sierpinski()), CarrierKind::L);
        let s = build_topology(&l, Flavor::Strong);
        let p = product_topology(&s, &s);
        let e = inclusion_relation(&l);
        // ∅ ⊆ everything, {1} ⊆ {1}, {1} ⊆ X, X ⊆ X.
        assert_eq!(e.count_ones(..), 6);
        assert!(p.is_closed(&e));
    }

    #[test]
    fn slice_of_whole_product_is_everything() {
        let m = IndexSet::with_capacity(12);
        assert_eq!(s_of(&m, 3, 4).count_ones(..), 0);
        let mut full = IndexSet::with_capacity(12);
        full.insert_range(..);
        assert_eq!(s_of(&full, 3, 4).count_ones(..), 3);
    }

    #[test]
    fn product_nbhd_pairs() {
        let l = carrier(&Arc::new(FinTopSpace::sierpinski()), CarrierKind::L);
        let w = build_topology(&l, Flavor::Weak);
        // N_w(∅) = L, N_w(X) = {X}.
        assert_eq!(
            product_min_nbhd(&w, &w, (0, 2)),
            vec![(0, 2), (1, 2), (2, 2)]
        );
    }
}
