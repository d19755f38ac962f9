//! Finite topological spaces.
//!
//! A space on `n ≤ 16` points is stored as its list of open sets in canonical
//! order, together with the minimal open neighbourhood of every point. Finite
//! spaces are Alexandrov spaces, so those neighbourhoods determine everything.
//!
//! Preorder convention: `x ≤ y` iff `x ∈ cl{y}`, and the opens are exactly the
//! up-sets of `≤`. The minimal neighbourhood of `x` is then `↑x`.

mod enumerate;
mod pointset;

pub use enumerate::{enumerate_topologies, MAX_ENUMERATION_POINTS};
pub use pointset::{canonicalize, PointSet, Points};

use crate::error::{Axiom, Error, Result};

/// A family of subsets of one space's ground set.
pub type SetFamily = Vec<PointSet>;

/// A validated finite topology.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinTopSpace {
    n: usize,
    opens: Vec<PointSet>,
    nbhd: Vec<PointSet>,
}

fn check_ground(n: usize, sets: &[PointSet]) -> Result<()> {
    if n > PointSet::MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    let ground = PointSet::full(n);
    match sets.iter().find(|s| !s.is_subset(ground)) {
        Some(s) => Err(Error::GroundMismatch {
            mask: s.mask() as u64,
            points: n,
        }),
        None => Ok(()),
    }
}

/// Validate a candidate family of opens on `n` points and canonicalize it.
pub fn validate_topology(n: usize, opens: &[PointSet]) -> Result<FinTopSpace> {
    check_ground(n, opens)?;
    let mut family = opens.to_vec();
    canonicalize(&mut family);
    if family.binary_search(&PointSet::EMPTY).is_err() {
        return Err(Error::AxiomViolation(Axiom::ContainsEmpty));
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if family.binary_search(&a.union(b)).is_err() {
                return Err(Error::AxiomViolation(Axiom::UnionClosed(a, b)));
            }
            if family.binary_search(&a.intersection(b)).is_err() {
                return Err(Error::AxiomViolation(Axiom::IntersectionClosed(a, b)));
            }
        }
    }
    if family.binary_search(&PointSet::full(n)).is_err() {
        return Err(Error::AxiomViolation(Axiom::ContainsGround));
    }
    let nbhd = (0..n)
        .map(|x| {
            family
                .iter()
                .filter(|u| u.contains(x))
                .fold(PointSet::full(n), |acc, &u| acc.intersection(u))
        })
        .collect();
    Ok(FinTopSpace {
        n,
        opens: family,
        nbhd,
    })
}

/// Build the space whose opens are the up-sets of the preorder generated by
/// `relation`; a pair `(x, y)` means `x ≤ y`, i.e. `x ∈ cl{y}`.
pub fn from_preorder(n: usize, relation: &[(usize, usize)]) -> Result<FinTopSpace> {
    if n > PointSet::MAX_POINTS {
        return Err(Error::TooManyPoints(n));
    }
    // up[x] = {y : x ≤ y}
    let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
    for &(x, y) in relation {
        if x >= n || y >= n {
            return Err(Error::GroundMismatch {
                mask: 1u64 << x.max(y).min(63),
                points: n,
            });
        }
        up[x] = up[x].insert(y);
    }
    for k in 0..n {
        for x in 0..n {
            if up[x].contains(k) {
                up[x] = up[x].union(up[k]);
            }
        }
    }
    Ok(FinTopSpace::from_min_nbhds(n, up))
}

impl FinTopSpace {
    /// Build from a consistent assignment of minimal neighbourhoods
    /// (`x ∈ N(x)`, and `y ∈ N(x)` implies `N(y) ⊆ N(x)`).
    pub(crate) fn from_min_nbhds(n: usize, nbhd: Vec<PointSet>) -> Self {
        debug_assert_eq!(nbhd.len(), n);
        let mut opens: Vec<PointSet> = PointSet::full(n)
            .subsets()
            .filter(|s| s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(nbhd[x])) == *s)
            .collect();
        canonicalize(&mut opens);
        FinTopSpace { n, opens, nbhd }
    }

    pub fn sierpinski() -> Self {
        from_preorder(2, &[(1, 0)]).expect("valid")
    }

    pub fn discrete(n: usize) -> Self {
        from_preorder(n, &[]).expect("valid")
    }

    pub fn indiscrete(n: usize) -> Self {
        let rel: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        from_preorder(n, &rel).expect("valid")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn ground(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// The open sets, in canonical order.
    #[inline]
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.is_subset(self.ground()) && self.is_open(s.complement(self.n))
    }

    /// The ⊆-least open set containing `x`.
    #[inline]
    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn min_nbhds(&self) -> &[PointSet] {
        &self.nbhd
    }

    /// Smallest closed superset of `s`: the points whose minimal
    /// neighbourhood meets `s`.
    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.nbhd[x].meets(s)).collect()
    }

    /// Complements of the opens, in canonical order.
    pub fn closed_sets(&self) -> SetFamily {
        let mut closed: Vec<PointSet> = self.opens.iter().map(|u| u.complement(self.n)).collect();
        canonicalize(&mut closed);
        closed
    }

    pub fn point_closure(&self, x: usize) -> PointSet {
        self.closure(PointSet::singleton(x))
    }

    pub fn is_t0(&self) -> bool {
        let mut cls: Vec<u16> = (0..self.n).map(|x| self.point_closure(x).mask()).collect();
        cls.sort_unstable();
        cls.windows(2).all(|w| w[0] != w[1])
    }

    /// True iff the only clopen sets are `∅` and the ground set.
    pub fn is_connected(&self) -> bool {
        let ground = self.ground();
        self.opens
            .iter()
            .filter(|&&u| !u.is_empty() && u != ground)
            .all(|&u| !self.is_open(u.complement(self.n)))
    }

    /// Points `y` that can be split by disjoint opens from every `z ∉ cl{y}`.
    pub fn separated_points(&self) -> PointSet {
        (0..self.n)
            .filter(|&y| {
                let cl = self.point_closure(y);
                (0..self.n)
                    .filter(|&z| !cl.contains(z))
                    .all(|z| !self.nbhd[y].meets(self.nbhd[z]))
            })
            .collect()
    }

    /// The specialization preorder as `(x, y)` pairs with `x ∈ cl{y}`,
    /// reflexive pairs included, sorted.
    pub fn specialization_preorder(&self) -> Vec<(usize, usize)> {
        let mut rel = Vec::new();
        for x in 0..self.n {
            for y in self.nbhd[x].iter() {
                rel.push((x, y));
            }
        }
        rel
    }

    /// Stable textual key: point count and the open masks in canonical order.
    pub fn canonical_key(&self) -> String {
        let masks: Vec<String> = self.opens.iter().map(|u| u.mask().to_string()).collect();
        format!("n={};opens={}", self.n, masks.join(","))
    }
}
