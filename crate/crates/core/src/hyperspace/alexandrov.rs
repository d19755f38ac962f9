use fixedbitset::FixedBitSet;

/// A set of indices into a carrier (or a product of carriers).
pub type IndexSet = FixedBitSet;

/// A finite topology on `{0, .., m-1}` given by the minimal open
/// neighbourhood of every point.
///
/// Opens are exactly the unions of minimal neighbourhoods. The representation
/// is only meaningful when it is reflexive (`i ∈ N(i)`) and transitive
/// (`j ∈ N(i) ⇒ N(j) ⊆ N(i)`); [`Alexandrov::representation_defect`] reports
/// the first violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alexandrov {
    nbhds: Vec<IndexSet>,
}

impl Alexandrov {
    pub fn new(nbhds: Vec<IndexSet>) -> Self {
        Alexandrov { nbhds }
    }

    /// Discrete topology on `m` points.
    pub fn discrete(m: usize) -> Self {
        Alexandrov::new((0..m).map(|i| singleton(m, i)).collect())
    }

    pub fn len(&self) -> usize {
        self.nbhds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nbhds.is_empty()
    }

    pub fn nbhd(&self, i: usize) -> &IndexSet {
        &self.nbhds[i]
    }

    pub(crate) fn nbhd_mut(&mut self, i: usize) -> &mut IndexSet {
        &mut self.nbhds[i]
    }

    pub fn empty_set(&self) -> IndexSet {
        IndexSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> IndexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// `{i : N(i) ∩ s ≠ ∅}`.
    pub fn closure(&self, s: &IndexSet) -> IndexSet {
        let mut out = self.empty_set();
        for (i, n) in self.nbhds.iter().enumerate() {
            if !n.is_disjoint(s) {
                out.insert(i);
            }
        }
        out
    }

    /// Largest open subset of `s`.
    pub fn interior(&self, s: &IndexSet) -> IndexSet {
        let mut out = self.empty_set();
        for (i, n) in self.nbhds.iter().enumerate() {
            if n.is_subset(s) {
                out.insert(i);
            }
        }
        out
    }

    pub fn is_open(&self, s: &IndexSet) -> bool {
        s.ones().all(|i| self.nbhds[i].is_subset(s))
    }

    pub fn is_closed(&self, s: &IndexSet) -> bool {
        self.closure(s) == *s
    }

    pub fn is_dense(&self, s: &IndexSet) -> bool {
        self.closure(s).count_ones(..) == self.len()
    }

    /// `i` is separated iff every `j` outside `cl{i}` has a neighbourhood
    /// disjoint from one of `i`.
    pub fn is_separated(&self, i: usize) -> bool {
        let cl = self.closure(&singleton(self.len(), i));
        (0..self.len())
            .filter(|&j| !cl.contains(j))
            .all(|j| self.nbhds[i].is_disjoint(&self.nbhds[j]))
    }

    pub fn is_hausdorff(&self) -> bool {
        (0..self.len())
            .all(|i| (i + 1..self.len()).all(|j| self.nbhds[i].is_disjoint(&self.nbhds[j])))
    }

    /// Connected components of the graph joining `i` to every `j ∈ N(i)`;
    /// for a valid representation these are the topological components.
    pub fn components(&self) -> Vec<IndexSet> {
        let m = self.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for i in 0..m {
            for j in self.nbhds[i].ones() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut comps: Vec<IndexSet> = Vec::new();
        for i in 0..m {
            let r = find(&mut parent, i);
            let k = match roots.iter().position(|&x| x == r) {
                Some(k) => k,
                None => {
                    roots.push(r);
                    comps.push(self.empty_set());
                    comps.len() - 1
                }
            };
            comps[k].insert(i);
        }
        comps
    }

    /// The empty space counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// First `(i, j)` violating reflexivity (`i == j`, `i ∉ N(i)`) or
    /// transitivity (`j ∈ N(i)` but `N(j) ⊄ N(i)`).
    pub fn representation_defect(&self) -> Option<(usize, usize)> {
        for (i, n) in self.nbhds.iter().enumerate() {
            if !n.contains(i) {
                return Some((i, i));
            }
            if let Some(j) = n.ones().find(|&j| !self.nbhds[j].is_subset(n)) {
                return Some((i, j));
            }
        }
        None
    }

    /// All open sets, or `None` once more than `limit` have been produced.
    ///
    /// Backtracks over points in index order: including `i` forces `N(i)` in,
    /// excluding it forces out every `j` with `i ∈ N(j)`. Assumes a valid
    /// representation.
    pub fn open_sets(&self, limit: usize) -> Option<Vec<IndexSet>> {
        let m = self.len();
        let mut star: Vec<IndexSet> = (0..m).map(|_| self.empty_set()).collect();
        for (j, n) in self.nbhds.iter().enumerate() {
            for i in n.ones() {
                star[i].insert(j);
            }
        }
        let mut out = Vec::new();
        let ok = self.open_sets_from(
            0,
            self.empty_set(),
            self.empty_set(),
            &star,
            limit,
            &mut out,
        );
        ok.then_some(out)
    }

    fn open_sets_from(
        &self,
        from: usize,
        inside: IndexSet,
        outside: IndexSet,
        star: &[IndexSet],
        limit: usize,
        out: &mut Vec<IndexSet>,
    ) -> bool {
        let next = (from..self.len()).find(|&i| !inside.contains(i) && !outside.contains(i));
        let Some(i) = next else {
            if out.len() >= limit {
                return false;
            }
            out.push(inside);
            return true;
        };
        let mut with = inside.clone();
        with.union_with(&self.nbhds[i]);
        if with.is_disjoint(&outside)
            && !self.open_sets_from(i + 1, with, outside.clone(), star, limit, out)
        {
            return false;
        }
        let mut without = outside;
        without.union_with(&star[i]);
        if without.is_disjoint(&inside) {
            return self.open_sets_from(i + 1, inside, without, star, limit, out);
        }
        true
    }

    /// Product topology; the pair `(i, j)` has index `i * other.len() + j`.
    pub fn product(&self, other: &Alexandrov) -> Alexandrov {
        let (m1, m2) = (self.len(), other.len());
        let mut nbhds = Vec::with_capacity(m1 * m2);
        for i in 0..m1 {
            for j in 0..m2 {
                let mut n = IndexSet::with_capacity(m1 * m2);
                for a in self.nbhds[i].ones() {
                    for b in other.nbhds[j].ones() {
                        n.insert(a * m2 + b);
                    }
                }
                nbhds.push(n);
            }
        }
        Alexandrov::new(nbhds)
    }
}

pub fn singleton(m: usize, i: usize) -> IndexSet {
    let mut s = IndexSet::with_capacity(m);
    s.insert(i);
    s
}

pub fn index_set(m: usize, items: impl IntoIterator<Item = usize>) -> IndexSet {
    let mut s = IndexSet::with_capacity(m);
    s.extend(items);
    s
}
