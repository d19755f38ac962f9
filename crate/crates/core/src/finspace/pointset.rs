use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of the ground set `{0, .., n-1}` of a finite space, stored as a bitmask.
///
/// Ordering is canonical: first by cardinality, then by mask value. Every
/// family of sets in this crate is kept in that order so output is stable.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(u16);

impl PointSet {
    pub const MAX_POINTS: usize = 16;
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub const fn from_mask(mask: u16) -> Self {
        PointSet(mask)
    }

    #[inline]
    pub const fn mask(self) -> u16 {
        self.0
    }

    /// The ground set of an `n`-point space.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 16 {
            PointSet(u16::MAX)
        } else {
            PointSet(((1u32 << n) - 1) as u16)
        }
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        PointSet(1 << x)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 16 && self.0 & (1 << x) != 0
    }

    #[inline]
    pub const fn insert(self, x: usize) -> Self {
        PointSet(self.0 | (1 << x))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the `n`-point ground set.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    #[inline]
    pub const fn meets(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least element, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let m = self.0 as u32;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == m {
                None
            } else {
                Some(((cur | !m) + 1) & m)
            };
            Some(PointSet(cur as u16))
        })
    }

    /// Render with the given point labels, e.g. `{a,b}`.
    pub fn render(self, labels: &[String]) -> String {
        let mut out = String::from("{");
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            match labels.get(x) {
                Some(l) => out.push_str(l),
                None => out.push_str(&x.to_string()),
            }
        }
        out.push('}');
        out
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(PointSet::EMPTY, PointSet::insert)
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the points of a [`PointSet`], ascending.
#[derive(Clone)]
pub struct Points(u16);

impl Iterator for Points {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Points {}

/// Sort canonically and drop duplicates.
pub fn canonicalize(sets: &mut Vec<PointSet>) {
    sets.sort_unstable();
    sets.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_cardinality_then_mask() {
        let mut v = vec![
            PointSet::from_mask(0b011),
            PointSet::from_mask(0b100),
            PointSet::EMPTY,
            PointSet::from_mask(0b001),
        ];
        canonicalize(&mut v);
        let masks: Vec<u16> = v.iter().map(|s| s.mask()).collect();
        assert_eq!(masks, vec![0, 0b001, 0b100, 0b011]);
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let s = PointSet::from_mask(0b1010);
        let subs: Vec<u16> = s.subsets().map(|p| p.mask()).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
        assert_eq!(PointSet::full(16).subsets().count(), 1 << 16);
    }

    #[test]
    fn render_uses_labels() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert_eq!(PointSet::full(2).render(&labels), "{a,b}");
        assert_eq!(PointSet::EMPTY.render(&labels), "{}");
        assert_eq!(PointSet::from_mask(0b11).to_string(), "{0,1}");
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(PointSet::full(16).mask(), u16::MAX);
        assert_eq!(
            PointSet::singleton(1).complement(3),
            PointSet::from_mask(0b101)
        );
    }
}
