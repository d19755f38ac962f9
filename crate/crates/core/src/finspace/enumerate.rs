use super::{FinTopSpace, PointSet};
use crate::error::{Error, Result};

/// Largest ground set `enumerate_topologies` accepts.
pub const MAX_ENUMERATION_POINTS: usize = 5;

/// Every labeled topology on `n` points, each exactly once.
///
/// Spaces are generated by choosing a minimal neighbourhood `N(x) ∋ x` for each
/// point in turn, pruning any choice that breaks `y ∈ N(x) ⇒ N(y) ⊆ N(x)`.
/// Consistent assignments are in bijection with topologies. The order is the
/// lexicographic order of `(N(0), .., N(n-1))` under canonical set ordering.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FinTopSpace>> {
    if n > MAX_ENUMERATION_POINTS {
        return Err(Error::BudgetExceeded(format!(
            "topology enumeration is limited to {MAX_ENUMERATION_POINTS} points, got {n}"
        )));
    }
    let ground = PointSet::full(n);
    // Candidate neighbourhoods per point, in canonical order.
    let candidates: Vec<Vec<PointSet>> = (0..n)
        .map(|x| {
            let mut c: Vec<PointSet> = ground.subsets().filter(|s| s.contains(x)).collect();
            c.sort_unstable();
            c
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    extend(n, &candidates, &mut chosen, &mut out);
    Ok(out)
}

fn extend(
    n: usize,
    candidates: &[Vec<PointSet>],
    chosen: &mut Vec<PointSet>,
    out: &mut Vec<FinTopSpace>,
) {
    let x = chosen.len();
    if x == n {
        out.push(FinTopSpace::from_min_nbhds(n, chosen.clone()));
        return;
    }
    for &nx in &candidates[x] {
        let consistent = chosen.iter().enumerate().all(|(y, &ny)| {
            (!nx.contains(y) || ny.is_subset(nx)) && (!ny.contains(x) || nx.is_subset(ny))
        });
        if consistent {
            chosen.push(nx);
            extend(n, candidates, chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=3)
            .map(|n| enumerate_topologies(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29]);
    }

    #[test]
    fn rejects_large_n() {
        assert!(matches!(
            enumerate_topologies(6),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_topologies(3).unwrap();
        let b = enumerate_topologies(3).unwrap();
        assert_eq!(a, b);
        // First: every point's nbhd is the singleton, i.e. discrete.
        assert_eq!(a[0], FinTopSpace::discrete(3));
    }
}
