use rand::SeedableRng;

use super::checks::{dense_open_core, sandwich_violation};
use super::{Claim, Evidence, Hyperspaces, VerifyOptions, Witness};
use crate::finspace::PointSet;
use crate::hyperspace::{
    conv1_conditions, identity_continuous_at, is_compact_cover, is_primitive, product_min_nbhd,
    seq_limits, EvPerSeq, HyperTopology,
};
use crate::limitsets::{eta, CarrierKind};

use CarrierKind::{Fprime, Lprime, F, L, ML};

/// `B ∈ N(A)`; false when either is outside the carrier.
fn near(t: &HyperTopology, a: PointSet, b: PointSet) -> bool {
    t.in_nbhd(a, b).unwrap_or(false)
}

fn nbhd(t: &HyperTopology, a: PointSet) -> Vec<PointSet> {
    t.carrier()
        .elements()
        .iter()
        .copied()
        .filter(|&b| near(t, a, b))
        .collect()
}

/// `a` lies in the closure of `s` iff its minimal neighbourhood meets `s`.
fn in_closure_of(t: &HyperTopology, s: &[PointSet], a: PointSet) -> bool {
    s.iter().any(|&b| near(t, a, b))
}

fn closure_of_point(t: &HyperTopology, a: PointSet) -> Vec<PointSet> {
    t.carrier()
        .elements()
        .iter()
        .copied()
        .filter(|&b| near(t, b, a))
        .collect()
}

fn separated(t: &HyperTopology, a: PointSet) -> bool {
    let cl = closure_of_point(t, a);
    let na = nbhd(t, a);
    t.carrier()
        .elements()
        .iter()
        .filter(|b| !cl.contains(b))
        .all(|&b| nbhd(t, b).iter().all(|c| !na.contains(c)))
}

/// Re-evaluate a witness against `ctx` using public hyperspace operations.
///
/// Returns true iff the witnessed object really violates the claimed
/// statement; a stale or fabricated witness returns false.
pub fn confirm_witness(ctx: &Hyperspaces, w: &Witness) -> bool {
    confirm_with(ctx, w, &VerifyOptions::default())
}

pub fn confirm_with(ctx: &Hyperspaces, w: &Witness, opts: &VerifyOptions) -> bool {
    let space = ctx.space();
    let kind = w.carrier;
    let flavor = w.flavor;
    match (w.claim, &w.evidence) {
        (Claim::ClosureOfSingleton, &Evidence::Set(a)) => {
            let t = ctx.weak(F);
            let below: Vec<PointSet> = t
                .carrier()
                .elements()
                .iter()
                .copied()
                .filter(|b| b.is_subset(a))
                .collect();
            t.carrier().contains(a) && closure_of_point(t, a) != below
        }
        (Claim::WeakT0, &Evidence::Pair(a, b)) => {
            let t = ctx.weak(F);
            a != b
                && t.carrier().contains(a)
                && t.carrier().contains(b)
                && closure_of_point(t, a) == closure_of_point(t, b)
        }
        (Claim::EtaClosure, &Evidence::Set(a)) => {
            let t = ctx.weak(F);
            let image: Vec<PointSet> = (0..space.len()).map(|x| eta(space, x)).collect();
            if image.iter().any(|&e| !t.carrier().contains(e)) {
                return image.contains(&a);
            }
            if !t.carrier().contains(a) {
                return ctx.carrier(L).contains(a);
            }
            in_closure_of(t, &image, a) != ctx.carrier(L).contains(a)
        }
        (Claim::FprimeDense | Claim::LprimeDense | Claim::MlDense, _) if space.is_empty() => false,
        (Claim::FprimeDense, &Evidence::Set(a)) => {
            dense_violation(ctx.weak(F), ctx.carrier(Fprime).elements(), a)
        }
        (Claim::LprimeDense, &Evidence::Set(a)) => {
            dense_violation(ctx.weak(L), ctx.carrier(Lprime).elements(), a)
        }
        (Claim::MlDense, &Evidence::Set(a)) => {
            dense_violation(ctx.weak(L), ctx.carrier(ML).elements(), a)
        }
        (Claim::LClosed, &Evidence::Set(a)) => {
            let Some(flavor) = flavor else { return false };
            let t = ctx.topology(F, flavor);
            let l = ctx.carrier(L);
            if !t.carrier().contains(a) {
                return l.contains(a);
            }
            !l.contains(a) && in_closure_of(t, l.elements(), a)
        }
        (Claim::EtaContinuous, &Evidence::Points(x, y)) => {
            let t = ctx.weak(F);
            x < space.len()
                && y < space.len()
                && space.min_nbhd(x).contains(y)
                && !near(t, eta(space, x), eta(space, y))
        }
        (Claim::EtaEmbedding, &Evidence::Points(x, y)) => {
            if x >= space.len() || y >= space.len() || !space.is_t0() {
                return false;
            }
            let t = ctx.weak(F);
            let (ex, ey) = (eta(space, x), eta(space, y));
            (x != y && ex == ey) || (near(t, ex, ey) && !space.min_nbhd(x).contains(y))
        }
        (Claim::ContinuityIffMaximal, &Evidence::Set(a)) => {
            let (lw, ls) = (ctx.weak(L), ctx.strong(L));
            match identity_continuous_at(lw, ls, a) {
                Ok(cont) => cont != ctx.carrier(ML).contains(a),
                Err(_) => false,
            }
        }
        (Claim::MlTopologiesAgree, &Evidence::Set(a)) => {
            let (mw, ms) = (ctx.weak(ML), ctx.strong(ML));
            mw.carrier().contains(a) && nbhd(mw, a) != nbhd(ms, a)
        }
        (Claim::SeparatedIffMaximal, &Evidence::Set(a)) => {
            let t = ctx.weak(L);
            t.carrier().contains(a) && separated(t, a) != ctx.carrier(ML).contains(a)
        }
        (Claim::Connectedness, Evidence::Sets(part)) => {
            let t = ctx.weak(L);
            if !space.is_connected() || part.is_empty() || part.len() >= t.len() {
                return false;
            }
            if part.iter().any(|&a| !t.carrier().contains(a)) {
                return false;
            }
            // A proper non-empty part closed under neighbourhoods in both
            // directions is clopen.
            t.carrier().elements().iter().all(|&a| {
                t.carrier()
                    .elements()
                    .iter()
                    .filter(|&&b| near(t, a, b))
                    .all(|b| part.contains(&a) == part.contains(b))
            })
        }
        (Claim::CompactnessLemma, Evidence::Sets(family)) => {
            let t = ctx.weak(F);
            let s = t
                .index_set_of(
                    &t.carrier()
                        .elements()
                        .iter()
                        .copied()
                        .filter(|a| family.iter().all(|&c| a.meets(c)))
                        .collect::<Vec<_>>(),
                )
                .expect("carrier elements");
            let cover: Vec<_> = s.ones().map(|i| t.min_nbhd(i).clone()).collect();
            is_compact_cover(t, &s, &cover) != Ok(true)
        }
        (Claim::LocalCompactness | Claim::OpenCompactBase, Evidence::Hit { at, family }) => {
            let Some(kind) = kind else { return false };
            let t = ctx.weak(kind);
            t.carrier().contains(*at)
                && family.iter().all(|&u| space.is_open(u) && at.meets(u))
                && sandwich_violation(t, space, *at, family).is_some()
        }
        (Claim::Baire, Evidence::Sets(_)) => {
            let Some(kind) = kind else { return false };
            let t = ctx.weak(kind);
            if t.alexandrov().representation_defect().is_some() {
                return false;
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
            let (core, _) = dense_open_core(t.alexandrov(), opts, &mut rng);
            !t.alexandrov().is_dense(&core)
        }
        (Claim::Representation, &Evidence::Pair(a, b)) => {
            let (Some(kind), Some(flavor)) = (kind, flavor) else {
                return false;
            };
            let t = ctx.topology(kind, flavor);
            if !t.carrier().contains(a) || !t.carrier().contains(b) {
                return false;
            }
            let na = nbhd(t, a);
            (a == b && !near(t, a, a))
                || (near(t, a, b) && nbhd(t, b).iter().any(|c| !na.contains(c)))
        }
        (Claim::MlSubsetOfL, &Evidence::Set(a)) => {
            ctx.carrier(ML).contains(a) && !ctx.carrier(L).contains(a)
        }
        (Claim::MlOpenInL, &Evidence::Pair(a, b)) => {
            let ml = ctx.carrier(ML);
            ml.contains(a) && !ml.contains(b) && near(ctx.strong(L), a, b)
        }
        (Claim::SeparatedPointsIdentity, &Evidence::Set(a)) => {
            let sep = space.separated_points();
            let from_sep = sep.iter().any(|x| eta(space, x) == a);
            let is_image = (0..space.len()).any(|x| eta(space, x) == a);
            from_sep != (is_image && ctx.carrier(ML).contains(a))
        }
        (Claim::SeparatedPointsDense, &Evidence::Set(a)) => {
            let t = ctx.weak(ML);
            let images: Vec<PointSet> = space
                .separated_points()
                .iter()
                .map(|x| eta(space, x))
                .collect();
            t.carrier().contains(a) && !in_closure_of(t, &images, a)
        }
        (Claim::SeparatedPointsOpen, &Evidence::Pair(e, b)) => {
            let t = ctx.strong(L);
            let images: Vec<PointSet> = space
                .separated_points()
                .iter()
                .map(|x| eta(space, x))
                .collect();
            if !images.contains(&e) {
                return false;
            }
            if !t.carrier().contains(e) {
                return true;
            }
            near(t, e, b) && !images.contains(&b)
        }
        (Claim::InclusionClosed, &Evidence::Pair(a, b)) => {
            let t = ctx.strong(L);
            if a.is_subset(b) || !t.carrier().contains(a) || !t.carrier().contains(b) {
                return false;
            }
            nbhd(t, a)
                .iter()
                .any(|&a2| nbhd(t, b).iter().any(|&b2| a2.is_subset(b2)))
        }
        (Claim::SliceOpen, Evidence::Relation(pairs)) => {
            let Some(flavor) = flavor else { return false };
            slice_violation(ctx.topology(L, flavor), pairs)
        }
        (Claim::FellHausdorff, &Evidence::Pair(a, b)) => {
            let Some(kind) = kind else { return false };
            let t = ctx.strong(kind);
            a != b && t.carrier().contains(a) && nbhd(t, a).iter().any(|c| near(t, b, *c))
        }
        (
            Claim::FellIffConv1 | Claim::FellIffPrimitive,
            Evidence::Sequence {
                preperiod,
                cycle,
                target,
            },
        ) => {
            let (fw, fs) = (ctx.weak(F), ctx.strong(F));
            let (Ok(pre), Ok(cyc), Ok(a)) = (
                preperiod
                    .iter()
                    .map(|&s| fw.index(s))
                    .collect::<Result<Vec<_>, _>>(),
                cycle
                    .iter()
                    .map(|&s| fw.index(s))
                    .collect::<Result<Vec<_>, _>>(),
                fw.index(*target),
            ) else {
                return false;
            };
            let Ok(seq) = EvPerSeq::new(pre, cyc) else {
                return false;
            };
            let fell = seq_limits(fs, &seq).contains(a);
            if w.claim == Claim::FellIffConv1 {
                let sets =
                    EvPerSeq::new(preperiod.clone(), cycle.clone()).expect("non-empty cycle");
                fell != conv1_conditions(space, &sets, *target).both()
            } else {
                let limits = fw.sets_of(&seq_limits(fw, &seq));
                let below: Vec<PointSet> = fw
                    .carrier()
                    .elements()
                    .iter()
                    .copied()
                    .filter(|b| b.is_subset(*target))
                    .collect();
                fell != (is_primitive(fw, &seq) && limits == below)
            }
        }
        _ => false,
    }
}

fn dense_violation(t: &HyperTopology, subset: &[PointSet], a: PointSet) -> bool {
    if subset.contains(&a) && !t.carrier().contains(a) {
        return true;
    }
    t.carrier().contains(a) && !in_closure_of(t, subset, a)
}

/// True iff `pairs` is open in `t × t` but its slice is not open in `t`.
fn slice_violation(t: &HyperTopology, pairs: &[(PointSet, PointSet)]) -> bool {
    let mut idx = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        match (t.index(a), t.index(b)) {
            (Ok(i), Ok(j)) => idx.push((i, j)),
            _ => return false,
        }
    }
    let open = idx
        .iter()
        .all(|&p| product_min_nbhd(t, t, p).iter().all(|q| idx.contains(q)));
    if !open {
        return false;
    }
    let m = t.len();
    let slice: Vec<PointSet> = (0..m)
        .filter(|&i| (0..m).all(|j| idx.contains(&(i, j))))
        .map(|i| t.carrier().get(i))
        .collect();
    slice
        .iter()
        .any(|&a| nbhd(t, a).iter().any(|b| !slice.contains(b)))
}
