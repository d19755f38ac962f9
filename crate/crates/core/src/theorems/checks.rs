use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    CheckId, CheckResult, Claim, Evidence, Hyperspaces, SeqBudget, VerifyOptions, Witness,
};
use crate::error::Result;
use crate::finspace::{FinTopSpace, PointSet};
use crate::hyperspace::inclusion_relation;
use crate::hyperspace::{
    conv1_conditions, hyper_closure, identity_continuous_at, index_set, is_compact_cover,
    is_connected_hyper, is_hausdorff, is_primitive, is_separated_in, product_topology, s_of,
    seq_limits, sequences, singleton, Alexandrov, Flavor, HyperTopology, IndexSet,
};
use crate::limitsets::{eta, CarrierKind};

use CarrierKind::{Fprime, Lprime, F, L, ML};

/// Collects the first witness of a check plus its notes.
struct Tally {
    id: CheckId,
    witness: Option<Witness>,
    notes: Vec<String>,
}

impl Tally {
    fn new(id: CheckId) -> Self {
        Tally {
            id,
            witness: None,
            notes: Vec::new(),
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn fail(&mut self, w: Witness) {
        if self.witness.is_none() {
            self.witness = Some(w);
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self) -> CheckResult {
        let status = if self.witness.is_some() {
            super::Status::Fail
        } else {
            self.id.success_status()
        };
        CheckResult {
            check_id: self.id,
            status,
            witness: self.witness,
            notes: self.notes,
        }
    }
}

/// Carrier indices of `sets`; the first set missing from the carrier is returned as `Err`.
fn indices(
    t: &HyperTopology,
    sets: impl IntoIterator<Item = PointSet>,
) -> std::result::Result<IndexSet, PointSet> {
    let mut s = t.alexandrov().empty_set();
    for a in sets {
        s.insert(t.carrier().index_of(a).ok_or(a)?);
    }
    Ok(s)
}

fn first_outside(t: &HyperTopology, s: &IndexSet) -> Option<PointSet> {
    (0..t.len())
        .find(|&i| !s.contains(i))
        .map(|i| t.carrier().get(i))
}

fn rng_for(ctx: &Hyperspaces, opts: &VerifyOptions, salt: u64) -> ChaCha8Rng {
    // FNV-1a over the canonical key keeps samples a function of the space.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in ctx.space().canonical_key().bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(opts.seed ^ h ^ salt)
}

/// All opens of `alex` when there are at most `opts.open_limit`, otherwise
/// `opts.samples` random unions of minimal neighbourhoods plus `∅` and the
/// whole space. The flag tells which.
fn open_family(
    alex: &Alexandrov,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> (Vec<IndexSet>, bool) {
    if let Some(all) = alex.open_sets(opts.open_limit) {
        return (all, true);
    }
    let mut out = vec![alex.empty_set(), alex.full_set()];
    for _ in 0..opts.samples {
        let mut u = alex.empty_set();
        for i in 0..alex.len() {
            if rng.random_bool(0.5) {
                u.union_with(alex.nbhd(i));
            }
        }
        out.push(u);
    }
    (out, false)
}

fn basis_cover(alex: &Alexandrov, s: &IndexSet) -> Vec<IndexSet> {
    s.ones().map(|i| alex.nbhd(i).clone()).collect()
}

fn representation_witness(t: &HyperTopology) -> Option<Witness> {
    t.alexandrov().representation_defect().map(|(i, j)| {
        Witness::new(
            Claim::Representation,
            Evidence::Pair(t.carrier().get(i), t.carrier().get(j)),
        )
        .on(t.kind(), t.flavor())
    })
}

pub fn check_closure_singleton(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::ClosureSingleton);
    let t = ctx.weak(F);
    let m = t.len();
    let closures: Vec<IndexSet> = (0..m).map(|i| hyper_closure(t, &singleton(m, i))).collect();
    for (i, &a) in t.carrier().elements().iter().enumerate() {
        let below = index_set(m, (0..m).filter(|&j| t.carrier().get(j).is_subset(a)));
        if closures[i] != below {
            r.fail(Witness::new(Claim::ClosureOfSingleton, Evidence::Set(a)));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if closures[i] == closures[j] {
                r.fail(Witness::new(
                    Claim::WeakT0,
                    Evidence::Pair(t.carrier().get(i), t.carrier().get(j)),
                ));
            }
        }
    }
    r.note("(F, tau_w) is T0: distinct closed sets have distinct closures");
    r.finish()
}

fn check_density(ctx: &Hyperspaces, r: &mut Tally) {
    let fw = ctx.weak(F);
    match indices(fw, ctx.carrier(Fprime).elements().iter().copied()) {
        Err(a) => r.fail(Witness::new(Claim::FprimeDense, Evidence::Set(a))),
        Ok(s) => {
            if let Some(a) = first_outside(fw, &hyper_closure(fw, &s)) {
                r.fail(Witness::new(Claim::FprimeDense, Evidence::Set(a)));
            }
        }
    }

    let lw = ctx.weak(L);
    for (kind, claim) in [(Lprime, Claim::LprimeDense), (ML, Claim::MlDense)] {
        match indices(lw, ctx.carrier(kind).elements().iter().copied()) {
            Err(a) => r.fail(Witness::new(claim, Evidence::Set(a))),
            Ok(s) => {
                if let Some(a) = first_outside(lw, &hyper_closure(lw, &s)) {
                    r.fail(Witness::new(claim, Evidence::Set(a)));
                }
            }
        }
    }
}

pub fn check_eta_closure_and_density(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::EtaClosureAndDensity);
    let space = ctx.space();
    let n = space.len();
    let fw = ctx.weak(F);
    let etas: Vec<PointSet> = (0..n).map(|x| eta(space, x)).collect();

    match indices(fw, etas.iter().copied()) {
        Err(a) => r.fail(Witness::new(Claim::EtaClosure, Evidence::Set(a))),
        Ok(image) => {
            let cl = hyper_closure(fw, &image);
            let l = ctx.carrier(L);
            for (i, &a) in fw.carrier().elements().iter().enumerate() {
                if cl.contains(i) != l.contains(a) {
                    r.fail(Witness::new(Claim::EtaClosure, Evidence::Set(a)));
                }
            }
            if let Some(&a) = l.elements().iter().find(|&&a| !fw.carrier().contains(a)) {
                r.fail(Witness::new(Claim::EtaClosure, Evidence::Set(a)));
            }
        }
    }

    if n == 0 {
        // F' is empty and F = {∅}; the density claims need a nonempty space.
        r.note("hypothesis not met: the space is empty, density claims skipped");
    } else {
        check_density(ctx, &mut r);
    }

    for flavor in Flavor::BOTH {
        let t = ctx.topology(F, flavor);
        match indices(t, ctx.carrier(L).elements().iter().copied()) {
            Err(a) => r.fail(Witness::new(Claim::LClosed, Evidence::Set(a)).with_flavor(flavor)),
            Ok(s) => {
                let cl = hyper_closure(t, &s);
                if let Some(i) = cl.ones().find(|&i| !s.contains(i)) {
                    r.fail(
                        Witness::new(Claim::LClosed, Evidence::Set(t.carrier().get(i)))
                            .with_flavor(flavor),
                    );
                }
            }
        }
    }

    // η is continuous, and open onto its image; injective exactly when T0.
    for x in 0..n {
        for y in 0..n {
            let (Ok(ex), Ok(ey)) = (fw.index(etas[x]), fw.index(etas[y])) else {
                continue;
            };
            let in_base = space.min_nbhd(x).contains(y);
            let in_hyper = fw.min_nbhd(ex).contains(ey);
            if in_base && !in_hyper {
                r.fail(Witness::new(Claim::EtaContinuous, Evidence::Points(x, y)));
            }
            if space.is_t0() && ((x != y && ex == ey) || (in_hyper && !in_base)) {
                r.fail(Witness::new(Claim::EtaEmbedding, Evidence::Points(x, y)));
            }
        }
    }
    if !space.is_t0() {
        r.note("space is not T0, so eta is not injective; embedding claim not asserted");
    }
    r.finish()
}

pub fn check_cont_iff_maximal(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::ContIffMaximal);
    let (w, s) = (ctx.weak(L), ctx.strong(L));
    let ml = ctx.carrier(ML);
    for &a in w.carrier().elements() {
        let cont = identity_continuous_at(w, s, a).unwrap_or(false);
        if cont != ml.contains(a) {
            r.fail(Witness::new(Claim::ContinuityIffMaximal, Evidence::Set(a)));
        }
    }
    let (mw, ms) = (ctx.weak(ML), ctx.strong(ML));
    for (i, &a) in mw.carrier().elements().iter().enumerate() {
        if mw.sets_of(mw.min_nbhd(i)) != ms.sets_of(ms.min_nbhd(i)) {
            r.fail(Witness::new(Claim::MlTopologiesAgree, Evidence::Set(a)));
        }
    }
    r.finish()
}

pub fn check_separated_iff_maximal(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::SeparatedIffMaximal);
    let w = ctx.weak(L);
    let ml = ctx.carrier(ML);
    for &a in w.carrier().elements() {
        let sep = is_separated_in(w, a).unwrap_or(false);
        if sep != ml.contains(a) {
            r.fail(Witness::new(Claim::SeparatedIffMaximal, Evidence::Set(a)));
        }
    }
    r.finish()
}

pub fn check_connectedness(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::Connectedness);
    if !ctx.space().is_connected() {
        r.note("hypothesis not met: the space is disconnected");
        return r.finish();
    }
    let w = ctx.weak(L);
    if !is_connected_hyper(w) {
        let comps = w.alexandrov().components();
        r.fail(Witness::new(
            Claim::Connectedness,
            Evidence::Sets(w.sets_of(&comps[0])),
        ));
    }
    r.finish()
}

/// The families `C_1, .., C_k` exercised by default: the empty family and
/// every family of at most two non-empty subsets.
pub fn default_families(n: usize) -> Vec<Vec<PointSet>> {
    let subsets: Vec<PointSet> = PointSet::full(n)
        .subsets()
        .filter(|s| !s.is_empty())
        .collect();
    let mut out = vec![Vec::new()];
    for (i, &a) in subsets.iter().enumerate() {
        out.push(vec![a]);
        for &b in &subsets[i + 1..] {
            out.push(vec![a, b]);
        }
    }
    out
}

/// `S = {A ∈ F : A meets every C_i}` is `τ_w`-compact, for each family.
pub fn check_compactness_lemma(ctx: &Hyperspaces, families: &[Vec<PointSet>]) -> CheckResult {
    let mut r = Tally::new(CheckId::CompactnessLemma);
    let t = ctx.weak(F);
    for family in families {
        let s = index_set(
            t.len(),
            (0..t.len()).filter(|&i| family.iter().all(|&c| t.carrier().get(i).meets(c))),
        );
        let cover = basis_cover(t.alexandrov(), &s);
        if is_compact_cover(t, &s, &cover) != Ok(true) {
            r.fail(
                Witness::new(Claim::CompactnessLemma, Evidence::Sets(family.clone()))
                    .on(F, Flavor::Weak),
            );
        }
    }
    r.note(format!(
        "finite space: every subset is compact; subcovers extracted from basis covers of S for {} families",
        families.len()
    ));
    r.finish()
}

/// Outcome of the local-compactness construction at one point and basic
/// neighbourhood: `None` when the sandwich and the open-compact base both hold.
pub(crate) fn sandwich_violation(
    t: &HyperTopology,
    space: &FinTopSpace,
    a: PointSet,
    phi: &[PointSet],
) -> Option<Claim> {
    let alex = t.alexandrov();
    let hitting = |sets: &[PointSet]| {
        index_set(
            t.len(),
            (0..t.len()).filter(|&j| sets.iter().all(|&o| t.carrier().get(j).meets(o))),
        )
    };
    let outer = hitting(phi);
    let open_compact =
        |s: &IndexSet| alex.is_open(s) && is_compact_cover(t, s, &basis_cover(alex, s)) == Ok(true);
    if !open_compact(&outer) {
        return Some(Claim::OpenCompactBase);
    }
    let inner_sets: Vec<PointSet> = phi
        .iter()
        .map(|&u| {
            space.min_nbhd(
                a.intersection(u)
                    .first()
                    .expect("a meets every member of phi"),
            )
        })
        .collect();
    let inner = hitting(&inner_sets);
    let ok = t.index(a).is_ok_and(|i| inner.contains(i))
        && inner.is_subset(&outer)
        && open_compact(&inner);
    (!ok).then_some(Claim::LocalCompactness)
}

pub fn check_local_compactness(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::LocalCompactness);
    let space = ctx.space();
    let mut base: Vec<PointSet> = space.min_nbhds().to_vec();
    crate::finspace::canonicalize(&mut base);
    for kind in [F, Fprime, L, Lprime] {
        let t = ctx.weak(kind);
        let mut sandwiches = 0usize;
        for &a in t.carrier().elements() {
            for mask in 0u32..(1u32 << base.len()) {
                let phi: Vec<PointSet> = (0..base.len())
                    .filter(|k| mask & (1 << k) != 0)
                    .map(|k| base[k])
                    .collect();
                if !phi.iter().all(|&u| a.meets(u)) {
                    continue;
                }
                sandwiches += 1;
                if let Some(claim) = sandwich_violation(t, space, a, &phi) {
                    r.fail(
                        Witness::new(claim, Evidence::Hit { at: a, family: phi })
                            .on(kind, Flavor::Weak),
                    );
                }
            }
        }
        r.note(format!(
            "{kind}: {sandwiches} compact sandwiches U(empty, {{N(x_i)}}) built"
        ));
    }
    r.note("finite space: the minimal neighbourhoods N(x) form a base of compact opens");
    r.finish()
}

/// Intersection of every dense open of `alex` (all of them, or a sample).
pub(crate) fn dense_open_core(
    alex: &Alexandrov,
    opts: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> (IndexSet, bool) {
    let (opens, exhaustive) = open_family(alex, opts, rng);
    let mut core = alex.full_set();
    for u in opens.iter().filter(|u| alex.is_dense(u)) {
        core.intersect_with(u);
    }
    (core, exhaustive)
}

pub fn check_baire(ctx: &Hyperspaces, opts: &VerifyOptions) -> CheckResult {
    let mut r = Tally::new(CheckId::Baire);
    let space = ctx.space();
    let base = Alexandrov::new(
        (0..space.len())
            .map(|x| index_set(space.len(), space.min_nbhd(x).iter()))
            .collect(),
    );
    let mut rng = rng_for(ctx, opts, 0xba1e);
    let (core, _) = dense_open_core(&base, opts, &mut rng);
    if !base.is_dense(&core) {
        r.note("the space itself fails the Baire property");
    }
    for kind in [L, Lprime, ML] {
        let t = ctx.weak(kind);
        if let Some(w) = representation_witness(t) {
            r.fail(w);
            continue;
        }
        let (core, exhaustive) = dense_open_core(t.alexandrov(), opts, &mut rng);
        if !t.alexandrov().is_dense(&core) {
            r.fail(
                Witness::new(Claim::Baire, Evidence::Sets(t.sets_of(&core))).on(kind, Flavor::Weak),
            );
        }
        let mode = if exhaustive { "all" } else { "sampled" };
        r.note(format!(
            "{kind}: intersection of {mode} dense opens is dense"
        ));
    }
    r.note("finite space: countable families of dense opens are finite");
    r.finish()
}

pub fn check_gdelta_ml(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::GdeltaMl);
    let ml = ctx.carrier(ML);
    let s = ctx.strong(L);
    for &a in ml.elements() {
        let Ok(i) = s.index(a) else {
            r.fail(Witness::new(Claim::MlSubsetOfL, Evidence::Set(a)));
            continue;
        };
        if let Some(b) = s
            .sets_of(s.min_nbhd(i))
            .into_iter()
            .find(|&b| !ml.contains(b))
        {
            r.fail(Witness::new(Claim::MlOpenInL, Evidence::Pair(a, b)).on(L, Flavor::Strong));
        }
    }
    r.note("finite space: G-delta sets are exactly the open sets; checked ML open in (L, tau_s)");
    r.finish()
}

pub fn check_separated_points_corollary(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::SeparatedPointsCorollary);
    let space = ctx.space();
    let ml = ctx.carrier(ML);
    let mut from_separated: Vec<PointSet> = space
        .separated_points()
        .iter()
        .map(|x| eta(space, x))
        .collect();
    crate::finspace::canonicalize(&mut from_separated);
    let mut maximal_images: Vec<PointSet> = (0..space.len())
        .map(|x| eta(space, x))
        .filter(|&e| ml.contains(e))
        .collect();
    crate::finspace::canonicalize(&mut maximal_images);

    let mut all: Vec<PointSet> = from_separated
        .iter()
        .chain(&maximal_images)
        .copied()
        .collect();
    crate::finspace::canonicalize(&mut all);
    for a in all {
        if from_separated.binary_search(&a).is_ok() != maximal_images.binary_search(&a).is_ok() {
            r.fail(Witness::new(
                Claim::SeparatedPointsIdentity,
                Evidence::Set(a),
            ));
        }
    }

    let mw = ctx.weak(ML);
    let in_ml = index_set(
        mw.len(),
        from_separated
            .iter()
            .filter_map(|&a| mw.carrier().index_of(a)),
    );
    if let Some(a) = first_outside(mw, &hyper_closure(mw, &in_ml)) {
        r.fail(Witness::new(Claim::SeparatedPointsDense, Evidence::Set(a)).on(ML, Flavor::Weak));
    }

    let ls = ctx.strong(L);
    for &e in &from_separated {
        match ls.index(e) {
            Err(_) => r.fail(
                Witness::new(Claim::SeparatedPointsOpen, Evidence::Pair(e, e))
                    .on(L, Flavor::Strong),
            ),
            Ok(i) => {
                let escaped = ls
                    .sets_of(ls.min_nbhd(i))
                    .into_iter()
                    .find(|b| from_separated.binary_search(b).is_err());
                if let Some(b) = escaped {
                    r.fail(
                        Witness::new(Claim::SeparatedPointsOpen, Evidence::Pair(e, b))
                            .on(L, Flavor::Strong),
                    );
                }
            }
        }
    }
    r.note("finite space: second countable, locally compact, closed subsets Baire; G-delta read as open");
    r.finish()
}

pub fn check_product_lemmas(ctx: &Hyperspaces, opts: &VerifyOptions) -> CheckResult {
    let mut r = Tally::new(CheckId::ProductLemmas);
    let mut rng = rng_for(ctx, opts, 0x5011);
    let carrier = ctx.carrier(L);
    let m = carrier.len();

    let s = ctx.strong(L);
    let ps = product_topology(s, s);
    let e = inclusion_relation(carrier);
    let cl = ps.closure(&e);
    if let Some(k) = cl.ones().find(|&k| !e.contains(k)) {
        r.fail(
            Witness::new(
                Claim::InclusionClosed,
                Evidence::Pair(carrier.get(k / m), carrier.get(k % m)),
            )
            .on(L, Flavor::Strong),
        );
    }

    for flavor in Flavor::BOTH {
        let t = ctx.topology(L, flavor);
        let p = product_topology(t, t);
        // S is monotone, so S(M) is open for every open M iff it is open for
        // each smallest open containing {A} x L.
        let hulls = (0..m).map(|a| {
            let mut hull = index_set(m * m, (0..m).map(|j| a * m + j));
            loop {
                let mut next = hull.clone();
                for k in hull.ones() {
                    next.union_with(p.nbhd(k));
                }
                if next == hull {
                    break hull;
                }
                hull = next;
            }
        });
        let (opens, exhaustive) = open_family(&p, opts, &mut rng);
        let sampled = if exhaustive { 0 } else { opens.len() };
        if let Some(u) = hulls
            .chain(opens)
            .find(|u| !t.alexandrov().is_open(&s_of(u, m, m)))
        {
            let pairs = u
                .ones()
                .map(|k| (carrier.get(k / m), carrier.get(k % m)))
                .collect();
            r.fail(Witness::new(Claim::SliceOpen, Evidence::Relation(pairs)).on(L, flavor));
        }
        r.note(if exhaustive {
            format!("S(M) open for all opens M of (L x L, {flavor}), plus the {m} hulls of {{A}} x L")
        } else {
            format!("S(M) open for the {m} hulls of {{A}} x L in (L x L, {flavor}) and {sampled} random opens")
        });
    }
    r.note("finite space: G-delta subsets of the product are its open sets");
    r.finish()
}

pub fn check_fell_compact_hausdorff(ctx: &Hyperspaces) -> CheckResult {
    let mut r = Tally::new(CheckId::FellCompactHausdorff);
    for kind in [F, L] {
        let t = ctx.strong(kind);
        if let Some(w) = representation_witness(t) {
            r.fail(w);
            continue;
        }
        if !is_hausdorff(t) {
            let m = t.len();
            let pair = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .find(|&(i, j)| !t.min_nbhd(i).is_disjoint(t.min_nbhd(j)))
                .expect("not Hausdorff");
            r.fail(
                Witness::new(
                    Claim::FellHausdorff,
                    Evidence::Pair(t.carrier().get(pair.0), t.carrier().get(pair.1)),
                )
                .on(kind, Flavor::Strong),
            );
        }
    }
    r.note("finite space: locally compact, so (F, tau_s) and its closed subspace (L, tau_s) are compact Hausdorff");
    r.finish()
}

/// Fell convergence against both pointwise characterisations, for every
/// eventually periodic sequence within `budget` over `F`.
pub fn check_conv_props(ctx: &Hyperspaces, budget: SeqBudget) -> Result<CheckResult> {
    let (w, s) = (ctx.weak(F), ctx.strong(F));
    let carrier = w.carrier();
    let m = carrier.len();
    budget.validate(m)?;
    let mut r = Tally::new(CheckId::ConvProps);
    let below: Vec<IndexSet> = (0..m)
        .map(|a| {
            index_set(
                m,
                (0..m).filter(|&b| carrier.get(b).is_subset(carrier.get(a))),
            )
        })
        .collect();
    let mut count = 0usize;
    for seq in sequences(m, budget.max_preperiod, budget.max_cycle) {
        count += 1;
        let lim_s = seq_limits(s, &seq);
        let lim_w = seq_limits(w, &seq);
        let primitive = is_primitive(w, &seq);
        let sets = seq.map(|&i| carrier.get(i));
        for (a, down) in below.iter().enumerate() {
            let target = carrier.get(a);
            let fell = lim_s.contains(a);
            let evidence = || Evidence::Sequence {
                preperiod: sets.preperiod().to_vec(),
                cycle: sets.cycle().to_vec(),
                target,
            };
            if fell != conv1_conditions(ctx.space(), &sets, target).both() {
                r.fail(Witness::new(Claim::FellIffConv1, evidence()));
            }
            if fell != (primitive && &lim_w == down) {
                r.fail(Witness::new(Claim::FellIffPrimitive, evidence()));
            }
        }
        if r.failed() {
            break;
        }
    }
    r.note(format!(
        "eventually periodic sequences stand in for nets: {count} sequences, preperiod <= {}, cycle <= {}",
        budget.max_preperiod, budget.max_cycle
    ));
    r.note("finite space: locally compact, both directions asserted");
    Ok(r.finish())
}

/// Run one registered check with the default parameters from `opts`.
pub fn run_check(ctx: &Hyperspaces, id: CheckId, opts: &VerifyOptions) -> Result<CheckResult> {
    Ok(match id {
        CheckId::ClosureSingleton => check_closure_singleton(ctx),
        CheckId::EtaClosureAndDensity => check_eta_closure_and_density(ctx),
        CheckId::ContIffMaximal => check_cont_iff_maximal(ctx),
        CheckId::SeparatedIffMaximal => check_separated_iff_maximal(ctx),
        CheckId::Connectedness => check_connectedness(ctx),
        CheckId::CompactnessLemma => {
            check_compactness_lemma(ctx, &default_families(ctx.space().len()))
        }
        CheckId::LocalCompactness => check_local_compactness(ctx),
        CheckId::Baire => check_baire(ctx, opts),
        CheckId::GdeltaMl => check_gdelta_ml(ctx),
        CheckId::SeparatedPointsCorollary => check_separated_points_corollary(ctx),
        CheckId::ProductLemmas => check_product_lemmas(ctx, opts),
        CheckId::FellCompactHausdorff => check_fell_compact_hausdorff(ctx),
        CheckId::ConvProps => check_conv_props(ctx, opts.seq_budget)?,
    })
}
