//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Built with `harness = false`.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperlimit::finspace::{enumerate_topologies, FinTopSpace, PointSet};
use hyperlimit::hyperspace::{build_topology, min_nbhd_oracle, seq_limits, sequences, Flavor};
use hyperlimit::io::{emit_hyperspace_report, parse_space, LabeledSpace};
use hyperlimit::limitsets::{carrier, is_limit_set, is_limit_set_oracle, CarrierKind};
use hyperlimit::theorems::{
    check_conv_props, confirm_witness, explore_corruptions, sweep, CheckId, Corruption,
    Hyperspaces, SeqBudget, Status, SweepOptions, VerifyOptions,
};

mod common;
use common::{brute_force_topologies, corruption_panel, opens_key};

const ENUMERATION_BUDGET: Duration = Duration::from_secs(10);
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const CONVERGENCE_BUDGET: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, elapsed: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < budget, || {
        format!("{what} took {elapsed:.2?}, budget {budget:?}")
    })
}

fn enumeration_counts() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=4)
        .map(|n| enumerate_topologies(n).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(counts == [1, 4, 29, 355], || format!("counts {counts:?}"))?;
    within(ENUMERATION_BUDGET, elapsed, "enumeration")?;
    for n in 1..=3 {
        let fast: BTreeSet<Vec<u16>> = enumerate_topologies(n)
            .unwrap()
            .iter()
            .map(opens_key)
            .collect();
        ensure(fast == brute_force_topologies(n), || {
            format!("brute-force family filter disagrees at n={n}")
        })?;
    }
    Ok(format!(
        "counts 1/4/29/355, brute force agrees for n <= 3, enumeration {elapsed:.2?}"
    ))
}

fn limit_set_oracle() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for s in enumerate_topologies(n).unwrap() {
            for l in s.ground().subsets() {
                let slow = is_limit_set_oracle(&s, l).map_err(|e| e.to_string())?;
                ensure(is_limit_set(&s, l) == slow, || {
                    format!("{} L={l}", s.canonical_key())
                })?;
                checked += 1;
            }
        }
    }
    let spaces = enumerate_topologies(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x11a1);
    for _ in 0..1000 {
        let s = &spaces[rng.random_range(0..spaces.len())];
        let l = PointSet::from_mask(rng.random_range(0..16u16));
        let slow = is_limit_set_oracle(s, l).map_err(|e| e.to_string())?;
        ensure(is_limit_set(s, l) == slow, || {
            format!("{} L={l}", s.canonical_key())
        })?;
    }
    Ok(format!(
        "0 mismatches over {checked} exhaustive and 1000 sampled subsets"
    ))
}

fn neighbourhood_oracle() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for s in enumerate_topologies(n).unwrap() {
            let s = Arc::new(s);
            for kind in CarrierKind::ALL {
                let c = carrier(&s, kind);
                for flavor in Flavor::BOTH {
                    let t = build_topology(&c, flavor);
                    for (i, &a) in c.elements().iter().enumerate() {
                        let oracle = min_nbhd_oracle(&c, flavor, a).map_err(|e| e.to_string())?;
                        ensure(t.min_nbhd(i) == &oracle, || {
                            format!("{} {kind} {flavor} at {a}", s.canonical_key())
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("0 mismatches over {checked} neighbourhoods"))
}

fn theorem_sweep() -> Outcome {
    let opts = SweepOptions {
        jobs: Some(4),
        verify: VerifyOptions::default(),
    };
    let start = Instant::now();
    let mut spaces = 0;
    for n in 1..=4 {
        let r = sweep(n, &opts).map_err(|e| e.to_string())?;
        for t in &r.checks {
            ensure(t.fail == 0, || {
                format!(
                    "{} fails at n={n}, first on {:?}",
                    t.check_id, t.first_counterexample
                )
            })?;
            ensure(t.pass + t.trivially_true + t.proxy == r.spaces, || {
                format!("{} tally at n={n}", t.check_id)
            })?;
        }
        spaces += r.spaces;
    }
    let elapsed = start.elapsed();
    ensure(spaces == 389, || format!("{spaces} spaces"))?;
    within(SWEEP_BUDGET, elapsed, "sweep")?;
    Ok(format!(
        "{spaces} spaces, 0 failures, {} checks each, {elapsed:.2?} with 4 workers",
        CheckId::ALL.len()
    ))
}

fn convergence() -> Outcome {
    let budget = SeqBudget {
        max_preperiod: 2,
        max_cycle: 3,
    };
    let start = Instant::now();
    let mut spaces = 0;
    for n in 1..=3 {
        for s in enumerate_topologies(n).unwrap() {
            let key = s.canonical_key();
            let ctx = Hyperspaces::new(s);
            let r = check_conv_props(&ctx, budget).map_err(|e| e.to_string())?;
            ensure(r.status == Status::Proxy, || {
                format!("{key}: {:?}", r.witness)
            })?;
            // Fell limits against the brute-force neighbourhoods: a limit is a
            // set whose neighbourhood holds every cycle term.
            let t = ctx.strong(CarrierKind::F);
            let c = t.carrier();
            let nbhds: Vec<_> = c
                .elements()
                .iter()
                .map(|&a| min_nbhd_oracle(c, Flavor::Strong, a))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            for seq in sequences(c.len(), 2, 3) {
                let lim = seq_limits(t, &seq);
                for (a, nb) in nbhds.iter().enumerate() {
                    let oracle = seq.cycle().iter().all(|&i| nb.contains(i));
                    ensure(lim.contains(a) == oracle, || {
                        format!("{key}: limit {} of {seq:?}", c.get(a))
                    })?;
                }
            }
            spaces += 1;
        }
    }
    let elapsed = start.elapsed();
    within(CONVERGENCE_BUDGET, elapsed, "convergence")?;
    Ok(format!(
        "0 violations on {spaces} spaces, preperiod <= 2, cycle <= 3, {elapsed:.2?}"
    ))
}

fn non_vacuity() -> Outcome {
    let opts = VerifyOptions::default();
    let mut detected: BTreeSet<CheckId> = BTreeSet::new();
    let mut failing = 0;
    for (name, space) in corruption_panel() {
        for o in explore_corruptions(&space, &opts).map_err(|e| e.to_string())? {
            for r in o.report.failures() {
                let w = r
                    .witness
                    .as_ref()
                    .ok_or_else(|| format!("{name}: {} failed without a witness", r.check_id))?;
                ensure(confirm_witness(&o.context, w), || {
                    format!(
                        "{name} / {}: witness for {} does not re-validate",
                        o.corruption, r.check_id
                    )
                })?;
                detected.insert(r.check_id);
                failing += 1;
            }
        }
    }
    let missing: Vec<_> = CheckId::ALL
        .iter()
        .filter(|c| !detected.contains(c))
        .collect();
    ensure(missing.is_empty(), || {
        format!("never detected: {missing:?}")
    })?;

    // The named example: X injected into ML of Sierpiński plus an isolated point.
    let (_, space) = &corruption_panel()[1];
    let x = space.ground();
    let flips = explore_corruptions(space, &opts)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|o| {
            o.corruption
                == Corruption::Inject {
                    kind: CarrierKind::ML,
                    set: x,
                }
        })
        .any(|o| {
            let f = o.failed_checks();
            f.contains(&CheckId::GdeltaMl) || f.contains(&CheckId::ContIffMaximal)
        });
    ensure(flips, || "injecting X into ML went undetected".to_string())?;
    Ok(format!(
        "all {} check classes detected, {failing} failing witnesses re-validated",
        CheckId::ALL.len()
    ))
}

fn report_for(space: &LabeledSpace, kind: CarrierKind, flavor: Flavor) -> String {
    emit_hyperspace_report(space, kind, flavor)
}

fn golden_reports() -> Outcome {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let read =
        |name: &str| std::fs::read_to_string(dir.join(name)).map_err(|e| format!("{name}: {e}"));
    let cases = [
        (
            "sierpinski.json",
            CarrierKind::L,
            Flavor::Weak,
            "sierpinski_report.txt",
        ),
        (
            "three_point.json",
            CarrierKind::L,
            Flavor::Weak,
            "three_point_report.txt",
        ),
        (
            "three_point.json",
            CarrierKind::F,
            Flavor::Strong,
            "three_point_report_F_s.txt",
        ),
    ];
    for (input, kind, flavor, expected) in cases {
        let space = parse_space(&read(input)?).map_err(|e| e.to_string())?;
        ensure(report_for(&space, kind, flavor) == read(expected)?, || {
            format!("{expected} differs")
        })?;
    }

    // The worked tables, in index labels.
    let sierpinski = LabeledSpace::unlabeled(FinTopSpace::sierpinski());
    let text = report_for(&sierpinski, CarrierKind::F, Flavor::Weak);
    for line in [
        "separated points: {0}",
        "F: [{},{1},{0,1}]",
        "L: [{},{1},{0,1}]",
        "ML: [{0,1}]",
        "  {}: nbhd [{},{1},{0,1}];",
        "  {1}: nbhd [{1},{0,1}];",
        "  {0,1}: nbhd [{0,1}];",
    ] {
        ensure(text.contains(line), || {
            format!("Sierpinski report lacks {line:?}")
        })?;
    }
    let text = report_for(&sierpinski, CarrierKind::F, Flavor::Strong);
    for line in [
        "  {}: nbhd [{}];",
        "  {1}: nbhd [{1}];",
        "  {0,1}: nbhd [{0,1}];",
    ] {
        ensure(text.contains(line), || {
            format!("Sierpinski tau_s report lacks {line:?}")
        })?;
    }
    let three =
        parse_space(r#"{"points":["0","1","2"],"opens":[[],["0"],["1"],["0","1"],["0","1","2"]]}"#)
            .map_err(|e| e.to_string())?;
    let text = report_for(&three, CarrierKind::L, Flavor::Weak);
    for line in [
        "separated points: {0,1}",
        "F: [{},{2},{0,2},{1,2},{0,1,2}]",
        "L: [{},{2},{0,2},{1,2}]",
        "ML: [{0,2},{1,2}]",
    ] {
        ensure(text.contains(line), || {
            format!("3-point report lacks {line:?}")
        })?;
    }
    Ok("Sierpinski and 3-point reports byte-exact, worked tables reproduced".to_string())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("enumeration counts", enumeration_counts),
        ("limit-set oracle", limit_set_oracle),
        ("neighbourhood oracle", neighbourhood_oracle),
        ("theorem sweep", theorem_sweep),
        ("convergence propositions", convergence),
        ("non-vacuity", non_vacuity),
        ("golden reports", golden_reports),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
