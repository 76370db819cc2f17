//! End-to-end acceptance suite. Each test covers one numbered criterion,
//! checks every instance exactly (integer domain, no tolerances), asserts
//! the stated wall-clock budget, and prints one pass line; a panic is the
//! fail line.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use pfrob_core::apery::{p_apery_set, p_frobenius};
use pfrob_core::denumerant::{occurring_counts, BruteForce, DenumerantTable};
use pfrob_core::gens::GeneratorSet;
use pfrob_verify::{run_suite, EvalCtx, Registry, RunOptions, Verdict};

struct Criterion {
    label: &'static str,
    budget: Duration,
    started: Instant,
}

impl Criterion {
    fn start(label: &'static str, budget_secs: u64) -> Self {
        Self {
            label,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
        }
    }

    fn finish(self, detail: &str) {
        let elapsed = self.started.elapsed();
        assert!(
            elapsed <= self.budget,
            "{} blew the {:?} budget: {:?}",
            self.label,
            self.budget,
            elapsed
        );
        println!(
            "{}: PASS ({detail}; {elapsed:?} within {:?})",
            self.label, self.budget
        );
    }
}

fn run_filters(registry: &Registry, filters: &[&str]) -> (u64, u64, u64) {
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for f in filters {
        let (reports, summary) = run_suite(registry, &RunOptions::with_filter(f));
        for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
            eprintln!("FAIL {}", r.to_jsonl());
        }
        pass += summary.pass;
        fail += summary.fail;
        skip += summary.skipped;
    }
    (pass, fail, skip)
}

#[test]
fn criterion_1_printed_level_lists() {
    let c = Criterion::start("criterion 1", 5);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["p0-list", "p1-list", "p2-list"]);
    assert_eq!((pass, fail, skip), (18, 0, 0));
    c.finish("levels 0/1/2 lists for n = 2..8, engine + oracle agree with all 18 printed values");
}

#[test]
fn criterion_2_remark4_table_and_gaps() {
    let c = Criterion::start("criterion 2", 60);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["remark4-table", "remark4-gap"]);
    assert_eq!((pass, fail, skip), (19 + 21, 0, 0));

    // The printed gap list is abbreviated; pin the exact structure. Every
    // count <= 211 either occurs in the table or has no exact witness,
    // and the two routes must agree level by level.
    let set = GeneratorSet::new(&[10, 15, 21]).unwrap();
    let brute = BruteForce::new(&set, 211).unwrap();
    let occurring: BTreeSet<u64> = occurring_counts(brute.table(), brute.table().capacity())
        .into_iter()
        .filter(|&v| v <= 211)
        .collect();
    for level in 0..=211u64 {
        let witness = pfrob_core::exact_rep_frobenius(&set, level).unwrap();
        assert_eq!(
            witness.is_some(),
            occurring.contains(&level),
            "exact-witness route disagrees with the table at level {level}"
        );
    }
    let missing_12_50: Vec<u64> = (12..=50).filter(|v| !occurring.contains(v)).collect();
    assert_eq!(
        missing_12_50,
        vec![12, 15, 18, 21, 23, 25, 27, 29, 31, 33, 35, 37, 38, 40, 42, 43, 45, 47, 48, 50],
        "gap structure within 12..=50"
    );
    let g206: Vec<i64> = (206..=211).map(|p| p_frobenius(&set, p).unwrap()).collect();
    assert!(
        g206.iter().all(|&g| g == 1169),
        "levels 206..=211 must share one value"
    );
    c.finish("printed g/n/s rows, witness gaps, and the 206..211 plateau all reproduced");
}

#[test]
fn criterion_3_levels_one_and_two_closed_forms() {
    let c = Criterion::start("criterion 3", 120);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["thm2", "thm3"]);
    assert_eq!((pass, fail, skip), (19 + 15, 0, 0));
    c.finish("level 1 over n = 2..20 and level 2 over n = 2..16 (n = 3 collapses to 59)");
}

#[test]
fn criterion_4_general_level_points() {
    let c = Criterion::start("criterion 4", 120);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["thm1"]);
    assert_eq!((pass, fail, skip), (50, 0, 0));
    c.finish("50 points over n = 2..11, p = 0..4, with the exact count at each value");
}

#[test]
fn criterion_5_levels_three_to_ten() {
    let c = Criterion::start("criterion 5", 180);
    let registry = Registry::standard();
    let (reports, summary) = run_suite(&registry, &RunOptions::with_filter("thm4"));
    assert_eq!((summary.pass, summary.fail, summary.skipped), (61, 0, 43));
    assert!(reports
        .iter()
        .filter(|r| r.verdict == Verdict::Skipped)
        .all(|r| r.engine.is_none()));

    // probe mode records engine values on the excluded instances without
    // turning them into verdicts
    let probed = registry
        .verify_claim(
            "thm4",
            &EvalCtx {
                probe: true,
                ..EvalCtx::default()
            },
        )
        .unwrap();
    assert!(probed
        .iter()
        .filter(|r| r.verdict == Verdict::Skipped)
        .all(|r| r.engine.is_some()));
    assert_eq!(
        probed
            .iter()
            .filter(|r| r.verdict == Verdict::Skipped)
            .count(),
        43
    );
    c.finish("61 validity instances match; 43 exclusions skipped, probed on request");
}

#[test]
fn criterion_6_fixed_triple_families() {
    let c = Criterion::start("criterion 6", 60);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["prop1", "prop2", "prop3"]);
    assert_eq!((pass, fail, skip), (6 + 25 + 32, 0, 0));
    c.finish("all g/n/s tuples and threshold vectors match the engine and the table scans");
}

#[test]
fn criterion_7_property_suite() {
    let c = Criterion::start("criterion 7", 120);
    let corpus: Vec<GeneratorSet> = [
        &[2u64, 3][..],
        &[3, 5],
        &[5, 7],
        &[6, 10, 15],
        &[3, 6, 10],
        &[10, 15, 21],
        &[15, 21, 28],
        &[3, 5, 7],
        &[4, 6, 9],
        &[7, 9, 11, 12],
    ]
    .iter()
    .map(|g| GeneratorSet::new(g).unwrap())
    .collect();

    for set in &corpus {
        // shift monotonicity of the raw counts
        let table = DenumerantTable::build(set, 600).unwrap();
        for n in 0..=300i64 {
            for &a in set.gens() {
                assert!(table.count(n + a as i64) >= table.count(n));
            }
        }
        if set.gcd() != 1 {
            continue;
        }

        let mut prev: Option<pfrob_core::PAperySet> = None;
        for p in 0..=8u64 {
            let ap = p_apery_set(set, p).unwrap();
            // completeness and the two-sided threshold property
            let top = *ap.values().iter().max().unwrap();
            let table = DenumerantTable::build(set, top).unwrap();
            for (i, &m) in ap.values().iter().enumerate() {
                assert_eq!(m % set.a1(), i as u64);
                assert!(table.count(m as i64) > p);
                assert!(table.count(m as i64 - set.a1() as i64) <= p);
            }
            // monotonicity in the level
            if let Some(prev) = &prev {
                assert!(ap.frobenius() >= prev.frobenius());
                assert!(ap.sylvester_number().unwrap() >= prev.sylvester_number().unwrap());
                assert!(ap.sylvester_sum().unwrap() >= prev.sylvester_sum().unwrap());
            }
            // power sums against direct summation
            if p <= 4 {
                let brute = BruteForce::new(set, p).unwrap();
                for mu in 0..=3u32 {
                    assert_eq!(
                        ap.power_sum(mu).unwrap(),
                        brute.power_sum(mu),
                        "{set} p={p} mu={mu}"
                    );
                }
            }
            prev = Some(ap);
        }
    }

    // two-variable closed forms over the full coprime sweep
    let registry = Registry::standard();
    let (reports, summary) = run_suite(&registry, &RunOptions::with_filter("twovar"));
    assert_eq!(summary.fail, 0);
    assert_eq!(summary.pass, reports.len() as u64);
    assert_eq!(reports.len(), 450);
    c.finish("thresholds, monotonicity, power sums, and 450 coprime pairs at levels 0..5");
}

#[test]
fn criterion_8_fixture_15_21_28() {
    let c = Criterion::start("criterion 8", 10);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["fixture-15-21-28"]);
    assert_eq!((pass, fail, skip), (17, 0, 0));
    c.finish("levels 0..16 match the printed list; level 15 has no witness and repeats 545");
}

#[test]
fn criterion_9_decomposition_identities() {
    let c = Criterion::start("criterion 9", 30);
    let registry = Registry::standard();
    let (pass, fail, skip) = run_filters(&registry, &["decomp", "zero-offres"]);
    assert_eq!((pass, fail, skip), (16, 0, 0));
    c.finish("scaled-count splits hold for n = 2..9, m <= 2000; off-lattice counts vanish");
}
