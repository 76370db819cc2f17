//! Structural invariants of the counting layer and the engine, checked on
//! random generator sets and on a fixed corpus.

use proptest::prelude::*;

use pfrob_core::apery::{p_apery_set, two_var_g, two_var_n, two_var_s};
use pfrob_core::denumerant::{denumerant, enumerate_representations, BruteForce, DenumerantTable};
use pfrob_core::gens::GeneratorSet;
use pfrob_core::triangular::{g_p0, theorem1_point};

fn corpus() -> Vec<GeneratorSet> {
    [
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
    .collect()
}

fn small_gens() -> impl Strategy<Value = Vec<u64>> {
    proptest::collection::vec(1u64..30, 1..5)
}

proptest! {
    #[test]
    fn shift_monotonicity(gens in small_gens(), n in 0i64..300) {
        let set = GeneratorSet::new(&gens).unwrap();
        let table = DenumerantTable::build(&set, 400).unwrap();
        for &a in set.gens() {
            prop_assert!(table.count(n + a as i64) >= table.count(n));
        }
    }

    #[test]
    fn divisibility(gens in small_gens(), n in 0i64..300) {
        let set = GeneratorSet::new(&gens).unwrap();
        if !(n as u64).is_multiple_of(set.gcd()) {
            prop_assert_eq!(denumerant(&set, n).unwrap(), 0);
        }
    }

    #[test]
    fn scaling(gens in small_gens(), c in 1u64..5, n in 0i64..200) {
        let set = GeneratorSet::new(&gens).unwrap();
        let scaled: Vec<u64> = set.gens().iter().map(|g| g * c).collect();
        let scaled = GeneratorSet::new(&scaled).unwrap();
        prop_assert_eq!(
            denumerant(&scaled, n * c as i64).unwrap(),
            denumerant(&set, n).unwrap()
        );
    }

    #[test]
    fn table_invariants(gens in small_gens()) {
        let set = GeneratorSet::new(&gens).unwrap();
        let table = DenumerantTable::build(&set, 300).unwrap();
        prop_assert_eq!(table.count(0), 1);
        for n in 0..=300u64 {
            if n % set.gcd() != 0 {
                prop_assert_eq!(table.count(n as i64), 0);
            }
        }
    }
}

#[test]
fn enumeration_length_equals_count() {
    for set in corpus() {
        let table = DenumerantTable::build(&set, 500).unwrap();
        for n in 0..=500u64 {
            let reps = enumerate_representations(&set, n, usize::MAX);
            assert!(!reps.truncated);
            assert_eq!(
                reps.reps.len() as u64,
                table.count(n as i64),
                "A = {set}, n = {n}"
            );
            for r in &reps.reps {
                let total: u64 = r.coeffs().iter().zip(set.gens()).map(|(x, a)| x * a).sum();
                assert_eq!(total, n);
            }
        }
    }
}

#[test]
fn apery_completeness_and_thresholds() {
    for set in corpus()
        .into_iter()
        .filter(|s| s.gcd() == 1 && s.len() >= 2)
    {
        for p in 0..=6u64 {
            let ap = p_apery_set(&set, p).unwrap();
            let a1 = set.a1();
            let max = *ap.values().iter().max().unwrap();
            let table = DenumerantTable::build(&set, max).unwrap();
            for (i, &m) in ap.values().iter().enumerate() {
                assert_eq!(m % a1, i as u64, "residues must cover 0..a1 exactly");
                assert!(table.count(m as i64) > p);
                assert!(table.count(m as i64 - a1 as i64) <= p);
            }
        }
    }
}

#[test]
fn monotone_in_level() {
    for set in corpus()
        .into_iter()
        .filter(|s| s.gcd() == 1 && s.len() >= 2)
    {
        let mut prev = p_apery_set(&set, 0).unwrap();
        for p in 1..=8u64 {
            let next = p_apery_set(&set, p).unwrap();
            assert!(next.frobenius() >= prev.frobenius());
            assert!(next.sylvester_number().unwrap() >= prev.sylvester_number().unwrap());
            assert!(next.sylvester_sum().unwrap() >= prev.sylvester_sum().unwrap());
            for (a, b) in next.values().iter().zip(prev.values()) {
                assert!(a >= b, "thresholds must not decrease with the level");
            }
            prev = next;
        }
    }
}

#[test]
fn engine_matches_brute_force() {
    for set in corpus()
        .into_iter()
        .filter(|s| s.gcd() == 1 && s.len() >= 2)
    {
        for p in 0..=8u64 {
            let ap = p_apery_set(&set, p).unwrap();
            let brute = BruteForce::new(&set, p).unwrap();
            assert_eq!(ap.frobenius(), brute.frobenius(), "A = {set}, p = {p}");
            assert_eq!(ap.sylvester_number().unwrap(), brute.sylvester_number());
            assert_eq!(ap.sylvester_sum().unwrap(), brute.sylvester_sum());
        }
    }
}

#[test]
fn power_sum_formula_matches_direct_sums() {
    for set in corpus()
        .into_iter()
        .filter(|s| s.gcd() == 1 && s.len() >= 2)
    {
        for p in 0..=4u64 {
            let ap = p_apery_set(&set, p).unwrap();
            let brute = BruteForce::new(&set, p).unwrap();
            for mu in 0..=3u32 {
                assert_eq!(
                    ap.power_sum(mu).unwrap(),
                    brute.power_sum(mu),
                    "A = {set}, p = {p}, mu = {mu}"
                );
            }
        }
    }
}

#[test]
fn two_variable_forms_match_engine_spot() {
    for (a, b) in [(2u64, 3u64), (3, 5), (5, 7), (4, 9), (7, 11)] {
        let set = GeneratorSet::new(&[a, b]).unwrap();
        for p in 0..=5u64 {
            let ap = p_apery_set(&set, p).unwrap();
            assert_eq!(two_var_g(a, b, p).unwrap(), ap.frobenius());
            assert_eq!(two_var_n(a, b, p).unwrap(), ap.sylvester_number().unwrap());
            assert_eq!(two_var_s(a, b, p).unwrap(), ap.sylvester_sum().unwrap());
        }
    }
}

#[test]
fn theorem1_brackets_level_one() {
    // between two consecutive theorem levels straddling 1, g at level 1
    // must sit inside the bracket
    for n in 2..=12u64 {
        let g1 = pfrob_core::triangular::g_p1(n).unwrap();
        let mut below = None;
        let mut above = None;
        for p in 0..=6u64 {
            let t = theorem1_point(n, p).unwrap();
            if t.p_index <= 1 {
                below = Some(t);
            }
            if t.p_index >= 1 && above.is_none() {
                above = Some(t);
            }
        }
        let below = below.expect("level 0 always qualifies");
        let above = above.expect("levels grow without bound");
        assert!(below.g_value <= g1, "n = {n}");
        assert!(g1 <= above.g_value, "n = {n}");
    }
}

#[test]
fn theorem1_at_zero_is_the_classical_form() {
    for n in 2..=40u64 {
        assert_eq!(theorem1_point(n, 0).unwrap().g_value, g_p0(n).unwrap());
    }
}

#[test]
fn theorem1_points_match_engine_beyond_small_p() {
    use pfrob_core::denumerant::DenumerantTable;
    use pfrob_core::gens::TriangularTriple;
    for n in 2..=7u64 {
        let triple = TriangularTriple::new(n).unwrap();
        for p in 0..=6u64 {
            let point = theorem1_point(n, p).unwrap();
            let ap = p_apery_set(triple.set(), point.p_index).unwrap();
            assert_eq!(ap.frobenius(), point.g_value as i64, "n = {n}, p = {p}");
            // the value itself carries exactly p_index representations
            let table = DenumerantTable::build(triple.set(), point.g_value).unwrap();
            assert_eq!(table.count(point.g_value as i64), point.p_index);
        }
    }
}
