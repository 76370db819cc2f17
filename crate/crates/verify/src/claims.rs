//! Every claim in the standard registry, with its frozen expected values.
//!
//! Channel conventions: `expected` is the closed form or the printed
//! fixture, `engine` is the Apery-set computation, `oracle` is a direct
//! scan over the DP table. The n channel of the fixed-triple families
//! counts positive integers, matching the printed tables; the engine and
//! oracle sides use the matching positive-count views.

use serde_json::{json, Value};

use crate::registry::{Channels, Claim, EvalCtx, Instance};
use pfrob_core::apery::{exact_rep_frobenius_capped, p_apery_set_capped, summarize_capped};
use pfrob_core::apery::{two_var_g, two_var_n, two_var_s};
use pfrob_core::denumerant::{BruteForce, DenumerantTable};
use pfrob_core::gens::{GeneratorSet, TriangularTriple};
use pfrob_core::triangular::{
    g_p1, g_p2, g_p3_to_10, prop1_t345, prop2_t234, prop3_t456, theorem1_point, ClosedFormPoint,
    Prop3Case,
};
use pfrob_core::Error;

// Printed level-0/1/2 values for the triples at n = 2..7 (n = 3 is absent
// from the level-2 list).
const P0_LIST: [(u64, i64); 6] = [(2, 17), (3, 29), (4, 89), (5, 125), (6, 251), (7, 323)];
const P1_LIST: [(u64, i64); 6] = [(2, 23), (3, 59), (4, 119), (5, 209), (6, 335), (7, 503)];
const P2_LIST: [(u64, i64); 6] = [(2, 29), (4, 149), (5, 230), (6, 419), (7, 575), (8, 899)];

// Printed g/n/s table for (10, 15, 21) at the levels the source lists.
const REMARK4_TABLE: [(u64, i64, u64, u64); 19] = [
    (0, 89, 45, 1455),
    (1, 119, 74, 3240),
    (2, 149, 104, 5925),
    (3, 179, 134, 9510),
    (4, 194, 149, 11640),
    (5, 209, 164, 13995),
    (6, 224, 179, 16575),
    (7, 239, 194, 19380),
    (8, 254, 209, 22410),
    (9, 269, 224, 25665),
    (10, 284, 239, 29145),
    (11, 299, 254, 32850),
    (13, 314, 269, 36780),
    (49, 584, 539, 145995),
    (51, 599, 554, 154200),
    (54, 614, 569, 162630),
    (201, 1154, 1109, 615960),
    (206, 1169, 1124, 632715),
    (212, 1184, 1139, 649695),
];

// Counts that never occur as d(n; 10, 15, 21), per the printed gap list.
const REMARK4_ABSENT: [u64; 13] = [12, 50, 52, 53, 202, 203, 204, 205, 207, 208, 209, 210, 211];

// Counts printed as occurring, with the largest witness (= the level-p
// Frobenius number whenever the level strictly grows).
const REMARK4_PRESENT: [(u64, i64); 8] = [
    (11, 299),
    (13, 314),
    (49, 584),
    (51, 599),
    (54, 614),
    (201, 1154),
    (206, 1169),
    (212, 1184),
];

// Level-p values for (15, 21, 28): p = 0..14 printed, level 15 never
// occurs exactly (so g repeats), then 566 at 16.
pub const FIXTURE_15_21_28_G: [i64; 17] = [
    125, 209, 230, 293, 314, 335, 377, 398, 419, 440, 461, 482, 503, 524, 545, 545, 566,
];

fn triple_set(n: u64) -> GeneratorSet {
    TriangularTriple::new(n).unwrap().set().clone()
}

fn err_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn gns_value(g: i64, n: u64, s: u64) -> Value {
    json!({ "g": g, "n": n, "s": s })
}

/// First index in each residue class mod a1 whose count reaches p+1,
/// straight off the table. Kept local so the oracle channel does not go
/// through the engine's Apery construction.
fn scan_thresholds(table: &DenumerantTable, p: u64) -> Option<Vec<u64>> {
    let a1 = table.gens().a1() as usize;
    let mut m = vec![u64::MAX; a1];
    let mut remaining = a1;
    for (n, &c) in table.counts().iter().enumerate() {
        if m[n % a1] == u64::MAX && c > p {
            m[n % a1] = n as u64;
            remaining -= 1;
            if remaining == 0 {
                return Some(m);
            }
        }
    }
    None
}

fn count_checked(table: &DenumerantTable, n: i64) -> Value {
    if n >= 0 && n as u64 > table.capacity() {
        return Value::Null;
    }
    json!(table.count(n))
}

/// expected/engine/oracle triple for a bare Frobenius value.
fn g_channels(set: &GeneratorSet, p: u64, expected: i64, ctx: &EvalCtx) -> Channels {
    let engine = match p_apery_set_capped(set, p, ctx.max_cells) {
        Ok(ap) => json!(ap.frobenius()),
        Err(e) => err_value(&e),
    };
    let oracle = match BruteForce::with_max_cells(set, p, ctx.max_cells) {
        Ok(b) => json!(b.frobenius()),
        Err(e) => err_value(&e),
    };
    Channels {
        expected: Some(json!(expected)),
        engine: Some(engine),
        oracle: Some(oracle),
        skipped: false,
    }
}

fn frobenius_list_claim(
    id: &'static str,
    description: &'static str,
    p: u64,
    fixtures: &[(u64, i64)],
) -> Claim {
    let instances = fixtures
        .iter()
        .map(|&(n, g)| Instance {
            params: vec![("n", n as i64), ("p", p as i64)],
            eval: Box::new(move |ctx: &EvalCtx| g_channels(&triple_set(n), p, g, ctx)),
        })
        .collect();
    Claim {
        id,
        description,
        instances,
    }
}

fn closed_form_frobenius_claim(
    id: &'static str,
    description: &'static str,
    p: u64,
    n_range: std::ops::RangeInclusive<u64>,
    form: fn(u64) -> pfrob_core::Result<u64>,
) -> Claim {
    let instances = n_range
        .map(|n| Instance {
            params: vec![("n", n as i64), ("p", p as i64)],
            eval: Box::new(move |ctx: &EvalCtx| {
                let expected = form(n).expect("inside the stated domain") as i64;
                g_channels(&triple_set(n), p, expected, ctx)
            }),
        })
        .collect();
    Claim {
        id,
        description,
        instances,
    }
}

fn thm1_claim() -> Claim {
    let mut instances = Vec::new();
    for n in 2..=11u64 {
        for p in 0..=4u64 {
            instances.push(Instance {
                params: vec![("n", n as i64), ("p", p as i64)],
                eval: Box::new(move |ctx: &EvalCtx| {
                    let point = theorem1_point(n, p).expect("n >= 2");
                    let set = triple_set(n);
                    let g = point.g_value as i64;
                    let expected = json!({ "g": g, "count_at_g": point.p_index });
                    let engine = match p_apery_set_capped(&set, point.p_index, ctx.max_cells) {
                        Ok(ap) => {
                            // the point value must carry exactly p_index
                            // representations, so reuse a table big enough
                            let count =
                                DenumerantTable::build_capped(&set, point.g_value, ctx.max_cells)
                                    .map(|t| count_checked(&t, g))
                                    .unwrap_or(Value::Null);
                            json!({ "g": ap.frobenius(), "count_at_g": count })
                        }
                        Err(e) => err_value(&e),
                    };
                    let oracle =
                        match BruteForce::with_max_cells(&set, point.p_index, ctx.max_cells) {
                            Ok(b) => json!({
                                "g": b.frobenius(),
                                "count_at_g": count_checked(b.table(), g),
                            }),
                            Err(e) => err_value(&e),
                        };
                    Channels {
                        expected: Some(expected),
                        engine: Some(engine),
                        oracle: Some(oracle),
                        skipped: false,
                    }
                }),
            });
        }
    }
    Claim {
        id: "thm1",
        description: "general-level points: the level expression and its Frobenius value, \
                      plus exactness of the count at that value",
        instances,
    }
}

fn thm4_claim() -> Claim {
    let mut instances = Vec::new();
    for p in 3..=10u64 {
        for n in 2..=14u64 {
            instances.push(Instance {
                params: vec![("n", n as i64), ("p", p as i64)],
                eval: Box::new(move |ctx: &EvalCtx| {
                    let set = triple_set(n);
                    match g_p3_to_10(n, p).expect("p within 3..=10") {
                        Some(g) => g_channels(&set, p, g as i64, ctx),
                        None => {
                            let engine = ctx.probe.then(|| {
                                match p_apery_set_capped(&set, p, ctx.max_cells) {
                                    Ok(ap) => json!(ap.frobenius()),
                                    Err(e) => err_value(&e),
                                }
                            });
                            Channels {
                                expected: None,
                                engine,
                                oracle: None,
                                skipped: true,
                            }
                        }
                    }
                }),
            });
        }
    }
    Claim {
        id: "thm4",
        description: "levels 3..=10 closed forms on their validity sets; \
                      excluded indices are skipped (probed on request)",
        instances,
    }
}

/// Channels for one fixed-triple family point: g, positive-n, s and the
/// full threshold vector, against engine and table scans.
fn family_channels(set: &GeneratorSet, point: &ClosedFormPoint, ctx: &EvalCtx) -> Channels {
    let expected = json!({
        "g": point.g as i64,
        "n": point.n_count,
        "s": point.s_sum,
        "m": point.m_values,
    });
    let engine = match p_apery_set_capped(set, point.p_index, ctx.max_cells) {
        Ok(ap) => match (ap.sylvester_number_positive(), ap.sylvester_sum()) {
            (Ok(n), Ok(s)) => json!({
                "g": ap.frobenius(),
                "n": n,
                "s": s,
                "m": ap.values(),
            }),
            _ => json!({ "error": "non-integral extraction" }),
        },
        Err(e) => err_value(&e),
    };
    let oracle = match BruteForce::with_max_cells(set, point.p_index, ctx.max_cells) {
        Ok(b) => {
            let positive = b.sylvester_number() - u64::from(point.p_index >= 1);
            match scan_thresholds(b.table(), point.p_index) {
                Some(m) => json!({
                    "g": b.frobenius(),
                    "n": positive,
                    "s": b.sylvester_sum(),
                    "m": m,
                }),
                None => json!({ "error": "scan window too small" }),
            }
        }
        Err(e) => err_value(&e),
    };
    Channels {
        expected: Some(expected),
        engine: Some(engine),
        oracle: Some(oracle),
        skipped: false,
    }
}

fn prop1_claim() -> Claim {
    let instances = (1..=6u64)
        .map(|p| {
            let point = prop1_t345(p).unwrap();
            Instance {
                params: vec![("p", p as i64), ("p_index", point.p_index as i64)],
                eval: Box::new(move |ctx: &EvalCtx| {
                    let point = prop1_t345(p).unwrap();
                    family_channels(&GeneratorSet::new(&[6, 10, 15]).unwrap(), &point, ctx)
                }),
            }
        })
        .collect();
    Claim {
        id: "prop1",
        description: "(6,10,15) family at triangular levels: g, n, s and thresholds",
        instances,
    }
}

fn prop2_claim() -> Claim {
    let mut instances = Vec::new();
    for n in 0..=4u64 {
        for j in 1..=5u64 {
            let point = prop2_t234(n, j).unwrap();
            instances.push(Instance {
                params: vec![
                    ("n", n as i64),
                    ("j", j as i64),
                    ("p_index", point.p_index as i64),
                ],
                eval: Box::new(move |ctx: &EvalCtx| {
                    let point = prop2_t234(n, j).unwrap();
                    family_channels(&GeneratorSet::new(&[3, 6, 10]).unwrap(), &point, ctx)
                }),
            });
        }
    }
    Claim {
        id: "prop2",
        description: "(3,6,10) family: g, n, s and thresholds",
        instances,
    }
}

fn prop3_claim(id: &'static str, case: Prop3Case, pairs: Vec<(u64, u64)>) -> Claim {
    let instances = pairs
        .into_iter()
        .map(|(n, j)| {
            let point = prop3_t456(case, n, j).unwrap();
            Instance {
                params: vec![
                    ("n", n as i64),
                    ("j", j as i64),
                    ("p_index", point.p_index as i64),
                ],
                eval: Box::new(move |ctx: &EvalCtx| {
                    let point = prop3_t456(case, n, j).unwrap();
                    family_channels(&GeneratorSet::new(&[10, 15, 21]).unwrap(), &point, ctx)
                }),
            }
        })
        .collect();
    Claim {
        id,
        description: "(10,15,21) family branch: g, n, s and thresholds",
        instances,
    }
}

fn prop3_validity(case: Prop3Case, n_max: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for j in 0..=8u64 {
            if prop3_t456(case, n, j).is_ok() {
                out.push((n, j));
            }
        }
    }
    out
}

fn remark4_table_claim() -> Claim {
    let instances = REMARK4_TABLE
        .iter()
        .map(|&(p, g, n, s)| Instance {
            params: vec![("p", p as i64)],
            eval: Box::new(move |ctx: &EvalCtx| {
                let set = GeneratorSet::new(&[10, 15, 21]).unwrap();
                let engine = match p_apery_set_capped(&set, p, ctx.max_cells) {
                    Ok(ap) => match (ap.sylvester_number_positive(), ap.sylvester_sum()) {
                        (Ok(en), Ok(es)) => gns_value(ap.frobenius(), en, es),
                        _ => json!({ "error": "non-integral extraction" }),
                    },
                    Err(e) => err_value(&e),
                };
                let oracle = match BruteForce::with_max_cells(&set, p, ctx.max_cells) {
                    Ok(b) => gns_value(
                        b.frobenius(),
                        b.sylvester_number() - u64::from(p >= 1),
                        b.sylvester_sum(),
                    ),
                    Err(e) => err_value(&e),
                };
                Channels {
                    expected: Some(gns_value(g, n, s)),
                    engine: Some(engine),
                    oracle: Some(oracle),
                    skipped: false,
                }
            }),
        })
        .collect();
    Claim {
        id: "remark4-table",
        description: "printed g/n/s values for (10,15,21); n counts positive integers",
        instances,
    }
}

fn remark4_gap_claim() -> Claim {
    let mut rows: Vec<(u64, Option<i64>)> = REMARK4_ABSENT.iter().map(|&p| (p, None)).collect();
    rows.extend(REMARK4_PRESENT.iter().map(|&(p, g)| (p, Some(g))));
    rows.sort_by_key(|&(p, _)| p);
    let instances = rows
        .into_iter()
        .map(|(p, witness)| Instance {
            params: vec![("p", p as i64)],
            eval: Box::new(move |ctx: &EvalCtx| {
                let set = GeneratorSet::new(&[10, 15, 21]).unwrap();
                let engine = match exact_rep_frobenius_capped(&set, p, ctx.max_cells) {
                    Ok(v) => json!({ "exact": v }),
                    Err(e) => err_value(&e),
                };
                Channels {
                    expected: Some(json!({ "exact": witness })),
                    engine: Some(engine),
                    oracle: None,
                    skipped: false,
                }
            }),
        })
        .collect();
    Claim {
        id: "remark4-gap",
        description: "representation-count gaps for (10,15,21): levels with no exact witness",
        instances,
    }
}

fn fixture_15_21_28_claim() -> Claim {
    let instances = (0..=16u64)
        .map(|p| Instance {
            params: vec![("p", p as i64)],
            eval: Box::new(move |ctx: &EvalCtx| {
                let set = GeneratorSet::new(&[15, 21, 28]).unwrap();
                let g = FIXTURE_15_21_28_G[p as usize];
                if p == 15 {
                    // the repeated value comes from level 15 never being
                    // hit exactly
                    let engine = match (
                        p_apery_set_capped(&set, p, ctx.max_cells),
                        exact_rep_frobenius_capped(&set, p, ctx.max_cells),
                    ) {
                        (Ok(ap), Ok(exact)) => json!({ "g": ap.frobenius(), "exact": exact }),
                        (Err(e), _) | (_, Err(e)) => err_value(&e),
                    };
                    Channels {
                        expected: Some(json!({ "g": g, "exact": Value::Null })),
                        engine: Some(engine),
                        oracle: None,
                        skipped: false,
                    }
                } else {
                    g_channels(&set, p, g, ctx)
                }
            }),
        })
        .collect();
    Claim {
        id: "fixture-15-21-28",
        description: "printed level-p values for (15,21,28), including the level-15 repeat",
        instances,
    }
}

fn twovar_claim() -> Claim {
    let mut instances = Vec::new();
    for a in 2..=40u64 {
        for b in (a + 1)..=40u64 {
            if GeneratorSet::new(&[a, b]).unwrap().gcd() != 1 {
                continue;
            }
            instances.push(Instance {
                params: vec![("a", a as i64), ("b", b as i64)],
                eval: Box::new(move |ctx: &EvalCtx| {
                    let set = GeneratorSet::new(&[a, b]).unwrap();
                    let ps: Vec<u64> = (0..=5).collect();
                    let expected = json!({
                        "g": ps.iter().map(|&p| two_var_g(a, b, p).unwrap()).collect::<Vec<_>>(),
                        "n": ps.iter().map(|&p| two_var_n(a, b, p).unwrap()).collect::<Vec<_>>(),
                        "s": ps.iter().map(|&p| two_var_s(a, b, p).unwrap()).collect::<Vec<_>>(),
                    });
                    let mut eg = Vec::new();
                    let mut en = Vec::new();
                    let mut es = Vec::new();
                    let mut og = Vec::new();
                    let mut on = Vec::new();
                    let mut os = Vec::new();
                    for &p in &ps {
                        match summarize_capped(&set, p, &[], ctx.max_cells) {
                            Ok(s) => {
                                eg.push(s.g);
                                en.push(s.n_count);
                                es.push(s.s_sum);
                            }
                            Err(e) => {
                                return Channels {
                                    expected: Some(expected),
                                    engine: Some(err_value(&e)),
                                    oracle: None,
                                    skipped: false,
                                }
                            }
                        }
                        match BruteForce::with_max_cells(&set, p, ctx.max_cells) {
                            Ok(b) => {
                                og.push(b.frobenius());
                                on.push(b.sylvester_number());
                                os.push(b.sylvester_sum());
                            }
                            Err(e) => {
                                return Channels {
                                    expected: Some(expected),
                                    engine: None,
                                    oracle: Some(err_value(&e)),
                                    skipped: false,
                                }
                            }
                        }
                    }
                    Channels {
                        expected: Some(expected),
                        engine: Some(json!({ "g": eg, "n": en, "s": es })),
                        oracle: Some(json!({ "g": og, "n": on, "s": os })),
                        skipped: false,
                    }
                }),
            });
        }
    }
    Claim {
        id: "twovar",
        description: "two-generator closed forms for g/n/s at levels 0..=5",
        instances,
    }
}

fn decomp_claim() -> Claim {
    let instances = (2..=9u64)
        .map(|n| Instance {
            params: vec![("n", n as i64), ("m_max", 2000)],
            eval: Box::new(move |ctx: &EvalCtx| {
                let expected = json!({ "mismatches": 0, "first": Value::Null });
                let engine = match crate::decomp::decomposition_scan(n, 2000, ctx.max_cells) {
                    Ok((mismatches, first)) => json!({ "mismatches": mismatches, "first": first }),
                    Err(e) => err_value(&e),
                };
                Channels {
                    expected: Some(expected),
                    engine: Some(engine),
                    oracle: None,
                    skipped: false,
                }
            }),
        })
        .collect();
    Claim {
        id: "decomp",
        description: "scaled three-generator counts split into shifted two-generator counts",
        instances,
    }
}

fn zero_offres_claim() -> Claim {
    let instances = (2..=9u64)
        .map(|n| Instance {
            params: vec![("n", n as i64), ("bound", 500)],
            eval: Box::new(move |ctx: &EvalCtx| {
                let expected = json!({ "violations": 0 });
                let engine = match crate::decomp::offres_violations(n, 500, ctx.max_cells) {
                    Ok(v) => json!({ "violations": v }),
                    Err(e) => err_value(&e),
                };
                Channels {
                    expected: Some(expected),
                    engine: Some(engine),
                    oracle: None,
                    skipped: false,
                }
            }),
        })
        .collect();
    Claim {
        id: "zero-offres",
        description: "two consecutive triangular generators only represent multiples of their gcd",
        instances,
    }
}

pub fn all_claims() -> Vec<Claim> {
    vec![
        frobenius_list_claim(
            "p0-list",
            "printed level-0 values for n = 2..7",
            0,
            &P0_LIST,
        ),
        frobenius_list_claim(
            "p1-list",
            "printed level-1 values for n = 2..7",
            1,
            &P1_LIST,
        ),
        frobenius_list_claim(
            "p2-list",
            "printed level-2 values for n = 2,4..8",
            2,
            &P2_LIST,
        ),
        thm1_claim(),
        closed_form_frobenius_claim("thm2", "level-1 closed form n(n+1)(n+2)-1", 1, 2..=20, g_p1),
        closed_form_frobenius_claim("thm3", "level-2 parity closed form", 2, 2..=16, g_p2),
        thm4_claim(),
        prop1_claim(),
        prop2_claim(),
        prop3_claim(
            "prop3-re",
            Prop3Case::Even,
            prop3_validity(Prop3Case::Even, 5),
        ),
        prop3_claim(
            "prop3-ro",
            Prop3Case::Odd,
            prop3_validity(Prop3Case::Odd, 5),
        ),
        prop3_claim(
            "prop3-roo",
            Prop3Case::OddLow,
            prop3_validity(Prop3Case::OddLow, 5),
        ),
        remark4_table_claim(),
        remark4_gap_claim(),
        fixture_15_21_28_claim(),
        twovar_claim(),
        decomp_claim(),
        zero_offres_claim(),
    ]
}
