//! Decomposition cross-checks: a scaled count over a triangular triple
//! splits into a finite sum of shifted counts over the reduced
//! two-generator set, and off-residue values over the top two generators
//! are never representable.

use serde_json::json;
use std::time::Instant;

use crate::report::{ClaimReport, Verdict};
use pfrob_core::denumerant::DenumerantTable;
use pfrob_core::gens::{gcd_consecutive_triangular, triangular, GeneratorSet, TriangularTriple};
use pfrob_core::{Error, Result};

/// The scale factor and reduced pair for index n: even n divides the top
/// two generators by (n+2)/2 leaving (n+1, n+3); odd n divides by n+2
/// leaving ((n+1)/2, (n+3)/2).
fn reduction(n: u64) -> Result<(u64, [u64; 2])> {
    if n < 2 {
        return Err(Error::Domain("decomposition needs n >= 2".into()));
    }
    if n.is_multiple_of(2) {
        Ok(((n + 2) / 2, [n + 1, n + 3]))
    } else {
        #[allow(clippy::manual_div_ceil)]
        Ok((n + 2, [(n + 1) / 2, (n + 3) / 2]))
    }
}

/// Both sides of the identity at a single m: the scaled triple count on
/// the left, the sum of shifted pair counts on the right.
pub fn decomposition_sides(n: u64, m: u64, max_cells: u64) -> Result<(u64, u64)> {
    let (scale, pair) = reduction(n)?;
    let triple = TriangularTriple::new(n)?;
    let triple_table = DenumerantTable::build_capped(triple.set(), scale * m, max_cells)?;
    let pair_table = DenumerantTable::build_capped(&GeneratorSet::new(&pair)?, m, max_cells)?;
    Ok(sides_from_tables(n, m, scale, &triple_table, &pair_table))
}

fn sides_from_tables(
    n: u64,
    m: u64,
    scale: u64,
    triple_table: &DenumerantTable,
    pair_table: &DenumerantTable,
) -> (u64, u64) {
    let t_n = triangular(n);
    let lhs = triple_table.count((scale * m) as i64);
    let rhs = (0..=m / t_n)
        .map(|j| pair_table.count((m - j * t_n) as i64))
        .sum();
    (lhs, rhs)
}

/// Scan m = 0..=m_max; returns how many m break the identity and the
/// first offender.
pub fn decomposition_scan(n: u64, m_max: u64, max_cells: u64) -> Result<(u64, Option<u64>)> {
    let (scale, pair) = reduction(n)?;
    let triple = TriangularTriple::new(n)?;
    let triple_table = DenumerantTable::build_capped(triple.set(), scale * m_max, max_cells)?;
    let pair_table = DenumerantTable::build_capped(&GeneratorSet::new(&pair)?, m_max, max_cells)?;
    let mut mismatches = 0;
    let mut first = None;
    for m in 0..=m_max {
        let (lhs, rhs) = sides_from_tables(n, m, scale, &triple_table, &pair_table);
        if lhs != rhs {
            mismatches += 1;
            first.get_or_insert(m);
        }
    }
    Ok((mismatches, first))
}

/// One-shot identity check packaged as a report; the left side is the
/// engine channel, the right side the oracle channel.
pub fn verify_decomposition(n: u64, m: u64) -> Result<ClaimReport> {
    let start = Instant::now();
    let (lhs, rhs) = decomposition_sides(n, m, pfrob_core::DEFAULT_MAX_CELLS)?;
    Ok(ClaimReport {
        claim_id: "decomp-point".into(),
        params: vec![("n".into(), n as i64), ("m".into(), m as i64)],
        expected: None,
        engine: Some(json!(lhs)),
        oracle: Some(json!(rhs)),
        verdict: if lhs == rhs {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Count values nu <= bound that are off the gcd lattice of
/// (t_{n+1}, t_{n+2}) yet still representable. Should always be zero.
pub fn offres_violations(n: u64, bound: u64, max_cells: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("off-residue check needs n >= 2".into()));
    }
    let pair = GeneratorSet::new(&[triangular(n + 1), triangular(n + 2)])?;
    let g = gcd_consecutive_triangular(n);
    let table = DenumerantTable::build_capped(&pair, bound, max_cells)?;
    Ok((0..=bound)
        .filter(|&nu| nu % g != 0 && table.count(nu as i64) > 0)
        .count() as u64)
}

pub fn verify_zero_offres(n: u64, bound: u64) -> Result<ClaimReport> {
    let start = Instant::now();
    let violations = offres_violations(n, bound, pfrob_core::DEFAULT_MAX_CELLS)?;
    Ok(ClaimReport {
        claim_id: "zero-offres-point".into(),
        params: vec![("n".into(), n as i64), ("bound".into(), bound as i64)],
        expected: Some(json!({ "violations": 0 })),
        engine: Some(json!({ "violations": violations })),
        oracle: None,
        verdict: if violations == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_points() {
        let r = verify_decomposition(4, 50).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let r = verify_decomposition(3, 0).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.engine, Some(json!(1)));
        let r = verify_decomposition(2, 19).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn off_residue_examples() {
        assert_eq!(verify_zero_offres(4, 500).unwrap().verdict, Verdict::Pass);
        assert_eq!(verify_zero_offres(3, 500).unwrap().verdict, Verdict::Pass);
        // 7 is odd while both generators of the n = 2 pair are even
        let pair = GeneratorSet::new(&[6, 10]).unwrap();
        let table = DenumerantTable::build(&pair, 10).unwrap();
        assert_eq!(table.count(7), 0);
    }
}
