//! Exploratory scanner for the conjectured shape of the level-p values:
//! 4(g+1)/((n+1)(n+2)) = q*n + r with r in {-3, 0, 3, 6}. Emits candidate
//! fits, never verdicts.

use serde::Serialize;

use pfrob_core::apery::p_apery_set_capped;
use pfrob_core::gens::TriangularTriple;
use pfrob_core::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjectureFit {
    pub p: u64,
    /// "even" or "odd" indices n.
    pub parity: &'static str,
    pub q: u64,
    pub offset: i64,
    /// Smallest sampled n from which every larger sampled n of this
    /// parity fits (q, offset).
    pub n_from: u64,
}

const OFFSETS: [i64; 4] = [-3, 0, 3, 6];

fn candidates(n: u64, g: i64) -> Vec<(u64, i64)> {
    let den = (n as i64 + 1) * (n as i64 + 2);
    let v4 = 4 * (g + 1);
    if v4 % den != 0 {
        return Vec::new();
    }
    let v = v4 / den;
    OFFSETS
        .iter()
        .filter_map(|&r| {
            let num = v - r;
            (num > 0 && num % n as i64 == 0).then(|| ((num / n as i64) as u64, r))
        })
        .collect()
}

/// Scan levels 0..=p_max over indices in n_range, one row per
/// (level, parity) that admits a consistent fit.
pub fn conjecture_scan(
    n_range: (u64, u64),
    p_max: u64,
    max_cells: u64,
) -> Result<Vec<ConjectureFit>> {
    let mut out = Vec::new();
    for p in 0..=p_max {
        for (parity, rem) in [("even", 0u64), ("odd", 1u64)] {
            let lo = n_range.0.max(if rem == 1 { 3 } else { 2 });
            let ns: Vec<u64> = (lo..=n_range.1).filter(|n| n % 2 == rem).collect();
            if ns.is_empty() {
                continue;
            }
            let mut cands: Vec<Vec<(u64, i64)>> = Vec::with_capacity(ns.len());
            for &n in &ns {
                let triple = TriangularTriple::new(n)?;
                let g = p_apery_set_capped(triple.set(), p, max_cells)?.frobenius();
                cands.push(candidates(n, g));
            }
            // a fit must hold at the largest sampled index; extend it
            // downward as far as it stays consistent
            let last = match cands.last() {
                Some(c) if !c.is_empty() => c.clone(),
                _ => continue,
            };
            let mut best: Option<(u64, i64, usize)> = None;
            for &(q, r) in &last {
                let mut start = ns.len() - 1;
                while start > 0 && cands[start - 1].contains(&(q, r)) {
                    start -= 1;
                }
                let better = match best {
                    None => true,
                    Some((bq, br, bs)) => {
                        start < bs || (start == bs && (r.abs(), q) < (br.abs(), bq))
                    }
                };
                if better {
                    best = Some((q, r, start));
                }
            }
            if let Some((q, offset, start)) = best {
                out.push(ConjectureFit {
                    p,
                    parity,
                    q,
                    offset,
                    n_from: ns[start],
                });
            }
        }
    }
    Ok(out)
}
