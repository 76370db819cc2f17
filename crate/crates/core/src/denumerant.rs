//! Exact representation counting d(n; A) and representation enumeration.
//!
//! The table here is the ground truth that every closed form and every
//! Apery-style shortcut in the other modules is checked against, so this
//! module deliberately stays dumb: one unbounded-coin DP and direct scans
//! over it.

use crate::error::{Error, Result};
use crate::gens::GeneratorSet;

/// Default cap on DP table cells, overridable through `PFROB_MAX_TABLE`
/// at the CLI layer.
pub const DEFAULT_MAX_CELLS: u64 = 100_000_000;

/// Prefix table of representation counts d(0..=capacity; A).
///
/// Immutable once built; safe to share across threads.
#[derive(Debug, Clone)]
pub struct DenumerantTable {
    gens: GeneratorSet,
    counts: Vec<u64>,
}

impl DenumerantTable {
    pub fn build(set: &GeneratorSet, capacity: u64) -> Result<Self> {
        Self::build_capped(set, capacity, DEFAULT_MAX_CELLS)
    }

    /// Unbounded-coin DP: processing one generator at a time yields the
    /// coefficients of 1/prod(1 - x^a), not ordered compositions.
    /// Counter additions are checked; overflow is a hard error.
    pub fn build_capped(set: &GeneratorSet, capacity: u64, max_cells: u64) -> Result<Self> {
        let cells = capacity.checked_add(1).ok_or(Error::TableLimit {
            needed: u64::MAX,
            limit: max_cells,
        })?;
        if cells > max_cells {
            return Err(Error::TableLimit {
                needed: cells,
                limit: max_cells,
            });
        }
        let mut counts = vec![0u64; cells as usize];
        counts[0] = 1;
        for &a in set.gens().iter() {
            let a = a as usize;
            for n in a..counts.len() {
                counts[n] = counts[n]
                    .checked_add(counts[n - a])
                    .ok_or(Error::CountOverflow { n: n as u64 })?;
            }
        }
        Ok(Self {
            gens: set.clone(),
            counts,
        })
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn capacity(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    /// d(n; A). Negative n counts as 0 representations.
    ///
    /// Panics if n exceeds the table capacity.
    pub fn count(&self, n: i64) -> u64 {
        if n < 0 {
            return 0;
        }
        self.counts[n as usize]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }
}

/// d(n; A), building a table just large enough. Negative n gives 0.
pub fn denumerant(set: &GeneratorSet, n: i64) -> Result<u64> {
    if n < 0 {
        return Ok(0);
    }
    let table = DenumerantTable::build(set, n as u64)?;
    Ok(table.count(n))
}

/// One solution of a1*x1 + ... + ak*xk = n in nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    coeffs: Vec<u64>,
}

impl Representation {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl std::fmt::Display for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Enumeration result; `truncated` flags that `limit` was hit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representations {
    pub reps: Vec<Representation>,
    pub truncated: bool,
}

/// All representations of n, in ascending lexicographic order of the
/// coefficient vectors, truncated at `limit`.
pub fn enumerate_representations(set: &GeneratorSet, n: u64, limit: usize) -> Representations {
    let gens = set.gens();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(gens.len());
    let truncated = !collect(gens, n, limit, &mut prefix, &mut out);
    Representations {
        reps: out,
        truncated,
    }
}

fn collect(
    gens: &[u64],
    remaining: u64,
    limit: usize,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Representation>,
) -> bool {
    if gens.len() == 1 {
        if remaining.is_multiple_of(gens[0]) {
            if out.len() >= limit {
                return false;
            }
            let mut coeffs = prefix.clone();
            coeffs.push(remaining / gens[0]);
            out.push(Representation { coeffs });
        }
        return true;
    }
    for x in 0..=remaining / gens[0] {
        prefix.push(x);
        let full = collect(&gens[1..], remaining - x * gens[0], limit, prefix, out);
        prefix.pop();
        if !full {
            return false;
        }
    }
    true
}

/// d(n; 2, 3) in closed form: floor((n+2)/2) - floor((n+2)/3).
#[allow(clippy::manual_div_ceil)]
pub fn closed_form_d23(n: u64) -> u64 {
    (n + 2) / 2 - (n + 2) / 3
}

/// Brute-force scans over a DP table sized to provably cover every integer
/// with at most `p` representations.
///
/// The window bound is the largest per-residue-class (mod a1) first index
/// whose count reaches p+1; shift monotonicity d(n + a1) >= d(n) makes
/// everything at or beyond it have count > p within its class.
#[derive(Debug)]
pub struct BruteForce {
    table: DenumerantTable,
    window: u64,
    p: u64,
}

impl BruteForce {
    pub fn new(set: &GeneratorSet, p: u64) -> Result<Self> {
        Self::with_max_cells(set, p, DEFAULT_MAX_CELLS)
    }

    pub fn with_max_cells(set: &GeneratorSet, p: u64, max_cells: u64) -> Result<Self> {
        set.require_engine_ready()?;
        let a1 = set.a1() as usize;
        let mut capacity = (4 * set.gens().last().unwrap()).max(64);
        loop {
            let table = DenumerantTable::build_capped(set, capacity, max_cells)?;
            let mut remaining = a1;
            let mut seen = vec![false; a1];
            let mut window = 0u64;
            for (n, &c) in table.counts().iter().enumerate() {
                if !seen[n % a1] && c > p {
                    seen[n % a1] = true;
                    window = n as u64;
                    remaining -= 1;
                    if remaining == 0 {
                        break;
                    }
                }
            }
            if remaining == 0 {
                return Ok(Self { table, window, p });
            }
            capacity = capacity.checked_mul(2).ok_or(Error::TableLimit {
                needed: u64::MAX,
                limit: max_cells,
            })?;
        }
    }

    pub fn table(&self) -> &DenumerantTable {
        &self.table
    }

    fn low(&self) -> impl Iterator<Item = u64> + '_ {
        let p = self.p;
        self.table.counts()[..=self.window as usize]
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c <= p)
            .map(|(n, _)| n as u64)
    }

    /// Largest n with d(n) <= p, or -1 if there is none.
    pub fn frobenius(&self) -> i64 {
        self.low().last().map_or(-1, |n| n as i64)
    }

    /// Number of n >= 0 with d(n) <= p.
    pub fn sylvester_number(&self) -> u64 {
        self.low().count() as u64
    }

    /// Sum of all n >= 0 with d(n) <= p.
    pub fn sylvester_sum(&self) -> u64 {
        self.low().sum()
    }

    /// Sum of n^mu over all n >= 0 with d(n) <= p.
    pub fn power_sum(&self, mu: u32) -> u128 {
        self.low().map(|n| (n as u128).pow(mu)).sum()
    }
}

/// The set of distinct counts d(n) for n in 0..=n_max.
pub fn occurring_counts(table: &DenumerantTable, n_max: u64) -> std::collections::BTreeSet<u64> {
    table.counts()[..=(n_max as usize).min(table.counts().len() - 1)]
        .iter()
        .copied()
        .collect()
}
