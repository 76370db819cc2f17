//! Bulk evaluation over (index, level) grids.
//!
//! Cells are independent pure computations, so with the `parallel` feature
//! (on by default) they fan out over rayon; without it the same code runs
//! on one thread. `frobenius_grid_seq` is always available so the two
//! paths can be compared directly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::apery::p_apery_set_capped;
use crate::error::Result;
use crate::gens::TriangularTriple;

/// g(t_n, t_{n+1}, t_{n+2}; p) for every n in `n_range` and p in `p_range`.
/// Rows are indexed by p, columns by n.
pub fn frobenius_grid_seq(
    n_range: (u64, u64),
    p_range: (u64, u64),
    max_cells: u64,
) -> Result<Vec<Vec<i64>>> {
    cells(n_range, p_range)
        .into_iter()
        .map(|(n, p)| cell(n, p, max_cells))
        .collect::<Result<Vec<_>>>()
        .map(|flat| into_rows(flat, n_range, p_range))
}

#[cfg(feature = "parallel")]
pub fn frobenius_grid(
    n_range: (u64, u64),
    p_range: (u64, u64),
    max_cells: u64,
) -> Result<Vec<Vec<i64>>> {
    cells(n_range, p_range)
        .into_par_iter()
        .map(|(n, p)| cell(n, p, max_cells))
        .collect::<Result<Vec<_>>>()
        .map(|flat| into_rows(flat, n_range, p_range))
}

#[cfg(not(feature = "parallel"))]
pub fn frobenius_grid(
    n_range: (u64, u64),
    p_range: (u64, u64),
    max_cells: u64,
) -> Result<Vec<Vec<i64>>> {
    frobenius_grid_seq(n_range, p_range, max_cells)
}

fn cells(n_range: (u64, u64), p_range: (u64, u64)) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in p_range.0..=p_range.1 {
        for n in n_range.0..=n_range.1 {
            out.push((n, p));
        }
    }
    out
}

fn cell(n: u64, p: u64, max_cells: u64) -> Result<i64> {
    let triple = TriangularTriple::new(n)?;
    Ok(p_apery_set_capped(triple.set(), p, max_cells)?.frobenius())
}

fn into_rows(flat: Vec<i64>, n_range: (u64, u64), p_range: (u64, u64)) -> Vec<Vec<i64>> {
    let width = (n_range.1 - n_range.0 + 1) as usize;
    let rows = (p_range.1 - p_range.0 + 1) as usize;
    let mut out = Vec::with_capacity(rows);
    for r in 0..rows {
        out.push(flat[r * width..(r + 1) * width].to_vec());
    }
    out
}
