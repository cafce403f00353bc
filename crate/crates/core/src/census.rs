//! Boundary weights and the top-level graph-mosaic census.
//!
//! A magnified state matrix tabulates grids by boundary state; closing
//! the boundary means summing its entries weighted by the number of ways
//! to join the exposed connection points outside the grid. That weight
//! depends only on how many connection points the two boundary words
//! expose — the combined Hamming weight [`hamming_pair`] — and equals
//! the Lucas number of that total: joining `t` points around the closed
//! boundary is the cyclic bridged/unbridged choice counted by
//! [`crate::oracle::brute_bridge_count`].
//!
//! Lucas numbers are always produced by the integer recursion
//! `L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}`. The closed form
//! `L_k = ((1+√5)^k + (1−√5)^k) / 2^k` is recorded for reference only;
//! no floating-point arithmetic is ever involved.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::count::{Backend, BackendKind, Count, CountScalar};
use crate::error::Error;
use crate::magnified::{build_magnified_in, MagnifiedStateMatrix};

/// Lucas numbers `L_0..=L_max`, precomputed as exact integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryWeightTable {
    values: Vec<Count>,
}

impl BoundaryWeightTable {
    /// Table covering indices `0..=max_index` via the integer recursion.
    pub fn new(max_index: usize) -> Self {
        let mut values = Vec::with_capacity(max_index + 1);
        values.push(Count::from(2u64));
        if max_index >= 1 {
            values.push(Count::one());
        }
        for k in 2..=max_index {
            let next = &values[k - 1] + &values[k - 2];
            values.push(next);
        }
        BoundaryWeightTable { values }
    }

    /// Adopt arbitrary weights (index `k` = position `k`). Exists so
    /// verification can run the real summation with a deliberately
    /// falsified table and watch the mismatch surface.
    ///
    /// # Panics
    ///
    /// If `values` is empty.
    pub fn from_values(values: Vec<Count>) -> Self {
        assert!(!values.is_empty(), "a weight table needs at least index 0");
        BoundaryWeightTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<&Count> {
        self.values.get(k)
    }

    pub fn values(&self) -> &[Count] {
        &self.values
    }
}

/// The `k`-th Lucas number by integer recursion: 2, 1, 3, 4, 7, 11, ...
pub fn lucas(k: usize) -> Count {
    BoundaryWeightTable::new(k).values[k].clone()
}

/// Combined Hamming weight of two 1-based state indices: the number of
/// connection points the `i`-th and `j`-th state words expose together.
///
/// # Panics
///
/// If either index is zero (state indices start at 1).
pub fn hamming_pair(i: usize, j: usize) -> u32 {
    assert!(i >= 1 && j >= 1, "state indices are 1-based");
    (i - 1).count_ones() + (j - 1).count_ones()
}

/// Close the boundary of a magnified state matrix: sum every entry
/// weighted by the Lucas number of its [`hamming_pair`].
///
/// # Errors
///
/// [`Error::Overflow`] if the sum leaves a fixed-width scalar's range.
pub fn lucas_weighted_sum<S: CountScalar>(mag: &MagnifiedStateMatrix<S>) -> Result<Count, Error> {
    let table = BoundaryWeightTable::new(2 * (mag.m() + mag.n()));
    lucas_weighted_sum_with_table(mag, &table)
}

/// [`lucas_weighted_sum`] with a caller-supplied weight table. Rows are
/// summed in parallel; the reduction is associative, so the result is
/// identical across thread counts.
///
/// # Errors
///
/// [`Error::WeightTableTooShort`] if the table does not reach index
/// `2(m+n)`; [`Error::Overflow`] as in [`lucas_weighted_sum`].
pub fn lucas_weighted_sum_with_table<S: CountScalar>(
    mag: &MagnifiedStateMatrix<S>,
    table: &BoundaryWeightTable,
) -> Result<Count, Error> {
    let needed = 2 * (mag.m() + mag.n());
    if table.max_index() < needed {
        return Err(Error::WeightTableTooShort {
            max: table.max_index(),
            needed,
        });
    }
    let weights = table.values()[..=needed]
        .iter()
        .map(S::from_count)
        .collect::<Option<Vec<S>>>()
        .ok_or(Error::Overflow)?;

    let matrix = mag.matrix();
    let total = (0..matrix.dim())
        .into_par_iter()
        .map(|i| {
            let pi = i.count_ones() as usize;
            let mut acc = S::zero();
            for (j, entry) in matrix.row(i).iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let weight = &weights[pi + j.count_ones() as usize];
                if !S::checked_mul_acc(&mut acc, entry, weight) {
                    return Err(Error::Overflow);
                }
            }
            Ok(acc)
        })
        .try_reduce(S::zero, |a, b| a.checked_add(&b).ok_or(Error::Overflow))?;
    Ok(total.to_count())
}

/// How a census value was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CountMethod {
    /// Magnified state matrix plus Lucas-weighted boundary sum.
    Formula,
    /// A grid with a side of 1 admits only the all-blank filling.
    SpecialCase,
    /// Brute-force enumeration (used by verification reporting only).
    Oracle,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Formula => "formula",
            CountMethod::SpecialCase => "special-case",
            CountMethod::Oracle => "oracle",
        })
    }
}

/// Outcome of [`count_graph_mosaics`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusResult {
    pub rows: usize,
    pub cols: usize,
    pub count: Count,
    pub method: CountMethod,
    pub backend: BackendKind,
    pub elapsed: Duration,
    /// Dimension of the largest matrix held during the computation.
    pub peak_dim: usize,
}

/// Count the graph mosaics on a `rows x cols` grid.
///
/// Grids with a side of 1 short-circuit to 1: every cell of such a grid
/// touches two opposite boundary edges, which forces all four of its
/// edges blank, so only the all-blank filling remains. All other grids
/// go through the magnified state matrix of the `(rows-2, cols-2)`
/// interior — smaller side first, so the cheap dimension is doubled most
/// often — and the Lucas-weighted boundary sum.
///
/// # Errors
///
/// [`Error::EmptyMosaic`] for a zero side, [`Error::DimensionLimit`]
/// when `rows + cols - 4` exceeds [`crate::magnified::MAX_SIZE`].
/// [`Backend::Fixed128`] reports [`Error::Overflow`] if the count does
/// not fit in 128 bits; [`Backend::Auto`] falls back to big integers
/// instead.
pub fn count_graph_mosaics(
    rows: usize,
    cols: usize,
    backend: Backend,
) -> Result<CensusResult, Error> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMosaic);
    }
    let start = Instant::now();
    if rows == 1 || cols == 1 {
        let resolved = match backend {
            Backend::Bignum => BackendKind::Bignum,
            Backend::Auto | Backend::Fixed128 => BackendKind::Fixed128,
        };
        return Ok(CensusResult {
            rows,
            cols,
            count: Count::one(),
            method: CountMethod::SpecialCase,
            backend: resolved,
            elapsed: start.elapsed(),
            peak_dim: 1,
        });
    }
    let (count, resolved) = match backend {
        Backend::Fixed128 => (count_graph_mosaics_in::<u128>(rows, cols)?, BackendKind::Fixed128),
        Backend::Bignum => (count_graph_mosaics_in::<Count>(rows, cols)?, BackendKind::Bignum),
        Backend::Auto => match count_graph_mosaics_in::<u128>(rows, cols) {
            Ok(count) => (count, BackendKind::Fixed128),
            Err(Error::Overflow) => {
                (count_graph_mosaics_in::<Count>(rows, cols)?, BackendKind::Bignum)
            }
            Err(e) => return Err(e),
        },
    };
    let peak_dim = 1 << (rows + cols - 4);
    Ok(CensusResult {
        rows,
        cols,
        count,
        method: CountMethod::Formula,
        backend: resolved,
        elapsed: start.elapsed(),
        peak_dim,
    })
}

/// The bare count on a fixed scalar backend (no timing, no fallback).
///
/// # Errors
///
/// As [`count_graph_mosaics`] with a fixed backend.
pub fn count_graph_mosaics_in<S: CountScalar>(rows: usize, cols: usize) -> Result<Count, Error> {
    if rows <= 1 || cols <= 1 {
        return count_trivial(rows, cols);
    }
    let table = BoundaryWeightTable::new(2 * (rows + cols - 4));
    count_graph_mosaics_with_table_in::<S>(rows, cols, &table)
}

/// [`count_graph_mosaics_in`] with a caller-supplied weight table.
///
/// # Errors
///
/// Additionally [`Error::WeightTableTooShort`] as in
/// [`lucas_weighted_sum_with_table`].
pub fn count_graph_mosaics_with_table_in<S: CountScalar>(
    rows: usize,
    cols: usize,
    table: &BoundaryWeightTable,
) -> Result<Count, Error> {
    if rows <= 1 || cols <= 1 {
        return count_trivial(rows, cols);
    }
    let m = rows.min(cols) - 2;
    let n = rows.max(cols) - 2;
    let mag = build_magnified_in::<S>(m, n)?;
    lucas_weighted_sum_with_table(&mag, table)
}

fn count_trivial(rows: usize, cols: usize) -> Result<Count, Error> {
    if rows == 0 || cols == 0 {
        Err(Error::EmptyMosaic)
    } else {
        Ok(Count::one())
    }
}
