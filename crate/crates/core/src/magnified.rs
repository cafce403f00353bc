//! Magnified state matrices: transfer across whole grids.
//!
//! The magnified matrix for an `m x n` grid is `2^(m+n)` square. Its row
//! index concatenates a left-boundary word (low `m` positions) with a
//! top word, its column index a right word with a bottom word, and each
//! entry counts the suitably connected fillings of the grid with those
//! four boundaries.
//!
//! It is built column by column: appending column `k+1` multiplies, per
//! quadrant, by a block-diagonal stack of the height-`m` state matrices.
//! [`block_diag_multiply`] performs those products without materializing
//! the block-diagonal factor.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::count::{Backend, BackendKind, Count, CountScalar};
use crate::error::Error;
use crate::matrix::SquareMatrix;
use crate::state_matrix::{build_state_matrices_with_limit_in, StateMatrixKind};

/// Default cap on `m + n`; the matrix is `2^(m+n)` square.
pub const MAX_SIZE: usize = 14;

/// The magnified state matrix of an `m x n` grid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnifiedStateMatrix<S> {
    m: usize,
    n: usize,
    matrix: SquareMatrix<S>,
}

impl<S: CountScalar> MagnifiedStateMatrix<S> {
    /// Wrap an already-computed matrix.
    ///
    /// # Errors
    ///
    /// [`Error::ShapeMismatch`] unless the matrix is `2^(m+n)` square.
    pub fn from_parts(m: usize, n: usize, matrix: SquareMatrix<S>) -> Result<Self, Error> {
        let expected = 1usize << (m + n);
        if matrix.dim() != expected {
            return Err(Error::ShapeMismatch {
                got: matrix.dim(),
                expected,
            });
        }
        Ok(MagnifiedStateMatrix { m, n, matrix })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix<S> {
        &self.matrix
    }

    /// Entry by 1-based state indices.
    ///
    /// # Errors
    ///
    /// [`Error::EntryOutOfRange`] unless `1 <= i, j <= 2^(m+n)`.
    pub fn entry(&self, i: usize, j: usize) -> Result<Count, Error> {
        let dim = self.dim();
        if i == 0 || j == 0 || i > dim || j > dim {
            return Err(Error::EntryOutOfRange { i, j, dim });
        }
        Ok(self.matrix.get_count(i - 1, j - 1))
    }

    pub fn entry_sum(&self) -> Count {
        self.matrix.entry_sum()
    }

    pub fn write_dump(&self, w: &mut dyn Write) -> io::Result<()> {
        self.matrix.write_dump(w)
    }
}

/// Compute `a * (I_copies ⊗ b)` — `a` times a block-diagonal matrix with
/// `copies` copies of `b` — without building the right-hand factor.
/// Rows of the result are computed in parallel with checked arithmetic.
///
/// # Errors
///
/// [`Error::DimensionMismatch`] unless `a` is exactly `copies` times as
/// large as `b` and `copies > 0`; [`Error::Overflow`] if a product or
/// sum leaves the scalar's range.
pub fn block_diag_multiply<S: CountScalar>(
    a: &SquareMatrix<S>,
    b: &SquareMatrix<S>,
    copies: usize,
) -> Result<SquareMatrix<S>, Error> {
    let d = b.dim();
    if copies == 0 || a.dim() != copies * d {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: d,
            copies,
        });
    }
    let dim = a.dim();
    let mut data = vec![S::zero(); dim * dim];
    data.par_chunks_mut(dim)
        .enumerate()
        .try_for_each(|(i, out_row)| {
            let a_row = a.row(i);
            for q in 0..copies {
                let base = q * d;
                for r in 0..d {
                    let a_ir = &a_row[base + r];
                    if a_ir.is_zero() {
                        continue;
                    }
                    let b_row = b.row(r);
                    for s in 0..d {
                        if !S::checked_mul_acc(&mut out_row[base + s], a_ir, &b_row[s]) {
                            return Err(Error::Overflow);
                        }
                    }
                }
            }
            Ok(())
        })?;
    Ok(SquareMatrix::from_raw(dim, data))
}

/// Build the magnified state matrix for an `m x n` grid on scalar `S`.
///
/// # Errors
///
/// [`Error::DimensionLimit`] when `m + n` exceeds [`MAX_SIZE`],
/// [`Error::Overflow`] on a fixed-width backend.
pub fn build_magnified_in<S: CountScalar>(
    m: usize,
    n: usize,
) -> Result<MagnifiedStateMatrix<S>, Error> {
    build_magnified_with_limit_in(m, n, MAX_SIZE)
}

/// [`build_magnified_in`] with an explicit cap on `m + n`.
pub fn build_magnified_with_limit_in<S: CountScalar>(
    m: usize,
    n: usize,
    limit: usize,
) -> Result<MagnifiedStateMatrix<S>, Error> {
    if m + n > limit {
        return Err(Error::DimensionLimit {
            requested: m + n,
            limit,
        });
    }
    let set = build_state_matrices_with_limit_in::<S>(m, limit)?;

    // Zero columns leave only the empty grid, whose left and right
    // boundaries are the same edge: the identity matrix.
    let mut cur = SquareMatrix::<S>::identity(1 << m);
    for k in 0..n {
        // Appending a column extends both boundary words by one letter
        // (the new high bit): the row half picks the new top letter, the
        // column half the new bottom letter, and each quadrant multiplies
        // by the state matrix with that (bottom, top) signature.
        let copies = 1usize << k;
        let q11 = block_diag_multiply(&cur, set.kind(StateMatrixKind::XPlus), copies)?;
        let q12 = block_diag_multiply(&cur, set.kind(StateMatrixKind::OMinus), copies)?;
        let q21 = block_diag_multiply(&cur, set.kind(StateMatrixKind::XMinus), copies)?;
        let q22 = block_diag_multiply(&cur, set.kind(StateMatrixKind::OPlus), copies)?;
        cur = SquareMatrix::from_quadrants(q11, q12, q21, q22);
    }
    MagnifiedStateMatrix::from_parts(m, n, cur)
}

/// A magnified matrix on whichever backend a [`Backend`] request
/// resolves to.
#[derive(Clone, Debug)]
pub enum AnyMagnified {
    Fixed128(MagnifiedStateMatrix<u128>),
    Bignum(MagnifiedStateMatrix<Count>),
}

impl AnyMagnified {
    /// # Errors
    ///
    /// As [`build_magnified_in`]; with [`Backend::Auto`] an overflow of
    /// the fixed-width pass triggers a bignum rerun instead.
    pub fn build(m: usize, n: usize, backend: Backend) -> Result<Self, Error> {
        match backend {
            Backend::Fixed128 => Ok(AnyMagnified::Fixed128(build_magnified_in(m, n)?)),
            Backend::Bignum => Ok(AnyMagnified::Bignum(build_magnified_in(m, n)?)),
            Backend::Auto => match build_magnified_in::<u128>(m, n) {
                Ok(mag) => Ok(AnyMagnified::Fixed128(mag)),
                Err(Error::Overflow) => Ok(AnyMagnified::Bignum(build_magnified_in(m, n)?)),
                Err(e) => Err(e),
            },
        }
    }

    pub fn backend(&self) -> BackendKind {
        match self {
            AnyMagnified::Fixed128(_) => BackendKind::Fixed128,
            AnyMagnified::Bignum(_) => BackendKind::Bignum,
        }
    }

    pub fn m(&self) -> usize {
        match self {
            AnyMagnified::Fixed128(mag) => mag.m(),
            AnyMagnified::Bignum(mag) => mag.m(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyMagnified::Fixed128(mag) => mag.n(),
            AnyMagnified::Bignum(mag) => mag.n(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyMagnified::Fixed128(mag) => mag.dim(),
            AnyMagnified::Bignum(mag) => mag.dim(),
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<Count, Error> {
        match self {
            AnyMagnified::Fixed128(mag) => mag.entry(i, j),
            AnyMagnified::Bignum(mag) => mag.entry(i, j),
        }
    }

    pub fn entry_sum(&self) -> Count {
        match self {
            AnyMagnified::Fixed128(mag) => mag.entry_sum(),
            AnyMagnified::Bignum(mag) => mag.entry_sum(),
        }
    }

    pub fn write_dump(&self, w: &mut dyn Write) -> io::Result<()> {
        match self {
            AnyMagnified::Fixed128(mag) => mag.write_dump(w),
            AnyMagnified::Bignum(mag) => mag.write_dump(w),
        }
    }
}
