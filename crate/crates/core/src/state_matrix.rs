//! Column state matrices.
//!
//! For single-column mosaics of height `m`, entry `(i, j)` of a state
//! matrix counts the suitably connected columns whose left boundary is
//! the `i`-th state word and right boundary the `j`-th, with the bottom
//! and top edges pinned by the matrix kind: `X` means the bottom edge is
//! connection-point free, `O` that it carries one; `+` means top and
//! bottom agree, `-` that they differ.
//!
//! The four matrices satisfy a doubling recursion in the height: each
//! level-`(k+1)` matrix is assembled quadrant by quadrant from the
//! level-`k` matrices, so building height `m` costs `m` rounds of
//! entrywise sums.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::count::{Backend, BackendKind, Count, CountScalar};
use crate::error::Error;
use crate::matrix::SquareMatrix;

/// Default cap on the column height; matrices are `2^m` square.
pub const MAX_HEIGHT: usize = 14;

/// Which (bottom, top) boundary combination a state matrix tabulates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StateMatrixKind {
    XPlus,
    XMinus,
    OPlus,
    OMinus,
}

impl StateMatrixKind {
    pub const ALL: [StateMatrixKind; 4] = [
        StateMatrixKind::XPlus,
        StateMatrixKind::XMinus,
        StateMatrixKind::OPlus,
        StateMatrixKind::OMinus,
    ];

    /// The (bottom, top) connection-point presence this kind prescribes.
    pub const fn bottom_top(self) -> (bool, bool) {
        match self {
            StateMatrixKind::XPlus => (false, false),
            StateMatrixKind::XMinus => (false, true),
            StateMatrixKind::OPlus => (true, true),
            StateMatrixKind::OMinus => (true, false),
        }
    }
}

impl fmt::Display for StateMatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateMatrixKind::XPlus => "X+",
            StateMatrixKind::XMinus => "X-",
            StateMatrixKind::OPlus => "O+",
            StateMatrixKind::OMinus => "O-",
        })
    }
}

impl FromStr for StateMatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "X+" => Ok(StateMatrixKind::XPlus),
            "X-" => Ok(StateMatrixKind::XMinus),
            "O+" => Ok(StateMatrixKind::OPlus),
            "O-" => Ok(StateMatrixKind::OMinus),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown state matrix kind {other:?}, expected X+|X-|O+|O-"),
            }),
        }
    }
}

/// The four state matrices for columns of height `m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StateMatrixSet<S> {
    m: usize,
    x_plus: SquareMatrix<S>,
    x_minus: SquareMatrix<S>,
    o_plus: SquareMatrix<S>,
    o_minus: SquareMatrix<S>,
}

impl<S: CountScalar> StateMatrixSet<S> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        1 << self.m
    }

    pub fn kind(&self, kind: StateMatrixKind) -> &SquareMatrix<S> {
        match kind {
            StateMatrixKind::XPlus => &self.x_plus,
            StateMatrixKind::XMinus => &self.x_minus,
            StateMatrixKind::OPlus => &self.o_plus,
            StateMatrixKind::OMinus => &self.o_minus,
        }
    }

    /// Entry by 1-based state indices.
    ///
    /// # Errors
    ///
    /// [`Error::EntryOutOfRange`] unless `1 <= i, j <= 2^m`.
    pub fn entry(&self, kind: StateMatrixKind, i: usize, j: usize) -> Result<Count, Error> {
        let dim = self.dim();
        if i == 0 || j == 0 || i > dim || j > dim {
            return Err(Error::EntryOutOfRange { i, j, dim });
        }
        Ok(self.kind(kind).get_count(i - 1, j - 1))
    }
}

/// Build the four state matrices for height `m` on the scalar backend `S`.
///
/// # Errors
///
/// [`Error::DimensionLimit`] above [`MAX_HEIGHT`], [`Error::Overflow`] if
/// an entry outgrows a fixed-width backend.
pub fn build_state_matrices_in<S: CountScalar>(m: usize) -> Result<StateMatrixSet<S>, Error> {
    build_state_matrices_with_limit_in(m, MAX_HEIGHT)
}

/// [`build_state_matrices_in`] with an explicit height cap.
pub fn build_state_matrices_with_limit_in<S: CountScalar>(
    m: usize,
    limit: usize,
) -> Result<StateMatrixSet<S>, Error> {
    if m > limit {
        return Err(Error::DimensionLimit {
            requested: m,
            limit,
        });
    }

    // Height 0: only the empty column, whose boundary words are empty.
    // It is suitably connected and has no bottom/top connection points,
    // so the X+ and O+ tabulations see one column and the mixed kinds none.
    let mut x_plus = SquareMatrix::<S>::identity(1);
    let mut x_minus = SquareMatrix::<S>::zeros(1);
    let mut o_plus = SquareMatrix::<S>::identity(1);
    let mut o_minus = SquareMatrix::<S>::zeros(1);

    for _ in 0..m {
        // Adding one tile at the bottom of a column of height k splits
        // each matrix into quadrants by the new bottom-left and
        // bottom-right letters; the new tile's own connections decide
        // which level-k matrix each quadrant collects, with weight 5 for
        // the five fully connected tiles.
        let xm_plus_op = x_minus.checked_add(&o_plus)?; // X- + O+
        let xm_plus_op5 = x_minus.checked_add(&o_plus.scaled(5)?)?; // X- + 5 O+
        let xp_plus_om = x_plus.checked_add(&o_minus)?; // X+ + O-
        let xp_plus_om5 = x_plus.checked_add(&o_minus.scaled(5)?)?; // X+ + 5 O-

        let next_x_plus = SquareMatrix::from_quadrants(
            x_plus.clone(),
            o_minus.clone(),
            o_minus.clone(),
            xp_plus_om.clone(),
        );
        let next_x_minus = SquareMatrix::from_quadrants(
            x_minus.clone(),
            o_plus.clone(),
            o_plus.clone(),
            xm_plus_op.clone(),
        );
        let next_o_plus = SquareMatrix::from_quadrants(
            o_plus,
            xm_plus_op.clone(),
            xm_plus_op,
            xm_plus_op5,
        );
        let next_o_minus = SquareMatrix::from_quadrants(
            o_minus,
            xp_plus_om.clone(),
            xp_plus_om,
            xp_plus_om5,
        );

        x_plus = next_x_plus;
        x_minus = next_x_minus;
        o_plus = next_o_plus;
        o_minus = next_o_minus;
    }

    Ok(StateMatrixSet {
        m,
        x_plus,
        x_minus,
        o_plus,
        o_minus,
    })
}

/// State matrices on whichever backend a [`Backend`] request resolves to.
#[derive(Clone, Debug)]
pub enum AnyStateMatrices {
    Fixed128(StateMatrixSet<u128>),
    Bignum(StateMatrixSet<Count>),
}

impl AnyStateMatrices {
    /// # Errors
    ///
    /// As [`build_state_matrices_in`]; with [`Backend::Auto`] an overflow
    /// of the fixed-width pass triggers a bignum rerun instead.
    pub fn build(m: usize, backend: Backend) -> Result<Self, Error> {
        match backend {
            Backend::Fixed128 => Ok(AnyStateMatrices::Fixed128(build_state_matrices_in(m)?)),
            Backend::Bignum => Ok(AnyStateMatrices::Bignum(build_state_matrices_in(m)?)),
            Backend::Auto => match build_state_matrices_in::<u128>(m) {
                Ok(set) => Ok(AnyStateMatrices::Fixed128(set)),
                Err(Error::Overflow) => {
                    Ok(AnyStateMatrices::Bignum(build_state_matrices_in(m)?))
                }
                Err(e) => Err(e),
            },
        }
    }

    pub fn backend(&self) -> BackendKind {
        match self {
            AnyStateMatrices::Fixed128(_) => BackendKind::Fixed128,
            AnyStateMatrices::Bignum(_) => BackendKind::Bignum,
        }
    }

    pub fn m(&self) -> usize {
        match self {
            AnyStateMatrices::Fixed128(s) => s.m(),
            AnyStateMatrices::Bignum(s) => s.m(),
        }
    }

    pub fn dim(&self) -> usize {
        1 << self.m()
    }

    pub fn entry(&self, kind: StateMatrixKind, i: usize, j: usize) -> Result<Count, Error> {
        match self {
            AnyStateMatrices::Fixed128(s) => s.entry(kind, i, j),
            AnyStateMatrices::Bignum(s) => s.entry(kind, i, j),
        }
    }

    pub fn write_dump(&self, kind: StateMatrixKind, w: &mut dyn Write) -> io::Result<()> {
        match self {
            AnyStateMatrices::Fixed128(s) => s.kind(kind).write_dump(w),
            AnyStateMatrices::Bignum(s) => s.kind(kind).write_dump(w),
        }
    }
}
