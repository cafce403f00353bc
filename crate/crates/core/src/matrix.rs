//! Dense square matrices over a counting backend.

use std::io::{self, Write};

use crate::count::{Count, CountScalar};
use crate::error::Error;

/// Row-major dense square matrix of counting scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix<S> {
    dim: usize,
    data: Vec<S>,
}

/// One quarter of an even-dimension matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Quadrant {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [
        Quadrant::TopLeft,
        Quadrant::TopRight,
        Quadrant::BottomLeft,
        Quadrant::BottomRight,
    ];

    /// (row half, column half) as 0/1 offsets.
    fn halves(self) -> (usize, usize) {
        match self {
            Quadrant::TopLeft => (0, 0),
            Quadrant::TopRight => (0, 1),
            Quadrant::BottomLeft => (1, 0),
            Quadrant::BottomRight => (1, 1),
        }
    }
}

impl<S: CountScalar> SquareMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        SquareMatrix {
            dim,
            data: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    pub(crate) fn from_raw(dim: usize, data: Vec<S>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        SquareMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based `(row, col)`.
    ///
    /// # Panics
    ///
    /// Panics if either index is out of range.
    pub fn get(&self, row: usize, col: usize) -> &S {
        assert!(row < self.dim && col < self.dim, "entry ({row}, {col}) out of range");
        &self.data[row * self.dim + col]
    }

    /// Entry at 0-based `(row, col)` as an exact count.
    pub fn get_count(&self, row: usize, col: usize) -> Count {
        self.get(row, col).to_count()
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        assert!(row < self.dim && col < self.dim, "entry ({row}, {col}) out of range");
        self.data[row * self.dim + col] = value;
    }

    pub(crate) fn row(&self, row: usize) -> &[S] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    /// Entrywise sum.
    ///
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] on shape disagreement,
    /// [`Error::Overflow`] if the backend cannot hold an entry.
    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
                copies: 1,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SquareMatrix { dim: self.dim, data })
    }

    /// Entrywise scaling by a small factor.
    pub fn scaled(&self, factor: u64) -> Result<Self, Error> {
        let f = S::from_count(&Count::from(factor)).ok_or(Error::Overflow)?;
        let data = self
            .data
            .iter()
            .map(|a| a.checked_mul(&f).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SquareMatrix { dim: self.dim, data })
    }

    /// Plain cubic matrix product.  This is the reference multiply that
    /// property tests compare the block-diagonal path against.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
                copies: 1,
            });
        }
        let dim = self.dim;
        let mut out = Self::zeros(dim);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = &mut out.data[i * dim + j];
                    if !S::checked_mul_acc(acc, a, b) {
                        return Err(Error::Overflow);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Assemble a matrix of doubled dimension from four equally sized
    /// quadrants, consuming them.
    ///
    /// # Panics
    ///
    /// Panics if the quadrants disagree in dimension.
    pub fn from_quadrants(q11: Self, q12: Self, q21: Self, q22: Self) -> Self {
        let d = q11.dim;
        assert!(
            q12.dim == d && q21.dim == d && q22.dim == d,
            "quadrant dimensions disagree"
        );
        let dim = 2 * d;
        let mut data = Vec::with_capacity(dim * dim);
        let mut top_left = q11.data.into_iter();
        let mut top_right = q12.data.into_iter();
        let mut bottom_left = q21.data.into_iter();
        let mut bottom_right = q22.data.into_iter();
        for _ in 0..d {
            data.extend(top_left.by_ref().take(d));
            data.extend(top_right.by_ref().take(d));
        }
        for _ in 0..d {
            data.extend(bottom_left.by_ref().take(d));
            data.extend(bottom_right.by_ref().take(d));
        }
        SquareMatrix { dim, data }
    }

    /// Copy of one quadrant.
    ///
    /// # Panics
    ///
    /// Panics if the dimension is odd.
    pub fn quadrant(&self, which: Quadrant) -> Self {
        assert!(self.dim % 2 == 0, "quadrants need an even dimension");
        let d = self.dim / 2;
        let (rh, ch) = which.halves();
        let mut out = Self::zeros(d);
        for r in 0..d {
            for c in 0..d {
                out.set(r, c, self.get(rh * d + r, ch * d + c).clone());
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        for r in 0..self.dim {
            for c in r + 1..self.dim {
                if self.get(r, c) != self.get(c, r) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact sum of all entries.
    pub fn entry_sum(&self) -> Count {
        let mut total = Count::zero();
        for v in &self.data {
            total += &v.to_count();
        }
        total
    }

    /// Text dump: a dimension line, then one line per row of
    /// space-separated decimal entries.
    pub fn write_dump(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "{}", self.dim)?;
        for r in 0..self.dim {
            let mut first = true;
            for v in self.row(r) {
                if !first {
                    w.write_all(b" ")?;
                }
                write!(w, "{}", v.to_count())?;
                first = false;
            }
            w.write_all(b"\n")?;
        }
        Ok(())
    }
}
