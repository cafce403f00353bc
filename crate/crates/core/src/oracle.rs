//! Brute-force oracle.
//!
//! Everything in this module recounts by exhaustive search what the rest
//! of the crate computes by recursion, and deliberately shares no code
//! with those fast paths: the only common ground is the tile table and
//! the state-word indexing. The verification suites and the test corpus
//! compare the two routes entry by entry.
//!
//! Exhaustive search is exponential, so every entry point carries a hard
//! guard (`MAX_*` below) and refuses larger instances with
//! [`Error::OracleLimit`] rather than running for hours.

use crate::count::Count;
use crate::error::Error;
use crate::matrix::SquareMatrix;
use crate::state::StateWord;
use crate::state_matrix::StateMatrixKind;
use crate::tile::Tile;

/// Cell cap for [`brute_count_graph_mosaics`]; counts grow roughly like
/// the final census, so 20 cells keeps runs in the tens of millions.
pub const MAX_GRAPH_CELLS: usize = 20;

/// Cell cap for [`brute_count_suitably_connected`], whose unconstrained
/// search space is `16^cells` before edge pruning.
pub const MAX_CONNECTED_CELLS: usize = 12;

/// Height cap for [`brute_state_matrix`]: `4^m` entries, each its own
/// column search.
pub const MAX_STATE_MATRIX_ROWS: usize = 3;

/// Cap on `m + n` for [`brute_magnified`]: `4^(m+n)` entries, each its
/// own grid search.
pub const MAX_MAGNIFIED_SIZE: usize = 4;

/// Spot cap for [`brute_bridge_count`], which tries all `2^t` subsets.
pub const MAX_BRIDGE_SPOTS: usize = 24;

/// Optional per-side boundary-state constraints for a brute-force count.
///
/// Left and right words read top to bottom (position = row), top and
/// bottom words left to right (position = col). A `None` side is
/// unconstrained: tiles there may or may not expose connection points.
#[derive(Clone, Copy, Default, Debug)]
pub struct BoundaryRequirement {
    pub left: Option<StateWord>,
    pub right: Option<StateWord>,
    pub top: Option<StateWord>,
    pub bottom: Option<StateWord>,
}

impl BoundaryRequirement {
    /// No constraint on any side.
    pub fn unconstrained() -> Self {
        Self::default()
    }

    /// All four sides pinned to connection-point-free words, which is
    /// exactly the closed-boundary condition of a graph mosaic.
    ///
    /// # Errors
    ///
    /// [`Error::WordTooLong`] if a side exceeds [`StateWord::MAX_LEN`].
    pub fn all_blank(rows: usize, cols: usize) -> Result<Self, Error> {
        Ok(BoundaryRequirement {
            left: Some(StateWord::blank(rows)?),
            right: Some(StateWord::blank(rows)?),
            top: Some(StateWord::blank(cols)?),
            bottom: Some(StateWord::blank(cols)?),
        })
    }

    pub fn with_left(mut self, word: StateWord) -> Self {
        self.left = Some(word);
        self
    }

    pub fn with_right(mut self, word: StateWord) -> Self {
        self.right = Some(word);
        self
    }

    pub fn with_top(mut self, word: StateWord) -> Self {
        self.top = Some(word);
        self
    }

    pub fn with_bottom(mut self, word: StateWord) -> Self {
        self.bottom = Some(word);
        self
    }

    /// Check every present word against the side length it constrains.
    ///
    /// # Errors
    ///
    /// [`Error::BoundaryWordLength`] naming the offending side.
    pub fn validate(&self, rows: usize, cols: usize) -> Result<(), Error> {
        let sides = [
            ("left", &self.left, rows),
            ("right", &self.right, rows),
            ("top", &self.top, cols),
            ("bottom", &self.bottom, cols),
        ];
        for (side, word, expected) in sides {
            if let Some(word) = word {
                if word.len() != expected {
                    return Err(Error::BoundaryWordLength {
                        side,
                        got: word.len(),
                        expected,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Count graph mosaics on a `rows x cols` grid by trying every tile in
/// every cell, top to bottom and left to right, pruning as soon as an
/// edge mismatches or a boundary tile exposes a connection point.
///
/// # Errors
///
/// [`Error::EmptyMosaic`] for a zero side, [`Error::OracleLimit`] over
/// [`MAX_GRAPH_CELLS`] cells.
pub fn brute_count_graph_mosaics(rows: usize, cols: usize) -> Result<u128, Error> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMosaic);
    }
    let cells = rows * cols;
    if cells > MAX_GRAPH_CELLS {
        return Err(Error::OracleLimit {
            what: "grid cells",
            got: cells,
            limit: MAX_GRAPH_CELLS,
        });
    }

    // `above[c]` is the bottom letter of the tile straight above the cell
    // being filled; `left_r` the right letter of the tile to its left.
    fn go(rows: usize, cols: usize, above: &mut [bool], r: usize, c: usize, left_r: bool) -> u128 {
        if r == rows {
            return 1;
        }
        let (next_r, next_c) = if c + 1 == cols { (r + 1, 0) } else { (r, c + 1) };
        let mut total = 0u128;
        for tile in Tile::ALL {
            let p = tile.pattern();
            if p.left != (c > 0 && left_r) {
                continue;
            }
            if p.top != (r > 0 && above[c]) {
                continue;
            }
            if c + 1 == cols && p.right {
                continue;
            }
            if r + 1 == rows && p.bottom {
                continue;
            }
            let saved = above[c];
            above[c] = p.bottom;
            total += go(rows, cols, above, next_r, next_c, p.right);
            above[c] = saved;
        }
        total
    }

    let mut above = vec![false; cols];
    Ok(go(rows, cols, &mut above, 0, 0, false))
}

struct ConnectedSearch<'a> {
    rows: usize,
    cols: usize,
    req: &'a BoundaryRequirement,
}

impl ConnectedSearch<'_> {
    fn go(&self, above: &mut [bool], r: usize, c: usize, left_r: bool) -> u128 {
        if r == self.rows {
            return 1;
        }
        let (next_r, next_c) = if c + 1 == self.cols {
            (r + 1, 0)
        } else {
            (r, c + 1)
        };
        let need_l = if c == 0 {
            self.req.left.map(|w| w.has_cp(r))
        } else {
            Some(left_r)
        };
        let need_t = if r == 0 {
            self.req.top.map(|w| w.has_cp(c))
        } else {
            Some(above[c])
        };
        let need_r = if c + 1 == self.cols {
            self.req.right.map(|w| w.has_cp(r))
        } else {
            None
        };
        let need_b = if r + 1 == self.rows {
            self.req.bottom.map(|w| w.has_cp(c))
        } else {
            None
        };
        let mut total = 0u128;
        for tile in Tile::ALL {
            let p = tile.pattern();
            if need_l.is_none_or(|v| v == p.left)
                && need_t.is_none_or(|v| v == p.top)
                && need_r.is_none_or(|v| v == p.right)
                && need_b.is_none_or(|v| v == p.bottom)
            {
                let saved = above[c];
                above[c] = p.bottom;
                total += self.go(above, next_r, next_c, p.right);
                above[c] = saved;
            }
        }
        total
    }
}

/// Count suitably connected `rows x cols` grids whose boundary states
/// match `req`, again by exhaustive search.
///
/// # Errors
///
/// [`Error::EmptyMosaic`] for a zero side, [`Error::OracleLimit`] over
/// [`MAX_CONNECTED_CELLS`] cells, [`Error::BoundaryWordLength`] if a
/// requirement word has the wrong length.
pub fn brute_count_suitably_connected(
    rows: usize,
    cols: usize,
    req: &BoundaryRequirement,
) -> Result<u128, Error> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMosaic);
    }
    let cells = rows * cols;
    if cells > MAX_CONNECTED_CELLS {
        return Err(Error::OracleLimit {
            what: "grid cells",
            got: cells,
            limit: MAX_CONNECTED_CELLS,
        });
    }
    req.validate(rows, cols)?;

    let search = ConnectedSearch { rows, cols, req };
    let mut above = vec![false; cols];
    Ok(search.go(&mut above, 0, 0, false))
}

/// Recompute a height-`m` state matrix entry by entry: cell `(i, j)` is
/// the brute-force count of single columns with left word `i`, right
/// word `j`, and the bottom/top letters the kind prescribes.
///
/// # Errors
///
/// [`Error::OracleLimit`] above [`MAX_STATE_MATRIX_ROWS`].
pub fn brute_state_matrix(m: usize, kind: StateMatrixKind) -> Result<SquareMatrix<Count>, Error> {
    if m > MAX_STATE_MATRIX_ROWS {
        return Err(Error::OracleLimit {
            what: "state matrix height",
            got: m,
            limit: MAX_STATE_MATRIX_ROWS,
        });
    }
    let (bottom, top) = kind.bottom_top();
    if m == 0 {
        // The height-0 column is the empty tiling. Its bottom and top are
        // the same edge, so only the kinds whose letters agree count it.
        let value = if bottom == top {
            Count::one()
        } else {
            Count::zero()
        };
        return Ok(SquareMatrix::from_raw(1, vec![value]));
    }
    let bottom_word = StateWord::from_fn(1, |_| bottom)?;
    let top_word = StateWord::from_fn(1, |_| top)?;
    let dim = 1usize << m;
    let mut data = Vec::with_capacity(dim * dim);
    for i in 1..=dim {
        let left = StateWord::from_index(i, m)?;
        for j in 1..=dim {
            let right = StateWord::from_index(j, m)?;
            let req = BoundaryRequirement {
                left: Some(left),
                right: Some(right),
                top: Some(top_word),
                bottom: Some(bottom_word),
            };
            data.push(Count::from(brute_count_suitably_connected(m, 1, &req)?));
        }
    }
    Ok(SquareMatrix::from_raw(dim, data))
}

/// Recompute the magnified state matrix for an `m x n` grid entry by
/// entry: the row index decomposes as a left word (low `m` positions)
/// followed by a top word, the column index as a right word followed by
/// a bottom word, and each cell is a fully constrained brute count.
///
/// # Errors
///
/// [`Error::EmptyMosaic`] for `m == 0`, [`Error::OracleLimit`] when
/// `m + n` exceeds [`MAX_MAGNIFIED_SIZE`].
pub fn brute_magnified(m: usize, n: usize) -> Result<SquareMatrix<Count>, Error> {
    if m == 0 {
        return Err(Error::EmptyMosaic);
    }
    if m + n > MAX_MAGNIFIED_SIZE {
        return Err(Error::OracleLimit {
            what: "magnified size m+n",
            got: m + n,
            limit: MAX_MAGNIFIED_SIZE,
        });
    }
    let dim = 1usize << (m + n);
    if n == 0 {
        // Zero columns: the empty tiling again, whose left and right
        // boundaries are the same edge.
        return Ok(SquareMatrix::identity(dim));
    }
    let mut data = Vec::with_capacity(dim * dim);
    for i in 1..=dim {
        let (left, top) = StateWord::from_index(i, m + n)?.split_at(m);
        for j in 1..=dim {
            let (right, bottom) = StateWord::from_index(j, m + n)?.split_at(m);
            let req = BoundaryRequirement {
                left: Some(left),
                right: Some(right),
                top: Some(top),
                bottom: Some(bottom),
            };
            data.push(Count::from(brute_count_suitably_connected(m, n, &req)?));
        }
    }
    Ok(SquareMatrix::from_raw(dim, data))
}

/// A cyclic arrangement of `t` spots, each bridged or not, in which no
/// two adjacent spots may both be unbridged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BridgeConfig {
    flags: Vec<bool>,
}

impl BridgeConfig {
    /// # Errors
    ///
    /// [`Error::InvalidBridgeConfig`] for an empty arrangement or one
    /// with two cyclically adjacent unbridged spots. A single spot must
    /// be bridged: it is adjacent to itself around the cycle.
    pub fn new(flags: Vec<bool>) -> Result<Self, Error> {
        if flags.is_empty() {
            return Err(Error::InvalidBridgeConfig {
                reason: "need at least one spot",
            });
        }
        let t = flags.len();
        for i in 0..t {
            if !flags[i] && !flags[(i + 1) % t] {
                return Err(Error::InvalidBridgeConfig {
                    reason: "two cyclically adjacent spots are both unbridged",
                });
            }
        }
        Ok(BridgeConfig { flags })
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn is_bridged(&self, spot: usize) -> bool {
        self.flags[spot]
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }
}

/// Count the valid bridge configurations on `t` cyclic spots by testing
/// all `2^t` subsets against [`BridgeConfig::new`].
///
/// # Errors
///
/// [`Error::InvalidBridgeConfig`] for `t == 0`, [`Error::OracleLimit`]
/// over [`MAX_BRIDGE_SPOTS`].
pub fn brute_bridge_count(t: usize) -> Result<u128, Error> {
    if t == 0 {
        return Err(Error::InvalidBridgeConfig {
            reason: "need at least one spot",
        });
    }
    if t > MAX_BRIDGE_SPOTS {
        return Err(Error::OracleLimit {
            what: "bridge spots",
            got: t,
            limit: MAX_BRIDGE_SPOTS,
        });
    }
    let mut total = 0u128;
    for mask in 0u32..1u32 << t {
        let flags = (0..t).map(|i| mask >> i & 1 == 1).collect();
        if BridgeConfig::new(flags).is_ok() {
            total += 1;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(m: &SquareMatrix<Count>) -> Vec<Vec<u128>> {
        (0..m.dim())
            .map(|r| (0..m.dim()).map(|c| m.get(r, c).to_u128().unwrap()).collect())
            .collect()
    }

    #[test]
    fn small_graph_counts() {
        assert_eq!(brute_count_graph_mosaics(1, 1).unwrap(), 1);
        assert_eq!(brute_count_graph_mosaics(1, 4).unwrap(), 1);
        assert_eq!(brute_count_graph_mosaics(2, 2).unwrap(), 2);
        assert_eq!(brute_count_graph_mosaics(2, 3).unwrap(), 5);
        assert_eq!(brute_count_graph_mosaics(2, 4).unwrap(), 15);
        assert_eq!(brute_count_graph_mosaics(3, 3).unwrap(), 71);
    }

    #[test]
    fn single_cell_connected_counts() {
        let any = brute_count_suitably_connected(1, 1, &BoundaryRequirement::unconstrained());
        assert_eq!(any.unwrap(), 16);

        let o = StateWord::from_fn(1, |_| true).unwrap();
        let x = StateWord::blank(1).unwrap();

        // Eleven tiles carry a left connection point, five do not.
        let left_o = BoundaryRequirement::unconstrained().with_left(o);
        assert_eq!(brute_count_suitably_connected(1, 1, &left_o).unwrap(), 11);
        let left_x = BoundaryRequirement::unconstrained().with_left(x);
        assert_eq!(brute_count_suitably_connected(1, 1, &left_x).unwrap(), 5);

        // Five tiles connect on all four sides; only the blank on none.
        let all_o = BoundaryRequirement::unconstrained()
            .with_left(o)
            .with_right(o)
            .with_top(o)
            .with_bottom(o);
        assert_eq!(brute_count_suitably_connected(1, 1, &all_o).unwrap(), 5);
        let all_x = BoundaryRequirement::all_blank(1, 1).unwrap();
        assert_eq!(brute_count_suitably_connected(1, 1, &all_x).unwrap(), 1);
    }

    #[test]
    fn blank_boundary_matches_graph_count() {
        for (rows, cols) in [(1, 1), (2, 2), (2, 3), (3, 3), (2, 6), (4, 3)] {
            let req = BoundaryRequirement::all_blank(rows, cols).unwrap();
            assert_eq!(
                brute_count_suitably_connected(rows, cols, &req).unwrap(),
                brute_count_graph_mosaics(rows, cols).unwrap(),
                "at {rows}x{cols}"
            );
        }
    }

    #[test]
    fn height_one_state_matrices() {
        let xp = brute_state_matrix(1, StateMatrixKind::XPlus).unwrap();
        assert_eq!(grid(&xp), [[1, 0], [0, 1]]);
        let xm = brute_state_matrix(1, StateMatrixKind::XMinus).unwrap();
        assert_eq!(grid(&xm), [[0, 1], [1, 1]]);
        let op = brute_state_matrix(1, StateMatrixKind::OPlus).unwrap();
        assert_eq!(grid(&op), [[1, 1], [1, 5]]);
        let om = brute_state_matrix(1, StateMatrixKind::OMinus).unwrap();
        assert_eq!(grid(&om), [[0, 1], [1, 1]]);
    }

    #[test]
    fn height_zero_state_matrices() {
        for kind in StateMatrixKind::ALL {
            let m = brute_state_matrix(0, kind).unwrap();
            let (bottom, top) = kind.bottom_top();
            let expected = u128::from(bottom == top);
            assert_eq!(grid(&m), [[expected]]);
        }
    }

    #[test]
    fn one_by_one_magnified() {
        let m = brute_magnified(1, 1).unwrap();
        assert_eq!(
            grid(&m),
            [[1, 0, 0, 1], [0, 1, 1, 1], [0, 1, 1, 1], [1, 1, 1, 5]]
        );
        assert_eq!(m.entry_sum(), Count::from(16u64));
    }

    #[test]
    fn zero_column_magnified_is_identity() {
        let m = brute_magnified(1, 0).unwrap();
        assert_eq!(grid(&m), [[1, 0], [0, 1]]);
        assert!(matches!(brute_magnified(0, 1), Err(Error::EmptyMosaic)));
    }

    #[test]
    fn bridge_counts() {
        for (t, expected) in [(1, 1), (2, 3), (3, 4), (4, 7), (5, 11), (12, 322)] {
            assert_eq!(brute_bridge_count(t).unwrap(), expected, "at t={t}");
        }
    }

    #[test]
    fn bridge_config_validation() {
        assert!(BridgeConfig::new(vec![true]).is_ok());
        assert!(BridgeConfig::new(vec![false]).is_err());
        assert!(BridgeConfig::new(vec![false, true, false, true]).is_ok());
        // Unbridged first and last spots are cyclically adjacent.
        assert!(BridgeConfig::new(vec![false, true, true, false]).is_err());
        assert!(BridgeConfig::new(vec![]).is_err());
    }

    #[test]
    fn guards_refuse_large_instances() {
        assert!(matches!(
            brute_count_graph_mosaics(3, 7),
            Err(Error::OracleLimit { got: 21, limit: 20, .. })
        ));
        assert!(matches!(
            brute_count_suitably_connected(4, 4, &BoundaryRequirement::unconstrained()),
            Err(Error::OracleLimit { got: 16, limit: 12, .. })
        ));
        assert!(matches!(
            brute_state_matrix(4, StateMatrixKind::XPlus),
            Err(Error::OracleLimit { got: 4, limit: 3, .. })
        ));
        assert!(matches!(
            brute_magnified(3, 2),
            Err(Error::OracleLimit { got: 5, limit: 4, .. })
        ));
        assert!(matches!(
            brute_bridge_count(25),
            Err(Error::OracleLimit { got: 25, limit: 24, .. })
        ));
        assert!(matches!(
            brute_count_graph_mosaics(0, 3),
            Err(Error::EmptyMosaic)
        ));
    }

    #[test]
    fn requirement_length_is_checked() {
        let word = StateWord::blank(3).unwrap();
        let req = BoundaryRequirement::unconstrained().with_top(word);
        assert!(matches!(
            brute_count_suitably_connected(2, 2, &req),
            Err(Error::BoundaryWordLength {
                side: "top",
                got: 3,
                expected: 2,
            })
        ));
    }
}
