//! Concrete tile grids: validation, classification, text format, and
//! ASCII rendering.
//!
//! The text format is a header line `<rows> <cols>` followed by one line
//! per row of hex tile digits, e.g. a 2x2 circle:
//!
//! ```text
//! 2 2
//! 21
//! 43
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::state::StateWord;
use crate::tile::Tile;

/// One side of a grid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
    Top,
    Bottom,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Right, Side::Top, Side::Bottom];

    pub const fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Top => "top",
            Side::Bottom => "bottom",
        }
    }
}

/// A `rows x cols` grid of tiles, stored row-major from the top-left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mosaic {
    rows: usize,
    cols: usize,
    cells: Vec<Tile>,
}

impl Mosaic {
    /// Side cap, chosen so every boundary fits in a [`StateWord`].
    pub const MAX_SIDE: usize = StateWord::MAX_LEN;

    /// # Errors
    ///
    /// [`Error::EmptyMosaic`] for a zero side, [`Error::SideTooLarge`]
    /// over [`Self::MAX_SIDE`], [`Error::CellCountMismatch`] if `cells`
    /// is not exactly `rows * cols` long.
    pub fn new(rows: usize, cols: usize, cells: Vec<Tile>) -> Result<Self, Error> {
        Self::check_dims(rows, cols)?;
        if cells.len() != rows * cols {
            return Err(Error::CellCountMismatch {
                rows,
                cols,
                expected: rows * cols,
                got: cells.len(),
            });
        }
        Ok(Mosaic { rows, cols, cells })
    }

    fn check_dims(rows: usize, cols: usize) -> Result<(), Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMosaic);
        }
        for side in [rows, cols] {
            if side > Self::MAX_SIDE {
                return Err(Error::SideTooLarge {
                    got: side,
                    max: Self::MAX_SIDE,
                });
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Tile at 0-based `(row, col)`, counted from the top-left.
    ///
    /// # Panics
    ///
    /// If the position is outside the grid.
    pub fn tile(&self, row: usize, col: usize) -> Tile {
        assert!(
            row < self.rows && col < self.cols,
            "cell ({row}, {col}) out of range for a {}x{} mosaic",
            self.rows,
            self.cols
        );
        self.cells[row * self.cols + col]
    }

    /// Whether every interior edge agrees: each tile meets a connection
    /// point of its neighbor with one of its own.
    pub fn is_suitably_connected(&self) -> bool {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.tile(r, c).pattern();
                if c + 1 < self.cols && p.right != self.tile(r, c + 1).pattern().left {
                    return false;
                }
                if r + 1 < self.rows && p.bottom != self.tile(r + 1, c).pattern().top {
                    return false;
                }
            }
        }
        true
    }

    /// Whether this is a graph mosaic: suitably connected with no
    /// connection point on the outer boundary, so the diagram is closed.
    pub fn is_graph_mosaic(&self) -> bool {
        self.is_suitably_connected()
            && Side::ALL
                .iter()
                .all(|&side| self.boundary_state(side).cp_count() == 0)
    }

    /// Boundary state along one side: left and right read top to bottom,
    /// top and bottom left to right.
    pub fn boundary_state(&self, side: Side) -> StateWord {
        let word = match side {
            Side::Left => StateWord::from_fn(self.rows, |r| self.tile(r, 0).pattern().left),
            Side::Right => {
                StateWord::from_fn(self.rows, |r| self.tile(r, self.cols - 1).pattern().right)
            }
            Side::Top => StateWord::from_fn(self.cols, |c| self.tile(0, c).pattern().top),
            Side::Bottom => {
                StateWord::from_fn(self.cols, |c| self.tile(self.rows - 1, c).pattern().bottom)
            }
        };
        word.expect("sides are capped at StateWord::MAX_LEN")
    }

    /// Parse the text format, reporting 1-based line/column positions.
    ///
    /// # Errors
    ///
    /// [`Error::Parse`] for malformed text; dimension errors as in
    /// [`Mosaic::new`].
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or("");
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("expected header \"<rows> <cols>\", got {header:?}"),
            });
        }
        let rows: usize = fields[0].parse().map_err(|_| Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid row count {:?}", fields[0]),
        })?;
        let cols: usize = fields[1].parse().map_err(|_| Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid column count {:?}", fields[1]),
        })?;
        Self::check_dims(rows, cols)?;

        let mut cells = Vec::with_capacity(rows.saturating_mul(cols));
        for r in 0..rows {
            let line_no = r + 2;
            let Some(line) = lines.next() else {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("missing tile row {} of {rows}", r + 1),
                });
            };
            let mut taken = 0usize;
            for (idx, ch) in line.chars().enumerate() {
                if taken == cols {
                    return Err(Error::Parse {
                        line: line_no,
                        column: idx + 1,
                        message: format!("expected {cols} tile digits per row"),
                    });
                }
                let Some(tile) = Tile::from_hex(ch) else {
                    return Err(Error::Parse {
                        line: line_no,
                        column: idx + 1,
                        message: format!("invalid tile digit {ch:?}"),
                    });
                };
                cells.push(tile);
                taken += 1;
            }
            if taken < cols {
                return Err(Error::Parse {
                    line: line_no,
                    column: taken + 1,
                    message: format!("expected {cols} tile digits per row, got {taken}"),
                });
            }
        }
        for (extra, line) in lines.enumerate() {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: rows + 2 + extra,
                    column: 1,
                    message: "unexpected content after the last tile row".to_string(),
                });
            }
        }
        Mosaic::new(rows, cols, cells)
    }

    /// Serialize into the text format parsed by [`Mosaic::parse`], with
    /// uppercase digits and a trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(self.tile(r, c).to_hex());
            }
            out.push('\n');
        }
        out
    }

    /// Render as ASCII art, three character rows and columns per tile:
    /// edge marks show connection points (`-` horizontal, `|` vertical)
    /// and the center glyph sketches the tile face. Distinct tiles render
    /// to distinct 3x3 blocks.
    pub fn render_ascii(&self) -> String {
        // Center glyphs by tile id: arcs lean with their corners, double
        // arcs cup away from each other, and the four three-valent tiles
        // share a glyph (their edge marks already tell them apart).
        const CENTERS: [char; 16] = [
            ' ', '\\', '/', '/', '\\', '-', '|', ')', '(', 'X', '%', 'Y', 'Y', 'Y', 'Y', '+',
        ];
        let mut out = String::new();
        for r in 0..self.rows {
            let mut lines = [String::new(), String::new(), String::new()];
            for c in 0..self.cols {
                let tile = self.tile(r, c);
                let p = tile.pattern();
                let mark = |on: bool, ch: char| if on { ch } else { ' ' };
                lines[0].push(' ');
                lines[0].push(mark(p.top, '|'));
                lines[0].push(' ');
                lines[1].push(mark(p.left, '-'));
                lines[1].push(CENTERS[tile.id() as usize]);
                lines[1].push(mark(p.right, '-'));
                lines[2].push(' ');
                lines[2].push(mark(p.bottom, '|'));
                lines[2].push(' ');
            }
            for line in lines {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }
}

impl FromStr for Mosaic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Mosaic::parse(s)
    }
}

impl fmt::Display for Mosaic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CIRCLE: &str = "2 2\n21\n43\n";

    #[test]
    fn circle_classifies_as_graph_mosaic() {
        let m: Mosaic = CIRCLE.parse().unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert!(m.is_suitably_connected());
        assert!(m.is_graph_mosaic());
        for side in Side::ALL {
            assert_eq!(m.boundary_state(side).cp_count(), 0);
        }
    }

    #[test]
    fn boundary_states_read_off_the_edges() {
        // Top row: arc opening left-bottom, then blank. Bottom row: a
        // horizontal strand crossing both cells.
        let m: Mosaic = "2 2\n10\n55\n".parse().unwrap();
        assert!(!m.is_suitably_connected());
        assert_eq!(m.boundary_state(Side::Left).to_string(), "oo");
        assert_eq!(m.boundary_state(Side::Right).to_string(), "xo");
        assert_eq!(m.boundary_state(Side::Top).to_string(), "xx");
        assert_eq!(m.boundary_state(Side::Bottom).to_string(), "xx");
    }

    #[test]
    fn roundtrip_and_lowercase_digits() {
        let m: Mosaic = CIRCLE.parse().unwrap();
        assert_eq!(m.to_text(), CIRCLE);
        assert_eq!(m.to_string(), CIRCLE);
        let lower: Mosaic = "1 2\nfa\n".parse().unwrap();
        assert_eq!(lower.to_text(), "1 2\nFA\n");
        assert_eq!(lower.tile(0, 0).id(), 15);
        assert_eq!(lower.tile(0, 1).id(), 10);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match Mosaic::parse("2 2\n21\n4z\n") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (3, 2));
                assert!(message.contains("'z'"), "message: {message}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match Mosaic::parse("2 2\n21\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 1)),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match Mosaic::parse("2 2\n213\n43\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match Mosaic::parse("2 2\n21\n43\n0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(matches!(Mosaic::parse("abc"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Mosaic::parse("0 4\n"), Err(Error::EmptyMosaic)));
        assert!(matches!(
            Mosaic::parse("1 64\n"),
            Err(Error::SideTooLarge { got: 64, max: 63 })
        ));
    }

    #[test]
    fn crlf_and_trailing_blank_lines_are_tolerated() {
        let m = Mosaic::parse("2 2\r\n21\r\n43\r\n\r\n").unwrap();
        assert_eq!(m.to_text(), CIRCLE);
    }

    #[test]
    fn ascii_rendering_distinguishes_every_tile() {
        let mut blocks = std::collections::HashSet::new();
        for tile in Tile::ALL {
            let m = Mosaic::new(1, 1, vec![tile]).unwrap();
            assert!(blocks.insert(m.render_ascii()), "duplicate render for {tile:?}");
        }
        let m: Mosaic = CIRCLE.parse().unwrap();
        assert_eq!(
            m.render_ascii(),
            "      \n /--\\ \n |  | \n |  | \n \\--/ \n      \n"
        );
    }
}
