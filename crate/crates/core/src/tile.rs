//! The sixteen mosaic tiles.
//!
//! A tile is a unit square that may carry strand ends (*connection
//! points*) at some of its four edge midpoints.  The deck: one blank
//! tile, four quarter arcs and two straight segments (two connection
//! points each), two double arcs, two crossings and one four-valent
//! vertex (four each), and four trivalent vertices (three each).  Only
//! the edge pattern matters for adjacency; tiles sharing a pattern are
//! still distinct deck members and are enumerated separately.

use crate::error::Error;

/// Which edge midpoints of a tile carry a connection point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CpPattern {
    pub left: bool,
    pub right: bool,
    pub top: bool,
    pub bottom: bool,
}

impl CpPattern {
    /// Number of edges carrying a connection point.
    pub const fn cp_count(self) -> u32 {
        self.left as u32 + self.right as u32 + self.top as u32 + self.bottom as u32
    }
}

const fn pat(left: bool, right: bool, top: bool, bottom: bool) -> CpPattern {
    CpPattern {
        left,
        right,
        top,
        bottom,
    }
}

/// Edge pattern of each tile, indexed by tile id.
const PATTERNS: [CpPattern; 16] = [
    pat(false, false, false, false), // 0: blank
    pat(true, false, false, true),   // 1: arc left-bottom
    pat(false, true, false, true),   // 2: arc right-bottom
    pat(true, false, true, false),   // 3: arc left-top
    pat(false, true, true, false),   // 4: arc right-top
    pat(true, true, false, false),   // 5: horizontal segment
    pat(false, false, true, true),   // 6: vertical segment
    pat(true, true, true, true),     // 7: double arc
    pat(true, true, true, true),     // 8: double arc
    pat(true, true, true, true),     // 9: crossing
    pat(true, true, true, true),     // 10: crossing
    pat(true, true, true, false),    // 11: trivalent vertex, arms left/right/top
    pat(true, false, true, true),    // 12: trivalent vertex, arms left/top/bottom
    pat(true, true, false, true),    // 13: trivalent vertex, arms left/right/bottom
    pat(false, true, true, true),    // 14: trivalent vertex, arms right/top/bottom
    pat(true, true, true, true),     // 15: four-valent vertex
];

/// One of the sixteen tiles, identified by its id `0..=15`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Tile(u8);

impl Tile {
    /// Size of the deck.
    pub const COUNT: usize = 16;

    /// Every tile in id order.
    pub const ALL: [Tile; 16] = {
        let mut all = [Tile(0); 16];
        let mut id = 0;
        while id < 16 {
            all[id] = Tile(id as u8);
            id += 1;
        }
        all
    };

    /// # Errors
    ///
    /// Returns [`Error::InvalidTileId`] for ids above 15.
    pub fn new(id: u8) -> Result<Self, Error> {
        if (id as usize) < Self::COUNT {
            Ok(Tile(id))
        } else {
            Err(Error::InvalidTileId(id))
        }
    }

    pub const fn id(self) -> u8 {
        self.0
    }

    /// Edge connection-point pattern of this tile.
    pub const fn pattern(self) -> CpPattern {
        PATTERNS[self.0 as usize]
    }

    /// Tile named by a hex digit, either case.
    pub fn from_hex(c: char) -> Option<Self> {
        c.to_digit(16).map(|d| Tile(d as u8))
    }

    /// Canonical (uppercase) hex digit naming this tile.
    pub fn to_hex(self) -> char {
        char::from_digit(u32::from(self.0), 16)
            .expect("tile ids are below 16")
            .to_ascii_uppercase()
    }
}
