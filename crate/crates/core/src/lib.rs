//! Exact enumeration of graph mosaics.
//!
//! A *graph mosaic* is a rectangular grid of the sixteen mosaic tiles —
//! blank, arcs, strands, double arcs, crossings, and vertices — in which
//! every tile edge meets a neighbor edge of the same kind (connection
//! point against connection point, blank against blank) and no
//! connection point touches the outer boundary. Such a grid draws a
//! closed (multi)graph diagram, and this crate counts exactly how many
//! exist for a given grid size.
//!
//! Counting proceeds in three layers:
//!
//! * [`state_matrix`] tabulates single columns by their left/right
//!   boundary states, split into four matrices by the bottom/top edge
//!   letters, each built by a quadrant-doubling recursion in the height;
//! * [`magnified`] chains columns together into one matrix over the
//!   concatenated boundary words of a whole grid;
//! * [`census`] closes the boundary with Lucas-number weights, yielding
//!   the final count.
//!
//! Every layer is cross-checked against [`oracle`], an independent
//! brute-force enumerator that recounts small instances from the tile
//! definitions alone; [`verify`] packages those comparisons into suites.
//!
//! Counts use checked 128-bit arithmetic with an automatic big-integer
//! fallback — overflow is reported or escaped, never wrapped.
//!
//! ```
//! use graph_mosaic::{count_graph_mosaics, Backend};
//!
//! let result = count_graph_mosaics(3, 3, Backend::Auto)?;
//! assert_eq!(result.count.to_string(), "71");
//! # Ok::<(), graph_mosaic::Error>(())
//! ```

pub mod census;
pub mod count;
pub mod error;
pub mod magnified;
pub mod matrix;
pub mod mosaic;
pub mod oracle;
pub mod state;
pub mod state_matrix;
pub mod tile;
pub mod verify;

pub use census::{count_graph_mosaics, CensusResult, CountMethod};
pub use count::{Backend, BackendKind, Count, CountScalar};
pub use error::Error;
pub use mosaic::{Mosaic, Side};
pub use state::StateWord;
pub use tile::Tile;
