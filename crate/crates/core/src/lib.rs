//! Document image analysis on run-length compressed binary images.
//!
//! Every operation in this crate reads the run-length form of a page
//! ([`RunMatrix`]) directly: projection profiles, run-length histograms,
//! transition entropy, line/word/character segmentation, block extraction
//! and font-size detection all work on run boundaries, or on the column
//! scanner for vertical quantities, without expanding the page to pixels.
//!
//! ```
//! use rlcdoc::{features, io, segment};
//!
//! let page = io::read_rle_text(b"RLE1 6 4\n6\n1 3 2\n1 1 1 1 2\n6\n").unwrap();
//! assert_eq!(features::vpp(&page).values, vec![0, 3, 2, 0]);
//! let lines = segment::segment_lines(&page, 0);
//! assert_eq!((lines[0].rect.row_start, lines[0].rect.row_end), (2, 3));
//! ```

pub mod blocks;
pub mod error;
pub mod features;
pub mod fontsize;
pub mod io;
pub mod meter;
pub mod mh;
pub mod rle;
pub mod segment;

pub use error::{Error, Result};
pub use meter::WorkMeter;
pub use rle::{BinaryImage, ColumnScanner, ColumnSlice, RunMatrix, RunRow};
pub use segment::{Rect, Segment, SegmentKind};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/run-data.md")]
    mod run_data {}
    #[doc = include_str!("../../../book/src/fax-coding.md")]
    mod fax_coding {}
    #[doc = include_str!("../../../book/src/features.md")]
    mod features {}
    #[doc = include_str!("../../../book/src/segmentation.md")]
    mod segmentation {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/font-size.md")]
    mod font_size {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
