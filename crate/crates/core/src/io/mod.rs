//! File formats: PBM (P1/P4), the `RLE1` run-length text format, `MH1`
//! containers, plus CSV and SVG emitters.

pub mod csv;
mod pbm;
mod rle_text;
pub mod svg;

pub use pbm::{read_pbm, write_pbm, PbmVariant};
pub use rle_text::{read_rle_text, write_rle_text, RLE1_MAGIC};

use crate::error::{Error, Result};
use crate::mh::{mh_decode, MhBitstream, MH1_MAGIC};
use crate::rle::{encode_image, RunMatrix};

/// Input formats recognised by their leading magic bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Pbm,
    Rle1,
    Mh1,
}

impl InputFormat {
    pub fn detect(bytes: &[u8]) -> Option<Self> {
        if bytes.starts_with(b"P1") || bytes.starts_with(b"P4") {
            Some(InputFormat::Pbm)
        } else if bytes.starts_with(RLE1_MAGIC.as_bytes()) {
            Some(InputFormat::Rle1)
        } else if bytes.starts_with(MH1_MAGIC) {
            Some(InputFormat::Mh1)
        } else {
            None
        }
    }
}

/// Reads any supported document into run form. PBM input is run-length
/// encoded on the way in.
pub fn read_matrix(bytes: &[u8], format: Option<InputFormat>) -> Result<RunMatrix> {
    let format = match format.or_else(|| InputFormat::detect(bytes)) {
        Some(f) => f,
        None => {
            return Err(Error::Parse {
                offset: 0,
                reason: "unrecognised format (expected P1, P4, RLE1 or MH1 magic)".into(),
            })
        }
    };
    match format {
        InputFormat::Pbm => Ok(encode_image(&read_pbm(bytes)?)),
        InputFormat::Rle1 => read_rle_text(bytes),
        InputFormat::Mh1 => mh_decode(&MhBitstream::from_mh1(bytes)?),
    }
}
