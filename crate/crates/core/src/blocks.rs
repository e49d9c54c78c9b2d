//! Rectangular block extraction and density/entropy characterization.

use crate::error::{Error, Result};
use crate::features::entropy_horizontal;
use crate::rle::{black_pixel_count, RunMatrix, RunRow};
use crate::segment::{Rect, Segment, SegmentKind};

/// Cuts `rect` out of `m` by clipping each row's runs to the column window.
/// No row is expanded to pixels.
pub fn extract_block(m: &RunMatrix, rect: Rect) -> Result<Segment> {
    rect.check_within(m)?;
    let rows = m.rows()[rect.row_start - 1..rect.row_end]
        .iter()
        .map(|row| clip_row(row, rect.col_start, rect.col_end))
        .collect();
    let payload = RunMatrix::new(rect.width(), rows)?;
    Ok(Segment {
        kind: SegmentKind::Block,
        rect,
        payload: Some(payload),
    })
}

/// Runs of `row` restricted to 1-based columns `first..=last`, in canonical
/// form.
fn clip_row(row: &RunRow, first: usize, last: usize) -> RunRow {
    let mut out: Vec<usize> = Vec::new();
    // Start of the current run, 1-based.
    let mut start = 1;
    for (i, &len) in row.runs().iter().enumerate() {
        let end = start + len; // exclusive
        let lo = start.max(first);
        let hi = end.min(last + 1);
        if lo < hi {
            let black = i % 2 == 1;
            // Output parity must match the run colour; a black first piece
            // needs the zero white lead.
            if out.is_empty() && black {
                out.push(0);
            }
            out.push(hi - lo);
        }
        if end > last {
            break;
        }
        start = end;
    }
    RunRow::new(out, last + 1 - first).expect("clipped runs are canonical")
}

/// Absolute and document-relative description of a block.
///
/// Relative values are `None` when the document value is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCharacterization {
    pub density: f64,
    pub ceq_total: f64,
    pub seq_total: f64,
    pub relative_density: Option<f64>,
    pub relative_ceq: Option<f64>,
    pub relative_seq: Option<f64>,
}

impl BlockCharacterization {
    /// Field names in serialization order.
    pub const FIELDS: [&'static str; 6] = [
        "density",
        "ceq_total",
        "seq_total",
        "relative_density",
        "relative_ceq",
        "relative_seq",
    ];
}

fn density(m: &RunMatrix) -> Result<f64> {
    let area = m.width() * m.height();
    if area == 0 {
        return Err(Error::invalid("zero-area block"));
    }
    Ok(black_pixel_count(m) as f64 / area as f64)
}

fn ratio(part: f64, whole: f64) -> Option<f64> {
    (whole > 0.0).then(|| part / whole)
}

/// Density and horizontal entropy totals of `block`, plus their ratios to
/// the same features of `whole`.
pub fn characterize(block: &RunMatrix, whole: &RunMatrix) -> Result<BlockCharacterization> {
    let density_block = density(block)?;
    let density_whole = density(whole)?;
    let eb = entropy_horizontal(block);
    let ew = entropy_horizontal(whole);
    let (ceq_total, seq_total) = (eb.ceq_total(), eb.seq_total());
    Ok(BlockCharacterization {
        density: density_block,
        ceq_total,
        seq_total,
        relative_density: ratio(density_block, density_whole),
        relative_ceq: ratio(ceq_total, ew.ceq_total()),
        relative_seq: ratio(seq_total, ew.seq_total()),
    })
}
