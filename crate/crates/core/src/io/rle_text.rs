//! `RLE1` text format.
//!
//! ```text
//! RLE1 <width> <height>
//! <runs of row 1, space separated>
//! ...
//! ```
//!
//! Rows are written canonically. On input, zero-padded rows such as
//! `14 0 0 0 0` are accepted and stripped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rle::{canonicalize_row, RunMatrix};

pub const RLE1_MAGIC: &str = "RLE1";

pub fn write_rle_text(m: &RunMatrix) -> Vec<u8> {
    let mut out = format!("{RLE1_MAGIC} {} {}\n", m.width(), m.height());
    for row in m.rows() {
        let mut first = true;
        for run in row.runs() {
            if !first {
                out.push(' ');
            }
            write!(out, "{run}").unwrap();
            first = false;
        }
        out.push('\n');
    }
    out.into_bytes()
}

pub fn read_rle_text(bytes: &[u8]) -> Result<RunMatrix> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::CorruptFile {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        reason: "not valid UTF-8".into(),
    })?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let bad_header = |reason: &str| Error::CorruptFile {
        line: 1,
        reason: reason.into(),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [magic, width, height] = fields[..] else {
        return Err(bad_header("expected header \"RLE1 <width> <height>\""));
    };
    if magic != RLE1_MAGIC {
        return Err(bad_header("missing RLE1 magic"));
    }
    let width: usize = width.parse().map_err(|_| bad_header("bad width"))?;
    let height: usize = height.parse().map_err(|_| bad_header("bad height"))?;
    if width == 0 || height == 0 {
        return Err(bad_header("width and height must be positive"));
    }

    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.trim().is_empty() {
            continue;
        }
        if rows.len() == height {
            return Err(Error::CorruptFile {
                line: line_no,
                reason: format!("more than the declared {height} rows"),
            });
        }
        let runs = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::CorruptFile {
                line: line_no,
                reason: format!("bad run length: {e}"),
            })?;
        let row = canonicalize_row(&runs, width, rows.len() + 1).map_err(|e| match e {
            Error::CorruptRun { reason, .. } => Error::CorruptFile {
                line: line_no,
                reason,
            },
            other => other,
        })?;
        rows.push(row);
    }
    if rows.len() != height {
        return Err(Error::CorruptFile {
            line: text.lines().count() + 1,
            reason: format!("declared {height} rows, found {}", rows.len()),
        });
    }
    RunMatrix::new(width, rows)
}
