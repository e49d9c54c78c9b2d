//! Run-length data model.
//!
//! A row of a binary image is stored as alternating white/black run lengths,
//! always starting with white. A row that begins with ink therefore starts
//! with a zero-length white run, which is the only place a zero may appear.
//!
//! ```text
//! 00110000111110  ->  [2, 2, 4, 5, 1]
//! 10000000000000  ->  [0, 1, 13]
//! ```
//!
//! [`ColumnScanner`] walks a [`RunMatrix`] in column order without building
//! the raster: every row keeps a cursor into its runs, and each step pops one
//! pixel off every cursor.

use std::fmt;

use crate::error::{Error, Result};
use crate::meter::WorkMeter;

/// Explicit pixel raster. `true` is black (ink), `false` is white.
///
/// Only codecs and tests touch this type; analysis operates on [`RunMatrix`].
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    pixels: Vec<bool>,
}

impl BinaryImage {
    pub fn new(width: usize, height: usize, pixels: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::invalid(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        let expected = width
            .checked_mul(height)
            .ok_or_else(|| Error::invalid("image dimensions overflow"))?;
        if pixels.len() != expected {
            return Err(Error::invalid(format!(
                "expected {expected} pixels for {width}x{height}, got {}",
                pixels.len()
            )));
        }
        Ok(BinaryImage {
            width,
            height,
            pixels,
        })
    }

    /// Blank (all white) image.
    pub fn blank(width: usize, height: usize) -> Result<Self> {
        Self::new(width, height, vec![false; width * height])
    }

    /// Builds an image from rows of `'0'`/`'1'` characters.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let mut pixels = Vec::with_capacity(width * height);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::invalid(format!(
                    "row {} has {} pixels, expected {width}",
                    i + 1,
                    row.len()
                )));
            }
            pixels.extend(parse_bits(row)?);
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[bool] {
        &self.pixels
    }

    /// Pixel at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.pixels[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.pixels[row * self.width + col] = value;
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.pixels[row * self.width..(row + 1) * self.width]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[bool]> {
        self.pixels.chunks_exact(self.width)
    }
}

impl fmt::Debug for BinaryImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryImage {}x{}", self.width, self.height)?;
        for row in self.rows() {
            writeln!(f, "  {}", bits_to_string(row))?;
        }
        Ok(())
    }
}

/// Parses a string of `'0'` and `'1'` characters.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::invalid(format!("not a bit: {other:?}"))),
        })
        .collect()
}

pub fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// One canonical run-length row.
///
/// Even indices are white runs, odd indices black. Only `runs[0]` may be
/// zero, and the runs sum to `width`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunRow {
    runs: Vec<usize>,
    width: usize,
}

impl RunRow {
    /// Validates `runs` against the canonical-form invariants for a row of
    /// `width` pixels.
    pub fn new(runs: Vec<usize>, width: usize) -> Result<Self> {
        Self::validate(&runs, width, 0)?;
        Ok(RunRow { runs, width })
    }

    /// Like [`RunRow::new`], taking the width from the run sum.
    pub fn from_runs(runs: Vec<usize>) -> Result<Self> {
        let width = runs.iter().sum();
        Self::new(runs, width)
    }

    fn validate(runs: &[usize], width: usize, row: usize) -> Result<()> {
        let corrupt = |reason: String| Error::CorruptRun { row, reason };
        if width == 0 {
            return Err(corrupt("row width must be positive".into()));
        }
        if runs.is_empty() {
            return Err(corrupt("row has no runs".into()));
        }
        if let Some(i) = runs.iter().skip(1).position(|&r| r == 0) {
            return Err(corrupt(format!("zero run at index {}", i + 1)));
        }
        let sum: usize = runs.iter().sum();
        if sum != width {
            return Err(corrupt(format!("runs sum to {sum}, expected {width}")));
        }
        Ok(())
    }

    /// Row of `width` white pixels.
    pub fn blank(width: usize) -> Self {
        assert!(width > 0, "row width must be positive");
        RunRow {
            runs: vec![width],
            width,
        }
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn into_runs(self) -> Vec<usize> {
        self.runs
    }

    pub fn is_blank(&self) -> bool {
        self.runs.len() == 1
    }

    pub fn black_count(&self) -> usize {
        self.runs.iter().skip(1).step_by(2).sum()
    }

    /// Black runs as `(first_column, length)`, columns 1-based.
    pub fn black_spans(&self) -> BlackSpans<'_> {
        BlackSpans {
            runs: &self.runs,
            index: 0,
            position: 1,
        }
    }
}

/// Iterator returned by [`RunRow::black_spans`].
pub struct BlackSpans<'a> {
    runs: &'a [usize],
    index: usize,
    position: usize,
}

impl Iterator for BlackSpans<'_> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<Self::Item> {
        while self.index < self.runs.len() {
            let len = self.runs[self.index];
            let start = self.position;
            let black = self.index % 2 == 1;
            self.index += 1;
            self.position += len;
            if black {
                return Some((start, len));
            }
        }
        None
    }
}

/// Whole binary image as canonical run rows of equal width.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunMatrix {
    width: usize,
    rows: Vec<RunRow>,
}

impl RunMatrix {
    pub fn new(width: usize, rows: Vec<RunRow>) -> Result<Self> {
        if width == 0 {
            return Err(Error::invalid("matrix width must be positive"));
        }
        if rows.is_empty() {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.width != width {
                return Err(Error::CorruptRun {
                    row: i + 1,
                    reason: format!("row width {} differs from {width}", row.width),
                });
            }
        }
        Ok(RunMatrix { width, rows })
    }

    /// Builds a matrix from raw canonical run lists. Errors name the 1-based
    /// row that fails validation.
    pub fn from_runs(width: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, runs)| {
                RunRow::validate(&runs, width, i + 1)?;
                Ok(RunRow { runs, width })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(width, rows)
    }

    pub fn blank(width: usize, height: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::invalid("matrix width must be positive"));
        }
        Self::new(width, vec![RunRow::blank(width); height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[RunRow] {
        &self.rows
    }

    /// Row by 1-based index.
    pub fn row(&self, index: usize) -> &RunRow {
        &self.rows[index - 1]
    }

    /// Total number of stored run elements, zero leading runs included.
    pub fn run_count(&self) -> usize {
        self.rows.iter().map(|r| r.runs.len()).sum()
    }

    /// Column-order scanner over all rows.
    pub fn scan_columns(&self) -> ColumnScanner<'_> {
        ColumnScanner::new(&self.rows, self.width)
    }

    /// Column-order scanner restricted to 1-based inclusive rows
    /// `first..=last`.
    pub fn scan_columns_in(&self, first: usize, last: usize) -> Result<ColumnScanner<'_>> {
        check_row_range(self, first, last)?;
        Ok(ColumnScanner::new(&self.rows[first - 1..last], self.width))
    }
}

pub(crate) fn check_row_range(m: &RunMatrix, first: usize, last: usize) -> Result<()> {
    if first == 0 || first > last || last > m.height() {
        return Err(Error::invalid(format!(
            "row range {first}..{last} outside 1..{}",
            m.height()
        )));
    }
    Ok(())
}

/// Run-length encodes one row of pixels.
pub fn encode_row(bits: &[bool]) -> Result<RunRow> {
    if bits.is_empty() {
        return Err(Error::invalid("cannot encode an empty row"));
    }
    let mut runs = Vec::new();
    let mut color = false;
    let mut len = 0;
    for &bit in bits {
        if bit == color {
            len += 1;
        } else {
            runs.push(len);
            color = bit;
            len = 1;
        }
    }
    runs.push(len);
    Ok(RunRow {
        runs,
        width: bits.len(),
    })
}

/// Expands a row back to pixels. Construction of [`RunRow`] already rejects
/// non-canonical input, so this cannot fail.
pub fn decode_row(row: &RunRow) -> Vec<bool> {
    let mut bits = Vec::with_capacity(row.width);
    for (i, &len) in row.runs.iter().enumerate() {
        bits.extend(std::iter::repeat_n(i % 2 == 1, len));
    }
    bits
}

pub fn encode_image(img: &BinaryImage) -> RunMatrix {
    let rows = img
        .rows()
        .map(|r| encode_row(r).expect("image rows are nonempty"))
        .collect();
    RunMatrix {
        width: img.width,
        rows,
    }
}

pub fn decode_image(m: &RunMatrix) -> BinaryImage {
    let mut pixels = Vec::with_capacity(m.width * m.height());
    for row in &m.rows {
        pixels.extend(decode_row(row));
    }
    BinaryImage {
        width: m.width,
        height: m.height(),
        pixels,
    }
}

/// Accepts zero-padded rectangular run rows (the layout of a printed run
/// table, e.g. `14 0 0 0 0`) and strips the trailing padding.
pub fn canonicalize_padded(raw: &[Vec<usize>], width: usize) -> Result<RunMatrix> {
    let rows = raw
        .iter()
        .enumerate()
        .map(|(i, padded)| canonicalize_row(padded, width, i + 1))
        .collect::<Result<Vec<_>>>()?;
    RunMatrix::new(width, rows)
}

pub(crate) fn canonicalize_row(padded: &[usize], width: usize, row: usize) -> Result<RunRow> {
    let keep = padded
        .iter()
        .rposition(|&r| r != 0)
        .map_or(padded.len().min(1), |i| i + 1);
    let runs = padded[..keep].to_vec();
    RunRow::validate(&runs, width, row)?;
    Ok(RunRow { runs, width })
}

pub fn black_pixel_count(m: &RunMatrix) -> usize {
    m.rows.iter().map(RunRow::black_count).sum()
}

/// One column of the image, produced by [`ColumnScanner`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSlice {
    /// 1-based column index.
    pub column_index: usize,
    /// Pixel values top to bottom.
    pub bits: Vec<bool>,
}

impl ColumnSlice {
    pub fn black_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

#[derive(Debug, Clone, Copy)]
struct Cursor {
    index: usize,
    remaining: usize,
}

/// Column-order "virtual decompression" of run rows.
///
/// Each row holds a cursor (current run index, pixels left in that run).
/// Producing a column pops one pixel from every cursor, so working state is
/// two integers per row regardless of width.
pub struct ColumnScanner<'a> {
    rows: &'a [RunRow],
    cursors: Vec<Cursor>,
    next_column: usize,
    width: usize,
}

impl<'a> ColumnScanner<'a> {
    fn new(rows: &'a [RunRow], width: usize) -> Self {
        let cursors = rows
            .iter()
            .map(|row| {
                let mut c = Cursor {
                    index: 0,
                    remaining: row.runs[0],
                };
                // A zero leading white run means the row starts black.
                if c.remaining == 0 {
                    c.index = 1;
                    c.remaining = row.runs[1];
                }
                c
            })
            .collect();
        ColumnScanner {
            rows,
            cursors,
            next_column: 1,
            width,
        }
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Integers of scanner state currently held, for memory accounting.
    pub fn state_len(&self) -> usize {
        2 * self.cursors.len()
    }

    /// Pops the next column into `buf` (cleared first) and returns its
    /// 1-based index, or `None` once all columns are consumed.
    pub fn next_into(&mut self, buf: &mut Vec<bool>) -> Option<usize> {
        buf.clear();
        self.next_with(|bit| buf.push(bit))
    }

    /// Like [`next_into`](Self::next_into), recording pixel pops on `meter`.
    pub fn next_into_metered(
        &mut self,
        buf: &mut Vec<bool>,
        meter: &mut WorkMeter,
    ) -> Option<usize> {
        let col = self.next_into(buf)?;
        meter.visit(self.rows.len());
        meter.working(self.state_len() + buf.capacity());
        Some(col)
    }

    fn next_with(&mut self, mut emit: impl FnMut(bool)) -> Option<usize> {
        if self.next_column > self.width {
            return None;
        }
        for (cursor, row) in self.cursors.iter_mut().zip(self.rows) {
            emit(cursor.index % 2 == 1);
            cursor.remaining -= 1;
            if cursor.remaining == 0 && cursor.index + 1 < row.runs.len() {
                cursor.index += 1;
                cursor.remaining = row.runs[cursor.index];
            }
        }
        let col = self.next_column;
        self.next_column += 1;
        Some(col)
    }
}

impl Iterator for ColumnScanner<'_> {
    type Item = ColumnSlice;

    fn next(&mut self) -> Option<ColumnSlice> {
        let mut bits = Vec::with_capacity(self.rows.len());
        let column_index = self.next_into(&mut bits)?;
        Some(ColumnSlice { column_index, bits })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.width + 1 - self.next_column;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ColumnScanner<'_> {}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) const TABLE_ONE_BITS: [&str; 13] = [
        "00000000000000",
        "00110000111110",
        "01111000111110",
        "01111000111110",
        "01111000111110",
        "00110000000000",
        "10000000000000",
        "10000000000000",
        "00100001111100",
        "01110001111100",
        "01111001111100",
        "01111100000000",
        "00000000000000",
    ];

    pub(crate) fn table_one_padded() -> Vec<Vec<usize>> {
        vec![
            vec![14, 0, 0, 0, 0],
            vec![2, 2, 4, 5, 1],
            vec![1, 4, 3, 5, 1],
            vec![1, 4, 3, 5, 1],
            vec![1, 4, 3, 5, 1],
            vec![2, 2, 10, 0, 0],
            vec![0, 1, 13, 0, 0],
            vec![0, 1, 13, 0, 0],
            vec![2, 1, 4, 5, 2],
            vec![1, 3, 3, 5, 2],
            vec![1, 4, 2, 5, 2],
            vec![1, 5, 8, 0, 0],
            vec![14, 0, 0, 0, 0],
        ]
    }

    pub(crate) fn table_one() -> RunMatrix {
        canonicalize_padded(&table_one_padded(), 14).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        parse_bits(s).unwrap()
    }

    #[test]
    fn encode_row_examples() {
        assert_eq!(
            encode_row(&bits("00110000111110")).unwrap().runs(),
            &[2, 2, 4, 5, 1]
        );
        assert_eq!(
            encode_row(&bits("10000000000000")).unwrap().runs(),
            &[0, 1, 13]
        );
        assert_eq!(encode_row(&bits("00000")).unwrap().runs(), &[5]);
        assert_eq!(encode_row(&bits("11111")).unwrap().runs(), &[0, 5]);
        assert!(matches!(encode_row(&[]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn decode_row_examples() {
        let row = RunRow::from_runs(vec![2, 2, 4, 5, 1]).unwrap();
        assert_eq!(bits_to_string(&decode_row(&row)), "00110000111110");
        assert_eq!(
            decode_row(&RunRow::from_runs(vec![14]).unwrap()),
            vec![false; 14]
        );
        assert_eq!(
            decode_row(&RunRow::from_runs(vec![0, 3]).unwrap()),
            vec![true; 3]
        );
    }

    #[test]
    fn non_canonical_rows_are_rejected() {
        assert!(matches!(
            RunRow::new(vec![2, 0, 3], 5),
            Err(Error::CorruptRun { .. })
        ));
        assert!(matches!(
            RunRow::new(vec![2, 3], 6),
            Err(Error::CorruptRun { .. })
        ));
        assert!(RunRow::new(vec![0], 0).is_err());
        assert!(RunRow::from_runs(vec![3, 1, 0]).is_err());
    }

    #[test]
    fn table_one_encodes_to_printed_runs() {
        let img = BinaryImage::from_strings(&TABLE_ONE_BITS).unwrap();
        let m = encode_image(&img);
        assert_eq!(m, table_one());
        assert_eq!(decode_image(&m), img);
        assert_eq!(m.row(7).runs(), &[0, 1, 13]);
        assert_eq!(m.row(1).runs(), &[14]);
    }

    #[test]
    fn single_white_pixel() {
        let img = BinaryImage::blank(1, 1).unwrap();
        let m = encode_image(&img);
        assert_eq!(m.rows()[0].runs(), &[1]);
    }

    #[test]
    fn canonicalize_examples() {
        let m = canonicalize_padded(&[vec![14, 0, 0, 0, 0]], 14).unwrap();
        assert_eq!(m.row(1).runs(), &[14]);
        let m = canonicalize_padded(&[vec![2, 1, 4, 5, 2]], 14).unwrap();
        assert_eq!(m.row(1).runs(), &[2, 1, 4, 5, 2]);
        let m = canonicalize_padded(&[vec![1, 5, 8, 0, 0]], 14).unwrap();
        assert_eq!(m.row(1).runs(), &[1, 5, 8]);
    }

    #[test]
    fn canonicalize_names_offending_row() {
        let err = canonicalize_padded(&[vec![14], vec![2, 0, 12]], 14).unwrap_err();
        assert!(matches!(err, Error::CorruptRun { row: 2, .. }), "{err:?}");
        let err = canonicalize_padded(&[vec![14], vec![14], vec![3, 3, 0]], 14).unwrap_err();
        assert!(matches!(err, Error::CorruptRun { row: 3, .. }), "{err:?}");
    }

    #[test]
    fn image_dimension_mismatch() {
        assert!(matches!(
            BinaryImage::new(3, 2, vec![false; 5]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn scan_table_one_columns() {
        let m = table_one();
        let cols: Vec<ColumnSlice> = m.scan_columns().collect();
        assert_eq!(cols.len(), 14);
        let ones: Vec<usize> = cols[0]
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(ones, vec![7, 8]);
        assert!(cols[6].bits.iter().all(|&b| !b));
        assert_eq!(cols[6].column_index, 7);
    }

    #[test]
    fn scan_blank_matrix() {
        let m = RunMatrix::blank(3, 3).unwrap();
        let cols: Vec<_> = m.scan_columns().collect();
        assert_eq!(cols.len(), 3);
        assert!(cols.iter().all(|c| c.bits == vec![false; 3]));
    }

    #[test]
    fn black_counts() {
        assert_eq!(black_pixel_count(&table_one()), 66);
        assert_eq!(black_pixel_count(&RunMatrix::blank(5, 4).unwrap()), 0);
        let m = RunMatrix::from_runs(7, vec![vec![0, 7]]).unwrap();
        assert_eq!(black_pixel_count(&m), 7);
    }

    #[test]
    fn black_spans_are_one_based() {
        let row = RunRow::from_runs(vec![2, 2, 4, 5, 1]).unwrap();
        assert_eq!(row.black_spans().collect::<Vec<_>>(), vec![(3, 2), (9, 5)]);
        let row = RunRow::from_runs(vec![0, 1, 13]).unwrap();
        assert_eq!(row.black_spans().collect::<Vec<_>>(), vec![(1, 1)]);
    }
}
