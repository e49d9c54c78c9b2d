//! Text line, word and character segmentation on run data.
//!
//! Lines are maximal bands of rows whose black count exceeds a blank
//! threshold. Inside a line, the column occupancy (black pixels per column,
//! restricted to the line's rows) is walked left to right: every maximal
//! stretch of occupied columns is a character, and blank gaps at least
//! `word_space` columns wide separate words.

use crate::blocks::extract_block;
use crate::error::{Error, Result};
use crate::features::{vpp, Direction, ProfileCurve};
use crate::meter::WorkMeter;
use crate::rle::RunMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SegmentKind {
    Line,
    Word,
    Character,
    Block,
}

impl SegmentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SegmentKind::Line => "line",
            SegmentKind::Word => "word",
            SegmentKind::Character => "character",
            SegmentKind::Block => "block",
        }
    }
}

/// Rectangle with 1-based inclusive bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub row_start: usize,
    pub row_end: usize,
    pub col_start: usize,
    pub col_end: usize,
}

impl Rect {
    pub fn new(row_start: usize, row_end: usize, col_start: usize, col_end: usize) -> Self {
        Rect {
            row_start,
            row_end,
            col_start,
            col_end,
        }
    }

    /// Whole extent of `m`.
    pub fn full(m: &RunMatrix) -> Self {
        Rect::new(1, m.height(), 1, m.width())
    }

    pub fn height(&self) -> usize {
        self.row_end + 1 - self.row_start
    }

    pub fn width(&self) -> usize {
        self.col_end + 1 - self.col_start
    }

    pub fn area(&self) -> usize {
        self.height() * self.width()
    }

    /// Checks that the rectangle is non-empty and lies inside `m`.
    pub fn check_within(&self, m: &RunMatrix) -> Result<()> {
        let ok = self.row_start >= 1
            && self.row_start <= self.row_end
            && self.row_end <= m.height()
            && self.col_start >= 1
            && self.col_start <= self.col_end
            && self.col_end <= m.width();
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "rect {}:{}:{}:{} outside document {}x{}",
                self.row_start,
                self.row_end,
                self.col_start,
                self.col_end,
                m.height(),
                m.width()
            )))
        }
    }
}

/// A line, word, character or block region, optionally carrying its
/// extracted run data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub kind: SegmentKind,
    pub rect: Rect,
    pub payload: Option<RunMatrix>,
}

impl Segment {
    pub fn new(kind: SegmentKind, rect: Rect) -> Self {
        Segment {
            kind,
            rect,
            payload: None,
        }
    }

    /// Fills `payload` with the segment's region of `m`.
    pub fn with_payload(mut self, m: &RunMatrix) -> Result<Self> {
        self.payload = extract_block(m, self.rect)?.payload;
        Ok(self)
    }
}

/// Text lines: maximal runs of rows whose black count is above
/// `blank_threshold`. Each line spans the full document width.
pub fn segment_lines(m: &RunMatrix, blank_threshold: usize) -> Vec<Segment> {
    let profile = vpp(m);
    bands(&profile.values, blank_threshold)
        .map(|(first, last)| Segment::new(SegmentKind::Line, Rect::new(first, last, 1, m.width())))
        .collect()
}

/// Blank rows between consecutive lines.
pub fn line_gaps(lines: &[Segment]) -> Vec<usize> {
    lines
        .windows(2)
        .map(|w| w[1].rect.row_start - w[0].rect.row_end - 1)
        .collect()
}

/// 1-based inclusive bounds of maximal stretches where `values > threshold`.
fn bands(values: &[usize], threshold: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    let mut i = 0;
    std::iter::from_fn(move || {
        while i < values.len() && values[i] <= threshold {
            i += 1;
        }
        if i == values.len() {
            return None;
        }
        let start = i;
        while i < values.len() && values[i] > threshold {
            i += 1;
        }
        Some((start + 1, i))
    })
}

/// Black count per column over rows `first..=last` (1-based inclusive).
pub fn column_occupancy(m: &RunMatrix, first: usize, last: usize) -> Result<ProfileCurve> {
    let mut scanner = m.scan_columns_in(first, last)?;
    Ok(ProfileCurve {
        direction: Direction::ColumnWise,
        values: crate::features::profile_column_counts(&mut scanner, &mut WorkMeter::new()),
    })
}

/// Widths of blank gaps strictly between occupied columns.
pub fn interior_gaps(occupancy: &[usize]) -> Vec<usize> {
    let spans: Vec<(usize, usize)> = bands(occupancy, 0).collect();
    spans.windows(2).map(|w| w[1].0 - w[0].1 - 1).collect()
}

/// Default word-space threshold: twice the median interior gap width (the
/// lower median for even counts), or 1 when the line has no gaps.
pub fn auto_word_space(occupancy: &[usize]) -> usize {
    let mut gaps = interior_gaps(occupancy);
    if gaps.is_empty() {
        return 1;
    }
    gaps.sort_unstable();
    2 * gaps[(gaps.len() - 1) / 2]
}

/// Words and characters of `line`.
///
/// Characters are maximal stretches of occupied columns; their row span is
/// the line's. Consecutive characters separated by fewer than `word_space`
/// blank columns belong to the same word.
pub fn segment_words_chars(
    m: &RunMatrix,
    line: &Segment,
    word_space: usize,
) -> Result<(Vec<Segment>, Vec<Segment>)> {
    if word_space == 0 {
        return Err(Error::invalid("word space threshold must be at least 1"));
    }
    line.rect.check_within(m)?;
    let occupancy = column_occupancy(m, line.rect.row_start, line.rect.row_end)?;
    Ok(words_chars_from_occupancy(
        &occupancy.values,
        line.rect,
        word_space,
    ))
}

/// Like [`segment_words_chars`] with the threshold from [`auto_word_space`].
pub fn segment_words_chars_auto(
    m: &RunMatrix,
    line: &Segment,
) -> Result<(Vec<Segment>, Vec<Segment>, usize)> {
    line.rect.check_within(m)?;
    let occupancy = column_occupancy(m, line.rect.row_start, line.rect.row_end)?;
    let window = &occupancy.values[line.rect.col_start - 1..line.rect.col_end];
    let word_space = auto_word_space(window);
    let (words, chars) = words_chars_from_occupancy(&occupancy.values, line.rect, word_space);
    Ok((words, chars, word_space))
}

fn words_chars_from_occupancy(
    occupancy: &[usize],
    line: Rect,
    word_space: usize,
) -> (Vec<Segment>, Vec<Segment>) {
    let offset = line.col_start - 1;
    let window = &occupancy[offset..line.col_end];
    let span = |a: usize, b: usize, kind| {
        Segment::new(
            kind,
            Rect::new(line.row_start, line.row_end, a + offset, b + offset),
        )
    };
    let mut words = Vec::new();
    let mut chars = Vec::new();
    let mut word: Option<(usize, usize)> = None;
    for (a, b) in bands(window, 0) {
        chars.push(span(a, b, SegmentKind::Character));
        word = match word {
            Some((ws, we)) if a - we - 1 < word_space => Some((ws, b)),
            Some((ws, we)) => {
                words.push(span(ws, we, SegmentKind::Word));
                Some((a, b))
            }
            None => Some((a, b)),
        };
    }
    if let Some((ws, we)) = word {
        words.push(span(ws, we, SegmentKind::Word));
    }
    (words, chars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::hpp;
    use crate::rle::tests::table_one;
    use crate::rle::{encode_image, BinaryImage};

    fn rects(segs: &[Segment]) -> Vec<(usize, usize, usize, usize)> {
        segs.iter()
            .map(|s| {
                (
                    s.rect.row_start,
                    s.rect.row_end,
                    s.rect.col_start,
                    s.rect.col_end,
                )
            })
            .collect()
    }

    fn synthetic_two_lines() -> RunMatrix {
        let rows = [
            "0110", "1111", "0100", "0000", "0000", "0010", "0110", "1000",
        ];
        encode_image(&BinaryImage::from_strings(&rows).unwrap())
    }

    #[test]
    fn table_one_is_one_line() {
        let lines = segment_lines(&table_one(), 0);
        assert_eq!(rects(&lines), vec![(2, 12, 1, 14)]);
        assert!(lines.iter().all(|l| l.kind == SegmentKind::Line));
    }

    #[test]
    fn two_line_synthetic() {
        let lines = segment_lines(&synthetic_two_lines(), 0);
        assert_eq!(rects(&lines), vec![(1, 3, 1, 4), (6, 8, 1, 4)]);
        assert_eq!(line_gaps(&lines), vec![2]);
    }

    #[test]
    fn blank_page_has_no_lines() {
        assert!(segment_lines(&RunMatrix::blank(10, 10).unwrap(), 0).is_empty());
    }

    #[test]
    fn blank_threshold_suppresses_specks() {
        // rows 2 and 3 hold one pixel each
        let m = RunMatrix::from_runs(6, vec![vec![0, 6], vec![2, 1, 3], vec![5, 1], vec![0, 6]])
            .unwrap();
        assert_eq!(rects(&segment_lines(&m, 0)), vec![(1, 4, 1, 6)]);
        assert_eq!(
            rects(&segment_lines(&m, 1)),
            vec![(1, 1, 1, 6), (4, 4, 1, 6)]
        );
    }

    #[test]
    fn table_one_occupancy() {
        let m = table_one();
        let occ = column_occupancy(&m, 2, 12).unwrap();
        let zeros: Vec<usize> = occ
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(zeros, vec![7, 14]);
        assert_eq!(column_occupancy(&m, 1, 13).unwrap(), hpp(&m));
        assert_eq!(column_occupancy(&m, 13, 13).unwrap().values, vec![0; 14]);
        assert!(column_occupancy(&m, 0, 3).is_err());
        assert!(column_occupancy(&m, 5, 14).is_err());
        assert!(column_occupancy(&m, 6, 5).is_err());
    }

    #[test]
    fn table_one_words_and_chars() {
        let m = table_one();
        let line = &segment_lines(&m, 0)[0];
        let (words, chars) = segment_words_chars(&m, line, 2).unwrap();
        assert_eq!(rects(&chars), vec![(2, 12, 1, 6), (2, 12, 8, 13)]);
        assert_eq!(rects(&words), vec![(2, 12, 1, 13)]);

        let (words, chars) = segment_words_chars(&m, line, 1).unwrap();
        assert_eq!(rects(&words), vec![(2, 12, 1, 6), (2, 12, 8, 13)]);
        assert_eq!(chars.len(), 2);
    }

    #[test]
    fn solid_line_is_one_word_one_char() {
        let m = RunMatrix::from_runs(8, vec![vec![2, 4, 2]; 3]).unwrap();
        let line = &segment_lines(&m, 0)[0];
        let (words, chars) = segment_words_chars(&m, line, 3).unwrap();
        assert_eq!(rects(&words), vec![(1, 3, 3, 6)]);
        assert_eq!(rects(&chars), vec![(1, 3, 3, 6)]);
    }

    #[test]
    fn inkless_line_yields_nothing() {
        let m = RunMatrix::blank(5, 2).unwrap();
        let line = Segment::new(SegmentKind::Line, Rect::full(&m));
        let (w, c) = segment_words_chars(&m, &line, 2).unwrap();
        assert!(w.is_empty() && c.is_empty());
    }

    #[test]
    fn zero_word_space_rejected() {
        let m = table_one();
        let line = &segment_lines(&m, 0)[0];
        assert!(matches!(
            segment_words_chars(&m, line, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn auto_threshold() {
        assert_eq!(auto_word_space(&[1, 0, 1, 0, 0, 0, 1, 0, 1]), 2);
        assert_eq!(auto_word_space(&[0, 3, 3, 0]), 1);
        assert_eq!(interior_gaps(&[0, 1, 0, 0, 1, 1, 0, 1, 0]), vec![2, 1]);
        let m = table_one();
        let line = &segment_lines(&m, 0)[0];
        let (words, chars, ws) = segment_words_chars_auto(&m, line).unwrap();
        assert_eq!(ws, 2);
        assert_eq!((words.len(), chars.len()), (1, 2));
    }

    #[test]
    fn line_payload_resegments_to_itself() {
        let m = synthetic_two_lines();
        for line in segment_lines(&m, 0) {
            let line = line.with_payload(&m).unwrap();
            let payload = line.payload.as_ref().unwrap();
            let again = segment_lines(payload, 0);
            assert_eq!(
                rects(&again),
                vec![(1, payload.height(), 1, payload.width())]
            );
        }
    }
}
