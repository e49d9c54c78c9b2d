use std::collections::BTreeMap;

use crate::rle::RunMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunColor {
    Black,
    White,
    /// Black and white runs tallied together.
    Combined,
}

impl RunColor {
    fn includes(self, black: bool) -> bool {
        match self {
            RunColor::Black => black,
            RunColor::White => !black,
            RunColor::Combined => true,
        }
    }
}

/// Frequency of each run length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunHistogram {
    pub color: RunColor,
    pub counts: BTreeMap<usize, usize>,
}

impl RunHistogram {
    /// Number of runs tallied.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Labels of the log-scale length classes.
pub const LOG_BIN_LABELS: [&str; 9] = [
    "1", "2", "3-4", "5-8", "9-16", "17-32", "33-64", "65-128", "129+",
];

/// Run counts over the length classes of [`LOG_BIN_LABELS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LogHistogram {
    pub bins: [usize; 9],
}

impl LogHistogram {
    pub fn total(&self) -> usize {
        self.bins.iter().sum()
    }

    /// Bin of a run of `len ≥ 1` pixels: `ceil(log2(len))`, capped at the
    /// open-ended top class.
    pub fn bin_of(len: usize) -> usize {
        debug_assert!(len > 0);
        ((usize::BITS - (len - 1).leading_zeros()) as usize).min(8)
    }
}

/// Histogram of run lengths of the requested color. Even-index runs are
/// white, odd-index black; the zero leading run of a black-first row is not
/// a run and is never counted.
pub fn run_histogram(m: &RunMatrix, color: RunColor) -> RunHistogram {
    let mut counts = BTreeMap::new();
    for row in m.rows() {
        for (i, &len) in row.runs().iter().enumerate() {
            if len > 0 && color.includes(i % 2 == 1) {
                *counts.entry(len).or_insert(0) += 1;
            }
        }
    }
    RunHistogram { color, counts }
}

pub fn log_bin(h: &RunHistogram) -> LogHistogram {
    let mut out = LogHistogram::default();
    for (&len, &n) in &h.counts {
        out.bins[LogHistogram::bin_of(len)] += n;
    }
    out
}
