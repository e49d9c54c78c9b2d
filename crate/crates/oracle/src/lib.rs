//! Brute-force pixel-domain reference implementations.
//!
//! Everything here works on an explicit raster (`Grid`, rows of pixels,
//! `true` = black) and shares no code with `rlcdoc`. The test suites decode
//! run data to a grid, run these, and compare against the run-domain
//! results.

use std::collections::BTreeMap;

pub mod gen;

pub type Grid = Vec<Vec<bool>>;

/// Inclusive 1-based `(first, last)`.
pub type Span = (usize, usize);

pub fn width(g: &Grid) -> usize {
    g.first().map_or(0, Vec::len)
}

pub fn column(g: &Grid, c: usize) -> Vec<bool> {
    g.iter().map(|row| row[c]).collect()
}

pub fn black_count(g: &Grid) -> usize {
    g.iter().flatten().filter(|&&b| b).count()
}

/// Black pixels per row.
pub fn vpp(g: &Grid) -> Vec<usize> {
    g.iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .collect()
}

/// Black pixels per column.
pub fn hpp(g: &Grid) -> Vec<usize> {
    (0..width(g))
        .map(|c| g.iter().filter(|row| row[c]).count())
        .collect()
}

/// Maximal same-colour runs of one line as `(black, length)`.
pub fn runs_of(line: &[bool]) -> Vec<(bool, usize)> {
    let mut out: Vec<(bool, usize)> = Vec::new();
    for &b in line {
        match out.last_mut() {
            Some((color, len)) if *color == b => *len += 1,
            _ => out.push((b, 1)),
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
    Combined,
}

pub fn run_histogram(g: &Grid, color: Color) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for row in g {
        for (black, len) in runs_of(row) {
            let wanted = match color {
                Color::Black => black,
                Color::White => !black,
                Color::Combined => true,
            };
            if wanted {
                *h.entry(len).or_insert(0) += 1;
            }
        }
    }
    h
}

/// Log classes as explicit inclusive bounds.
pub const LOG_CLASSES: [(usize, usize); 9] = [
    (1, 1),
    (2, 2),
    (3, 4),
    (5, 8),
    (9, 16),
    (17, 32),
    (33, 64),
    (65, 128),
    (129, usize::MAX),
];

pub fn log_bin(h: &BTreeMap<usize, usize>) -> [usize; 9] {
    let mut bins = [0; 9];
    for (&len, &n) in h {
        let k = LOG_CLASSES
            .iter()
            .position(|&(lo, hi)| lo <= len && len <= hi)
            .expect("run length ≥ 1");
        bins[k] += n;
    }
    bins
}

/// 1-based positions of white→black and black→white changes, with an
/// imaginary white pixel before the line.
pub fn transitions(line: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for x in 0..line.len() {
        let prev = if x == 0 { false } else { line[x - 1] };
        if !prev && line[x] {
            pos.push(x + 1);
        } else if prev && !line[x] {
            neg.push(x + 1);
        }
    }
    (pos, neg)
}

fn plogp(p: f64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

fn binary_entropy(p: f64) -> f64 {
    plogp(p) + plogp(1.0 - p)
}

/// `(ceq, seq)` of one line.
pub fn line_entropy(line: &[bool]) -> (f64, f64) {
    let n = line.len() as f64;
    let (pos, neg) = transitions(line);
    let ceq = plogp(pos.len() as f64 / n) + plogp(neg.len() as f64 / n);
    let mut all: Vec<usize> = pos.into_iter().chain(neg).collect();
    all.sort_unstable();
    let mut seq = 0.0;
    for x in all {
        seq += binary_entropy(x as f64 / n);
    }
    (ceq, seq)
}

pub fn entropy_rows(g: &Grid) -> Vec<(f64, f64)> {
    g.iter().map(|row| line_entropy(row)).collect()
}

pub fn entropy_columns(g: &Grid) -> Vec<(f64, f64)> {
    (0..width(g)).map(|c| line_entropy(&column(g, c))).collect()
}

/// Inclusive 1-based `(first, last)` bands where `values[i] > threshold`.
fn bands(values: &[usize], threshold: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, &v) in values.iter().enumerate() {
        match (v > threshold, start) {
            (true, None) => start = Some(i + 1),
            (false, Some(s)) => {
                out.push((s, i));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, values.len()));
    }
    out
}

/// Line row spans.
pub fn segment_lines(g: &Grid, blank_threshold: usize) -> Vec<(usize, usize)> {
    bands(&vpp(g), blank_threshold)
}

/// Word and character column spans for rows `r1..=r2` and columns
/// `c1..=c2` (all 1-based).
pub fn segment_words_chars(
    g: &Grid,
    (r1, r2): (usize, usize),
    (c1, c2): (usize, usize),
    word_space: usize,
) -> (Vec<Span>, Vec<Span>) {
    let occupancy: Vec<usize> = (c1..=c2)
        .map(|c| (r1..=r2).filter(|&r| g[r - 1][c - 1]).count())
        .collect();
    let chars: Vec<(usize, usize)> = bands(&occupancy, 0)
        .into_iter()
        .map(|(a, b)| (a + c1 - 1, b + c1 - 1))
        .collect();
    let mut words: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &chars {
        match words.last_mut() {
            Some(w) if a - w.1 - 1 < word_space => w.1 = b,
            _ => words.push((a, b)),
        }
    }
    (words, chars)
}

/// Pixels of the inclusive 1-based rectangle.
pub fn crop(g: &Grid, (r1, r2): (usize, usize), (c1, c2): (usize, usize)) -> Grid {
    g[r1 - 1..r2]
        .iter()
        .map(|row| row[c1 - 1..c2].to_vec())
        .collect()
}

/// `(density, ceq_total, seq_total)` of a grid.
pub fn absolute_features(g: &Grid) -> (f64, f64, f64) {
    let area = (g.len() * width(g)) as f64;
    let density = black_count(g) as f64 / area;
    let mut ceq = 0.0;
    let mut seq = 0.0;
    for (c, s) in entropy_rows(g) {
        ceq += c;
        seq += s;
    }
    (density, ceq, seq)
}

/// Least squares through the 2×2 normal equations, solved by Cramer's rule.
/// Returns `(slope, intercept)`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let det = n * sxx - sx * sx;
    if det.abs() < 1e-12 {
        return None;
    }
    let slope = (n * sxy - sx * sy) / det;
    let intercept = (sxx * sy - sx * sxy) / det;
    Some((slope, intercept))
}

/// T.4 codeword lengths, indexed by run (terminating) or run / 64 - 1
/// (makeup).
pub mod t4_lengths {
    pub const WHITE_TERMINATING: [usize; 64] = [
        8, 6, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8,
        8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
        8, 8, 8, 8,
    ];
    pub const BLACK_TERMINATING: [usize; 64] = [
        10, 3, 2, 2, 3, 4, 4, 5, 6, 6, 7, 7, 7, 8, 8, 9, 10, 10, 10, 11, 11, 11, 11, 11, 11, 11,
        12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12,
        12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12,
    ];
    /// 64..=1728.
    pub const WHITE_MAKEUP: [usize; 27] = [
        5, 5, 6, 7, 8, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 9, 6, 9,
    ];
    pub const BLACK_MAKEUP: [usize; 27] = [
        10, 12, 12, 12, 12, 12, 12, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13,
        13, 13, 13, 13,
    ];
    /// 1792..=2560, both colours.
    pub const SHARED_MAKEUP: [usize; 13] = [11, 11, 11, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12];

    fn makeup(black: bool, run: usize) -> usize {
        let k = run / 64 - 1;
        if k >= 27 {
            SHARED_MAKEUP[k - 27]
        } else if black {
            BLACK_MAKEUP[k]
        } else {
            WHITE_MAKEUP[k]
        }
    }

    /// Bits needed for one run: 2560-makeups while ≥ 2624 remain, then an
    /// optional makeup, then a terminating code.
    pub fn run_bits(black: bool, mut run: usize) -> usize {
        let mut bits = 0;
        while run >= 2624 {
            bits += makeup(black, 2560);
            run -= 2560;
        }
        if run >= 64 {
            bits += makeup(black, run - run % 64);
            run %= 64;
        }
        bits + if black {
            BLACK_TERMINATING[run]
        } else {
            WHITE_TERMINATING[run]
        }
    }

    /// Bits for a pixel row (white-first, a black start costs a white 0).
    pub fn row_bits(line: &[bool]) -> usize {
        let runs = super::runs_of(line);
        let mut bits = 0;
        if runs.first().is_some_and(|r| r.0) {
            bits += WHITE_TERMINATING[0];
        }
        for (black, len) in runs {
            bits += run_bits(black, len);
        }
        bits
    }
}
