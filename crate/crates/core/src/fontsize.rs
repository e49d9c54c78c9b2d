//! Font size from line height.
//!
//! A least-squares line maps text-line height (pixels) to font size
//! (points). Detection evaluates the line and snaps to the nearest size seen
//! during training.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rle::RunMatrix;
use crate::segment::segment_lines;

/// Height features of one text line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFeature {
    pub line_height: usize,
    /// Carried through I/O; not used by the regression.
    pub ascender_height: Option<usize>,
}

impl LineFeature {
    pub fn new(line_height: usize, ascender_height: Option<usize>) -> Result<Self> {
        if line_height == 0 {
            return Err(Error::invalid("line height must be at least 1"));
        }
        if let Some(a) = ascender_height {
            if a > line_height {
                return Err(Error::invalid(format!(
                    "ascender height {a} exceeds line height {line_height}"
                )));
            }
        }
        Ok(LineFeature {
            line_height,
            ascender_height,
        })
    }

    pub fn height(line_height: usize) -> Self {
        LineFeature {
            line_height,
            ascender_height: None,
        }
    }
}

/// One training observation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub feature: LineFeature,
    pub font_size: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FontSizeModel {
    /// Points per pixel of line height.
    pub slope: f64,
    pub intercept: f64,
    /// Distinct trained sizes, ascending.
    pub known_sizes: Vec<f64>,
    pub training_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub predicted: f64,
    pub detected: f64,
}

/// Ordinary least squares of font size on line height.
pub fn fit(samples: &[Sample]) -> Result<FontSizeModel> {
    if samples.len() < 2 {
        return Err(Error::DegenerateFit(format!(
            "need at least two samples, got {}",
            samples.len()
        )));
    }
    let n = samples.len() as f64;
    let mean_x = samples
        .iter()
        .map(|s| s.feature.line_height as f64)
        .sum::<f64>()
        / n;
    let mean_y = samples.iter().map(|s| s.font_size).sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for s in samples {
        let dx = s.feature.line_height as f64 - mean_x;
        sxx += dx * dx;
        sxy += dx * (s.font_size - mean_y);
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateFit(
            "all training lines have the same height".into(),
        ));
    }
    if samples.iter().any(|s| !s.font_size.is_finite()) {
        return Err(Error::invalid("font sizes must be finite"));
    }
    let slope = sxy / sxx;
    let mut known_sizes: Vec<f64> = samples.iter().map(|s| s.font_size).collect();
    known_sizes.sort_by(f64::total_cmp);
    known_sizes.dedup();
    Ok(FontSizeModel {
        slope,
        intercept: mean_y - slope * mean_x,
        known_sizes,
        training_count: samples.len(),
    })
}

// Distances closer than this are treated as ties.
const TIE_EPSILON: f64 = 1e-9;

pub fn detect(model: &FontSizeModel, feature: LineFeature) -> Detection {
    let predicted = model.slope * feature.line_height as f64 + model.intercept;
    let mut detected = model.known_sizes[0];
    let mut best = (predicted - detected).abs();
    for &size in &model.known_sizes[1..] {
        let d = (predicted - size).abs();
        if d < best - TIE_EPSILON {
            best = d;
            detected = size;
        }
    }
    Detection {
        predicted,
        detected,
    }
}

/// One feature per text line found with a zero blank threshold.
pub fn extract_line_features(m: &RunMatrix) -> Vec<LineFeature> {
    extract_line_features_with(m, 0)
}

pub fn extract_line_features_with(m: &RunMatrix, blank_threshold: usize) -> Vec<LineFeature> {
    segment_lines(m, blank_threshold)
        .iter()
        .map(|line| LineFeature::height(line.rect.height()))
        .collect()
}

/// Keeps, for every font size, only the tallest training line. Lines
/// without ascenders or descenders are shorter at the same size, so the
/// maximum is the most stable height for a size.
pub fn aggregate_max(samples: &[Sample]) -> Vec<Sample> {
    let mut best: BTreeMap<u64, Sample> = BTreeMap::new();
    for s in samples {
        // Key by bit pattern of the size; sizes are compared exactly.
        let entry = best.entry(s.font_size.to_bits()).or_insert(*s);
        if s.feature.line_height > entry.feature.line_height {
            *entry = *s;
        }
    }
    let mut out: Vec<Sample> = best.into_values().collect();
    out.sort_by(|a, b| a.font_size.total_cmp(&b.font_size));
    out
}

impl FontSizeModel {
    /// `key=value` lines: `slope`, `intercept`, `known_sizes` (comma
    /// separated), `training_count`.
    pub fn to_text(&self) -> String {
        let sizes: Vec<String> = self.known_sizes.iter().map(|s| s.to_string()).collect();
        let mut out = String::new();
        writeln!(out, "slope={}", self.slope).unwrap();
        writeln!(out, "intercept={}", self.intercept).unwrap();
        writeln!(out, "known_sizes={}", sizes.join(",")).unwrap();
        writeln!(out, "training_count={}", self.training_count).unwrap();
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut slope = None;
        let mut intercept = None;
        let mut sizes = None;
        let mut count = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::CorruptFile {
                line: i + 1,
                reason,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key=value".into()))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|e| bad(format!("{key}: {e}")))
            };
            match key.trim() {
                "slope" => slope = Some(num(value)?),
                "intercept" => intercept = Some(num(value)?),
                "known_sizes" => {
                    sizes = Some(value.split(',').map(num).collect::<Result<Vec<f64>>>()?)
                }
                "training_count" => {
                    count = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|e| bad(format!("training_count: {e}")))?,
                    )
                }
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        let missing = |k: &str| Error::CorruptFile {
            line: text.lines().count(),
            reason: format!("missing {k}"),
        };
        let mut known_sizes = sizes.ok_or_else(|| missing("known_sizes"))?;
        if known_sizes.is_empty() || known_sizes.iter().any(|s| !s.is_finite()) {
            return Err(missing("finite known_sizes"));
        }
        known_sizes.sort_by(f64::total_cmp);
        known_sizes.dedup();
        Ok(FontSizeModel {
            slope: slope.ok_or_else(|| missing("slope"))?,
            intercept: intercept.ok_or_else(|| missing("intercept"))?,
            known_sizes,
            training_count: count.ok_or_else(|| missing("training_count"))?,
        })
    }
}
