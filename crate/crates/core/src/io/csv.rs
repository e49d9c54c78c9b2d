//! CSV emitters and the font-size training reader.
//!
//! Output is comma separated with `\n` record terminators and `.` decimal
//! points; floats use Rust's shortest round-trip formatting.

use csv::{ReaderBuilder, Terminator, WriterBuilder};

use crate::blocks::BlockCharacterization;
use crate::error::{Error, Result};
use crate::features::{
    Direction, EntropyReport, LogHistogram, ProfileCurve, RunHistogram, LOG_BIN_LABELS,
};
use crate::fontsize::{Detection, LineFeature, Sample};
use crate::segment::Segment;

fn emit<I, R>(header: &[&str], records: I) -> Vec<u8>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = WriterBuilder::new()
        .terminator(Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)
        .expect("writing to a Vec cannot fail");
    for record in records {
        w.write_record(record)
            .expect("writing to a Vec cannot fail");
    }
    w.into_inner().expect("writing to a Vec cannot fail")
}

fn axis(direction: Direction) -> &'static str {
    match direction {
        Direction::RowWise => "row",
        Direction::ColumnWise => "column",
    }
}

/// `row,black_count` or `column,black_count`, indices 1-based.
pub fn profile_csv(curve: &ProfileCurve) -> Vec<u8> {
    emit(
        &[axis(curve.direction), "black_count"],
        curve
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| [(i + 1).to_string(), v.to_string()]),
    )
}

pub fn histogram_csv(h: &RunHistogram) -> Vec<u8> {
    emit(
        &["run_length", "count"],
        h.counts.iter().map(|(l, n)| [l.to_string(), n.to_string()]),
    )
}

pub fn log_histogram_csv(h: &LogHistogram) -> Vec<u8> {
    emit(
        &["bin", "count"],
        LOG_BIN_LABELS
            .iter()
            .zip(h.bins)
            .map(|(label, n)| [label.to_string(), n.to_string()]),
    )
}

/// One record per line of the report, tagged with the formula identifier.
pub fn entropy_csv(r: &EntropyReport) -> Vec<u8> {
    emit(
        &[axis(r.direction), "ceq", "seq", "formula"],
        r.ceq.iter().zip(&r.seq).enumerate().map(|(i, (c, s))| {
            [
                (i + 1).to_string(),
                c.to_string(),
                s.to_string(),
                r.formula().to_string(),
            ]
        }),
    )
}

pub fn segments_csv(segments: &[Segment]) -> Vec<u8> {
    emit(
        &["kind", "row_start", "row_end", "col_start", "col_end"],
        segments.iter().map(|s| {
            [
                s.kind.as_str().to_string(),
                s.rect.row_start.to_string(),
                s.rect.row_end.to_string(),
                s.rect.col_start.to_string(),
                s.rect.col_end.to_string(),
            ]
        }),
    )
}

fn optional(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |x| x.to_string())
}

pub fn characterization_csv(c: &BlockCharacterization) -> Vec<u8> {
    emit(
        &BlockCharacterization::FIELDS,
        [[
            c.density.to_string(),
            c.ceq_total.to_string(),
            c.seq_total.to_string(),
            optional(c.relative_density),
            optional(c.relative_ceq),
            optional(c.relative_seq),
        ]],
    )
}

/// Per-line font size detections alongside their line segments.
pub fn detections_csv(lines: &[Segment], detections: &[Detection]) -> Vec<u8> {
    emit(
        &[
            "line",
            "row_start",
            "row_end",
            "line_height",
            "predicted",
            "detected",
        ],
        lines.iter().zip(detections).enumerate().map(|(i, (s, d))| {
            [
                (i + 1).to_string(),
                s.rect.row_start.to_string(),
                s.rect.row_end.to_string(),
                s.rect.height().to_string(),
                d.predicted.to_string(),
                d.detected.to_string(),
            ]
        }),
    )
}

/// Parses `line_height,ascender_height,font_size` training rows; the
/// ascender column may be empty.
pub fn read_training_csv(bytes: &[u8]) -> Result<Vec<Sample>> {
    let mut reader = ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let headers = reader.headers().map_err(|e| Error::CorruptFile {
        line: 1,
        reason: e.to_string(),
    })?;
    let expected = ["line_height", "ascender_height", "font_size"];
    if headers.iter().ne(expected) {
        return Err(Error::CorruptFile {
            line: 1,
            reason: format!("expected header {}", expected.join(",")),
        });
    }
    let mut samples = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::CorruptFile {
            line: e.position().map_or(0, |p| p.line() as usize),
            reason: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let bad = |reason: String| Error::CorruptFile { line, reason };
        let height: usize = record[0]
            .parse()
            .map_err(|e| bad(format!("line_height: {e}")))?;
        let ascender = match &record[1] {
            "" => None,
            a => Some(
                a.parse::<usize>()
                    .map_err(|e| bad(format!("ascender_height: {e}")))?,
            ),
        };
        let font_size: f64 = record[2]
            .parse()
            .map_err(|e| bad(format!("font_size: {e}")))?;
        let feature = LineFeature::new(height, ascender).map_err(|e| bad(e.to_string()))?;
        samples.push(Sample { feature, font_size });
    }
    Ok(samples)
}

pub fn training_csv(samples: &[Sample]) -> Vec<u8> {
    emit(
        &["line_height", "ascender_height", "font_size"],
        samples.iter().map(|s| {
            [
                s.feature.line_height.to_string(),
                s.feature
                    .ascender_height
                    .map_or(String::new(), |a| a.to_string()),
                s.font_size.to_string(),
            ]
        }),
    )
}
