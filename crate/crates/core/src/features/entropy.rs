//! Conventional (CEQ) and sequential (SEQ) entropy quantifiers.
//!
//! For a line of `N` pixels with `p` positive and `q` negative transitions:
//!
//! ```text
//! CEQ = h(p/N) + h(q/N)                  h(x) = -x·log2(x), h(0) = 0
//! SEQ = Σ_x [h(x/N) + h(1 - x/N)]        over every transition position x
//! ```
//!
//! CEQ measures how much of the line changes colour; SEQ weighs each
//! transition by the binary entropy of where it sits along the line. Both
//! are zero on a line without transitions.

use crate::meter::WorkMeter;
use crate::rle::RunMatrix;

use super::profile::Direction;
use super::transitions::{column_transitions, row_transitions, TransitionStats};

/// Identifier of the formulas above, carried into serialized reports.
pub const ENTROPY_FORMULA: &str = "ceq-seq-v1";

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    /// `RowWise` for horizontal entropy (one value per row), `ColumnWise`
    /// for vertical.
    pub direction: Direction,
    pub ceq: Vec<f64>,
    pub seq: Vec<f64>,
}

impl EntropyReport {
    pub fn ceq_total(&self) -> f64 {
        self.ceq.iter().fold(0.0, |a, b| a + b)
    }

    pub fn seq_total(&self) -> f64 {
        self.seq.iter().fold(0.0, |a, b| a + b)
    }

    pub fn formula(&self) -> &'static str {
        ENTROPY_FORMULA
    }
}

fn h(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

pub fn ceq(t: &TransitionStats) -> f64 {
    let n = t.line_length as f64;
    h(t.pos_count() as f64 / n) + h(t.neg_count() as f64 / n)
}

pub fn seq(t: &TransitionStats) -> f64 {
    let n = t.line_length as f64;
    t.positions()
        .map(|x| {
            let r = x as f64 / n;
            h(r) + h(1.0 - r)
        })
        .fold(0.0, |a, b| a + b)
}

/// Entropy of every row, from run boundaries alone.
pub fn entropy_horizontal(m: &RunMatrix) -> EntropyReport {
    let (ceq, seq) = m
        .rows()
        .iter()
        .map(|row| {
            let t = row_transitions(row);
            (ceq(&t), seq(&t))
        })
        .unzip();
    EntropyReport {
        direction: Direction::RowWise,
        ceq,
        seq,
    }
}

/// Entropy of every column, using the column scanner.
pub fn entropy_vertical(m: &RunMatrix) -> EntropyReport {
    entropy_vertical_metered(m, &mut WorkMeter::new())
}

pub fn entropy_vertical_metered(m: &RunMatrix, meter: &mut WorkMeter) -> EntropyReport {
    let mut scanner = m.scan_columns();
    let mut buf = Vec::with_capacity(m.height());
    let mut report = EntropyReport {
        direction: Direction::ColumnWise,
        ceq: Vec::with_capacity(m.width()),
        seq: Vec::with_capacity(m.width()),
    };
    while scanner.next_into_metered(&mut buf, meter).is_some() {
        let t = column_transitions(&buf);
        meter.working(scanner.state_len() + buf.capacity() + t.count());
        report.ceq.push(ceq(&t));
        report.seq.push(seq(&t));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::tests::table_one;

    #[test]
    fn line_two_ceq() {
        let r = entropy_horizontal(&table_one());
        let expected = -2.0 * (2.0f64 / 14.0) * (2.0f64 / 14.0).log2();
        assert!((r.ceq[1] - expected).abs() < 1e-12);
        assert!((r.ceq[1] - 0.8021).abs() < 1e-4);
    }

    #[test]
    fn line_seven_seq() {
        let r = entropy_horizontal(&table_one());
        let bin = |p: f64| -p * p.log2() - (1.0 - p) * (1.0 - p).log2();
        let expected = bin(1.0 / 14.0) + bin(2.0 / 14.0);
        assert!((r.seq[6] - expected).abs() < 1e-12);
        assert!((r.seq[6] - 0.9629).abs() < 1e-4);
    }

    #[test]
    fn blank_lines_are_zero() {
        let m = RunMatrix::blank(6, 5).unwrap();
        for r in [entropy_horizontal(&m), entropy_vertical(&m)] {
            assert!(r.ceq.iter().chain(&r.seq).all(|&v| v == 0.0));
        }
        let r = entropy_horizontal(&table_one());
        assert_eq!((r.ceq[0], r.seq[0]), (0.0, 0.0));
    }

    #[test]
    fn vertical_report_has_one_value_per_column() {
        let r = entropy_vertical(&table_one());
        assert_eq!(r.ceq.len(), 14);
        assert_eq!(r.direction, Direction::ColumnWise);
        // column 7 is blank
        assert_eq!(r.ceq[6], 0.0);
        assert!(r.ceq_total() > 0.0 && r.seq_total() > 0.0);
    }
}
