use crate::rle::RunRow;

/// Colour changes along one line (a row or a column).
///
/// A positive transition is white→black, a negative one black→white. The
/// position of a transition is the 1-based index of the first pixel of the
/// new colour; the line is taken to be preceded by white, so a line starting
/// with ink has a positive transition at position 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TransitionStats {
    pub pos_positions: Vec<usize>,
    pub neg_positions: Vec<usize>,
    pub line_length: usize,
}

impl TransitionStats {
    pub fn pos_count(&self) -> usize {
        self.pos_positions.len()
    }

    pub fn neg_count(&self) -> usize {
        self.neg_positions.len()
    }

    pub fn count(&self) -> usize {
        self.pos_count() + self.neg_count()
    }

    /// All transition positions, ascending.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        let mut pos = self.pos_positions.iter().peekable();
        let mut neg = self.neg_positions.iter().peekable();
        std::iter::from_fn(move || match (pos.peek(), neg.peek()) {
            (Some(&&p), Some(&&n)) if p < n => pos.next().copied(),
            (_, Some(_)) => neg.next().copied(),
            (Some(_), None) => pos.next().copied(),
            (None, None) => None,
        })
    }
}

/// Transitions of a row, read off the run boundaries: every run after the
/// first starts a transition at (sum of preceding runs) + 1. Odd-index runs
/// start positive transitions, even-index runs negative ones.
pub fn row_transitions(row: &RunRow) -> TransitionStats {
    let runs = row.runs();
    let mut stats = TransitionStats {
        pos_positions: Vec::with_capacity(runs.len() / 2),
        neg_positions: Vec::with_capacity(runs.len() / 2),
        line_length: row.width(),
    };
    let mut before = runs[0];
    for (i, &len) in runs.iter().enumerate().skip(1) {
        if i % 2 == 1 {
            stats.pos_positions.push(before + 1);
        } else {
            stats.neg_positions.push(before + 1);
        }
        before += len;
    }
    stats
}

/// Transitions along a column given its pixels top to bottom.
pub fn column_transitions(bits: &[bool]) -> TransitionStats {
    let mut stats = TransitionStats {
        line_length: bits.len(),
        ..Default::default()
    };
    let mut prev = false;
    for (i, &bit) in bits.iter().enumerate() {
        if bit != prev {
            if bit {
                stats.pos_positions.push(i + 1);
            } else {
                stats.neg_positions.push(i + 1);
            }
            prev = bit;
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::{decode_row, parse_bits};

    #[test]
    fn table_one_line_two() {
        let t = row_transitions(&RunRow::from_runs(vec![2, 2, 4, 5, 1]).unwrap());
        assert_eq!(t.pos_positions, vec![3, 9]);
        assert_eq!(t.neg_positions, vec![5, 14]);
        assert_eq!(t.positions().collect::<Vec<_>>(), vec![3, 5, 9, 14]);
    }

    #[test]
    fn table_one_line_seven() {
        let t = row_transitions(&RunRow::from_runs(vec![0, 1, 13]).unwrap());
        assert_eq!(t.pos_positions, vec![1]);
        assert_eq!(t.neg_positions, vec![2]);
    }

    #[test]
    fn blank_row_has_no_transitions() {
        let t = row_transitions(&RunRow::from_runs(vec![14]).unwrap());
        assert_eq!(t.count(), 0);
        assert_eq!(t.line_length, 14);
    }

    #[test]
    fn row_and_column_rules_agree() {
        for s in ["0110", "1", "0", "1010011", "0001111"] {
            let bits = parse_bits(s).unwrap();
            let row = crate::rle::encode_row(&bits).unwrap();
            assert_eq!(decode_row(&row), bits);
            assert_eq!(row_transitions(&row), column_transitions(&bits), "{s}");
        }
    }
}
