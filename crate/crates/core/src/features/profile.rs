use crate::meter::WorkMeter;
use crate::rle::RunMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// One value per row.
    RowWise,
    /// One value per column.
    ColumnWise,
}

/// Black-pixel counts along rows or columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileCurve {
    pub direction: Direction,
    pub values: Vec<usize>,
}

impl ProfileCurve {
    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Vertical projection profile: per-row sum of the black (odd-index) runs.
pub fn vpp(m: &RunMatrix) -> ProfileCurve {
    vpp_metered(m, &mut WorkMeter::new())
}

pub fn vpp_metered(m: &RunMatrix, meter: &mut WorkMeter) -> ProfileCurve {
    let values = m
        .rows()
        .iter()
        .map(|row| {
            meter.visit(row.runs().len());
            row.black_count()
        })
        .collect();
    ProfileCurve {
        direction: Direction::RowWise,
        values,
    }
}

/// Horizontal projection profile: per-column black count, produced by the
/// column scanner so working memory stays proportional to the height.
pub fn hpp(m: &RunMatrix) -> ProfileCurve {
    hpp_metered(m, &mut WorkMeter::new())
}

pub fn hpp_metered(m: &RunMatrix, meter: &mut WorkMeter) -> ProfileCurve {
    let mut scanner = m.scan_columns();
    ProfileCurve {
        direction: Direction::ColumnWise,
        values: column_counts(&mut scanner, meter),
    }
}

pub(crate) fn column_counts(
    scanner: &mut crate::rle::ColumnScanner<'_>,
    meter: &mut WorkMeter,
) -> Vec<usize> {
    let mut buf = Vec::with_capacity(scanner.height());
    let mut values = Vec::with_capacity(scanner.len());
    while scanner.next_into_metered(&mut buf, meter).is_some() {
        values.push(buf.iter().filter(|&&b| b).count());
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::tests::table_one;

    #[test]
    fn table_one_vpp() {
        let p = vpp(&table_one());
        assert_eq!(p.direction, Direction::RowWise);
        assert_eq!(p.values, vec![0, 7, 9, 9, 9, 2, 1, 1, 6, 8, 9, 5, 0]);
    }

    #[test]
    fn table_one_hpp() {
        let p = hpp(&table_one());
        assert_eq!(p.direction, Direction::ColumnWise);
        assert_eq!(p.values, vec![2, 6, 9, 8, 5, 1, 0, 3, 7, 7, 7, 7, 4, 0]);
        assert_eq!(p.total(), 66);
        assert_eq!(vpp(&table_one()).total(), 66);
    }

    #[test]
    fn trivial_profiles() {
        let blank = RunMatrix::blank(4, 3).unwrap();
        assert_eq!(vpp(&blank).values, vec![0; 3]);
        assert_eq!(hpp(&blank).values, vec![0; 4]);
        let row = RunMatrix::from_runs(5, vec![vec![0, 5]]).unwrap();
        assert_eq!(vpp(&row).values, vec![5]);
        let solid = RunMatrix::from_runs(3, vec![vec![0, 3], vec![0, 3]]).unwrap();
        assert_eq!(hpp(&solid).values, vec![2, 2, 2]);
    }

    #[test]
    fn vpp_visits_each_run_once() {
        let m = table_one();
        let mut meter = WorkMeter::new();
        vpp_metered(&m, &mut meter);
        assert_eq!(meter.visits, m.run_count());
    }
}
