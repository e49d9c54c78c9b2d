//! Element-visit and working-memory accounting on sparse pages.

mod common;

use common::to_matrix;
use rlcdoc::features::{entropy_vertical_metered, hpp_metered, vpp_metered};
use rlcdoc::WorkMeter;
use rlcdoc_oracle::gen;

#[test]
fn vpp_visits_runs_not_pixels() {
    let mut rng = gen::rng(21);
    for _ in 0..5 {
        let g = gen::sparse_page(&mut rng, 600, 400, 0.05);
        let m = to_matrix(&g);
        let mut meter = WorkMeter::new();
        vpp_metered(&m, &mut meter);
        let pixels = m.width() * m.height();
        assert_eq!(meter.visits, m.run_count());
        assert!(
            meter.visits * 5 <= pixels,
            "{} visits on {} pixels",
            meter.visits,
            pixels
        );
    }
}

#[test]
fn column_passes_hold_height_sized_state() {
    let mut rng = gen::rng(22);
    for (w, h) in [(300, 50), (1200, 50), (300, 200)] {
        let m = to_matrix(&gen::sparse_page(&mut rng, w, h, 0.05));
        let mut meter = WorkMeter::new();
        hpp_metered(&m, &mut meter);
        // cursors (2/row) + one column buffer
        assert!(
            meter.peak_working <= 4 * h,
            "hpp peak {} for h={h}",
            meter.peak_working
        );
        assert_eq!(meter.visits, w * h);

        let mut meter = WorkMeter::new();
        entropy_vertical_metered(&m, &mut meter);
        assert!(
            meter.peak_working <= 5 * h,
            "entropy peak {} for h={h}",
            meter.peak_working
        );
        assert!(meter.peak_working < w * h / 10);
    }
}

#[test]
fn working_state_independent_of_width() {
    let mut rng = gen::rng(23);
    let narrow = to_matrix(&gen::sparse_page(&mut rng, 200, 120, 0.05));
    let wide = to_matrix(&gen::sparse_page(&mut rng, 2000, 120, 0.05));
    let peak = |m| {
        let mut meter = WorkMeter::new();
        hpp_metered(m, &mut meter);
        meter.peak_working
    };
    assert_eq!(peak(&narrow), peak(&wide));
}
