//! Minimal standalone SVG plots: a polyline for profile curves, bars for
//! histograms. Coordinates are printed with two decimals so output is
//! byte-stable.

use std::fmt::Write as _;

use crate::features::{Direction, LogHistogram, ProfileCurve, RunHistogram, LOG_BIN_LABELS};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 40.0;

struct Plot {
    out: String,
}

impl Plot {
    fn new(title: &str, x_label: &str, y_label: &str, y_max: usize) -> Self {
        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
        )
        .unwrap();
        writeln!(out, r#"<title>{title}</title>"#).unwrap();
        writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
        let (x0, y0, x1, y1) = (MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN);
        writeln!(
            out,
            r#"<g stroke="black" stroke-width="1"><line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/></g>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"<g font-family="sans-serif" font-size="11"><text x="{}" y="{}" text-anchor="middle">{x_label}</text><text x="12" y="{}" transform="rotate(-90 12 {})" text-anchor="middle">{y_label}</text><text x="{}" y="{}" text-anchor="end">{y_max}</text><text x="{}" y="{}" text-anchor="end">0</text></g>"#,
            WIDTH / 2.0,
            HEIGHT - 8.0,
            HEIGHT / 2.0,
            HEIGHT / 2.0,
            MARGIN - 4.0,
            MARGIN + 4.0,
            MARGIN - 4.0,
            HEIGHT - MARGIN + 4.0,
        )
        .unwrap();
        Plot { out }
    }

    fn finish(mut self) -> Vec<u8> {
        self.out.push_str("</svg>\n");
        self.out.into_bytes()
    }
}

fn plot_w() -> f64 {
    WIDTH - 2.0 * MARGIN
}

fn plot_h() -> f64 {
    HEIGHT - 2.0 * MARGIN
}

fn y_of(v: usize, max: usize) -> f64 {
    HEIGHT - MARGIN - plot_h() * v as f64 / max.max(1) as f64
}

pub fn profile_svg(curve: &ProfileCurve) -> Vec<u8> {
    let (title, x_label) = match curve.direction {
        Direction::RowWise => ("vertical projection profile", "row"),
        Direction::ColumnWise => ("horizontal projection profile", "column"),
    };
    let max = curve.values.iter().copied().max().unwrap_or(0);
    let mut plot = Plot::new(title, x_label, "black pixels", max);
    let n = curve.values.len();
    let step = if n > 1 {
        plot_w() / (n - 1) as f64
    } else {
        0.0
    };
    let points: Vec<String> = curve
        .values
        .iter()
        .enumerate()
        .map(|(i, &v)| format!("{:.2},{:.2}", MARGIN + step * i as f64, y_of(v, max)))
        .collect();
    writeln!(
        plot.out,
        r#"<polyline fill="none" stroke="steelblue" stroke-width="1.5" points="{}"/>"#,
        points.join(" ")
    )
    .unwrap();
    plot.finish()
}

fn bars(title: &str, x_label: &str, bars: &[(String, usize)]) -> Vec<u8> {
    let max = bars.iter().map(|b| b.1).max().unwrap_or(0);
    let mut plot = Plot::new(title, x_label, "count", max);
    let slot = plot_w() / bars.len().max(1) as f64;
    plot.out.push_str("<g fill=\"steelblue\">\n");
    for (i, (label, count)) in bars.iter().enumerate() {
        let y = y_of(*count, max);
        writeln!(
            plot.out,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"><title>{label}: {count}</title></rect>"#,
            MARGIN + slot * i as f64 + slot * 0.1,
            y,
            slot * 0.8,
            HEIGHT - MARGIN - y
        )
        .unwrap();
    }
    plot.out.push_str("</g>\n");
    plot.finish()
}

pub fn histogram_svg(h: &RunHistogram) -> Vec<u8> {
    let items: Vec<(String, usize)> = h.counts.iter().map(|(l, n)| (l.to_string(), *n)).collect();
    bars("run-length histogram", "run length", &items)
}

pub fn log_histogram_svg(h: &LogHistogram) -> Vec<u8> {
    let items: Vec<(String, usize)> = LOG_BIN_LABELS
        .iter()
        .zip(h.bins)
        .map(|(l, n)| (l.to_string(), n))
        .collect();
    bars("log-scale run-length histogram", "run length class", &items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::features::{hpp, log_bin, run_histogram, vpp, RunColor};
    use crate::rle::tests::table_one;

    #[test]
    fn deterministic_and_well_formed() {
        let m = table_one();
        let a = profile_svg(&vpp(&m));
        assert_eq!(a, profile_svg(&vpp(&m)));
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with("<svg"));
        assert!(text.trim_end().ends_with("</svg>"));
        assert_eq!(text.matches("<polyline").count(), 1);

        let h = run_histogram(&m, RunColor::Black);
        let svg = String::from_utf8(histogram_svg(&h)).unwrap();
        assert_eq!(svg.matches("<rect x=").count(), 5);
        let svg = String::from_utf8(log_histogram_svg(&log_bin(&h))).unwrap();
        assert_eq!(svg.matches("<rect x=").count(), 9);
        assert_ne!(profile_svg(&hpp(&m)), profile_svg(&vpp(&m)));
    }
}
