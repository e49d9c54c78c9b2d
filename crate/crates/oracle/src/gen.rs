//! Seeded synthetic documents as pixel grids.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Grid;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random grid up to `max_w`×`max_h` in one of several styles: iid noise at
/// a random density, horizontal run structure, or text-like boxes.
pub fn random_grid(rng: &mut impl Rng, max_w: usize, max_h: usize) -> Grid {
    let w = rng.gen_range(1..=max_w);
    let h = rng.gen_range(1..=max_h);
    match rng.gen_range(0..4) {
        0 => {
            let densities = [0.0, 0.02, 0.1, 0.3, 0.5, 0.8, 0.97, 1.0];
            let d = densities[rng.gen_range(0..densities.len())];
            (0..h)
                .map(|_| (0..w).map(|_| rng.gen_bool(d)).collect())
                .collect()
        }
        1 => (0..h).map(|_| run_row(rng, w)).collect(),
        2 => {
            // rows copied from a few templates, so columns have structure
            let templates: Vec<Vec<bool>> = (0..3).map(|_| run_row(rng, w)).collect();
            (0..h)
                .map(|_| templates[rng.gen_range(0..templates.len())].clone())
                .collect()
        }
        _ => {
            let lines = rng.gen_range(1..=4);
            text_page(rng, w, h, lines)
        }
    }
}

fn run_row(rng: &mut impl Rng, w: usize) -> Vec<bool> {
    let mut row = Vec::with_capacity(w);
    let mut black = rng.gen_bool(0.5);
    while row.len() < w {
        let len = rng.gen_range(1..=12).min(w - row.len());
        row.extend(std::iter::repeat_n(black, len));
        black = !black;
    }
    row
}

/// Text-like page: `lines` bands of glyph boxes separated by blank rows.
/// Glyphs are separated by narrow gaps inside words and wider gaps between
/// words; every glyph has a full-height stem column.
pub fn text_page(rng: &mut impl Rng, w: usize, h: usize, lines: usize) -> Grid {
    let mut g = vec![vec![false; w]; h];
    let mut row = rng.gen_range(0..=2);
    for _ in 0..lines {
        let line_h = rng.gen_range(1..=8);
        if row + line_h > h {
            break;
        }
        draw_line(rng, &mut g, row, line_h, 0.45);
        row += line_h + rng.gen_range(1..=4);
    }
    g
}

/// Draws one text line of exactly `height` rows starting at `top`; glyph
/// fill probability `fill`.
#[allow(clippy::needless_range_loop)] // column-major order fixes the RNG sequence
pub fn draw_line(rng: &mut impl Rng, g: &mut Grid, top: usize, height: usize, fill: f64) {
    let w = g[0].len();
    let mut col = rng.gen_range(0..=3usize);
    while col < w {
        let glyph_w = rng.gen_range(1..=5).min(w - col);
        for c in col..col + glyph_w {
            for r in top..top + height {
                // solid left stem pins the line to exactly `height` rows
                g[r][c] = c == col || rng.gen_bool(fill);
            }
        }
        col += glyph_w;
        col += if rng.gen_bool(0.75) {
            rng.gen_range(1..=2)
        } else {
            rng.gen_range(4..=7)
        };
    }
}

/// Sparse page whose ink density stays at or below `max_density`: short
/// glyph lines on a wide blank page.
pub fn sparse_page(rng: &mut impl Rng, w: usize, h: usize, max_density: f64) -> Grid {
    loop {
        let mut g = vec![vec![false; w]; h];
        let mut top = 10;
        while top + 12 < h {
            let line_h = rng.gen_range(6..=10);
            draw_line(rng, &mut g, top, line_h, 0.08);
            top += line_h + rng.gen_range(20..=40);
        }
        let ink = crate::black_count(&g) as f64 / (w * h) as f64;
        if ink <= max_density {
            return g;
        }
    }
}

/// Page of text lines with the given heights, `gap` blank rows between
/// them and around them.
pub fn lines_page(rng: &mut impl Rng, w: usize, heights: &[usize], gap: usize) -> Grid {
    let h = gap + heights.iter().map(|lh| lh + gap).sum::<usize>();
    let mut g = vec![vec![false; w]; h];
    let mut top = gap;
    for &lh in heights {
        draw_line(rng, &mut g, top, lh, 0.3);
        top += lh + gap;
    }
    g
}
