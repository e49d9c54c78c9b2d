//! Structural checks on synthetic multi-line text pages.

mod common;

use common::to_matrix;
use rand::Rng;
use rlcdoc::blocks::extract_block;
use rlcdoc::rle::black_pixel_count;
use rlcdoc::segment::{
    column_occupancy, segment_lines, segment_words_chars, segment_words_chars_auto,
};
use rlcdoc_oracle::{self as oracle, gen};

struct Page {
    grid: oracle::Grid,
    spans: Vec<(usize, usize)>,
}

fn page(rng: &mut impl Rng) -> Page {
    let w = rng.gen_range(40..160);
    let n = rng.gen_range(1..=6);
    let mut h = rng.gen_range(0..=3);
    let mut layout = Vec::new();
    for _ in 0..n {
        let lh = rng.gen_range(3..=14);
        layout.push((h, lh));
        h += lh + rng.gen_range(1..=6);
    }
    let mut grid = vec![vec![false; w]; h];
    let mut spans = Vec::new();
    for (top, lh) in layout {
        gen::draw_line(rng, &mut grid, top, lh, 0.4);
        spans.push((top + 1, top + lh));
    }
    Page { grid, spans }
}

#[test]
fn hundred_pages() {
    let mut rng = gen::rng(31);
    for _ in 0..100 {
        let p = page(&mut rng);
        let m = to_matrix(&p.grid);
        let lines = segment_lines(&m, 0);
        let found: Vec<_> = lines
            .iter()
            .map(|l| (l.rect.row_start, l.rect.row_end))
            .collect();
        assert_eq!(found, p.spans);

        let mut line_ink = 0;
        for line in &lines {
            assert_eq!((line.rect.col_start, line.rect.col_end), (1, m.width()));
            let occ = column_occupancy(&m, line.rect.row_start, line.rect.row_end).unwrap();
            let ws = rng.gen_range(1..=6);
            let (words, chars) = segment_words_chars(&m, line, ws).unwrap();
            let (ow, oc) = oracle::segment_words_chars(
                &p.grid,
                (line.rect.row_start, line.rect.row_end),
                (1, m.width()),
                ws,
            );
            assert_eq!(words.len(), ow.len());
            assert_eq!(chars.len(), oc.len());

            // characters: occupied, maximal, row span of the line
            for c in &chars {
                assert_eq!(
                    (c.rect.row_start, c.rect.row_end),
                    (line.rect.row_start, line.rect.row_end)
                );
                assert!((c.rect.col_start..=c.rect.col_end).all(|j| occ.values[j - 1] > 0));
                assert!(c.rect.col_start == 1 || occ.values[c.rect.col_start - 2] == 0);
                assert!(c.rect.col_end == m.width() || occ.values[c.rect.col_end] == 0);
            }
            // words: disjoint, separated by at least ws, each a union of characters
            for pair in words.windows(2) {
                assert!(pair[1].rect.col_start - pair[0].rect.col_end > ws);
            }
            let char_ink: usize = chars
                .iter()
                .map(|c| {
                    black_pixel_count(extract_block(&m, c.rect).unwrap().payload.as_ref().unwrap())
                })
                .sum();
            let word_ink: usize = words
                .iter()
                .map(|c| {
                    black_pixel_count(extract_block(&m, c.rect).unwrap().payload.as_ref().unwrap())
                })
                .sum();
            assert_eq!(char_ink, word_ink);
            assert_eq!(char_ink, occ.values.iter().sum::<usize>());
            line_ink += char_ink;

            let (aw, _, auto) = segment_words_chars_auto(&m, line).unwrap();
            assert!(auto >= 1);
            assert!(aw.len() <= chars.len());
        }
        assert_eq!(line_ink, black_pixel_count(&m));
    }
}

#[test]
fn larger_word_space_never_adds_words() {
    let mut rng = gen::rng(32);
    for _ in 0..50 {
        let p = page(&mut rng);
        let m = to_matrix(&p.grid);
        for line in segment_lines(&m, 0) {
            let mut last = usize::MAX;
            for ws in 1..10 {
                let n = segment_words_chars(&m, &line, ws).unwrap().0.len();
                assert!(n <= last);
                last = n;
            }
        }
    }
}

#[test]
fn raising_threshold_never_merges_more() {
    let mut rng = gen::rng(33);
    for _ in 0..50 {
        let m = to_matrix(&gen::text_page(&mut rng, 80, 60, 6));
        let rows = |t| -> usize { segment_lines(&m, t).iter().map(|l| l.rect.height()).sum() };
        for t in 0..5 {
            assert!(rows(t + 1) <= rows(t));
        }
    }
}
