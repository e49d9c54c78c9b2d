#![allow(dead_code)]

use rlcdoc::rle::{decode_image, encode_image};
use rlcdoc::{BinaryImage, RunMatrix};
use rlcdoc_oracle::Grid;

pub fn to_matrix(g: &Grid) -> RunMatrix {
    let w = g[0].len();
    let pixels: Vec<bool> = g.iter().flatten().copied().collect();
    encode_image(&BinaryImage::new(w, g.len(), pixels).unwrap())
}

pub fn to_grid(m: &RunMatrix) -> Grid {
    decode_image(m).rows().map(<[bool]>::to_vec).collect()
}

pub fn assert_close(a: f64, b: f64, what: &str) {
    assert!((a - b).abs() <= 1e-9, "{what}: {a} vs {b}");
}

pub fn table_one() -> RunMatrix {
    rlcdoc::rle::canonicalize_padded(
        &[
            vec![14, 0, 0, 0, 0],
            vec![2, 2, 4, 5, 1],
            vec![1, 4, 3, 5, 1],
            vec![1, 4, 3, 5, 1],
            vec![1, 4, 3, 5, 1],
            vec![2, 2, 10, 0, 0],
            vec![0, 1, 13, 0, 0],
            vec![0, 1, 13, 0, 0],
            vec![2, 1, 4, 5, 2],
            vec![1, 3, 3, 5, 2],
            vec![1, 4, 2, 5, 2],
            vec![1, 5, 8, 0, 0],
            vec![14, 0, 0, 0, 0],
        ],
        14,
    )
    .unwrap()
}
