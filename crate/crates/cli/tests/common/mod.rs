#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use rlcdoc::io::{write_pbm, PbmVariant};
use rlcdoc::rle::{decode_image, encode_image};
use rlcdoc::BinaryImage;
use rlcdoc_oracle::gen;

pub fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rlcdoc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rlcdoc");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

pub fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn table_one() -> String {
    data("table1.rle1").display().to_string()
}

/// Deterministic 200×90 text page, written once per test binary.
pub fn text_page() -> String {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("rlcdoc-text-page.pbm");
    let mut rng = gen::rng(2024);
    let g = gen::text_page(&mut rng, 200, 90, 8);
    let pixels: Vec<bool> = g.iter().flatten().copied().collect();
    let img = BinaryImage::new(200, g.len(), pixels).unwrap();
    // round-trip through runs so the file is canonical whatever the generator did
    let bytes = write_pbm(&decode_image(&encode_image(&img)), PbmVariant::Binary);
    let tmp = path.with_extension(format!("{}.tmp", std::process::id()));
    std::fs::write(&tmp, &bytes).unwrap();
    std::fs::rename(&tmp, &path).unwrap();
    path.display().to_string()
}

/// `(golden file name, arguments)`; `{t1}` and `{page}` are substituted.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("t1_encode.rle1", &["encode", "{t1}"]),
    ("t1_decode_ascii.pbm", &["decode", "--ascii", "{t1}"]),
    ("t1_decode_binary.pbm", &["decode", "{t1}"]),
    ("t1_mh.mh1", &["mh-encode", "{t1}"]),
    ("t1_mh_eol.mh1", &["mh-encode", "--eol", "{t1}"]),
    ("t1_vpp.csv", &["vpp", "--csv", "{t1}"]),
    ("t1_hpp.csv", &["hpp", "{t1}"]),
    ("t1_vpp.svg", &["vpp", "--svg", "{t1}"]),
    ("t1_runhist_black.csv", &["runhist", "{t1}"]),
    (
        "t1_runhist_combined_log.csv",
        &["runhist", "--color", "combined", "--log", "{t1}"],
    ),
    (
        "t1_runhist_white.svg",
        &["runhist", "--color", "white", "--svg", "{t1}"],
    ),
    ("t1_entropy_h.csv", &["entropy", "{t1}"]),
    ("t1_entropy_v.csv", &["entropy", "--direction", "v", "{t1}"]),
    ("t1_lines.csv", &["segment-lines", "{t1}"]),
    (
        "t1_words_2.csv",
        &["segment-words", "--word-space", "2", "{t1}"],
    ),
    (
        "t1_block.rle1",
        &["extract-block", "--rect", "2:6:1:7", "{t1}"],
    ),
    (
        "t1_characterize.csv",
        &["characterize", "--rect", "2:6:1:7", "{t1}"],
    ),
    ("page_vpp.csv", &["vpp", "{page}"]),
    ("page_hpp.svg", &["plot", "--kind", "hpp", "{page}"]),
    (
        "page_logbin.svg",
        &["plot", "--kind", "logbin", "--color", "combined", "{page}"],
    ),
    ("page_lines.csv", &["segment-lines", "{page}"]),
    ("page_words_auto.csv", &["segment-words", "{page}"]),
    (
        "page_entropy_v.csv",
        &["entropy", "--direction", "v", "{page}"],
    ),
    ("page_mh.mh1", &["mh-encode", "{page}"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn updating() -> bool {
    std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1")
}

/// Compares `actual` with the stored golden file, or rewrites it when
/// `UPDATE_GOLDEN=1`.
pub fn check_golden(name: &str, actual: &[u8]) -> Result<(), String> {
    let path = golden_path(name);
    if updating() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&path)
        .map_err(|e| format!("{name}: {e} (run with UPDATE_GOLDEN=1 to create)"))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{name}: output differs from golden file"))
    }
}

/// Runs every golden case; returns the failures.
pub fn run_golden_cases() -> Vec<String> {
    let t1 = table_one();
    let page = text_page();
    let mut failures = Vec::new();
    for (name, args) in GOLDEN_CASES {
        let args: Vec<String> = args
            .iter()
            .map(|a| a.replace("{t1}", &t1).replace("{page}", &page))
            .collect();
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&argv, None);
        let second = run(&argv, None);
        if !first.status.success() {
            failures.push(format!(
                "{name}: exit {:?}: {}",
                first.status.code(),
                String::from_utf8_lossy(&first.stderr)
            ));
            continue;
        }
        if first.stdout != second.stdout {
            failures.push(format!("{name}: two runs differ"));
            continue;
        }
        if let Err(e) = check_golden(name, &first.stdout) {
            failures.push(e);
        }
    }
    failures
}
