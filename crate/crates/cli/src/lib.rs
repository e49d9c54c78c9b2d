//! The `rlcdoc` command-line tool.
//!
//! [`run`] parses arguments, processes every input (in parallel when there
//! are several) and returns the process exit status: 0 on success, 1 on a
//! usage error, 2 when an input cannot be read or analysed. Nothing is
//! written to the output unless every input succeeds.

mod args;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use clap::Parser;
use rayon::prelude::*;

use rlcdoc::blocks::{characterize, extract_block};
use rlcdoc::features::{self, RunColor};
use rlcdoc::fontsize::{self, FontSizeModel, LineFeature};
use rlcdoc::io::{self as rio, csv, svg, InputFormat, PbmVariant};
use rlcdoc::mh::{mh_decode, mh_encode, MhBitstream};
use rlcdoc::rle::decode_image;
use rlcdoc::segment::{segment_lines, segment_words_chars, segment_words_chars_auto};
use rlcdoc::{RunMatrix, Segment};

use args::{Aggregate, Axis, Cli, Color, Command, Io, PlotKind, ProfileOutput, WordSpace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("rlcdoc: {e:#}");
            EXIT_DATA
        }
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .context("reading standard input")?;
        Ok(buf)
    } else {
        std::fs::read(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Runs `f` over each input, in parallel, and writes the concatenated
/// results in input order. `-` may appear at most once since standard
/// input can be consumed only once.
fn per_input<F>(inputs: &[std::path::PathBuf], out: Option<&Path>, f: F) -> Result<()>
where
    F: Fn(&[u8]) -> Result<Vec<u8>> + Sync,
{
    if inputs.iter().filter(|p| p.as_os_str() == "-").count() > 1 {
        anyhow::bail!("standard input (-) given more than once");
    }
    let results: Vec<Result<Vec<u8>>> = inputs
        .par_iter()
        .map(|path| {
            let bytes = read_input(path)?;
            f(&bytes).with_context(|| format!("processing {}", path.display()))
        })
        .collect();
    let mut output = Vec::new();
    for r in results {
        output.extend(r?);
    }
    write_output(out, &output)
}

fn per_matrix<F>(io: &Io, f: F) -> Result<()>
where
    F: Fn(&RunMatrix) -> Result<Vec<u8>> + Sync,
{
    let format = io.format.map(InputFormat::from);
    per_input(&io.inputs, io.out.as_deref(), |bytes| {
        f(&rio::read_matrix(bytes, format)?)
    })
}

fn color(c: Color) -> RunColor {
    match c {
        Color::Black => RunColor::Black,
        Color::White => RunColor::White,
        Color::Combined => RunColor::Combined,
    }
}

fn profile(
    io: &Io,
    output: &ProfileOutput,
    f: fn(&RunMatrix) -> features::ProfileCurve,
) -> Result<()> {
    let svg = output.svg;
    per_matrix(io, |m| {
        let curve = f(m);
        Ok(if svg {
            svg::profile_svg(&curve)
        } else {
            csv::profile_csv(&curve)
        })
    })
}

fn words_and_chars(m: &RunMatrix, blank_threshold: usize, ws: WordSpace) -> Result<Vec<Segment>> {
    let mut out = Vec::new();
    for line in segment_lines(m, blank_threshold) {
        let (words, chars) = match ws {
            WordSpace::Fixed(n) => segment_words_chars(m, &line, n)?,
            WordSpace::Auto => {
                let (w, c, _) = segment_words_chars_auto(m, &line)?;
                (w, c)
            }
        };
        out.push(line);
        out.extend(words);
        out.extend(chars);
    }
    Ok(out)
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Encode(io) => per_matrix(&io, |m| Ok(rio::write_rle_text(m))),
        Command::Decode { io, ascii, .. } => {
            let variant = if ascii {
                PbmVariant::Ascii
            } else {
                PbmVariant::Binary
            };
            per_matrix(&io, |m| Ok(rio::write_pbm(&decode_image(m), variant)))
        }
        Command::MhEncode { io, eol } => per_matrix(&io, |m| Ok(mh_encode(m, eol)?.to_mh1())),
        Command::MhDecode {
            inputs,
            out,
            width,
            height,
            eol,
        } => per_input(&inputs, out.as_deref(), |bytes| {
            let bs = match (width, height) {
                (Some(width), Some(row_count)) => MhBitstream {
                    bytes: bytes.to_vec(),
                    row_count,
                    width,
                    eol,
                },
                _ => MhBitstream::from_mh1(bytes)?,
            };
            Ok(rio::write_rle_text(&mh_decode(&bs)?))
        }),
        Command::Vpp { io, output } => profile(&io, &output, features::vpp),
        Command::Hpp { io, output } => profile(&io, &output, features::hpp),
        Command::Runhist {
            io,
            color: c,
            log,
            svg: as_svg,
        } => per_matrix(&io, |m| {
            let h = features::run_histogram(m, color(c));
            Ok(match (log, as_svg) {
                (false, false) => csv::histogram_csv(&h),
                (false, true) => svg::histogram_svg(&h),
                (true, false) => csv::log_histogram_csv(&features::log_bin(&h)),
                (true, true) => svg::log_histogram_svg(&features::log_bin(&h)),
            })
        }),
        Command::Entropy { io, direction } => per_matrix(&io, |m| {
            let report = match direction {
                Axis::H => features::entropy_horizontal(m),
                Axis::V => features::entropy_vertical(m),
            };
            Ok(csv::entropy_csv(&report))
        }),
        Command::SegmentLines {
            io,
            blank_threshold,
        } => per_matrix(&io, |m| {
            Ok(csv::segments_csv(&segment_lines(m, blank_threshold)))
        }),
        Command::SegmentWords {
            io,
            blank_threshold,
            word_space,
        } => per_matrix(&io, |m| {
            Ok(csv::segments_csv(&words_and_chars(
                m,
                blank_threshold,
                word_space,
            )?))
        }),
        Command::ExtractBlock { io, rect } => per_matrix(&io, |m| {
            let block = extract_block(m, rect)?;
            Ok(rio::write_rle_text(
                block
                    .payload
                    .as_ref()
                    .expect("extracted blocks carry payload"),
            ))
        }),
        Command::Characterize { io, rect } => per_matrix(&io, |m| {
            let block = extract_block(m, rect)?;
            let c = characterize(
                block
                    .payload
                    .as_ref()
                    .expect("extracted blocks carry payload"),
                m,
            )?;
            Ok(csv::characterization_csv(&c))
        }),
        Command::FontsizeFit {
            inputs,
            out,
            aggregate,
        } => {
            let mut samples = Vec::new();
            for path in &inputs {
                let bytes = read_input(path)?;
                samples.extend(
                    csv::read_training_csv(&bytes)
                        .with_context(|| format!("reading {}", path.display()))?,
                );
            }
            if let Aggregate::Max = aggregate {
                samples = fontsize::aggregate_max(&samples);
            }
            let model = fontsize::fit(&samples)?;
            write_output(out.as_deref(), model.to_text().as_bytes())
        }
        Command::FontsizeDetect {
            io,
            model,
            blank_threshold,
        } => {
            let text = String::from_utf8(read_input(&model)?)
                .with_context(|| format!("{} is not UTF-8", model.display()))?;
            let model = FontSizeModel::from_text(&text)
                .with_context(|| format!("reading model {}", model.display()))?;
            per_matrix(&io, |m| {
                let lines = segment_lines(m, blank_threshold);
                let detections: Vec<_> = lines
                    .iter()
                    .map(|l| fontsize::detect(&model, LineFeature::height(l.rect.height())))
                    .collect();
                Ok(csv::detections_csv(&lines, &detections))
            })
        }
        Command::Plot {
            io, kind, color: c, ..
        } => per_matrix(&io, |m| {
            Ok(match kind {
                PlotKind::Vpp => svg::profile_svg(&features::vpp(m)),
                PlotKind::Hpp => svg::profile_svg(&features::hpp(m)),
                PlotKind::Runhist => svg::histogram_svg(&features::run_histogram(m, color(c))),
                PlotKind::Logbin => svg::log_histogram_svg(&features::log_bin(
                    &features::run_histogram(m, color(c)),
                )),
            })
        }),
    }
}
