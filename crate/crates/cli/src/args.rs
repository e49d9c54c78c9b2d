use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rlcdoc::io::InputFormat;
use rlcdoc::Rect;

/// Document-image analysis on run-length compressed binary data.
#[derive(Debug, Parser)]
#[command(name = "rlcdoc", version, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input files (`-` reads standard input). Several inputs are processed
    /// independently and their outputs concatenated in argument order.
    #[arg(required = true, value_name = "INPUT")]
    pub inputs: Vec<PathBuf>,

    /// Write to this file instead of standard output.
    #[arg(short, long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Skip magic-byte detection and read inputs as this format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Pbm,
    Rle1,
    Mh1,
}

impl From<Format> for InputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Pbm => InputFormat::Pbm,
            Format::Rle1 => InputFormat::Rle1,
            Format::Mh1 => InputFormat::Mh1,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Color {
    Black,
    White,
    Combined,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Axis {
    /// One record per row.
    H,
    /// One record per column.
    V,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Aggregate {
    Max,
    None,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PlotKind {
    Vpp,
    Hpp,
    Runhist,
    Logbin,
}

#[derive(Debug, Clone, Copy)]
pub enum WordSpace {
    Auto,
    Fixed(usize),
}

fn parse_word_space(s: &str) -> Result<WordSpace, String> {
    if s == "auto" {
        return Ok(WordSpace::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(WordSpace::Fixed(n)),
        _ => Err("expected `auto` or a positive integer".into()),
    }
}

fn parse_rect(s: &str) -> Result<Rect, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("{e}"))?;
    match nums[..] {
        [r1, r2, c1, c2] if r1 >= 1 && c1 >= 1 && r1 <= r2 && c1 <= c2 => {
            Ok(Rect::new(r1, r2, c1, c2))
        }
        [_, _, _, _] => Err("need 1 ≤ r1 ≤ r2 and 1 ≤ c1 ≤ c2".into()),
        _ => Err("expected r1:r2:c1:c2".into()),
    }
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ProfileOutput {
    /// CSV output (the default).
    #[arg(long)]
    pub csv: bool,
    /// SVG plot instead of CSV.
    #[arg(long)]
    pub svg: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run-length encode a document into RLE1 text.
    Encode(#[command(flatten)] Io),

    /// Expand a document to PBM.
    Decode {
        #[command(flatten)]
        io: Io,
        /// Plain P1 output.
        #[arg(long, conflicts_with = "binary")]
        ascii: bool,
        /// Raw P4 output (the default).
        #[arg(long)]
        binary: bool,
    },

    /// Modified Huffman encode into an MH1 container.
    MhEncode {
        #[command(flatten)]
        io: Io,
        /// Prefix every row with an EOL codeword instead of byte-aligning rows.
        #[arg(long)]
        eol: bool,
    },

    /// Decode an MH1 container, or a raw MH bitstream given its geometry,
    /// into RLE1 text.
    MhDecode {
        /// Input files (`-` reads standard input).
        #[arg(required = true, value_name = "INPUT")]
        inputs: Vec<PathBuf>,
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Treat inputs as headerless bitstreams of this width.
        #[arg(long, requires = "height")]
        width: Option<usize>,
        #[arg(long, requires = "width")]
        height: Option<usize>,
        /// Raw stream rows are EOL framed.
        #[arg(long, requires = "width")]
        eol: bool,
    },

    /// Black pixels per row.
    Vpp {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        output: ProfileOutput,
    },

    /// Black pixels per column.
    Hpp {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        output: ProfileOutput,
    },

    /// Run-length histogram.
    Runhist {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "black")]
        color: Color,
        /// Group lengths into log-scale classes.
        #[arg(long)]
        log: bool,
        #[arg(long)]
        svg: bool,
    },

    /// Per-line transition entropies (CEQ and SEQ).
    Entropy {
        #[command(flatten)]
        io: Io,
        /// `h` for rows, `v` for columns.
        #[arg(long, value_enum, default_value = "h")]
        direction: Axis,
    },

    /// Text lines as CSV segments.
    SegmentLines {
        #[command(flatten)]
        io: Io,
        /// Rows with at most this many black pixels count as blank.
        #[arg(long, default_value_t = 0)]
        blank_threshold: usize,
    },

    /// Words and characters of every text line as CSV segments.
    SegmentWords {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0)]
        blank_threshold: usize,
        /// Blank-column gap that separates words: a count, or `auto` for
        /// twice the median gap of each line.
        #[arg(long, default_value = "auto", value_parser = parse_word_space)]
        word_space: WordSpace,
    },

    /// Cut a rectangle out as RLE1 text.
    ExtractBlock {
        #[command(flatten)]
        io: Io,
        /// 1-based inclusive rows and columns.
        #[arg(long, value_parser = parse_rect, value_name = "R1:R2:C1:C2")]
        rect: Rect,
    },

    /// Density and entropy of a block, absolute and relative to the page.
    Characterize {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_parser = parse_rect, value_name = "R1:R2:C1:C2")]
        rect: Rect,
    },

    /// Fit a font-size model from training CSV
    /// (`line_height,ascender_height,font_size`).
    FontsizeFit {
        /// Training files (`-` reads standard input); samples are pooled.
        #[arg(required = true, value_name = "TRAINING")]
        inputs: Vec<PathBuf>,
        #[arg(short, long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Keep only the tallest line per font size before fitting.
        #[arg(long, value_enum, default_value = "none")]
        aggregate: Aggregate,
    },

    /// Detect the font size of every text line.
    FontsizeDetect {
        #[command(flatten)]
        io: Io,
        /// Model written by `fontsize-fit`.
        #[arg(long, value_name = "PATH")]
        model: PathBuf,
        #[arg(long, default_value_t = 0)]
        blank_threshold: usize,
    },

    /// SVG chart of a profile or histogram.
    Plot {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "vpp")]
        kind: PlotKind,
        /// Histogram color for `runhist` and `logbin`.
        #[arg(long, value_enum, default_value = "black")]
        color: Color,
        /// SVG output; the only plot format, accepted for symmetry.
        #[arg(long)]
        svg: bool,
    },
}
