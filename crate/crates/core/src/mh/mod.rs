//! CCITT T.4 one-dimensional Modified Huffman coding of run rows.
//!
//! Each row is coded as alternating white/black run codewords starting with
//! white. Runs of 64 or more are sent as one or more makeup codewords
//! followed by a terminating codeword (0..=63). Two framings are supported:
//!
//! * EOL off: every row is padded with zero bits to a byte boundary.
//! * EOL on: every row is preceded by the EOL codeword `000000000001`; the
//!   stream is padded to a whole byte at the end only.
//!
//! The `MH1` container adds a 16-byte little-endian header so a stream can
//! be decoded without out-of-band metadata.

mod bits;
mod tables;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::rle::{RunMatrix, RunRow};

use bits::{BitReader, BitWriter};
use tables::{CodeTable, MAX_MAKEUP};

/// Magic prefix of the `MH1` container.
pub const MH1_MAGIC: &[u8; 4] = b"MH1 ";
/// Size of the `MH1` container header in bytes.
pub const MH1_HEADER_LEN: usize = 16;

/// An encoded MH stream together with the metadata needed to decode it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MhBitstream {
    /// Coded bits, most significant bit first within each byte.
    pub bytes: Vec<u8>,
    pub row_count: usize,
    pub width: usize,
    pub eol: bool,
}

impl MhBitstream {
    /// Serializes as an `MH1` container: magic, width, height, eol flag and
    /// three reserved zero bytes, followed by the coded bits.
    pub fn to_mh1(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(MH1_HEADER_LEN + self.bytes.len());
        out.extend_from_slice(MH1_MAGIC);
        out.extend_from_slice(&(self.width as u32).to_le_bytes());
        out.extend_from_slice(&(self.row_count as u32).to_le_bytes());
        out.push(self.eol as u8);
        out.extend_from_slice(&[0; 3]);
        out.extend_from_slice(&self.bytes);
        out
    }

    pub fn from_mh1(data: &[u8]) -> Result<Self> {
        if data.len() < MH1_HEADER_LEN {
            return Err(Error::Parse {
                offset: data.len(),
                reason: "MH1 header truncated".into(),
            });
        }
        if &data[..4] != MH1_MAGIC {
            return Err(Error::Parse {
                offset: 0,
                reason: "missing MH1 magic".into(),
            });
        }
        let word = |at: usize| u32::from_le_bytes(data[at..at + 4].try_into().unwrap()) as usize;
        let width = word(4);
        let row_count = word(8);
        let eol = match data[12] {
            0 => false,
            1 => true,
            v => {
                return Err(Error::Parse {
                    offset: 12,
                    reason: format!("eol flag must be 0 or 1, got {v}"),
                })
            }
        };
        if let Some(i) = data[13..16].iter().position(|&b| b != 0) {
            return Err(Error::Parse {
                offset: 13 + i,
                reason: "reserved header byte is nonzero".into(),
            });
        }
        if width == 0 || row_count == 0 {
            return Err(Error::Parse {
                offset: 4,
                reason: "width and height must be positive".into(),
            });
        }
        Ok(MhBitstream {
            bytes: data[MH1_HEADER_LEN..].to_vec(),
            row_count,
            width,
            eol,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Code {
    Terminating(usize),
    Makeup(usize),
    Eol,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Color {
    White,
    Black,
}

impl Color {
    fn of_index(i: usize) -> Self {
        if i.is_multiple_of(2) {
            Color::White
        } else {
            Color::Black
        }
    }
}

/// Binary trie over codewords of one color.
struct CodeTree {
    // children[node] = [on 0, on 1]; 0 means absent (the root is never a child).
    children: Vec<[u32; 2]>,
    leaves: Vec<Option<Code>>,
}

/// A code table and how to label its entries.
type TableSpec = (CodeTable, fn(usize) -> Code);

impl CodeTree {
    fn build(tables: &[TableSpec]) -> std::result::Result<Self, String> {
        let mut tree = CodeTree {
            children: vec![[0, 0]],
            leaves: vec![None],
        };
        for (table, kind) in tables {
            for &(run, word) in table.iter() {
                tree.insert(word, kind(run))?;
            }
        }
        tree.insert(tables::EOL, Code::Eol)?;
        Ok(tree)
    }

    fn insert(&mut self, word: &str, code: Code) -> std::result::Result<(), String> {
        let mut node = 0usize;
        for ch in word.chars() {
            if self.leaves[node].is_some() {
                return Err(format!("codeword {word} extends an existing codeword"));
            }
            let bit = match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(format!("codeword {word} is not binary")),
            };
            if self.children[node][bit] == 0 {
                self.children.push([0, 0]);
                self.leaves.push(None);
                self.children[node][bit] = (self.children.len() - 1) as u32;
            }
            node = self.children[node][bit] as usize;
        }
        if self.leaves[node].is_some() || self.children[node] != [0, 0] {
            return Err(format!(
                "codeword {word} is a prefix of, or equal to, another codeword"
            ));
        }
        self.leaves[node] = Some(code);
        Ok(())
    }

    /// Reads one codeword; errors report the offset where it started.
    fn read(&self, reader: &mut BitReader<'_>) -> Result<Code> {
        let start = reader.position();
        let mut node = 0usize;
        loop {
            let bit = reader
                .read_bit()
                .ok_or(Error::UnexpectedEnd { bit_offset: start })? as usize;
            node = self.children[node][bit] as usize;
            if node == 0 {
                return Err(Error::CorruptStream {
                    bit_offset: start,
                    reason: "no codeword matches".into(),
                });
            }
            if let Some(code) = self.leaves[node] {
                return Ok(code);
            }
        }
    }
}

struct Codebook {
    white: CodeTree,
    black: CodeTree,
}

fn terminating(run: usize) -> Code {
    Code::Terminating(run)
}

fn makeup(run: usize) -> Code {
    Code::Makeup(run)
}

fn build_codebook() -> std::result::Result<Codebook, String> {
    check_complete("white", tables::WHITE_TERMINATING, tables::WHITE_MAKEUP)?;
    check_complete("black", tables::BLACK_TERMINATING, tables::BLACK_MAKEUP)?;
    let white = CodeTree::build(&[
        (tables::WHITE_TERMINATING, terminating),
        (tables::WHITE_MAKEUP, makeup),
        (tables::SHARED_MAKEUP, makeup),
    ])
    .map_err(|e| format!("white table: {e}"))?;
    let black = CodeTree::build(&[
        (tables::BLACK_TERMINATING, terminating),
        (tables::BLACK_MAKEUP, makeup),
        (tables::SHARED_MAKEUP, makeup),
    ])
    .map_err(|e| format!("black table: {e}"))?;
    Ok(Codebook { white, black })
}

fn check_complete(
    color: &str,
    term: CodeTable,
    color_makeup: CodeTable,
) -> std::result::Result<(), String> {
    for (expected, &(run, _)) in term.iter().enumerate() {
        if run != expected {
            return Err(format!(
                "{color} terminating table has {run} at slot {expected}"
            ));
        }
    }
    if term.len() != 64 {
        return Err(format!(
            "{color} terminating table has {} entries",
            term.len()
        ));
    }
    let makeups = color_makeup.iter().chain(tables::SHARED_MAKEUP);
    for (k, &(run, _)) in makeups.enumerate() {
        if run != 64 * (k + 1) {
            return Err(format!(
                "{color} makeup table has {run} where {} belongs",
                64 * (k + 1)
            ));
        }
    }
    if color_makeup.len() + tables::SHARED_MAKEUP.len() != MAX_MAKEUP / 64 {
        return Err(format!("{color} makeup tables do not reach {MAX_MAKEUP}"));
    }
    Ok(())
}

fn codebook() -> &'static Codebook {
    static BOOK: OnceLock<Codebook> = OnceLock::new();
    BOOK.get_or_init(|| match build_codebook() {
        Ok(book) => book,
        Err(e) => panic!("T.4 code tables are inconsistent: {e}"),
    })
}

/// Checks the transcribed code tables: every run 0..=63 has a terminating
/// code, every multiple of 64 up to 2560 a makeup code, and no codeword of
/// a color (EOL included) is a prefix of another.
pub fn verify_tables() -> std::result::Result<(), String> {
    build_codebook().map(|_| ())
}

fn lookup(table: CodeTable, run: usize) -> &'static str {
    match table.binary_search_by_key(&run, |&(r, _)| r) {
        Ok(i) => table[i].1,
        Err(_) => unreachable!("run {run} missing from table"),
    }
}

fn makeup_word(color: Color, run: usize) -> &'static str {
    debug_assert!(run.is_multiple_of(64) && (64..=MAX_MAKEUP).contains(&run));
    if run > 1728 {
        return lookup(tables::SHARED_MAKEUP, run);
    }
    match color {
        Color::White => lookup(tables::WHITE_MAKEUP, run),
        Color::Black => lookup(tables::BLACK_MAKEUP, run),
    }
}

fn terminating_word(color: Color, run: usize) -> &'static str {
    match color {
        Color::White => tables::WHITE_TERMINATING[run].1,
        Color::Black => tables::BLACK_TERMINATING[run].1,
    }
}

/// Codewords for one run: maximal 2560 makeups while at least 2624 remain,
/// then at most one makeup, then the terminating code.
fn run_codewords(color: Color, mut run: usize, mut emit: impl FnMut(&'static str)) {
    while run >= MAX_MAKEUP + 64 {
        emit(makeup_word(color, MAX_MAKEUP));
        run -= MAX_MAKEUP;
    }
    if run >= 64 {
        let bulk = run & !63;
        emit(makeup_word(color, bulk));
        run -= bulk;
    }
    emit(terminating_word(color, run));
}

/// Sum of codeword lengths needed to code `row`, framing excluded.
pub fn row_code_length(row: &RunRow) -> usize {
    let mut len = 0;
    for (i, &run) in row.runs().iter().enumerate() {
        run_codewords(Color::of_index(i), run, |w| len += w.len());
    }
    len
}

pub fn mh_encode(m: &RunMatrix, eol: bool) -> Result<MhBitstream> {
    // The MH1 header stores dimensions as u32.
    if u32::try_from(m.width()).is_err() {
        return Err(Error::EncodeRange(m.width()));
    }
    if u32::try_from(m.height()).is_err() {
        return Err(Error::invalid(format!(
            "{} rows exceed the MH1 limit",
            m.height()
        )));
    }
    let mut writer = BitWriter::new();
    for row in m.rows() {
        if eol {
            writer.write_str(tables::EOL);
        }
        for (i, &run) in row.runs().iter().enumerate() {
            run_codewords(Color::of_index(i), run, |w| writer.write_str(w));
        }
        if !eol {
            writer.align();
        }
    }
    Ok(MhBitstream {
        bytes: writer.finish(),
        row_count: m.height(),
        width: m.width(),
        eol,
    })
}

pub fn mh_decode(bs: &MhBitstream) -> Result<RunMatrix> {
    if bs.width == 0 || bs.row_count == 0 {
        return Err(Error::invalid(
            "declared width and row count must be positive",
        ));
    }
    let book = codebook();
    let mut reader = BitReader::new(&bs.bytes);
    // Row count comes from untrusted headers; don't trust it for capacity.
    let mut rows = Vec::with_capacity(bs.row_count.min(1 << 16));
    for row_index in 1..=bs.row_count {
        if bs.eol {
            expect_eol(&mut reader)?;
        }
        rows.push(decode_row(book, &mut reader, bs.width, row_index)?);
        if !bs.eol {
            reader.align();
        }
    }
    check_trailer(&mut reader, bs.eol)?;
    RunMatrix::new(bs.width, rows)
}

/// Skips zero fill bits and consumes one EOL codeword.
fn expect_eol(reader: &mut BitReader<'_>) -> Result<()> {
    let start = reader.position();
    let mut zeros = 0usize;
    loop {
        match reader.read_bit() {
            None => return Err(Error::UnexpectedEnd { bit_offset: start }),
            Some(false) => zeros += 1,
            Some(true) if zeros >= 11 => return Ok(()),
            Some(true) => {
                return Err(Error::CorruptStream {
                    bit_offset: start,
                    reason: "expected EOL before row".into(),
                })
            }
        }
    }
}

/// After the last row only zero padding (and, with EOL framing, trailing
/// EOL codewords such as a return-to-control sequence) may follow.
fn check_trailer(reader: &mut BitReader<'_>, eol: bool) -> Result<()> {
    let mut zeros = 0usize;
    let mut zeros_start = reader.position();
    while let Some(bit) = reader.read_bit() {
        if !bit {
            zeros += 1;
            continue;
        }
        if eol && zeros >= 11 {
            zeros = 0;
            zeros_start = reader.position();
            continue;
        }
        return Err(Error::CorruptStream {
            bit_offset: zeros_start,
            reason: "unexpected data after last row".into(),
        });
    }
    Ok(())
}

fn decode_row(
    book: &Codebook,
    reader: &mut BitReader<'_>,
    width: usize,
    row: usize,
) -> Result<RunRow> {
    let mut raw = Vec::new();
    let mut filled = 0usize;
    let mut color = Color::White;
    while filled < width {
        let start = reader.position();
        let tree = match color {
            Color::White => &book.white,
            Color::Black => &book.black,
        };
        let mut run = 0usize;
        loop {
            match tree.read(reader)? {
                Code::Makeup(n) => run += n,
                Code::Terminating(n) => {
                    run += n;
                    break;
                }
                Code::Eol => {
                    return Err(Error::CorruptStream {
                        bit_offset: start,
                        reason: format!("EOL inside row {row}"),
                    })
                }
            }
            if filled + run > width {
                break;
            }
        }
        if filled + run > width {
            return Err(Error::WidthMismatch {
                row,
                width,
                bit_offset: start,
            });
        }
        filled += run;
        raw.push(run);
        color = match color {
            Color::White => Color::Black,
            Color::Black => Color::White,
        };
    }
    RunRow::new(merge_zero_runs(raw), width).map_err(|e| match e {
        Error::CorruptRun { reason, .. } => Error::CorruptRun { row, reason },
        other => other,
    })
}

/// Removes zero-length runs after the first, merging their neighbours.
fn merge_zero_runs(raw: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(raw.len());
    let mut merge_next = false;
    for (i, run) in raw.into_iter().enumerate() {
        if i == 0 {
            out.push(run);
        } else if run == 0 {
            merge_next = true;
        } else if merge_next {
            *out.last_mut().expect("first run always pushed") += run;
            merge_next = false;
        } else {
            out.push(run);
        }
    }
    out
}
