use crate::error::{Error, Result};
use crate::rle::BinaryImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PbmVariant {
    /// `P1`, one character per pixel.
    Ascii,
    /// `P4`, rows packed MSB first and padded to whole bytes.
    Binary,
}

// Netpbm asks plain-format writers to keep lines at most 70 characters.
const P1_LINE: usize = 70;

pub fn write_pbm(img: &BinaryImage, variant: PbmVariant) -> Vec<u8> {
    let (w, h) = (img.width(), img.height());
    match variant {
        PbmVariant::Ascii => {
            let mut out = format!("P1\n{w} {h}\n").into_bytes();
            for row in img.rows() {
                for chunk in row.chunks(P1_LINE) {
                    out.extend(chunk.iter().map(|&b| if b { b'1' } else { b'0' }));
                    out.push(b'\n');
                }
            }
            out
        }
        PbmVariant::Binary => {
            let mut out = format!("P4\n{w} {h}\n").into_bytes();
            for row in img.rows() {
                out.extend(pack_row(row));
            }
            out
        }
    }
}

pub(crate) fn pack_row(row: &[bool]) -> Vec<u8> {
    row.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (7 - i)))
        })
        .collect()
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            reason: reason.into(),
        }
    }

    /// Skips whitespace and `#` comments.
    fn skip_space(&mut self) {
        while let Some(&c) = self.data.get(self.pos) {
            if c == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_space();
        let start = self.pos;
        while self.data.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(if self.pos >= self.data.len() {
                Error::Truncated { offset: self.pos }
            } else {
                self.err("expected a decimal number")
            });
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .unwrap()
            .parse::<usize>()
            .map_err(|_| Error::Parse {
                offset: start,
                reason: "dimension overflow".into(),
            })
    }
}

pub fn read_pbm(data: &[u8]) -> Result<BinaryImage> {
    let mut cur = Cursor { data, pos: 0 };
    let variant = match data.get(..2) {
        Some(b"P1") => PbmVariant::Ascii,
        Some(b"P4") => PbmVariant::Binary,
        _ => return Err(cur.err("bad magic, expected P1 or P4")),
    };
    cur.pos = 2;
    let dims_at = cur.pos;
    let width = cur.number()?;
    let height = cur.number()?;
    if width == 0 || height == 0 {
        return Err(Error::Parse {
            offset: dims_at,
            reason: "width and height must be positive".into(),
        });
    }
    let pixel_count = width.checked_mul(height).ok_or(Error::Parse {
        offset: dims_at,
        reason: "dimension overflow".into(),
    })?;
    let pixels = match variant {
        PbmVariant::Ascii => read_plain_raster(&mut cur, pixel_count)?,
        PbmVariant::Binary => read_raw_raster(&mut cur, width, height)?,
    };
    BinaryImage::new(width, height, pixels)
}

fn read_plain_raster(cur: &mut Cursor<'_>, count: usize) -> Result<Vec<bool>> {
    // The payload can't hold more pixels than it has bytes.
    let mut pixels = Vec::with_capacity(count.min(cur.data.len()));
    while pixels.len() < count {
        cur.skip_space();
        match cur.data.get(cur.pos) {
            None => return Err(Error::Truncated { offset: cur.pos }),
            Some(b'0') => pixels.push(false),
            Some(b'1') => pixels.push(true),
            Some(_) => return Err(cur.err("expected 0 or 1")),
        }
        cur.pos += 1;
    }
    cur.skip_space();
    if cur.pos != cur.data.len() {
        return Err(cur.err("trailing data after raster"));
    }
    Ok(pixels)
}

fn read_raw_raster(cur: &mut Cursor<'_>, width: usize, height: usize) -> Result<Vec<bool>> {
    // Exactly one whitespace byte separates the header from the raster.
    match cur.data.get(cur.pos) {
        Some(c) if c.is_ascii_whitespace() => cur.pos += 1,
        Some(_) => return Err(cur.err("expected whitespace before raster")),
        None => return Err(Error::Truncated { offset: cur.pos }),
    }
    let stride = width.div_ceil(8);
    let needed = stride
        .checked_mul(height)
        .ok_or(cur.err("dimension overflow"))?;
    let raster = &cur.data[cur.pos..];
    if raster.len() < needed {
        return Err(Error::Truncated {
            offset: cur.data.len(),
        });
    }
    if raster.len() > needed {
        return Err(Error::Parse {
            offset: cur.pos + needed,
            reason: "trailing data after raster".into(),
        });
    }
    let mut pixels = Vec::with_capacity(width * height);
    for row in raster.chunks_exact(stride) {
        pixels.extend((0..width).map(|x| (row[x / 8] >> (7 - x % 8)) & 1 == 1));
    }
    Ok(pixels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rle::parse_bits;

    #[test]
    fn table_one_line_two_packs() {
        assert_eq!(
            pack_row(&parse_bits("00110000111110").unwrap()),
            vec![0x30, 0xF8]
        );
    }

    #[test]
    fn single_black_p1() {
        let img = read_pbm(b"P1 1 1 1").unwrap();
        assert_eq!((img.width(), img.height()), (1, 1));
        assert!(img.get(0, 0));
    }

    #[test]
    fn p1_with_comments_and_packed_digits() {
        let img = read_pbm(b"P1\n# a comment\n3 2 # trailing\n010\n11 0\n").unwrap();
        assert_eq!(img.pixels(), &[false, true, false, true, true, false]);
    }

    #[test]
    fn p4_short_payload() {
        let img = BinaryImage::from_strings(&["00110000111110", "11111111111111"]).unwrap();
        let mut bytes = write_pbm(&img, PbmVariant::Binary);
        assert_eq!(&bytes[bytes.len() - 4..], &[0x30, 0xF8, 0xFF, 0xFC]);
        bytes.pop();
        assert!(matches!(read_pbm(&bytes), Err(Error::Truncated { .. })));
    }

    #[test]
    fn structured_errors() {
        assert!(matches!(
            read_pbm(b"P5 1 1 \0"),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(read_pbm(b"P1 2"), Err(Error::Truncated { .. })));
        assert!(matches!(
            read_pbm(b"P1 2 1 0"),
            Err(Error::Truncated { .. })
        ));
        assert!(matches!(read_pbm(b"P1 1 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(
            read_pbm(b"P4 99999999999999999999 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            read_pbm(b"P4 4294967296 4294967296\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(read_pbm(b"P1 0 3\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn writers_round_trip() {
        let img = BinaryImage::from_strings(&["101", "011"]).unwrap();
        for v in [PbmVariant::Ascii, PbmVariant::Binary] {
            let bytes = write_pbm(&img, v);
            assert_eq!(read_pbm(&bytes).unwrap(), img);
            assert_eq!(write_pbm(&read_pbm(&bytes).unwrap(), v), bytes);
        }
        assert_eq!(write_pbm(&img, PbmVariant::Ascii), b"P1\n3 2\n101\n011\n");
    }

    #[test]
    fn long_p1_rows_wrap() {
        let img = BinaryImage::blank(75, 1).unwrap();
        let text = String::from_utf8(write_pbm(&img, PbmVariant::Ascii)).unwrap();
        assert!(text.lines().all(|l| l.len() <= 70));
        assert_eq!(read_pbm(text.as_bytes()).unwrap(), img);
    }
}
