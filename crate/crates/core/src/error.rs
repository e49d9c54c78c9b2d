use thiserror::Error;

/// Errors produced by codecs, parsers and analysis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A run row violates the canonical-form invariants.
    #[error("corrupt run data in row {row}: {reason}")]
    CorruptRun { row: usize, reason: String },

    /// No codeword of the expected color matches the bits at `bit_offset`.
    #[error("corrupt MH stream at bit {bit_offset}: {reason}")]
    CorruptStream { bit_offset: usize, reason: String },

    /// A decoded row ran past the declared width.
    #[error("row {row} overshoots declared width {width} at bit {bit_offset}")]
    WidthMismatch {
        row: usize,
        width: usize,
        bit_offset: usize,
    },

    #[error("unexpected end of stream at bit {bit_offset}")]
    UnexpectedEnd { bit_offset: usize },

    #[error("run length {0} cannot be MH encoded")]
    EncodeRange(usize),

    /// Byte-oriented parse failure (PBM, MH1 header).
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("unexpected end of input at byte {offset}")]
    Truncated { offset: usize },

    /// Line-oriented parse failure (RLE1 text, CSV). `line` is 1-based.
    #[error("corrupt file at line {line}: {reason}")]
    CorruptFile { line: usize, reason: String },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
