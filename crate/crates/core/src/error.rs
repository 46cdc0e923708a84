use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("base {0} is not usable; bases start at 2")]
    InvalidBase(u32),

    #[error("digit {digit} out of range for base {base}")]
    InvalidDigit { digit: u32, base: u32 },

    #[error("sticker needs at least one digit")]
    EmptySticker,

    #[error("multi-digit stickers must not start with zero")]
    LeadingZeroSticker,

    #[error("malformed sticker {text:?}: {reason}")]
    StickerSyntax { text: String, reason: String },

    #[error("occurrence counting is defined for x >= 1")]
    CountAtZero,

    #[error("place k={k} outside the numeral; valid places are 1..={max}")]
    PlaceOutOfRange { k: u64, max: u64 },

    #[error("boundary count needs k >= sticker width (k={k}, width={n})")]
    BoundaryTooNarrow { k: u64, n: u64 },

    #[error("boundary count is not defined for the zero sticker")]
    BoundaryZeroSticker,

    #[error("search start {min_x} exceeds bound {bound}")]
    MinAboveBound { min_x: String, bound: String },

    #[error("search for {0} did not resolve below its bound")]
    Unresolved(String),

    #[error("unknown sequence id {0:?}")]
    UnknownSequence(String),

    #[error("sequence {id} is not generated here: {note}")]
    OutOfScopeSequence { id: String, note: String },

    #[error("index {index} below the first index {offset} of {id}")]
    IndexBeforeOffset { id: String, index: u64, offset: u64 },

    #[error("unknown table name {0:?}")]
    UnknownTable(String),

    #[error("config line {line}: {reason}")]
    Config { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
