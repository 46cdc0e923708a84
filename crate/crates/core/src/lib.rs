//! Counting digit stickers and hunting the self-referential sequences they generate.
//!
//! The library answers questions of the form: writing the numbers `1..=x` in
//! base `b`, how many times does the digit string `d` appear? (`f_d(x, b)`,
//! overlapping occurrences), and where does that count first catch up with,
//! tie, or overtake `x` itself? The counting core evaluates `f` in time
//! proportional to the numeral length of `x`; the search layer walks the
//! infinite index line with galloping ranges and jump rules, producing
//! first-hit values, full solution enumerations, and nonexistence
//! certificates.
//!
//! Modules:
//! - [`numerals`]: naturals, bases, stickers, digit views, and the brute-force
//!   counting oracle everything else is checked against.
//! - [`counting`]: the closed-form per-place evaluation of `f_d(x, b)`.
//! - [`search`]: first-hit searches, solution enumeration, stop rules,
//!   certificates.
//! - [`sequences`]: named generators for the OEIS sequences and tables the
//!   searches reproduce, plus b-file export.
//! - [`cache`]: append-only result cache (line protocol).
//! - [`config`]: key=value config file handling.

pub mod cache;
pub mod config;
pub mod counting;
mod error;
pub mod numerals;
pub mod search;
pub mod sequences;

pub use error::Error;
pub use numerals::{Base, Natural, Sticker};
pub use search::{EnumerationResult, RelationClass, SearchOutcome, Status};
