//! Append-only result cache with a line protocol.
//!
//! One tab-separated ASCII line per completed search, so even results from
//! multi-hour hunts stay human-diffable and mergeable:
//!
//! ```text
//! kind \t base \t sticker \t status \t value \t bound \t elapsed
//! ```
//!
//! `value` holds the found value, the nonexistence certificate, or `-`.
//! `(kind, base, sticker, bound)` is the lookup key; decided results
//! (FOUND / NOT_EXISTS) supersede UNRESOLVED ones, and an UNRESOLVED record
//! only answers queries at or below its bound. Records are never rewritten;
//! a reader tolerates a torn final line from a concurrent append.
//!
//! Enumeration (`ENUM`) records store the solution count as their value;
//! they are bookkeeping only, solution lists are recomputed.

use std::fmt;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::Error;
use crate::numerals::Natural;
use crate::search::Status;

/// Which operation produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Ge,
    Gt,
    Eq,
    Enum,
    Zero,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Ge => "GE",
            Kind::Gt => "GT",
            Kind::Eq => "EQ",
            Kind::Enum => "ENUM",
            Kind::Zero => "ZERO",
        })
    }
}

impl FromStr for Kind {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "GE" => Ok(Kind::Ge),
            "GT" => Ok(Kind::Gt),
            "EQ" => Ok(Kind::Eq),
            "ENUM" => Ok(Kind::Enum),
            "ZERO" => Ok(Kind::Zero),
            _ => Err(()),
        }
    }
}

/// One persisted result line.
#[derive(Debug, Clone, PartialEq)]
pub struct CacheRecord {
    pub kind: Kind,
    pub base: u32,
    /// Canonical sticker string (see `Sticker::to_string`).
    pub sticker: String,
    pub status: Status,
    /// Found value, certificate, or absent.
    pub value: Option<Natural>,
    pub bound: Natural,
    pub elapsed: f64,
}

impl CacheRecord {
    fn to_line(&self) -> String {
        let value = match &self.value {
            Some(v) => v.to_string(),
            None => "-".to_string(),
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
            self.kind, self.base, self.sticker, self.status, value, self.bound, self.elapsed
        )
    }

    fn parse(line: &str) -> Option<CacheRecord> {
        let mut parts = line.split('\t');
        let kind = parts.next()?.parse::<Kind>().ok()?;
        let base = parts.next()?.parse::<u32>().ok()?;
        let sticker = parts.next()?.to_string();
        let status = parts.next()?.parse::<Status>().ok()?;
        let value_text = parts.next()?;
        let value = if value_text == "-" {
            None
        } else {
            Some(Natural::from_str(value_text).ok()?)
        };
        let bound = Natural::from_str(parts.next()?).ok()?;
        let elapsed = parts.next()?.parse::<f64>().ok()?;
        if parts.next().is_some() {
            return None;
        }
        Some(CacheRecord {
            kind,
            base,
            sticker,
            status,
            value,
            bound,
            elapsed,
        })
    }
}

/// Handle on a cache file. Opening does not create the file; the first
/// append does.
#[derive(Debug, Clone)]
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Cache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Append one record; a single write call per line keeps concurrent
    /// appenders line-atomic.
    pub fn append(&self, record: &CacheRecord) -> Result<(), Error> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let mut line = record.to_line();
        line.push('\n');
        file.write_all(line.as_bytes())?;
        Ok(())
    }

    /// Every parseable record, in file order. Malformed lines (including a
    /// torn concurrent append) are skipped.
    pub fn records(&self) -> Result<Vec<CacheRecord>, Error> {
        match std::fs::read_to_string(&self.path) {
            Ok(text) => Ok(text.lines().filter_map(CacheRecord::parse).collect()),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Vec::new()),
            Err(e) => Err(e.into()),
        }
    }

    /// Best usable record for a query. Decided records always answer;
    /// an UNRESOLVED record answers only if it already searched at least as
    /// far as the query asks. Later records win ties.
    pub fn lookup(
        &self,
        kind: Kind,
        base: u32,
        sticker: &str,
        bound: &Natural,
    ) -> Result<Option<CacheRecord>, Error> {
        let mut best: Option<CacheRecord> = None;
        for rec in self.records()? {
            if rec.kind != kind || rec.base != base || rec.sticker != sticker {
                continue;
            }
            let usable = match rec.status {
                Status::Found | Status::NotExists => true,
                Status::Unresolved => rec.bound >= *bound,
            };
            if !usable {
                continue;
            }
            let supersedes = match (&best, rec.status) {
                (None, _) => true,
                (Some(b), _) if b.status == Status::Unresolved => true,
                (Some(_), Status::Unresolved) => false,
                (Some(_), _) => true,
            };
            if supersedes {
                best = Some(rec);
            }
        }
        Ok(best)
    }
}
