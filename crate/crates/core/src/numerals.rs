//! Naturals, bases, stickers, digit views, and the brute-force counting
//! oracle.
//!
//! Everything here is pure and exact: values are immutable after
//! construction and safe to share across threads. [`f_brute`] is the trusted
//! reference the closed-form counter is verified against; it never takes the
//! per-place shortcut, it literally writes out every numeral.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

use crate::error::Error;

/// Arbitrary-precision nonnegative integer. Every index, count, and bound in
/// this crate is a `Natural`; arithmetic is exact at any size.
pub type Natural = num_bigint::BigUint;

/// A positional numeral base, `b >= 2`. Unary is not a positional system in
/// the sense used here and is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub fn new(b: u32) -> Result<Self, Error> {
        if b < 2 {
            return Err(Error::InvalidBase(b));
        }
        Ok(Base(b))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The digit string being counted: a base plus a most-significant-first
/// digit vector.
///
/// Multi-digit stickers must not begin with a zero; the single-digit zero
/// sticker is valid. Occurrences of a sticker inside a numeral always count
/// overlaps, so `11` occurs twice in `1113`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sticker {
    base: Base,
    digits: Vec<u32>,
}

impl Sticker {
    pub fn new(base: Base, digits: Vec<u32>) -> Result<Self, Error> {
        if digits.is_empty() {
            return Err(Error::EmptySticker);
        }
        for &d in &digits {
            if d >= base.get() {
                return Err(Error::InvalidDigit {
                    digit: d,
                    base: base.get(),
                });
            }
        }
        if digits.len() > 1 && digits[0] == 0 {
            return Err(Error::LeadingZeroSticker);
        }
        Ok(Sticker { base, digits })
    }

    /// Single-digit sticker.
    pub fn digit(base: Base, d: u32) -> Result<Self, Error> {
        Sticker::new(base, vec![d])
    }

    /// Parse the canonical sticker syntax: plain digit strings for `b <= 10`
    /// ("12"), colon-separated decimal digit values for `b > 10` ("1:0:15").
    pub fn parse(text: &str, base: Base) -> Result<Self, Error> {
        let syntax = |reason: &str| Error::StickerSyntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(syntax("empty"));
        }
        let digits: Vec<u32> = if base.get() <= 10 {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| syntax("expected digits")))
                .collect::<Result<_, _>>()?
        } else {
            text.split(':')
                .map(|part| {
                    part.parse::<u32>()
                        .map_err(|_| syntax("expected colon-separated decimal digit values"))
                })
                .collect::<Result<_, _>>()?
        };
        Sticker::new(base, digits)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    /// Digits, most-significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of digits, `n`.
    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// Numeric value of the digit string.
    pub fn value(&self) -> Natural {
        let mut v = Natural::zero();
        for &d in &self.digits {
            v = v * self.base.get() + d;
        }
        v
    }

    /// The single-digit sticker `0`.
    pub fn is_zero(&self) -> bool {
        self.digits == [0]
    }
}

impl fmt::Display for Sticker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base.get() <= 10 {
            for &d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join(":"))
        }
    }
}

/// Digits of `x` in base `b`, most-significant first. Zero has no digits.
pub fn to_digits(x: &Natural, base: Base) -> Vec<u32> {
    let mut ds = digits_lsf(x, base);
    ds.reverse();
    ds
}

/// Digits least-significant first; the layout the counting loop wants.
pub(crate) fn digits_lsf(x: &Natural, base: Base) -> Vec<u32> {
    if x.is_zero() {
        return Vec::new();
    }
    let b = base.get();
    if b <= 256 {
        x.to_radix_le(b).into_iter().map(u32::from).collect()
    } else {
        let mut ds = Vec::new();
        let big = Natural::from(b);
        let mut v = x.clone();
        while !v.is_zero() {
            let (q, r) = v.div_rem(&big);
            ds.push(r.to_u32().expect("remainder below base"));
            v = q;
        }
        ds
    }
}

/// Inverse of [`to_digits`] for inputs without leading zeros; the empty
/// vector maps to 0.
pub fn from_digits(digits: &[u32], base: Base) -> Result<Natural, Error> {
    let mut v = Natural::zero();
    for &d in digits {
        if d >= base.get() {
            return Err(Error::InvalidDigit {
                digit: d,
                base: base.get(),
            });
        }
        v = v * base.get() + d;
    }
    Ok(v)
}

/// Render `x` in base `b` using the sticker syntax (plain digits for
/// `b <= 10`, colon-separated values above). Zero renders as "0".
pub fn render_in_base(x: &Natural, base: Base) -> String {
    let ds = to_digits(x, base);
    if ds.is_empty() {
        return "0".to_string();
    }
    if base.get() <= 10 {
        ds.iter().map(|d| d.to_string()).collect()
    } else {
        ds.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }
}

/// Count the (possibly overlapping) occurrences of `d` in the numeral of
/// `x`. The counting range of every function here starts at 1, so `x = 0`
/// is a domain error.
pub fn occurrences_in(x: &Natural, d: &Sticker) -> Result<Natural, Error> {
    if x.is_zero() {
        return Err(Error::CountAtZero);
    }
    let ds = to_digits(x, d.base());
    Ok(Natural::from(count_windows(&ds, d.digits())))
}

fn count_windows(digits_msf: &[u32], pattern: &[u32]) -> u64 {
    let n = pattern.len();
    if digits_msf.len() < n {
        return 0;
    }
    digits_msf
        .windows(n)
        .filter(|w| *w == pattern)
        .count() as u64
}

/// Total occurrences of `d` in the numerals of `1..=x`, by writing each one
/// out. The trusted oracle; intended for `x` up to ~10^7.
pub fn f_brute(x: &Natural, d: &Sticker) -> Natural {
    if let Some(small) = x.to_u64() {
        return Natural::from(f_brute_u64(small, d));
    }
    // Out of oracle scale, but stay correct.
    let mut total = Natural::zero();
    let mut m = Natural::one();
    while m <= *x {
        total += occurrences_in(&m, d).expect("m >= 1");
        m += 1u32;
    }
    total
}

fn f_brute_u64(x: u64, d: &Sticker) -> u64 {
    let b = u64::from(d.base().get());
    // Pattern least-significant first to match the extraction order.
    let pat: Vec<u32> = d.digits().iter().rev().copied().collect();
    let n = pat.len();
    let mut buf: Vec<u32> = Vec::with_capacity(64);
    let mut total = 0u64;
    for m in 1..=x {
        buf.clear();
        let mut v = m;
        while v > 0 {
            buf.push((v % b) as u32);
            v /= b;
        }
        if buf.len() >= n {
            total += buf.windows(n).filter(|w| *w == pat.as_slice()).count() as u64;
        }
    }
    total
}

/// Incremental oracle: walks `1..=limit` once, calling `visit(x, f_brute(x))`
/// at every step. Lets tests check many prefix sums without quadratic cost.
pub fn f_brute_scan(limit: u64, d: &Sticker, mut visit: impl FnMut(u64, u64)) {
    let b = u64::from(d.base().get());
    let pat: Vec<u32> = d.digits().iter().rev().copied().collect();
    let n = pat.len();
    let mut buf: Vec<u32> = Vec::with_capacity(64);
    let mut total = 0u64;
    for m in 1..=limit {
        buf.clear();
        let mut v = m;
        while v > 0 {
            buf.push((v % b) as u32);
            v /= b;
        }
        if buf.len() >= n {
            total += buf.windows(n).filter(|w| *w == pat.as_slice()).count() as u64;
        }
        visit(m, total);
    }
}
