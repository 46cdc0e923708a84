//! Closed-form evaluation of `f_d(x, b)` — the total number of (overlapping)
//! occurrences of the sticker `d` in the base-`b` numerals of `1..=x` —
//! in time proportional to the numeral length of `x`.
//!
//! The count is assembled place by place. Fix `k`, the place (1-based, from
//! the right) where the sticker's *last* digit sits. Split
//!
//! ```text
//! x = high * b^(k+n-1) + window * b^(k-1) + low
//! ```
//!
//! where `window` is the `n`-digit slice of `x` whose low digit is at place
//! `k` and `low` is everything below it. With `Y = high * b^(k-1)`, the
//! occurrences of `d` ending at place `k` among `1..=x` are:
//!
//! - for `d > 0`: `Y` if `window < d`; `Y + low + 1` if `window = d`;
//!   `Y + b^(k-1)` if `window > d`;
//! - for the zero sticker: `Y` if the digit is nonzero, else
//!   `Y - b^(k-1) + low + 1` (leading zeros are never counted, which is also
//!   why places are only summed while the window fits inside the numeral).
//!
//! Summing the contributions over `k = 1..=len-n+1` gives `f_d(x, b)`; the
//! whole thing is checked against the write-everything-out oracle in the
//! test suites.

use num_traits::{One, Zero};
use std::cmp::Ordering;

use crate::error::Error;
use crate::numerals::{digits_lsf, Natural, Sticker};

/// The split of `x` around the sticker window at place `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceContext {
    /// Place (from the right, 1-based) of the sticker's last digit.
    pub k: u64,
    /// The n-digit window `floor(x / b^(k-1)) mod b^n`.
    pub window: Natural,
    /// Digits above the window: `floor(x / b^(k+n-1))`.
    pub high: Natural,
    /// Digits below the window: `x mod b^(k-1)`.
    pub low: Natural,
}

impl PlaceContext {
    /// Decompose `x` at place `k` for the sticker `d`.
    ///
    /// `k` must satisfy `1 <= k <= len - n + 1` where `len` is the numeral
    /// length of `x`: the window has to fit inside the numeral.
    pub fn decompose(x: &Natural, k: u64, d: &Sticker) -> Result<Self, Error> {
        let b = d.base().get();
        let n = d.width() as u64;
        let len = digits_lsf(x, d.base()).len() as u64;
        let max = (len + 1).saturating_sub(n);
        if k == 0 || k > max {
            return Err(Error::PlaceOutOfRange { k, max });
        }
        let big_b = Natural::from(b);
        let pow_km1 = big_b.pow((k - 1).try_into().expect("place fits u32"));
        let pow_n = big_b.pow(d.width() as u32);
        let shifted = x / &pow_km1;
        let window = &shifted % &pow_n;
        let high = shifted / &pow_n;
        let low = x % &pow_km1;
        Ok(PlaceContext {
            k,
            window,
            high,
            low,
        })
    }
}

/// Occurrences of `d` ending at place `k` in the numerals of `1..=x`.
pub fn place_contribution(x: &Natural, k: u64, d: &Sticker) -> Result<Natural, Error> {
    let ctx = PlaceContext::decompose(x, k, d)?;
    let b = Natural::from(d.base().get());
    let pow_km1 = b.pow((k - 1).try_into().expect("place fits u32"));
    let y = &ctx.high * &pow_km1;
    let value = d.value();
    Ok(if d.is_zero() {
        match ctx.window.cmp(&value) {
            Ordering::Greater => y,
            Ordering::Equal => y - &pow_km1 + &ctx.low + 1u32,
            Ordering::Less => unreachable!("window below zero"),
        }
    } else {
        match ctx.window.cmp(&value) {
            Ordering::Less => y,
            Ordering::Equal => y + &ctx.low + 1u32,
            Ordering::Greater => y + &pow_km1,
        }
    })
}

/// Compare the window whose low digit sits at `start` (0-based into the
/// LSB-first digit array) against the sticker digits, most significant
/// digit first.
fn window_cmp(digits: &[u32], start: usize, pattern_msf: &[u32]) -> Ordering {
    let n = pattern_msf.len();
    for (i, &pd) in pattern_msf.iter().enumerate() {
        let wd = digits[start + n - 1 - i];
        if wd != pd {
            return wd.cmp(&pd);
        }
    }
    Ordering::Equal
}

/// `f_d(x, b)`: total occurrences of `d` in the numerals of `1..=x`,
/// summed from the per-place contributions. Equals [`f_brute`] everywhere;
/// `f(0) = 0`, and the result is 0 whenever `x` is shorter than the sticker.
///
/// [`f_brute`]: crate::numerals::f_brute
pub fn f(x: &Natural, d: &Sticker) -> Natural {
    let base = d.base();
    let b = base.get();
    let digits = digits_lsf(x, base);
    let n = d.width();
    let len = digits.len();
    if len < n {
        return Natural::zero();
    }
    let zero_sticker = d.is_zero();
    let mut pow = Natural::one(); // b^(k-1)
    let mut low = Natural::zero(); // x mod b^(k-1)
    let mut high = x / Natural::from(b).pow(n as u32); // floor(x / b^(k+n-1))
    let mut total = Natural::zero();
    for k in 1..=(len - n + 1) {
        let y = &high * &pow;
        match window_cmp(&digits, k - 1, d.digits()) {
            Ordering::Less => total += y,
            Ordering::Equal => {
                if zero_sticker {
                    // high >= 1 here: a zero at place k cannot be the
                    // leading digit, so there are digits above it.
                    total += y - &pow + &low + 1u32;
                } else {
                    total += y + &low + 1u32;
                }
            }
            Ordering::Greater => {
                if zero_sticker {
                    total += y;
                } else {
                    total += y + &pow;
                }
            }
        }
        low += &pow * digits[k - 1];
        pow *= b;
        high /= b;
    }
    total
}

/// `f_d(b^k - 1)` in closed form: `(k - n + 1) * b^(k-n)`.
///
/// Defined for stickers with a nonzero leading digit and `k >= n`. The same
/// value also equals `f_d(b^k)` whenever the sticker does not occur in the
/// numeral of `b^k` itself.
pub fn boundary_count(k: u64, d: &Sticker) -> Result<Natural, Error> {
    let n = d.width() as u64;
    if d.is_zero() {
        return Err(Error::BoundaryZeroSticker);
    }
    if k < n {
        return Err(Error::BoundaryTooNarrow { k, n });
    }
    let b = Natural::from(d.base().get());
    Ok(b.pow((k - n).try_into().expect("exponent fits u32")) * (k - n + 1))
}
