//! Accelerated searches over the infinite index line.
//!
//! All searches compare `f_d(x)` against `x` and exploit two facts:
//!
//! - *Safe skipping*: once every candidate up to `x` is ruled out, finding a
//!   single `y > x` with `f(y) < x` rules out all of `(x, y]` as well,
//!   because `f` is non-decreasing. This powers an unbounded ("galloping")
//!   binary search over [`SafeRange`]s.
//! - *The jump rule*: while hunting equality, `f(x) > x` implies no solution
//!   exists below `f(x)`, so the candidate can jump straight there.
//!
//! Nonexistence is decided by the stop rule: any `b^K` consecutive integers
//! above `b^K` (with `K = b^n + n - 1` for an `n`-digit sticker) contain at
//! least `b^K` occurrences, because each of the `K - n + 1` window positions
//! inside the low `K` digits cycles through every pattern. So once
//! `f(x) >= x + b^K` at a cleared candidate, the deficit can never close
//! and the candidate is a permanent certificate.

use num_traits::{One, Zero};
use std::time::Instant;

use crate::counting::f;
use crate::error::Error;
use crate::numerals::{digits_lsf, Base, Natural, Sticker};

/// How a search ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Found,
    NotExists,
    Unresolved,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Found => "FOUND",
            Status::NotExists => "NOT_EXISTS",
            Status::Unresolved => "UNRESOLVED",
        })
    }
}

impl std::str::FromStr for Status {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "FOUND" => Ok(Status::Found),
            "NOT_EXISTS" => Ok(Status::NotExists),
            "UNRESOLVED" => Ok(Status::Unresolved),
            _ => Err(()),
        }
    }
}

/// Result of a first-hit or nonexistence search.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: Status,
    /// The found value; present iff `status == Found`.
    pub value: Option<Natural>,
    /// For `NotExists`: the certificate point `y` (everything below was
    /// cleared and `f(y) >= y + b^K` proves nothing above works). Absent
    /// when nonexistence follows from a proven a-priori bound instead.
    pub certificate: Option<Natural>,
    /// The bound in force, 0 when the search was unbounded.
    pub bound_used: Natural,
    /// Number of `f` evaluations performed.
    pub evaluations: u64,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

/// All solutions of `f_d(x) = x` up to a bound, in increasing order.
#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub solutions: Vec<Natural>,
    pub count: usize,
    pub max: Option<Natural>,
    pub bound_used: Natural,
    /// True when the search *proved* there is nothing beyond `max` (stop
    /// rule fired or a proven bound was crossed), not merely ran out of
    /// budget.
    pub complete: bool,
}

/// Relation between the first-hit sequences of a sticker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationClass {
    /// `a_>(d) = a_>=(d)`: the first `>=`-hit already overshoots.
    GeEqualsGt,
    /// `a_=(d)` exists and comes strictly before `a_>(d)`.
    EqBeforeGt,
    /// `a_=(d)` does not exist.
    NoEq,
}

/// A galloping-search range `<left, left + width>`: it is already proven
/// that every candidate at or below `left` fails the predicate.
#[derive(Debug, Clone)]
pub struct SafeRange {
    pub left: Natural,
    pub width: Natural,
}

/// Periodic progress report emitted during long searches.
#[derive(Debug, Clone, Copy)]
pub struct ProgressEvent {
    /// Decimal digit count of the current candidate.
    pub digits: u64,
    pub evaluations: u64,
    pub elapsed: f64,
}

/// Default progress cadence: at least one event per this many evaluations.
pub const DEFAULT_PROGRESS_INTERVAL: u64 = 10_000;

/// Forward steps taken from `a_>=` before `a_>` falls back to galloping.
const GT_STEP_CAP: u64 = 1_000_000;

/// Default search cap for the base-2 power-of-two stickers, whose equality
/// solutions have no proven bound. Covers the known 2058-bit solution.
pub fn open_family_default_bound() -> Natural {
    Natural::from(2u32).pow(4200)
}

/// True for multi-digit base-2 stickers of the form `1 0...0` (the powers
/// of two). Their equality searches have no proven bound: the search runs
/// to a caller-configured cap and reports `Unresolved` rather than
/// concluding nonexistence.
pub fn is_open_existence(d: &Sticker) -> bool {
    d.base().get() == 2
        && d.width() >= 2
        && d.digits()[0] == 1
        && d.digits()[1..].iter().all(|&x| x == 0)
}

/// Bound below which all solutions of `f_d(x) = x` provably lie, when such
/// a bound is known: `d * b^b` for a single nonzero digit, `b^(b+3)` for
/// the zero sticker.
pub fn proven_bound(d: &Sticker) -> Option<Natural> {
    if d.width() != 1 {
        return None;
    }
    let b = d.base().get();
    let bb = Natural::from(b).pow(b);
    if d.is_zero() {
        Some(bb * Natural::from(b).pow(3))
    } else {
        Some(bb * d.value())
    }
}

/// Default search bound for [`find_a_eq`] / [`enumerate_solutions`]:
/// the proven bound where one exists, `b^(K+1)` with `K = b^n + n - 1`
/// for multi-digit stickers, and a configurable cap (default `2^4200`)
/// for the open base-2 power-of-two family.
pub fn solution_bound(d: &Sticker) -> Natural {
    if is_open_existence(d) {
        return open_family_default_bound();
    }
    if let Some(p) = proven_bound(d) {
        return p;
    }
    let (k, _) = stop_window(d);
    Natural::from(d.base().get()).pow(u32::try_from(k + 1).expect("window exponent fits u32"))
}

/// `(K, b^K)` for the stop rule: `K = b^n + n - 1`.
pub fn stop_window(d: &Sticker) -> (u64, Natural) {
    let b = d.base().get();
    let n = d.width() as u64;
    let k = u64::from(b).pow(n as u32) + n - 1;
    let bk = Natural::from(b).pow(u32::try_from(k).expect("window exponent fits u32"));
    (k, bk)
}

/// The nonexistence stop rule: with `v = f_d(x)`, returns true iff
/// `x > b^K` and `v >= x + b^K`. Every window of `b^K` consecutive integers
/// above `b^K` yields at least `(K - n + 1) * b^(K-n) = b^K` occurrences,
/// so from such a point the count stays strictly ahead of the index forever
/// and no further solution of `f_d(x) = x` can exist.
pub fn stop_rule_fired(x: &Natural, v: &Natural, d: &Sticker) -> bool {
    let (_, bk) = stop_window(d);
    *x > bk && *v >= x + &bk
}

type ProgressCallback<'a> = Box<dyn FnMut(&ProgressEvent) + 'a>;

/// Search driver: owns the progress callback and evaluation bookkeeping.
/// Distinct searches are independent; a `Searcher` itself is single-threaded.
pub struct Searcher<'a> {
    progress: Option<ProgressCallback<'a>>,
    progress_interval: u64,
}

impl Default for Searcher<'_> {
    fn default() -> Self {
        Self::new()
    }
}

struct Run<'s, 'a> {
    searcher: &'s mut Searcher<'a>,
    sticker: Sticker,
    evals: u64,
    started: Instant,
}

impl Run<'_, '_> {
    fn eval(&mut self, x: &Natural) -> Natural {
        let v = f(x, &self.sticker);
        self.evals += 1;
        if self.searcher.progress.is_some()
            && self.evals.is_multiple_of(self.searcher.progress_interval)
        {
            self.emit(x);
        }
        v
    }

    fn emit(&mut self, x: &Natural) {
        if let Some(cb) = self.searcher.progress.as_mut() {
            cb(&ProgressEvent {
                digits: digits_lsf(x, Base::new(10).expect("ten")).len() as u64,
                evaluations: self.evals,
                elapsed: self.started.elapsed().as_secs_f64(),
            });
        }
    }

    fn outcome(
        &mut self,
        status: Status,
        value: Option<Natural>,
        certificate: Option<Natural>,
        bound_used: Natural,
    ) -> SearchOutcome {
        if let Some(report_at) = value.as_ref().or(certificate.as_ref()) {
            let p = report_at.clone();
            self.emit(&p);
        }
        SearchOutcome {
            status,
            value,
            certificate,
            bound_used,
            evaluations: self.evals,
            elapsed: self.started.elapsed().as_secs_f64(),
        }
    }
}

impl<'a> Searcher<'a> {
    pub fn new() -> Self {
        Searcher {
            progress: None,
            progress_interval: DEFAULT_PROGRESS_INTERVAL,
        }
    }

    /// Attach a progress callback, invoked at least once per `interval`
    /// evaluations and once at completion.
    pub fn with_progress(mut self, interval: u64, cb: impl FnMut(&ProgressEvent) + 'a) -> Self {
        self.progress = Some(Box::new(cb));
        self.progress_interval = interval.max(1);
        self
    }

    fn run(&mut self, d: &Sticker) -> Run<'_, 'a> {
        Run {
            sticker: d.clone(),
            evals: 0,
            started: Instant::now(),
            searcher: self,
        }
    }

    /// Least `x >= min_x` with `f_d(x) >= x`. Always terminates: every
    /// valid sticker eventually satisfies the relation.
    pub fn find_a_ge(&mut self, d: &Sticker, min_x: &Natural) -> SearchOutcome {
        let mut run = self.run(d);
        let value = ge_search(&mut run, min_x);
        run.outcome(Status::Found, Some(value), None, Natural::zero())
    }

    /// Least `x` with `f_d(x) > x`. Steps forward from `a_>=` (equality
    /// runs are short in practice) and falls back to galloping on the
    /// strict predicate after a step cap.
    pub fn find_a_gt(&mut self, d: &Sticker) -> SearchOutcome {
        let mut run = self.run(d);
        // a_> is at least 2 for every sticker, so starting the >= search at
        // 2 can never skip past it.
        let mut x = ge_search(&mut run, &Natural::from(2u32));
        let mut steps = 0u64;
        loop {
            let v = run.eval(&x);
            if v > x {
                return run.outcome(Status::Found, Some(x), None, Natural::zero());
            }
            steps += 1;
            if steps >= GT_STEP_CAP {
                let z = gallop(&mut run, x, 1, None).expect("uncapped gallop terminates");
                return run.outcome(Status::Found, Some(z), None, Natural::zero());
            }
            x += 1u32;
        }
    }

    /// Least `x >= min_x` with `f_d(x) = x`, searching no further than
    /// `bound` (inclusive). Returns `NotExists` only with a proof: either
    /// the stop rule fired at a cleared candidate (certificate recorded) or
    /// a proven a-priori bound was crossed. `Unresolved` means the bound ran
    /// out first.
    pub fn find_a_eq(
        &mut self,
        d: &Sticker,
        min_x: &Natural,
        bound: &Natural,
    ) -> Result<SearchOutcome, Error> {
        if min_x > bound {
            return Err(Error::MinAboveBound {
                min_x: min_x.to_string(),
                bound: bound.to_string(),
            });
        }
        let mut run = self.run(d);
        let stop_allowed = !is_open_existence(d);
        let (_, bk) = stop_window(d);
        let proven = proven_bound(d);
        // Crossing min(bound, proven bound) ends the search; which one was
        // crossed decides between NotExists and Unresolved.
        let effective = match &proven {
            Some(p) if p < bound => p.clone(),
            _ => bound.clone(),
        };
        let mut candidate = if min_x.is_zero() {
            Natural::one()
        } else {
            min_x.clone()
        };
        loop {
            if candidate > effective {
                let crossed_proof = proven.as_ref() == Some(&effective);
                if crossed_proof && d.is_zero() {
                    // The zero sticker always certificates at b^(b+3).
                    let v = run.eval(&effective);
                    assert!(
                        stop_rule_fired(&effective, &v, d),
                        "zero-sticker certificate must hold at b^(b+3)"
                    );
                    let cert = effective.clone();
                    return Ok(run.outcome(Status::NotExists, None, Some(cert), bound.clone()));
                }
                if crossed_proof {
                    return Ok(run.outcome(Status::NotExists, None, None, bound.clone()));
                }
                return Ok(run.outcome(Status::Unresolved, None, None, bound.clone()));
            }
            let v = run.eval(&candidate);
            if v == candidate {
                return Ok(run.outcome(Status::Found, Some(candidate), None, bound.clone()));
            }
            if stop_allowed && candidate > bk && v >= &candidate + &bk {
                // Everything below the candidate is cleared and the deficit
                // can never close above it.
                return Ok(run.outcome(Status::NotExists, None, Some(candidate), bound.clone()));
            }
            if v > candidate {
                // Jump rule: no solution in (candidate, v).
                candidate = v;
            } else {
                match gallop(&mut run, candidate, 0, Some(&effective)) {
                    Some(z) => candidate = z,
                    None => candidate = &effective + 1u32,
                }
            }
        }
    }

    /// All `x <= bound` with `f_d(x) = x`, by restarting [`find_a_eq`] just
    /// past each hit.
    pub fn enumerate_solutions(&mut self, d: &Sticker, bound: &Natural) -> EnumerationResult {
        let mut solutions: Vec<Natural> = Vec::new();
        let mut min_x = Natural::one();
        let complete = loop {
            if min_x > *bound {
                break false;
            }
            let out = self
                .find_a_eq(d, &min_x, bound)
                .expect("min_x <= bound checked");
            match out.status {
                Status::Found => {
                    let v = out.value.expect("found value");
                    min_x = &v + 1u32;
                    solutions.push(v);
                }
                Status::NotExists => break true,
                Status::Unresolved => break false,
            }
        };
        EnumerationResult {
            count: solutions.len(),
            max: solutions.last().cloned(),
            bound_used: bound.clone(),
            complete,
            solutions,
        }
    }

    /// Decide `a_=(0, b)`: the least solution of `f_0(x, b) = x` if one
    /// exists below `b^(b+3)`, otherwise a certified nonexistence.
    pub fn classify_zero(&mut self, base: Base) -> SearchOutcome {
        let d = Sticker::digit(base, 0).expect("zero digit");
        let bound = proven_bound(&d).expect("single digit has a proven bound");
        self.find_a_eq(&d, &Natural::one(), &bound)
            .expect("1 <= b^(b+3)")
    }

    /// Order the first-hit sequences of `d`: does equality come strictly
    /// before the first overshoot, do they coincide, or does equality never
    /// happen at all?
    pub fn classify_relation(&mut self, d: &Sticker) -> Result<RelationClass, Error> {
        let ge = self.find_a_ge(d, &Natural::one());
        let gt = self.find_a_gt(d);
        let ge_v = ge.value.expect("ge found");
        let gt_v = gt.value.expect("gt found");
        if ge_v < gt_v {
            return Ok(RelationClass::EqBeforeGt);
        }
        debug_assert_eq!(ge_v, gt_v);
        let eq = self.find_a_eq(d, &Natural::one(), &solution_bound(d))?;
        match eq.status {
            Status::Found => Ok(RelationClass::GeEqualsGt),
            Status::NotExists => Ok(RelationClass::NoEq),
            Status::Unresolved => Err(Error::Unresolved(d.to_string())),
        }
    }
}

/// The unbounded binary search from a directly-checked start: least
/// `x >= min_x` with `f(x) >= x`.
fn ge_search(run: &mut Run, min_x: &Natural) -> Natural {
    let start = if min_x.is_zero() {
        Natural::one()
    } else {
        min_x.clone()
    };
    let v = run.eval(&start);
    if v >= start {
        return start;
    }
    gallop(run, start, 0, None).expect("uncapped gallop terminates")
}

/// Galloping search for the least `z > safe.left` with `f(z) >= z + tau`
/// (`tau = 0` for the `>=` predicate, `1` for the strict one), given that
/// every candidate at or below the starting left end fails.
///
/// Ranges grow by doubling while a probe clears them and shrink by halving
/// otherwise; at width 1 the endpoint is tested directly. If `cap` is given
/// and the left end passes it, returns `None`.
fn gallop(run: &mut Run, safe_left: Natural, tau: u32, cap: Option<&Natural>) -> Option<Natural> {
    let mut range = SafeRange {
        left: safe_left,
        width: Natural::one(),
    };
    loop {
        if let Some(c) = cap {
            if range.left > *c {
                return None;
            }
        }
        let probe = &range.left + &range.width;
        let v = run.eval(&probe);
        if v < &range.left + tau {
            // Lemma-safe skip: f non-decreasing and f(probe) below the
            // target means nothing in (left, probe] can reach it.
            debug_assert!(v < &probe + tau);
            range.left = probe;
            range.width *= 2u32;
        } else if range.width.is_one() {
            if v >= &probe + tau {
                return Some(probe);
            }
            range.left = probe;
            range.width = Natural::from(2u32);
        } else {
            range.width = (&range.width + 1u32) >> 1;
        }
    }
}

/// [`Searcher::find_a_ge`] with a fresh default searcher.
pub fn find_a_ge(d: &Sticker, min_x: &Natural) -> SearchOutcome {
    Searcher::new().find_a_ge(d, min_x)
}

/// [`Searcher::find_a_gt`] with a fresh default searcher.
pub fn find_a_gt(d: &Sticker) -> SearchOutcome {
    Searcher::new().find_a_gt(d)
}

/// [`Searcher::find_a_eq`] with a fresh default searcher.
pub fn find_a_eq(d: &Sticker, min_x: &Natural, bound: &Natural) -> Result<SearchOutcome, Error> {
    Searcher::new().find_a_eq(d, min_x, bound)
}

/// [`Searcher::enumerate_solutions`] with a fresh default searcher.
pub fn enumerate_solutions(d: &Sticker, bound: &Natural) -> EnumerationResult {
    Searcher::new().enumerate_solutions(d, bound)
}

/// [`Searcher::classify_zero`] with a fresh default searcher.
pub fn classify_zero(base: Base) -> SearchOutcome {
    Searcher::new().classify_zero(base)
}

/// [`Searcher::classify_relation`] with a fresh default searcher.
pub fn classify_relation(d: &Sticker) -> Result<RelationClass, Error> {
    Searcher::new().classify_relation(d)
}
