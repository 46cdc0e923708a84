//! Command-line front end: counting, first-hit searches, enumeration,
//! table reproduction, b-file export, and the oracle cross-check.
//!
//! Exit codes: 0 success (including NOT_EXISTS answers), 1 verify mismatch,
//! 2 malformed input, 3 brute-force guard exceeded, 4 unresolved search or
//! incomplete enumeration.
//!
//! Everything value-like goes to stdout and is deterministic for a cold
//! cache; timing and progress go to stderr.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use archive_label::cache::{Cache, CacheRecord, Kind};
use archive_label::config::{parse_natural, Config};
use archive_label::counting::f;
use archive_label::numerals::{f_brute_scan, render_in_base, to_digits};
use archive_label::search::{solution_bound, stop_rule_fired, ProgressEvent, Searcher};
use archive_label::sequences::{self, TableName};
use archive_label::{Base, Natural, SearchOutcome, Status, Sticker};

const EXIT_MISMATCH: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_BRUTE_GUARD: u8 = 3;
const EXIT_UNRESOLVED: u8 = 4;

/// Largest x the brute-force oracle and the verify grid accept.
const BRUTE_GUARD: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "archive-label",
    version,
    about = "Count digit stickers across 1..=x and hunt the points where the count meets the index"
)]
struct Cli {
    /// Numeral base (>= 2).
    #[arg(long, global = true, default_value_t = 10)]
    base: u32,
    /// Result cache file (tab-separated, append-only). Also settable via
    /// ARCHIVE_LABEL_CACHE or the config file; unset means no caching.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Config file with key = value lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Emit PROGRESS lines on stderr during searches.
    #[arg(long, global = true)]
    progress: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print f_d(x, b): occurrences of the sticker in the numerals of 1..=x.
    Count {
        /// Upper end of the range; decimal, or B^E shorthand.
        x: String,
        #[arg(long)]
        sticker: String,
        /// Use the write-everything-out oracle instead of the closed form
        /// (guarded to x <= 10^7).
        #[arg(long)]
        brute: bool,
    },
    /// Find the least x with f_d(x) >= x (ge), > x (gt), or = x (eq).
    Find {
        #[arg(value_enum)]
        relation: Relation,
        #[arg(long)]
        sticker: String,
        /// Search start; defaults to 2 for eq (the classical convention
        /// that skips x = 1) and 1 otherwise.
        #[arg(long)]
        min: Option<String>,
        /// Search bound for eq; defaults to the sticker's solution bound.
        #[arg(long)]
        bound: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Decimal)]
        format: Format,
    },
    /// List all solutions of f_d(x) = x up to the bound.
    Enumerate {
        #[arg(long)]
        sticker: String,
        #[arg(long)]
        bound: Option<String>,
        /// Print at most this many solutions (does not shorten the search).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Recompute a table: T1_AEQ_AGT, T2_ED_LENGTHS, T3_ED_MAX,
    /// T4_ZERO_BASES, T5_BASE2_POW2, or T6_A10_BASES.
    Table {
        name: String,
        /// Include the long-running rows.
        #[arg(long)]
        long: bool,
    },
    /// Export a sequence as an OEIS b-file.
    Bfile {
        seq_id: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// First index (defaults to the sequence's natural offset).
        #[arg(long)]
        from: Option<u64>,
        /// Number of terms.
        #[arg(long)]
        count: Option<u64>,
    },
    /// Decide whether f_0(x, b) = x has a solution in the given base.
    ZeroStatus,
    /// Cross-check the closed form against the brute oracle on a grid.
    Verify {
        /// Check every x up to here (<= 10^7).
        #[arg(long, default_value_t = 10_000)]
        max: u64,
        /// Bases to check: "2..12" (inclusive) or "2,3,10".
        #[arg(long)]
        bases: Option<String>,
        /// Stickers to check (comma-separated); default is every single
        /// digit of each base.
        #[arg(long)]
        stickers: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Ge,
    Gt,
    Eq,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    /// Decimal rendering.
    Decimal,
    /// Digits in the search base (colon-separated above base 10).
    Base,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_BAD_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut cfg = match &cli.config {
        Some(path) => Config::from_file(path).map_err(|e| e.to_string())?,
        None => Config::default(),
    };
    cfg.apply_env();
    if let Some(path) = &cli.cache {
        cfg.cache_path = Some(path.clone());
    }
    let base = Base::new(cli.base).map_err(|e| e.to_string())?;
    let cache = cfg.cache_path.as_ref().map(Cache::new);

    match cli.cmd {
        Cmd::Count { x, sticker, brute } => {
            cmd_count(base, &x, &sticker, brute)
        }
        Cmd::Find {
            relation,
            sticker,
            min,
            bound,
            format,
        } => cmd_find(
            base, relation, &sticker, min, bound, format, &cfg, cache.as_ref(), cli.progress,
        ),
        Cmd::Enumerate {
            sticker,
            bound,
            limit,
        } => cmd_enumerate(base, &sticker, bound, limit, &cfg, cache.as_ref(), cli.progress),
        Cmd::Table { name, long } => cmd_table(&name, long || cfg.long_jobs_enabled),
        Cmd::Bfile {
            seq_id,
            out,
            from,
            count,
        } => cmd_bfile(&seq_id, out, from, count),
        Cmd::ZeroStatus => cmd_zero_status(base, cache.as_ref(), &cfg, cli.progress),
        Cmd::Verify {
            max,
            bases,
            stickers,
        } => cmd_verify(base, max, bases, stickers),
    }
}

fn parse_sticker(text: &str, base: Base) -> Result<Sticker, String> {
    Sticker::parse(text, base).map_err(|e| e.to_string())
}

fn parse_value(text: &str, what: &str) -> Result<Natural, String> {
    parse_natural(text).ok_or_else(|| format!("malformed {what} {text:?}"))
}

fn searcher_for<'a>(
    progress: bool,
    interval: u64,
    kind: Kind,
    base: Base,
    sticker_text: &'a str,
) -> Searcher<'a> {
    if progress {
        Searcher::new().with_progress(interval, move |ev: &ProgressEvent| {
            eprintln!(
                "PROGRESS kind={} base={} sticker={} digits={} evals={} elapsed={:.3}",
                kind,
                base.get(),
                sticker_text,
                ev.digits,
                ev.evaluations,
                ev.elapsed
            );
        })
    } else {
        Searcher::new()
    }
}

fn cmd_count(base: Base, x_text: &str, sticker_text: &str, brute: bool) -> Result<ExitCode, String> {
    let sticker = parse_sticker(sticker_text, base)?;
    let x = parse_value(x_text, "x")?;
    if brute {
        match x.to_u64() {
            Some(small) if small <= BRUTE_GUARD => {
                let mut last = 0u64;
                f_brute_scan(small, &sticker, |_, total| last = total);
                println!("{last}");
                Ok(ExitCode::SUCCESS)
            }
            _ => {
                eprintln!("error: --brute is guarded to x <= {BRUTE_GUARD}");
                Ok(ExitCode::from(EXIT_BRUTE_GUARD))
            }
        }
    } else {
        println!("{}", f(&x, &sticker));
        Ok(ExitCode::SUCCESS)
    }
}

fn render_value(v: &Natural, format: Format, base: Base) -> String {
    match format {
        Format::Decimal => v.to_string(),
        Format::Base => render_in_base(v, base),
    }
}

/// One deterministic stdout line per outcome; elapsed goes to stderr.
fn print_outcome(out: &SearchOutcome, format: Format, base: Base, cached: bool) -> ExitCode {
    let suffix = if cached { " cached=1" } else { "" };
    let code = match out.status {
        Status::Found => {
            let v = out.value.as_ref().expect("found value");
            println!(
                "FOUND {} digits={} evals={}{}",
                render_value(v, format, base),
                to_digits(v, base).len(),
                out.evaluations,
                suffix
            );
            ExitCode::SUCCESS
        }
        Status::NotExists => {
            match &out.certificate {
                Some(c) => println!(
                    "NOT_EXISTS certificate={} digits={} evals={}{}",
                    render_value(c, format, base),
                    to_digits(c, base).len(),
                    out.evaluations,
                    suffix
                ),
                None => println!(
                    "NOT_EXISTS bound={} evals={}{}",
                    out.bound_used, out.evaluations, suffix
                ),
            }
            ExitCode::SUCCESS
        }
        Status::Unresolved => {
            println!(
                "UNRESOLVED bound={} evals={}{}",
                out.bound_used, out.evaluations, suffix
            );
            ExitCode::from(EXIT_UNRESOLVED)
        }
    };
    eprintln!("elapsed={:.3}", out.elapsed);
    code
}

/// A cached record still has to satisfy its relation; one f evaluation
/// decides. Returns false when the record is stale or inconsistent.
fn revalidate(rec: &CacheRecord, sticker: &Sticker) -> bool {
    match (rec.status, &rec.value) {
        (Status::Found, Some(v)) => {
            let fv = f(v, sticker);
            match rec.kind {
                Kind::Ge => fv >= *v,
                Kind::Gt => fv > *v,
                Kind::Eq | Kind::Zero => fv == *v,
                Kind::Enum => true,
            }
        }
        (Status::NotExists, Some(cert)) => stop_rule_fired(cert, &f(cert, sticker), sticker),
        _ => true,
    }
}

fn outcome_from_record(rec: &CacheRecord) -> SearchOutcome {
    let (value, certificate) = match rec.status {
        Status::Found => (rec.value.clone(), None),
        _ => (None, rec.value.clone()),
    };
    SearchOutcome {
        status: rec.status,
        value,
        certificate,
        bound_used: rec.bound.clone(),
        evaluations: 0,
        elapsed: 0.0,
    }
}

fn record_from_outcome(
    kind: Kind,
    base: Base,
    sticker_text: &str,
    out: &SearchOutcome,
) -> CacheRecord {
    CacheRecord {
        kind,
        base: base.get(),
        sticker: sticker_text.to_string(),
        status: out.status,
        value: out.value.clone().or_else(|| out.certificate.clone()),
        bound: out.bound_used.clone(),
        elapsed: out.elapsed,
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_find(
    base: Base,
    relation: Relation,
    sticker_text: &str,
    min: Option<String>,
    bound: Option<String>,
    format: Format,
    cfg: &Config,
    cache: Option<&Cache>,
    progress: bool,
) -> Result<ExitCode, String> {
    let sticker = parse_sticker(sticker_text, base)?;
    let canonical = sticker.to_string();
    let kind = match relation {
        Relation::Ge => Kind::Ge,
        Relation::Gt => Kind::Gt,
        Relation::Eq => Kind::Eq,
    };
    let default_min = match relation {
        Relation::Eq => Natural::from(2u32),
        _ => Natural::from(1u32),
    };
    let custom_min = min.is_some();
    let min_x = match min {
        Some(text) => parse_value(&text, "min")?,
        None => default_min,
    };
    let bound_v = match bound {
        Some(text) => parse_value(&text, "bound")?,
        None => cfg
            .default_bound_override
            .clone()
            .unwrap_or_else(|| solution_bound(&sticker)),
    };

    // Cached answers only describe the canonical search start.
    if !custom_min {
        if let Some(cache) = cache {
            let key_bound = match relation {
                Relation::Eq => bound_v.clone(),
                _ => Natural::from(0u32),
            };
            if let Some(rec) = cache
                .lookup(kind, base.get(), &canonical, &key_bound)
                .map_err(|e| e.to_string())?
            {
                if revalidate(&rec, &sticker) {
                    return Ok(print_outcome(&outcome_from_record(&rec), format, base, true));
                }
                eprintln!("warning: cached record failed revalidation; recomputing");
            }
        }
    }

    let mut s = searcher_for(progress, cfg.progress_interval, kind, base, &canonical);
    let out = match relation {
        Relation::Ge => s.find_a_ge(&sticker, &min_x),
        Relation::Gt => s.find_a_gt(&sticker),
        Relation::Eq => s
            .find_a_eq(&sticker, &min_x, &bound_v)
            .map_err(|e| e.to_string())?,
    };
    if !custom_min {
        if let Some(cache) = cache {
            cache
                .append(&record_from_outcome(kind, base, &canonical, &out))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(print_outcome(&out, format, base, false))
}

fn cmd_enumerate(
    base: Base,
    sticker_text: &str,
    bound: Option<String>,
    limit: Option<usize>,
    cfg: &Config,
    cache: Option<&Cache>,
    progress: bool,
) -> Result<ExitCode, String> {
    let sticker = parse_sticker(sticker_text, base)?;
    let canonical = sticker.to_string();
    let bound_v = match bound {
        Some(text) => parse_value(&text, "bound")?,
        None => cfg
            .default_bound_override
            .clone()
            .unwrap_or_else(|| solution_bound(&sticker)),
    };
    let mut s = searcher_for(progress, cfg.progress_interval, Kind::Enum, base, &canonical);
    let res = s.enumerate_solutions(&sticker, &bound_v);
    drop(s);
    let shown = limit.unwrap_or(res.solutions.len());
    for v in res.solutions.iter().take(shown) {
        println!("{v}");
    }
    println!(
        "count={} max={} complete={} bound={}",
        res.count,
        res.max
            .as_ref()
            .map(|m| m.to_string())
            .unwrap_or_else(|| "-".to_string()),
        res.complete,
        res.bound_used
    );
    if let Some(cache) = cache {
        let status = if res.complete {
            Status::Found
        } else {
            Status::Unresolved
        };
        cache
            .append(&CacheRecord {
                kind: Kind::Enum,
                base: base.get(),
                sticker: canonical,
                status,
                value: Some(Natural::from(res.count)),
                bound: res.bound_used.clone(),
                elapsed: 0.0,
            })
            .map_err(|e| e.to_string())?;
    }
    if res.complete {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_UNRESOLVED))
    }
}

fn cmd_table(name: &str, long: bool) -> Result<ExitCode, String> {
    let table_name: TableName = name.parse().map_err(|e: archive_label::Error| e.to_string())?;
    let table = sequences::table(table_name, long);
    print!("{}", table.to_text());
    Ok(ExitCode::SUCCESS)
}

fn cmd_bfile(
    seq_id: &str,
    out: Option<PathBuf>,
    from: Option<u64>,
    count: Option<u64>,
) -> Result<ExitCode, String> {
    let spec = sequences::lookup(seq_id).map_err(|e| e.to_string())?;
    let count = count.unwrap_or_else(|| default_bfile_count(&spec));
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(&path).map_err(|e| e.to_string())?;
            sequences::export_bfile(seq_id, from, count, &mut file).map_err(|e| e.to_string())?;
            file.flush().map_err(|e| e.to_string())?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            sequences::export_bfile(seq_id, from, count, &mut lock).map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn default_bfile_count(spec: &sequences::SequenceSpec) -> u64 {
    use sequences::SeqKind::*;
    match spec.kind {
        OnesCount | ZerosCount => 100,
        ExactlyByDigit | MoreThanByDigit | GeByDigit | SolutionCounts => 9,
        SolutionsOfDigit(_) => 400, // stops at the actual sequence length
        OnesMoreThanByBase | OnesSolutionCountByBase | OnesLargestSolutionByBase => 9,
        BasesWithoutZeroSolution => 15,
        OutOfScope(_) => 0,
    }
}

fn cmd_zero_status(
    base: Base,
    cache: Option<&Cache>,
    cfg: &Config,
    progress: bool,
) -> Result<ExitCode, String> {
    let sticker = Sticker::digit(base, 0).map_err(|e| e.to_string())?;
    let canonical = sticker.to_string();
    if let Some(cache) = cache {
        if let Some(rec) = cache
            .lookup(Kind::Zero, base.get(), &canonical, &Natural::from(0u32))
            .map_err(|e| e.to_string())?
        {
            if revalidate(&rec, &sticker) {
                print_zero(&outcome_from_record(&rec));
                return Ok(ExitCode::SUCCESS);
            }
            eprintln!("warning: cached record failed revalidation; recomputing");
        }
    }
    let mut s = searcher_for(progress, cfg.progress_interval, Kind::Zero, base, &canonical);
    let out = s.classify_zero(base);
    if let Some(cache) = cache {
        cache
            .append(&record_from_outcome(Kind::Zero, base, &canonical, &out))
            .map_err(|e| e.to_string())?;
    }
    print_zero(&out);
    Ok(ExitCode::SUCCESS)
}

fn print_zero(out: &SearchOutcome) {
    match out.status {
        Status::Found => println!("FOUND {}", out.value.as_ref().expect("found value")),
        Status::NotExists => println!(
            "NOT_EXISTS certificate={}",
            out.certificate
                .as_ref()
                .map(|c| c.to_string())
                .unwrap_or_else(|| "-".to_string())
        ),
        Status::Unresolved => println!("UNRESOLVED bound={}", out.bound_used),
    }
}

fn parse_base_list(text: &str) -> Result<Vec<u32>, String> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: u32 = lo.parse().map_err(|_| format!("malformed base range {text:?}"))?;
        let hi: u32 = hi.parse().map_err(|_| format!("malformed base range {text:?}"))?;
        if lo < 2 || hi < lo {
            return Err(format!("malformed base range {text:?}"));
        }
        Ok((lo..=hi).collect())
    } else {
        text.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("malformed base list {text:?}"))
            })
            .collect()
    }
}

fn cmd_verify(
    base: Base,
    max: u64,
    bases: Option<String>,
    stickers: Option<String>,
) -> Result<ExitCode, String> {
    if max > BRUTE_GUARD {
        return Err(format!("verify max is guarded to {BRUTE_GUARD}"));
    }
    let base_list = match bases {
        Some(text) => parse_base_list(&text)?,
        None => vec![base.get()],
    };
    let mut mismatches = 0u64;
    let mut pairs = 0u64;
    for bv in base_list {
        let b = Base::new(bv).map_err(|e| e.to_string())?;
        let sticker_list: Vec<Sticker> = match &stickers {
            Some(text) => text
                .split(',')
                .map(|part| parse_sticker(part.trim(), b))
                .collect::<Result<_, _>>()?,
            None => (0..bv)
                .map(|dv| Sticker::digit(b, dv).expect("digit below base"))
                .collect(),
        };
        for sticker in sticker_list {
            pairs += 1;
            f_brute_scan(max, &sticker, |x, brute_total| {
                let closed = f(&Natural::from(x), &sticker);
                if closed != Natural::from(brute_total) {
                    mismatches += 1;
                    println!(
                        "MISMATCH base={} sticker={} x={} f={} brute={}",
                        bv, sticker, x, closed, brute_total
                    );
                }
            });
        }
    }
    eprintln!("verified {pairs} (base, sticker) pairs up to {max}");
    if mismatches == 0 {
        println!("OK");
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}
