//! Named generators for the OEIS sequences this crate reproduces, table
//! renderers, and b-file export.
//!
//! Every registry entry is deterministic: the same id and index range always
//! produce the same values, recomputed from the counting and search layers.
//! OEIS offset quirks (A130432 counts solutions as if labeling started at
//! tape 0) live in the registry entry, never in the generator itself.

use num_traits::One;
use std::io::Write;

use crate::counting::f;
use crate::error::Error;
use crate::numerals::{render_in_base, to_digits, Base, Natural, Sticker};
use crate::search::{self, Searcher, Status};

/// Compute budget class of a generator, advisory for front ends: `Fast`
/// finishes in seconds, `Desk` within minutes, `Long` is opt-in only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Fast,
    Desk,
    Long,
}

/// One registry entry: an OEIS id, what it holds, and how it is produced.
#[derive(Debug, Clone)]
pub struct SequenceSpec {
    pub id: &'static str,
    pub description: &'static str,
    /// First index of the sequence (OEIS offset).
    pub first_index: u64,
    /// Added to every generated value; +1 where the OEIS entry counts from
    /// tape 0 while the generator counts labeled tapes from 1.
    pub value_offset: u32,
    pub budget: Budget,
    pub kind: SeqKind,
}

/// How a registry entry produces values (or why it does not).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    /// f_1(x, 10) by index x.
    OnesCount,
    /// f_0(x, 10) by index x.
    ZerosCount,
    /// a_=(d, 10) by digit d.
    ExactlyByDigit,
    /// a_>(d, 10) by digit d.
    MoreThanByDigit,
    /// a_>=(d, 10) by digit d.
    GeByDigit,
    /// E_d(i): i-th solution of f_d(x, 10) = x, for a fixed digit.
    SolutionsOfDigit(u32),
    /// |E_d| by digit d (value offset applies).
    SolutionCounts,
    /// a_>(1, b) by base b; the unary term is a documented constant.
    OnesMoreThanByBase,
    /// Number of solutions of f_1(x, b) = x, by base b.
    OnesSolutionCountByBase,
    /// Largest solution of f_1(x, b) = x, by base b (closed form).
    OnesLargestSolutionByBase,
    /// i-th base b >= 2 in which a_=(0, b) has no solution.
    BasesWithoutZeroSolution,
    /// Catalogued for cross-reference but intentionally not generated here.
    OutOfScope(&'static str),
}

/// a_>(1, 1) = 2: in unary every numeral is a run of ones, so the count
/// passes the index at the second tape. Kept as a constant because unary is
/// not a positional base and the counting machinery excludes it.
pub const ONES_MORE_THAN_UNARY: u32 = 2;

/// The registry of every sequence the surrounding text trail cites.
pub fn registry() -> Vec<SequenceSpec> {
    use SeqKind::*;
    let e_d = |id, d: u32, n| SequenceSpec {
        id,
        description: n,
        first_index: 1,
        value_offset: 0,
        budget: Budget::Desk,
        kind: SolutionsOfDigit(d),
    };
    vec![
        SequenceSpec {
            id: "A094798",
            description: "count of 1s in decimal numerals of 1..x",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Fast,
            kind: OnesCount,
        },
        SequenceSpec {
            id: "A061217",
            description: "count of 0s in decimal numerals of 1..x",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Fast,
            kind: ZerosCount,
        },
        SequenceSpec {
            id: "A163500",
            description: "a_=(d): least x > 1 with f_d(x) = x, base 10",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Fast,
            kind: ExactlyByDigit,
        },
        SequenceSpec {
            id: "A164321",
            description: "a_>(d): least x with f_d(x) > x, base 10",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Fast,
            kind: MoreThanByDigit,
        },
        SequenceSpec {
            id: "A164935",
            description: "a_>=(d): least x with f_d(x) >= x, base 10",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Fast,
            kind: GeByDigit,
        },
        e_d("A014778", 1, "solutions of f_1(x) = x"),
        e_d("A101639", 2, "solutions of f_2(x) = x"),
        e_d("A101640", 3, "solutions of f_3(x) = x"),
        e_d("A101641", 4, "solutions of f_4(x) = x"),
        e_d("A130427", 5, "solutions of f_5(x) = x"),
        e_d("A130428", 6, "solutions of f_6(x) = x"),
        e_d("A130429", 7, "solutions of f_7(x) = x"),
        e_d("A130430", 8, "solutions of f_8(x) = x"),
        e_d("A130431", 9, "solutions of f_9(x) = x"),
        SequenceSpec {
            id: "A130432",
            description: "number of solutions of f_d(x) = x, counting tapes from 0",
            first_index: 1,
            value_offset: 1,
            budget: Budget::Desk,
            kind: SolutionCounts,
        },
        SequenceSpec {
            id: "A092175",
            description: "a_>(1, b) across bases",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Desk,
            kind: OnesMoreThanByBase,
        },
        SequenceSpec {
            id: "A165617",
            description: "number of solutions of f_1(x, b) = x",
            first_index: 2,
            value_offset: 0,
            budget: Budget::Desk,
            kind: OnesSolutionCountByBase,
        },
        SequenceSpec {
            id: "A226238",
            description: "largest solution of f_1(x, b) = x: b-1 ones then a zero, in base b",
            first_index: 2,
            value_offset: 0,
            budget: Budget::Fast,
            kind: OnesLargestSolutionByBase,
        },
        SequenceSpec {
            id: "A364972",
            description: "bases b in which a_=(0, b) does not exist",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Desk,
            kind: BasesWithoutZeroSolution,
        },
        SequenceSpec {
            id: "A033307",
            description: "Champernowne digit stream",
            first_index: 1,
            value_offset: 0,
            budget: Budget::Fast,
            kind: OutOfScope("cited only as context for digit densities; not a counting sequence"),
        },
    ]
}

/// Look up a registry entry by id.
pub fn lookup(id: &str) -> Result<SequenceSpec, Error> {
    registry()
        .into_iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSequence(id.to_string()))
}

fn base10() -> Base {
    Base::new(10).expect("ten")
}

fn digit10(d: u32) -> Sticker {
    Sticker::digit(base10(), d).expect("decimal digit")
}

/// a_=(d, b) for every nonzero digit d of base b, in digit order.
pub fn gen_a_eq_digits(base: Base) -> Vec<Natural> {
    let mut s = Searcher::new();
    (1..base.get())
        .map(|dv| {
            let d = Sticker::digit(base, dv).expect("digit");
            let min_x = if dv == 1 {
                Natural::from(2u32)
            } else {
                Natural::one()
            };
            s.find_a_eq(&d, &min_x, &search::solution_bound(&d))
                .expect("min below bound")
                .value
                .expect("single nonzero digits always have an equality solution")
        })
        .collect()
}

/// a_>(1, b) for b = 2..=b_max, as (base, value) pairs.
pub fn gen_a_gt_ones(b_max: u32) -> Vec<(u32, Natural)> {
    let mut s = Searcher::new();
    (2..=b_max)
        .map(|bv| {
            let d = Sticker::digit(Base::new(bv).expect("b >= 2"), 1).expect("one");
            (bv, s.find_a_gt(&d).value.expect("gt found"))
        })
        .collect()
}

/// Number of solutions of f_1(x, b) = x.
pub fn count_f1_solutions(base: Base) -> u64 {
    let d = Sticker::digit(base, 1).expect("one");
    let out = search::enumerate_solutions(&d, &search::solution_bound(&d));
    debug_assert!(out.complete);
    out.count as u64
}

/// Largest solution of f_1(x, b) = x in closed form: b-1 ones followed by a
/// zero in base b, i.e. (b^b - b) / (b - 1).
pub fn largest_f1_solution(base: Base) -> Natural {
    let b = base.get();
    (Natural::from(b).pow(b) - b) / (b - 1)
}

/// Bases 2..=b_max in which a_=(0, b) has no solution.
pub fn bases_without_zero_solution(b_max: u32) -> Vec<u32> {
    let mut s = Searcher::new();
    (2..=b_max)
        .filter(|&bv| {
            s.classify_zero(Base::new(bv).expect("b >= 2")).status == Status::NotExists
        })
        .collect()
}

/// Generate `count` values of a sequence starting at `from` (defaults to the
/// registry offset when `from` is `None`).
pub fn generate(id: &str, from: Option<u64>, count: u64) -> Result<Vec<(u64, Natural)>, Error> {
    let spec = lookup(id)?;
    if let SeqKind::OutOfScope(note) = spec.kind {
        return Err(Error::OutOfScopeSequence {
            id: id.to_string(),
            note: note.to_string(),
        });
    }
    let from = from.unwrap_or(spec.first_index);
    if from < spec.first_index {
        return Err(Error::IndexBeforeOffset {
            id: id.to_string(),
            index: from,
            offset: spec.first_index,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut s = Searcher::new();
    match spec.kind {
        SeqKind::OnesCount | SeqKind::ZerosCount => {
            let d = digit10(if spec.kind == SeqKind::OnesCount { 1 } else { 0 });
            for i in from..from + count {
                out.push((i, f(&Natural::from(i), &d)));
            }
        }
        SeqKind::ExactlyByDigit => {
            for i in from..from + count {
                let d = digit10(digit_index(i)?);
                let min_x = if i == 1 {
                    Natural::from(2u32)
                } else {
                    Natural::one()
                };
                let v = s
                    .find_a_eq(&d, &min_x, &search::solution_bound(&d))
                    .expect("min below bound")
                    .value
                    .expect("exists for nonzero digits");
                out.push((i, v));
            }
        }
        SeqKind::MoreThanByDigit => {
            for i in from..from + count {
                let d = digit10(digit_index(i)?);
                out.push((i, s.find_a_gt(&d).value.expect("gt found")));
            }
        }
        SeqKind::GeByDigit => {
            for i in from..from + count {
                let d = digit10(digit_index(i)?);
                out.push((i, s.find_a_ge(&d, &Natural::one()).value.expect("ge found")));
            }
        }
        SeqKind::SolutionsOfDigit(dv) => {
            let d = digit10(dv);
            let sols = s
                .enumerate_solutions(&d, &search::solution_bound(&d))
                .solutions;
            for i in from..from + count {
                let idx = (i - 1) as usize;
                if idx >= sols.len() {
                    break;
                }
                out.push((i, sols[idx].clone()));
            }
        }
        SeqKind::SolutionCounts => {
            for i in from..from + count {
                let d = digit10(digit_index(i)?);
                let res = s.enumerate_solutions(&d, &search::solution_bound(&d));
                debug_assert!(res.complete);
                out.push((i, Natural::from(res.count)));
            }
        }
        SeqKind::OnesMoreThanByBase => {
            for i in from..from + count {
                if i == 1 {
                    out.push((i, Natural::from(ONES_MORE_THAN_UNARY)));
                    continue;
                }
                let d = Sticker::digit(base_index(i)?, 1).expect("one");
                out.push((i, s.find_a_gt(&d).value.expect("gt found")));
            }
        }
        SeqKind::OnesSolutionCountByBase => {
            for i in from..from + count {
                out.push((i, Natural::from(count_f1_solutions(base_index(i)?))));
            }
        }
        SeqKind::OnesLargestSolutionByBase => {
            for i in from..from + count {
                out.push((i, largest_f1_solution(base_index(i)?)));
            }
        }
        SeqKind::BasesWithoutZeroSolution => {
            let wanted = (from + count - 1) as usize;
            let mut found: Vec<u32> = Vec::new();
            let mut bv = 2u32;
            while found.len() < wanted {
                if s.classify_zero(Base::new(bv).expect("b >= 2")).status == Status::NotExists {
                    found.push(bv);
                }
                bv += 1;
            }
            for i in from..from + count {
                out.push((i, Natural::from(found[(i - 1) as usize])));
            }
        }
        SeqKind::OutOfScope(_) => unreachable!("rejected above"),
    }
    if spec.value_offset != 0 {
        for (_, v) in &mut out {
            *v += spec.value_offset;
        }
    }
    Ok(out)
}

fn digit_index(i: u64) -> Result<u32, Error> {
    if (1..=9).contains(&i) {
        Ok(i as u32)
    } else {
        Err(Error::IndexBeforeOffset {
            id: "digit-indexed sequence".to_string(),
            index: i,
            offset: 1,
        })
    }
}

fn base_index(i: u64) -> Result<Base, Error> {
    Base::new(u32::try_from(i).map_err(|_| Error::InvalidBase(u32::MAX))?)
}

/// An OEIS b-file: consecutive (index, value) lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub lines: Vec<(u64, Natural)>,
}

impl BFile {
    pub fn new(lines: Vec<(u64, Natural)>) -> Self {
        debug_assert!(lines.windows(2).all(|w| w[1].0 == w[0].0 + 1));
        BFile { lines }
    }

    /// The exact on-disk format: `index<space>value<newline>` per line,
    /// ASCII, LF, no trailing blank line.
    pub fn write_to(&self, out: &mut impl Write) -> std::io::Result<()> {
        for (i, v) in &self.lines {
            writeln!(out, "{i} {v}")?;
        }
        Ok(())
    }
}

/// Generate a sequence range and write it as a b-file.
pub fn export_bfile(
    id: &str,
    from: Option<u64>,
    count: u64,
    out: &mut impl Write,
) -> Result<BFile, Error> {
    let bfile = BFile::new(generate(id, from, count)?);
    bfile.write_to(out)?;
    Ok(bfile)
}

/// The tables reproduced from the search layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableName {
    /// a_= and a_> for d = 1..9, base 10.
    T1AeqAgt,
    /// E_d lengths and their OEIS ids.
    T2EdLengths,
    /// max(E_d) for d = 1..9.
    T3EdMax,
    /// Bases where a_=(0, b) exists, with its value.
    T4ZeroBases,
    /// Solutions of f_d(x, 2) = x for power-of-two stickers, with bit sizes.
    T5Base2Pow2,
    /// a_=(<1,0>_b, b): value rendered in base b, with digit length.
    T6A10Bases,
}

impl std::str::FromStr for TableName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "T1_AEQ_AGT" => Ok(TableName::T1AeqAgt),
            "T2_ED_LENGTHS" => Ok(TableName::T2EdLengths),
            "T3_ED_MAX" => Ok(TableName::T3EdMax),
            "T4_ZERO_BASES" => Ok(TableName::T4ZeroBases),
            "T5_BASE2_POW2" => Ok(TableName::T5Base2Pow2),
            "T6_A10_BASES" => Ok(TableName::T6A10Bases),
            other => Err(Error::UnknownTable(other.to_string())),
        }
    }
}

impl std::fmt::Display for TableName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TableName::T1AeqAgt => "T1_AEQ_AGT",
            TableName::T2EdLengths => "T2_ED_LENGTHS",
            TableName::T3EdMax => "T3_ED_MAX",
            TableName::T4ZeroBases => "T4_ZERO_BASES",
            TableName::T5Base2Pow2 => "T5_BASE2_POW2",
            TableName::T6A10Bases => "T6_A10_BASES",
        })
    }
}

/// A recomputed table: rows of cells, every cell a decimal rendering (or a
/// status marker for cells whose budget was not granted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: TableName,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// Canonical text rendering: one row per line, cells joined by single
    /// spaces. Rendering is deterministic, so repeated calls are
    /// byte-identical.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

const E_D_IDS: [&str; 9] = [
    "A014778", "A101639", "A101640", "A101641", "A130427", "A130428", "A130429", "A130430",
    "A130431",
];

/// Recompute a table. `long` grants the expensive cells (larger Table 4
/// bases, Table 5 stickers past 32); without it those rows are omitted or
/// marked UNRESOLVED.
pub fn table(name: TableName, long: bool) -> Table {
    let mut s = Searcher::new();
    let rows = match name {
        TableName::T1AeqAgt => {
            let eqs = gen_a_eq_digits(base10());
            (1..=9u32)
                .map(|dv| {
                    let gt = s.find_a_gt(&digit10(dv)).value.expect("gt found");
                    vec![
                        dv.to_string(),
                        eqs[(dv - 1) as usize].to_string(),
                        gt.to_string(),
                    ]
                })
                .collect()
        }
        TableName::T2EdLengths => (1..=9u32)
            .map(|dv| {
                let d = digit10(dv);
                let res = s.enumerate_solutions(&d, &search::solution_bound(&d));
                vec![
                    dv.to_string(),
                    E_D_IDS[(dv - 1) as usize].to_string(),
                    res.count.to_string(),
                ]
            })
            .collect(),
        TableName::T3EdMax => (1..=9u32)
            .map(|dv| {
                let d = digit10(dv);
                let res = s.enumerate_solutions(&d, &search::solution_bound(&d));
                vec![dv.to_string(), res.max.expect("nonempty").to_string()]
            })
            .collect(),
        TableName::T4ZeroBases => {
            let b_max = if long { 31 } else { 16 };
            (2..=b_max)
                .filter_map(|bv| {
                    let out = s.classify_zero(Base::new(bv).expect("b >= 2"));
                    out.value.map(|v| vec![bv.to_string(), v.to_string()])
                })
                .collect()
        }
        TableName::T5Base2Pow2 => {
            let two = Base::new(2).expect("two");
            let exps: &[u32] = if long {
                &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]
            } else {
                &[1, 2, 3, 4, 5]
            };
            exps.iter()
                .map(|&e| {
                    let mut digits = vec![1u32];
                    digits.extend(std::iter::repeat_n(0, e as usize));
                    let d = Sticker::new(two, digits).expect("power of two");
                    let dv = Natural::from(2u32).pow(e);
                    let out = s
                        .find_a_eq(&d, &Natural::one(), &search::solution_bound(&d))
                        .expect("min below bound");
                    match out.status {
                        Status::Found => {
                            let v = out.value.expect("found");
                            let bits = v.bits();
                            vec![dv.to_string(), v.to_string(), bits.to_string()]
                        }
                        _ => vec![dv.to_string(), "UNRESOLVED".to_string(), "-".to_string()],
                    }
                })
                .collect()
        }
        TableName::T6A10Bases => (2..=6u32)
            .map(|bv| {
                let base = Base::new(bv).expect("b >= 2");
                let d = Sticker::new(base, vec![1, 0]).expect("<1,0>");
                let v = s
                    .find_a_eq(&d, &Natural::one(), &search::solution_bound(&d))
                    .expect("min below bound")
                    .value
                    .expect("solution exists for <1,0> in small bases");
                let digits = to_digits(&v, base).len();
                vec![
                    bv.to_string(),
                    digits.to_string(),
                    format!("{}_{}", render_in_base(&v, base), bv),
                ]
            })
            .collect(),
    };
    Table { name, rows }
}
