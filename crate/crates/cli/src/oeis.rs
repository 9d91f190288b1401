//! End-to-end comparison of `L_n`-derived values with OEIS b-files.
//!
//! Values are computed by building `L_n` and evaluating it, never through
//! the divisor-class closed forms, so a disagreement here implicates either
//! the construction or the file.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use divpoly_core::{Family, Natural, SpfSieve, SymmetricLaurentPoly};

use crate::bfile::BFileEntry;
use crate::report::{Counterexample, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    /// `r_{1,1,1}(n)/6 = 4σ(n) - 3 L_n(1)`
    A002324,
    /// `r_{1,0,3}(n)/2 = L_n(-1)`
    A096936,
}

impl Sequence {
    pub fn name(self) -> &'static str {
        match self {
            Sequence::A002324 => "A002324",
            Sequence::A096936 => "A096936",
        }
    }

    pub fn via_l(self, sieve: &SpfSieve, n: Natural) -> i64 {
        let divs = sieve.divisors(n);
        let l = SymmetricLaurentPoly::from_divisors(&divs, Family::L);
        match self {
            Sequence::A002324 => 4 * divs.sum() - 3 * l.eval_at_one(),
            Sequence::A096936 => l.eval_at_minus_one(),
        }
    }
}

impl FromStr for Sequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A002324" => Ok(Sequence::A002324),
            "A096936" => Ok(Sequence::A096936),
            other => Err(format!("unsupported sequence '{other}' (expected A002324 or A096936)")),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OeisError {
    #[error("range {lo}..{hi} is outside the b-file's index span {first}..{last}")]
    OutOfSpan { lo: u64, hi: u64, first: i64, last: i64 },
    #[error("b-file has no positive indices")]
    NoPositiveIndices,
    #[error("b-file is missing {} indices in range: {}", .0.len(), format_gaps(.0))]
    MissingIndices(Vec<u64>),
}

fn format_gaps(gaps: &[u64]) -> String {
    const SHOWN: usize = 20;
    let mut s: Vec<String> = gaps.iter().take(SHOWN).map(u64::to_string).collect();
    if gaps.len() > SHOWN {
        s.push("...".to_string());
    }
    s.join(", ")
}

/// Compares every index of `range` (default: all positive indices in the file).
pub fn oeis_check(
    sequence: Sequence,
    entries: &[BFileEntry],
    range: Option<(u64, u64)>,
) -> Result<VerificationReport, OeisError> {
    let positive: Vec<&BFileEntry> = entries.iter().filter(|e| e.index >= 1).collect();
    let (Some(first), Some(last)) = (positive.first(), positive.last()) else {
        return Err(OeisError::NoPositiveIndices);
    };
    let (lo, hi) = range.unwrap_or((first.index as u64, last.index as u64));
    if (lo as i64) < first.index || (hi as i64) > last.index {
        return Err(OeisError::OutOfSpan { lo, hi, first: first.index, last: last.index });
    }
    let in_range: Vec<&BFileEntry> =
        positive.into_iter().filter(|e| (lo as i64..=hi as i64).contains(&e.index)).collect();
    if in_range.len() as u64 != hi - lo + 1 {
        let mut gaps = Vec::new();
        let mut present = in_range.iter().map(|e| e.index as u64).peekable();
        for n in lo..=hi {
            if present.peek() == Some(&n) {
                present.next();
            } else {
                gaps.push(n);
            }
        }
        return Err(OeisError::MissingIndices(gaps));
    }

    let start = Instant::now();
    let sieve = SpfSieve::new(hi);
    let mut report = VerificationReport::empty(format!("oeis/{sequence}"), lo, hi);
    for entry in in_range {
        let n = Natural::new(entry.index as u64).expect("positive index");
        let computed = sequence.via_l(&sieve, n);
        report.record(if computed == entry.value {
            Ok(())
        } else {
            Err(Counterexample::new(n.get(), entry.value, computed))
        });
    }
    report.set_elapsed(start.elapsed());
    Ok(report)
}
