//! Verification sweeps, OEIS b-file checks and output formats behind the
//! `divpoly` binary.

pub mod bfile;
pub mod oeis;
pub mod oracle;
pub mod output;
pub mod report;
pub mod suites;

pub use bfile::{parse_bfile, BFileEntry, BFileError};
pub use oeis::{oeis_check, OeisError, Sequence};
pub use output::Format;
pub use report::{Counterexample, VerificationReport};
pub use suites::{run_suite, Suite, VerifyOptions};

use std::str::FromStr;

/// `LO..HI`, both ends inclusive, `1 <= LO <= HI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
        let lo: u64 = lo.trim().parse().map_err(|_| format!("bad lower bound in '{s}'"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| format!("bad upper bound in '{s}'"))?;
        if lo < 1 || lo > hi {
            return Err(format!("range must satisfy 1 <= LO <= HI, got {lo}..{hi}"));
        }
        Ok(IndexRange { lo, hi })
    }
}
