//! OEIS b-file reader: one `n a(n)` pair per line, `#` comments.

use std::io::BufRead;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: i64,
}

#[derive(Debug, Error)]
pub enum BFileError {
    #[error("read failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected two integers \"n a(n)\", found {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: index {index} does not increase on previous index {previous}")]
    NonIncreasing { line: usize, previous: i64, index: i64 },
    #[error("b-file contains no entries")]
    Empty,
}

pub fn parse_bfile<R: BufRead>(reader: R) -> Result<Vec<BFileEntry>, BFileError> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || BFileError::Malformed { line: line_no, content: line.clone() };
        let mut fields = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: i64 = value.parse().map_err(|_| malformed())?;
        if let Some(prev) = entries.last() {
            if index <= prev.index {
                return Err(BFileError::NonIncreasing { line: line_no, previous: prev.index, index });
            }
        }
        entries.push(BFileEntry { index, value });
    }
    if entries.is_empty() {
        return Err(BFileError::Empty);
    }
    Ok(entries)
}
