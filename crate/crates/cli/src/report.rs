use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// The first index at which an identity failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    pub expected: i64,
    pub actual: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Counterexample {
    pub fn new(n: u64, expected: i64, actual: i64) -> Self {
        Counterexample { n, expected, actual, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Pass/fail tally of one identity over an index range.
///
/// `pass + fail` always equals the range size, and a counterexample is
/// recorded exactly when `fail > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub lo: u64,
    pub hi: u64,
    pub pass: u64,
    pub fail: u64,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    pub fn empty(identity: impl Into<String>, lo: u64, hi: u64) -> Self {
        VerificationReport {
            identity: identity.into(),
            lo,
            hi,
            pass: 0,
            fail: 0,
            counterexample: None,
            elapsed_ms: 0.0,
        }
    }

    pub fn record(&mut self, outcome: Result<(), Counterexample>) {
        match outcome {
            Ok(()) => self.pass += 1,
            Err(cx) => {
                self.fail += 1;
                if self.counterexample.as_ref().is_none_or(|prev| cx.n < prev.n) {
                    self.counterexample = Some(cx);
                }
            }
        }
    }

    /// Combines reports over adjacent or overlapping chunks of the same identity.
    /// Associative and commutative in everything but `elapsed_ms`, which is summed.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        debug_assert_eq!(self.identity, other.identity);
        self.lo = self.lo.min(other.lo);
        self.hi = self.hi.max(other.hi);
        self.pass += other.pass;
        self.fail += other.fail;
        self.counterexample = match (self.counterexample.take(), other.counterexample) {
            (Some(a), Some(b)) => Some(if b.n < a.n { b } else { a }),
            (a, b) => a.or(b),
        };
        self.elapsed_ms += other.elapsed_ms;
        self
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed_ms = (elapsed.as_secs_f64() * 1e6).round() / 1e3;
    }

    pub fn passed(&self) -> bool {
        self.fail == 0
    }

    /// The report without its timing, for comparisons.
    pub fn untimed(&self) -> VerificationReport {
        VerificationReport { elapsed_ms: 0.0, ..self.clone() }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}..{}] pass={} fail={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.identity,
            self.lo,
            self.hi,
            self.pass,
            self.fail
        )?;
        if let Some(cx) = &self.counterexample {
            write!(f, " first: n={} expected={} actual={}", cx.n, cx.expected, cx.actual)?;
            if let Some(note) = &cx.note {
                write!(f, " ({note})")?;
            }
        }
        write!(f, " elapsed={:.3}ms", self.elapsed_ms)
    }
}
