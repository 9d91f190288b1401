//! Exact integer utilities, divisor enumeration and the closed forms of the
//! multiplicative functions the interval polynomials are checked against.
//!
//! Everything here is integer arithmetic. The only rounding primitives are
//! [`ceil_div`] and [`floor_div`]; every interval count in the crate goes
//! through them.

use std::fmt;

use crate::error::{Error, Result};

/// A positive integer index `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Natural(u64);

impl Natural {
    pub const ONE: Natural = Natural(1);

    pub fn new(value: u64) -> Result<Self> {
        if value == 0 {
            Err(Error::ZeroNatural)
        } else {
            Ok(Natural(value))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Signed view, for formulas that mix `n` with negative quantities.
    #[inline]
    pub fn signed(self) -> i128 {
        self.0 as i128
    }

    /// Iterate `lo..=hi`, skipping nothing. `lo` is clamped to 1.
    pub fn range_inclusive(lo: u64, hi: u64) -> impl Iterator<Item = Natural> + Clone {
        (lo.max(1)..=hi).map(Natural)
    }
}

impl TryFrom<u64> for Natural {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        Natural::new(value)
    }
}

impl From<Natural> for u64 {
    fn from(n: Natural) -> u64 {
        n.0
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `⌈numerator / denominator⌉` for any sign of the numerator.
///
/// # Panics
///
/// Panics if `denominator <= 0`.
#[inline]
pub fn ceil_div(numerator: i128, denominator: i128) -> i128 {
    -floor_div(-numerator, denominator)
}

/// `⌊numerator / denominator⌋` for any sign of the numerator.
///
/// # Panics
///
/// Panics if `denominator <= 0`.
#[inline]
pub fn floor_div(numerator: i128, denominator: i128) -> i128 {
    assert!(denominator > 0, "{}", Error::NonPositiveDenominator(denominator as i64));
    numerator.div_euclid(denominator)
}

/// `(-1)^exponent` for any integer exponent.
#[inline]
pub fn neg_one_pow(exponent: i128) -> i64 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Nonprincipal Dirichlet character modulo 3.
#[inline]
pub fn chi3(n: u64) -> i64 {
    match n % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// The divisors of `n` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    n: Natural,
    divisors: Vec<u64>,
}

impl DivisorList {
    /// Wraps an already sorted divisor list. Only used by enumerators in this crate.
    pub(crate) fn from_sorted(n: Natural, divisors: Vec<u64>) -> Self {
        debug_assert!(divisors.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(divisors.first(), Some(&1));
        debug_assert_eq!(divisors.last(), Some(&n.get()));
        DivisorList { n, divisors }
    }

    pub fn n(&self) -> Natural {
        self.n
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u64> + ExactSizeIterator + '_ {
        self.divisors.iter().copied()
    }

    /// τ(n).
    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    /// σ(n).
    pub fn sum(&self) -> i64 {
        self.divisors.iter().map(|&d| d as i64).sum()
    }

    /// Number of divisors congruent to `a` modulo `m`.
    pub fn count_mod(&self, a: i64, m: i64) -> Result<ResidueClassCount> {
        if m < 1 {
            return Err(Error::InvalidModulus(m));
        }
        let a = a.rem_euclid(m);
        let count = self
            .divisors
            .iter()
            .filter(|&&d| (d % m as u64) as i64 == a)
            .count() as u64;
        Ok(ResidueClassCount { n: self.n, a, m, count })
    }

    /// `d_{1,3}(n) - d_{2,3}(n)`.
    pub fn a002324(&self) -> i64 {
        self.divisors.iter().map(|&d| chi3(d)).sum()
    }

    /// `d_{1,3}(n) - d_{2,3}(n) + 2 (d_{4,12}(n) - d_{8,12}(n))`.
    pub fn a096936(&self) -> i64 {
        self.divisors
            .iter()
            .map(|&d| {
                chi3(d)
                    + match d % 12 {
                        4 => 2,
                        8 => -2,
                        _ => 0,
                    }
            })
            .sum()
    }

    /// `Σ_{d|n} (-1)^{n/d - 1} (-1)^{d - 1} χ₃(d)`.
    pub fn convolution_lhs(&self) -> i64 {
        let n = self.n.get();
        self.divisors
            .iter()
            .map(|&d| {
                let e = (n / d - 1) as i128 + (d - 1) as i128;
                neg_one_pow(e) * chi3(d)
            })
            .sum()
    }
}

/// `d_{a,m}(n)`: divisors of `n` in the residue class `a` mod `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueClassCount {
    pub n: Natural,
    /// Residue, reduced into `0..m`.
    pub a: i64,
    pub m: i64,
    pub count: u64,
}

/// All divisors of `n` by trial division up to `√n`.
pub fn divisors(n: Natural) -> DivisorList {
    let n_val = n.get();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n_val / d {
        if n_val.is_multiple_of(d) {
            small.push(d);
            if d != n_val / d {
                large.push(n_val / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    DivisorList::from_sorted(n, small)
}

pub fn sigma(n: Natural) -> i64 {
    divisors(n).sum()
}

pub fn divisor_count_mod(n: Natural, a: i64, m: i64) -> Result<ResidueClassCount> {
    divisors(n).count_mod(a, m)
}

/// `r_{1,1,1}(n) / 6` via its divisor-class closed form.
pub fn a002324_closed(n: Natural) -> i64 {
    divisors(n).a002324()
}

/// `r_{1,0,3}(n) / 2` via its divisor-class closed form.
pub fn a096936_closed(n: Natural) -> i64 {
    divisors(n).a096936()
}

pub fn convolution_lhs(n: Natural) -> i64 {
    divisors(n).convolution_lhs()
}

/// `((-1)^{⌊n/3⌋} - (-1)^{⌈n/3⌉}) / 2`, always in `{-1, 0, 1}`.
pub fn sign_halfdiff(n: Natural) -> i64 {
    let n = n.signed();
    let lo = neg_one_pow(floor_div(n, 3));
    let hi = neg_one_pow(ceil_div(n, 3));
    (lo - hi) / 2
}
