//! Divisor-interval polynomials.
//!
//! For a family with ratio `ρ` (3 for `L_n`, 2 for `P_n`) the coefficient of
//! `q^k` in `F_n(q)/q^{n-1}` counts the divisors `d | n` with
//!
//! ```text
//! d/ρ - n/d  <=  k  <  d - n/(ρd)
//! ```
//!
//! which is the logarithmic interval condition pulled back through the
//! increasing map `x ↦ e^x/ρ - n·e^{-x}`. Since `k` is an integer, the
//! admissible `k` form the half-open range
//! `[⌈(d² - ρn)/(ρd)⌉, ⌈(ρd² - n)/(ρd)⌉)`. No logarithm is ever evaluated.

use std::fmt;
use std::str::FromStr;

use crate::arith::{ceil_div, divisors, floor_div, DivisorList, Natural};
use crate::cyclotomic::{CyclotomicValue, EvalPoint};
use crate::error::{Error, Result};

/// Which interval length the polynomial family uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Intervals of length `ln 2`; the Kassel–Reutenauer polynomials `P_n`.
    P,
    /// Intervals of length `ln 3`; the polynomials `L_n`.
    L,
}

impl Family {
    pub const BOTH: [Family; 2] = [Family::L, Family::P];

    pub fn from_rho(rho: i64) -> Result<Self> {
        match rho {
            2 => Ok(Family::P),
            3 => Ok(Family::L),
            other => Err(Error::InvalidFamily(other)),
        }
    }

    pub fn rho(self) -> i64 {
        match self {
            Family::P => 2,
            Family::L => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::L => "L",
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "L" | "l" => Ok(Family::L),
            "P" | "p" => Ok(Family::P),
            other => Err(format!("unknown family '{other}' (expected L or P)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The contiguous block `lo..hi` (exclusive) of exponents `k` a divisor contributes to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HitRange {
    pub lo: i64,
    pub hi: i64,
}

impl HitRange {
    pub fn len(&self) -> u64 {
        (self.hi - self.lo) as u64
    }

    pub fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }

    pub fn contains(&self, k: i64) -> bool {
        self.lo <= k && k < self.hi
    }

    /// Number of `k` in the range with `k ≡ residue (mod m)`.
    pub fn count_congruent(&self, residue: i64, m: i64) -> i64 {
        let (lo, hi, r, m) = (self.lo as i128, self.hi as i128, residue as i128, m as i128);
        (floor_div(hi - 1 - r, m) - floor_div(lo - 1 - r, m)) as i64
    }
}

/// Caller guarantees `d | n`.
#[inline]
pub(crate) fn hit_range_unchecked(n: u64, d: u64, family: Family) -> HitRange {
    let (n, d, rho) = (n as i128, d as i128, family.rho() as i128);
    let den = rho * d;
    let lo = ceil_div(d * d - rho * n, den);
    let hi = ceil_div(rho * d * d - n, den);
    HitRange { lo: lo as i64, hi: hi as i64 }
}

/// The exact set of exponents `k` whose interval contains `ln d`.
pub fn hit_range(n: Natural, d: u64, family: Family) -> Result<HitRange> {
    if d == 0 || !n.get().is_multiple_of(d) {
        return Err(Error::NotADivisor { n: n.get(), d });
    }
    Ok(hit_range_unchecked(n.get(), d, family))
}

/// How many intervals of the family contain `ln d`.
pub fn hit_count(n: Natural, d: u64, family: Family) -> Result<u64> {
    hit_range(n, d, family).map(|r| r.len())
}

/// `F_n(q)/q^{n-1}` stored densely over `k ∈ [-(n-1), n-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricLaurentPoly {
    n: Natural,
    family: Family,
    coeffs: Vec<u32>,
}

impl SymmetricLaurentPoly {
    pub fn build(n: Natural, family: Family) -> Self {
        Self::from_divisors(&divisors(n), family)
    }

    /// Range-increments a difference array once per divisor, then prefix-sums.
    ///
    /// # Panics
    ///
    /// Panics if a divisor's hit range leaves `[-(n-1), n-1]`; the degree
    /// bound `2n - 2` rules that out.
    pub fn from_divisors(divs: &DivisorList, family: Family) -> Self {
        let n = divs.n();
        let center = (n.get() - 1) as i64;
        let len = 2 * center as usize + 1;
        let mut diff = vec![0i64; len + 1];
        for d in divs.iter() {
            let range = hit_range_unchecked(n.get(), d, family);
            assert!(
                range.lo >= -center && range.hi <= center + 1,
                "hit range {range:?} of d={d} escapes the window for n={n}"
            );
            diff[(range.lo + center) as usize] += 1;
            diff[(range.hi + center) as usize] -= 1;
        }
        let mut running = 0i64;
        let coeffs = diff[..len]
            .iter()
            .map(|&delta| {
                running += delta;
                u32::try_from(running).expect("coefficients are nonnegative counts")
            })
            .collect();
        SymmetricLaurentPoly { n, family, coeffs }
    }

    pub fn n(&self) -> Natural {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The power `n - 1` of `q` factored out.
    pub fn center(&self) -> i64 {
        (self.n.get() - 1) as i64
    }

    /// Coefficients for ascending `k` from `-(n-1)` to `n-1`.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero outside the window.
    pub fn coeff(&self, k: i64) -> u32 {
        let idx = k + self.center();
        if idx < 0 || idx as usize >= self.coeffs.len() {
            0
        } else {
            self.coeffs[idx as usize]
        }
    }

    /// `(k, c_k)` for ascending `k`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        let center = self.center();
        self.coeffs.iter().enumerate().map(move |(i, &c)| (i as i64 - center, c))
    }

    /// Both extreme coefficients equal 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs.first() == Some(&1) && self.coeffs.last() == Some(&1)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Sums of coefficients grouped by the exponent of `q` in `F_n` (not the
    /// centered one) modulo `m`. The index into `coeffs` is exactly that exponent.
    fn residue_sums(&self, m: usize) -> Vec<i64> {
        let mut sums = vec![0i64; m];
        for (i, &c) in self.coeffs.iter().enumerate() {
            sums[i % m] += c as i64;
        }
        sums
    }

    /// `F_n(1)`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().map(|&c| c as i64).sum()
    }

    /// `F_n(-1)`, including the `(-1)^{n-1}` prefactor.
    pub fn eval_at_minus_one(&self) -> i64 {
        let sums = self.residue_sums(2);
        sums[0] - sums[1]
    }

    /// `F_n(ζ_m)` for `m ∈ {3, 4, 6}`.
    pub fn eval_cyclotomic(&self, order: u32) -> Result<CyclotomicValue> {
        match order {
            3 | 4 | 6 => CyclotomicValue::from_residue_sums(order, &self.residue_sums(order as usize)),
            other => Err(Error::UnsupportedOrder(other)),
        }
    }

    /// `F_n` at any of the named points; orders 1 and 2 come back as integers.
    pub fn eval(&self, point: EvalPoint) -> CyclotomicValue {
        let order = point.order();
        CyclotomicValue::from_residue_sums(order, &self.residue_sums(order as usize))
            .expect("EvalPoint orders are supported")
    }
}

pub fn build_poly(n: Natural, family: Family) -> SymmetricLaurentPoly {
    SymmetricLaurentPoly::build(n, family)
}

/// `F_n` at a root of unity without materializing the coefficients: each
/// divisor's hit range contributes an arithmetic-progression count to every
/// residue class of the exponent. O(τ(n)) work and memory.
pub fn stream_eval(divs: &DivisorList, family: Family, point: EvalPoint) -> CyclotomicValue {
    let n = divs.n().get();
    let shift = (n - 1) as i64;
    let m = point.order() as i64;
    let mut sums = vec![0i64; m as usize];
    for d in divs.iter() {
        let range = hit_range_unchecked(n, d, family);
        let shifted = HitRange { lo: range.lo + shift, hi: range.hi + shift };
        for (r, s) in sums.iter_mut().enumerate() {
            *s += shifted.count_congruent(r as i64, m);
        }
    }
    CyclotomicValue::from_residue_sums(point.order(), &sums).expect("EvalPoint orders are supported")
}

pub fn stream_eval_n(n: Natural, family: Family, point: EvalPoint) -> CyclotomicValue {
    stream_eval(&divisors(n), family, point)
}
