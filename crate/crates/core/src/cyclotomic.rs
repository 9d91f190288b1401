//! Exact values `a + b·ζ_m` for the small orders `m ∈ {1, 2, 3, 4, 6}`.
//!
//! For every supported order `{1, ζ_m}` spans `Z[ζ_m]`, with
//! `ζ₃² = -1 - ζ₃`, `ζ₄² = -1` and `ζ₆² = ζ₆ - 1`. Orders 1 and 2 are just
//! the integers, so `b` is kept at zero there.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    order: u32,
    a: i64,
    b: i64,
}

impl CyclotomicValue {
    pub fn new(order: u32, a: i64, b: i64) -> Result<Self> {
        match order {
            1 | 2 if b != 0 => Err(Error::OrderMismatch(order)),
            1 | 2 | 3 | 4 | 6 => Ok(CyclotomicValue { order, a, b }),
            _ => Err(Error::UnsupportedOrder(order)),
        }
    }

    pub fn zero(order: u32) -> Result<Self> {
        Self::new(order, 0, 0)
    }

    pub fn integer(order: u32, a: i64) -> Result<Self> {
        Self::new(order, a, 0)
    }

    /// `ζ_m^e` reduced to the `{1, ζ_m}` basis.
    pub fn zeta_pow(order: u32, exponent: i64) -> Result<Self> {
        let (a, b) = match order {
            1 => (1, 0),
            2 => (if exponent.rem_euclid(2) == 0 { 1 } else { -1 }, 0),
            3 => match exponent.rem_euclid(3) {
                0 => (1, 0),
                1 => (0, 1),
                _ => (-1, -1),
            },
            4 => match exponent.rem_euclid(4) {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            },
            6 => match exponent.rem_euclid(6) {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 1),
                3 => (-1, 0),
                4 => (0, -1),
                _ => (1, -1),
            },
            _ => return Err(Error::UnsupportedOrder(order)),
        };
        Ok(CyclotomicValue { order, a, b })
    }

    /// `Σ_r sums[r]·ζ_m^r` where `sums` has exactly `m` entries.
    pub fn from_residue_sums(order: u32, sums: &[i64]) -> Result<Self> {
        assert_eq!(sums.len(), order as usize, "one sum per residue class");
        let mut acc = Self::zero(order)?;
        for (r, &s) in sums.iter().enumerate() {
            acc = acc + Self::zeta_pow(order, r as i64)?.scale(s);
        }
        Ok(acc)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn scale(self, k: i64) -> Self {
        CyclotomicValue { order: self.order, a: self.a * k, b: self.b * k }
    }

    /// `|v|²`, which is an integer for every supported order.
    pub fn norm_squared(&self) -> i64 {
        let (a, b) = (self.a, self.b);
        match self.order {
            4 => a * a + b * b,
            3 => a * a - a * b + b * b,
            6 => a * a + a * b + b * b,
            _ => a * a,
        }
    }

    /// `2·Re(v)`, defined for orders 3 and 6.
    pub fn real_part_doubled(&self) -> Result<i64> {
        match self.order {
            3 => Ok(2 * self.a - self.b),
            6 => Ok(2 * self.a + self.b),
            m => Err(Error::OrderMismatch(m)),
        }
    }
}

impl Add for CyclotomicValue {
    type Output = CyclotomicValue;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        CyclotomicValue { order: self.order, a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Neg for CyclotomicValue {
    type Output = CyclotomicValue;

    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Mul for CyclotomicValue {
    type Output = CyclotomicValue;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        let (a, b, c, d) = (self.a, self.b, rhs.a, rhs.b);
        // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd·ζ²
        let (sq_a, sq_b) = match self.order {
            3 => (-1, -1),
            4 => (-1, 0),
            6 => (-1, 1),
            // b = d = 0
            _ => (0, 0),
        };
        let bd = b * d;
        CyclotomicValue {
            order: self.order,
            a: a * c + bd * sq_a,
            b: a * d + b * c + bd * sq_b,
        }
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 | 2 => write!(f, "{}", self.a),
            m => write!(f, "{} + {}·ζ{}", self.a, self.b, m),
        }
    }
}

/// The evaluation points with known arithmetic meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalPoint {
    One,
    MinusOne,
    /// `ζ₄ = √-1`
    I,
    /// `ζ₃ = (-1 + √-3)/2`
    Zeta3,
    /// `ζ₆ = (1 + √-3)/2`
    Zeta6,
}

impl EvalPoint {
    pub const ALL: [EvalPoint; 5] =
        [EvalPoint::One, EvalPoint::MinusOne, EvalPoint::I, EvalPoint::Zeta3, EvalPoint::Zeta6];

    pub fn order(self) -> u32 {
        match self {
            EvalPoint::One => 1,
            EvalPoint::MinusOne => 2,
            EvalPoint::I => 4,
            EvalPoint::Zeta3 => 3,
            EvalPoint::Zeta6 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EvalPoint::One => "1",
            EvalPoint::MinusOne => "-1",
            EvalPoint::I => "i",
            EvalPoint::Zeta3 => "zeta3",
            EvalPoint::Zeta6 => "zeta6",
        }
    }
}

impl FromStr for EvalPoint {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "1" => Ok(EvalPoint::One),
            "-1" => Ok(EvalPoint::MinusOne),
            "i" => Ok(EvalPoint::I),
            "zeta3" => Ok(EvalPoint::Zeta3),
            "zeta6" => Ok(EvalPoint::Zeta6),
            other => Err(format!("unknown evaluation point '{other}' (expected 1, -1, i, zeta3, zeta6)")),
        }
    }
}

impl fmt::Display for EvalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
