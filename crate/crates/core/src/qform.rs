//! Lattice-point counts `r_{a,b,c}(n) = #{(x, y) ∈ Z² : ax² + bxy + cy² = n}`
//! for positive definite binary quadratic forms.

use std::fmt;

use crate::arith::Natural;
use crate::error::{Error, Result};

/// A positive definite form `ax² + bxy + cy²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadForm {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadForm {
    /// `x² + y²`
    pub const SUM_OF_SQUARES: QuadForm = QuadForm { a: 1, b: 0, c: 1 };
    /// `x² + 2y²`
    pub const X2_2Y2: QuadForm = QuadForm { a: 1, b: 0, c: 2 };
    /// `x² + xy + y²`
    pub const HEXAGONAL: QuadForm = QuadForm { a: 1, b: 1, c: 1 };
    /// `x² + 3y²`
    pub const X2_3Y2: QuadForm = QuadForm { a: 1, b: 0, c: 3 };

    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let disc = b as i128 * b as i128 - 4 * a as i128 * c as i128;
        if a > 0 && disc < 0 {
            Ok(QuadForm { a, b, c })
        } else {
            Err(Error::NotPositiveDefinite { a, b, c })
        }
    }

    pub fn coefficients(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    /// `4ac - b² > 0`.
    pub fn neg_discriminant(&self) -> i128 {
        4 * self.a as i128 * self.c as i128 - self.b as i128 * self.b as i128
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// `⌊√(4an / (4ac - b²))⌋`, the largest `|y|` that can occur in a solution.
    pub fn y_bound(&self, n: Natural) -> i64 {
        let num = 4 * self.a as i128 * n.signed();
        integer_sqrt((num / self.neg_discriminant()) as u128) as i64
    }

    /// The matching bound for `|x|`.
    pub fn x_bound(&self, n: Natural) -> i64 {
        let num = 4 * self.c as i128 * n.signed();
        integer_sqrt((num / self.neg_discriminant()) as u128) as i64
    }

    /// Number of `x` solving the form for a fixed `y`, from the completed square
    /// `4an = (2ax + by)² + (4ac - b²)y²`.
    fn solutions_in_row(&self, n: Natural, y: i64) -> u64 {
        let (a, b) = (self.a as i128, self.b as i128);
        let y = y as i128;
        let t = 4 * a * n.signed() - self.neg_discriminant() * y * y;
        let Some(s) = perfect_sqrt(t) else {
            return 0;
        };
        let two_a = 2 * a;
        let mut count = 0;
        for u in if s == 0 { vec![0] } else { vec![s, -s] } {
            // u = 2ax + by
            if (u - b * y).rem_euclid(two_a) == 0 {
                count += 1;
            }
        }
        count
    }

    /// `r_{a,b,c}(n)`, sweeping `y` over the completed-square bound.
    pub fn representation_count(&self, n: Natural) -> u64 {
        self.representation_count_with_margin(n, 0)
    }

    /// Same as [`Self::representation_count`] with the `y` sweep widened by `margin`.
    pub fn representation_count_with_margin(&self, n: Natural, margin: i64) -> u64 {
        let bound = self.y_bound(n) + margin;
        (-bound..=bound).map(|y| self.solutions_in_row(n, y)).sum()
    }

    /// Counts `y >= 0` only and doubles the `y > 0` rows using `(x, y) ↦ (-x, -y)`.
    pub fn representation_count_half(&self, n: Natural) -> u64 {
        let bound = self.y_bound(n);
        let upper: u64 = (1..=bound).map(|y| self.solutions_in_row(n, y)).sum();
        self.solutions_in_row(n, 0) + 2 * upper
    }

    /// Direct scan of the bounding rectangle. Slow; meant as a cross-check.
    pub fn representation_count_scan(&self, n: Natural) -> u64 {
        let (xb, yb) = (self.x_bound(n), self.y_bound(n));
        let target = n.signed();
        let mut count = 0;
        for x in -xb..=xb {
            for y in -yb..=yb {
                if self.eval(x, y) == target {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

pub fn representation_count(form: &QuadForm, n: Natural) -> u64 {
    form.representation_count(n)
}

/// `⌊√n⌋` by Newton iteration on integers.
pub fn integer_sqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    // Start above the root: 2^(ceil(bits/2)).
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let next = (x + n / x) / 2;
        if next >= x {
            break;
        }
        x = next;
    }
    // x² > n  ⟺  x > ⌊n/x⌋, which cannot overflow
    while x > n / x {
        x -= 1;
    }
    while x < n / (x + 1) {
        x += 1;
    }
    x
}

/// `Some(s)` with `s² = t` when `t` is a perfect square.
fn perfect_sqrt(t: i128) -> Option<i128> {
    if t < 0 {
        return None;
    }
    let s = integer_sqrt(t as u128) as i128;
    (s * s == t).then_some(s)
}
