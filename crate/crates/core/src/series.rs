//! Truncated power series in `t` whose coefficients are Laurent polynomials
//! in `q`, used to check the product formula
//!
//! ```text
//! ∏_{m≥1} (1 - t^m)² / ((1 - q t^m)(1 - q⁻¹ t^m)) = 1 + (q + q⁻¹ - 2) Σ_{n≥1} P_n(q)/q^{n-1} tⁿ
//! ```
//!
//! Factors with `m > N` only touch `t^{N+1}` and beyond, so cutting the
//! product at `m = N` is exact through `t^N`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::interval::{Family, SymmetricLaurentPoly};

/// Sparse Laurent polynomial in `q` with integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QLaurent {
    terms: BTreeMap<i64, i64>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: i64, coeff: i64) -> Self {
        let mut out = QLaurent::zero();
        out.add_term(exponent, coeff);
        out
    }

    /// `q + q⁻¹ - 2 = q⁻¹(q - 1)²`.
    pub fn kernel() -> Self {
        QLaurent::from_terms([(1, 1), (0, -2), (-1, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut out = QLaurent::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// The centered coefficients of `F_n(q)/q^{n-1}`.
    pub fn from_poly(poly: &SymmetricLaurentPoly) -> Self {
        QLaurent::from_terms(poly.terms().map(|(k, c)| (k, c as i64)))
    }

    pub fn add_term(&mut self, exponent: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coeff)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `c_e = c_{-e}` for every exponent.
    pub fn is_palindromic(&self) -> bool {
        self.terms().all(|(e, c)| self.coeff(-e) == c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// `self · q^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(&e, &c)| (e + shift, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return QLaurent::zero();
        }
        QLaurent { terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    /// Exact quotient by `q + q⁻¹ - 2`; on failure returns the nonzero remainder.
    pub fn divide_by_kernel(&self) -> std::result::Result<QLaurent, QLaurent> {
        // q·f = (q - 1)²·g, so strip q^low from q·f and divide by q² - 2q + 1.
        let lifted = self.shifted(1);
        let (Some(low), Some(high)) = (lifted.min_exponent(), lifted.max_exponent()) else {
            return Ok(QLaurent::zero());
        };
        let mut rem: Vec<i64> = (low..=high).map(|e| lifted.coeff(e)).collect();
        let deg = rem.len() - 1;
        let mut quot = vec![0i64; deg.saturating_sub(1)];
        for i in (2..=deg).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            quot[i - 2] = c;
            rem[i] = 0;
            rem[i - 1] += 2 * c;
            rem[i - 2] -= c;
        }
        let remainder = QLaurent::from_terms(rem.iter().enumerate().map(|(i, &c)| (low + i as i64, c)));
        if remainder.is_zero() {
            Ok(QLaurent::from_terms(quot.iter().enumerate().map(|(i, &c)| (low + i as i64, c))))
        } else {
            Err(remainder)
        }
    }
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;

    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub<&QLaurent> for &QLaurent {
    type Output = QLaurent;

    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;

    fn neg(self) -> QLaurent {
        self.scale(-1)
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;

    fn mul(self, rhs: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}q^{}", c.abs(), e)?;
        }
        Ok(())
    }
}

/// Coefficients of `t⁰..=t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<QLaurent>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![QLaurent::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = QLaurent::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, t_power: usize) -> &QLaurent {
        &self.coeffs[t_power]
    }

    pub fn coeffs(&self) -> &[QLaurent] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, t_power: usize, value: QLaurent) {
        self.coeffs[t_power] = value;
    }

    /// Drops every term beyond `t^order`.
    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Product truncated to `self.order()`. Zero coefficients are skipped, so
    /// sparse factors are cheap.
    pub fn mul_truncated(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for (i, left) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, right) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if right.is_zero() {
                    continue;
                }
                let prod = left * right;
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        out
    }
}

/// `Σ_{j≥0} ratio^j t^{mj}` truncated at `t^order`.
fn geometric(order: usize, m: usize, ratio: &QLaurent) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut power = QLaurent::one();
    for j in (0..=order).step_by(m) {
        s.coeffs[j] = power.clone();
        power = &power * ratio;
    }
    s
}

/// `(1 - t^m)²` truncated at `t^order`.
fn double_zero(order: usize, m: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    if m <= order {
        s.coeffs[m] = QLaurent::monomial(0, -2);
    }
    if 2 * m <= order {
        s.coeffs[2 * m] = QLaurent::one();
    }
    s
}

/// `∏_{m=1}^{N} (1 - t^m)² (1 - q t^m)⁻¹ (1 - q⁻¹ t^m)⁻¹` through `t^N`.
pub fn product_series(order: usize) -> TruncatedSeries {
    let q = QLaurent::monomial(1, 1);
    let q_inv = QLaurent::monomial(-1, 1);
    let mut acc = TruncatedSeries::one(order);
    for m in 1..=order {
        acc = acc.mul_truncated(&double_zero(order, m));
        acc = acc.mul_truncated(&geometric(order, m, &q));
        acc = acc.mul_truncated(&geometric(order, m, &q_inv));
    }
    acc
}

/// `1 + (q + q⁻¹ - 2) Σ_{n=1}^{N} P_n(q)/q^{n-1} tⁿ` with `P_n` from the interval construction.
pub fn rhs_series(order: usize) -> TruncatedSeries {
    let kernel = QLaurent::kernel();
    let mut s = TruncatedSeries::one(order);
    for n in 1..=order {
        let poly = SymmetricLaurentPoly::build(Natural::new(n as u64).expect("n >= 1"), Family::P);
        s.coeffs[n] = &kernel * &QLaurent::from_poly(&poly);
    }
    s
}

/// `Σ_{n=1}^{N} L_n(q)/q^{n-1} tⁿ`, for exploration only.
pub fn l_family_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    for n in 1..=order {
        let poly = SymmetricLaurentPoly::build(Natural::new(n as u64).expect("n >= 1"), Family::L);
        s.coeffs[n] = QLaurent::from_poly(&poly);
    }
    s
}

/// First coefficient where two series differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub t_power: usize,
    pub q_exponent: i64,
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for SeriesMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t^{} q^{}: lhs {} vs rhs {}",
            self.t_power, self.q_exponent, self.lhs, self.rhs
        )
    }
}

/// `Ok(None)` when every coefficient matches, otherwise the lowest `(t, q)` mismatch.
pub fn series_equal(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Result<Option<SeriesMismatch>> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderDiffers(lhs.order(), rhs.order()));
    }
    for (t_power, (l, r)) in lhs.coeffs.iter().zip(&rhs.coeffs).enumerate() {
        if l != r {
            let diff = l - r;
            let q_exponent = diff.min_exponent().expect("unequal polynomials differ somewhere");
            return Ok(Some(SeriesMismatch {
                t_power,
                q_exponent,
                lhs: l.coeff(q_exponent),
                rhs: r.coeff(q_exponent),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn qlaurent_basics() {
        let q = QLaurent::monomial(1, 1);
        let mut x = &q + &QLaurent::monomial(1, -1);
        assert!(x.is_zero());
        x.add_term(3, 0);
        assert!(x.is_zero());
        let k = QLaurent::kernel();
        assert!(k.is_palindromic());
        assert_eq!((&k * &k).coeff(0), 6);
        assert_eq!(format!("{k}"), "1q^-1 - 2q^0 + 1q^1");
    }

    #[test]
    fn low_order_coefficients() {
        let s = product_series(1);
        assert_eq!(s.coeff(0), &QLaurent::one());
        assert_eq!(s.coeff(1), &QLaurent::kernel());

        let s = product_series(2);
        let p2 = QLaurent::from_terms([(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(s.coeff(2), &(&QLaurent::kernel() * &p2));

        let r = rhs_series(2);
        assert_eq!(r.coeff(0), &QLaurent::one());
        assert_eq!(r.coeff(1), &QLaurent::kernel());
        assert_eq!(r.coeff(2), &(&QLaurent::kernel() * &p2));
    }

    #[test]
    fn series_equal_reports_mismatch() {
        let a = product_series(5);
        assert_eq!(series_equal(&a, &a), Ok(None));
        let mut b = a.clone();
        let mut c3 = b.coeff(3).clone();
        c3.add_term(7, 1);
        b.set_coeff(3, c3);
        let m = series_equal(&a, &b).unwrap().unwrap();
        assert_eq!((m.t_power, m.q_exponent, m.lhs, m.rhs), (3, 7, 0, 1));
        assert_eq!(series_equal(&a, &product_series(4)), Err(Error::OrderDiffers(5, 4)));
    }

    #[test]
    fn matches_rhs_small() {
        assert_eq!(series_equal(&product_series(12), &rhs_series(12)), Ok(None));
    }

    #[test]
    fn truncation_consistency() {
        let big = product_series(16);
        for order in 1..16 {
            assert_eq!(big.truncate(order), product_series(order), "order {order}");
        }
    }

    #[test]
    fn kernel_division() {
        assert_eq!(QLaurent::zero().divide_by_kernel(), Ok(QLaurent::zero()));
        assert_eq!(QLaurent::kernel().divide_by_kernel(), Ok(QLaurent::one()));
        // q⁻¹ + 2 + q ≡ 4 at q = 1, so it is not a multiple of (q - 1)²
        let not_multiple = QLaurent::from_terms([(-1, 1), (0, 2), (1, 1)]);
        assert!(not_multiple.divide_by_kernel().is_err());
        assert!(QLaurent::one().divide_by_kernel().is_err());
    }

    proptest! {
        #[test]
        fn kernel_division_inverts_multiplication(
            terms in prop::collection::vec((-20i64..20, -50i64..50), 0..12)
        ) {
            let g = QLaurent::from_terms(terms);
            let f = &QLaurent::kernel() * &g;
            prop_assert_eq!(f.divide_by_kernel(), Ok(g));
        }
    }
}
