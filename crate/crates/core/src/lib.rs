//! Exact arithmetic for divisor-interval polynomials.
//!
//! For `n >= 1` and `ρ ∈ {2, 3}`, the Laurent polynomial `F_n(q)/q^{n-1}`
//! has as coefficient of `q^k` the number of divisors `d | n` whose logarithm
//! falls in the half-open window `]c_k - ln ρ, c_k]`, where the centers are
//! `c_k = ln(ρk/2 + √((ρk/2)² + ρn))`. `ρ = 2` gives the Kassel–Reutenauer
//! polynomials `P_n`, `ρ = 3` gives `L_n`. Everything is computed through an
//! equivalent integer ceiling formula, so no floating point is involved.
//!
//! ```
//! use divpoly_core::{build_poly, sigma, a002324_closed, Family, Natural};
//!
//! let n = Natural::new(6).unwrap();
//! let l6 = build_poly(n, Family::L);
//! assert_eq!(l6.coeffs(), &[1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1]);
//! assert_eq!(4 * sigma(n) - 3 * l6.eval_at_one(), a002324_closed(n));
//! ```

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod interval;
pub mod qform;
pub mod series;
pub mod sieve;

pub use arith::{
    a002324_closed, a096936_closed, ceil_div, chi3, convolution_lhs, divisor_count_mod, divisors,
    floor_div, neg_one_pow, sigma, sign_halfdiff, DivisorList, Natural, ResidueClassCount,
};
pub use cyclotomic::{CyclotomicValue, EvalPoint};
pub use error::{Error, Result};
pub use interval::{build_poly, hit_count, hit_range, stream_eval, stream_eval_n, Family, HitRange, SymmetricLaurentPoly};
pub use qform::{integer_sqrt, representation_count, QuadForm};
pub use series::{product_series, rhs_series, series_equal, QLaurent, SeriesMismatch, TruncatedSeries};
pub use sieve::SpfSieve;
