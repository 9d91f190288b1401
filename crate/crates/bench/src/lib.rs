//! Workloads shared by the criterion benches.

use divpoly_core::{stream_eval, EvalPoint, Family, Natural, SpfSieve, SymmetricLaurentPoly};

/// `Σ_n (4σ(n) - 3 L_n(1))` over `1..=limit` through full polynomial construction.
pub fn build_sweep(sieve: &SpfSieve, limit: u64) -> i64 {
    Natural::range_inclusive(1, limit)
        .map(|n| {
            let divs = sieve.divisors(n);
            4 * divs.sum() - 3 * SymmetricLaurentPoly::from_divisors(&divs, Family::L).eval_at_one()
        })
        .sum()
}

/// The same sum with streaming evaluation.
pub fn stream_sweep(sieve: &SpfSieve, limit: u64) -> i64 {
    Natural::range_inclusive(1, limit)
        .map(|n| {
            let divs = sieve.divisors(n);
            4 * divs.sum() - 3 * stream_eval(&divs, Family::L, EvalPoint::One).a()
        })
        .sum()
}
