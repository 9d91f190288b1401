//! Slow reference computations used by the verification suites. They work
//! straight from the inequality form and share nothing with the ceiling
//! formula in `divpoly_core::interval`.

/// Integers `k ∈ [-(n+2), n+2]` with `d/ρ - n/d <= k < d - n/(ρd)`, evaluated
/// as `d² - ρn <= kρd < ρd² - n`.
pub fn scan_hits(n: u64, d: u64, rho: i64) -> impl Iterator<Item = i64> {
    let (n, d, rho) = (n as i128, d as i128, rho as i128);
    let window = n as i64 + 2;
    (-window..=window).filter(move |&k| {
        let scaled = k as i128 * rho * d;
        d * d - rho * n <= scaled && scaled < rho * d * d - n
    })
}

pub fn scan_hit_count(n: u64, d: u64, rho: i64) -> u64 {
    scan_hits(n, d, rho).count() as u64
}

/// `Σ_{lo <= k < hi} (-1)^k` term by term.
pub fn alternating_sum(lo: i64, hi: i64) -> i64 {
    (lo..hi).map(|k| if k.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
}
