//! Smallest-prime-factor table for divisor enumeration over a whole range `1..=limit`.

use crate::arith::{DivisorList, Natural};

/// Linear sieve of smallest prime factors.
#[derive(Debug, Clone)]
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Builds the table for `1..=limit`.
    ///
    /// # Panics
    ///
    /// Panics if `limit` does not fit in a `u32`.
    pub fn new(limit: u64) -> Self {
        let limit = u32::try_from(limit).expect("sieve limit must fit in u32") as usize;
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let p_i = spf[i];
            for &p in &primes {
                let m = i * p as usize;
                if p > p_i || m > limit {
                    break;
                }
                spf[m] = p;
            }
        }
        if limit >= 1 {
            spf[1] = 1;
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    pub fn smallest_prime_factor(&self, n: u64) -> u64 {
        self.spf[n as usize] as u64
    }

    /// Prime factorization as `(p, e)` with ascending `p`.
    pub fn factorize(&self, n: Natural) -> Vec<(u64, u32)> {
        let mut n = self.check(n);
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }

    /// Divisors of `n` from its factorization, sorted ascending.
    pub fn divisors(&self, n: Natural) -> DivisorList {
        let mut divs = vec![1u64];
        for (p, e) in self.factorize(n) {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        DivisorList::from_sorted(n, divs)
    }

    fn check(&self, n: Natural) -> u64 {
        let n = n.get();
        assert!(n <= self.limit(), "{n} exceeds sieve limit {}", self.limit());
        n
    }
}
