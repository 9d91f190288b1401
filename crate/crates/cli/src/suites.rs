//! Named verification suites. Each suite is a list of per-index checks with
//! a default range; a sweep splits the range into contiguous chunks, one per
//! worker, and merges the chunk reports.

use std::fmt;
use std::str::FromStr;
use std::thread;
use std::time::Instant;

use divpoly_core::{
    ceil_div, chi3, floor_div, hit_range, neg_one_pow, product_series, rhs_series, series_equal,
    stream_eval, EvalPoint, Family, Natural, QuadForm, SpfSieve, SymmetricLaurentPoly,
};

use crate::oracle;
use crate::report::{Counterexample, VerificationReport};

pub const DEFAULT_SERIES_ORDER: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    TheoremMain,
    PIdentities,
    Lemmas,
    Structural,
    Series,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::TheoremMain, Suite::PIdentities, Suite::Lemmas, Suite::Structural, Suite::Series];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremMain => "theorem-main",
            Suite::PIdentities => "p-identities",
            Suite::Lemmas => "lemmas",
            Suite::Structural => "structural",
            Suite::Series => "series",
        }
    }

    /// Index-range checks; empty for the series suite, which is indexed by order.
    pub fn checks(self) -> &'static [Check] {
        match self {
            Suite::TheoremMain => THEOREM_MAIN,
            Suite::PIdentities => P_IDENTITIES,
            Suite::Lemmas => LEMMAS,
            Suite::Structural => STRUCTURAL,
            Suite::Series => &[],
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite '{s}' (expected one of {})", names.join(", "))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Shared read-only state for a sweep.
pub struct Context {
    sieve: SpfSieve,
}

impl Context {
    pub fn new(limit: u64) -> Self {
        Context { sieve: SpfSieve::new(limit) }
    }

    pub fn sieve(&self) -> &SpfSieve {
        &self.sieve
    }
}

type CheckFn = fn(&Context, Natural) -> Result<(), Counterexample>;

pub struct Check {
    pub name: &'static str,
    pub default_range: (u64, u64),
    run: CheckFn,
}

impl Check {
    pub fn run(&self, ctx: &Context, n: Natural) -> Result<(), Counterexample> {
        (self.run)(ctx, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Overrides every check's default range.
    pub range: Option<(u64, u64)>,
    pub order: usize,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { range: None, order: DEFAULT_SERIES_ORDER, workers: 1 }
    }
}

fn expect_eq(n: Natural, expected: i64, actual: i64) -> Result<(), Counterexample> {
    if expected == actual {
        Ok(())
    } else {
        Err(Counterexample::new(n.get(), expected, actual))
    }
}

fn l_poly(ctx: &Context, n: Natural) -> SymmetricLaurentPoly {
    SymmetricLaurentPoly::from_divisors(&ctx.sieve.divisors(n), Family::L)
}

fn p_poly(ctx: &Context, n: Natural) -> SymmetricLaurentPoly {
    SymmetricLaurentPoly::from_divisors(&ctx.sieve.divisors(n), Family::P)
}

fn lattice(form: QuadForm, n: Natural) -> i64 {
    form.representation_count(n) as i64
}

const THEOREM_MAIN: &[Check] = &[
    Check {
        name: "theorem-main/a002324",
        default_range: (1, 10_000),
        run: |ctx, n| {
            let divs = ctx.sieve.divisors(n);
            let l = SymmetricLaurentPoly::from_divisors(&divs, Family::L);
            expect_eq(n, divs.a002324(), 4 * divs.sum() - 3 * l.eval_at_one())
        },
    },
    Check {
        name: "theorem-main/a096936",
        default_range: (1, 10_000),
        run: |ctx, n| {
            let divs = ctx.sieve.divisors(n);
            let l = SymmetricLaurentPoly::from_divisors(&divs, Family::L);
            expect_eq(n, divs.a096936(), l.eval_at_minus_one())
        },
    },
    Check {
        name: "theorem-main/a002324-lattice",
        default_range: (1, 2000),
        run: |ctx, n| {
            let l = l_poly(ctx, n);
            let sigma = ctx.sieve.divisors(n).sum();
            expect_eq(n, lattice(QuadForm::HEXAGONAL, n), 6 * (4 * sigma - 3 * l.eval_at_one()))
        },
    },
    Check {
        name: "theorem-main/a096936-lattice",
        default_range: (1, 2000),
        run: |ctx, n| expect_eq(n, lattice(QuadForm::X2_3Y2, n), 2 * l_poly(ctx, n).eval_at_minus_one()),
    },
];

const P_IDENTITIES: &[Check] = &[
    Check {
        name: "p-identities/sigma",
        default_range: (1, 2000),
        run: |ctx, n| expect_eq(n, ctx.sieve.divisors(n).sum(), p_poly(ctx, n).eval_at_one()),
    },
    Check {
        name: "p-identities/r101-at-minus-one",
        default_range: (1, 2000),
        run: |ctx, n| {
            expect_eq(n, lattice(QuadForm::SUM_OF_SQUARES, n), 4 * p_poly(ctx, n).eval_at_minus_one())
        },
    },
    Check {
        name: "p-identities/r102-at-i",
        default_range: (1, 2000),
        run: |ctx, n| {
            let r = lattice(QuadForm::X2_2Y2, n);
            let v = p_poly(ctx, n).eval(EvalPoint::I);
            expect_eq(n, r * r, 4 * v.norm_squared())
        },
    },
    Check {
        name: "p-identities/r111-at-zeta3",
        default_range: (1, 2000),
        run: |ctx, n| {
            let v = p_poly(ctx, n).eval(EvalPoint::Zeta3);
            let re2 = v.real_part_doubled().expect("order 3");
            expect_eq(n, lattice(QuadForm::HEXAGONAL, n), 3 * re2)
        },
    },
    Check {
        name: "p-identities/r101-at-zeta6",
        default_range: (1, 2000),
        run: |ctx, n| {
            let r = lattice(QuadForm::SUM_OF_SQUARES, n);
            let norm = p_poly(ctx, n).eval(EvalPoint::Zeta6).norm_squared();
            // |P_n(ζ₆)| = r, r/4, r/2 for n ≡ 0, 1, 2 (mod 3)
            let scale = match n.get() % 3 {
                0 => 16,
                1 => 1,
                _ => 4,
            };
            expect_eq(n, scale * r * r, 16 * norm)
        },
    },
];

const LEMMAS: &[Check] = &[
    Check {
        name: "lemmas/ceil-floor-defects",
        default_range: (1, 100_000),
        run: |_, n| {
            let v = n.signed();
            let ceil_defect = (3 * ceil_div(v, 3) - v) as i64;
            let floor_defect = (v - 3 * floor_div(v, 3)) as i64;
            let (want_ceil, want_floor) = match n.get() % 3 {
                0 => (0, 0),
                1 => (2, 1),
                _ => (1, 2),
            };
            expect_eq(n, want_ceil, ceil_defect)
                .and_then(|_| expect_eq(n, want_floor, floor_defect).map_err(|cx| cx.with_note("floor")))
        },
    },
    Check {
        name: "lemmas/sign-halfdiff",
        default_range: (1, 100_000),
        run: |_, n| {
            expect_eq(n, neg_one_pow(n.signed() - 1) * chi3(n.get()), divpoly_core::sign_halfdiff(n))
        },
    },
    Check {
        name: "lemmas/convolution",
        default_range: (1, 10_000),
        run: |ctx, n| {
            let divs = ctx.sieve.divisors(n);
            expect_eq(n, neg_one_pow(n.signed() - 1) * divs.a096936(), divs.convolution_lhs())
        },
    },
    Check {
        name: "lemmas/alternating-hit-sum",
        default_range: (1, 2000),
        run: |ctx, n| {
            for d in ctx.sieve.divisors(n).iter() {
                for family in Family::BOTH {
                    let r = hit_range(n, d, family).expect("d divides n");
                    let closed = (neg_one_pow(r.lo as i128) - neg_one_pow(r.hi as i128)) / 2;
                    let direct = oracle::alternating_sum(r.lo, r.hi);
                    if closed != direct {
                        return Err(Counterexample::new(n.get(), direct, closed)
                            .with_note(format!("d={d} family={family}")));
                    }
                }
            }
            Ok(())
        },
    },
];

fn structural(ctx: &Context, n: Natural, family: Family) -> Result<(), Counterexample> {
    let divs = ctx.sieve.divisors(n);
    let center = (n.get() - 1) as i64;
    for d in divs.iter() {
        let r = hit_range(n, d, family).expect("d divides n");
        if r.lo < -center || r.hi > center + 1 {
            return Err(Counterexample::new(n.get(), center, (-r.lo).max(r.hi - 1))
                .with_note(format!("d={d} leaves the window")));
        }
    }
    let poly = SymmetricLaurentPoly::from_divisors(&divs, family);
    let coeffs = poly.coeffs();
    let fail = |expected: i64, actual: i64, what: &str| {
        Err(Counterexample::new(n.get(), expected, actual).with_note(what.to_string()))
    };
    if coeffs.len() as i64 != 2 * center + 1 {
        return fail(2 * center + 1, coeffs.len() as i64, "length");
    }
    if !poly.is_monic() {
        return fail(1, coeffs[0].min(coeffs[coeffs.len() - 1]) as i64, "monic");
    }
    if let Some(i) = (0..coeffs.len()).find(|&i| coeffs[i] != coeffs[coeffs.len() - 1 - i]) {
        return fail(coeffs[coeffs.len() - 1 - i] as i64, coeffs[i] as i64, "palindrome");
    }
    // Coefficients are unsigned, so nonnegativity reduces to the total matching the divisor hits.
    let hits: i64 = divs.iter().map(|d| hit_range(n, d, family).expect("d divides n").len() as i64).sum();
    expect_eq(n, hits, poly.eval_at_one()).map_err(|cx| cx.with_note("total"))
}

fn hit_scan(ctx: &Context, n: Natural, family: Family) -> Result<(), Counterexample> {
    for d in ctx.sieve.divisors(n).iter() {
        let fast = divpoly_core::hit_count(n, d, family).expect("d divides n") as i64;
        let slow = oracle::scan_hit_count(n.get(), d, family.rho()) as i64;
        if fast != slow {
            return Err(Counterexample::new(n.get(), slow, fast).with_note(format!("d={d}")));
        }
    }
    Ok(())
}

fn stream_vs_build(ctx: &Context, n: Natural, family: Family) -> Result<(), Counterexample> {
    let divs = ctx.sieve.divisors(n);
    let poly = SymmetricLaurentPoly::from_divisors(&divs, family);
    for point in EvalPoint::ALL {
        let built = poly.eval(point);
        let streamed = stream_eval(&divs, family, point);
        if built != streamed {
            let (expected, actual) =
                if built.a() != streamed.a() { (built.a(), streamed.a()) } else { (built.b(), streamed.b()) };
            return Err(Counterexample::new(n.get(), expected, actual).with_note(format!("at {point}")));
        }
    }
    Ok(())
}

const STRUCTURAL: &[Check] = &[
    Check { name: "structural/L", default_range: (1, 5000), run: |ctx, n| structural(ctx, n, Family::L) },
    Check { name: "structural/P", default_range: (1, 5000), run: |ctx, n| structural(ctx, n, Family::P) },
    Check { name: "structural/hit-scan-L", default_range: (1, 500), run: |ctx, n| hit_scan(ctx, n, Family::L) },
    Check { name: "structural/hit-scan-P", default_range: (1, 500), run: |ctx, n| hit_scan(ctx, n, Family::P) },
    Check {
        name: "structural/stream-vs-build-L",
        default_range: (1, 2000),
        run: |ctx, n| stream_vs_build(ctx, n, Family::L),
    },
    Check {
        name: "structural/stream-vs-build-P",
        default_range: (1, 2000),
        run: |ctx, n| stream_vs_build(ctx, n, Family::P),
    },
];

/// Runs one check over `lo..=hi` split across `workers` threads.
pub fn run_check(check: &Check, ctx: &Context, lo: u64, hi: u64, workers: usize) -> VerificationReport {
    let start = Instant::now();
    let workers = workers.max(1) as u64;
    let len = hi - lo + 1;
    let chunk = len.div_ceil(workers);
    let chunks: Vec<(u64, u64)> = (0..workers)
        .map(|w| (lo + w * chunk, (lo + (w + 1) * chunk - 1).min(hi)))
        .filter(|(a, b)| a <= b)
        .collect();
    let sweep = |(a, b): (u64, u64)| {
        let mut report = VerificationReport::empty(check.name, a, b);
        for n in Natural::range_inclusive(a, b) {
            report.record(check.run(ctx, n));
        }
        report
    };
    let mut merged = if chunks.len() == 1 {
        sweep(chunks[0])
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = chunks.iter().map(|&c| scope.spawn(move || sweep(c))).collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .reduce(VerificationReport::merge)
                .expect("at least one chunk")
        })
    };
    merged.set_elapsed(start.elapsed());
    merged
}

/// Product side against the interval-polynomial side, plus exact division of
/// every product coefficient by `q + q⁻¹ - 2`.
pub fn run_series(order: usize) -> Vec<VerificationReport> {
    let start = Instant::now();
    let lhs = product_series(order);
    let rhs = rhs_series(order);
    let mut equality = VerificationReport::empty("series/product-vs-rhs", 0, order as u64);
    for t in 0..=order {
        let (l, r) = (lhs.coeff(t), rhs.coeff(t));
        let outcome = if l == r {
            Ok(())
        } else {
            let q_exponent = (l - r).min_exponent().expect("unequal coefficients");
            Err(Counterexample::new(t as u64, l.coeff(q_exponent), r.coeff(q_exponent))
                .with_note(format!("coefficient of q^{q_exponent}")))
        };
        equality.record(outcome);
    }
    debug_assert_eq!(series_equal(&lhs, &rhs).expect("same order").is_none(), equality.passed());
    equality.set_elapsed(start.elapsed());

    let start = Instant::now();
    let mut division = VerificationReport::empty("series/kernel-division", 1, order as u64);
    for t in 1..=order {
        let outcome = match lhs.coeff(t).divide_by_kernel() {
            Ok(quotient) if quotient.is_palindromic() && quotient.is_nonnegative() => Ok(()),
            Ok(quotient) => Err(Counterexample::new(t as u64, 0, quotient.min_exponent().unwrap_or(0))
                .with_note(format!("quotient {quotient} is not a palindrome with positive terms"))),
            Err(remainder) => Err(Counterexample::new(t as u64, 0, remainder.coeff(remainder.min_exponent().unwrap_or(0)))
                .with_note(format!("remainder {remainder}"))),
        };
        division.record(outcome);
    }
    division.set_elapsed(start.elapsed());
    vec![equality, division]
}

pub fn run_suite(suite: Suite, options: &VerifyOptions) -> Vec<VerificationReport> {
    if suite == Suite::Series {
        return run_series(options.order);
    }
    let checks = suite.checks();
    let range_of = |c: &Check| options.range.unwrap_or(c.default_range);
    let limit = checks.iter().map(|c| range_of(c).1).max().unwrap_or(1);
    let ctx = Context::new(limit);
    checks
        .iter()
        .map(|c| {
            let (lo, hi) = range_of(c);
            run_check(c, &ctx, lo, hi, options.workers)
        })
        .collect()
}
