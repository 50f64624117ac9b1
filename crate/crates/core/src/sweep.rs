//! Named verification suites over fixed grids or seeded random samples.
//!
//! Each suite counts the individual checks it made and collects a bounded
//! list of failure descriptions. The defaults are the sizes used by the
//! acceptance run; the `*_with` style parameters let benches and the CLI
//! shrink or grow a grid.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{self, Prime};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::imj;
use crate::jshadow;
use crate::padic::{self, PadicNumber};
use crate::rational::NonzeroRational;
use crate::symbols::{self, Factored, Place, SignValue};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Failure descriptions kept per suite; the count is always exact.
pub const MAX_REPORTED_FAILURES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub suite: &'static str,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

#[derive(Debug, Default)]
struct Tally {
    checked: u64,
    failed: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(what);
        }
    }

    /// Counts an `Err` as a failed check.
    fn check_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, describe),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", describe()));
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_REPORTED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    fn finish(self, suite: &'static str) -> Outcome {
        Outcome {
            suite,
            checked: self.checked,
            failed: self.failed,
            failures: self.failures,
        }
    }
}

fn gather(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    pub exec: Execution,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            exec: Execution::default(),
            seed: DEFAULT_SEED,
        }
    }
}

/// Suite names in acceptance order, then the supplementary ones.
pub const SUITES: &[&str] = &[
    "reciprocity",
    "hilbert-oracle",
    "zolotarev",
    "imj-consistency",
    "bernoulli",
    "rezk",
    "surjectivity",
    "norm-identity",
    "quillen",
    "pi2-nontrivial",
    "appendix-a",
    "low-degree",
    "unit-factor",
    "adelic-product",
    "k1-generators",
];

pub fn run_suite(name: &str, cfg: &SweepConfig) -> Result<Outcome> {
    let exec = cfg.exec;
    Ok(match name {
        "reciprocity" => reciprocity(200, 20_000, cfg),
        "hilbert-oracle" => hilbert_oracle(30, 50, exec),
        "zolotarev" => zolotarev(500, exec),
        "imj-consistency" => imj_consistency(97, 30, exec),
        "bernoulli" => bernoulli(60),
        "rezk" => rezk(&[3, 5, 7, 11], 64, exec),
        "surjectivity" => surjectivity(50, 50, 40, exec),
        "norm-identity" => norm_identity(23, 6, 10, 20, exec),
        "quillen" => quillen(49, 10, exec),
        "pi2-nontrivial" => pi2_nontrivial(100, exec),
        "appendix-a" => appendix_a(64),
        "low-degree" => low_degree(1_000, 10_000, cfg),
        "unit-factor" => unit_factor(97, 50),
        "adelic-product" => adelic_product(10_000, 1_000_000, cfg),
        "k1-generators" => k1_generators(97, 60, 3, exec),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite {name:?}; known: {}",
                SUITES.join(", ")
            )))
        }
    })
}

fn odd_primes_up_to(n: u64) -> Vec<Prime> {
    arith::primes_up_to(n)
        .into_iter()
        .filter(|&p| p != 2)
        .map(|p| Prime::new(p).expect("sieve output is prime"))
        .collect()
}

fn primes_up_to(n: u64) -> Vec<Prime> {
    arith::primes_up_to(n)
        .into_iter()
        .map(|p| Prime::new(p).expect("sieve output is prime"))
        .collect()
}

fn q(n: i64, d: i64) -> NonzeroRational {
    NonzeroRational::new(n, d).expect("nonzero")
}

/// Every nonzero rational `n/d` in lowest terms with `|n|, d <= bound`.
pub fn rationals_in_box(bound: i64) -> Vec<NonzeroRational> {
    let mut out = Vec::new();
    for d in 1..=bound {
        for n in 1..=bound {
            if n.gcd(&d) == 1 {
                out.push(q(n, d));
                out.push(q(-n, d));
            }
        }
    }
    out
}

/// Hilbert reciprocity over the box `|num|, |den| <= bound`.
///
/// The symbols only depend on square classes, so every unordered pair of
/// squarefree class representatives is checked through the factored fast
/// path. A seeded sample of literal pairs then goes through the full
/// per-place report, and each of its symbols is compared with the symbol
/// of the class representatives.
pub fn reciprocity(bound: i64, literal_samples: usize, cfg: &SweepConfig) -> Outcome {
    let literals = rationals_in_box(bound);
    let literal_classes: Vec<Factored> = cfg.exec.map(&literals, |x| {
        Factored::of(x).expect("box entries factor").square_class()
    });
    let classes: Vec<Factored> = literal_classes
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let indices: Vec<usize> = (0..classes.len()).collect();
    let mut tally = gather(cfg.exec.map(&indices, |&i| {
        let mut t = Tally::default();
        let a = &classes[i];
        for b in &classes[i..] {
            t.check(symbols::reciprocity_product(a, b) == SignValue::Plus, || {
                format!("product over places of ({}, {}) is -1", a.to_bigint(), b.to_bigint())
            });
        }
        t
    }));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(usize, usize)> = (0..literal_samples)
        .map(|_| {
            (
                rng.random_range(0..literals.len()),
                rng.random_range(0..literals.len()),
            )
        })
        .collect();
    tally = tally.merge(gather(cfg.exec.map(&pairs, |&(i, j)| {
        let mut t = Tally::default();
        let (a, b) = (&literals[i], &literals[j]);
        match symbols::hilbert_reciprocity_check(a, b) {
            Ok(report) => {
                t.check(report.holds(), || format!("reciprocity fails for ({a}, {b})"));
                for row in &report.rows {
                    let class = literal_classes[i].symbol_at(&literal_classes[j], row.place);
                    t.check(class == row.symbol, || {
                        format!("({a}, {b})_{} differs from its square class", row.place)
                    });
                }
            }
            Err(e) => t.fail(format!("({a}, {b}): {e}")),
        }
        t
    })));
    tally.finish("reciprocity")
}

/// Closed-form Hilbert symbol against the Hensel search, for integers
/// `0 < |a|, |b| <= max_abs` at every prime `p <= p_max` and at infinity.
pub fn hilbert_oracle(max_abs: i64, p_max: u64, exec: Execution) -> Outcome {
    let places: Vec<Place> = primes_up_to(p_max)
        .into_iter()
        .map(Place::Finite)
        .chain(std::iter::once(Place::Infinity))
        .collect();
    let values: Vec<i64> = (-max_abs..=max_abs).filter(|&x| x != 0).collect();
    let rows: Vec<(Place, i64)> = places
        .iter()
        .flat_map(|&v| values.iter().map(move |&a| (v, a)))
        .collect();
    gather(exec.map(&rows, |&(v, a)| {
        let mut t = Tally::default();
        let qa = q(a, 1);
        for &b in &values {
            let qb = q(b, 1);
            let closed = symbols::hilbert_symbol(&qa, &qb, v);
            let oracle = symbols::hilbert_oracle(&qa, &qb, v, symbols::DEFAULT_ORACLE_LEVEL);
            t.check_result(oracle.map(|o| o == closed), || {
                format!("({a}, {b})_{v}: closed form {closed}")
            });
        }
        t
    }))
    .finish("hilbert-oracle")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZolotarevRow {
    pub p: Prime,
    pub checked: u64,
    pub mismatches: u64,
}

/// Per prime: sign of `x -> ax` on `Z/p` against the Legendre symbol and
/// against Euler's criterion, for `1 <= a < p`.
pub fn zolotarev_rows(p_max: u64, exec: Execution) -> Vec<ZolotarevRow> {
    exec.map(&odd_primes_up_to(p_max), |&p| {
        let mut mismatches = 0;
        let pp = p.get();
        for a in 1..pp {
            let big = BigInt::from(a);
            let sign = symbols::zolotarev_sign(&big, p).map(SignValue::to_i8);
            let leg = symbols::legendre(&big, p);
            let euler = if arith::pow_mod(a, (pp - 1) / 2, pp) == 1 { 1 } else { -1 };
            match (sign, leg) {
                (Ok(s), Ok(l)) if s == l && l == euler => {}
                _ => mismatches += 1,
            }
        }
        ZolotarevRow {
            p,
            checked: pp - 1,
            mismatches,
        }
    })
}

pub fn zolotarev(p_max: u64, exec: Execution) -> Outcome {
    let mut t = Tally::default();
    for row in zolotarev_rows(p_max, exec) {
        t.checked += row.checked;
        for _ in 0..row.mismatches {
            t.fail(format!("sign and Legendre symbol disagree mod {}", row.p));
        }
    }
    t.finish("zolotarev")
}

/// All `(l, k)` rows for odd `l <= ell_max`, `1 <= k <= k_max`.
pub fn imj_consistency_rows(
    ell_max: u64,
    k_max: u32,
    exec: Execution,
) -> Result<Vec<imj::ImjConsistency>> {
    let orders = imj::imj_orders(k_max)?;
    let grid: Vec<(Prime, u32)> = odd_primes_up_to(ell_max)
        .into_iter()
        .flat_map(|l| (1..=k_max).map(move |k| (l, k)))
        .collect();
    exec.map(&grid, |&(l, k)| imj::imj_consistency_with(l, k, &orders[k as usize - 1]))
        .into_iter()
        .collect()
}

pub fn imj_consistency(ell_max: u64, k_max: u32, exec: Execution) -> Outcome {
    let mut t = Tally::default();
    match imj_consistency_rows(ell_max, k_max, exec) {
        Ok(rows) => {
            for r in rows {
                t.check(r.holds, || {
                    format!(
                        "l={} k={}: l-part {} vs sphere {} (closed form {})",
                        r.ell, r.k, r.imj_ell_part, r.sphere_order, r.closed_form
                    )
                });
            }
        }
        Err(e) => t.fail(e.to_string()),
    }
    t.finish("imj-consistency")
}

/// Recurrence denominators against von Staudt-Clausen for even `n <= n_max`,
/// vanishing at odd `n >= 3`, and `B_12`.
pub fn bernoulli(n_max: u32) -> Outcome {
    let mut t = Tally::default();
    let table = imj::bernoulli_table(n_max.max(12));
    for n in 2..=n_max {
        let b = &table[n as usize];
        if n % 2 == 1 {
            t.check(b.is_zero(), || format!("B_{n} = {b} is not zero"));
            continue;
        }
        let vsc = imj::vsc_denominator(n).map(BigInt::from);
        t.check_result(vsc.map(|d| &d == b.denom()), || {
            format!("denominator of B_{n} = {b} differs from the prime product")
        });
    }
    let b12 = BigRational::new((-691).into(), 2730.into());
    t.check(table[12] == b12, || format!("B_12 = {}", table[12]));
    t.finish("bernoulli")
}

/// `rezk_log_pi0(1 + l)` is a unit and the Teichmüller representatives are
/// in the kernel.
pub fn rezk(ells: &[u64], precision: u32, exec: Execution) -> Outcome {
    let rows: Vec<(u64, u64)> = ells
        .iter()
        .flat_map(|&l| (0..l).map(move |a| (l, a)))
        .collect();
    gather(exec.map(&rows, |&(l, a)| {
        let mut t = Tally::default();
        let ell = match Prime::new(l) {
            Ok(p) => p,
            Err(e) => {
                t.fail(e.to_string());
                return t;
            }
        };
        if a == 0 {
            let r = PadicNumber::from_integer(1 + l, ell, precision)
                .and_then(|x| padic::rezk_log_pi0(&x));
            t.check_result(r.map(|r| r.is_unit()), || {
                format!("rezk_log_pi0(1 + {l}) is not a {l}-adic unit")
            });
            return t;
        }
        let teich = padic::teichmuller(&BigInt::from(a), ell, precision);
        let root = teich.as_ref().map_err(Clone::clone).and_then(|w| {
            Ok(w.pow(l as i64 - 1)? == PadicNumber::one(ell, precision)?
                && w.to_residue()? % l == BigUint::from(a))
        });
        t.check_result(root, || format!("teichmuller({a}) mod {l} is not a root of unity"));
        let kernel = teich.and_then(|w| padic::rezk_log_pi0(&w));
        t.check_result(kernel.map(|r| r.is_zero()), || {
            format!("rezk_log_pi0 of the Teichmüller lift of {a} mod {l} is nonzero")
        });
        t
    }))
    .finish("rezk")
}

pub fn surjectivity_rows(
    ell_max: u64,
    p_max: u64,
    k_max: u32,
    exec: Execution,
) -> Vec<Result<imj::SurjectivityRow>> {
    let grid: Vec<(Prime, Prime, u32)> = odd_primes_up_to(ell_max)
        .into_iter()
        .flat_map(|l| {
            primes_up_to(p_max)
                .into_iter()
                .filter(move |&p| p != l)
                .flat_map(move |p| (1..=k_max).map(move |k| (l, p, k)))
        })
        .collect();
    exec.map(&grid, |&(l, p, k)| imj::surjectivity_check(l, p, k))
}

pub fn surjectivity(ell_max: u64, p_max: u64, k_max: u32, exec: Execution) -> Outcome {
    let mut t = Tally::default();
    for row in surjectivity_rows(ell_max, p_max, k_max, exec) {
        match row {
            Ok(r) => t.check(r.holds, || {
                format!(
                    "l={} p={} k={}: v(p^k - 1) = {} < {}",
                    r.ell, r.p, r.k, r.field_valuation, r.sphere_valuation
                )
            }),
            Err(e) => t.check_result(Err(e), String::new),
        }
    }
    t.finish("surjectivity")
}

/// The first `count` topological generators `u >= 2` of `Z_l^x`.
pub fn generators(ell: Prime, count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    let mut u = 2u64;
    while out.len() < count {
        if u % ell.get() != 0 && padic::is_topological_generator(u, ell)? {
            out.push(u);
        }
        u += 1;
    }
    Ok(out)
}

/// The norm identity in `Z_l / l^N` for the first two generators of each
/// odd `l <= ell_max`.
pub fn norm_identity(ell_max: u64, d_max: u32, m_max: u32, precision: u32, exec: Execution) -> Outcome {
    let grid: Vec<Prime> = odd_primes_up_to(ell_max);
    gather(exec.map(&grid, |&l| {
        let mut t = Tally::default();
        let gens = match generators(l, 2) {
            Ok(g) => g,
            Err(e) => {
                t.fail(e.to_string());
                return t;
            }
        };
        for &u in &gens {
            for d in 1..=d_max {
                for m in 1..=m_max {
                    t.check_result(imj::norm_identity_check(l, u, d, m, precision), || {
                        format!("norm identity fails for l={l} u={u} d={d} m={m}")
                    });
                }
            }
        }
        t
    }))
    .finish("norm-identity")
}

/// Quillen's orders for prime powers `q <= q_max` and `1 <= i <= i_max`,
/// against `q^i - 1` in machine integers.
pub fn quillen(q_max: u64, i_max: u32, exec: Execution) -> Outcome {
    let qs: Vec<u64> = (2..=q_max).filter(|&q| arith::prime_power(q).is_some()).collect();
    gather(exec.map(&qs, |&qq| {
        let mut t = Tally::default();
        t.check_result(
            imj::k_finite_field(0, qq).map(|r| r.order == imj::GroupOrder::InfiniteCyclic),
            || format!("K_0(F_{qq}) is not Z"),
        );
        for i in 1..=i_max {
            let expected = (qq as u128).checked_pow(i).map(|x| x - 1);
            let odd = imj::k_finite_field(2 * i - 1, qq).map(|r| {
                let matches = match (r.finite_order(), expected) {
                    (Some(n), Some(e)) => *n == BigUint::from(e),
                    _ => false,
                };
                matches && r.is_consistent() && imj::prime_to_characteristic(&r, qq)
            });
            t.check_result(odd, || format!("|K_{}(F_{qq})| is not {qq}^{i} - 1", 2 * i - 1));
            let even = imj::k_finite_field(2 * i, qq).map(|r| r.is_trivial());
            t.check_result(even, || format!("K_{}(F_{qq}) is not zero", 2 * i));
        }
        t
    }))
    .finish("quillen")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi2Witness {
    pub p: Prime,
    pub a: i64,
    pub b: i64,
}

/// The first pair `(a, b)` in `1, -1, 2, -2, ...` with `(a, b)_p = -1`.
/// The closed form finds it; the Hensel search confirms it.
pub fn pi2_witness(p: Prime) -> Result<Option<Pi2Witness>> {
    let bound = p.get() as i64 + 1;
    let order: Vec<i64> = (1..=bound).flat_map(|x| [x, -x]).collect();
    let v = Place::Finite(p);
    for &a in &order {
        for &b in &order {
            if symbols::hilbert_symbol(&q(a, 1), &q(b, 1), v) == SignValue::Minus {
                let oracle =
                    symbols::hilbert_oracle(&q(a, 1), &q(b, 1), v, symbols::DEFAULT_ORACLE_LEVEL)?;
                if oracle != SignValue::Minus {
                    return Err(Error::InvalidArgument(format!(
                        "({a}, {b})_{p}: closed form -1 but the conic has a point"
                    )));
                }
                return Ok(Some(Pi2Witness { p, a, b }));
            }
        }
    }
    Ok(None)
}

pub fn pi2_nontrivial(p_max: u64, exec: Execution) -> Outcome {
    let mut t = Tally::default();
    for (p, w) in primes_up_to(p_max)
        .iter()
        .zip(exec.map(&primes_up_to(p_max), |&p| pi2_witness(p)))
    {
        t.check_result(w.map(|w| w.is_some()), || format!("no pair with symbol -1 at {p}"));
    }
    t.finish("pi2-nontrivial")
}

/// `2 (1 + 3 + ... + 3^(k-1)) + 1 = 3^k` for `k <= depth`, directly and
/// through the 3-adic limit check.
pub fn appendix_a(depth: u32) -> Outcome {
    let mut t = Tally::default();
    let three = BigUint::from(3u32);
    let mut sum = BigUint::zero();
    let mut power = BigUint::one();
    for k in 1..=depth {
        sum += &power;
        power *= &three;
        t.check(BigUint::from(2u32) * &sum + 1u32 == power, || {
            format!("2 * sum_(i<{k}) 3^i + 1 != 3^{k}")
        });
    }
    let three = Prime::new(3).expect("3 is prime");
    t.check_result(padic::appendix_a_witness(three, depth), || {
        format!("partial sums do not approach -1/2 in Z_3 to depth {depth}")
    });
    t.finish("appendix-a")
}

fn random_prime(rng: &mut ChaCha8Rng, primes: &[u64]) -> Prime {
    Prime::new(primes[rng.random_range(0..primes.len())]).expect("sieve output is prime")
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> NonzeroRational {
    let n = rng.random_range(1..=bound) * if rng.random_bool(0.5) { -1 } else { 1 };
    q(n, rng.random_range(1..=bound))
}

/// `p^(v_p(x))` by repeated division, independent of the valuation code.
fn prime_power_part(x: &NonzeroRational, p: u64) -> NonzeroRational {
    let strip = |n: &BigInt| {
        let mut n = n.clone();
        let mut e = 0i64;
        while (&n % p).is_zero() {
            n /= p;
            e += 1;
        }
        e
    };
    NonzeroRational::pow_of_prime(p, strip(x.numer()) - strip(x.denom()))
}

/// Low-degree J values: identity and negation on pi_0, inversion on the
/// wild pi_1 (checked as `x j(x) = 1` on random units at precision 64),
/// and the tame pi_1 map, multiplicative and equal to `p^(v_p(x))`.
pub fn low_degree(unit_samples: usize, tame_samples: usize, cfg: &SweepConfig) -> Outcome {
    const PRECISION: u32 = 64;
    let mut t = Tally::default();
    for k in -1000..=1000i64 {
        let k = BigInt::from(k);
        t.check(jshadow::j_real_pi0(&k) == k, || format!("j_real_pi0({k}) != {k}"));
        t.check(jshadow::j_wild_pi0(&k) == -&k, || format!("j_wild_pi0({k}) != -{k}"));
    }

    let primes = arith::primes_up_to(100);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let units: Vec<(Prime, NonzeroRational)> = (0..unit_samples)
        .map(|_| {
            let p = random_prime(&mut rng, &primes);
            loop {
                let x = random_rational(&mut rng, 1_000_000);
                if padic::vp(&x, p) == 0 && !(x.numer() % p.get()).is_zero() {
                    break (p, x);
                }
            }
        })
        .collect();
    t = t.merge(gather(cfg.exec.map(&units, |(p, x)| {
        let mut t = Tally::default();
        let r = PadicNumber::embed(x, *p, PRECISION).and_then(|e| {
            let inv = jshadow::j_wild_pi1(&e)?;
            Ok(e.mul(&inv)? == PadicNumber::one(*p, PRECISION)? && inv.represents(&x.recip()))
        });
        t.check_result(r, || format!("x * j_wild_pi1(x) != 1 for x = {x} at {p}"));
        t
    })));

    let triples: Vec<(Prime, NonzeroRational, NonzeroRational)> = (0..tame_samples)
        .map(|_| {
            let p = random_prime(&mut rng, &primes);
            (p, random_rational(&mut rng, 1_000_000), random_rational(&mut rng, 1_000_000))
        })
        .collect();
    t = t.merge(gather(cfg.exec.map(&triples, |(p, x, y)| {
        let mut t = Tally::default();
        let (jx, jy) = (jshadow::j_tame_pi1(x, *p), jshadow::j_tame_pi1(y, *p));
        t.check(jshadow::j_tame_pi1(&x.mul(y), *p) == jx.mul(&jy), || {
            format!("j_tame_pi1 not multiplicative on {x}, {y} at {p}")
        });
        t.check(jx == prime_power_part(x, p.get()), || {
            format!("j_tame_pi1({x}) at {p} is not p^v")
        });
        t
    })));
    t.finish("low-degree")
}

/// `1 - l^(k-1)` is an `l`-adic unit for odd `l <= ell_max`, `2 <= k <= k_max`.
pub fn unit_factor(ell_max: u64, k_max: u32) -> Outcome {
    let mut t = Tally::default();
    for l in odd_primes_up_to(ell_max) {
        for k in 2..=k_max {
            t.check_result(imj::unit_factor_check(l, k), || {
                format!("1 - {l}^{} is not a unit", k - 1)
            });
        }
    }
    t.finish("unit-factor")
}

/// `|x|_inf * prod_p |x|_p = 1` on random rationals with `|num|, den <= bound`.
pub fn adelic_product(samples: usize, bound: i64, cfg: &SweepConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xade1);
    let xs: Vec<NonzeroRational> = (0..samples).map(|_| random_rational(&mut rng, bound)).collect();
    gather(cfg.exec.map(&xs, |x| {
        let mut t = Tally::default();
        t.check_result(jshadow::adelic_norm_product(x).map(|n| n == NonzeroRational::one()), || {
            format!("adelic product of {x} is not 1")
        });
        t
    }))
    .finish("adelic-product")
}

/// `k1_sphere_order` agrees across the first `gens` generators, matches
/// its closed form, and is symmetric under `k -> -k`.
pub fn k1_generators(ell_max: u64, k_max: i64, gens: usize, exec: Execution) -> Outcome {
    let grid: Vec<(Prime, i64)> = odd_primes_up_to(ell_max)
        .into_iter()
        .flat_map(|l| (1..=k_max).map(move |k| (l, k)))
        .collect();
    gather(exec.map(&grid, |&(l, k)| {
        let mut t = Tally::default();
        let orders = generators(l, gens).and_then(|us| {
            let mut out = Vec::new();
            for u in us {
                for kk in [k, -k] {
                    let r = imj::k1_sphere_order(l, kk, u)?;
                    out.push((r.report.order.clone(), r.consistent));
                }
            }
            Ok(out)
        });
        t.check_result(
            orders.map(|os| os.iter().all(|(o, c)| *c && *o == os[0].0)),
            || format!("K(1)-local order at l={l}, k=+-{k} depends on the generator"),
        );
        t
    }))
    .finish("k1-generators")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_size() {
        // 2 * #{(n, d) coprime in [1, 3]^2} = 2 * 7
        assert_eq!(rationals_in_box(3).len(), 14);
    }

    #[test]
    fn small_suites_pass_in_both_modes() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let cfg = SweepConfig { exec, seed: 7 };
            for o in [
                reciprocity(12, 300, &cfg),
                hilbert_oracle(6, 13, exec),
                zolotarev(60, exec),
                imj_consistency(23, 6, exec),
                bernoulli(20),
                rezk(&[3, 5], 16, exec),
                surjectivity(13, 13, 6, exec),
                norm_identity(7, 3, 3, 10, exec),
                quillen(16, 4, exec),
                pi2_nontrivial(30, exec),
                appendix_a(10),
                low_degree(50, 200, &cfg),
                unit_factor(13, 6),
                adelic_product(100, 1000, &cfg),
                k1_generators(11, 8, 2, exec),
            ] {
                assert!(o.passed(), "{o:?}");
            }
        }
    }

    #[test]
    fn pi2_witnesses() {
        let w = pi2_witness(Prime::new(2).unwrap()).unwrap().unwrap();
        assert_eq!((w.a, w.b), (-1, -1));
        let w = pi2_witness(Prime::new(3).unwrap()).unwrap().unwrap();
        assert_eq!((w.a, w.b), (-1, 3));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SweepConfig::default()).is_err());
    }
}
