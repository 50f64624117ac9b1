//! Bernoulli numbers, orders of the image of J, homotopy orders of the
//! K(1)-local sphere, and Quillen's K-groups of finite fields.
//!
//! Everything here is exact. Orders are reported together with their
//! prime factorization so that `l`-parts can be compared directly.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{self, Prime};
use crate::error::{Error, Result};
use crate::padic::{self, PadicNumber};

/// `B_n` as an exact rational, with `B_1 = -1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliRational {
    pub index: u32,
    pub value: BigRational,
}

impl fmt::Display for BernoulliRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `B_0 ..= B_n` from `sum_{j<=m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(n: u32) -> Vec<BigRational> {
    let mut table: Vec<BigRational> = Vec::with_capacity(n as usize + 1);
    table.push(BigRational::one());
    for m in 1..=n as usize {
        // binomial row C(m+1, j)
        let mut c = BigInt::one();
        let mut acc = BigRational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * &c;
            }
            c = c * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        table.push(-acc / BigInt::from(m + 1));
    }
    table
}

pub fn bernoulli(n: u32) -> BernoulliRational {
    let value = bernoulli_table(n).pop().expect("table is nonempty");
    BernoulliRational { index: n, value }
}

/// Product of the primes `q` with `(q - 1) | n`.
pub fn vsc_denominator(n: u32) -> Result<BigUint> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "von Staudt-Clausen needs a positive even index, got {n}"
        )));
    }
    let n = n as u64;
    Ok((1..=n)
        .filter(|d| n % d == 0 && arith::is_prime(d + 1))
        .map(|d| BigUint::from(d + 1))
        .product())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigUint),
    InfiniteCyclic,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::InfiniteCyclic => f.write_str("Z"),
        }
    }
}

impl Serialize for GroupOrder {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The order of an abelian group with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupOrderReport {
    pub order: GroupOrder,
    pub factorization: Vec<(u64, u32)>,
}

const TRIAL_BOUND: u64 = 100_000;

fn factor_order(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    for p in arith::primes_up_to(TRIAL_BOUND) {
        if rest.is_one() {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if !rest.is_one() {
        out.extend(arith::factor_big(&rest)?);
    }
    Ok(out)
}

impl GroupOrderReport {
    pub fn trivial() -> Self {
        GroupOrderReport {
            order: GroupOrder::Finite(BigUint::one()),
            factorization: Vec::new(),
        }
    }

    pub fn infinite_cyclic() -> Self {
        GroupOrderReport {
            order: GroupOrder::InfiniteCyclic,
            factorization: Vec::new(),
        }
    }

    pub fn finite(order: BigUint) -> Result<Self> {
        if order.is_zero() {
            return Err(Error::Zero);
        }
        let factorization = factor_order(&order)?;
        Ok(GroupOrderReport {
            order: GroupOrder::Finite(order),
            factorization,
        })
    }

    /// `l^e` for a finite group, where `l^e` exactly divides the order.
    pub fn ell_part(&self, ell: Prime) -> Option<BigUint> {
        match self.order {
            GroupOrder::InfiniteCyclic => None,
            GroupOrder::Finite(_) => Some(ell.pow(self.exponent_of(ell))),
        }
    }

    pub fn exponent_of(&self, ell: Prime) -> u32 {
        self.factorization
            .iter()
            .find(|(p, _)| *p == ell.get())
            .map_or(0, |&(_, e)| e)
    }

    pub fn odd_part(&self) -> Option<BigUint> {
        match &self.order {
            GroupOrder::InfiniteCyclic => None,
            GroupOrder::Finite(n) => Some(n >> n.trailing_zeros().unwrap_or(0) as usize),
        }
    }

    pub fn finite_order(&self) -> Option<&BigUint> {
        match &self.order {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::InfiniteCyclic => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.finite_order().is_some_and(One::is_one)
    }

    /// The factorization multiplies back to the order.
    pub fn is_consistent(&self) -> bool {
        match &self.order {
            GroupOrder::InfiniteCyclic => self.factorization.is_empty(),
            GroupOrder::Finite(n) => {
                let back: BigUint = self
                    .factorization
                    .iter()
                    .map(|&(p, e)| num_traits::pow(BigUint::from(p), e as usize))
                    .product();
                back == *n
            }
        }
    }
}

/// Denominator of `B_2k / 4k`: the order of the image of J in the stable
/// `(4k-1)`-stem. Its odd part equals that of `den(B_2k / k)`.
pub fn imj_order(k: u32) -> Result<GroupOrderReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("imj_order needs k >= 1".into()));
    }
    imj_order_from(&bernoulli(2 * k).value, k)
}

fn imj_order_from(b2k: &BigRational, k: u32) -> Result<GroupOrderReport> {
    let ratio = b2k / BigInt::from(4 * k as u64);
    GroupOrderReport::finite(ratio.denom().magnitude().clone())
}

/// `v_l(u^k - 1)` for `k != 0`.
///
/// Positive `k` with a small power is done exactly over the integers.
/// Otherwise `u^k` is formed in `Z_l` at increasing precision until
/// `u^k - 1` is resolved to at least one digit.
pub fn valuation_of_power_minus_one(u: &BigInt, k: i64, ell: Prime) -> Result<u32> {
    if k == 0 {
        return Err(Error::InvalidArgument("exponent must be nonzero".into()));
    }
    if arith::reduce_mod_u64(u, ell.get()) == 0 {
        return Err(Error::DivisibleByPrime {
            value: u.to_string(),
            prime: ell.get(),
        });
    }
    const EXACT_BITS: u64 = 4096;
    if k > 0 && u.bits().saturating_mul(k as u64) <= EXACT_BITS {
        let d: BigInt = num_traits::pow(u.clone(), k as usize) - 1;
        if d.is_zero() {
            return Err(Error::InvalidArgument(format!("{u}^{k} = 1")));
        }
        return arith::valuation(&d, ell.get());
    }
    let mut precision = 16u32;
    loop {
        let x = PadicNumber::from_integer(u.clone(), ell, precision)?.pow(k)?;
        match x.sub(&PadicNumber::one(ell, precision)?) {
            Ok(d) => return Ok(d.valuation()? as u32),
            Err(Error::PrecisionUnderflow) if precision < padic::MAX_PRECISION => {
                precision = (precision * 2).min(padic::MAX_PRECISION);
            }
            Err(Error::PrecisionUnderflow) => {
                return Err(Error::TooLarge(format!("v_{ell}({u}^{k} - 1)")))
            }
            Err(e) => return Err(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K1SphereOrder {
    pub ell: Prime,
    pub k: i64,
    pub generator: String,
    /// `v_l(u^k - 1)`.
    pub valuation: u32,
    pub report: GroupOrderReport,
    /// `l^(1 + v_l(k))` if `(l - 1) | k`, else 1.
    pub closed_form: String,
    pub consistent: bool,
}

fn closed_form_order(ell: Prime, k: i64) -> BigUint {
    let l = ell.get() as i64;
    if k % (l - 1) == 0 {
        let v = arith::valuation(&BigInt::from(k), ell.get()).expect("k != 0");
        ell.pow(1 + v)
    } else {
        BigUint::one()
    }
}

/// Order of `pi_{2k-1}` of the K(1)-local sphere at `l`, i.e. of
/// `Z_l / (u^k - 1)`, for a topological generator `u`.
pub fn k1_sphere_order(ell: Prime, k: i64, u: impl Into<BigInt>) -> Result<K1SphereOrder> {
    let u = u.into();
    if !padic::is_topological_generator(u.clone(), ell)? {
        return Err(Error::NotGenerator {
            value: u.to_string(),
            ell: ell.get(),
        });
    }
    let valuation = valuation_of_power_minus_one(&u, k, ell)?;
    let order = ell.pow(valuation);
    let closed = closed_form_order(ell, k);
    Ok(K1SphereOrder {
        ell,
        k,
        generator: u.to_string(),
        valuation,
        consistent: order == closed,
        closed_form: closed.to_string(),
        report: GroupOrderReport::finite(order)?,
    })
}

/// `K_n(F_q)`: `Z` in degree 0, cyclic of order `q^i - 1` in degree
/// `2i - 1`, zero in positive even degrees.
pub fn k_finite_field(n: u32, q: u64) -> Result<GroupOrderReport> {
    if arith::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if n == 0 {
        return Ok(GroupOrderReport::infinite_cyclic());
    }
    if n % 2 == 0 {
        return Ok(GroupOrderReport::trivial());
    }
    let i = n.div_ceil(2);
    GroupOrderReport::finite(num_traits::pow(BigUint::from(q), i as usize) - 1u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImjConsistency {
    pub ell: Prime,
    pub k: u32,
    pub generator: u64,
    pub imj_order: String,
    /// `l`-part of the image-of-J order.
    pub imj_ell_part: String,
    /// `|pi_{4k-1}|` of the K(1)-local sphere.
    pub sphere_order: String,
    pub closed_form: String,
    pub holds: bool,
}

/// Compares the `l`-part of `den(B_2k / 4k)` with `l^(v_l(u^2k - 1))`.
pub fn imj_consistency_check(ell: Prime, k: u32) -> Result<ImjConsistency> {
    imj_consistency_with(ell, k, &imj_order(k)?)
}

/// As [`imj_consistency_check`] with a precomputed [`imj_order`]`(k)`.
pub fn imj_consistency_with(ell: Prime, k: u32, imj: &GroupOrderReport) -> Result<ImjConsistency> {
    if !ell.is_odd() {
        return Err(Error::EvenPrime("imj_consistency_check"));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let generator = padic::canonical_generator(ell)?;
    let sphere = k1_sphere_order(ell, 2 * k as i64, generator)?;
    let ell_part = imj.ell_part(ell).expect("image of J is finite");
    let sphere_order = sphere.report.finite_order().expect("finite").clone();
    Ok(ImjConsistency {
        ell,
        k,
        generator,
        imj_order: imj.order.to_string(),
        imj_ell_part: ell_part.to_string(),
        sphere_order: sphere_order.to_string(),
        closed_form: sphere.closed_form.clone(),
        holds: ell_part == sphere_order && sphere.consistent,
    })
}

/// Precomputed image-of-J orders for `k = 1..=k_max` from one Bernoulli table.
pub fn imj_orders(k_max: u32) -> Result<Vec<GroupOrderReport>> {
    let table = bernoulli_table(2 * k_max);
    (1..=k_max)
        .map(|k| imj_order_from(&table[2 * k as usize], k))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurjectivityRow {
    pub ell: Prime,
    pub p: Prime,
    pub k: u32,
    pub generator: u64,
    /// `v_l(p^k - 1)`: the `l`-adic size of `K_{2k-1}(F_p)`.
    pub field_valuation: u32,
    /// `v_l(u^k - 1)`: the `l`-adic size of `pi_{2k-1}` of the K(1)-local sphere.
    pub sphere_valuation: u32,
    pub holds: bool,
}

pub fn surjectivity_check(ell: Prime, p: Prime, k: u32) -> Result<SurjectivityRow> {
    if !ell.is_odd() {
        return Err(Error::EvenPrime("surjectivity_check"));
    }
    if p == ell {
        return Err(Error::InvalidArgument(format!("p must differ from l = {ell}")));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let generator = padic::canonical_generator(ell)?;
    let field_valuation = valuation_of_power_minus_one(&p.to_bigint(), k as i64, ell)?;
    let sphere_valuation = valuation_of_power_minus_one(&BigInt::from(generator), k as i64, ell)?;
    Ok(SurjectivityRow {
        ell,
        p,
        k,
        generator,
        field_valuation,
        sphere_valuation,
        holds: field_valuation >= sphere_valuation,
    })
}

/// `(u^d)^m - 1 = (u^m - 1)(1 + u^m + ... + u^(m(d-1)))` in `Z_l / l^N`.
pub fn norm_identity_check(
    ell: Prime,
    u: impl Into<BigInt>,
    d: u32,
    m: u32,
    precision: u32,
) -> Result<bool> {
    let u = u.into();
    if d == 0 || m == 0 {
        return Err(Error::InvalidArgument("d and m must be positive".into()));
    }
    if !padic::is_topological_generator(u.clone(), ell)? {
        return Err(Error::NotGenerator {
            value: u.to_string(),
            ell: ell.get(),
        });
    }
    if precision == 0 || precision > padic::MAX_PRECISION {
        return Err(Error::PrecisionOutOfRange {
            requested: precision as i64,
            max: padic::MAX_PRECISION,
        });
    }
    let modulus = ell.pow(precision);
    let u = arith::reduce_mod(&u, &modulus);
    let um = u.modpow(&BigUint::from(m), &modulus);
    let minus_one = |x: BigUint| (x + &modulus - 1u32) % &modulus;
    let lhs = minus_one(um.modpow(&BigUint::from(d), &modulus));
    let mut geometric = BigUint::zero();
    let mut power = BigUint::one();
    for _ in 0..d {
        geometric = (geometric + &power) % &modulus;
        power = (power * &um) % &modulus;
    }
    let rhs = (minus_one(um) * geometric) % &modulus;
    Ok(lhs == rhs)
}

/// Whether `1 - l^(k-1)` is an `l`-adic unit.
pub fn unit_factor_check(ell: Prime, k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidArgument("unit_factor_check needs k >= 2".into()));
    }
    let factor = BigInt::one() - ell.to_bigint().pow(k - 1);
    Ok(arith::valuation(&factor, ell.get())? == 0)
}

/// `gcd(|K_{2i-1}(F_q)|, q) = 1`.
pub fn prime_to_characteristic(report: &GroupOrderReport, q: u64) -> bool {
    match report.finite_order() {
        Some(n) => n.gcd(&BigUint::from(q)).is_one(),
        None => true,
    }
}

/// `B_n` has squarefree denominator and vanishes for odd `n >= 3`.
pub fn bernoulli_invariants_hold(b: &BernoulliRational) -> bool {
    if b.index >= 3 && b.index % 2 == 1 {
        return b.value.is_zero();
    }
    b.value
        .denom()
        .to_u64()
        .map_or(true, |d| arith::factor_u64(d).values().all(|&e| e == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0).value, rat(1, 1));
        assert_eq!(bernoulli(1).value, rat(-1, 2));
        assert_eq!(bernoulli(2).value, rat(1, 6));
        assert_eq!(bernoulli(12).value, rat(-691, 2730));
        assert!(bernoulli(13).value.is_zero());
    }

    #[test]
    fn faulhaber_oracle() {
        // sum_{i<m} i^n = 1/(n+1) sum_j C(n+1, j) B_j m^(n+1-j), checked by brute force
        let table = bernoulli_table(20);
        for n in 0..=20u32 {
            for m in 1..=12i64 {
                let brute: BigInt = (0..m).map(|i| BigInt::from(i).pow(n)).sum();
                let mut c = BigInt::one();
                let mut acc = BigRational::zero();
                for (j, b) in table.iter().enumerate().take(n as usize + 1) {
                    acc += b * &c * BigInt::from(m).pow(n + 1 - j as u32);
                    c = c * BigInt::from(n as usize + 1 - j) / BigInt::from(j + 1);
                }
                acc /= BigInt::from(n + 1);
                assert_eq!(acc, BigRational::from_integer(brute), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn von_staudt_clausen_examples() {
        assert_eq!(vsc_denominator(2).unwrap(), BigUint::from(6u32));
        assert_eq!(vsc_denominator(4).unwrap(), BigUint::from(30u32));
        assert_eq!(vsc_denominator(12).unwrap(), BigUint::from(2730u32));
        assert!(vsc_denominator(3).is_err());
        assert!(vsc_denominator(0).is_err());
    }

    #[test]
    fn imj_order_examples() {
        for (k, order, odd) in [(1, 24u32, 3u32), (2, 240, 15), (3, 504, 63)] {
            let r = imj_order(k).unwrap();
            assert_eq!(r.finite_order().unwrap(), &BigUint::from(order));
            assert_eq!(r.odd_part().unwrap(), BigUint::from(odd));
            assert!(r.is_consistent());
            // odd part agrees with den(B_2k / k)
            let b = bernoulli(2 * k).value / BigInt::from(k);
            let den = b.denom().magnitude().clone();
            assert_eq!(r.odd_part().unwrap(), &den >> den.trailing_zeros().unwrap() as usize);
        }
        assert!(imj_order(0).is_err());
        let batch = imj_orders(6).unwrap();
        assert_eq!(batch[2], imj_order(3).unwrap());
    }

    #[test]
    fn k1_sphere_examples() {
        let r = k1_sphere_order(pr(3), 1, 2).unwrap();
        assert!(r.report.is_trivial() && r.consistent);
        let r = k1_sphere_order(pr(3), 2, 2).unwrap();
        assert_eq!(r.report.finite_order().unwrap(), &BigUint::from(3u32));
        assert!(r.consistent);
        let r = k1_sphere_order(pr(5), 4, 2).unwrap();
        assert_eq!(r.report.finite_order().unwrap(), &BigUint::from(5u32));
        assert!(matches!(k1_sphere_order(pr(5), 4, 7), Err(Error::NotGenerator { .. })));
        assert!(k1_sphere_order(pr(5), 0, 2).is_err());
    }

    #[test]
    fn negative_degrees_use_the_padic_route() {
        for k in 1..=40i64 {
            let pos = k1_sphere_order(pr(7), k, 3).unwrap();
            let neg = k1_sphere_order(pr(7), -k, 3).unwrap();
            assert_eq!(pos.report, neg.report, "k = {k}");
            assert!(neg.consistent);
        }
        // large exponent forces the p-adic route for positive k as well
        let big = k1_sphere_order(pr(5), 4 * 5i64.pow(6), 2).unwrap();
        assert_eq!(big.valuation, 7);
    }

    #[test]
    fn quillen_examples() {
        assert_eq!(k_finite_field(1, 5).unwrap().finite_order().unwrap(), &BigUint::from(4u32));
        assert_eq!(k_finite_field(3, 2).unwrap().finite_order().unwrap(), &BigUint::from(3u32));
        assert!(k_finite_field(4, 9).unwrap().is_trivial());
        assert_eq!(k_finite_field(0, 4).unwrap().order, GroupOrder::InfiniteCyclic);
        assert!(matches!(k_finite_field(1, 12), Err(Error::NotPrimePower(12))));
        assert!(k_finite_field(1, 1).is_err());
    }

    #[test]
    fn consistency_examples() {
        let r = imj_consistency_check(pr(3), 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.imj_ell_part, "3");
        let r = imj_consistency_check(pr(5), 2).unwrap();
        assert!(r.holds);
        assert_eq!((r.imj_ell_part.as_str(), r.generator), ("5", 2));
        let r = imj_consistency_check(pr(7), 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.imj_ell_part, "1");
    }

    #[test]
    fn surjectivity_examples() {
        let r = surjectivity_check(pr(3), pr(2), 2).unwrap();
        assert!(r.holds && r.field_valuation == 1);
        let r = surjectivity_check(pr(5), pr(2), 4).unwrap();
        assert!(r.holds && r.field_valuation == 1);
        let r = surjectivity_check(pr(3), pr(7), 1).unwrap();
        assert!(r.holds && r.field_valuation == 1 && r.sphere_valuation == 0);
        assert!(surjectivity_check(pr(3), pr(3), 1).is_err());
    }

    #[test]
    fn norm_identity_examples() {
        assert!(norm_identity_check(pr(3), 2, 1, 5, 20).unwrap());
        assert!(norm_identity_check(pr(3), 2, 2, 3, 20).unwrap());
        assert!(norm_identity_check(pr(5), 2, 4, 2, 20).unwrap());
        assert_eq!(2u64.pow(6) - 1, 7 * 9);
        assert!(norm_identity_check(pr(5), 7, 2, 2, 20).is_err());
    }

    #[test]
    fn unit_factor_examples() {
        assert!(unit_factor_check(pr(3), 2).unwrap());
        assert!(unit_factor_check(pr(5), 3).unwrap());
        assert!(unit_factor_check(pr(5), 1).is_err());
    }
}
