//! Quadratic residue symbols, Zolotarev signs, Hilbert symbols at every
//! place of `Q`, and the tame symbol.
//!
//! Hilbert symbols are evaluated by their closed forms after clearing
//! denominators (`n/d` and `n*d` lie in the same square class).
//! [`hilbert_oracle`] decides the same question by searching for a
//! primitive point on the conic and never consults the closed forms.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::arith::{self, Prime};
use crate::error::{Error, Result};
use crate::padic::vp;
use crate::rational::NonzeroRational;

/// A place of `Q`. Finite places sort by prime, infinity last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(Prime),
    Infinity,
}

impl Place {
    pub fn finite(p: u64) -> Result<Self> {
        Prime::new(p).map(Place::Finite)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" => Ok(Place::Infinity),
            _ => s.parse().map(Place::Finite),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element of `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum SignValue {
    #[default]
    Plus,
    Minus,
}

impl SignValue {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            SignValue::Minus
        } else {
            SignValue::Plus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            SignValue::Plus => 1,
            SignValue::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Self> {
        match v {
            1 => Some(SignValue::Plus),
            -1 => Some(SignValue::Minus),
            _ => None,
        }
    }
}

impl Mul for SignValue {
    type Output = SignValue;

    fn mul(self, rhs: SignValue) -> SignValue {
        SignValue::from_parity(self != rhs)
    }
}

impl std::iter::Product for SignValue {
    fn product<I: Iterator<Item = SignValue>>(iter: I) -> Self {
        iter.fold(SignValue::Plus, |a, b| a * b)
    }
}

impl fmt::Display for SignValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignValue::Plus => "+1",
            SignValue::Minus => "-1",
        })
    }
}

impl Serialize for SignValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.to_i8())
    }
}

/// Jacobi symbol `(a/n)` for odd `n`, by the reciprocity ladder.
pub fn jacobi(mut a: u64, mut n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        let s = a.trailing_zeros();
        a >>= s;
        if s % 2 == 1 && matches!(n % 8, 3 | 5) {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

pub fn legendre(a: &BigInt, p: Prime) -> Result<i8> {
    if !p.is_odd() {
        return Err(Error::EvenPrime("legendre"));
    }
    Ok(jacobi(arith::reduce_mod_u64(a, p.get()), p.get()))
}

pub const MAX_ZOLOTAREV_PRIME: u64 = 1 << 28;

/// Sign of the permutation `x -> a*x` of `Z/p`, by cycle decomposition.
pub fn zolotarev_sign(a: &BigInt, p: Prime) -> Result<SignValue> {
    if !p.is_odd() {
        return Err(Error::EvenPrime("zolotarev_sign"));
    }
    let n = p.get();
    if n > MAX_ZOLOTAREV_PRIME {
        return Err(Error::TooLarge(format!("permutation of {n} points")));
    }
    let a = arith::reduce_mod_u64(a, n);
    if a == 0 {
        return Err(Error::DivisibleByPrime {
            value: a.to_string(),
            prime: n,
        });
    }
    let mut seen = vec![false; n as usize];
    let mut cycles = 0u64;
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = arith::mul_mod(a, x, n);
        }
    }
    // a permutation of n points with c cycles has parity n - c
    Ok(SignValue::from_parity((n - cycles) % 2 == 1))
}

/// Valuation and unit residue of an integer at one prime: `residue` is
/// taken mod `p` for odd `p` and mod 8 for `p = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct LocalSplit {
    alpha: u32,
    residue: u64,
}

fn residue_modulus(p: u64) -> u64 {
    if p == 2 {
        8
    } else {
        p
    }
}

fn split_big(a: &BigInt, p: u64) -> LocalSplit {
    let (alpha, unit) = arith::split_valuation(a, p).expect("nonzero");
    LocalSplit {
        alpha,
        residue: arith::reduce_mod_u64(&unit, residue_modulus(p)),
    }
}

fn closed_form(p: u64, a: LocalSplit, b: LocalSplit) -> SignValue {
    if p == 2 {
        let eps = |u: u64| (u % 4 == 3) as u32;
        let omega = |u: u64| matches!(u % 8, 3 | 5) as u32;
        let e = eps(a.residue) * eps(b.residue) + a.alpha * omega(b.residue)
            + b.alpha * omega(a.residue);
        return SignValue::from_parity(e % 2 == 1);
    }
    let mut s = SignValue::from_parity(a.alpha % 2 == 1 && b.alpha % 2 == 1 && p % 4 == 3);
    if b.alpha % 2 == 1 {
        s = s * leg_sign(a.residue, p);
    }
    if a.alpha % 2 == 1 {
        s = s * leg_sign(b.residue, p);
    }
    s
}

fn leg_sign(u: u64, p: u64) -> SignValue {
    SignValue::from_i8(jacobi(u, p)).expect("unit residue")
}

fn infinite_symbol(a_negative: bool, b_negative: bool) -> SignValue {
    SignValue::from_parity(a_negative && b_negative)
}

/// The Hilbert symbol `(a, b)_v`.
pub fn hilbert_symbol(a: &NonzeroRational, b: &NonzeroRational, v: Place) -> SignValue {
    match v {
        Place::Infinity => infinite_symbol(a.is_negative(), b.is_negative()),
        Place::Finite(p) => {
            let p = p.get();
            closed_form(p, split_big(&a.cleared(), p), split_big(&b.cleared(), p))
        }
    }
}

/// Symbol at a prime not dividing `2ab`: the closed form with both
/// valuations zero, which is `+1` whatever the unit residues are.
fn good_reduction_symbol() -> SignValue {
    let unit = LocalSplit {
        alpha: 0,
        residue: 1,
    };
    closed_form(3, unit, unit)
}

/// Default cap on the Hensel search depth of [`hilbert_oracle`].
pub const DEFAULT_ORACLE_LEVEL: u32 = 64;

/// Decides solvability of `z^2 = a x^2 + b y^2` over the completion at `v`
/// without any symbol formula.
///
/// At a finite prime, factors of `p^2` are first absorbed into `x` or `y`,
/// leaving `v_p(a), v_p(b) <= 1`. Then a depth-first search looks for a
/// primitive solution modulo `p^M`, `M = 2 v_p(4ab) + 3`. For a primitive
/// point some partial derivative (`2ax`, `2by` or `-2z`) has valuation
/// `d <= v_p(2) + max(v_p(a), v_p(b)) <= v_p(4ab)`, and any solution
/// modulo `p^(2d+1)` lifts to `Z_p` by Hensel's lemma; conversely a
/// `Q_p`-solution scales to a primitive `Z_p`-solution. `max_level`
/// bounds `M`.
pub fn hilbert_oracle(
    a: &NonzeroRational,
    b: &NonzeroRational,
    v: Place,
    max_level: u32,
) -> Result<SignValue> {
    let p = match v {
        Place::Infinity => {
            let solvable = !a.is_negative() || !b.is_negative();
            return Ok(SignValue::from_parity(!solvable));
        }
        Place::Finite(p) => p.get(),
    };
    let strip = |x: &BigInt| -> Result<(BigInt, u32)> {
        let (v, unit) = arith::split_valuation(x, p)?;
        let alpha = v % 2;
        Ok((unit * BigInt::from(p).pow(alpha), alpha))
    };
    let (a_red, alpha) = strip(&a.cleared())?;
    let (b_red, beta) = strip(&b.cleared())?;
    let level = 2 * ((if p == 2 { 2 } else { 0 }) + alpha + beta) + 3;
    if level > max_level {
        return Err(Error::InvalidArgument(format!(
            "Hensel search needs level {level}, cap is {max_level}"
        )));
    }
    let modulus = BigInt::from(p).pow(level);
    let modulus = modulus
        .to_u64()
        .filter(|m| *m < u64::MAX / 2)
        .ok_or_else(|| Error::TooLarge(format!("{p}^{level} for the oracle search")))?;
    let search = ConicSearch {
        p,
        level,
        a: arith::reduce_mod_u64(&a_red, modulus),
        b: arith::reduce_mod_u64(&b_red, modulus),
    };
    Ok(SignValue::from_parity(!search.has_primitive_point()))
}

struct ConicSearch {
    p: u64,
    level: u32,
    a: u64,
    b: u64,
}

impl ConicSearch {
    /// `a x^2 + b y^2 - z^2 = 0 mod m`
    fn on_conic(&self, x: u64, y: u64, z: u64, m: u64) -> bool {
        let sq = |t: u64| (t as u128 * t as u128) % m as u128;
        let lhs = ((self.a % m) as u128 * sq(x) + (self.b % m) as u128 * sq(y)) % m as u128;
        lhs == sq(z)
    }

    fn has_primitive_point(&self) -> bool {
        let p = self.p;
        // primitive points mod p up to scaling: first nonzero coordinate is 1
        let mut starts = Vec::new();
        for y in 0..p {
            for z in 0..p {
                starts.push((1, y, z));
            }
        }
        for z in 0..p {
            starts.push((0, 1, z));
        }
        starts.push((0, 0, 1));
        starts
            .into_iter()
            .filter(|&(x, y, z)| self.on_conic(x, y, z, p))
            .any(|pt| self.extends(pt, 1, p))
    }

    /// `pt` solves the equation mod `p^k`, `scale = p^k`.
    fn extends(&self, pt: (u64, u64, u64), k: u32, scale: u64) -> bool {
        if k == self.level {
            return true;
        }
        let p = self.p;
        let next = scale * p;
        for i in 0..p {
            let x = pt.0 + i * scale;
            for j in 0..p {
                let y = pt.1 + j * scale;
                for l in 0..p {
                    let z = pt.2 + l * scale;
                    if self.on_conic(x, y, z, next) && self.extends((x, y, z), k + 1, next) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Residue mod `p` of a rational with `v_p = 0`.
fn unit_residue(x: &NonzeroRational, p: u64) -> u64 {
    let n = arith::reduce_mod_u64(x.numer(), p);
    let d = arith::reduce_mod_u64(x.denom(), p);
    arith::mul_mod(n, arith::inverse_mod_u64(d, p).expect("unit"), p)
}

fn pow_signed(u: u64, e: i64, p: u64) -> u64 {
    let base = if e < 0 {
        arith::inverse_mod_u64(u, p).expect("unit")
    } else {
        u
    };
    arith::pow_mod(base, e.unsigned_abs(), p)
}

/// The tame symbol `(-1)^(v(a)v(b)) a^v(b) / b^v(a) mod p`, in `1..p`.
pub fn tame_symbol(a: &NonzeroRational, b: &NonzeroRational, p: Prime) -> u64 {
    let (va, vb) = (vp(a, p), vp(b, p));
    let n = p.get();
    let ua = a.div(&NonzeroRational::pow_of_prime(n, va));
    let ub = b.div(&NonzeroRational::pow_of_prime(n, vb));
    let mut r = arith::mul_mod(
        pow_signed(unit_residue(&ua, n), vb, n),
        pow_signed(unit_residue(&ub, n), -va, n),
        n,
    );
    if (va * vb) % 2 != 0 {
        r = n - r;
    }
    r
}

/// Sign and prime factorization of the cleared integer `numer * denom` of
/// a nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factored {
    negative: bool,
    factors: Vec<(u64, u32)>,
}

impl Factored {
    pub fn of(x: &NonzeroRational) -> Result<Self> {
        let mut factors = arith::factor_big(&x.numer().magnitude().clone())?;
        for (p, e) in arith::factor_big(&x.denom().magnitude().clone())? {
            *factors.entry(p).or_insert(0) += e;
        }
        Ok(Factored {
            negative: x.is_negative(),
            factors: factors.into_iter().collect(),
        })
    }

    pub fn from_i64(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero);
        }
        Ok(Factored {
            negative: n < 0,
            factors: arith::factor_u64(n.unsigned_abs()).into_iter().collect(),
        })
    }

    /// The squarefree representative of the square class.
    pub fn square_class(&self) -> Self {
        Factored {
            negative: self.negative,
            factors: self
                .factors
                .iter()
                .filter(|(_, e)| e % 2 == 1)
                .map(|&(p, _)| (p, 1))
                .collect(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn to_bigint(&self) -> BigInt {
        let mag: BigInt = self
            .factors
            .iter()
            .map(|&(p, e)| BigInt::from(p).pow(e))
            .product();
        if self.negative {
            -mag
        } else {
            mag
        }
    }

    fn split(&self, p: u64) -> LocalSplit {
        let m = residue_modulus(p);
        let mut alpha = 0;
        let mut residue = if self.negative { m - 1 } else { 1 };
        for &(q, e) in &self.factors {
            if q == p {
                alpha = e;
            } else {
                residue = arith::mul_mod(residue, arith::pow_mod(q, e as u64, m), m);
            }
        }
        LocalSplit { alpha, residue }
    }

    pub fn symbol_at(&self, other: &Factored, v: Place) -> SignValue {
        match v {
            Place::Infinity => infinite_symbol(self.negative, other.negative),
            Place::Finite(p) => closed_form(p.get(), self.split(p.get()), other.split(p.get())),
        }
    }
}

/// The places where `(a, b)_v` can differ from `+1`: infinity, 2, and the
/// primes dividing either argument.
pub fn support(a: &Factored, b: &Factored) -> Vec<Place> {
    let mut primes: BTreeSet<u64> = a.primes().chain(b.primes()).collect();
    primes.insert(2);
    primes
        .into_iter()
        .map(|p| Place::Finite(Prime::new(p).expect("factor is prime")))
        .chain(std::iter::once(Place::Infinity))
        .collect()
}

/// Product of the local symbols over the support. Allocation-free apart
/// from the support set itself; used by the large sweeps.
pub fn reciprocity_product(a: &Factored, b: &Factored) -> SignValue {
    let mut product = infinite_symbol(a.negative, b.negative);
    product = product * closed_form(2, a.split(2), b.split(2));
    let (mut i, mut j) = (0, 0);
    let (fa, fb) = (&a.factors, &b.factors);
    while i < fa.len() || j < fb.len() {
        let p = match (fa.get(i), fb.get(j)) {
            (Some(&(p, _)), Some(&(q, _))) => p.min(q),
            (Some(&(p, _)), None) => p,
            (None, Some(&(q, _))) => q,
            (None, None) => unreachable!(),
        };
        if fa.get(i).is_some_and(|&(q, _)| q == p) {
            i += 1;
        }
        if fb.get(j).is_some_and(|&(q, _)| q == p) {
            j += 1;
        }
        if p != 2 {
            product = product * closed_form(p, a.split(p), b.split(p));
        }
    }
    product
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSymbol {
    pub place: Place,
    pub symbol: SignValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReciprocityReport {
    pub a: String,
    pub b: String,
    /// One row per place of the finite support, infinity last.
    pub rows: Vec<LocalSymbol>,
    /// Every place outside `rows` has symbol `+1`.
    pub omitted_places_trivial: bool,
    pub product: SignValue,
}

impl ReciprocityReport {
    pub fn holds(&self) -> bool {
        self.omitted_places_trivial && self.product == SignValue::Plus
    }

    /// Places whose symbol is `-1`.
    pub fn contributing(&self) -> Vec<Place> {
        self.rows
            .iter()
            .filter(|r| r.symbol == SignValue::Minus)
            .map(|r| r.place)
            .collect()
    }

    pub fn symbol_at(&self, v: Place) -> SignValue {
        self.rows
            .iter()
            .find(|r| r.place == v)
            .map_or(SignValue::Plus, |r| r.symbol)
    }
}

/// Evaluates `(a, b)_v` at every place of the support and checks that the
/// product is `+1`.
pub fn hilbert_reciprocity_check(
    a: &NonzeroRational,
    b: &NonzeroRational,
) -> Result<ReciprocityReport> {
    let (fa, fb) = (Factored::of(a)?, Factored::of(b)?);
    let rows: Vec<LocalSymbol> = support(&fa, &fb)
        .into_iter()
        .map(|place| LocalSymbol {
            place,
            symbol: hilbert_symbol(a, b, place),
        })
        .collect();
    let product = rows.iter().map(|r| r.symbol).product();
    Ok(ReciprocityReport {
        a: a.to_string(),
        b: b.to_string(),
        rows,
        omitted_places_trivial: good_reduction_symbol() == SignValue::Plus,
        product,
    })
}

/// Whether `a` is a nonzero square modulo `p`, by listing the squares.
/// Brute-force reference used in tests and sweeps.
pub fn is_square_mod_brute(a: u64, p: u64) -> bool {
    let a = a % p;
    a != 0 && (1..p).any(|x| arith::mul_mod(x, x, p) == a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> NonzeroRational {
        s.parse().unwrap()
    }

    fn fp(p: u64) -> Place {
        Place::finite(p).unwrap()
    }

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn euler(a: i64, p: u64) -> i8 {
        let r = arith::pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
        match r {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    #[test]
    fn legendre_examples() {
        for p in [3u64, 5, 7, 101] {
            assert_eq!(legendre(&1.into(), pr(p)).unwrap(), 1);
        }
        assert_eq!(legendre(&2.into(), pr(7)).unwrap(), 1);
        assert_eq!(legendre(&3.into(), pr(7)).unwrap(), -1);
        assert_eq!(legendre(&14.into(), pr(7)).unwrap(), 0);
        assert_eq!(legendre(&(-1).into(), pr(7)).unwrap(), -1);
        assert!(legendre(&3.into(), pr(2)).is_err());
    }

    #[test]
    fn legendre_matches_euler_criterion() {
        for &p in arith::primes_up_to(400).iter().skip(1) {
            for a in -50..(p as i64 + 50) {
                assert_eq!(legendre(&a.into(), pr(p)).unwrap(), euler(a, p), "a={a} p={p}");
            }
        }
    }

    #[test]
    fn legendre_matches_square_listing() {
        for &p in arith::primes_up_to(60).iter().skip(1) {
            for a in 1..p {
                let expected = if is_square_mod_brute(a, p) { 1 } else { -1 };
                assert_eq!(jacobi(a, p), expected);
            }
        }
    }

    #[test]
    fn zolotarev_examples() {
        for p in [3u64, 7, 11] {
            assert_eq!(zolotarev_sign(&1.into(), pr(p)).unwrap(), SignValue::Plus);
        }
        assert_eq!(zolotarev_sign(&2.into(), pr(7)).unwrap(), SignValue::Plus);
        assert_eq!(zolotarev_sign(&3.into(), pr(5)).unwrap(), SignValue::Minus);
        assert!(zolotarev_sign(&10.into(), pr(5)).is_err());
        assert!(zolotarev_sign(&1.into(), pr(2)).is_err());
    }

    #[test]
    fn hilbert_examples() {
        for b in ["3", "-7/2", "5", "-1"] {
            for v in [Place::Infinity, fp(2), fp(3), fp(5), fp(7)] {
                assert_eq!(hilbert_symbol(&q("1"), &q(b), v), SignValue::Plus);
            }
        }
        assert_eq!(hilbert_symbol(&q("-1"), &q("-1"), Place::Infinity), SignValue::Minus);
        assert_eq!(hilbert_symbol(&q("-1"), &q("-1"), fp(2)), SignValue::Minus);
        assert_eq!(hilbert_symbol(&q("2"), &q("5"), fp(5)), SignValue::Minus);
        assert_eq!(hilbert_symbol(&q("3"), &q("5"), fp(3)), SignValue::Minus);
        assert_eq!(hilbert_symbol(&q("3"), &q("5"), fp(2)), SignValue::Plus);
    }

    #[test]
    fn oracle_examples() {
        let o = |a: &str, b: &str, v| hilbert_oracle(&q(a), &q(b), v, DEFAULT_ORACLE_LEVEL).unwrap();
        assert_eq!(o("1", "1", fp(3)), SignValue::Plus);
        assert_eq!(o("3", "5", fp(3)), SignValue::Minus);
        assert_eq!(o("-1", "-1", Place::Infinity), SignValue::Minus);
        assert_eq!(o("-1", "-1", fp(2)), SignValue::Minus);
        assert_eq!(o("-1", "-1", fp(3)), SignValue::Plus);
        for a in ["2", "3", "-5", "7/3", "-1/4", "10"] {
            let a = q(a);
            let one_minus = NonzeroRational::from_ratio(num_rational::BigRational::from_integer(1.into()) - a.as_ratio()).unwrap();
            for v in [Place::Infinity, fp(2), fp(3), fp(5), fp(7)] {
                assert_eq!(hilbert_oracle(&a, &one_minus, v, 64).unwrap(), SignValue::Plus);
            }
        }
        assert!(hilbert_oracle(&q("2"), &q("2"), fp(2), 5).is_err());
    }

    #[test]
    fn oracle_agrees_small_grid() {
        let places: Vec<Place> = [2u64, 3, 5, 7, 11, 13]
            .iter()
            .map(|&p| fp(p))
            .chain([Place::Infinity])
            .collect();
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if a == 0 || b == 0 {
                    continue;
                }
                let (qa, qb) = (q(&a.to_string()), q(&b.to_string()));
                for &v in &places {
                    assert_eq!(
                        hilbert_symbol(&qa, &qb, v),
                        hilbert_oracle(&qa, &qb, v, 64).unwrap(),
                        "({a},{b})_{v}"
                    );
                }
            }
        }
    }

    #[test]
    fn tame_examples() {
        assert_eq!(tame_symbol(&q("2"), &q("4/5"), pr(3)), 1);
        assert_eq!(tame_symbol(&q("7"), &q("7"), pr(7)), 6);
        assert_eq!(tame_symbol(&q("3"), &q("5"), pr(3)), 2);
        for p in [3u64, 5, 7, 11] {
            let pp = q(&p.to_string());
            assert_eq!(tame_symbol(&pp, &pp, pr(p)), p - 1);
        }
    }

    #[test]
    fn reciprocity_examples() {
        let r = hilbert_reciprocity_check(&q("1"), &q("-15/7")).unwrap();
        assert!(r.rows.iter().all(|row| row.symbol == SignValue::Plus));
        assert!(r.holds());

        let r = hilbert_reciprocity_check(&q("-1"), &q("-1")).unwrap();
        assert_eq!(r.contributing(), vec![fp(2), Place::Infinity]);
        assert!(r.holds());

        let r = hilbert_reciprocity_check(&q("3"), &q("5")).unwrap();
        assert_eq!(r.contributing(), vec![fp(3), fp(5)]);
        assert_eq!(r.symbol_at(fp(2)), SignValue::Plus);
        assert_eq!(r.symbol_at(Place::Infinity), SignValue::Plus);
        assert!(r.holds());
    }

    #[test]
    fn factored_path_matches_rational_path() {
        for a in ["-12/35", "9", "-1", "98/3", "1024"] {
            for b in ["5", "-6", "7/50", "-27"] {
                let (qa, qb) = (q(a), q(b));
                let (fa, fb) = (Factored::of(&qa).unwrap(), Factored::of(&qb).unwrap());
                let report = hilbert_reciprocity_check(&qa, &qb).unwrap();
                for row in &report.rows {
                    assert_eq!(fa.symbol_at(&fb, row.place), row.symbol);
                    assert_eq!(fa.square_class().symbol_at(&fb.square_class(), row.place), row.symbol);
                }
                assert_eq!(reciprocity_product(&fa, &fb), report.product);
            }
        }
    }

    #[test]
    fn place_parsing() {
        assert_eq!("inf".parse::<Place>().unwrap(), Place::Infinity);
        assert_eq!("13".parse::<Place>().unwrap(), fp(13));
        assert!("12".parse::<Place>().is_err());
        assert!(fp(97) < Place::Infinity);
    }
}
