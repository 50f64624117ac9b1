//! Machine-word and big-integer helpers: primality, factorization,
//! valuations and modular inverses.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A verified prime number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    /// Like [`Prime::new`] but rejects 2.
    pub fn odd(p: u64, what: &'static str) -> Result<Self> {
        let p = Prime::new(p)?;
        if p.get() == 2 {
            return Err(Error::EvenPrime(what));
        }
        Ok(p)
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    pub fn to_biguint(self) -> BigUint {
        BigUint::from(self.0)
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    /// `p^n` as a big integer.
    pub fn pow(self, n: u32) -> BigUint {
        num_traits::pow(self.to_biguint(), n as usize)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Prime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: u64 = s.trim().parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "expected a decimal prime",
        })?;
        Prime::new(p)
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// Deterministic for every 64-bit input with these witnesses.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `<= n`, ascending.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn pollard_brent(n: u64) -> u64 {
    debug_assert!(n > 3 && !is_prime(n));
    if n % 2 == 0 {
        return 2;
    }
    let f = |x: u64, c: u64| (mul_mod(x, x, n) + c) % n;
    for c in 1.. {
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let (mut g, mut x, mut ys) = (1u64, 0u64, 0u64);
        const BATCH: u64 = 64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys, c);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// Prime factorization of `n >= 1` as an ascending map prime -> exponent.
pub fn factor_u64(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_brent(m);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

/// Factorization of a nonzero big integer's absolute value. Only inputs
/// below 2^64 are supported.
pub fn factor_big(n: &BigUint) -> Result<BTreeMap<u64, u32>> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let small = n
        .to_u64()
        .ok_or_else(|| Error::TooLarge(format!("{n} exceeds the 64-bit factorization range")))?;
    Ok(factor_u64(small))
}

/// Returns `(v, rest)` with `n = p^v * rest` and `p` not dividing `rest`.
pub fn split_valuation(n: &BigInt, p: u64) -> Result<(u32, BigInt)> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let p = BigInt::from(p);
    let mut rest = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    Ok((v, rest))
}

pub fn split_valuation_u(n: &BigUint, p: u64) -> Result<(u32, BigUint)> {
    let (v, rest) = split_valuation(&BigInt::from(n.clone()), p)?;
    Ok((v, rest.into_parts().1))
}

/// `v_p(n)` of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> Result<u32> {
    split_valuation(n, p).map(|(v, _)| v)
}

/// Least nonnegative residue of a signed integer.
pub fn reduce_mod(n: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from(m.clone());
    n.mod_floor(&m).into_parts().1
}

pub fn reduce_mod_u64(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue below a u64 modulus")
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inverse_mod(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(&m).into_parts().1)
}

pub fn inverse_mod_u64(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Whether `g` generates the cyclic group `(Z/p)^x`.
pub fn is_primitive_root(g: u64, p: Prime) -> bool {
    let p = p.get();
    let g = g % p;
    if g == 0 {
        return false;
    }
    if p == 2 {
        return g == 1;
    }
    factor_u64(p - 1)
        .keys()
        .all(|&q| pow_mod(g, (p - 1) / q, p) != 1)
}

/// If `q = p^e` with `p` prime and `e >= 1`, returns `(p, e)`.
pub fn prime_power(q: u64) -> Option<(Prime, u32)> {
    if q < 2 {
        return None;
    }
    let f = factor_u64(q);
    if f.len() != 1 {
        return None;
    }
    let (&p, &e) = f.iter().next()?;
    Some((Prime(p), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), naive_is_prime(n), "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
    }

    #[test]
    fn sieve_agrees() {
        let s = primes_up_to(1000);
        let t: Vec<u64> = (0..=1000).filter(|&n| naive_is_prime(n)).collect();
        assert_eq!(s, t);
    }

    #[test]
    fn factorization_multiplies_back() {
        for n in [1u64, 2, 12, 360, 1_000_003 * 999_983, 600_851_475_143, u64::MAX] {
            let f = factor_u64(n);
            let back: u128 = f.iter().map(|(&p, &e)| (p as u128).pow(e)).product();
            assert_eq!(back, n as u128);
            assert!(f.keys().all(|&p| is_prime(p)));
        }
    }

    #[test]
    fn prime_rejects_composites() {
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(91).is_err());
        assert_eq!(Prime::new(97).unwrap().get(), 97);
        assert!(Prime::odd(2, "test").is_err());
        assert!("15".parse::<Prime>().is_err());
        assert!("x".parse::<Prime>().is_err());
    }

    #[test]
    fn valuations_and_inverses() {
        assert_eq!(valuation(&BigInt::from(-48), 2).unwrap(), 4);
        assert_eq!(split_valuation(&BigInt::from(18), 3).unwrap(), (2, BigInt::from(2)));
        assert!(valuation(&BigInt::zero(), 3).is_err());
        // 2 * 14 = 28 = 1 mod 27
        let inv = inverse_mod(&BigUint::from(2u32), &BigUint::from(27u32)).unwrap();
        assert_eq!(inv, BigUint::from(14u32));
        assert_eq!(inverse_mod_u64(5, 3), Some(2));
        assert_eq!(inverse_mod_u64(6, 9), None);
    }

    #[test]
    fn primitive_roots() {
        let p = Prime::new(7).unwrap();
        let roots: Vec<u64> = (1..7).filter(|&g| is_primitive_root(g, p)).collect();
        assert_eq!(roots, vec![3, 5]);
        assert_eq!(prime_power(49).map(|(p, e)| (p.get(), e)), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
