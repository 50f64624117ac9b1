//! Elements of `Q_p` known to finite precision.
//!
//! A nonzero element is stored as `p^v * u` where the unit `u` is known
//! modulo `p^N`; `N` is the element's precision, so the absolute error is
//! `O(p^(v + N))`. Precision only ever shrinks: sums lose the digits that
//! cancel, products keep the smaller of the two precisions. A result that
//! would be known to fewer than one digit is reported as
//! [`Error::PrecisionUnderflow`] instead of being rounded to zero.
//!
//! The zero element is a separate variant. Its precision is absolute (the
//! value is `0 mod p^N`) and it has no valuation.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{self, Prime};
use crate::error::{Error, Result};
use crate::rational::NonzeroRational;

pub const DEFAULT_PRECISION: u32 = 64;
pub const MAX_PRECISION: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Value {
    Zero,
    Unit { valuation: i64, digits: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicNumber {
    prime: Prime,
    precision: u32,
    value: Value,
}

fn check_precision(n: i64) -> Result<u32> {
    if n < 1 || n > MAX_PRECISION as i64 {
        return Err(Error::PrecisionOutOfRange {
            requested: n,
            max: MAX_PRECISION,
        });
    }
    Ok(n as u32)
}

/// Precision of a derived result; values below one digit are underflow.
fn derived_precision(n: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::PrecisionUnderflow);
    }
    Ok(n.min(MAX_PRECISION as i64) as u32)
}

fn checked(v: Option<i64>) -> Result<i64> {
    v.ok_or_else(|| Error::TooLarge("valuation overflow".into()))
}

/// `v_p(x)` for a nonzero rational.
pub fn vp(x: &NonzeroRational, p: Prime) -> i64 {
    let num = arith::valuation(x.numer(), p.get()).expect("numerator is nonzero");
    let den = arith::valuation(x.denom(), p.get()).expect("denominator is nonzero");
    num as i64 - den as i64
}

/// `|x|_p = p^(-v_p(x))`.
pub fn padic_norm(x: &NonzeroRational, p: Prime) -> NonzeroRational {
    NonzeroRational::pow_of_prime(p.get(), -vp(x, p))
}

impl PadicNumber {
    /// The image of a rational number in `Q_p`, with `precision` unit digits.
    pub fn embed(x: &NonzeroRational, p: Prime, precision: u32) -> Result<Self> {
        let precision = check_precision(precision as i64)?;
        let (a, num) = arith::split_valuation(x.numer(), p.get())?;
        let (b, den) = arith::split_valuation(x.denom(), p.get())?;
        let modulus = p.pow(precision);
        let den = arith::reduce_mod(&den, &modulus);
        let den_inv = arith::inverse_mod(&den, &modulus).expect("denominator is a p-adic unit");
        let digits = (arith::reduce_mod(&num, &modulus) * den_inv) % &modulus;
        Ok(PadicNumber {
            prime: p,
            precision,
            value: Value::Unit {
                valuation: a as i64 - b as i64,
                digits,
            },
        })
    }

    /// An integer as an element of `Z_p`; zero maps to the zero element.
    pub fn from_integer(n: impl Into<BigInt>, p: Prime, precision: u32) -> Result<Self> {
        let n = n.into();
        if n.is_zero() {
            return Self::zero(p, precision);
        }
        Self::embed(&NonzeroRational::integer(n)?, p, precision)
    }

    /// The zero element, known modulo `p^precision`.
    pub fn zero(p: Prime, precision: u32) -> Result<Self> {
        Ok(PadicNumber {
            prime: p,
            precision: check_precision(precision as i64)?,
            value: Value::Zero,
        })
    }

    pub fn one(p: Prime, precision: u32) -> Result<Self> {
        Self::from_unit_residue(p, 0, BigUint::one(), precision)
    }

    /// `p^valuation * digits`, where `digits` must be prime to `p`.
    pub fn from_unit_residue(
        p: Prime,
        valuation: i64,
        digits: BigUint,
        precision: u32,
    ) -> Result<Self> {
        let precision = check_precision(precision as i64)?;
        let digits = digits % p.pow(precision);
        if (&digits % p.get()).is_zero() {
            return Err(Error::DivisibleByPrime {
                value: digits.to_string(),
                prime: p.get(),
            });
        }
        Ok(PadicNumber {
            prime: p,
            precision,
            value: Value::Unit { valuation, digits },
        })
    }

    fn unit(p: Prime, valuation: i64, digits: BigUint, precision: u32) -> Self {
        debug_assert!(!(&digits % p.get()).is_zero());
        PadicNumber {
            prime: p,
            precision,
            value: Value::Unit { valuation, digits },
        }
    }

    /// Normalizes `p^base * s` where `s` is known modulo `p^width`.
    fn normalize(p: Prime, base: i64, s: BigUint, width: i64) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::PrecisionUnderflow);
        }
        let (t, w) = arith::split_valuation_u(&s, p.get())?;
        let precision = derived_precision(width - t as i64)?;
        Ok(Self::unit(p, checked(base.checked_add(t as i64))?, w, precision))
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// Unit digits for nonzero elements, absolute precision for zero.
    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.value, Value::Zero)
    }

    pub fn valuation(&self) -> Result<i64> {
        match &self.value {
            Value::Zero => Err(Error::Zero),
            Value::Unit { valuation, .. } => Ok(*valuation),
        }
    }

    pub fn unit_digits(&self) -> Result<&BigUint> {
        match &self.value {
            Value::Zero => Err(Error::Zero),
            Value::Unit { digits, .. } => Ok(digits),
        }
    }

    /// Exponent `A` such that the element is known modulo `p^A`.
    pub fn absolute_precision(&self) -> i64 {
        match &self.value {
            Value::Zero => self.precision as i64,
            Value::Unit { valuation, .. } => valuation + self.precision as i64,
        }
    }

    /// Whether this is an element of `Z_p^x` (valuation exactly zero).
    pub fn is_unit(&self) -> bool {
        matches!(self.value, Value::Unit { valuation: 0, .. })
    }

    /// For an element of `Z_p`, its residue modulo `p^absolute_precision`.
    pub fn to_residue(&self) -> Result<BigUint> {
        match &self.value {
            Value::Zero => Ok(BigUint::zero()),
            Value::Unit { valuation, .. } if *valuation < 0 => {
                Err(Error::InvalidArgument(format!("{self} is not integral")))
            }
            Value::Unit { valuation, digits } => Ok(digits * self.prime.pow(*valuation as u32)),
        }
    }

    /// Whether `x` embeds to exactly this element at this precision.
    pub fn represents(&self, x: &NonzeroRational) -> bool {
        match &self.value {
            Value::Zero => false,
            Value::Unit { .. } => {
                Self::embed(x, self.prime, self.precision).is_ok_and(|e| e == *self)
            }
        }
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime.get(), other.prime.get()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let p = self.prime;
        let abs = self.absolute_precision().min(other.absolute_precision());
        match (&self.value, &other.value) {
            (Value::Zero, Value::Zero) => Self::zero(p, derived_precision(abs)?),
            (Value::Zero, Value::Unit { valuation, digits })
            | (Value::Unit { valuation, digits }, Value::Zero) => {
                let width = abs - valuation;
                let s = digits % p.pow(derived_precision(width)?);
                Self::normalize(p, *valuation, s, width)
            }
            (
                Value::Unit {
                    valuation: va,
                    digits: ua,
                },
                Value::Unit {
                    valuation: vb,
                    digits: ub,
                },
            ) => {
                let base = *va.min(vb);
                let width = abs - base;
                let modulus = p.pow(derived_precision(width)?);
                let sa = ua * p.pow((va - base) as u32);
                let sb = ub * p.pow((vb - base) as u32);
                Self::normalize(p, base, (sa + sb) % modulus, width)
            }
        }
    }

    pub fn neg(&self) -> Self {
        match &self.value {
            Value::Zero => self.clone(),
            Value::Unit { valuation, digits } => {
                let modulus = self.prime.pow(self.precision);
                Self::unit(self.prime, *valuation, &modulus - digits, self.precision)
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let p = self.prime;
        match (&self.value, &other.value) {
            (Value::Zero, Value::Zero) => {
                let abs = self.precision as i64 + other.precision as i64;
                Self::zero(p, derived_precision(abs)?)
            }
            (Value::Zero, Value::Unit { valuation, .. }) => {
                Self::zero(p, derived_precision(self.precision as i64 + valuation)?)
            }
            (Value::Unit { valuation, .. }, Value::Zero) => {
                Self::zero(p, derived_precision(other.precision as i64 + valuation)?)
            }
            (
                Value::Unit {
                    valuation: va,
                    digits: ua,
                },
                Value::Unit {
                    valuation: vb,
                    digits: ub,
                },
            ) => {
                let precision = self.precision.min(other.precision);
                let digits = (ua * ub) % p.pow(precision);
                Ok(Self::unit(p, checked(va.checked_add(*vb))?, digits, precision))
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match &self.value {
            Value::Zero => Err(Error::Zero),
            Value::Unit { valuation, digits } => {
                let modulus = self.prime.pow(self.precision);
                let inv = arith::inverse_mod(digits, &modulus).expect("unit digits are invertible");
                Ok(Self::unit(self.prime, -valuation, inv, self.precision))
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        match &self.value {
            Value::Zero if exp < 0 => Err(Error::Zero),
            Value::Zero if exp == 0 => Self::one(self.prime, self.precision),
            Value::Zero => {
                let abs = checked((self.precision as i64).checked_mul(exp))?;
                Self::zero(self.prime, derived_precision(abs)?)
            }
            Value::Unit { valuation, digits } => {
                let modulus = self.prime.pow(self.precision);
                let e = BigUint::from(exp.unsigned_abs());
                let powered = Self::unit(
                    self.prime,
                    checked(valuation.checked_mul(exp.abs()))?,
                    digits.modpow(&e, &modulus),
                    self.precision,
                );
                if exp < 0 {
                    powered.inv()
                } else {
                    Ok(powered)
                }
            }
        }
    }

    /// Truncates to at most `precision` digits.
    pub fn with_precision(&self, precision: u32) -> Result<Self> {
        let precision = check_precision(precision as i64)?.min(self.precision);
        let value = match &self.value {
            Value::Zero => Value::Zero,
            Value::Unit { valuation, digits } => Value::Unit {
                valuation: *valuation,
                digits: digits % self.prime.pow(precision),
            },
        };
        Ok(PadicNumber {
            prime: self.prime,
            precision,
            value,
        })
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prime;
        match &self.value {
            Value::Zero => write!(f, "O({p}^{})", self.precision),
            Value::Unit { valuation: 0, digits } => {
                write!(f, "{digits} + O({p}^{})", self.precision)
            }
            Value::Unit { valuation, digits } => write!(
                f,
                "{p}^{valuation} * {digits} + O({p}^{})",
                valuation + self.precision as i64
            ),
        }
    }
}

impl Serialize for PadicNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PadicNumber", 5)?;
        s.serialize_field("prime", &self.prime)?;
        s.serialize_field("precision", &self.precision)?;
        s.serialize_field("zero", &self.is_zero())?;
        s.serialize_field("valuation", &self.valuation().ok())?;
        s.serialize_field("unit_digits", &self.unit_digits().ok().map(|d| d.to_string()))?;
        s.end()
    }
}

/// The Teichmüller representative of `a mod p`: the `(p-1)`-st root of
/// unity in `Z_p` congruent to `a`.
pub fn teichmuller(a: &BigInt, p: Prime, precision: u32) -> Result<PadicNumber> {
    if !p.is_odd() {
        return Err(Error::EvenPrime("teichmuller"));
    }
    let precision = check_precision(precision as i64)?;
    let modulus = p.pow(precision);
    let mut x = arith::reduce_mod(a, &modulus);
    if (&x % p.get()).is_zero() {
        return Err(Error::DivisibleByPrime {
            value: a.to_string(),
            prime: p.get(),
        });
    }
    // x -> x^p gains one correct digit per step.
    let exp = p.to_biguint();
    loop {
        let next = x.modpow(&exp, &modulus);
        if next == x {
            break;
        }
        x = next;
    }
    Ok(PadicNumber::unit(p, 0, x, precision))
}

fn floor_log(p: u64, k: u64) -> i64 {
    let mut n = 0;
    let mut acc = p;
    while acc <= k {
        n += 1;
        acc = match acc.checked_mul(p) {
            Some(a) => a,
            None => break,
        };
    }
    n
}

/// The p-adic logarithm of a principal unit `u = 1 mod p`, for odd `p`.
///
/// Sums `(-1)^(k+1) (u-1)^k / k` over every `k` whose term valuation
/// lower bound `k*a - floor(log_p k)` (with `a = v_p(u-1)`) is below the
/// input precision. That bound is nondecreasing in `k`, so all omitted
/// terms vanish modulo `p^N`. The logarithm is an isometry on `1 + pZ_p`
/// for odd `p`, so the result carries absolute precision `N`.
pub fn padic_log(u: &PadicNumber) -> Result<PadicNumber> {
    let p = u.prime;
    if !p.is_odd() {
        return Err(Error::EvenPrime("padic_log"));
    }
    let digits = match &u.value {
        Value::Zero => return Err(Error::Zero),
        Value::Unit {
            valuation: 0,
            digits,
        } if (digits % p.get()).is_one() => digits,
        _ => return Err(Error::NotOneModP(u.to_string())),
    };
    let n = u.precision as i64;
    let target = p.pow(u.precision);
    let x = digits - 1u32;
    if x.is_zero() {
        return PadicNumber::zero(p, u.precision);
    }
    let a = arith::split_valuation_u(&x, p.get())?.0 as i64;

    let mut last = 1u64;
    while (last as i64) * a - floor_log(p.get(), last) < n {
        last += 1;
    }
    // terms k in 1..last contribute; p^extra covers the largest k-adic valuation
    let extra = floor_log(p.get(), last) as u32;
    let working = p.pow(u.precision + extra);

    let mut sum = BigUint::zero();
    let mut power = BigUint::one();
    for k in 1..last {
        power = (power * &x) % &working;
        let (vk, cofactor) = arith::split_valuation_u(&BigUint::from(k), p.get())?;
        let term = (&power / p.pow(vk)) % &target;
        let inv = arith::inverse_mod(&cofactor, &target).expect("cofactor is a unit");
        let term = (term * inv) % &target;
        if k % 2 == 1 {
            sum += term;
        } else {
            sum += &target - term;
        }
        sum %= &target;
    }
    if sum.is_zero() {
        return PadicNumber::zero(p, u.precision);
    }
    PadicNumber::normalize(p, 0, sum, n)
}

/// `x -> (1/l) log(x^(l-1))` on `Z_l^x`, landing in `Z_l`.
pub fn rezk_log_pi0(x: &PadicNumber) -> Result<PadicNumber> {
    let ell = x.prime;
    if !ell.is_odd() {
        return Err(Error::EvenPrime("rezk_log_pi0"));
    }
    if !x.is_unit() {
        return Err(Error::NotUnit(x.to_string()));
    }
    let log = padic_log(&x.pow(ell.get() as i64 - 1)?)?;
    match log.value {
        Value::Zero => PadicNumber::zero(ell, derived_precision(log.precision as i64 - 1)?),
        Value::Unit { valuation, digits } => Ok(PadicNumber::unit(
            ell,
            valuation - 1,
            digits,
            log.precision,
        )),
    }
}

/// Whether `u` topologically generates `Z_l^x`: `u mod l` is a primitive
/// root and `v_l(u^(l-1) - 1) = 1`. Depends only on `u mod l^2`.
pub fn is_topological_generator(u: impl Into<BigInt>, ell: Prime) -> Result<bool> {
    if !ell.is_odd() {
        return Err(Error::EvenPrime("is_topological_generator"));
    }
    let u = u.into();
    let l = ell.get();
    if arith::reduce_mod_u64(&u, l) == 0 {
        return Err(Error::DivisibleByPrime {
            value: u.to_string(),
            prime: l,
        });
    }
    if !arith::is_primitive_root(arith::reduce_mod_u64(&u, l), ell) {
        return Ok(false);
    }
    let square = ell.pow(2);
    let r = arith::reduce_mod(&u, &square).modpow(&BigUint::from(l - 1), &square);
    Ok(!r.is_one())
}

/// The smallest integer `u >= 2` that topologically generates `Z_l^x`.
pub fn canonical_generator(ell: Prime) -> Result<u64> {
    if !ell.is_odd() {
        return Err(Error::EvenPrime("canonical_generator"));
    }
    for u in 2.. {
        if u % ell.get() != 0 && is_topological_generator(u, ell)? {
            return Ok(u);
        }
    }
    unreachable!("a primitive root modulo l^2 always exists")
}

pub const MAX_WITNESS_DEPTH: u32 = 100_000;

/// Checks that the partial sums `s_k = 1 + l + ... + l^(k-1)` satisfy
/// `(l-1) s_k + 1 = l^k` for every `k <= depth`, and that `s_k` agrees
/// with the embedding of `-1/(l-1)` modulo `l^k`. For `l = 3` this is the
/// statement that `1 + 3 + 9 + ...` converges 3-adically to `-1/2`.
pub fn appendix_a_witness(ell: Prime, depth: u32) -> Result<bool> {
    if depth == 0 || depth > MAX_WITNESS_DEPTH {
        return Err(Error::InvalidArgument(format!(
            "depth {depth} outside 1..={MAX_WITNESS_DEPTH}"
        )));
    }
    let l = ell.to_biguint();
    let limit = NonzeroRational::new(-1, ell.get() as i64 - 1)?;
    let limit_digits = PadicNumber::embed(&limit, ell, depth)?.to_residue()?;
    let mut partial = BigUint::zero();
    let mut power = BigUint::one();
    for _ in 0..depth {
        partial += &power;
        power *= &l;
        if (&l - 1u32) * &partial + 1u32 != power {
            return Ok(false);
        }
        if &limit_digits % &power != &partial % &power {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Residue of a `Z_p` element, reduced to `p^digits`. Test and sweep helper.
pub fn residue_mod(x: &PadicNumber, digits: u32) -> Result<BigUint> {
    let r = x.to_residue()?;
    Ok(r.mod_floor(&x.prime.pow(digits)))
}
