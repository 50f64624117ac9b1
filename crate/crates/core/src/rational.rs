use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A nonzero rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonzeroRational(BigRational);

impl NonzeroRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let (n, d) = (numerator.into(), denominator.into());
        if d.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if n.is_zero() {
            return Err(Error::Zero);
        }
        Ok(NonzeroRational(BigRational::new(n, d)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn one() -> Self {
        NonzeroRational(BigRational::one())
    }

    pub fn from_ratio(r: BigRational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Zero);
        }
        Ok(NonzeroRational(r))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        NonzeroRational(self.0.abs())
    }

    pub fn neg(&self) -> Self {
        NonzeroRational(-self.0.clone())
    }

    pub fn recip(&self) -> Self {
        NonzeroRational(self.0.recip())
    }

    pub fn mul(&self, other: &Self) -> Self {
        NonzeroRational(&self.0 * &other.0)
    }

    pub fn div(&self, other: &Self) -> Self {
        NonzeroRational(&self.0 / &other.0)
    }

    pub fn pow(&self, exp: i32) -> Self {
        NonzeroRational(num_traits::Pow::pow(&self.0, exp))
    }

    /// `numer * denom`: an integer in the same square class.
    pub fn cleared(&self) -> BigInt {
        self.numer() * self.denom()
    }

    /// `|numer| * denom` as an unsigned integer.
    pub fn cleared_magnitude(&self) -> BigUint {
        self.cleared().into_parts().1
    }

    pub fn pow_of_prime(p: u64, exp: i64) -> Self {
        let base = BigInt::from(p);
        let mag = num_traits::pow(base, exp.unsigned_abs() as usize);
        if exp >= 0 {
            NonzeroRational(BigRational::from_integer(mag))
        } else {
            NonzeroRational(BigRational::new(BigInt::one(), mag))
        }
    }
}

impl fmt::Display for NonzeroRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Grammar: `[-]digits[/digits]`.
impl FromStr for NonzeroRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if !digits(num) || den.is_some_and(|d| !digits(d)) {
            return Err(bad("expected [-]digits[/digits]"));
        }
        let mut n: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
        if neg {
            n = -n;
        }
        let d: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad("bad denominator"))?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        if n.is_zero() {
            return Err(bad("value must be nonzero"));
        }
        NonzeroRational::new(n, d)
    }
}

impl TryFrom<i64> for NonzeroRational {
    type Error = Error;

    fn try_from(n: i64) -> Result<Self> {
        NonzeroRational::integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> NonzeroRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(q("-3/6"), NonzeroRational::new(-1, 2).unwrap());
        assert_eq!(q("20/9").to_string(), "20/9");
        assert_eq!(q("4/2").to_string(), "2");
        for bad in ["", "-", "0", "0/5", "3/0", "+3", "1/-2", " 1", "1.5", "--1", "1/"] {
            assert!(bad.parse::<NonzeroRational>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let x = NonzeroRational::new(6, -4).unwrap();
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.cleared(), BigInt::from(-6));
        assert!(NonzeroRational::new(0, 3).is_err());
        assert!(NonzeroRational::new(1, 0).is_err());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(NonzeroRational::pow_of_prime(5, -2), q("1/25"));
        assert_eq!(NonzeroRational::pow_of_prime(2, 3), q("8"));
        assert_eq!(q("3/4").pow(-2), q("16/9"));
    }
}
