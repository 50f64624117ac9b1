//! Low-degree homotopy of the J-homomorphisms, as plain arithmetic maps,
//! and the two product-formula verifiers.
//!
//! | map        | degree | effect                       |
//! |------------|--------|------------------------------|
//! | real       | pi_0   | `k -> k`                     |
//! | `F_p`      | pi_0   | `k -> p^k`                   |
//! | tame       | pi_1   | `x -> p^(v_p(x)) = 1/|x|_p`  |
//! | wild       | pi_0   | `k -> -k`                    |
//! | wild       | pi_1   | `x -> x^(-1)` on `Z_p^x`     |
//! | `Q_p`      | pi_2   | Hilbert symbol `(a, b)_p`    |

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::Serialize;

use crate::arith::Prime;
use crate::error::{Error, Result};
use crate::padic::{padic_norm, vp, PadicNumber};
use crate::rational::NonzeroRational;
use crate::symbols::{self, Place, SignValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Pi0,
    Pi1,
    Pi2,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Pi0 => "pi0",
            Level::Pi1 => "pi1",
            Level::Pi2 => "pi2",
        })
    }
}

/// The image of a K-theory class under one of the maps, tagged with its
/// homotopy degree and place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JValue {
    Pi0 { place: Place, value: BigInt },
    Pi1Tame { place: Place, value: NonzeroRational },
    Pi1Wild { place: Place, value: PadicNumber },
    Pi2 { place: Place, value: SignValue },
}

impl JValue {
    pub fn level(&self) -> Level {
        match self {
            JValue::Pi0 { .. } => Level::Pi0,
            JValue::Pi1Tame { .. } | JValue::Pi1Wild { .. } => Level::Pi1,
            JValue::Pi2 { .. } => Level::Pi2,
        }
    }

    pub fn place(&self) -> Place {
        match self {
            JValue::Pi0 { place, .. }
            | JValue::Pi1Tame { place, .. }
            | JValue::Pi1Wild { place, .. }
            | JValue::Pi2 { place, .. } => *place,
        }
    }

    /// Tame pi_1 values must lie in the subgroup `p^Z`.
    pub fn is_well_formed(&self) -> bool {
        match self {
            JValue::Pi1Tame {
                place: Place::Finite(p),
                value,
            } => {
                let k = vp(value, *p);
                *value == NonzeroRational::pow_of_prime(p.get(), k)
            }
            JValue::Pi1Tame { .. } => false,
            JValue::Pi1Wild { place, value } => *place == Place::Finite(value.prime()),
            _ => true,
        }
    }
}

impl fmt::Display for JValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JValue::Pi0 { value, .. } => write!(f, "{value}"),
            JValue::Pi1Tame { value, .. } => write!(f, "{value}"),
            JValue::Pi1Wild { value, .. } => write!(f, "{value}"),
            JValue::Pi2 { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for JValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("JValue", 3)?;
        s.serialize_field("level", &self.level())?;
        s.serialize_field("place", &self.place())?;
        s.serialize_field("value", &self.to_string())?;
        s.end()
    }
}

/// pi_0 of the real map: a real vector space goes to its dimension.
pub fn j_real_pi0(k: &BigInt) -> BigInt {
    k.clone()
}

/// pi_0 of the `F_p` map: a `k`-dimensional space has `p^k` points.
pub fn j_fp_pi0(k: u32, p: Prime) -> BigUint {
    p.pow(k)
}

/// pi_1 of the tame map, `x -> p^(v_p(x))`, i.e. `1/|x|_p`.
pub fn j_tame_pi1(x: &NonzeroRational, p: Prime) -> NonzeroRational {
    padic_norm(x, p).recip()
}

pub fn j_wild_pi0(k: &BigInt) -> BigInt {
    -k
}

/// pi_1 of the wild map: inversion on `Z_p^x`.
pub fn j_wild_pi1(x: &PadicNumber) -> Result<PadicNumber> {
    if !x.is_unit() {
        return Err(Error::NotUnit(x.to_string()));
    }
    x.inv()
}

pub fn j_padic_pi2(a: &NonzeroRational, b: &NonzeroRational, v: Place) -> SignValue {
    symbols::hilbert_symbol(a, b, v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductFormulaReport {
    pub a: String,
    pub b: String,
    /// pi_2 values over the finite support, infinity last.
    pub rows: Vec<JValue>,
    /// Places with value `-1`.
    pub contributing: Vec<Place>,
    pub omitted_places_trivial: bool,
    pub product: SignValue,
}

impl ProductFormulaReport {
    pub fn holds(&self) -> bool {
        self.omitted_places_trivial && self.product == SignValue::Plus
    }
}

/// The product over all places of the pi_2 values.
pub fn product_formula_pi2(a: &NonzeroRational, b: &NonzeroRational) -> Result<ProductFormulaReport> {
    let report = symbols::hilbert_reciprocity_check(a, b)?;
    let contributing = report.contributing();
    Ok(ProductFormulaReport {
        a: report.a,
        b: report.b,
        rows: report
            .rows
            .into_iter()
            .map(|r| JValue::Pi2 {
                place: r.place,
                value: r.symbol,
            })
            .collect(),
        contributing,
        omitted_places_trivial: report.omitted_places_trivial,
        product: report.product,
    })
}

/// `|x|_inf * prod_p |x|_p` over the primes dividing numerator or
/// denominator. Equals 1 for every nonzero rational.
pub fn adelic_norm_product(x: &NonzeroRational) -> Result<NonzeroRational> {
    let f = symbols::Factored::of(x)?;
    let mut acc = NonzeroRational::from_ratio(x.as_ratio().abs())?;
    for p in f.primes() {
        acc = acc.mul(&padic_norm(x, Prime::new(p)?));
    }
    Ok(acc)
}

/// The low-degree table at one finite place.
pub fn low_degree_table(k: &BigInt, x: &NonzeroRational, p: Prime, precision: u32) -> Result<Vec<JValue>> {
    let place = Place::Finite(p);
    let mut rows = vec![
        JValue::Pi0 {
            place: Place::Infinity,
            value: j_real_pi0(k),
        },
        JValue::Pi0 {
            place,
            value: j_wild_pi0(k),
        },
        JValue::Pi1Tame {
            place,
            value: j_tame_pi1(x, p),
        },
    ];
    let embedded = PadicNumber::embed(x, p, precision)?;
    if embedded.is_unit() {
        rows.push(JValue::Pi1Wild {
            place,
            value: j_wild_pi1(&embedded)?,
        });
    }
    Ok(rows)
}
