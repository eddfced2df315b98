//! Exact coefficient fields: Q, Q(i), and cyclotomic fields Q(zeta_N).

pub mod cyclotomic;
pub mod gaussian;
pub mod rational;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicElement};
pub use gaussian::GaussianRational;
pub use rational::{parse_rational, rat, rat_int, rational_to_string, Rational};

use crate::error::{Error, Result};

/// The single coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum FieldConfig {
    Rationals,
    Cyclotomic { conductor: u32 },
}

impl FieldConfig {
    pub fn contains(&self, e: &FieldElement) -> bool {
        match (self, e) {
            (_, FieldElement::Rational(_)) => true,
            (FieldConfig::Cyclotomic { conductor }, FieldElement::Cyclotomic(c)) => {
                c.conductor() == *conductor
            }
            (FieldConfig::Rationals, FieldElement::Cyclotomic(_)) => false,
        }
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::Rationals => write!(f, "Q"),
            FieldConfig::Cyclotomic { conductor } => write!(f, "Q(zeta_{conductor})"),
        }
    }
}

/// A scalar in the configured field. Rationals embed canonically into any
/// cyclotomic field, so mixed arithmetic promotes the rational operand.
#[derive(Debug, Clone)]
pub enum FieldElement {
    Rational(Rational),
    Cyclotomic(CyclotomicElement),
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::Rational(rational::rat_zero())
    }

    pub fn one() -> Self {
        FieldElement::Rational(rational::rat_one())
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::Rational(rat_int(n))
    }

    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        FieldElement::Cyclotomic(CyclotomicElement::zeta_pow(conductor, k)).normalized()
    }

    /// Collapse cyclotomic values that happen to be rational, so that equal
    /// field values have a preferred representative where possible.
    fn normalized(self) -> Self {
        match self {
            FieldElement::Cyclotomic(c) => match c.as_rational() {
                Some(r) if c.conductor() == 1 => FieldElement::Rational(r),
                _ => FieldElement::Cyclotomic(c),
            },
            r => r,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &FieldElement::one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            FieldElement::Rational(r) => Some(r.clone()),
            FieldElement::Cyclotomic(c) => c.as_rational(),
        }
    }

    fn promote(a: &FieldElement, b: &FieldElement) -> (CyclotomicElement, CyclotomicElement) {
        match (a, b) {
            (FieldElement::Cyclotomic(x), FieldElement::Cyclotomic(y)) => (x.clone(), y.clone()),
            (FieldElement::Cyclotomic(x), FieldElement::Rational(r)) => (
                x.clone(),
                CyclotomicElement::from_rational(x.conductor(), r.clone()),
            ),
            (FieldElement::Rational(r), FieldElement::Cyclotomic(y)) => (
                CyclotomicElement::from_rational(y.conductor(), r.clone()),
                y.clone(),
            ),
            _ => unreachable!(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            _ => {
                let (a, b) = Self::promote(self, other);
                FieldElement::Cyclotomic(a.add(&b))
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            _ => {
                let (a, b) = Self::promote(self, other);
                FieldElement::Cyclotomic(a.sub(&b))
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Cyclotomic(a), FieldElement::Rational(r)) => {
                FieldElement::Cyclotomic(a.scale(r))
            }
            (FieldElement::Rational(r), FieldElement::Cyclotomic(b)) => {
                FieldElement::Cyclotomic(b.scale(r))
            }
            (FieldElement::Cyclotomic(a), FieldElement::Cyclotomic(b)) => {
                FieldElement::Cyclotomic(a.mul(b))
            }
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r.clone()),
            FieldElement::Cyclotomic(c) => FieldElement::Cyclotomic(c.neg()),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        match self {
            FieldElement::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElement::Rational(r.recip()))
                }
            }
            FieldElement::Cyclotomic(c) => Ok(FieldElement::Cyclotomic(c.inverse()?)),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a == b,
            _ => {
                let (a, b) = Self::promote(self, other);
                a == b
            }
        }
    }
}

impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{}", rational_to_string(r)),
            FieldElement::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_and_embedding_commute() {
        let half = FieldElement::Rational(rat(1, 2));
        let z = FieldElement::zeta_pow(3, 1);
        // (1/2 + z3) computed by promotion equals embedding first.
        let via_promo = half.add(&z);
        let emb = FieldElement::Cyclotomic(CyclotomicElement::from_rational(3, rat(1, 2)));
        let via_emb = emb.add(&z);
        assert_eq!(via_promo, via_emb);
        assert_eq!(half.mul(&FieldElement::from_int(2)), FieldElement::one());
    }

    #[test]
    fn mixed_equality() {
        let two = FieldElement::from_int(2);
        let two_cyc = FieldElement::Cyclotomic(CyclotomicElement::from_rational(5, rat_int(2)));
        assert_eq!(two, two_cyc);
        assert_ne!(two, FieldElement::zeta_pow(5, 1));
    }

    #[test]
    fn field_axioms_spot_checks() {
        let xs = [
            FieldElement::from_int(3),
            FieldElement::zeta_pow(6, 1),
            FieldElement::Rational(rat(-2, 7)),
            FieldElement::zeta_pow(6, 5),
        ];
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
                assert_eq!(a.add(b), b.add(a));
                assert_eq!(a.mul(b), b.mul(a));
            }
            if !a.is_zero() {
                assert_eq!(a.mul(&a.inverse().unwrap()), FieldElement::one());
            }
        }
    }
}
