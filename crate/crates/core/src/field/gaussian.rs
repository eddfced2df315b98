//! Exact arithmetic in Q(i), the coefficient field of arrangement equations.
//!
//! This field is the hot path of the geometric tracker, so it is implemented
//! directly rather than as the conductor-4 cyclotomic field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rational::{parse_rational, rat_int, rat_zero, rational_to_string, Rational};
use crate::error::{Error, Result};

/// An element re + im·i of Q(i).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: rat_zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational {
            re: rat_zero(),
            im: rat_int(1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 = re^2 + im^2, a non-negative rational, zero iff z = 0.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Parse "p/q", "p/q+r/s*i", "-r/s*i", "i", "-i" and friends.
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        // Split at the last top-level '+'/'-' that is not a leading sign and
        // not a sign inside a fraction (fractions contain no signs after the
        // leading one, so any '+'/'-' past position 0 of a term is a split).
        let bytes = s.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && bytes[k - 1] as char != '/' {
                split = Some(k);
                break;
            }
        }
        let (first, second) = match split {
            Some(k) => (&s[..k], &s[k..]),
            None => (&s[..], ""),
        };
        let parse_term = |t: &str| -> Result<(Rational, bool)> {
            // returns (value, is_imaginary)
            if let Some(core) = t.strip_suffix("*i") {
                Ok((parse_rational(core)?, true))
            } else if t == "i" || t == "+i" {
                Ok((rat_int(1), true))
            } else if t == "-i" {
                Ok((rat_int(-1), true))
            } else {
                Ok((parse_rational(t)?, false))
            }
        };
        let mut re = rat_zero();
        let mut im = rat_zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for t in [first, second] {
            if t.is_empty() {
                continue;
            }
            let (v, imag) = parse_term(t)?;
            if imag {
                if seen_im {
                    return Err(Error::Parse(format!("two imaginary parts in '{s}'")));
                }
                im = v;
                seen_im = true;
            } else {
                if seen_re {
                    return Err(Error::Parse(format!("two real parts in '{s}'")));
                }
                re = v;
                seen_re = true;
            }
        }
        Ok(GaussianRational { re, im })
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", rational_to_string(&self.re));
        }
        let im = format!("{}*i", rational_to_string(&self.im));
        if self.re.is_zero() {
            write!(f, "{im}")
        } else if self.im.is_negative() {
            write!(f, "{}{im}", rational_to_string(&self.re))
        } else {
            write!(f, "{}+{im}", rational_to_string(&self.re))
        }
    }
}

use num_traits::Signed;

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}
