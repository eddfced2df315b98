//! One-variable Laurent polynomials over the configured field, and the
//! canonical representative of a nonzero polynomial modulo units c*t^k.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{rational_to_string, FieldElement};

/// Dense Laurent polynomial: `coeffs[i]` is the coefficient of
/// t^(val + i). Invariant: first and last coefficients are nonzero; the
/// zero polynomial is the empty vector with valuation 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    val: i64,
    coeffs: Vec<FieldElement>,
}

impl LaurentPoly {
    pub fn new(val: i64, coeffs: Vec<FieldElement>) -> Self {
        let mut p = LaurentPoly { val, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.val += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.val = 0;
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            val: 0,
            coeffs: vec![],
        }
    }

    pub fn one() -> Self {
        Self::constant(FieldElement::one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(0, vec![c])
    }

    /// c * t^k.
    pub fn monomial(c: FieldElement, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn t_pow(k: i64) -> Self {
        Self::monomial(FieldElement::one(), k)
    }

    /// Polynomial from coefficients of t^0, t^1, ...
    pub fn from_coeffs(coeffs: Vec<FieldElement>) -> Self {
        Self::new(0, coeffs)
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| FieldElement::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn valuation(&self) -> i64 {
        self.val
    }

    /// Highest exponent of t, or 0 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.val + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, exp: i64) -> FieldElement {
        if self.is_zero() || exp < self.val || exp > self.degree() {
            FieldElement::zero()
        } else {
            self.coeffs[(exp - self.val) as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.coeffs.last().cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn trailing_coeff(&self) -> FieldElement {
        self.coeffs.first().cloned().unwrap_or_else(FieldElement::zero)
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (i64, &FieldElement)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.val + i as i64, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let val = self.val.min(other.val);
        let deg = self.degree().max(other.degree());
        let mut coeffs = vec![FieldElement::zero(); (deg - val + 1) as usize];
        for (e, c) in self.iter_terms() {
            coeffs[(e - val) as usize] = coeffs[(e - val) as usize].add(c);
        }
        for (e, c) in other.iter_terms() {
            coeffs[(e - val) as usize] = coeffs[(e - val) as usize].add(c);
        }
        Self::new(val, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![FieldElement::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::new(self.val + other.val, coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            val: self.val,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Division with remainder in the polynomial part: requires both
    /// operands to have valuation >= 0 (ordinary polynomials).
    pub fn divrem(&self, den: &Self) -> Result<(Self, Self)> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert!(self.is_zero() || self.val >= 0, "divrem needs polynomials");
        assert!(den.val >= 0, "divrem needs polynomials");
        let mut rem: Vec<FieldElement> = vec![FieldElement::zero(); (self.degree() + 1) as usize];
        for (e, c) in self.iter_terms() {
            rem[e as usize] = c.clone();
        }
        let dd = den.degree() as usize;
        let lead_inv = den.leading_coeff().inverse()?;
        let den_dense: Vec<FieldElement> = (0..=dd as i64).map(|e| den.coeff(e)).collect();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![FieldElement::zero(); rem.len() - dd];
        for k in (0..rem.len() - dd).rev() {
            let c = rem[k + dd].mul(&lead_inv);
            if !c.is_zero() {
                for (i, d) in den_dense.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(d));
                }
            }
            quo[k] = c;
        }
        Ok((Self::from_coeffs(quo), Self::from_coeffs(rem)))
    }

    /// Exact division in the Laurent ring; errors if the division leaves a
    /// remainder.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = self.shift(-self.val);
        let d = den.shift(-den.val);
        let (q, r) = num.divrem(&d)?;
        if !r.is_zero() {
            return Err(Error::Precondition("inexact polynomial division".into()));
        }
        Ok(q.shift(self.val - den.val))
    }

    /// Formal derivative d/dt.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&FieldElement::from_int(self.val + i as i64)))
            .collect();
        Self::new(self.val - 1, coeffs)
    }

    /// Evaluate at a field element (finite exponents only; negative
    /// valuations require the point to be invertible).
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        let mut acc = FieldElement::zero();
        let base = if self.val < 0 {
            x.inverse()?
        } else {
            x.clone()
        };
        // Horner on the dense part, then adjust by x^val.
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        let mut unit = FieldElement::one();
        for _ in 0..self.val.unsigned_abs() {
            unit = unit.mul(&base);
        }
        Ok(acc.mul(&unit))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms: Vec<(i64, &FieldElement)> = self.iter_terms().collect();
        for (e, c) in terms.into_iter().rev() {
            let (sign, mag) = match c {
                FieldElement::Rational(r) => {
                    use num_traits::Signed;
                    if r.is_negative() {
                        ("-", rational_to_string(&-r.clone()))
                    } else {
                        ("+", rational_to_string(r))
                    }
                }
                FieldElement::Cyclotomic(_) => ("+", format!("({c})")),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let tpart = match e {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{e}"),
            };
            match (mag.as_str(), tpart.as_str()) {
                (m, "") => write!(f, "{m}")?,
                ("1", t) => write!(f, "{t}")?,
                (m, t) => write!(f, "{m}*{t}")?,
            }
        }
        Ok(())
    }
}

/// The canonical representative of a nonzero Laurent polynomial modulo
/// units: monic with nonzero constant term (valuation zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPoly(LaurentPoly);

impl CanonicalPoly {
    pub fn one() -> Self {
        CanonicalPoly(LaurentPoly::one())
    }

    pub fn is_one(&self) -> bool {
        self.0 == LaurentPoly::one()
    }

    pub fn degree(&self) -> i64 {
        self.0.degree()
    }

    pub fn as_poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        // product of monic polynomials with nonzero constant terms is again
        // monic with nonzero constant term
        CanonicalPoly(self.0.mul(&other.0))
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = CanonicalPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    pub fn div_exact(&self, den: &Self) -> Option<Self> {
        match self.0.exact_div(&den.0) {
            Ok(q) => Some(CanonicalPoly(q)),
            Err(_) => None,
        }
    }

    pub fn derivative(&self) -> LaurentPoly {
        self.0.derivative()
    }

    /// Squarefree part (the radical in characteristic zero): p / gcd(p, p').
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.degree() == 0 {
            return Ok(CanonicalPoly::one());
        }
        let g = gcd(&self.0, &self.0.derivative())?;
        Ok(self.div_exact(&g).expect("gcd divides"))
    }
}

impl fmt::Display for CanonicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Unit-normalize a nonzero Laurent polynomial: divide by c*t^k so that the
/// result is monic with nonzero constant term.
pub fn normalize(p: &LaurentPoly) -> Result<CanonicalPoly> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "normalization of the zero polynomial is undefined".into(),
        ));
    }
    let shifted = p.shift(-p.valuation());
    let lead_inv = shifted.leading_coeff().inverse()?;
    Ok(CanonicalPoly(shifted.scale(&lead_inv)))
}

/// Monic canonical gcd; Euclidean algorithm after unit normalization.
pub fn gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<CanonicalPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::Precondition("gcd(0, 0) is undefined".into()));
    }
    if p.is_zero() {
        return normalize(q);
    }
    if q.is_zero() {
        return normalize(p);
    }
    let mut a = normalize(p)?.0;
    let mut b = normalize(q)?.0;
    while !b.is_zero() {
        let (_, r) = a.divrem(&b)?;
        a = b;
        b = r;
    }
    normalize(&a)
}

/// gcd of a list of canonical polynomials (unit element for empty input is
/// rejected, matching the undefined gcd of nothing).
pub fn gcd_many(polys: &[CanonicalPoly]) -> Result<CanonicalPoly> {
    let mut it = polys.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Precondition("gcd of empty list".into()))?;
    let mut acc = first.clone();
    for p in it {
        if acc.is_one() {
            break;
        }
        acc = gcd(acc.as_poly(), p.as_poly())?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn poly(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn normalize_examples() {
        // 3t^-2 - 3t^-1 -> t - 1
        let p = LaurentPoly::new(
            -2,
            vec![FieldElement::from_int(3), FieldElement::from_int(-3)],
        );
        assert_eq!(normalize(&p).unwrap().as_poly(), &poly(&[-1, 1]));
        // t^5 -> 1
        assert_eq!(normalize(&LaurentPoly::t_pow(5)).unwrap(), CanonicalPoly::one());
        // (2i)t^3 + (2i)t over Q(i) as conductor-4 cyclotomic -> t^2 + 1
        let two_i = FieldElement::zeta_pow(4, 1).mul(&FieldElement::from_int(2));
        let p = LaurentPoly::monomial(two_i.clone(), 3).add(&LaurentPoly::monomial(two_i, 1));
        assert_eq!(normalize(&p).unwrap().as_poly(), &poly(&[1, 0, 1]));
    }

    #[test]
    fn normalize_idempotent_on_unit_orbit() {
        let p = poly(&[2, -3, 1]);
        let n1 = normalize(&p).unwrap();
        let unit = LaurentPoly::monomial(FieldElement::Rational(rat(-5, 3)), -4);
        let n2 = normalize(&p.mul(&unit)).unwrap();
        assert_eq!(n1, n2);
        assert_eq!(normalize(n1.as_poly()).unwrap(), n1);
        assert!(normalize(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn gcd_examples() {
        // (t^2-1, t^3-1) -> t-1
        let g = gcd(&poly(&[-1, 0, 1]), &poly(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(g.as_poly(), &poly(&[-1, 1]));
        // (p, 0) -> normalize(p)
        let p = poly(&[2, 2]);
        assert_eq!(gcd(&p, &LaurentPoly::zero()).unwrap().as_poly(), &poly(&[1, 1]));
        assert!(gcd(&LaurentPoly::zero(), &LaurentPoly::zero()).is_err());
        // (z3 t - 1, z3^2 t - 1) over Q(z3) -> 1
        let f1 = LaurentPoly::new(0, vec![FieldElement::from_int(-1), FieldElement::zeta_pow(3, 1)]);
        let f2 = LaurentPoly::new(0, vec![FieldElement::from_int(-1), FieldElement::zeta_pow(3, 2)]);
        assert!(gcd(&f1, &f2).unwrap().is_one());
    }

    #[test]
    fn gcd_divides_product_witness() {
        let p = poly(&[-1, 0, 1]); // (t-1)(t+1)
        let q = poly(&[1, -2, 1]); // (t-1)^2
        let g = gcd(&p, &q).unwrap();
        let pq = normalize(&p.mul(&q)).unwrap();
        // lcm witness = p*q / g divides p*q
        let lcm = pq.div_exact(&g).unwrap();
        assert!(lcm.divides(&pq));
        assert!(g.divides(&normalize(&p).unwrap()));
        assert!(g.divides(&normalize(&q).unwrap()));
    }

    #[test]
    fn exact_division_and_remainder() {
        let p = poly(&[-1, 0, 0, 1]);
        let d = poly(&[-1, 1]);
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(poly(&[1, 1]).exact_div(&d).is_err());
        let shifted = p.shift(-5);
        assert_eq!(shifted.exact_div(&d.shift(2)).unwrap(), q.shift(-7));
    }

    #[test]
    fn squarefree_part() {
        let p = normalize(&poly(&[1, -2, 1])).unwrap(); // (t-1)^2
        assert_eq!(p.squarefree_part().unwrap().as_poly(), &poly(&[-1, 1]));
        let q = normalize(&poly(&[-1, 0, 1])).unwrap();
        assert_eq!(q.squarefree_part().unwrap(), q);
    }

    #[test]
    fn eval_points() {
        let p = poly(&[-1, 0, 0, 1]); // t^3 - 1
        let z3 = FieldElement::zeta_pow(3, 1);
        assert!(p.eval(&z3).unwrap().is_zero());
        assert!(!p.eval(&FieldElement::from_int(2)).unwrap().is_zero());
    }
}
