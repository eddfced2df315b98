//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are residues modulo the N-th cyclotomic polynomial, stored as
//! exactly phi(N) rational coefficients so that equality is coefficient
//! comparison.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{rat_one, rat_zero, rational_to_string, Rational};
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

/// Dense integer polynomial x^n - 1.
fn x_n_minus_1(n: u32) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n as usize + 1];
    c[0] = -BigInt::one();
    c[n as usize] = BigInt::one();
    c
}

/// Exact division of integer polynomials where the divisor is monic.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quo = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quo[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quo
}

/// The N-th cyclotomic polynomial Phi_N as dense integer coefficients,
/// computed by dividing x^N - 1 by Phi_d for every proper divisor d.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial needs N >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        let mut acc = x_n_minus_1(n);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            acc = int_poly_div_exact(&acc, &phi_d);
        }
        acc
    };
    debug_assert_eq!(poly.len() as u32 - 1, euler_phi(n));
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Remainder of a rational polynomial modulo the monic integer polynomial
/// `modulus`.
fn poly_rem(mut num: Vec<Rational>, modulus: &[BigInt]) -> Vec<Rational> {
    let dd = modulus.len() - 1;
    while num.len() > dd {
        let c = num.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let k = num.len() - dd;
        for (i, m) in modulus.iter().take(dd).enumerate() {
            let delta = &c * Rational::from_integer(m.clone());
            num[k + i] -= delta;
        }
    }
    num
}

/// An element of Q(zeta_N): coefficients c_0..c_{phi(N)-1} of the residue
/// class c_0 + c_1 zeta + ... modulo Phi_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    /// Build from arbitrary coefficients in powers of zeta_N; reduces mod Phi_N.
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Self {
        assert!(conductor >= 1);
        let phi = euler_phi(conductor) as usize;
        let modulus = cyclotomic_polynomial(conductor);
        let mut c = poly_rem(coeffs, &modulus);
        trim(&mut c);
        c.resize(phi, rat_zero());
        CyclotomicElement {
            conductor,
            coeffs: c,
        }
    }

    /// Exactly phi(N) coefficients already in reduced form.
    pub fn from_reduced(conductor: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != euler_phi(conductor) as usize {
            return Err(Error::Parse(format!(
                "cyclotomic element of conductor {} needs exactly {} coefficients, got {}",
                conductor,
                euler_phi(conductor),
                coeffs.len()
            )));
        }
        Ok(CyclotomicElement { conductor, coeffs })
    }

    pub fn zero(conductor: u32) -> Self {
        CyclotomicElement {
            conductor,
            coeffs: vec![rat_zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, rat_one())
    }

    pub fn from_rational(conductor: u32, r: Rational) -> Self {
        let mut coeffs = vec![rat_zero(); euler_phi(conductor) as usize];
        coeffs[0] = r;
        CyclotomicElement { conductor, coeffs }
    }

    /// zeta_N^k.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let n = conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let mut coeffs = vec![rat_zero(); k + 1];
        coeffs[k] = rat_one();
        Self::new(conductor, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value if the element lies in Q, else None.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "mixed cyclotomic conductors {} and {}",
            self.conductor, other.conductor
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicElement {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CyclotomicElement {
            conductor: self.conductor,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.conductor);
        }
        let mut prod = vec![rat_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Self::new(self.conductor, prod)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicElement {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_N; every nonzero residue is invertible since Phi_N is irreducible.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut a = self.coeffs.clone();
        trim(&mut a);
        // Extended Euclid: maintain r0 = u0*a (mod Phi), r1 = u1*a (mod Phi).
        let (mut r0, mut r1) = (modulus, a);
        let (mut u0, mut u1) = (vec![], vec![rat_one()]);
        while !r1.is_empty() {
            let (q, rem) = rat_poly_divrem(&r0, &r1);
            let u2 = rat_poly_sub(&u0, &rat_poly_mul(&q, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = u2;
        }
        // r0 = gcd, a nonzero constant since Phi_N is irreducible over Q.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial not coprime to element");
        let c = r0[0].clone();
        let inv_coeffs = u0.iter().map(|x| x / &c).collect();
        Ok(Self::new(self.conductor, inv_coeffs))
    }

    /// Canonical embedding into Q(zeta_M) for a conductor multiple M.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if target % self.conductor != 0 {
            return Err(Error::FieldMismatch(format!(
                "cannot embed conductor {} into {}",
                self.conductor, target
            )));
        }
        let step = (target / self.conductor) as usize;
        let mut coeffs = vec![rat_zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Ok(Self::new(target, coeffs))
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = rational_to_string(&c.abs());
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            match k {
                0 => write!(f, "{cs}")?,
                1 if cs == "1" => write!(f, "z")?,
                1 => write!(f, "{cs}*z")?,
                _ if cs == "1" => write!(f, "z^{k}")?,
                _ => write!(f, "{cs}*z^{k}")?,
            }
        }
        Ok(())
    }
}

fn rat_poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!den.is_empty());
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den.last().unwrap();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quo = vec![rat_zero(); rem.len() - dd];
    for k in (0..=rem.len() - 1 - dd).rev() {
        let c = &rem[k + dd] / lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let delta = &c * d;
                rem[k + i] -= delta;
            }
        }
        quo[k] = c;
    }
    trim(&mut rem);
    (quo, rem)
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![rat_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![rat_zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational::rat_int;

    fn int_poly(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), int_poly(&[1, 0, 1]));
        // Phi_6 derived by dividing x^6 - 1 by Phi_1 Phi_2 Phi_3.
        let mut acc = x_n_minus_1(6);
        for d in [1u32, 2, 3] {
            acc = int_poly_div_exact(&acc, &cyclotomic_polynomial(d));
        }
        assert_eq!(*cyclotomic_polynomial(6), acc);
        assert_eq!(*cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).len() as u32 - 1, euler_phi(12));
    }

    #[test]
    fn inverse_examples() {
        let one = CyclotomicElement::one(5);
        assert_eq!(one.inverse().unwrap(), one);
        // zeta_4 = i, inverse is -i = -zeta_4.
        let z4 = CyclotomicElement::zeta_pow(4, 1);
        assert_eq!(z4.inverse().unwrap(), z4.neg());
        // (1 + zeta_3) * r = 1, verified by multiplication.
        let a = CyclotomicElement::one(3).add(&CyclotomicElement::zeta_pow(3, 1));
        let r = a.inverse().unwrap();
        assert_eq!(a.mul(&r), CyclotomicElement::one(3));
        assert!(CyclotomicElement::zero(3).inverse().is_err());
    }

    #[test]
    fn zeta_order() {
        let z = CyclotomicElement::zeta_pow(12, 1);
        let mut p = CyclotomicElement::one(12);
        for _ in 0..12 {
            p = p.mul(&z);
        }
        assert_eq!(p, CyclotomicElement::one(12));
        let mut q = CyclotomicElement::one(12);
        for _ in 0..6 {
            q = q.mul(&z);
        }
        assert_eq!(q, CyclotomicElement::from_rational(12, rat_int(-1)));
    }

    #[test]
    fn embedding_commutes() {
        // zeta_3 embeds into Q(zeta_12) as zeta_12^4.
        let a = CyclotomicElement::zeta_pow(3, 1);
        let b = CyclotomicElement::zeta_pow(3, 2);
        let e = |x: &CyclotomicElement| x.embed(12).unwrap();
        assert_eq!(e(&a.mul(&b)), e(&a).mul(&e(&b)));
        assert_eq!(e(&a.add(&b)), e(&a).add(&e(&b)));
        assert_eq!(e(&a), CyclotomicElement::zeta_pow(12, 4));
    }
}
