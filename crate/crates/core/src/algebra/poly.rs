//! Dense univariate polynomials over `F_q`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::field::{Field, Fq};
use crate::algebra::mul::{divmod_coeffs, mul_coeffs, KARATSUBA_THRESHOLD};
use crate::error::{Error, Result};

/// A polynomial in `F_q[t]`, coefficients in ascending order with no
/// trailing zeros. The zero polynomial has no coefficients and degree `None`.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from ascending raw coefficients (each `< q`).
    pub fn new(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Ascending integer coefficients, reduced into the prime subfield.
    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &Field, c: u32) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(field: &Field, c: u32, deg: usize) -> Poly {
        let mut v = vec![0u32; deg + 1];
        v[deg] = c;
        Poly::new(field, v)
    }

    /// The variable `t`.
    pub fn t(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn lc_elem(&self) -> Fq {
        self.field.elem(self.lc())
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn assert_same(&self, other: &Poly) {
        assert!(self.field.same(&other.field), "polynomials over different fields");
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Multiplication with an explicit Karatsuba threshold.
    pub fn mul_with_threshold(&self, other: &Poly, threshold: usize) -> Poly {
        self.assert_same(other);
        Poly::new(&self.field, mul_coeffs(&self.field, &self.coeffs, &other.coeffs, threshold))
    }

    /// Multiplies by a field element.
    pub fn scale(&self, c: u32) -> Poly {
        if c == 0 {
            return Poly::zero(&self.field);
        }
        if c == 1 {
            return self.clone();
        }
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0u32; k];
        v.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, v)
    }

    /// Splits off the leading coefficient: `self = unit * monic`. Zero maps
    /// to `(0, 0)`.
    pub fn monic_parts(&self) -> (u32, Poly) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let lc = self.lc();
        let inv = self.field.inv(lc).expect("nonzero");
        (lc, self.scale(inv))
    }

    pub fn monic(&self) -> Poly {
        self.monic_parts().1
    }

    /// Quotient and remainder: `self = q * d + r`, `deg r < deg d`.
    pub fn divmod(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = divmod_coeffs(&self.field, &self.coeffs, &d.coeffs, true);
        Ok((Poly::new(&self.field, q), Poly::new(&self.field, r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (_, r) = divmod_coeffs(&self.field, &self.coeffs, &d.coeffs, false);
        Ok(Poly::new(&self.field, r))
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divmod(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.assert_same(other);
        let f = &self.field;
        let (mut a, mut b) = (self.coeffs.clone(), other.coeffs.clone());
        while !b.is_empty() {
            let (_, mut r) = divmod_coeffs(f, &a, &b, false);
            while r.last() == Some(&0) {
                r.pop();
            }
            a = b;
            b = r;
        }
        Poly::new(f, a).monic()
    }

    /// Extended gcd: returns `(g, s, u)` with `s*self + u*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        self.assert_same(other);
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lc()).expect("nonzero");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let g = self.gcd(other);
        (&self.div_exact(&g).expect("gcd divides") * other).monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_u64(i as u64)))
            .collect();
        Poly::new(f, v)
    }

    /// Evaluates at a field element.
    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Poly) -> Poly {
        self.assert_same(g);
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(f), |acc, &c| &(&acc * g) + &Poly::constant(f, c))
    }

    /// Substitution `t -> t^e`.
    pub fn compose_power(&self, e: usize) -> Poly {
        assert!(e >= 1);
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0u32; (self.coeffs.len() - 1) * e + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i * e] = c;
        }
        Poly::new(&self.field, v)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m).expect("nonzero modulus");
        let mut acc = Poly::one(&self.field).rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m).expect("nonzero modulus");
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m).expect("nonzero modulus");
            }
        }
        acc
    }

    /// Resultant of `self` and `other`.
    pub fn resultant(&self, other: &Poly) -> Result<u32> {
        self.check(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(0);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = 1u32;
        loop {
            let m = a.degree().unwrap() as u64;
            let n = match b.degree() {
                None => return Ok(0),
                Some(n) => n as u64,
            };
            if n == 0 {
                return Ok(f.mul(acc, f.pow(b.lc(), m)));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(0);
            }
            let k = r.degree().unwrap() as u64;
            if (m * n) % 2 == 1 {
                acc = f.neg(acc);
            }
            acc = f.mul(acc, f.pow(b.lc(), m - k));
            a = b;
            b = r;
        }
    }

    /// Coefficient-wise Frobenius followed by `t -> t^p`, i.e. `self^p`.
    pub fn frobenius(&self) -> Poly {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let v: Vec<u32> = self.coeffs.iter().map(|&c| f.frobenius(c)).collect();
        Poly::new(f, v).compose_power(p)
    }

    /// Returns `g` with `g^p = self` when it exists.
    pub fn pth_root(&self) -> Option<Poly> {
        let f = &self.field;
        let p = f.characteristic() as usize;
        if self.coeffs.iter().enumerate().any(|(i, &c)| c != 0 && i % p != 0) {
            return None;
        }
        let v = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Some(Poly::new(f, v))
    }

    /// Multiplicity of `pi` in `self` (`self` nonzero, `pi` nonconstant).
    pub fn ord(&self, pi: &Poly) -> u64 {
        assert!(!self.is_zero() && !pi.is_constant());
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = cur.divmod(pi).expect("nonzero");
            if !r.is_zero() {
                return k;
            }
            cur = q;
            k += 1;
        }
    }

    /// Removes all factors of `pi`, returning the cofactor and the multiplicity.
    pub fn strip(&self, pi: &Poly) -> (Poly, u64) {
        let mut cur = self.clone();
        let mut k = 0;
        if cur.is_zero() {
            return (cur, 0);
        }
        loop {
            let (q, r) = cur.divmod(pi).expect("nonzero");
            if !r.is_zero() {
                return (cur, k);
            }
            cur = q;
            k += 1;
        }
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same(&other.field)
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(f, v)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(f, v)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_with_threshold(rhs, KARATSUBA_THRESHOLD)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(&f5(), c)
    }

    #[test]
    fn product_of_conjugate_linears() {
        // (t+1)(t+4) = t^2 + 4 over F_5
        assert_eq!(&p(&[1, 1]) * &p(&[4, 1]), p(&[-1, 0, 1]));
        assert_eq!((&p(&[1, 1]) * &p(&[4, 1])).to_string(), "t^2 + 4");
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        // gcd(t^2 - 1, t^2 + 3t + 2) = t + 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[2, 3, 1])), p(&[1, 1]));
        assert_eq!(p(&[0, 3]).gcd(&p(&[0, 0, 2])), p(&[0, 1]));
    }

    #[test]
    fn derivative_vanishes_on_pth_powers() {
        assert!(p(&[1, 0, 0, 0, 0, 1]).derivative().is_zero());
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn divmod_identity_and_errors() {
        let a = p(&[3, 1, 4, 1, 5, 9, 2, 6]);
        let b = p(&[2, 7, 1, 8]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg_i64() < b.deg_i64());
        assert_eq!(a.divmod(&Poly::zero(&f5())), Err(Error::DivisionByZero));
        let f7 = Field::prime(7).unwrap();
        assert_eq!(a.divmod(&Poly::one(&f7)), Err(Error::FieldMismatch));
    }

    #[test]
    fn pth_roots() {
        assert_eq!(p(&[1, 0, 0, 0, 0, 1]).pth_root(), Some(p(&[1, 1])));
        assert_eq!(p(&[0, 1, 0, 0, 0, 1]).pth_root(), None);
        assert_eq!(p(&[2]).pth_root(), Some(p(&[2])));
        let g = p(&[3, 0, 2, 1]);
        assert_eq!(g.pow(5).pth_root(), Some(g.clone()));
        assert_eq!(g.frobenius(), g.pow(5));
    }

    #[test]
    fn resultant_detects_common_roots() {
        assert_eq!(p(&[-1, 0, 1]).resultant(&p(&[2, 3, 1])).unwrap(), 0);
        // res(t - a, t - b) = a - b... up to sign: res(t-2, t-3) = (2 - 3) = -1
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-3, 1])).unwrap(), 4);
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[1, 2, 0, 3, 1]);
        let b = p(&[4, 0, 1, 1]);
        let (g, s, u) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn ord_and_strip() {
        let t = p(&[0, 1]);
        let f = &t.pow(3) * &p(&[1, 1]);
        assert_eq!(f.ord(&t), 3);
        assert_eq!(f.strip(&t), (p(&[1, 1]), 3));
    }
}
