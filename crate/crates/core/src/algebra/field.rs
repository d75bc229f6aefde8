//! Finite fields `F_q`, `q = p^k`.
//!
//! Elements are stored as `u32` in packed base-`p` form: the element
//! `c_0 + c_1 z + ... + c_{k-1} z^{k-1}` (with `z` a root of the defining
//! modulus) is the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Every integer
//! in `0..q` is a valid element, `0` and `1` are the field zero and one, and
//! the prime subfield is `0..p`. Multiplication in proper extensions goes
//! through discrete log tables, so `q` is capped at [`MAX_EXTENSION_ORDER`].

use std::fmt;
use std::sync::Arc;

use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// Largest `q` accepted for proper extensions (log tables are `O(q)`).
pub const MAX_EXTENSION_ORDER: u64 = 1 << 22;

/// Description of `F_q`: characteristic, degree and defining modulus.
#[derive(Debug)]
pub struct FieldDesc {
    p: u32,
    k: u32,
    q: u32,
    /// Monic irreducible modulus over `F_p`, ascending coefficients, absent for `k = 1`.
    modulus: Option<Vec<u32>>,
    tables: Option<LogTables>,
}

#[derive(Debug)]
struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Cheaply clonable handle to a finite field.
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

/// A field element together with its field, for the public element API.
#[derive(Clone, PartialEq, Eq)]
pub struct Fq {
    field: Field,
    rep: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} exceeds 2^31")));
        }
        Ok(Field(Arc::new(FieldDesc {
            p,
            k: 1,
            q: p,
            modulus: None,
            tables: None,
        })))
    }

    /// The extension `F_p[z]/(modulus)`; `modulus` is given by ascending
    /// coefficients in `0..p` and must be monic and irreducible over `F_p`.
    pub fn extension(p: u32, modulus: &[u32]) -> Result<Field> {
        let base = Field::prime(p)?;
        let m = Poly::new(&base, modulus.to_vec());
        let k = match m.degree() {
            Some(d) if d >= 1 => d as u32,
            _ => return Err(Error::InvalidField("modulus must have degree >= 1".into())),
        };
        if k == 1 {
            return Ok(base);
        }
        if m.lc() != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_EXTENSION_ORDER);
        let q = q.ok_or_else(|| {
            Error::InvalidField(format!("q = {p}^{k} exceeds {MAX_EXTENSION_ORDER}"))
        })? as u32;
        if !m.is_irreducible() {
            return Err(Error::InvalidField("modulus is reducible over F_p".into()));
        }
        let modulus = m.coeffs().to_vec();
        let tables = build_tables(p, k, q, &modulus)?;
        Ok(Field(Arc::new(FieldDesc {
            p,
            k,
            q,
            modulus: Some(modulus),
            tables: Some(tables),
        })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Wraps a raw packed representative.
    pub fn elem(&self, rep: u32) -> Fq {
        debug_assert!(rep < self.0.q);
        Fq {
            field: self.clone(),
            rep,
        }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    /// Image of an unsigned integer.
    pub fn from_u64(&self, v: u64) -> u32 {
        (v % self.0.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            let s = a as u64 + b as u64;
            let p = p as u64;
            (if s >= p { s - p } else { s }) as u32
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..self.0.k {
                let d = (a % p + b % p) % p;
                out += d * place;
                a /= p;
                b /= p;
                place = place.wrapping_mul(p);
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            if a == 0 {
                0
            } else {
                p - a
            }
        } else {
            let mut a = a;
            let mut out = 0u32;
            let mut place = 1u32;
            for _ in 0..self.0.k {
                let d = a % p;
                out += ((p - d) % p) * place;
                a /= p;
                place = place.wrapping_mul(p);
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.0.tables {
            None => ((a as u64 * b as u64) % self.0.p as u64) as u32,
            Some(t) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let e = (t.log[a as usize] as u64 + t.log[b as usize] as u64)
                        % (self.0.q as u64 - 1);
                    t.exp[e as usize]
                }
            }
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        Some(match &self.0.tables {
            None => self.pow(a, self.0.p as u64 - 2),
            Some(t) => {
                let l = t.log[a as usize] as u64;
                t.exp[((self.0.q as u64 - 1 - l) % (self.0.q as u64 - 1)) as usize]
            }
        })
    }

    /// Frobenius `a -> a^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        if self.0.k == 1 {
            a
        } else {
            self.pow(a, self.0.p as u64)
        }
    }

    /// The unique `p`-th root, `a^(p^(k-1))`.
    pub fn pth_root(&self, a: u32) -> u32 {
        let mut r = a;
        for _ in 1..self.0.k {
            r = self.pow(r, self.0.p as u64);
        }
        r
    }

    pub fn is_square(&self, a: u32) -> bool {
        if a == 0 || self.0.p == 2 {
            return true;
        }
        self.pow(a, (self.0.q as u64 - 1) / 2) == 1
    }

    /// Square root with the smaller canonical representative, or `None` for
    /// non-residues.
    pub fn sqrt(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return Some(0);
        }
        if self.0.p == 2 {
            // squaring is bijective in characteristic 2
            return Some(self.pow(a, self.0.q as u64 / 2));
        }
        if !self.is_square(a) {
            return None;
        }
        let q = self.0.q as u64;
        // Tonelli-Shanks
        let mut s = 0u32;
        let mut odd = q - 1;
        while odd % 2 == 0 {
            odd /= 2;
            s += 1;
        }
        let z = (2..self.0.q).find(|&c| !self.is_square(c))?;
        let mut m = s;
        let mut c = self.pow(z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, (odd + 1) / 2);
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.mul(b, b);
            }
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        let other = self.neg(r);
        Some(r.min(other))
    }

    /// Iterator over all elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    /// Iterator over the nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.0.q
    }

    pub(crate) fn same(&self, other: &Field) -> bool {
        self == other
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}", self.0.p, self.0.k)
        }
    }
}

impl Fq {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rep(&self) -> u32 {
        self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    pub fn add(&self, other: &Fq) -> Fq {
        self.field.elem(self.field.add(self.rep, other.rep))
    }

    pub fn mul(&self, other: &Fq) -> Fq {
        self.field.elem(self.field.mul(self.rep, other.rep))
    }

    pub fn pow(&self, e: u64) -> Fq {
        self.field.elem(self.field.pow(self.rep, e))
    }

    /// Canonical square root, `None` when `self` is a non-residue.
    pub fn sqrt(&self) -> Option<Fq> {
        self.field.sqrt(self.rep).map(|r| self.field.elem(r))
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// Square root of an element, the free-function form of [`Fq::sqrt`].
pub fn fq_sqrt(a: &Fq) -> Option<Fq> {
    a.sqrt()
}

fn build_tables(p: u32, k: u32, q: u32, modulus: &[u32]) -> Result<LogTables> {
    let mulmod = |a: u32, b: u32| -> u32 {
        let da = unpack(a, p, k);
        let db = unpack(b, p, k);
        let mut prod = vec![0u64; 2 * k as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        for top in (k as usize..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in modulus[..k as usize].iter().enumerate() {
                let idx = top - k as usize + i;
                prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
            }
        }
        let digits: Vec<u32> = prod[..k as usize].iter().map(|&d| d as u32).collect();
        pack(&digits, p)
    };
    let order = q - 1;
    let factors: Vec<u32> = (2..=order).filter(|&d| order % d == 0 && is_prime(d as u64)).collect();
    let pow = |a: u32, mut e: u32| {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let gen = (2..q)
        .find(|&g| factors.iter().all(|&r| pow(g, order / r) != 1))
        .ok_or_else(|| Error::InvalidField("no multiplicative generator found".into()))?;
    let mut exp = vec![0u32; order as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u32;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = cur;
        log[cur as usize] = i as u32;
        cur = mulmod(cur, gen);
    }
    Ok(LogTables { exp, log })
}

fn unpack(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn pack(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.neg(1), 4);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn sqrt_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.sqrt(4), Some(2));
        assert_eq!(f.sqrt(2), None);
        assert_eq!(f.sqrt(0), Some(0));
        assert_eq!(fq_sqrt(&f.elem(1)).map(|r| r.rep()), Some(1));
    }

    #[test]
    fn sqrt_recovers_square_roots() {
        for p in [5u32, 7, 13, 17, 41, 97] {
            let f = Field::prime(p).unwrap();
            for r in f.elements() {
                let s = f.sqrt(f.mul(r, r)).unwrap();
                assert!(s == r || s == f.neg(r));
            }
        }
    }

    #[test]
    fn extension_field_arithmetic() {
        // F_25 = F_5[z]/(z^2 + 2), z^2 = 3
        let f = Field::extension(5, &[2, 0, 1]).unwrap();
        assert_eq!(f.order(), 25);
        let z = 5u32;
        assert_eq!(f.mul(z, z), 3);
        for a in f.units() {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
            assert_eq!(f.pow(a, 24), 1);
            assert_eq!(f.frobenius(f.pth_root(a)), a);
            let s = f.sqrt(f.mul(a, a)).unwrap();
            assert!(s == a || s == f.neg(a));
        }
        // every element of F_p is a square in F_{p^2}
        assert!(f.is_square(2));
        assert!(Field::extension(5, &[1, 0, 1]).is_err(), "z^2+1 splits over F_5");
    }
}
