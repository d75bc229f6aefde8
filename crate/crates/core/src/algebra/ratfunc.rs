//! The rational function field `F_q(t)`: reduced fractions, valuations and heights.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::algebra::factor::{count_distinct_irreducibles, factor};
use crate::algebra::field::Field;
use crate::algebra::place::Place;
use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den` monic and `gcd(num, den) = 1`;
/// zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.field() != den.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            let f = den.field().clone();
            return RatFunc {
                num,
                den: Poly::one(&f),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Self::normalize_unit(num, den)
    }

    fn normalize_unit(num: Poly, den: Poly) -> RatFunc {
        let (lc, den) = den.monic_parts();
        let inv = num.field().inv(lc).expect("nonzero denominator");
        RatFunc {
            num: num.scale(inv),
            den,
        }
    }

    /// Builds from parts already known to be coprime.
    pub(crate) fn from_coprime(num: Poly, den: Poly) -> RatFunc {
        debug_assert!(num.gcd(&den).is_one() || num.is_zero());
        Self::normalize_unit(num, den)
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let f = p.field().clone();
        RatFunc {
            num: p,
            den: Poly::one(&f),
        }
    }

    pub fn zero(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn one(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::one(field))
    }

    pub fn constant(field: &Field, c: u32) -> RatFunc {
        RatFunc::from_poly(Poly::constant(field, c))
    }

    pub fn from_i64(field: &Field, c: i64) -> RatFunc {
        RatFunc::constant(field, field.from_i64(c))
    }

    pub fn t(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::t(field))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `F_q`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: u32) -> RatFunc {
        if c == 0 {
            return RatFunc::zero(self.field());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// `self^p`.
    pub fn frobenius(&self) -> RatFunc {
        RatFunc {
            num: self.num.frobenius(),
            den: self.den.frobenius(),
        }
    }

    /// `self^(p^s)`.
    pub fn frobenius_iter(&self, s: u32) -> RatFunc {
        (0..s).fold(self.clone(), |acc, _| acc.frobenius())
    }

    /// `p`-th root in `F_q(t)` when it exists.
    pub fn pth_root(&self) -> Option<RatFunc> {
        let n = self.num.pth_root()?;
        let d = self.den.pth_root()?;
        Some(RatFunc { num: n, den: d })
    }

    pub fn is_pth_power(&self) -> bool {
        self.pth_root().is_some()
    }

    /// Substitution `t -> t^e`.
    pub fn compose_power(&self, e: usize) -> RatFunc {
        RatFunc::from_coprime(self.num.compose_power(e), self.den.compose_power(e))
    }

    /// Substitution `t -> r` for a nonconstant rational function `r`.
    pub fn substitute(&self, r: &RatFunc) -> Result<RatFunc> {
        if r.is_constant() {
            return Err(Error::ConstantInput("substitution by a constant"));
        }
        let (n, d) = (&r.num, &r.den);
        let hom = |f: &Poly, deg: usize| -> Poly {
            // sum c_i n^i d^(deg - i)
            let field = f.field();
            let mut acc = Poly::zero(field);
            let mut dpow = Poly::one(field);
            for i in (0..=deg).rev() {
                acc = &(&acc * n) + &dpow.scale(f.coeff(i));
                dpow = &dpow * d;
            }
            acc
        };
        let deg = self.num.deg_i64().max(self.den.deg_i64()).max(0) as usize;
        RatFunc::new(hom(&self.num, deg), hom(&self.den, deg))
    }

    /// `ord_v(self)`; zero has valuation `+infinity` and is rejected.
    pub fn valuation(&self, v: &Place) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroInput("valuation +infinity"));
        }
        Ok(match v {
            Place::Infinity => self.den.deg_i64() - self.num.deg_i64(),
            Place::Finite(pi) => {
                if pi.field() != self.field() {
                    return Err(Error::FieldMismatch);
                }
                self.num.ord(pi) as i64 - self.den.ord(pi) as i64
            }
        })
    }

    /// Logarithmic height `max(deg num, deg den)`.
    pub fn height(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInput("height of 0 is undefined"));
        }
        Ok(self.num.degree().unwrap().max(self.den.degree().unwrap()) as u64)
    }

    /// Height computed from the divisor: `-sum_{v(x) < 0} v(x) deg(v)`
    /// over all places including infinity. Agrees with [`RatFunc::height`].
    pub fn height_from_places(&self) -> Result<u64> {
        let mut total = 0i64;
        for (place, v) in self.divisor()? {
            if v < 0 {
                total -= v * place.degree() as i64;
            }
        }
        Ok(total as u64)
    }

    /// The principal divisor: every place with nonzero valuation.
    pub fn divisor(&self) -> Result<Vec<(Place, i64)>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("divisor of 0"));
        }
        let mut out = Vec::new();
        for (poly, sign) in [(&self.num, 1i64), (&self.den, -1i64)] {
            if poly.is_constant() {
                continue;
            }
            for (pi, e) in factor(poly)?.factors {
                out.push((Place::Finite(pi), sign * e as i64));
            }
        }
        let vinf = self.valuation(&Place::Infinity)?;
        if vinf != 0 {
            out.push((Place::Infinity, vinf));
        }
        Ok(out)
    }

    /// Number of places with nonzero valuation.
    pub fn n_zero(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInput("n_0 of 0 is undefined"));
        }
        let mut n = 0usize;
        for poly in [&self.num, &self.den] {
            if !poly.is_constant() {
                n += count_distinct_irreducibles(poly)?;
            }
        }
        if self.num.deg_i64() != self.den.deg_i64() {
            n += 1;
        }
        Ok(n as u64)
    }
}

/// Free-function form of [`RatFunc::valuation`].
pub fn valuation(x: &RatFunc, v: &Place) -> Result<i64> {
    x.valuation(v)
}

/// Free-function form of [`RatFunc::height`].
pub fn height(x: &RatFunc) -> Result<u64> {
    x.height()
}

/// Free-function form of [`RatFunc::n_zero`].
pub fn n_zero(x: &RatFunc) -> Result<u64> {
    x.n_zero()
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by denominator, then numerator.
impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.num.cmp(&other.num))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::reduce(num, &self.den * &rhs.den);
        }
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RatFunc::reduce(num, &(&d1 * &d2) * &g)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.field());
        }
        // cross-cancel so the product needs no further reduction
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = rhs.den.div_exact(&g1).unwrap();
        let n2 = rhs.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::normalize_unit(&n1 * &n2, &d1 * &d2)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::try_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);
