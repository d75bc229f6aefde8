//! Weierstrass curves over `F_q(t)`: invariants, points and the group law.

mod base_change;
mod division;
mod frobenius;
mod roots;
mod short;

pub use base_change::{base_change_curve, base_change_point, base_change_ratfunc, Substitution};
pub use division::{division_values, DivisionValues};
pub use frobenius::{frobenius_curve, frobenius_descend, frobenius_map, frobenius_power_s};
pub use roots::{halve_point, rational_roots, two_torsion_x};
pub use short::{to_short_form, ShortForm};

use std::fmt;

use crate::algebra::{Field, RatFunc};
use crate::error::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with cached invariants.
#[derive(Clone, PartialEq, Eq)]
pub struct Curve {
    a: [RatFunc; 5],
    b2: RatFunc,
    b4: RatFunc,
    b6: RatFunc,
    b8: RatFunc,
    c4: RatFunc,
    c6: RatFunc,
    disc: RatFunc,
    j: RatFunc,
}

/// A point: the identity `O` or an affine point.
#[derive(Clone, PartialEq, Eq)]
pub enum Point {
    Infinity,
    Affine { x: RatFunc, y: RatFunc },
}

impl Point {
    pub fn affine(x: RatFunc, y: RatFunc) -> Point {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&RatFunc> {
        match self {
            Point::Affine { x, .. } => Some(x),
            Point::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&RatFunc> {
        match self {
            Point::Affine { y, .. } => Some(y),
            Point::Infinity => None,
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl Curve {
    /// Builds a curve from `a1, a2, a3, a4, a6`; rejects singular input.
    pub fn new(a1: RatFunc, a2: RatFunc, a3: RatFunc, a4: RatFunc, a6: RatFunc) -> Result<Curve> {
        let field = a1.field().clone();
        if [&a2, &a3, &a4, &a6].iter().any(|c| c.field() != &field) {
            return Err(Error::FieldMismatch);
        }
        let k = |c: i64| RatFunc::from_i64(&field, c);
        let b2 = &(&a1 * &a1) + &(&k(4) * &a2);
        let b4 = &(&k(2) * &a4) + &(&a1 * &a3);
        let b6 = &(&a3 * &a3) + &(&k(4) * &a6);
        let b8 = &(&(&(&(&a1 * &a1) * &a6) + &(&k(4) * &(&a2 * &a6))) - &(&(&a1 * &a3) * &a4))
            + &(&(&a2 * &(&a3 * &a3)) - &(&a4 * &a4));
        let c4 = &(&b2 * &b2) - &(&k(24) * &b4);
        let c6 = &(&(&k(36) * &(&b2 * &b4)) - &(&b2 * &(&b2 * &b2))) - &(&k(216) * &b6);
        let disc = &(&(&(&k(-1) * &(&b2 * &(&b2 * &b8))) - &(&k(8) * &(&b4 * &(&b4 * &b4))))
            - &(&k(27) * &(&b6 * &b6)))
            + &(&k(9) * &(&b2 * &(&b4 * &b6)));
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        let j = &(&c4 * &(&c4 * &c4)) / &disc;
        Ok(Curve {
            a: [a1, a2, a3, a4, a6],
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
            j,
        })
    }

    /// Builds `y^2 = x^3 + a x + b`.
    pub fn short(a: RatFunc, b: RatFunc) -> Result<Curve> {
        let f = a.field().clone();
        Curve::new(RatFunc::zero(&f), RatFunc::zero(&f), RatFunc::zero(&f), a, b)
    }

    pub fn from_coefficients(a: [RatFunc; 5]) -> Result<Curve> {
        let [a1, a2, a3, a4, a6] = a;
        Curve::new(a1, a2, a3, a4, a6)
    }

    pub fn field(&self) -> &Field {
        self.a[0].field()
    }

    /// `[a1, a2, a3, a4, a6]`.
    pub fn coefficients(&self) -> &[RatFunc; 5] {
        &self.a
    }

    pub fn a1(&self) -> &RatFunc {
        &self.a[0]
    }
    pub fn a2(&self) -> &RatFunc {
        &self.a[1]
    }
    pub fn a3(&self) -> &RatFunc {
        &self.a[2]
    }
    pub fn a4(&self) -> &RatFunc {
        &self.a[3]
    }
    pub fn a6(&self) -> &RatFunc {
        &self.a[4]
    }
    pub fn b2(&self) -> &RatFunc {
        &self.b2
    }
    pub fn b4(&self) -> &RatFunc {
        &self.b4
    }
    pub fn b6(&self) -> &RatFunc {
        &self.b6
    }
    pub fn b8(&self) -> &RatFunc {
        &self.b8
    }
    pub fn c4(&self) -> &RatFunc {
        &self.c4
    }
    pub fn c6(&self) -> &RatFunc {
        &self.c6
    }
    pub fn discriminant(&self) -> &RatFunc {
        &self.disc
    }
    pub fn j_invariant(&self) -> &RatFunc {
        &self.j
    }

    /// All coefficients lie in `F_q[t]`.
    pub fn is_integral(&self) -> bool {
        self.a.iter().all(RatFunc::is_poly)
    }

    /// `a1 = a3 = 0`, so the equation reads `y^2 = cubic(x)`.
    pub fn has_cubic_form(&self) -> bool {
        self.a[0].is_zero() && self.a[2].is_zero()
    }

    pub fn is_short(&self) -> bool {
        self.has_cubic_form() && self.a[1].is_zero()
    }

    /// `x^3 + a2 x^2 + a4 x + a6 - y^2 - a1 x y - a3 y`.
    fn equation(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        let [a1, a2, a3, a4, a6] = &self.a;
        let x2 = x * x;
        let rhs = &(&(&(&x2 * x) + &(a2 * &x2)) + &(a4 * x)) + a6;
        let lhs = &(&(y * y) + &(&(a1 * x) * y)) + &(a3 * y);
        &rhs - &lhs
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                x.field() == self.field() && y.field() == self.field() && self.equation(x, y).is_zero()
            }
        }
    }

    /// Constructs an affine point, checking the curve equation.
    pub fn point(&self, x: RatFunc, y: RatFunc) -> Result<Point> {
        let p = Point::Affine { x, y };
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::OffCurve)
        }
    }

    fn check(&self, p: &Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OffCurve)
        }
    }

    pub fn neg(&self, p: &Point) -> Result<Point> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &Point) -> Result<Point> {
        self.check(p)?;
        Ok(self.add_unchecked(p, p))
    }

    /// `[n] P` by double-and-add; negative `n` negates.
    pub fn mul(&self, n: i64, p: &Point) -> Result<Point> {
        self.check(p)?;
        Ok(self.mul_unchecked(n, p))
    }

    pub(crate) fn neg_unchecked(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: &(&(-y) - &(self.a1() * x)) - self.a3(),
            },
        }
    }

    pub(crate) fn add_unchecked(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let f = self.field();
        let k = |c: i64| RatFunc::from_i64(f, c);
        let (lambda, nu) = if x1 == x2 {
            let denom = &(&(&k(2) * y1) + &(a1 * x1)) + a3;
            if (y1 + y2) + (a1 * x2) + a3.clone() == RatFunc::zero(f) || denom.is_zero() {
                return Point::Infinity;
            }
            let x1sq = x1 * x1;
            let lam_num = &(&(&(&k(3) * &x1sq) + &(&k(2) * &(a2 * x1))) + a4) - &(a1 * y1);
            let nu_num = &(&(&(-&(&x1sq * x1)) + &(a4 * x1)) + &(&k(2) * a6)) - &(a3 * y1);
            (&lam_num / &denom, &nu_num / &denom)
        } else {
            let dx = x2 - x1;
            let lambda = &(y2 - y1) / &dx;
            let nu = &(&(y1 * x2) - &(y2 * x1)) / &dx;
            (lambda, nu)
        };
        let x3 = &(&(&(&(&lambda * &lambda) + &(a1 * &lambda)) - a2) - x1) - x2;
        let y3 = &(&(-&(&(&lambda + a1) * &x3)) - &nu) - a3;
        Point::Affine { x: x3, y: y3 }
    }

    pub(crate) fn mul_unchecked(&self, n: i64, p: &Point) -> Point {
        let base = if n < 0 { self.neg_unchecked(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        let mut cur = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &cur);
            }
            k >>= 1;
            if k > 0 {
                cur = self.add_unchecked(&cur, &cur);
            }
        }
        acc
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "Curve[{a1}, {a2}, {a3}, {a4}, {a6}] over {}", self.field())
    }
}

/// Free-function constructor matching the other module entry points.
pub fn curve_invariants(a: [RatFunc; 5]) -> Result<Curve> {
    Curve::from_coefficients(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_curve, parse_point, parse_ratfunc};

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn ex52() -> Curve {
        parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f5()).unwrap()
    }

    #[test]
    fn example_curve_invariants() {
        let f = f5();
        let e = ex52();
        let disc = parse_ratfunc("4*t^6*(t+1)^2*(t-1)^2", &f).unwrap();
        assert_eq!(e.discriminant(), &disc);
        let j = parse_ratfunc("-(t^2-2)^3/(t^2-1)^2", &f).unwrap();
        assert_eq!(e.j_invariant(), &j);
        assert_eq!(e.j_invariant().to_string(), "(4*t^6 + t^4 + 3*t^2 + 3)/(t^4 + 3*t^2 + 1)");
    }

    #[test]
    fn j_zero_curve() {
        let f = f5();
        let e = parse_curve("0,0,0,0,t", &f).unwrap();
        assert_eq!(e.discriminant(), &parse_ratfunc("3*t^2", &f).unwrap());
        assert!(e.j_invariant().is_zero());
    }

    #[test]
    fn invariant_relations() {
        let f = f5();
        let e = parse_curve("1,t,t+2,3t^2,-t^2", &f).unwrap();
        let k = |c| RatFunc::from_i64(&f, c);
        assert_eq!(&k(4) * e.b8(), &(e.b2() * e.b6()) - &(e.b4() * e.b4()));
        assert_eq!(
            &k(1728) * e.discriminant(),
            &(e.c4() * &(e.c4() * e.c4())) - &(e.c6() * e.c6())
        );
        assert_eq!(e.j_invariant() * e.discriminant(), e.c4() * &(e.c4() * e.c4()));
    }

    #[test]
    fn group_law_small_multiples() {
        let e = ex52();
        let p = parse_point("t;t^2", &e).unwrap();
        let p2 = e.double(&p).unwrap();
        assert!(p2.x().unwrap().den().is_one());
        let p3 = e.mul(3, &p).unwrap();
        let b3 = parse_ratfunc("(t^2-1)^2", &f5()).unwrap();
        assert_eq!(p3.x().unwrap().den(), b3.num());
        assert_eq!(e.add(&p, &e.neg(&p).unwrap()).unwrap(), Point::Infinity);
        assert_eq!(e.mul(0, &p).unwrap(), Point::Infinity);
        assert_eq!(e.mul(-3, &p).unwrap(), e.neg(&p3).unwrap());
        assert_eq!(e.add(&p2, &p).unwrap(), p3);
        assert!(e.contains(&p3));
    }

    #[test]
    fn off_curve_rejected() {
        let f = f5();
        let e = ex52();
        let bogus = Point::affine(RatFunc::t(&f), RatFunc::t(&f));
        assert_eq!(e.add(&bogus, &Point::Infinity), Err(Error::OffCurve));
    }
}
