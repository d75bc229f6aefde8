use crate::algebra::RatFunc;
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};

/// `y^2 = x^3 + a x + b` together with the change of variables from its parent.
///
/// With `u = 6`: `x' = 36 x + 3 b2`, `y' = 108 (2 y + a1 x + a3)`, so that
/// `a = -27 c4`, `b = -54 c6` and `Delta' = 6^12 Delta`.
#[derive(Clone, Debug)]
pub struct ShortForm {
    parent: Curve,
    short: Curve,
}

pub fn to_short_form(e: &Curve) -> Result<ShortForm> {
    let p = e.field().characteristic();
    if p < 5 {
        return Err(Error::SmallCharacteristic(p));
    }
    let f = e.field();
    let k = |c: i64| RatFunc::from_i64(f, c);
    let short = Curve::short(&k(-27) * e.c4(), &k(-54) * e.c6())?;
    if short.j_invariant() != e.j_invariant() {
        return Err(Error::Internal("short form changed j".into()));
    }
    if short.discriminant() != &(&k(6).pow(12)? * e.discriminant()) {
        return Err(Error::Internal("short form discriminant is not 6^12 Delta".into()));
    }
    Ok(ShortForm {
        parent: e.clone(),
        short,
    })
}

impl ShortForm {
    pub fn a(&self) -> &RatFunc {
        self.short.a4()
    }

    pub fn b(&self) -> &RatFunc {
        self.short.a6()
    }

    pub fn curve(&self) -> &Curve {
        &self.short
    }

    pub fn parent(&self) -> &Curve {
        &self.parent
    }

    /// Maps a point of the parent curve to the short model.
    pub fn to_short(&self, p: &Point) -> Result<Point> {
        if !self.parent.contains(p) {
            return Err(Error::OffCurve);
        }
        Ok(match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let f = self.parent.field();
                let k = |c: i64| RatFunc::from_i64(f, c);
                let e = &self.parent;
                let xs = &(&k(36) * x) + &(&k(3) * e.b2());
                let ys = &k(108) * &(&(&(&k(2) * y) + &(e.a1() * x)) + e.a3());
                Point::Affine { x: xs, y: ys }
            }
        })
    }

    /// Maps a point of the short model back to the parent curve.
    pub fn from_short(&self, p: &Point) -> Result<Point> {
        if !self.short.contains(p) {
            return Err(Error::OffCurve);
        }
        Ok(match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => {
                let f = self.parent.field();
                let k = |c: i64| RatFunc::from_i64(f, c);
                let e = &self.parent;
                let xp = &(x - &(&k(3) * e.b2())) / &k(36);
                let yp = &(&(&(y / &k(108)) - &(e.a1() * &xp)) - e.a3()) / &k(2);
                Point::Affine { x: xp, y: yp }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parser::{parse_curve, parse_point};

    #[test]
    fn remark_curve_keeps_j() {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("1,0,0,0,-t^2", &f).unwrap();
        let sf = to_short_form(&e).unwrap();
        assert!(sf.curve().is_short());
        assert_eq!(sf.curve().j_invariant(), e.j_invariant());
        let p = parse_point("0;2*t", &e).unwrap();
        let q = sf.to_short(&p).unwrap();
        assert_eq!(sf.from_short(&q).unwrap(), p);
        let p3 = e.mul(3, &p).unwrap();
        assert_eq!(sf.to_short(&p3).unwrap(), sf.curve().mul(3, &q).unwrap());
    }

    #[test]
    fn small_characteristic_rejected() {
        let f = Field::prime(3).unwrap();
        let e = parse_curve("0,0,0,1,t", &f).unwrap();
        assert_eq!(to_short_form(&e).unwrap_err(), Error::SmallCharacteristic(3));
    }
}
