use crate::algebra::{Field, RatFunc};
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};

/// The substitution `t -> r(u)`; the new variable is printed as `t` again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    image: RatFunc,
}

impl Substitution {
    pub fn new(image: RatFunc) -> Result<Substitution> {
        if image.is_constant() {
            return Err(Error::ConstantInput("substitution by a constant"));
        }
        Ok(Substitution { image })
    }

    /// `t -> u^e`.
    pub fn power(field: &Field, e: usize) -> Result<Substitution> {
        if e == 0 {
            return Err(Error::ConstantInput("substitution t = u^0"));
        }
        Substitution::new(RatFunc::t(field).compose_power(e))
    }

    pub fn image(&self) -> &RatFunc {
        &self.image
    }
}

pub fn base_change_ratfunc(x: &RatFunc, sub: &Substitution) -> Result<RatFunc> {
    x.substitute(&sub.image)
}

pub fn base_change_curve(e: &Curve, sub: &Substitution) -> Result<Curve> {
    let mut c = e.coefficients().clone();
    for a in c.iter_mut() {
        *a = base_change_ratfunc(a, sub)?;
    }
    Curve::from_coefficients(c)
}

pub fn base_change_point(p: &Point, sub: &Substitution) -> Result<Point> {
    Ok(match p {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => Point::Affine {
            x: base_change_ratfunc(x, sub)?,
            y: base_change_ratfunc(y, sub)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_curve, parse_point, parse_ratfunc};

    #[test]
    fn heights_scale() {
        let f = Field::prime(5).unwrap();
        let sub = Substitution::power(&f, 2).unwrap();
        let t = RatFunc::t(&f);
        assert_eq!(base_change_ratfunc(&t, &sub).unwrap().height().unwrap(), 2);
        let x = parse_ratfunc("(t^3+1)/(t-2)", &f).unwrap();
        let y = base_change_ratfunc(&x, &Substitution::power(&f, 3).unwrap()).unwrap();
        assert_eq!(y.height().unwrap(), 9);
    }

    #[test]
    fn discriminant_commutes() {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let sub = Substitution::power(&f, 2).unwrap();
        let eb = base_change_curve(&e, &sub).unwrap();
        assert_eq!(
            eb.discriminant(),
            &base_change_ratfunc(e.discriminant(), &sub).unwrap()
        );
        let p = parse_point("t;t^2", &e).unwrap();
        assert!(eb.contains(&base_change_point(&p, &sub).unwrap()));
        assert!(Substitution::new(RatFunc::one(&f)).is_err());
    }
}
