use crate::algebra::RatFunc;
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};

/// Largest `s` with `j` a `p^s`-th power in `F_q(t)`.
pub fn frobenius_power_s(j: &RatFunc) -> Result<u32> {
    if j.is_constant() {
        return Err(Error::Isotrivial);
    }
    let mut s = 0;
    let mut cur = j.clone();
    while let Some(r) = cur.pth_root() {
        cur = r;
        s += 1;
    }
    Ok(s)
}

/// Finds `E'` whose `p^s`-Frobenius image is `E`, with `s` maximal for `j_E`.
pub fn frobenius_descend(e: &Curve) -> Result<(Curve, u32)> {
    let s = frobenius_power_s(e.j_invariant())?;
    if s == 0 {
        return Err(Error::Precondition("j is not a p-th power; nothing to descend".into()));
    }
    let mut coeffs = e.coefficients().clone();
    for _ in 0..s {
        for c in coeffs.iter_mut() {
            *c = c.pth_root().ok_or_else(|| {
                Error::DescentImpossible(format!("coefficient {c} is not a p^{s}-th power"))
            })?;
        }
    }
    let ed = Curve::from_coefficients(coeffs)?;
    if &ed.j_invariant().frobenius_iter(s) != e.j_invariant() {
        return Err(Error::Internal("descended j does not map to j".into()));
    }
    Ok((ed, s))
}

/// The curve whose coefficients are the `p^s`-th powers of those of `e`.
pub fn frobenius_curve(e: &Curve, s: u32) -> Result<Curve> {
    let c = e.coefficients().clone().map(|c| c.frobenius_iter(s));
    Curve::from_coefficients(c)
}

/// `(x, y) -> (x^{p^s}, y^{p^s})`.
pub fn frobenius_map(p: &Point, s: u32) -> Point {
    match p {
        Point::Infinity => Point::Infinity,
        Point::Affine { x, y } => Point::Affine {
            x: x.frobenius_iter(s),
            y: y.frobenius_iter(s),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parser::{parse_curve, parse_point, parse_ratfunc};

    #[test]
    fn power_s_values() {
        let f = Field::prime(5).unwrap();
        let j = parse_ratfunc("(t+1)^5", &f).unwrap();
        assert_eq!(frobenius_power_s(&j).unwrap(), 1);
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        assert_eq!(frobenius_power_s(e.j_invariant()).unwrap(), 0);
        assert_eq!(frobenius_power_s(&RatFunc::t(&f)).unwrap(), 0);
        assert_eq!(frobenius_power_s(&RatFunc::from_i64(&f, 3)), Err(Error::Isotrivial));
    }

    #[test]
    fn descend_frobenius_twist() {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("0,0,0,t^5,(t+1)^5", &f).unwrap();
        let (ed, s) = frobenius_descend(&e).unwrap();
        assert_eq!(s, 1);
        assert_eq!(ed, parse_curve("0,0,0,t,t+1", &f).unwrap());
        let q = parse_point("0;0", &parse_curve("0,0,0,t,0", &f).unwrap());
        assert!(q.is_ok());
        let e0 = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        assert!(matches!(frobenius_descend(&e0), Err(Error::Precondition(_))));
    }

    #[test]
    fn map_lands_on_image() {
        let f = Field::prime(5).unwrap();
        let ed = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let e = frobenius_curve(&ed, 1).unwrap();
        let q = parse_point("t;t^2", &ed).unwrap();
        let q3 = ed.mul(3, &q).unwrap();
        let img = frobenius_map(&q3, 1);
        assert!(e.contains(&img));
        assert_eq!(img.x().unwrap(), &q3.x().unwrap().frobenius());
        assert_eq!(e.mul(3, &frobenius_map(&q, 1)).unwrap(), img);
    }
}
