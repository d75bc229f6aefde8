#![allow(dead_code)]

use edsfq::algebra::{Field, Poly, RatFunc};
use edsfq::curve::{Curve, Point};
use edsfq::parser::{parse_curve, parse_point};
use rand::Rng;

pub const EXAMPLE_CURVE: &str = "0,-t*(t-2),0,2*t^2*(t+1),0";

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

pub fn example() -> (Curve, Point) {
    let e = parse_curve(EXAMPLE_CURVE, &f5()).unwrap();
    let p = parse_point("t;t^2", &e).unwrap();
    (e, p)
}

/// `y^2 + xy = x^3 - t^{2d}` with `P = (0, 2 t^d)` over `F_5(t)`.
pub fn xy_family(d: u32) -> (Curve, Point) {
    let e = parse_curve(&format!("1,0,0,0,-t^{}", 2 * d), &f5()).unwrap();
    let p = parse_point(&format!("0;2*t^{d}"), &e).unwrap();
    (e, p)
}

pub fn poly(f: &Field, c: &[i64]) -> Poly {
    Poly::from_i64s(f, c)
}

pub fn random_poly<R: Rng>(f: &Field, rng: &mut R, max_deg: usize) -> Poly {
    let d = rng.gen_range(0..=max_deg);
    Poly::new(f, (0..=d).map(|_| rng.gen_range(0..f.order())).collect())
}

pub fn random_nonzero_poly<R: Rng>(f: &Field, rng: &mut R, max_deg: usize) -> Poly {
    loop {
        let p = random_poly(f, rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfunc<R: Rng>(f: &Field, rng: &mut R, max_deg: usize) -> RatFunc {
    let n = random_nonzero_poly(f, rng, max_deg);
    let d = random_nonzero_poly(f, rng, max_deg);
    RatFunc::new(n, d).unwrap()
}
