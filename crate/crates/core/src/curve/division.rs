use crate::algebra::RatFunc;
use crate::curve::ShortForm;

/// `psi_2^2(x) = 4(x^3 + a x + b)` and `theta_2(x) = x^4 - 2 a x^2 - 8 b x + a^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionValues {
    pub psi2sq: RatFunc,
    pub theta2: RatFunc,
}

pub fn division_values(sf: &ShortForm, x: &RatFunc) -> DivisionValues {
    short_division_values(sf.a(), sf.b(), x)
}

pub(crate) fn short_division_values(a: &RatFunc, b: &RatFunc, x: &RatFunc) -> DivisionValues {
    let f = x.field();
    let k = |c: i64| RatFunc::from_i64(f, c);
    let x2 = x * x;
    let psi2sq = &k(4) * &(&(&(&x2 * x) + &(a * x)) + b);
    let theta2 = &(&(&(&x2 * &x2) - &(&k(2) * &(a * &x2))) - &(&k(8) * &(b * x))) + &(a * a);
    DivisionValues { psi2sq, theta2 }
}
