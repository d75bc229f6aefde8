use crate::algebra::{Field, RatFunc};
use crate::error::{Error, Result};
use crate::identities::forms::BinaryForm;

/// A binary cubic form `F(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCubic {
    form: BinaryForm,
}

impl BinaryCubic {
    /// `c0 X^3 + c1 X^2 Y + c2 X Y^2 + c3 Y^3`.
    pub fn new(c: [RatFunc; 4]) -> Result<BinaryCubic> {
        let field = c[0].field().clone();
        BinaryCubic::from_form(BinaryForm::new(&field, c.to_vec()))
    }

    pub fn from_form(form: BinaryForm) -> Result<BinaryCubic> {
        if form.degree() != 3 {
            return Err(Error::Precondition(format!(
                "binary cubic needs degree 3, got {}",
                form.degree()
            )));
        }
        if form.is_zero() {
            return Err(Error::ZeroInput("binary cubic"));
        }
        Ok(BinaryCubic { form })
    }

    /// The Klein form `K_2 = 4(X^3 + a X Y^2 + b Y^3)`.
    pub fn klein(a: &RatFunc, b: &RatFunc) -> BinaryCubic {
        let f = a.field();
        let four = RatFunc::from_i64(f, 4);
        BinaryCubic::new([four.clone(), RatFunc::zero(f), &four * a, &four * b]).unwrap()
    }

    pub fn form(&self) -> &BinaryForm {
        &self.form
    }

    pub fn field(&self) -> &Field {
        self.form.coeffs()[0].field()
    }

    pub fn eval(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        self.form.eval(x, y)
    }
}

/// `H`, `G` and the discriminant defined by the syzygy `G^2 + 4 H^3 = -27 discF F^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantPair {
    pub h: BinaryForm,
    pub g: BinaryForm,
    pub disc_f: RatFunc,
}

impl CovariantPair {
    /// `G^2 + 4 H^3 + 27 discF F^2`, which must vanish.
    pub fn syzygy_residual(&self, f: &BinaryCubic) -> BinaryForm {
        let field = f.field();
        let k = |c: i64| RatFunc::from_i64(field, c);
        let g2 = self.g.mul(&self.g);
        let h3 = self.h.mul(&self.h).mul(&self.h);
        let f2 = f.form.mul(&f.form);
        g2.add(&h3.scale(&k(4)))
            .add(&f2.scale(&(&k(27) * &self.disc_f)))
    }

    pub fn syzygy_holds(&self, f: &BinaryCubic) -> bool {
        self.syzygy_residual(f).is_zero()
    }
}

/// `H = det(Hessian) / 4`, `G = det(Jacobian(F, H))`.
pub fn covariants(f: &BinaryCubic) -> Result<CovariantPair> {
    let field = f.field();
    let p = field.characteristic();
    if p == 2 || p == 3 {
        return Err(Error::SmallCharacteristic(p));
    }
    let k = |c: i64| RatFunc::from_i64(field, c);
    let fx = f.form.dx();
    let fy = f.form.dy();
    let hess = fx.dx().mul(&fy.dy()).sub(&fx.dy().mul(&fx.dy()));
    let h = hess.scale(&(&k(1) / &k(4)));
    let g = fx.mul(&h.dy()).sub(&fy.mul(&h.dx()));
    let lhs = g.mul(&g).add(&h.mul(&h).mul(&h).scale(&k(4)));
    let f2 = f.form.mul(&f.form);
    let ratio = lhs
        .ratio(&f2)
        .ok_or_else(|| Error::Internal("G^2 + 4H^3 is not a multiple of F^2".into()))?;
    let disc_f = &ratio / &k(-27);
    Ok(CovariantPair { h, g, disc_f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_ratfunc;

    #[test]
    fn fermat_cubic() {
        let f = Field::prime(7).unwrap();
        let k = |c| RatFunc::from_i64(&f, c);
        let cubic = BinaryCubic::new([k(1), k(0), k(0), k(1)]).unwrap();
        let cov = covariants(&cubic).unwrap();
        assert_eq!(cov.h.coeffs(), &[k(0), k(9), k(0)]);
        assert_eq!(cov.disc_f, k(-27));
        assert!(cov.syzygy_holds(&cubic));
    }

    #[test]
    fn klein_form_constant() {
        let f = Field::prime(5).unwrap();
        let a = parse_ratfunc("t^2+1", &f).unwrap();
        let b = parse_ratfunc("t/(t+2)", &f).unwrap();
        let cov = covariants(&BinaryCubic::klein(&a, &b)).unwrap();
        let e = crate::curve::Curve::short(a, b).unwrap();
        assert_eq!(&cov.disc_f / e.discriminant(), RatFunc::from_i64(&f, 16));
    }

    #[test]
    fn rejects_wrong_degree() {
        let f = Field::prime(5).unwrap();
        let t = RatFunc::t(&f);
        assert!(BinaryForm::from_terms(&f, &[(3, 0, t.clone()), (1, 1, t)]).is_err());
        let small = Field::prime(3).unwrap();
        let one = RatFunc::one(&small);
        let c = BinaryCubic::new([one.clone(), one.clone(), one.clone(), one]).unwrap();
        assert_eq!(covariants(&c), Err(Error::SmallCharacteristic(3)));
    }
}
