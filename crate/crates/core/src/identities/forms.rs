use std::fmt;

use crate::algebra::{Field, RatFunc};
use crate::error::{Error, Result};

/// A binary form `sum c_i X^{d-i} Y^i` over `F_q(t)`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    field: Field,
    coeffs: Vec<RatFunc>,
}

impl BinaryForm {
    /// Coefficients in the order `X^d, X^{d-1} Y, ..., Y^d`.
    pub fn new(field: &Field, coeffs: Vec<RatFunc>) -> BinaryForm {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds a form from `(i, j, c)` terms `c X^i Y^j`, rejecting mixed degrees.
    pub fn from_terms(field: &Field, terms: &[(usize, usize, RatFunc)]) -> Result<BinaryForm> {
        let d = match terms.first() {
            Some((i, j, _)) => i + j,
            None => return Err(Error::ZeroInput("empty binary form")),
        };
        let mut coeffs = vec![RatFunc::zero(field); d + 1];
        for (i, j, c) in terms {
            if i + j != d {
                return Err(Error::Precondition(format!(
                    "non-homogeneous form: term X^{i} Y^{j} in a form of degree {d}"
                )));
            }
            coeffs[*j] = &coeffs[*j] + c;
        }
        Ok(BinaryForm::new(field, coeffs))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    fn k(&self, c: i64) -> RatFunc {
        RatFunc::from_i64(&self.field, c)
    }

    pub fn add(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), o.degree());
        let c = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        BinaryForm::new(&self.field, c)
    }

    pub fn sub(&self, o: &BinaryForm) -> BinaryForm {
        self.add(&o.scale(&self.k(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> BinaryForm {
        BinaryForm::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        let mut c = vec![RatFunc::zero(&self.field); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        BinaryForm::new(&self.field, c)
    }

    /// `d/dX`.
    pub fn dx(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::new(&self.field, vec![RatFunc::zero(&self.field)]);
        }
        let c = (0..d).map(|i| &self.k((d - i) as i64) * &self.coeffs[i]).collect();
        BinaryForm::new(&self.field, c)
    }

    /// `d/dY`.
    pub fn dy(&self) -> BinaryForm {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::new(&self.field, vec![RatFunc::zero(&self.field)]);
        }
        let c = (1..=d).map(|i| &self.k(i as i64) * &self.coeffs[i]).collect();
        BinaryForm::new(&self.field, c)
    }

    pub fn eval(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        let d = self.degree();
        let mut xp = vec![RatFunc::one(&self.field)];
        let mut yp = vec![RatFunc::one(&self.field)];
        for i in 1..=d {
            xp.push(&xp[i - 1] * x);
            yp.push(&yp[i - 1] * y);
        }
        self.coeffs
            .iter()
            .enumerate()
            .fold(RatFunc::zero(&self.field), |acc, (i, c)| {
                &acc + &(c * &(&xp[d - i] * &yp[i]))
            })
    }

    /// `self = c * o` for a scalar `c`, if such a scalar exists.
    pub fn ratio(&self, o: &BinaryForm) -> Option<RatFunc> {
        if self.degree() != o.degree() {
            return None;
        }
        let i = o.coeffs.iter().position(|c| !c.is_zero())?;
        let c = &self.coeffs[i] / &o.coeffs[i];
        (o.scale(&c) == *self).then_some(c)
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c}) X^{} Y^{i}", d - i))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
