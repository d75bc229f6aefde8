use crate::algebra::{Poly, RatFunc};
use crate::curve::{Curve, Point};
use crate::eds::term_from_point;
use crate::error::{Error, Result};
use crate::identities::covariants::{covariants, BinaryCubic};

/// Ingredients of the ternary equation attached to `P = 2Q` on a short model.
///
/// `X = G(A_Q, B_Q^2)`, `Y = H(A_Q, B_Q^2)`, `F = K_2(A_Q, B_Q^2)` and
/// `F = bp_part^2 * delta` with `bp_part = B_P / B_Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryWitness {
    pub a_q: Poly,
    pub b_q: Poly,
    pub x: Poly,
    pub y: Poly,
    pub fval: Poly,
    pub disc_f: RatFunc,
    pub bp_part: Poly,
    pub delta: Poly,
}

fn to_poly(x: RatFunc, what: &str) -> Result<Poly> {
    x.as_poly()
        .cloned()
        .ok_or_else(|| Error::Internal(format!("{what} is not a polynomial")))
}

pub fn ternary_witness(e: &Curve, q: &Point) -> Result<TernaryWitness> {
    if !e.is_short() {
        return Err(Error::Precondition("ternary witness needs y^2 = x^3 + ax + b".into()));
    }
    if !e.is_integral() {
        return Err(Error::NonIntegralModel("coefficients must lie in F_q[t]".into()));
    }
    let p = e.double(q)?;
    if p.is_infinity() {
        return Err(Error::Precondition("2Q = O".into()));
    }
    let f = e.field();
    let k = |c: i64| RatFunc::from_i64(f, c);
    let cq = term_from_point(1, q)?.coords.unwrap();
    let cp = term_from_point(2, &p)?.coords.unwrap();
    let cubic = BinaryCubic::klein(e.a4(), e.a6());
    let cov = covariants(&cubic)?;
    let a = RatFunc::from_poly(cq.a.clone());
    let b2 = RatFunc::from_poly(&cq.b * &cq.b);
    let x = to_poly(cov.g.eval(&a, &b2), "G(A, B^2)")?;
    let y = to_poly(cov.h.eval(&a, &b2), "H(A, B^2)")?;
    let fval = to_poly(cubic.eval(&a, &b2), "K2(A, B^2)")?;
    let xq = q.x().unwrap();
    let psi2sq = &k(4) * &(&(&(&(xq * xq) * xq) + &(e.a4() * xq)) + e.a6());
    let b6 = b2.pow(3)?;
    if RatFunc::from_poly(fval.clone()) != &psi2sq * &b6 {
        return Err(Error::Internal("K2(A, B^2) differs from psi_2^2 B^6".into()));
    }
    let lhs = RatFunc::from_poly(&(&x * &x) + &(&(&y * &y) * &y).scale(f.from_i64(4)));
    let rhs = &(&k(-27) * &cov.disc_f) * &RatFunc::from_poly(&fval * &fval);
    if lhs != rhs {
        return Err(Error::Internal("syzygy instance failed".into()));
    }
    let bp_part = cp
        .b
        .div_exact(&cq.b)
        .ok_or_else(|| Error::Internal("B_Q does not divide B_P".into()))?;
    let delta = fval
        .div_exact(&(&bp_part * &bp_part))
        .ok_or_else(|| Error::Internal("(B_P/B_Q)^2 does not divide K2(A, B^2)".into()))?;
    let disc = to_poly(e.discriminant().clone(), "discriminant")?;
    if !super::supported_on(&delta, &disc)? {
        return Err(Error::Internal(
            "delta has a prime outside the discriminant".into(),
        ));
    }
    Ok(TernaryWitness {
        a_q: cq.a,
        b_q: cq.b,
        x,
        y,
        fval,
        disc_f: cov.disc_f,
        bp_part,
        delta,
    })
}

impl TernaryWitness {
    /// Pairwise gcds of `(X, Y, F)` only involve primes of `disc`.
    pub fn gcds_supported_on(&self, disc: &Poly) -> Result<bool> {
        for (u, v) in [(&self.x, &self.y), (&self.x, &self.fval), (&self.y, &self.fval)] {
            if !super::supported_on(&u.gcd(v), disc)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The remaining normalization, which needs a field extension and is not performed.
    pub fn normalization(&self) -> String {
        format!(
            "a = -delta/(27 u^4 Delta_E), b = -4 delta/(27 u^4 Delta_E) with delta = {}",
            self.delta
        )
    }
}
