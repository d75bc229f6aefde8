use rand::Rng;

use crate::algebra::{exact_sqrt, fq_sqrt, Field, Poly, RatFunc};
use crate::curve::{Curve, Point};
use crate::eds::term_from_point;
use crate::error::{Error, Result};

/// Whether units `u_i` in `u_i z_i^2 = A_P - alpha_i B_P^2` are absorbed into `z_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiegelMode {
    /// Every `u_i` must be a square in `F_q`; afterwards all `u_i = 1`.
    Exact,
    /// Units are carried along as they are.
    WithUnits,
}

/// `z_i` with `u_i z_i^2 = A_P - alpha_i B_P^2`, and `Z_+`, `Z_-` for `(i, j, k) = (1, 2, 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiegelData {
    pub alphas: [Poly; 3],
    pub z: [Poly; 3],
    pub units: [u32; 3],
    pub a_p: Poly,
    pub b_p: Poly,
    pub x: RatFunc,
    pub z_plus: Option<RatFunc>,
    pub z_minus: Option<RatFunc>,
}

fn poly_of(x: &RatFunc, what: &str) -> Result<Poly> {
    x.as_poly()
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("{what} must be a polynomial")))
}

/// Checks that `E` reads `y^2 = (x - alpha_1)(x - alpha_2)(x - alpha_3)`.
fn check_split(e: &Curve, alphas: &[RatFunc; 3]) -> Result<()> {
    if !e.has_cubic_form() {
        return Err(Error::Precondition("curve must have a1 = a3 = 0".into()));
    }
    let [a1, a2, a3] = alphas;
    let s1 = &(a1 + a2) + a3;
    let s2 = &(&(a1 * a2) + &(a1 * a3)) + &(a2 * a3);
    let s3 = &(a1 * a2) * a3;
    if e.a2() != &-s1 || e.a4() != &s2 || e.a6() != &-s3 {
        return Err(Error::Precondition(
            "alphas are not the roots of the 2-division cubic".into(),
        ));
    }
    Ok(())
}

pub fn siegel_z(e: &Curve, p: &Point, alphas: &[RatFunc; 3], mode: SiegelMode) -> Result<SiegelData> {
    check_split(e, alphas)?;
    if !e.contains(p) {
        return Err(Error::OffCurve);
    }
    let x = p
        .x()
        .ok_or_else(|| Error::Precondition("P must be affine".into()))?
        .clone();
    let term = term_from_point(1, p)?;
    let c = term.coords.unwrap();
    let (a_p, b_p) = (c.a, c.b);
    let field = e.field().clone();
    let al = [
        poly_of(&alphas[0], "alpha_1")?,
        poly_of(&alphas[1], "alpha_2")?,
        poly_of(&alphas[2], "alpha_3")?,
    ];
    let b2 = &b_p * &b_p;
    let mut z = Vec::with_capacity(3);
    let mut units = [1u32; 3];
    for i in 0..3 {
        let w = &a_p - &(&al[i] * &b2);
        if w.is_zero() {
            return Err(Error::Precondition(format!(
                "A_P - alpha_{} B_P^2 = 0: P is a 2-torsion point",
                i + 1
            )));
        }
        let (r, u) = exact_sqrt(&w)?.ok_or_else(|| {
            Error::NotSquare(format!("A_P - alpha_{} B_P^2 = {w} is not a unit times a square", i + 1))
        })?;
        match mode {
            SiegelMode::WithUnits => {
                units[i] = u;
                z.push(r);
            }
            SiegelMode::Exact => {
                let s = fq_sqrt(&field.elem(u)).ok_or_else(|| {
                    Error::NotSquare(format!(
                        "unit {u} of alpha_{} is not a square in F_q; an extension is needed",
                        i + 1
                    ))
                })?;
                z.push(r.scale(s.rep()));
            }
        }
    }
    let z: [Poly; 3] = z.try_into().unwrap();
    let mut data = SiegelData {
        alphas: al,
        z,
        units,
        a_p,
        b_p,
        x,
        z_plus: None,
        z_minus: None,
    };
    if !data.bb_holds() {
        return Err(Error::Internal("Siegel difference identity failed".into()));
    }
    if data.is_exact() {
        data.z_plus = Some(data.z_delta(0, 1, 2, true)?);
        data.z_minus = Some(data.z_delta(0, 1, 2, false)?);
    }
    Ok(data)
}

impl SiegelData {
    pub fn field(&self) -> &Field {
        self.a_p.field()
    }

    pub fn is_exact(&self) -> bool {
        self.units == [1, 1, 1]
    }

    /// `u_i z_i^2 - u_j z_j^2 = (alpha_j - alpha_i) B_P^2` for all pairs; with unit
    /// `u_i` this is literally `(z_i + z_j)(z_i - z_j)`.
    pub fn bb_holds(&self) -> bool {
        let b2 = &self.b_p * &self.b_p;
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let lhs = &(&self.alphas[j] - &self.alphas[i]) * &b2;
                let rhs = if self.is_exact() {
                    &(&self.z[i] + &self.z[j]) * &(&self.z[i] - &self.z[j])
                } else {
                    let zi = (&self.z[i] * &self.z[i]).scale(self.units[i]);
                    let zj = (&self.z[j] * &self.z[j]).scale(self.units[j]);
                    &zi - &zj
                };
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// `Z = (z_i - z_j)(z_i + z_j) / ((alpha_j - alpha_i)(z_i +- z_k)^2)`.
    pub fn z_delta(&self, i: usize, j: usize, k: usize, plus: bool) -> Result<RatFunc> {
        if !self.is_exact() {
            return Err(Error::Precondition("Z needs absorbed units".into()));
        }
        let r = |p: &Poly| RatFunc::from_poly(p.clone());
        let den_k = if plus {
            &self.z[i] + &self.z[k]
        } else {
            &self.z[i] - &self.z[k]
        };
        let dk = r(&den_k);
        let diff = r(&(&self.alphas[j] - &self.alphas[i]));
        let m = r(&(&self.z[i] - &self.z[j])).try_div(&dk)?;
        let pl = r(&(&self.z[i] + &self.z[j])).try_div(&dk)?;
        (&m * &pl).try_div(&diff)
    }

    /// Runs `reconstruct_x` for every ordered triple and both signs.
    pub fn reconstruction_matches(&self) -> Result<bool> {
        let al: Vec<RatFunc> = self.alphas.iter().map(|a| RatFunc::from_poly(a.clone())).collect();
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            for plus in [true, false] {
                let z = match self.z_delta(i, j, k, plus) {
                    Ok(z) => z,
                    Err(Error::DivisionByZero) => continue,
                    Err(e) => return Err(e),
                };
                if reconstruct_x(&z, &al[i], &al[k])? != self.x {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `gcd(z_i + z_j, z_i - z_j)` has no prime outside those of `disc`.
    pub fn pairs_coprime_outside(&self, disc: &Poly) -> Result<bool> {
        for i in 0..3 {
            for j in (i + 1)..3 {
                let g = (&self.z[i] + &self.z[j]).gcd(&(&self.z[i] - &self.z[j]));
                if !super::supported_on(&g, disc)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `(2(alpha_i + alpha_k) + 1/Z + (alpha_i - alpha_k)^2 Z) / 4`.
pub fn reconstruct_x(z: &RatFunc, alpha_i: &RatFunc, alpha_k: &RatFunc) -> Result<RatFunc> {
    let f = z.field();
    let k = |c: i64| RatFunc::from_i64(f, c);
    let zi = z.inv()?;
    let d = alpha_i - alpha_k;
    let s = &(&(&k(2) * &(alpha_i + alpha_k)) + &zi) + &(&(&d * &d) * z);
    s.try_div(&k(4))
}

/// `lambda = (alpha_1 - alpha_2)/(alpha_1 - alpha_3)` and `j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)`.
pub fn lambda_j(alphas: &[RatFunc; 3]) -> Result<(RatFunc, RatFunc)> {
    let [a1, a2, a3] = alphas;
    if a1 == a2 || a1 == a3 || a2 == a3 {
        return Err(Error::SingularCurve);
    }
    let f = a1.field();
    let k = |c: i64| RatFunc::from_i64(f, c);
    let lambda = (a1 - a2).try_div(&(a1 - a3))?;
    let l2 = &lambda * &lambda;
    let q = &(&l2 - &lambda) + &k(1);
    let lm1 = &lambda - &k(1);
    let num = &k(256) * &(&(&q * &q) * &q);
    let den = &l2 * &(&lm1 * &lm1);
    Ok((lambda.clone(), num.try_div(&den)?))
}

/// Which case of the `p`-th power trichotomy applies to the ratios `(z_i +- z_j)/(z_i D z_k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SiegelCase {
    /// Some triple has both ratios outside `K^p`.
    Case1,
    /// Some triple has both ratios in `K^p`; then `lambda` and `j` are `p`-th powers.
    Case2,
    /// Mixed: each triple has one ratio inside and one outside `K^p`.
    Case3,
}

pub fn pth_power_case(e: &Curve, data: &SiegelData) -> Result<SiegelCase> {
    if !data.is_exact() {
        return Err(Error::Precondition("case analysis needs absorbed units".into()));
    }
    let r = |p: &Poly| RatFunc::from_poly(p.clone());
    let z = &data.z;
    let mut case1 = false;
    let mut case2 = false;
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        for delta_plus in [true, false] {
            let den = if delta_plus { &z[i] + &z[k] } else { &z[i] - &z[k] };
            if den.is_zero() {
                continue;
            }
            let plus = r(&(&z[i] + &z[j])).try_div(&r(&den))?.is_pth_power();
            let minus = r(&(&z[i] - &z[j])).try_div(&r(&den))?.is_pth_power();
            case1 |= !plus && !minus;
            case2 |= plus && minus;
        }
    }
    if case2 {
        let al = data.alphas.clone().map(RatFunc::from_poly);
        let (lambda, j) = lambda_j(&al)?;
        if !lambda.is_pth_power() || !j.is_pth_power() || !e.j_invariant().is_pth_power() {
            return Err(Error::Internal(
                "p-th power ratios without lambda, j in K^p".into(),
            ));
        }
    }
    Ok(if case1 {
        SiegelCase::Case1
    } else if case2 {
        SiegelCase::Case2
    } else {
        SiegelCase::Case3
    })
}

/// A curve with rational 2-torsion, a point `Q` and `P = 2Q`.
#[derive(Clone, Debug)]
pub struct SplitSample {
    pub curve: Curve,
    pub alphas: [RatFunc; 3],
    pub q: Point,
    pub p: Point,
}

/// Random `y^2 = prod (x - alpha_i)` with `alpha_i = x_0 - u_i^2` and `Q = (x_0, u_1 u_2 u_3)`.
///
/// With `short`, `x_0 = (u_1^2 + u_2^2 + u_3^2)/3` so that the alphas sum to zero.
pub fn split_torsion_sample<R: Rng>(field: &Field, rng: &mut R, deg: usize, short: bool) -> Result<SplitSample> {
    let rand_poly = |rng: &mut R| {
        let d = rng.gen_range(0..=deg);
        let c: Vec<u32> = (0..=d).map(|_| rng.gen_range(0..field.order())).collect();
        Poly::new(field, c)
    };
    for _ in 0..1000 {
        let u: Vec<Poly> = (0..3).map(|_| rand_poly(rng)).collect();
        let sq: Vec<Poly> = u.iter().map(|v| v * v).collect();
        let x0 = if short {
            let third = field.inv(field.from_i64(3)).unwrap();
            (&(&sq[0] + &sq[1]) + &sq[2]).scale(third)
        } else {
            rand_poly(rng)
        };
        let alphas: Vec<RatFunc> = sq.iter().map(|s| RatFunc::from_poly(&x0 - s)).collect();
        let [a1, a2, a3]: [RatFunc; 3] = alphas.try_into().unwrap();
        if a1 == a2 || a1 == a3 || a2 == a3 || u.iter().any(Poly::is_zero) {
            continue;
        }
        if [&a1, &a2, &a3].iter().all(|a| a.is_constant()) {
            continue;
        }
        let s1 = &(&a1 + &a2) + &a3;
        let s2 = &(&(&a1 * &a2) + &(&a1 * &a3)) + &(&a2 * &a3);
        let s3 = &(&a1 * &a2) * &a3;
        let zero = RatFunc::zero(field);
        let Ok(curve) = Curve::new(zero.clone(), -s1, zero, s2, -s3) else {
            continue;
        };
        let y = &(&u[0] * &u[1]) * &u[2];
        let q = curve.point(RatFunc::from_poly(x0), RatFunc::from_poly(y))?;
        let p = curve.double(&q)?;
        if p.is_infinity() || curve.double(&p)?.is_infinity() {
            continue;
        }
        return Ok(SplitSample {
            curve,
            alphas: [a1, a2, a3],
            q,
            p,
        });
    }
    Err(Error::Internal("could not draw a split-torsion sample".into()))
}
