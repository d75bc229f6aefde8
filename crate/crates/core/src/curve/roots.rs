use crate::algebra::{exact_sqrt, factor, fq_sqrt, Poly, RatFunc};
use crate::curve::division::short_division_values;
use crate::curve::{to_short_form, Curve, Point};
use crate::error::{Error, Result};

/// Distinct roots in `F_q(t)` of `sum c_i X^i` (coefficients ascending).
///
/// Denominators and content are cleared and `Y = L X` (with `L` the leading
/// coefficient) turns the equation monic, so every root `Y` is a polynomial
/// dividing the constant term. At each prime `pi` of the constant term the
/// Newton polygon limits `ord_pi(Y)`, and the polygon at infinity bounds
/// `deg Y`; the surviving candidates are tested directly.
pub fn rational_roots(coeffs: &[RatFunc]) -> Result<Vec<RatFunc>> {
    let mut c: Vec<RatFunc> = coeffs.to_vec();
    while c.last().is_some_and(RatFunc::is_zero) {
        c.pop();
    }
    if c.len() < 2 {
        return Err(Error::ConstantInput("root finding needs degree >= 1"));
    }
    let field = c[0].field().clone();
    let den = c.iter().fold(Poly::one(&field), |acc, x| acc.lcm(x.den()));
    let mut polys: Vec<Poly> = c
        .iter()
        .map(|x| x.num() * &den.div_exact(x.den()).expect("lcm"))
        .collect();
    let mut roots = Vec::new();
    if polys[0].is_zero() {
        roots.push(RatFunc::zero(&field));
        let lead = polys.iter().position(|p| !p.is_zero()).unwrap();
        polys.drain(..lead);
        if polys.len() < 2 {
            return Ok(roots);
        }
    }
    let content = polys.iter().fold(Poly::zero(&field), |g, p| g.gcd(p));
    let polys: Vec<Poly> = polys
        .iter()
        .map(|p| p.div_exact(&content).expect("content"))
        .collect();
    let d = polys.len() - 1;
    let lead = polys[d].clone();
    // g_i = P_i L^{d-1-i}, monic in Y
    let mut g: Vec<Poly> = Vec::with_capacity(d + 1);
    let mut lpow = Poly::one(&field);
    for i in (0..d).rev() {
        g.push(&polys[i] * &lpow);
        lpow = &lpow * &lead;
    }
    g.reverse();
    g.push(Poly::one(&field));

    let deg_bound = (0..d)
        .filter(|&i| !g[i].is_zero())
        .map(|i| g[i].deg_i64() as usize / (d - i))
        .max()
        .unwrap_or(0);
    let mut primes: Vec<Poly> = Vec::new();
    for f in [&polys[0], &lead] {
        if !f.is_constant() {
            primes.extend(factor(f)?.factors.into_iter().map(|(pi, _)| pi));
        }
    }
    primes.sort();
    primes.dedup();
    let mut choices: Vec<(Poly, Vec<u64>)> = Vec::new();
    for pi in primes {
        let ords: Vec<Option<u64>> = g.iter().map(|x| (!x.is_zero()).then(|| x.ord(&pi))).collect();
        let top = ords[0].unwrap();
        let valid: Vec<u64> = (0..=top)
            .filter(|&s| {
                let vals: Vec<u64> = ords
                    .iter()
                    .enumerate()
                    .filter_map(|(i, o)| o.map(|o| o + i as u64 * s))
                    .collect();
                let m = *vals.iter().min().unwrap();
                vals.iter().filter(|&&v| v == m).count() >= 2
            })
            .collect();
        choices.push((pi, valid));
    }
    let mut candidates = vec![Poly::one(&field)];
    for (pi, valid) in &choices {
        let mut next = Vec::new();
        for y in &candidates {
            for &s in valid {
                let z = y * &pi.pow(s);
                if z.deg_i64() as usize <= deg_bound {
                    next.push(z);
                }
            }
        }
        candidates = next;
    }
    for y in &candidates {
        for u in field.units() {
            let yu = y.scale(u);
            let val = g.iter().rev().fold(Poly::zero(&field), |acc, c| &(&acc * &yu) + c);
            if val.is_zero() {
                roots.push(RatFunc::new(yu, lead.clone())?);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// `x`-coordinates of the nonzero 2-torsion points of `y^2 = x^3 + a2 x^2 + a4 x + a6`.
pub fn two_torsion_x(e: &Curve) -> Result<Vec<RatFunc>> {
    if !e.has_cubic_form() {
        return Err(Error::Precondition("two_torsion_x needs a1 = a3 = 0".into()));
    }
    let one = RatFunc::one(e.field());
    rational_roots(&[e.a6().clone(), e.a4().clone(), e.a2().clone(), one])
}

/// Square root in `F_q(t)`, if one exists.
pub fn sqrt_ratfunc(x: &RatFunc) -> Result<Option<RatFunc>> {
    let field = x.field();
    if x.is_zero() {
        return Ok(Some(x.clone()));
    }
    let Some((n, u)) = exact_sqrt(x.num())? else {
        return Ok(None);
    };
    let Some((d, _)) = exact_sqrt(x.den())? else {
        return Ok(None);
    };
    let Some(r) = fq_sqrt(&field.elem(u)) else {
        return Ok(None);
    };
    Ok(Some(RatFunc::new(n.scale(r.rep()), d)?))
}

/// All `Q` in `E(K)` with `2Q = P`.
pub fn halve_point(e: &Curve, p: &Point) -> Result<Vec<Point>> {
    let Point::Affine { .. } = p else {
        return Err(Error::Precondition("cannot halve the identity".into()));
    };
    let sf = to_short_form(e)?;
    let target = sf.to_short(p)?;
    let xp = target.x().unwrap();
    let (a, b) = (sf.a(), sf.b());
    let f = e.field();
    let k = |c: i64| RatFunc::from_i64(f, c);
    // theta_2(X) - x_P psi_2^2(X)
    let quartic = [
        &(a * a) - &(&k(4) * &(b * xp)),
        -&(&(&k(8) * b) + &(&k(4) * &(a * xp))),
        &k(-2) * a,
        &k(-4) * xp,
        k(1),
    ];
    let mut out = Vec::new();
    for x in rational_roots(&quartic)? {
        let dv = short_division_values(a, b, &x);
        let Some(y) = sqrt_ratfunc(&(&dv.psi2sq / &k(4)))? else {
            continue;
        };
        for y in [y.clone(), -y] {
            let q = Point::Affine { x: x.clone(), y };
            if sf.curve().double(&q)? == target {
                out.push(sf.from_short(&q)?);
            }
        }
    }
    out.sort_by(|u, v| format!("{u:?}").cmp(&format!("{v:?}")));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::curve::base_change_curve;
    use crate::curve::Substitution;
    use crate::parser::{parse_curve, parse_point, parse_ratfunc};

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn example_two_torsion() {
        let f = f5();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let roots = two_torsion_x(&e).unwrap();
        let want: Vec<RatFunc> = ["0", "2*t", "t*(t+1)"]
            .iter()
            .map(|s| parse_ratfunc(s, &f).unwrap())
            .collect();
        let mut want = want;
        want.sort();
        assert_eq!(roots, want);
    }

    #[test]
    fn single_rational_root() {
        let f = f5();
        let e = parse_curve("0,0,0,t,0", &f).unwrap();
        assert_eq!(two_torsion_x(&e).unwrap(), vec![RatFunc::zero(&f)]);
    }

    #[test]
    fn halving_needs_the_extension() {
        let f = f5();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let p = parse_point("t;t^2", &e).unwrap();
        assert!(halve_point(&e, &p).unwrap().is_empty());
        let sub = Substitution::power(&f, 2).unwrap();
        let eb = base_change_curve(&e, &sub).unwrap();
        let pb = parse_point("t^2;t^4", &eb).unwrap();
        let halves = halve_point(&eb, &pb).unwrap();
        let xq = parse_ratfunc("t^2*(t-2)", &f).unwrap();
        assert!(halves.iter().any(|q| q.x() == Some(&xq)));
        for q in &halves {
            assert_eq!(eb.double(q).unwrap(), pb);
        }
    }

    #[test]
    fn halve_a_double() {
        let f = Field::prime(7).unwrap();
        let e = parse_curve("0,0,0,t,1", &f).unwrap();
        let q = parse_point("0;1", &e).unwrap();
        let p = e.double(&q).unwrap();
        assert!(halve_point(&e, &p).unwrap().contains(&q));
    }
}
