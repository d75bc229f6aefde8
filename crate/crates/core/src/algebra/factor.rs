//! Squarefree decomposition, perfect-power structure and complete
//! factorization over `F_q`.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::poly::Poly;
use crate::error::{Error, Result};

/// Seed used by the convenience entry points that do not take an RNG.
pub const DEFAULT_FACTOR_SEED: u64 = 0x5eed_f00d;

/// `unit * prod g_i^{e_i}` with monic squarefree, pairwise coprime `g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqfDecomp {
    pub unit: u32,
    pub parts: Vec<(Poly, u64)>,
}

impl SqfDecomp {
    pub fn reconstruct(&self, like: &Poly) -> Poly {
        let f = like.field();
        self.parts
            .iter()
            .fold(Poly::constant(f, self.unit), |acc, (g, e)| &acc * &g.pow(*e))
    }
}

/// Complete factorization: `unit * prod pi_i^{e_i}`, `pi_i` monic irreducible,
/// sorted by (degree, coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(Poly, u64)>,
}

impl Factorization {
    pub fn reconstruct(&self, like: &Poly) -> Poly {
        let f = like.field();
        self.factors
            .iter()
            .fold(Poly::constant(f, self.unit), |acc, (g, e)| &acc * &g.pow(*e))
    }
}

/// Squarefree decomposition, correct in characteristic `p`: when the
/// derivative step leaves a `p`-th power behind, its `p`-th root is decomposed
/// recursively and the multiplicities scaled by `p`.
pub fn squarefree_decomp(f: &Poly) -> Result<SqfDecomp> {
    if f.is_zero() {
        return Err(Error::ZeroInput("squarefree decomposition of 0"));
    }
    let (unit, monic) = f.monic_parts();
    let mut parts = Vec::new();
    sqf_monic(&monic, 1, &mut parts);
    parts.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(SqfDecomp { unit, parts })
}

fn sqf_monic(f: &Poly, scale: u64, out: &mut Vec<(Poly, u64)>) {
    if f.is_constant() {
        return;
    }
    let p = f.field().characteristic() as u64;
    let d = f.derivative();
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c).expect("gcd divides");
    let mut i = 1u64;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y).expect("gcd divides");
        if !z.is_constant() {
            out.push((z, i * scale));
        }
        i += 1;
        c = c.div_exact(&y).expect("gcd divides");
        w = y;
    }
    if !c.is_constant() {
        let root = c.pth_root().expect("remaining cofactor is a p-th power");
        sqf_monic(&root.monic(), scale * p, out);
    }
}

/// Largest `l` such that `f` is a constant times an `l`-th power.
pub fn max_power(f: &Poly) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::ZeroInput("max power of 0"));
    }
    if f.is_constant() {
        return Err(Error::ConstantInput("degree zero: treat as unit, every l divides"));
    }
    let d = squarefree_decomp(f)?;
    Ok(d.parts.iter().fold(0u64, |g, (_, e)| g.gcd(e)))
}

/// True when `f` has no repeated irreducible factor.
pub fn is_squarefree(f: &Poly) -> bool {
    if f.is_constant() {
        return !f.is_zero();
    }
    f.gcd(&f.derivative()).is_constant()
}

/// Writes `f = unit * r^2` with `r` monic, if possible.
pub fn exact_sqrt(f: &Poly) -> Result<Option<(Poly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("square root of 0"));
    }
    let field = f.field();
    let deg = f.degree().unwrap();
    if deg % 2 == 1 {
        return Ok(None);
    }
    let (unit, g) = f.monic_parts();
    if field.characteristic() == 2 {
        let d = squarefree_decomp(&g)?;
        if d.parts.iter().any(|(_, e)| e % 2 == 1) {
            return Ok(None);
        }
        let r = d
            .parts
            .iter()
            .fold(Poly::one(field), |acc, (h, e)| &acc * &h.pow(e / 2));
        return Ok(Some((r, unit)));
    }
    // top-down coefficient solve for a monic r with r^2 = g
    let m = deg / 2;
    let gc = g.coeffs();
    let inv2 = field.inv(2).expect("p odd");
    let mut r = vec![0u32; m + 1];
    r[m] = 1;
    for k in 1..=m {
        let target = 2 * m - k;
        let mut s = 0u32;
        for i in (m - k + 1)..=m {
            let j = target - i;
            if j > m - k && j <= m {
                s = field.add(s, field.mul(r[i], r[j]));
            }
        }
        r[m - k] = field.mul(field.sub(gc[target], s), inv2);
    }
    let r = Poly::new(field, r);
    if &r * &r == g {
        Ok(Some((r, unit)))
    } else {
        Ok(None)
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let q = field.order() as u64;
    let t = Poly::t(field);
    let mut out = Vec::new();
    let mut rest = f.monic();
    if rest.is_constant() {
        return out;
    }
    let mut h = t.rem(&rest).expect("nonconstant");
    let mut i = 0usize;
    while rest.degree().unwrap() >= 2 * (i + 1) {
        i += 1;
        h = h.powmod(q, &rest);
        let g = (&h - &t).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonconstant");
            out.push((g, i));
            if rest.is_constant() {
                return out;
            }
        }
    }
    if !rest.is_constant() {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

/// Equal-degree splitting of a monic squarefree product of irreducibles
/// of degree `d`.
pub fn equal_degree<R: Rng>(g: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    let n = g.degree().unwrap_or(0);
    if n <= d {
        return vec![g.clone()];
    }
    let field = g.field();
    let q = field.order() as u64;
    let p = field.characteristic() as u64;
    loop {
        let a = Poly::new(field, (0..n).map(|_| rng.gen_range(0..field.order())).collect());
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(k d - 1))
            let steps = field.degree() as usize * d;
            let mut cur = a.rem(g).unwrap();
            let mut acc = cur.clone();
            for _ in 1..steps {
                cur = (&cur * &cur).rem(g).unwrap();
                acc = &acc + &cur;
            }
            acc
        } else {
            let mut cur = a.rem(g).unwrap();
            let mut prod = cur.clone();
            for _ in 1..d {
                cur = cur.powmod(q, g);
                prod = (&prod * &cur).rem(g).unwrap();
            }
            &prod.powmod((q - 1) / 2, g) - &Poly::one(field)
        };
        let h = b.gcd(g);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let other = g.div_exact(&h).expect("gcd divides");
            let mut out = equal_degree(&h, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

/// Complete factorization using a caller-supplied RNG for equal-degree splitting.
pub fn factor_with_rng<R: Rng>(f: &Poly, rng: &mut R) -> Result<Factorization> {
    let sqf = squarefree_decomp(f)?;
    let mut factors = Vec::new();
    for (g, e) in &sqf.parts {
        for (block, d) in distinct_degree(g) {
            for pi in equal_degree(&block, d, rng) {
                factors.push((pi, *e));
            }
        }
    }
    factors.sort();
    Ok(Factorization {
        unit: sqf.unit,
        factors,
    })
}

/// Complete factorization with the default seed.
pub fn factor(f: &Poly) -> Result<Factorization> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_FACTOR_SEED);
    factor_with_rng(f, &mut rng)
}

/// Number of distinct monic irreducible factors (no equal-degree splitting needed).
pub fn count_distinct_irreducibles(f: &Poly) -> Result<usize> {
    let sqf = squarefree_decomp(f)?;
    Ok(sqf
        .parts
        .iter()
        .flat_map(|(g, _)| distinct_degree(g))
        .map(|(block, d)| block.degree().unwrap() / d)
        .sum())
}

/// Monic divisors of `f`, from its factorization.
pub fn monic_divisors(fac: &Factorization, like: &Poly) -> Vec<Poly> {
    let mut divs = vec![Poly::one(like.field())];
    for (pi, e) in &fac.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*e {
                cur = &cur * pi;
                next.push(cur.clone());
            }
        }
        divs = next;
    }
    divs
}

impl Poly {
    /// Irreducibility over `F_q`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        if !is_squarefree(self) {
            return false;
        }
        let dd = distinct_degree(&self.monic());
        dd.len() == 1 && dd[0].1 == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(&f5(), c)
    }

    #[test]
    fn sqf_constructed_input() {
        let a = p(&[1, 1]);
        let b = p(&[2, 0, 1]);
        let f = &a.pow(4) * &b.pow(2);
        let d = squarefree_decomp(&f).unwrap();
        assert_eq!(d.parts, vec![(b.clone(), 2), (a.clone(), 4)]);
        assert_eq!(d.reconstruct(&f), f);
        assert_eq!(max_power(&f).unwrap(), 2);
    }

    #[test]
    fn sqf_frobenius_power() {
        let f = p(&[1, 0, 0, 0, 0, 1]);
        let d = squarefree_decomp(&f).unwrap();
        assert_eq!(d.parts, vec![(p(&[1, 1]), 5)]);
        assert_eq!(max_power(&f).unwrap(), 5);
    }

    #[test]
    fn sqf_mixed_p_and_non_p_multiplicities() {
        let a = p(&[1, 1]);
        let b = p(&[2, 0, 1]);
        let c = p(&[0, 1]);
        let f = (&(&a.pow(7) * &b.pow(10)) * &c).scale(3);
        let d = squarefree_decomp(&f).unwrap();
        assert_eq!(d.unit, 3);
        assert_eq!(d.parts, vec![(c, 1), (a, 7), (b, 10)]);
        assert_eq!(d.reconstruct(&f), f);
    }

    #[test]
    fn simple_factors_only() {
        let f = p(&[-1, 0, 1]);
        let d = squarefree_decomp(&f).unwrap();
        assert_eq!(d.parts, vec![(f.clone(), 1)]);
        assert_eq!(max_power(&f).unwrap(), 1);
        assert!(max_power(&p(&[3])).is_err());
        assert!(squarefree_decomp(&p(&[])).is_err());
    }

    #[test]
    fn factor_examples() {
        let fac = factor(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[1, 1]), 1), (p(&[4, 1]), 1)]);
        let fac = factor(&p(&[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[2, 1]), 1), (p(&[3, 1]), 1)]);
    }

    #[test]
    fn factor_b5_into_two_cubics() {
        let c1 = p(&[-1, -2, 1, 1]);
        let c2 = p(&[1, -2, -1, 1]);
        let b5 = &c1 * &c2;
        let fac = factor(&b5).unwrap();
        let mut expected = vec![(c1, 1), (c2, 1)];
        expected.sort();
        assert_eq!(fac.factors, expected);
        assert!(fac.factors.iter().all(|(g, _)| g.is_irreducible()));
    }

    #[test]
    fn exact_sqrt_examples() {
        let r = p(&[1, 1]);
        assert_eq!(exact_sqrt(&(&r * &r).scale(4)).unwrap(), Some((r, 4)));
        assert_eq!(exact_sqrt(&p(&[0, 0, 0, 1])).unwrap(), None);
        let s = p(&[1, 0, 1]);
        assert_eq!(exact_sqrt(&(&s * &s)).unwrap(), Some((s, 1)));
        assert_eq!(exact_sqrt(&p(&[0, 0, 1, 0, 1])).unwrap(), None);
    }

    #[test]
    fn distinct_count() {
        let f = &p(&[-1, 0, 1]).pow(3) * &p(&[2, 0, 1]);
        assert_eq!(count_distinct_irreducibles(&f).unwrap(), 3);
    }

    #[test]
    fn characteristic_two_and_extension_fields() {
        let f2 = Field::prime(2).unwrap();
        let g = Poly::from_i64s(&f2, &[1, 1, 0, 1]); // t^3 + t + 1 irreducible
        let h = Poly::from_i64s(&f2, &[1, 1]);
        let f = &(&g * &h) * &Poly::from_i64s(&f2, &[0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.reconstruct(&f), f);
        assert_eq!(fac.factors.len(), 3);

        let f9 = Field::extension(3, &[1, 0, 1]).unwrap(); // F_9
        let t = Poly::t(&f9);
        // t^2 + 1 splits over F_9
        let f = &(&t * &t) + &Poly::one(&f9);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.reconstruct(&f), f);
    }
}
