//! Elliptic divisibility sequences `B_n` with `x(nP) = A_n / B_n^2`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{exact_sqrt, factor, Place, PlaceSet, Poly, RatFunc};
use crate::curve::{Curve, Point};
use crate::error::{Error, Result};

/// `x(nP) = A / B^2`, `y(nP) = C / B^3` with `B` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermCoords {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
}

/// The `n`-th term; `coords` is `None` when `nP = O`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdsTerm {
    pub n: u64,
    pub coords: Option<TermCoords>,
}

impl EdsTerm {
    pub fn is_infinite(&self) -> bool {
        self.coords.is_none()
    }

    pub fn a(&self) -> Option<&Poly> {
        self.coords.as_ref().map(|c| &c.a)
    }

    pub fn b(&self) -> Option<&Poly> {
        self.coords.as_ref().map(|c| &c.b)
    }

    pub fn c(&self) -> Option<&Poly> {
        self.coords.as_ref().map(|c| &c.c)
    }

    /// `nP` as a point.
    pub fn point(&self) -> Point {
        match &self.coords {
            None => Point::Infinity,
            Some(c) => {
                let b2 = &c.b * &c.b;
                let b3 = &b2 * &c.b;
                Point::Affine {
                    x: RatFunc::new(c.a.clone(), b2).unwrap(),
                    y: RatFunc::new(c.c.clone(), b3).unwrap(),
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Strategy {
    /// `nP = (n-1)P + P` with the group law.
    IterativeAddition,
    /// Double-and-add for each `n` separately.
    Ladder,
    /// Division polynomial recurrence on an integral rescaling of the model.
    DivisionRecurrence,
}

/// Splits an affine point into `(A, B, C)`, asserting the square/cube denominator shape.
pub fn term_from_point(n: u64, p: &Point) -> Result<EdsTerm> {
    let (x, y) = match p {
        Point::Infinity => return Ok(EdsTerm { n, coords: None }),
        Point::Affine { x, y } => (x, y),
    };
    let b = match exact_sqrt(x.den())? {
        Some((b, 1)) => b,
        _ => {
            return Err(Error::DenominatorStructure(format!(
                "denominator of x({n}P) is not a square: {}",
                x.den()
            )))
        }
    };
    let b3 = &(&b * &b) * &b;
    if y.den() != &b3 {
        return Err(Error::DenominatorStructure(format!(
            "denominator of y({n}P) is not B^3"
        )));
    }
    Ok(EdsTerm {
        n,
        coords: Some(TermCoords {
            a: x.num().clone(),
            b,
            c: y.num().clone(),
        }),
    })
}

/// `core * prod pi_i^{e_i}` over the suspect primes, with `core` prime to all of them.
#[derive(Clone, Debug)]
struct Split {
    core: Poly,
    e: Vec<u64>,
}

impl Split {
    fn zero(like: &Poly, k: usize) -> Split {
        Split {
            core: Poly::zero(like.field()),
            e: vec![0; k],
        }
    }

    fn from_poly(p: &Poly, suspects: &[Poly]) -> Split {
        let mut core = p.clone();
        let mut e = vec![0; suspects.len()];
        if !core.is_zero() {
            for (i, pi) in suspects.iter().enumerate() {
                let (c, k) = core.strip(pi);
                core = c;
                e[i] = k;
            }
        }
        Split { core, e }
    }

    fn is_zero(&self) -> bool {
        self.core.is_zero()
    }

    fn mul(&self, o: &Split) -> Split {
        if self.is_zero() || o.is_zero() {
            return Split::zero(&self.core, self.e.len());
        }
        Split {
            core: &self.core * &o.core,
            e: self.e.iter().zip(&o.e).map(|(a, b)| a + b).collect(),
        }
    }

    fn neg(&self) -> Split {
        Split {
            core: -&self.core,
            e: self.e.clone(),
        }
    }

    fn lift(core: &Poly, extra: &[u64], suspects: &[Poly]) -> Poly {
        let mut out = core.clone();
        for (pi, &k) in suspects.iter().zip(extra) {
            if k > 0 {
                out = &out * &pi.pow(k);
            }
        }
        out
    }

    fn sub(&self, o: &Split, suspects: &[Poly]) -> Split {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.neg();
        }
        let min: Vec<u64> = self.e.iter().zip(&o.e).map(|(a, b)| *a.min(b)).collect();
        let da: Vec<u64> = self.e.iter().zip(&min).map(|(a, m)| a - m).collect();
        let db: Vec<u64> = o.e.iter().zip(&min).map(|(b, m)| b - m).collect();
        let mut core = &Self::lift(&self.core, &da, suspects) - &Self::lift(&o.core, &db, suspects);
        if core.is_zero() {
            return Split::zero(&self.core, self.e.len());
        }
        let mut e = min;
        for (i, pi) in suspects.iter().enumerate() {
            // only equal exponents can leave extra factors of pi
            if da[i] == 0 && db[i] == 0 {
                let (c, k) = core.strip(pi);
                core = c;
                e[i] += k;
            }
        }
        Split { core, e }
    }

    fn div_exact(&self, o: &Split) -> Option<Split> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let core = self.core.div_exact(&o.core)?;
        let e = self
            .e
            .iter()
            .zip(&o.e)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u64>>>()?;
        Some(Split { core, e })
    }

    fn to_poly(&self, suspects: &[Poly]) -> Poly {
        Self::lift(&self.core, &self.e, suspects)
    }
}

/// Integral data for the division-polynomial engine.
///
/// With `x(P) = A/B^2`, `y(P) = C/B^3`, the model `a_i -> B^i a_i` carries
/// `P` to the integral point `(A, C)`. Division values are kept with their
/// bad-prime content factored out, since it grows quadratically in `n`.
#[derive(Clone, Debug)]
pub struct EdsModel {
    curve: Curve,
    point: Point,
    base: TermCoords,
    a: [Poly; 5],
    b2: Poly,
    b4: Poly,
    b6: Poly,
    b8: Poly,
    suspects: Vec<Poly>,
}

fn as_poly(x: &RatFunc) -> Poly {
    x.as_poly().expect("integral model").clone()
}

/// Division values `psi_0 ..= psi_n` in split form.
pub struct PsiTable {
    psi: Vec<Split>,
}

impl PsiTable {
    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }
}

impl EdsModel {
    pub fn new(e: &Curve, p: &Point) -> Result<EdsModel> {
        if !e.is_integral() {
            return Err(Error::NonIntegralModel(
                "coefficients must lie in F_q[t]".into(),
            ));
        }
        if !e.contains(p) {
            return Err(Error::OffCurve);
        }
        let base = term_from_point(1, p)?
            .coords
            .ok_or_else(|| Error::Precondition("P must be affine".into()))?;
        let bb = &base.b;
        let mut pw = vec![Poly::one(e.field())];
        for i in 1..=8 {
            pw.push(&pw[i - 1] * bb);
        }
        let a = [
            &as_poly(e.a1()) * &pw[1],
            &as_poly(e.a2()) * &pw[2],
            &as_poly(e.a3()) * &pw[3],
            &as_poly(e.a4()) * &pw[4],
            &as_poly(e.a6()) * &pw[6],
        ];
        let disc = as_poly(e.discriminant());
        let mut suspects = BTreeSet::new();
        for f in [&disc, bb] {
            if !f.is_constant() {
                for (pi, _) in factor(f)?.factors {
                    suspects.insert(pi);
                }
            }
        }
        Ok(EdsModel {
            curve: e.clone(),
            point: p.clone(),
            b2: &as_poly(e.b2()) * &pw[2],
            b4: &as_poly(e.b4()) * &pw[4],
            b6: &as_poly(e.b6()) * &pw[6],
            b8: &as_poly(e.b8()) * &pw[8],
            base,
            a,
            suspects: suspects.into_iter().collect(),
        })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    /// Primes where `gcd(phi_n, psi_n)` may be nontrivial: those of `Delta` and of `B_1`.
    pub fn suspect_primes(&self) -> &[Poly] {
        &self.suspects
    }

    fn split(&self, p: &Poly) -> Split {
        Split::from_poly(p, &self.suspects)
    }

    fn psi2(&self) -> Poly {
        let [a1, _, a3, _, _] = &self.a;
        let two = Poly::from_i64s(self.curve.field(), &[2]);
        &(&(&two * &self.base.c) + &(a1 * &self.base.a)) + a3
    }

    /// `psi_0 ..= psi_n` on the rescaled model.
    pub fn psi_table(&self, n: usize) -> PsiTable {
        let f = self.curve.field();
        let k = |c: i64| Poly::from_i64s(f, &[c]);
        let x = &self.base.a;
        let (b2, b4, b6, b8) = (&self.b2, &self.b4, &self.b6, &self.b8);
        let x2 = x * x;
        let x3 = &x2 * x;
        let x4 = &x2 * &x2;
        let psi2 = self.psi2();
        let psi3 = &(&(&(&(&k(3) * &x4) + &(b2 * &x3)) + &(&k(3) * &(b4 * &x2))) + &(&k(3) * &(b6 * x))) + b8;
        let inner = &(&(&(&(&(&(&k(2) * &(&x3 * &x3)) + &(b2 * &(&x4 * x))) + &(&k(5) * &(b4 * &x4)))
            + &(&k(10) * &(b6 * &x3)))
            + &(&k(10) * &(b8 * &x2)))
            + &(&(&(b2 * b8) - &(b4 * b6)) * x))
            + &(&(b4 * b8) - &(b6 * b6));
        let psi4 = &psi2 * &inner;
        let s = &self.suspects;
        let mut t: Vec<Split> = [Poly::zero(f), Poly::one(f), psi2, psi3, psi4]
            .iter()
            .map(|p| self.split(p))
            .collect();
        t.truncate(n + 1);
        let s2 = t.get(2).cloned();
        for i in t.len()..=n {
            let m = i / 2;
            let v = if i % 2 == 1 {
                let u = t[m + 2].mul(&t[m].mul(&t[m]).mul(&t[m]));
                let w = t[m - 1].mul(&t[m + 1].mul(&t[m + 1]).mul(&t[m + 1]));
                u.sub(&w, s)
            } else {
                let u = t[m + 2].mul(&t[m - 1].mul(&t[m - 1]));
                let w = t[m - 2].mul(&t[m + 1].mul(&t[m + 1]));
                let q = u
                    .sub(&w, s)
                    .div_exact(s2.as_ref().unwrap())
                    .expect("psi_2 divides the even recurrence");
                t[m].mul(&q)
            };
            t.push(v);
        }
        PsiTable { psi: t }
    }

    /// `psi_n` as a polynomial (including its bad-prime content).
    pub fn psi(&self, table: &PsiTable, n: usize) -> Poly {
        table.psi[n].to_poly(&self.suspects)
    }

    pub fn is_two_torsion(&self) -> bool {
        self.psi2().is_zero()
    }

    /// Terms `1..=n_max` from the recurrence; `verify` re-checks `gcd(A, B) = gcd(B, C) = 1`.
    pub fn terms(&self, n_max: u64, verify: bool) -> Result<Vec<EdsTerm>> {
        if self.is_two_torsion() {
            return Ok((1..=n_max)
                .map(|n| EdsTerm {
                    n,
                    coords: (n % 2 == 1).then(|| self.base.clone()),
                })
                .collect());
        }
        let table = self.psi_table(n_max as usize + 2);
        (1..=n_max)
            .map(|n| self.term_from_table(&table, n as usize, verify))
            .collect()
    }

    /// The `n`-th term from a table covering `n + 2`.
    pub fn term_from_table(&self, table: &PsiTable, n: usize, verify: bool) -> Result<EdsTerm> {
        let f = self.curve.field();
        let s = &self.suspects;
        let t = &table.psi;
        let psi_n = &t[n];
        if psi_n.is_zero() {
            return Ok(EdsTerm {
                n: n as u64,
                coords: None,
            });
        }
        let ps = |i: i64| -> Split {
            if i < 0 {
                t[(-i) as usize].neg()
            } else {
                t[i as usize].clone()
            }
        };
        let ni = n as i64;
        let [a1, _, a3, _, _] = &self.a;
        let psi_sq = psi_n.mul(psi_n);
        let psi_cu = psi_sq.mul(psi_n);
        let phi = self
            .split(&self.base.a)
            .mul(&psi_sq)
            .sub(&ps(ni + 1).mul(&ps(ni - 1)), s);
        let pm1 = ps(ni - 1);
        let pp1 = ps(ni + 1);
        let num = ps(ni + 2)
            .mul(&pm1.mul(&pm1))
            .sub(&ps(ni - 2).mul(&pp1.mul(&pp1)), s);
        let w = num
            .div_exact(&t[2])
            .ok_or_else(|| Error::Internal("psi_2 does not divide the y numerator".into()))?
            .sub(&self.split(a1).mul(&phi).mul(psi_n), s)
            .sub(&self.split(a3).mul(&psi_cu), s);
        // x = phi / g^2, y = w / (2 g^3)
        let g = self.split(&self.base.b).mul(psi_n);
        let two_inv = f.inv(f.from_i64(2)).unwrap();
        if phi.is_zero() {
            let g3 = g.mul(&g).mul(&g);
            let c = w.div_exact(&g3).ok_or_else(|| {
                Error::DenominatorStructure(format!("y({n}P) with x = 0 is not integral"))
            })?;
            return Ok(EdsTerm {
                n: n as u64,
                coords: Some(TermCoords {
                    a: Poly::zero(f),
                    b: Poly::one(f),
                    c: c.to_poly(s).scale(two_inv),
                }),
            });
        }
        let (lc, core_b) = g.core.monic_parts();
        let lc_inv = f.inv(lc).unwrap();
        let mut bn = core_b;
        let mut a_extra = Vec::with_capacity(s.len());
        let mut c_extra = Vec::with_capacity(s.len());
        for (i, pi) in s.iter().enumerate() {
            let (eg, ephi, ew) = (g.e[i], phi.e[i], w.e[i]);
            let d = (2 * eg).saturating_sub(ephi);
            if d % 2 == 1 {
                return Err(Error::DenominatorStructure(format!(
                    "odd order {d} of {pi} in the denominator of x({n}P)"
                )));
            }
            if d > 0 {
                bn = &bn * &pi.pow(d / 2);
            }
            a_extra.push(ephi + d - 2 * eg);
            let ce = (ew + 3 * d / 2).checked_sub(3 * eg);
            match ce {
                Some(ce) => c_extra.push(ce),
                None if w.is_zero() => c_extra.push(0),
                None => {
                    return Err(Error::DenominatorStructure(format!(
                        "denominator of y({n}P) is not B^3 at {pi}"
                    )))
                }
            }
        }
        let an = Split::lift(&phi.core, &a_extra, s).scale(f.mul(lc_inv, lc_inv));
        let cn = Split::lift(&w.core, &c_extra, s).scale(f.mul(two_inv, f.pow(lc_inv, 3)));
        if verify && !bn.is_constant() && (!an.gcd(&bn).is_one() || !cn.gcd(&bn).is_one()) {
            return Err(Error::Internal(format!(
                "A_{n} or C_{n} shares a factor with B_{n} outside the suspect primes"
            )));
        }
        Ok(EdsTerm {
            n: n as u64,
            coords: Some(TermCoords {
                a: an,
                b: bn,
                c: cn,
            }),
        })
    }
}

fn check_model(e: &Curve, p: &Point) -> Result<()> {
    EdsModel::new(e, p).map(|_| ())
}

/// The `n`-th term, computed by the recurrence and verified.
pub fn eds_term(e: &Curve, p: &Point, n: u64) -> Result<EdsTerm> {
    if n == 0 {
        return Err(Error::Precondition("index must be >= 1".into()));
    }
    let model = EdsModel::new(e, p)?;
    if model.is_two_torsion() {
        return Ok(model.terms(n, true)?.pop().unwrap());
    }
    let table = model.psi_table(n as usize + 2);
    model.term_from_table(&table, n as usize, true)
}

/// Terms `1..=n_max`.
pub fn eds_range(e: &Curve, p: &Point, n_max: u64, strategy: Strategy) -> Result<Vec<EdsTerm>> {
    match strategy {
        Strategy::DivisionRecurrence => EdsModel::new(e, p)?.terms(n_max, false),
        Strategy::IterativeAddition => {
            check_model(e, p)?;
            let mut out = Vec::with_capacity(n_max as usize);
            let mut cur = Point::Infinity;
            for n in 1..=n_max {
                cur = e.add_unchecked(&cur, p);
                out.push(term_from_point(n, &cur)?);
            }
            Ok(out)
        }
        Strategy::Ladder => {
            check_model(e, p)?;
            (1..=n_max)
                .map(|n| term_from_point(n, &e.mul_unchecked(n as i64, p)))
                .collect()
        }
    }
}

/// Runs every strategy and fails unless all agree.
pub fn eds_range_checked(e: &Curve, p: &Point, n_max: u64) -> Result<Vec<EdsTerm>> {
    let reference = EdsModel::new(e, p)?.terms(n_max, true)?;
    for s in [Strategy::IterativeAddition, Strategy::Ladder] {
        let other = eds_range(e, p, n_max, s)?;
        if let Some(bad) = reference.iter().zip(&other).find(|(a, b)| a != b) {
            return Err(Error::Internal(format!(
                "{s:?} disagrees with the recurrence at n = {}",
                bad.0.n
            )));
        }
    }
    Ok(reference)
}

/// Whether `n` divides `v(x(P))` at every place `v` outside `S` where `x(P)` has a pole.
pub fn membership_test(e: &Curve, p: &Point, n: u64, s: &PlaceSet) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("n must be >= 1".into()));
    }
    if !e.contains(p) {
        return Err(Error::OffCurve);
    }
    let Some(x) = p.x() else {
        return Ok(true);
    };
    if x.is_zero() {
        return Ok(true);
    }
    let n = n as i64;
    if !x.den().is_constant() {
        for (pi, _) in factor(x.den())?.factors {
            let place = Place::Finite(pi);
            if !s.contains(&place) && x.valuation(&place)? % n != 0 {
                return Ok(false);
            }
        }
    }
    let v_inf = x.valuation(&Place::Infinity)?;
    if !s.infinity && v_inf < 0 && v_inf % n != 0 {
        return Ok(false);
    }
    Ok(true)
}

/// `B_m | B_n` failures for `m | n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub pairs_checked: usize,
    pub violations: Vec<(u64, u64)>,
}

impl DivisibilityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn index_terms(terms: &[EdsTerm]) -> std::collections::BTreeMap<u64, &EdsTerm> {
    terms.iter().map(|t| (t.n, t)).collect()
}

pub fn check_divisibility(terms: &[EdsTerm]) -> DivisibilityReport {
    let by_n = index_terms(terms);
    let mut report = DivisibilityReport::default();
    for (&m, tm) in &by_n {
        for (&n, tn) in by_n.range(m + 1..) {
            if n % m != 0 {
                continue;
            }
            report.pairs_checked += 1;
            let ok = match (tm.b(), tn.b()) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(bm), Some(bn)) => bm.divides(bn),
            };
            if !ok {
                report.violations.push((m, n));
            }
        }
    }
    report
}

/// A prime `pi | B_n` with `ord_pi(B_{kn}) != ord_pi(B_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityViolation {
    pub n: u64,
    pub multiplier: u64,
    pub prime: String,
    pub ord_n: u64,
    pub ord_multiple: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub checks: usize,
    pub violations: Vec<RigidityViolation>,
}

impl RigidityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations whose multiplier is prime to `p`.
    pub fn violations_prime_to(&self, p: u32) -> Vec<&RigidityViolation> {
        self.violations
            .iter()
            .filter(|v| v.multiplier % p as u64 != 0)
            .collect()
    }
}

/// Compares `ord_pi(B_{kn})` with `ord_pi(B_n)` for every prime of every `B_n`.
pub fn check_rigidity(terms: &[EdsTerm]) -> Result<RigidityReport> {
    let by_n = index_terms(terms);
    let n_top = by_n.keys().next_back().copied().unwrap_or(0);
    let mut report = RigidityReport::default();
    for (&n, tn) in &by_n {
        if 2 * n > n_top {
            break;
        }
        let Some(bn) = tn.b() else { continue };
        if bn.is_constant() {
            continue;
        }
        for (pi, e) in factor(bn)?.factors {
            let mut k = 2;
            while k * n <= n_top {
                if let Some(bkn) = by_n.get(&(k * n)).and_then(|t| t.b()) {
                    report.checks += 1;
                    let o = bkn.ord(&pi);
                    if o != e {
                        report.violations.push(RigidityViolation {
                            n,
                            multiplier: k,
                            prime: pi.to_string(),
                            ord_n: e,
                            ord_multiple: o,
                        });
                    }
                }
                k += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parser::{parse_curve, parse_point, parse_poly};

    fn example() -> (Curve, Point) {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let p = parse_point("t;t^2", &e).unwrap();
        (e, p)
    }

    #[test]
    fn example_first_terms() {
        let (e, p) = example();
        let f = e.field().clone();
        let want = ["1", "1", "t^2-1", "t^2+1", "(t^3+t^2-2*t-1)*(t^3-t^2-2*t+1)"];
        let terms = eds_range(&e, &p, 5, Strategy::DivisionRecurrence).unwrap();
        for (t, w) in terms.iter().zip(want) {
            assert_eq!(t.b().unwrap(), &parse_poly(w, &f).unwrap(), "n = {}", t.n);
        }
    }

    #[test]
    fn strategies_agree() {
        let (e, p) = example();
        eds_range_checked(&e, &p, 25).unwrap();
        let f = Field::prime(5).unwrap();
        let e = parse_curve("1,0,0,0,-t^4", &f).unwrap();
        let p = parse_point("0;2*t^2", &e).unwrap();
        eds_range_checked(&e, &p, 16).unwrap();
    }

    #[test]
    fn non_integral_point() {
        let (e, p) = example();
        let p3 = e.mul(3, &p).unwrap();
        let a = eds_range(&e, &p3, 6, Strategy::DivisionRecurrence).unwrap();
        let b = eds_range(&e, &p, 18, Strategy::DivisionRecurrence).unwrap();
        for t in &a {
            assert_eq!(t.b(), b[(3 * t.n - 1) as usize].b());
        }
        eds_range_checked(&e, &p3, 6).unwrap();
    }

    #[test]
    fn torsion_terms() {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("0,0,0,t,0", &f).unwrap();
        let p = parse_point("0;0", &e).unwrap();
        let terms = eds_range(&e, &p, 4, Strategy::DivisionRecurrence).unwrap();
        assert!(!terms[0].is_infinite());
        assert!(terms[1].is_infinite() && terms[3].is_infinite());
        assert_eq!(eds_term(&e, &p, 2).unwrap().coords, None);
    }

    #[test]
    fn membership() {
        let (e, p) = example();
        let s = PlaceSet::infinity_only();
        assert!(membership_test(&e, &p, 7, &s).unwrap());
        let p3 = e.mul(3, &p).unwrap();
        assert!(membership_test(&e, &p3, 2, &s).unwrap());
        assert!(!membership_test(&e, &p3, 4, &s).unwrap());
    }

    #[test]
    fn divisibility_and_rigidity_report() {
        let (e, p) = example();
        let terms = eds_range(&e, &p, 30, Strategy::DivisionRecurrence).unwrap();
        assert!(check_divisibility(&terms).holds());
        let r = check_rigidity(&terms).unwrap();
        assert!(r.checks > 0);
        eprintln!("{:?}", r.violations);
    }
}
