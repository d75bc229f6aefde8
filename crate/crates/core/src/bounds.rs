//! Mason's inequality and the explicit exponent/index bounds, in exact rational arithmetic.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::algebra::{factor, Place, Poly, RatFunc};
use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

/// Default upper end of a scan over the worked example.
pub const SCAN_CEILING: u64 = 212;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasonReport {
    pub height_ratio: u64,
    /// Places where the three valuations do not all agree.
    pub places: Vec<String>,
    pub place_count: u64,
    /// Sum of residue degrees over the same places.
    pub place_degree: u64,
    pub genus: u64,
    pub bound: i64,
    pub pth_power_escape: bool,
    pub holds: bool,
}

fn support(x: &RatFunc, into: &mut BTreeSet<Poly>) -> Result<()> {
    for f in [x.num(), x.den()] {
        if !f.is_constant() {
            for (pi, _) in factor(f)?.factors {
                into.insert(pi);
            }
        }
    }
    Ok(())
}

/// Checks `h(g1/g2) <= sum_{v in T} deg v + 2g - 2` for `g1 + g2 + g3 = 0`.
pub fn mason_check(g1: &RatFunc, g2: &RatFunc, g3: &RatFunc, genus: u64) -> Result<MasonReport> {
    if g1.is_zero() || g2.is_zero() || g3.is_zero() {
        return Err(Error::ZeroInput("Mason terms must be nonzero"));
    }
    if !(&(g1 + g2) + g3).is_zero() {
        return Err(Error::Precondition("g1 + g2 + g3 must vanish".into()));
    }
    let mut primes = BTreeSet::new();
    for g in [g1, g2, g3] {
        support(g, &mut primes)?;
    }
    let mut places: Vec<Place> = primes.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinity);
    let mut t = Vec::new();
    for v in places {
        let vals = [g1.valuation(&v)?, g2.valuation(&v)?, g3.valuation(&v)?];
        if vals[0] != vals[1] || vals[1] != vals[2] {
            t.push(v);
        }
    }
    let place_degree: u64 = t.iter().map(|v| v.degree() as u64).sum();
    let ratio = g1 / g2;
    let height_ratio = ratio.height()?;
    let bound = place_degree as i64 + 2 * genus as i64 - 2;
    let pth_power_escape = ratio.is_pth_power();
    Ok(MasonReport {
        height_ratio,
        places: t.iter().map(|v| v.to_string()).collect(),
        place_count: t.len() as u64,
        place_degree,
        genus,
        bound,
        pth_power_escape,
        holds: pth_power_escape || height_ratio as i64 <= bound,
    })
}

/// `h(a) + h(b) + 3 h(X) + 2 h(Y)`.
pub fn sum_height_bound(h_a: u64, h_b: u64, h_x: u64, h_y: u64) -> u64 {
    h_a + h_b + 3 * h_x + 2 * h_y
}

/// `2 kappa + 33 C`, the specialization with `h(X) + h(Y) <= 11 C`.
pub fn sum_height_bound_kappa(kappa: u64, c: u64) -> u64 {
    2 * kappa + 33 * c
}

/// Output of a bound calculator; every number carries the formula that produced it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg_b_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max_crude: Option<i64>,
    /// Exact values before flooring, as `name = p/q`.
    pub unfloored: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn show(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `C = 2g - 2 + |S|`, `n <= (2 kappa + 33 C)/4`, `l <= n/2`.
pub fn generic_exponent_bound(genus: u64, s_size: u64, kappa: u64) -> Result<BoundReport> {
    if s_size == 0 {
        return Err(Error::Precondition("|S| must be at least 1".into()));
    }
    let c = 2 * genus as i64 - 2 + s_size as i64;
    let mut r = BoundReport {
        formula: "C = 2g - 2 + |S|; n <= (2 kappa + 33 C)/4; l <= n/2".into(),
        c: Some(c),
        ..Default::default()
    };
    if c <= 0 {
        r.note = Some(format!("degenerate: C = {c} <= 0"));
        return Ok(r);
    }
    let n = Q::new(2 * kappa as i64 + 33 * c, 4);
    let n_max = n.floor().to_integer();
    r.n_max = Some(n_max);
    r.ell_max = Some(Integer::div_floor(&n_max, &2));
    r.unfloored.push(("n".into(), show(&n)));
    Ok(r)
}

/// `l <= 4 deg D`, `deg B_n <= 61 deg D / 2`, `n <= 732 deg D / (12 h(x(P)) - h(j))`.
pub fn prop19_bounds(deg_disc: u64, h_xp: u64, h_j: u64) -> Result<BoundReport> {
    if deg_disc == 0 {
        return Err(Error::Precondition("deg Delta must be at least 1".into()));
    }
    let d = deg_disc as i64;
    let deg_b = Q::new(61 * d, 2);
    let mut r = BoundReport {
        formula: "l <= 4 deg D; deg B <= 61 deg D / 2; n <= 732 deg D / (12 h(x(P)) - h(j))".into(),
        ell_max: Some(4 * d),
        deg_b_max: Some(deg_b.floor().to_integer()),
        ..Default::default()
    };
    r.unfloored.push(("deg_b".into(), show(&deg_b)));
    let den = 12 * h_xp as i64 - h_j as i64;
    if den <= 0 {
        r.note = Some("vacuous: 12 h(x(P)) <= h(j)".into());
    } else {
        let n = Q::new(732 * d, den);
        r.n_max = Some(n.floor().to_integer());
        r.unfloored.push(("n".into(), show(&n)));
    }
    Ok(r)
}

/// `(l - 1) h(X) <= -2 + 2 N + 2 H` with `h(X) >= 1`.
pub fn refined_exponent_bound(h_ab: u64, n_ab: u64) -> BoundReport {
    let l = -2 + 2 * n_ab as i64 + 2 * h_ab as i64 + 1;
    BoundReport {
        formula: "l <= -2 + 2 N_ab + 2 H_ab + 1".into(),
        ell_max: Some(l),
        note: (l < 1).then(|| "no constraint below 1".into()),
        ..Default::default()
    }
}

/// `n <= (29 deg D + 32 (n0(D) - 1)) / (h(x(P)) - h(j)/12)`, with the cruder
/// `732 deg D / (12 h(x(P)) - h(j))` alongside.
pub fn eee_index_bound(deg_disc: u64, n0_disc: u64, h_xp: u64, h_j: u64) -> Result<BoundReport> {
    if deg_disc == 0 {
        return Err(Error::Precondition("deg Delta must be at least 1".into()));
    }
    let d = deg_disc as i64;
    let mut r = BoundReport {
        formula: "n <= (29 deg D + 32 (n0(D) - 1)) / (h(x(P)) - h(j)/12)".into(),
        ..Default::default()
    };
    let den = Q::from(h_xp as i64) - Q::new(h_j as i64, 12);
    if den <= Q::from(0) {
        r.note = Some("vacuous: 12 h(x(P)) <= h(j)".into());
        return Ok(r);
    }
    let num = Q::from(29 * d + 32 * (n0_disc as i64 - 1));
    let n = num / den;
    let crude = Q::new(732 * d, 12 * h_xp as i64 - h_j as i64);
    r.n_max = Some(n.floor().to_integer());
    r.n_max_crude = Some(crude.floor().to_integer());
    r.unfloored.push(("n".into(), show(&n)));
    r.unfloored.push(("n_crude".into(), show(&crude)));
    Ok(r)
}

/// `[h(x(P))/2 - h(j)/24, h(x(P))/2]`, the range of the canonical height.
pub fn hhat_bracket(h_xp: u64, h_j: u64) -> (Q, Q) {
    let high = Q::new(h_xp as i64, 2);
    (high - Q::new(h_j as i64, 24), high)
}

/// Maximal height over a set of unit representatives.
pub fn kappa(reps: &[RatFunc]) -> Result<u64> {
    reps.iter().map(RatFunc::height).try_fold(0, |m, h| Ok(m.max(h?)))
}

/// The worked example's unit representatives `{2, T +- 1, T +- 2}` over `F_5(T)`.
pub fn example_unit_representatives(field: &crate::algebra::Field) -> Vec<RatFunc> {
    [[2, 0], [1, 1], [-1, 1], [2, 1], [-2, 1]]
        .iter()
        .map(|c| RatFunc::from_poly(Poly::from_i64s(field, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parser::parse_ratfunc;

    #[test]
    fn generic_values() {
        let r = generic_exponent_bound(0, 6, 1).unwrap();
        assert_eq!((r.c, r.n_max, r.ell_max), (Some(4), Some(33), Some(16)));
        assert_eq!(r.unfloored[0].1, "67/2");
        let r = generic_exponent_bound(0, 2, 0).unwrap();
        assert!(r.note.is_some() && r.n_max.is_none());
        let r = generic_exponent_bound(1, 1, 0).unwrap();
        assert_eq!((r.c, r.n_max, r.ell_max), (Some(1), Some(8), Some(4)));
    }

    #[test]
    fn prop19_values() {
        let r = prop19_bounds(10, 1, 6).unwrap();
        assert_eq!((r.ell_max, r.deg_b_max, r.n_max), (Some(40), Some(305), Some(1220)));
        let r = prop19_bounds(1, 1, 0).unwrap();
        assert_eq!((r.ell_max, r.deg_b_max, r.n_max), (Some(4), Some(30), Some(61)));
        assert!(prop19_bounds(3, 1, 12).unwrap().note.is_some());
    }

    #[test]
    fn refined_and_eee() {
        assert_eq!(refined_exponent_bound(4, 4).ell_max, Some(15));
        assert_eq!(refined_exponent_bound(7, 8).ell_max, Some(4 * 7 + 1));
        assert_eq!(refined_exponent_bound(0, 0).ell_max, Some(-1));
        let r = eee_index_bound(10, 4, 1, 6).unwrap();
        assert_eq!((r.n_max, r.n_max_crude), (Some(772), Some(1220)));
        let r = eee_index_bound(10, 1, 1, 0).unwrap();
        assert_eq!(r.n_max, Some(290));
    }

    #[test]
    fn heights() {
        assert_eq!(sum_height_bound(1, 1, 2, 3), 14);
        assert_eq!(sum_height_bound_kappa(1, 4), 134);
        assert_eq!(sum_height_bound(0, 0, 0, 0), 0);
        assert_eq!(hhat_bracket(2, 12), (Q::new(1, 2), Q::from(1)));
        let f = Field::prime(5).unwrap();
        assert_eq!(kappa(&example_unit_representatives(&f)).unwrap(), 1);
    }

    #[test]
    fn mason_minimal() {
        let f = Field::prime(5).unwrap();
        let g1 = RatFunc::t(&f);
        let g2 = parse_ratfunc("1-t", &f).unwrap();
        let g3 = RatFunc::from_i64(&f, -1);
        let r = mason_check(&g1, &g2, &g3, 0).unwrap();
        assert_eq!((r.height_ratio, r.place_count, r.bound), (1, 3, 1));
        assert!(r.holds && !r.pth_power_escape);
        let g1 = parse_ratfunc("t^5", &f).unwrap();
        let g2 = parse_ratfunc("1-t^5", &f).unwrap();
        let r = mason_check(&g1, &g2, &g3, 0).unwrap();
        assert!(r.pth_power_escape && r.holds);
        assert!(mason_check(&g1, &g1, &g3, 0).is_err());
    }
}
