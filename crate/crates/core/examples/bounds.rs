//! The explicit exponent and index bounds, evaluated on the worked example's data.

use edsfq::algebra::{n_zero, Field};
use edsfq::bounds::{
    eee_index_bound, example_unit_representatives, generic_exponent_bound, hhat_bracket, kappa,
    prop19_bounds, refined_exponent_bound, sum_height_bound_kappa, SCAN_CEILING,
};
use edsfq::curve::{base_change_curve, Substitution};
use edsfq::parser::{parse_curve, parse_point};

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let k = kappa(&example_unit_representatives(&f))?;
    let g = generic_exponent_bound(0, 6, k)?;
    println!("generic: kappa = {k}, {g:?}");
    println!("2 kappa + 33 C = {}", sum_height_bound_kappa(k, g.c.unwrap() as u64));
    println!("refined: {:?}", refined_exponent_bound(4, 4).ell_max);
    println!("prop19(10, 1, 6): {:?}", prop19_bounds(10, 1, 6)?);

    let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let e = base_change_curve(&e, &Substitution::power(&f, 2)?)?;
    let p = parse_point("t^2;t^4", &e)?;
    let disc = e.discriminant();
    let deg = disc.height()?;
    let n0 = n_zero(disc)?;
    let hx = p.x().unwrap().height()?;
    let hj = e.j_invariant().height()?;
    println!("base-changed data: deg D = {deg}, n0(D) = {n0}, h(x(P)) = {hx}, h(j) = {hj}");
    let r = eee_index_bound(deg, n0, hx, hj)?;
    println!("index bound: {:?} (halved {:?}); cited ceiling {SCAN_CEILING}", r.n_max, r.n_max.map(|n| n / 2));
    let (lo, hi) = hhat_bracket(hx, hj);
    println!("canonical height in [{lo}, {hi}]");
    Ok(())
}
