//! Weierstrass invariants, the group law, the short model, division values and halving.

use edsfq::algebra::Field;
use edsfq::curve::{division_values, halve_point, to_short_form, two_torsion_x};
use edsfq::parser::{parse_curve, parse_point, print_canonical};

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let p = parse_point("t;t^2", &e)?;
    println!("E: {}", print_canonical(&e));
    println!("  c4 = {}, c6 = {}", e.c4(), e.c6());
    println!("  Delta = {}", e.discriminant());
    println!("  j = {}", e.j_invariant());

    for n in 1..=4 {
        println!("{n}P = {:?}", e.mul(n, &p)?);
    }
    let q = e.add(&p, &e.neg(&p)?)?;
    println!("P + (-P) = {q:?}");

    let sf = to_short_form(&e)?;
    println!("short model: y^2 = x^3 + ({})x + ({})", sf.a(), sf.b());
    let ps = sf.to_short(&p)?;
    let dv = division_values(&sf, ps.x().unwrap());
    println!("  psi_2^2 = {}, theta_2 = {}", dv.psi2sq, dv.theta2);

    println!("2-torsion x: {:?}", two_torsion_x(&e)?);
    let two_p = e.double(&p)?;
    for h in halve_point(&e, &two_p)? {
        println!("half of 2P: {h:?}");
    }
    Ok(())
}
