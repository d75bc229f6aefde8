//! Covariants of the binary cubic attached to a curve and the ternary equation from P = 2Q.

use edsfq::algebra::Field;
use edsfq::curve::{base_change_curve, to_short_form, Substitution};
use edsfq::identities::{covariants, ternary_witness, BinaryCubic};
use edsfq::parser::{parse_curve, parse_point};

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let e = base_change_curve(&e, &Substitution::power(&f, 2)?)?;
    let q = parse_point("t^2*(t-2);2*t^3*(t+1)*(t-2)", &e)?;

    let sf = to_short_form(&e)?;
    let short = sf.curve();
    let cubic = BinaryCubic::klein(short.a4(), short.a6());
    let cov = covariants(&cubic)?;
    println!("discF = {}", cov.disc_f);
    println!("discF / Delta_E = {}", cov.disc_f.try_div(short.discriminant())?);
    println!("G^2 + 4H^3 + 27 discF F^2 = 0: {}", cov.syzygy_holds(&cubic));

    let w = ternary_witness(short, &sf.to_short(&q)?)?;
    println!("X = {}", w.x);
    println!("Y = {}", w.y);
    println!("F(A_Q, B_Q^2) = {}", w.fval);
    println!("B_P / B_Q = {}, delta = {}", w.bp_part, w.delta);
    println!("{}", w.normalization());
    Ok(())
}
