//! Polynomials and rational functions over F_q: factoring, valuations, heights.

use edsfq::algebra::{factor, max_power, squarefree_decomp, Field, Place};
use edsfq::parser::{parse_poly, parse_ratfunc};

fn main() -> edsfq::Result<()> {
    let f5 = Field::prime(5)?;
    let b5 = parse_poly("t^6 + t^2 - 1", &f5)?;
    let fac = factor(&b5)?;
    println!("B_5 = {b5}");
    for (g, e) in &fac.factors {
        println!("  factor {g} ^ {e}");
    }

    let f = parse_poly("(t+1)^4*(t^2+2)^2", &f5)?;
    println!("{f}: max power {}", max_power(&f)?);
    for (g, e) in squarefree_decomp(&parse_poly("t^5 + 1", &f5)?)?.parts {
        println!("t^5 + 1 = ({g})^{e} up to a unit");
    }

    let x = parse_ratfunc("(t^2 - 1)/(t^3*(t + 2))", &f5)?;
    println!("x = {x}, h(x) = {}, h(1/x) = {}", x.height()?, x.inv()?.height()?);
    let mut total = 0;
    for (v, n) in x.divisor()? {
        println!("  v[{v}](x) = {n}");
        total += n * v.degree() as i64;
    }
    println!("  v[inf](x) = {}", x.valuation(&Place::Infinity)?);
    println!("  sum of deg(v) v(x) = {total}");

    let f49 = Field::extension(7, &[3, 6, 1])?;
    let y = parse_ratfunc("t^7 + 3", &f49)?;
    println!("over F_49: {y} is a 7th power: {}", y.is_pth_power());
    Ok(())
}
