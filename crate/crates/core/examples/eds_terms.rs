//! B_n for a point on a curve over F_5(t), with divisibility and rigidity checks.

use edsfq::algebra::Field;
use edsfq::eds::{check_divisibility, check_rigidity, eds_range_checked};
use edsfq::parser::{parse_curve, parse_point};

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let p = parse_point("t;t^2", &e)?;
    let terms = eds_range_checked(&e, &p, 12)?;
    for t in &terms {
        println!("B_{} = {}", t.n, t.b().unwrap());
    }
    let div = check_divisibility(&terms);
    println!("divisibility B_m | B_n: {} pairs, holds = {}", div.pairs_checked, div.holds());
    let rig = check_rigidity(&terms)?;
    println!(
        "rigidity: {} checks, {} violations, {} with multiplier prime to 5",
        rig.checks,
        rig.violations.len(),
        rig.violations_prime_to(5).len()
    );

    for d in 1..=3 {
        let e = parse_curve(&format!("1,0,0,0,-t^{}", 2 * d), &f)?;
        let p = parse_point(&format!("0;2*t^{d}"), &e)?;
        let b: Vec<String> = eds_range_checked(&e, &p, 4)?
            .iter()
            .map(|t| t.b().unwrap().to_string())
            .collect();
        println!("y^2 + xy = x^3 - t^{}: B_1..B_4 = {}", 2 * d, b.join(", "));
    }
    Ok(())
}
