//! Frobenius twists and descent, and how B_n transforms under them.

use edsfq::algebra::Field;
use edsfq::curve::{frobenius_curve, frobenius_descend, frobenius_map, Point};
use edsfq::eds::eds_range;
use edsfq::eds::Strategy;
use edsfq::parser::{parse_curve, parse_point, print_canonical};

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let e0 = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let q = parse_point("t;t^2", &e0)?;
    let e1 = frobenius_curve(&e0, 1)?;
    println!("Fr(E) = {}", print_canonical(&e1));

    let (down, s) = frobenius_descend(&e1)?;
    println!("descends by s = {s} to {}", print_canonical(&down));

    let fq: Point = frobenius_map(&q, 1);
    let b0 = eds_range(&e0, &q, 6, Strategy::DivisionRecurrence)?;
    let b1 = eds_range(&e1, &fq, 6, Strategy::DivisionRecurrence)?;
    for (t0, t1) in b0.iter().zip(&b1) {
        let lhs = t1.b().unwrap();
        let rhs = t0.b().unwrap().pow(5);
        println!("n = {}: B_n(Fr Q) = B_n(Q)^5 is {}", t0.n, *lhs == rhs);
    }
    Ok(())
}
