//! Mason's inequality on a few triples g1 + g2 + g3 = 0 over F_5(t).

use edsfq::algebra::Field;
use edsfq::bounds::mason_check;
use edsfq::parser::parse_ratfunc;

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let triples = [
        ("t", "1-t", "-1"),
        ("t^5", "1-t^5", "-1"),
        ("(t+1)^3", "-t^2*(t+2)", "-(t+1)^3+t^2*(t+2)"),
        ("t^2+2", "-(t^2+3)", "1"),
    ];
    for (a, b, c) in triples {
        let r = mason_check(
            &parse_ratfunc(a, &f)?,
            &parse_ratfunc(b, &f)?,
            &parse_ratfunc(c, &f)?,
            0,
        )?;
        println!(
            "({a}) + ({b}) + ({c}): h = {}, T = {{{}}}, bound = {}, escape = {}, holds = {}",
            r.height_ratio,
            r.places.join(", "),
            r.bound,
            r.pth_power_escape,
            r.holds
        );
    }
    Ok(())
}
