//! Siegel's identities for a point with rational 2-torsion around.

use edsfq::algebra::{Field, RatFunc};
use edsfq::curve::{base_change_curve, two_torsion_x, Substitution};
use edsfq::identities::{lambda_j, pth_power_case, siegel_z, split_torsion_sample, SiegelMode};
use edsfq::parser::{parse_curve, parse_point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> edsfq::Result<()> {
    let f = Field::prime(5)?;
    let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let e = base_change_curve(&e, &Substitution::power(&f, 2)?)?;
    let p = parse_point("t^2;t^4", &e)?;
    let alphas: [RatFunc; 3] = two_torsion_x(&e)?.try_into().expect("three roots");
    let d = siegel_z(&e, &p, &alphas, SiegelMode::Exact)?;
    for i in 0..3 {
        println!("alpha = {}, z = {}", d.alphas[i], d.z[i]);
    }
    println!("(alpha_j - alpha_i) B^2 = (z_i + z_j)(z_i - z_j): {}", d.bb_holds());
    println!("Z_+ = {:?}", d.z_plus);
    println!("x(P) reconstructed for every triple and sign: {}", d.reconstruction_matches()?);
    let (lambda, j) = lambda_j(&alphas)?;
    println!("lambda = {lambda}, j = {j}, agrees: {}", &j == e.j_invariant());
    println!("case: {:?}", pth_power_case(&e, &d)?);

    let f7 = Field::prime(7)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = 0;
    for _ in 0..20 {
        let s = split_torsion_sample(&f7, &mut rng, 2, false)?;
        let d = siegel_z(&s.curve, &s.p, &s.alphas, SiegelMode::Exact)?;
        ok += (d.bb_holds() && d.reconstruction_matches()?) as u32;
    }
    println!("random instances over F_7: {ok}/20 pass");
    Ok(())
}
