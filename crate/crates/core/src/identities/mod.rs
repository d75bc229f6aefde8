//! Binary cubic covariants, the ternary witness for `P = 2Q`, and Siegel's identities.

mod covariants;
mod forms;
mod siegel;
mod ternary;

pub use covariants::{covariants, BinaryCubic, CovariantPair};
pub use forms::BinaryForm;
pub use siegel::{
    lambda_j, pth_power_case, reconstruct_x, siegel_z, split_torsion_sample, SiegelCase,
    SiegelData, SiegelMode, SplitSample,
};
pub use ternary::{ternary_witness, TernaryWitness};

use crate::algebra::{factor, Poly};
use crate::error::Result;

/// Every prime factor of `f` divides `g`.
pub fn supported_on(f: &Poly, g: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Ok(false);
    }
    if f.is_constant() {
        return Ok(true);
    }
    Ok(factor(f)?.factors.iter().all(|(pi, _)| pi.divides(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, RatFunc};
    use crate::curve::{base_change_curve, base_change_ratfunc, Curve, Substitution};
    use crate::parser::{parse_curve, parse_point, parse_ratfunc};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn base_changed() -> (Curve, [RatFunc; 3]) {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let sub = Substitution::power(&f, 2).unwrap();
        let al = ["0", "t*(t+1)", "2*t"]
            .map(|s| base_change_ratfunc(&parse_ratfunc(s, &f).unwrap(), &sub).unwrap());
        (base_change_curve(&e, &sub).unwrap(), al)
    }

    #[test]
    fn siegel_chain_on_example() {
        let (e, al) = base_changed();
        let p = parse_point("t^2;t^4", &e).unwrap();
        let d = siegel_z(&e, &p, &al, SiegelMode::Exact).unwrap();
        assert!(d.bb_holds());
        assert!(d.reconstruction_matches().unwrap());
        let x = reconstruct_x(d.z_plus.as_ref().unwrap(), &al[0], &al[2]).unwrap();
        assert_eq!(&x, p.x().unwrap());
        let bad = d.z_plus.as_ref().unwrap() + &RatFunc::one(e.field());
        assert_ne!(&reconstruct_x(&bad, &al[0], &al[2]).unwrap(), p.x().unwrap());
        let disc = e.discriminant().as_poly().unwrap().clone();
        assert!(d.pairs_coprime_outside(&disc).unwrap());
        assert_eq!(pth_power_case(&e, &d).unwrap(), SiegelCase::Case1);
    }

    #[test]
    fn two_torsion_point_rejected() {
        let (e, al) = base_changed();
        let p = parse_point("0;0", &e).unwrap();
        assert!(siegel_z(&e, &p, &al, SiegelMode::Exact).is_err());
    }

    #[test]
    fn lambda_gives_j() {
        let f = Field::prime(5).unwrap();
        let al = ["0", "t*(t+1)", "2*t"].map(|s| parse_ratfunc(s, &f).unwrap());
        let (lambda, j) = lambda_j(&al).unwrap();
        assert_eq!(j, parse_ratfunc("-(t^2-2)^3/(t^2-1)^2", &f).unwrap());
        let inv = [al[0].clone(), al[2].clone(), al[1].clone()];
        let (l2, j2) = lambda_j(&inv).unwrap();
        assert_eq!(l2, lambda.inv().unwrap());
        assert_eq!(j2, j);
    }

    #[test]
    fn random_split_samples() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let s = split_torsion_sample(&f, &mut rng, 2, false).unwrap();
            let d = siegel_z(&s.curve, &s.p, &s.alphas, SiegelMode::Exact).unwrap();
            assert!(d.reconstruction_matches().unwrap());
        }
    }

    #[test]
    fn ternary_on_short_samples() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let s = split_torsion_sample(&f, &mut rng, 2, true).unwrap();
            let w = ternary_witness(&s.curve, &s.q).unwrap();
            let disc = s.curve.discriminant().as_poly().unwrap().clone();
            assert!(w.gcds_supported_on(&disc).unwrap());
            assert_eq!(&w.disc_f / s.curve.discriminant(), RatFunc::from_i64(&f, 16));
        }
    }
}
