//! One line per acceptance criterion; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use edsfq::algebra::{Field, Poly, RatFunc};
use edsfq::bounds::{generic_exponent_bound, mason_check, prop19_bounds, refined_exponent_bound};
use edsfq::curve::{
    base_change_curve, frobenius_curve, frobenius_map, two_torsion_x, Curve, Substitution,
};
use edsfq::eds::{check_divisibility, check_rigidity, eds_range, Strategy};
use edsfq::harness::{format_rows, scan, OutputFormat, ScanConfig, ScanRow};
use edsfq::identities::{covariants, siegel_z, split_torsion_sample, BinaryCubic, SiegelMode};
use edsfq::parser::{parse_point, parse_poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn golden_eds() -> Outcome {
    let start = Instant::now();
    let (e, p) = example();
    let f = f5();
    let terms = eds_range(&e, &p, 5, Strategy::DivisionRecurrence).map_err(err)?;
    let expect = ["1", "1", "t^2-1", "t^2+1", "(t^3+t^2-2*t-1)*(t^3-t^2-2*t+1)"];
    for (t, x) in terms.iter().zip(expect) {
        let want = parse_poly(x, &f).map_err(err)?;
        ensure(t.b() == Some(&want), format!("B_{} = {:?}, expected {x}", t.n, t.b()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("B_1..B_5 exact in {elapsed:.2?}"))
}

fn example_config(hi: u64) -> ScanConfig {
    let (e, p) = example();
    let mut cfg = ScanConfig::new(e, p);
    cfg.range = 1..=hi;
    cfg
}

fn flagged(rows: &[ScanRow]) -> Vec<u64> {
    rows.iter().filter(|r| r.flagged).map(|r| r.n).collect()
}

fn example_scan(full: &mut Option<String>) -> Outcome {
    let start = Instant::now();
    let smoke = scan(&example_config(60)).map_err(err)?;
    let smoke_time = start.elapsed();
    ensure(smoke_time < Duration::from_secs(10), format!("n <= 60 took {smoke_time:?}"))?;
    let mut pruned_cfg = example_config(60);
    pruned_cfg.prune = true;
    let pruned = scan(&pruned_cfg).map_err(err)?;
    ensure(
        pruned.iter().map(|r| r.flagged).eq(smoke.iter().map(|r| r.flagged)),
        "prune and no-prune flags differ on 1..60",
    )?;

    let start = Instant::now();
    let rows = scan(&example_config(212)).map_err(err)?;
    let full_time = start.elapsed();
    ensure(flagged(&rows) == [1, 2], format!("flagged {:?}", flagged(&rows)))?;
    ensure(
        rows[2..5].iter().all(|r| r.squarefree == Some(true)),
        "B_3, B_4, B_5 not all squarefree",
    )?;
    let stray: Vec<u64> = rows[5..]
        .iter()
        .filter(|r| r.squarefree == Some(false) && [3, 4, 5].iter().all(|m| r.n % m != 0))
        .map(|r| r.n)
        .collect();
    ensure(stray.is_empty(), format!("non-squarefree B_n with n prime to 60: {stray:?}"))?;
    ensure(full_time < Duration::from_secs(600), format!("full scan took {full_time:?}"))?;
    let non_sqf = rows.iter().filter(|r| r.squarefree == Some(false)).count();
    *full = Some(format_rows(&rows, OutputFormat::Tsv));
    Ok(format!(
        "flags {{1, 2}} on 1..212 ({non_sqf} non-squarefree, all with 3, 4 or 5 | n) in {full_time:.1?}; n <= 60 in {smoke_time:.2?}"
    ))
}

fn tate_golden() -> Outcome {
    let f = f5();
    for d in 1..=3u32 {
        let (e, p) = xy_family(d);
        let terms = eds_range(&e, &p, 4, Strategy::DivisionRecurrence).map_err(err)?;
        let t_d = Poly::monomial(&f, 1, d as usize);
        let b: Vec<&Poly> = terms.iter().map(|t| t.b().unwrap()).collect();
        ensure(
            b[..3].iter().all(|x| x.is_one()) && b[3] == &t_d,
            format!("d = {d}: B_1..B_4 = {b:?}"),
        )?;
    }
    let (e, p) = xy_family(2);
    let mut cfg = ScanConfig::new(e, p);
    cfg.range = 1..=12;
    let row = scan(&cfg).map_err(err)?.remove(3);
    ensure(
        row.deg_b == 2 && row.squarefree == Some(false) && row.ell_max >= 2,
        format!("scan row 4: {row:?}"),
    )?;
    Ok("B_1 = B_2 = B_3 = 1, B_4 = t^d for d = 1, 2, 3; scan row 4 has l = 2".into())
}

fn bound_values() -> Outcome {
    let g = generic_exponent_bound(0, 6, 1).map_err(err)?;
    ensure(
        (g.c, g.n_max, g.ell_max) == (Some(4), Some(33), Some(16)),
        format!("generic {g:?}"),
    )?;
    let r = refined_exponent_bound(4, 4);
    ensure(r.ell_max == Some(15), format!("refined {r:?}"))?;
    let p = prop19_bounds(10, 1, 6).map_err(err)?;
    ensure(
        (p.ell_max, p.deg_b_max, p.n_max) == (Some(40), Some(305), Some(1220)),
        format!("prop19 {p:?}"),
    )?;
    Ok(format!(
        "generic (C 4, n 33, l 16; n before floor {}), refined 15, prop19 (40, 305, 1220)",
        g.unfloored[0].1
    ))
}

fn syzygy_constant() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let primes = [5u32, 7, 11, 13, 17, 19, 23];
    let mut count = 0;
    let mut used = std::collections::BTreeSet::new();
    while count < 120 {
        let p = primes[rng.gen_range(0..primes.len())];
        let f = Field::prime(p).unwrap();
        let a = random_ratfunc(&f, &mut rng, 3);
        let b = random_ratfunc(&f, &mut rng, 3);
        let Ok(e) = Curve::short(a.clone(), b.clone()) else {
            continue;
        };
        let cubic = BinaryCubic::klein(&a, &b);
        let cov = covariants(&cubic).map_err(err)?;
        ensure(cov.syzygy_holds(&cubic), format!("syzygy fails for a = {a}, b = {b}"))?;
        let ratio = &cov.disc_f / e.discriminant();
        ensure(
            ratio == RatFunc::from_i64(&f, 16),
            format!("discF/Delta = {ratio} over F_{p}"),
        )?;
        used.insert(p);
        count += 1;
    }
    Ok(format!("{count} instances over F_p, p in {used:?}; discF = 16 Delta_E"))
}

fn siegel_chain() -> Outcome {
    let (e, _) = example();
    let f = f5();
    let eb = base_change_curve(&e, &Substitution::power(&f, 2).map_err(err)?).map_err(err)?;
    let p = parse_point("t^2;t^4", &eb).map_err(err)?;
    let alphas: [RatFunc; 3] = two_torsion_x(&eb)
        .map_err(err)?
        .try_into()
        .map_err(|_| "expected three rational 2-torsion points".to_string())?;
    let d = siegel_z(&eb, &p, &alphas, SiegelMode::Exact).map_err(err)?;
    ensure(d.is_exact(), "A_P - alpha_i B_P^2 not exact squares")?;
    ensure(d.bb_holds(), "pairwise identity fails")?;
    ensure(d.reconstruction_matches().map_err(err)?, "reconstruction fails")?;
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for k in 0..50 {
        let f = Field::prime([5u32, 7, 11, 13][k % 4]).unwrap();
        let s = split_torsion_sample(&f, &mut rng, 2, k % 2 == 1).map_err(err)?;
        let d = siegel_z(&s.curve, &s.p, &s.alphas, SiegelMode::Exact).map_err(err)?;
        ensure(
            d.bb_holds() && d.reconstruction_matches().map_err(err)?,
            format!("random instance {k} fails"),
        )?;
    }
    Ok("base-changed example exact, both signs reconstruct x(P); 50 random split instances".into())
}

fn invariant_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = Field::prime(7).unwrap();
    for _ in 0..200 {
        let x = random_ratfunc(&f, &mut rng, 5);
        let y = random_ratfunc(&f, &mut rng, 5);
        let weighted: i64 = x.divisor().map_err(err)?.iter().map(|(v, n)| n * v.degree() as i64).sum();
        ensure(weighted == 0, format!("product formula fails for {x}"))?;
        let hx = x.height().map_err(err)?;
        ensure(hx == x.inv().map_err(err)?.height().map_err(err)?, format!("h(1/x) for {x}"))?;
        let hy = y.height().map_err(err)?;
        ensure((&x * &y).height().map_err(err)? <= hx + hy, "h(xy) subadditivity")?;
        let sum = &x + &y;
        ensure(sum.is_zero() || sum.height().map_err(err)? <= hx + hy, "h(x+y) subadditivity")?;
    }
    let mut mason = 0;
    while mason < 200 {
        let den = random_nonzero_poly(&f, &mut rng, 3);
        let a = RatFunc::new(random_nonzero_poly(&f, &mut rng, 6), den.clone()).map_err(err)?;
        let b = RatFunc::new(random_nonzero_poly(&f, &mut rng, 6), den).map_err(err)?;
        let c = -(&a + &b);
        if c.is_zero() {
            continue;
        }
        let r = mason_check(&a, &b, &c, 0).map_err(err)?;
        if r.pth_power_escape {
            continue;
        }
        ensure(r.holds, format!("Mason fails: {r:?}"))?;
        mason += 1;
    }
    let mut rigidity_checks = 0;
    for (name, (e, p)) in [("example", example()), ("y^2 + xy = x^3 - t^4", xy_family(2))] {
        let terms = eds_range(&e, &p, 60, Strategy::DivisionRecurrence).map_err(err)?;
        let div = check_divisibility(&terms);
        ensure(div.holds(), format!("{name}: divisibility {:?}", div.violations))?;
        let rig = check_rigidity(&terms).map_err(err)?;
        let bad = rig.violations_prime_to(5);
        ensure(bad.is_empty(), format!("{name}: rigidity {bad:?}"))?;
        rigidity_checks += rig.checks;
    }
    for (e, q) in [example(), xy_family(1)] {
        let fe = frobenius_curve(&e, 1).map_err(err)?;
        let fq = frobenius_map(&q, 1);
        let base = eds_range(&e, &q, 20, Strategy::DivisionRecurrence).map_err(err)?;
        let lifted = eds_range(&fe, &fq, 20, Strategy::DivisionRecurrence).map_err(err)?;
        for (b, l) in base.iter().zip(&lifted) {
            ensure(l.b() == Some(&b.b().unwrap().pow(5)), format!("Frobenius transport at n = {}", b.n))?;
        }
    }
    Ok(format!(
        "heights on 200 pairs, Mason on {mason} triples, divisibility and rigidity (multipliers prime to p, {rigidity_checks} checks) for n <= 60, Frobenius transport n <= 20"
    ))
}

fn determinism(reference: Option<String>) -> Outcome {
    let reference = match reference {
        Some(r) => r,
        None => format_rows(&scan(&example_config(212)).map_err(err)?, OutputFormat::Tsv),
    };
    for threads in [1, 2, 8] {
        let mut cfg = example_config(212);
        cfg.threads = threads;
        let out = format_rows(&scan(&cfg).map_err(err)?, OutputFormat::Tsv);
        ensure(out == reference, format!("{threads} threads differ"))?;
    }
    let cli = |seed: &str| {
        let args = ["edsfq", "scan", "--p", "5", "--curve", EXAMPLE_CURVE, "--point", "t;t^2", "--range", "1..80", "--json", "--prune", "--seed", seed, "--threads", "2"];
        let mut out = Vec::new();
        let code = edsfq::harness::cli::run(args, &mut out, &mut Vec::new());
        (code, out)
    };
    let (a, b) = (cli("11"), cli("11"));
    ensure(a.0 == 0 && a == b, "repeated CLI runs differ")?;
    Ok("1..212 byte-identical for 1, 2, 8 threads; repeated seeded CLI runs identical".into())
}

fn main() {
    let mut full = None;
    let results: Vec<(&str, Outcome)> = vec![
        ("EDS golden values", golden_eds()),
        ("worked example scan", example_scan(&mut full)),
        ("y^2 + xy = x^3 - t^{2d} golden values", tate_golden()),
        ("bound calculators", bound_values()),
        ("syzygy constant", syzygy_constant()),
        ("Siegel chain", siegel_chain()),
        ("invariant suites", invariant_suites()),
        ("determinism", determinism(full)),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
