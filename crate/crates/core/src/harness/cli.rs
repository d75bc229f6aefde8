//! `edsfq` command line: parsing, dispatch and output.

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{factor, Field, PlaceSet, Poly, RatFunc};
use crate::bounds::{self, BoundReport};
use crate::curve::{
    base_change_curve, frobenius_descend, frobenius_power_s, to_short_form,
    two_torsion_x, Curve, Point, Substitution,
};
use crate::eds::EdsModel;
use crate::error::{Error, Result};
use crate::harness::{format_rows, scan, OutputFormat, ScanConfig};
use crate::identities::{
    covariants, lambda_j, pth_power_case, siegel_z, split_torsion_sample, ternary_witness,
    BinaryCubic, BinaryForm, SiegelMode,
};
use crate::parser::{parse_curve, parse_point, parse_poly, parse_ratfunc};

#[derive(Parser, Debug)]
#[command(name = "edsfq", version, about = "Elliptic divisibility sequences over F_q(t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weierstrass invariants, discriminant factorization and Frobenius data.
    CurveInfo(CurveArgs),
    /// Terms B_n of the sequence attached to a point.
    Eds(EdsArgs),
    /// Perfect-power scan over a range of indices.
    Scan(ScanArgs),
    /// Explicit bounds on exponents and indices.
    Bounds {
        #[command(subcommand)]
        which: BoundsCommand,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Mason's inequality for g1 + g2 + g3 = 0.
    Mason(MasonArgs),
    /// Covariants and the syzygy of the cubic x^3 + a x + b.
    Syzygy(IdentityArgs),
    /// Siegel identities for a point on a curve with rational 2-torsion.
    Siegel(IdentityArgs),
    /// Frobenius descent E = Fr_{p^s}(E').
    Descend(CurveArgs),
}

#[derive(Args, Debug, Clone)]
struct CurveArgs {
    #[arg(long)]
    p: u32,
    /// Weierstrass coefficients "a1,a2,a3,a4,a6".
    #[arg(long)]
    curve: String,
    /// Point "x;y".
    #[arg(long)]
    point: Option<String>,
    /// Base change "t=u^e" of the curve; the point is read in the new variable, printed as t.
    #[arg(long)]
    subst: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct EdsArgs {
    #[command(flatten)]
    curve: CurveArgs,
    /// Index range "lo..hi", inclusive.
    #[arg(long, default_value = "1..10")]
    range: String,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[command(flatten)]
    curve: CurveArgs,
    #[arg(long, default_value = "1..212")]
    range: String,
    /// Monic irreducibles whose places are removed from B_n; infinity is always in S.
    #[arg(long = "S")]
    s: Option<String>,
    /// Skip the squarefree test for multiples of 3, 4, 5 once rigidity applies.
    #[arg(long)]
    prune: bool,
    /// Prune, but compute every row and check each pruning decision.
    #[arg(long = "no-prune-verify")]
    no_prune_verify: bool,
    /// Accepted for interface uniformity; the scan itself is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand, Debug)]
enum BoundsCommand {
    /// l <= 4 deg D, deg B <= 61 deg D / 2, n <= 732 deg D / (12 h(x(P)) - h(j)).
    Prop19 {
        #[arg(long)]
        deg_disc: u64,
        #[arg(long)]
        h_x: u64,
        #[arg(long)]
        h_j: u64,
    },
    /// C = 2g - 2 + |S|, n <= (2 kappa + 33 C)/4, l <= n/2.
    Generic {
        #[arg(long, default_value_t = 0)]
        genus: u64,
        /// Number of places in S, infinity included.
        #[arg(long)]
        s_size: u64,
        #[arg(long)]
        kappa: u64,
    },
    /// l <= 2 N + 2 H - 1.
    Refined {
        #[arg(long)]
        h_ab: u64,
        #[arg(long)]
        n_ab: u64,
    },
    /// n <= (29 deg D + 32 (n0(D) - 1)) / (h(x(P)) - h(j)/12).
    Eee {
        #[arg(long)]
        deg_disc: u64,
        #[arg(long)]
        n0: u64,
        #[arg(long)]
        h_x: u64,
        #[arg(long)]
        h_j: u64,
    },
    /// Bracket for the canonical height of P.
    Hhat {
        #[arg(long)]
        h_x: u64,
        #[arg(long)]
        h_j: u64,
    },
    /// h(a X^3 + b Y^2) <= h(a) + h(b) + 3 h(X) + 2 h(Y), or 2 kappa + 33 C.
    SumHeight {
        #[arg(long, default_value_t = 0)]
        h_a: u64,
        #[arg(long, default_value_t = 0)]
        h_b: u64,
        #[arg(long, default_value_t = 0)]
        h_x: u64,
        #[arg(long, default_value_t = 0)]
        h_y: u64,
        #[arg(long, requires = "c")]
        kappa: Option<u64>,
        #[arg(long, requires = "kappa")]
        c: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct MasonArgs {
    #[arg(long)]
    p: u32,
    #[arg(allow_hyphen_values = true)]
    g1: String,
    #[arg(allow_hyphen_values = true)]
    g2: String,
    #[arg(allow_hyphen_values = true)]
    g3: String,
    #[arg(long, default_value_t = 0)]
    genus: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct IdentityArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    curve: Option<String>,
    #[arg(long)]
    point: Option<String>,
    #[arg(long)]
    subst: Option<String>,
    /// Check this many random instances instead of a given curve.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

/// Ordered key/value output, printed as `key<TAB>value` lines or one JSON object.
#[derive(Default)]
struct Record(Vec<(String, Value)>);

impl Record {
    fn put(&mut self, k: &str, v: impl Into<Value>) -> &mut Self {
        self.0.push((k.to_string(), v.into()));
        self
    }

    fn emit(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            let map: serde_json::Map<String, Value> = self.0.iter().cloned().collect();
            writeln!(out, "{}", Value::Object(map))
        } else {
            for (k, v) in &self.0 {
                match v {
                    Value::String(s) => writeln!(out, "{k}\t{s}")?,
                    other => writeln!(out, "{k}\t{other}")?,
                }
            }
            Ok(())
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::syntax(0, msg)
}

fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| usage(format!("range '{s}' is not of the form lo..hi")))?;
    let num = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|_| usage(format!("bad range bound '{x}'")))
    };
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo == 0 || hi < lo {
        return Err(usage(format!("range '{s}' must satisfy 1 <= lo <= hi")));
    }
    Ok(lo..=hi)
}

fn parse_subst(s: &str, field: &Field) -> Result<Substitution> {
    let e = s
        .strip_prefix("t=u^")
        .and_then(|e| e.trim().parse::<usize>().ok())
        .ok_or_else(|| usage(format!("substitution '{s}' is not of the form t=u^e")))?;
    Substitution::power(field, e)
}

fn parse_places(s: &str, field: &Field) -> Result<PlaceSet> {
    let polys = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| parse_poly(x, field))
        .collect::<Result<Vec<Poly>>>()?;
    PlaceSet::new(polys, true)
}

struct Setup {
    field: Field,
    curve: Curve,
    point: Option<Point>,
}

fn setup(p: u32, curve: &str, point: Option<&str>, subst: Option<&str>) -> Result<Setup> {
    let field = Field::prime(p)?;
    let mut e = parse_curve(curve, &field)?;
    if let Some(s) = subst {
        e = base_change_curve(&e, &parse_subst(s, &field)?)?;
    }
    let pt = point.map(|s| parse_point(s, &e)).transpose()?;
    Ok(Setup { field, curve: e, point: pt })
}

fn setup_curve(a: &CurveArgs) -> Result<Setup> {
    setup(a.p, &a.curve, a.point.as_deref(), a.subst.as_deref())
}

fn need_point(s: &Setup) -> Result<&Point> {
    s.point
        .as_ref()
        .ok_or_else(|| usage("--point is required"))
}

/// `(f1)(f2)^2...` with the unit in front when it is not 1.
pub fn factored(f: &Poly) -> Result<String> {
    if f.is_constant() {
        return Ok(f.to_string());
    }
    let fac = factor(f)?;
    let mut s = if fac.unit == 1 { String::new() } else { fac.unit.to_string() };
    for (g, e) in &fac.factors {
        s.push_str(&format!("({g})"));
        if *e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    Ok(s)
}

fn show_form(f: &BinaryForm) -> String {
    let d = f.degree();
    let mut terms = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = match (d - i, i) {
            (0, 0) => String::new(),
            (a, 0) => format!("X^{a}"),
            (0, b) => format!("Y^{b}"),
            (a, b) => format!("X^{a}*Y^{b}"),
        };
        terms.push(if mono.is_empty() {
            format!("({c})")
        } else {
            format!("({c})*{mono}")
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn curve_info(a: &CurveArgs, out: &mut dyn Write) -> Result<()> {
    let s = setup_curve(a)?;
    let e = &s.curve;
    let mut r = Record::default();
    let names = ["a1", "a2", "a3", "a4", "a6"];
    for (n, c) in names.iter().zip(e.coefficients()) {
        r.put(n, c.to_string());
    }
    for (n, c) in [("b2", e.b2()), ("b4", e.b4()), ("b6", e.b6()), ("b8", e.b8()), ("c4", e.c4()), ("c6", e.c6())] {
        r.put(n, c.to_string());
    }
    let disc = e.discriminant();
    r.put("discriminant", disc.to_string());
    if let Some(d) = disc.as_poly() {
        r.put("discriminant_factored", factored(d)?);
    }
    r.put("j", e.j_invariant().to_string());
    r.put("integral", e.is_integral());
    r.put("short", e.is_short());
    match frobenius_power_s(e.j_invariant()) {
        Ok(k) => r.put("isotrivial", false).put("frobenius_s", k),
        Err(Error::Isotrivial) => r.put("isotrivial", true),
        Err(err) => return Err(err),
    };
    if let Some(Point::Affine { x, y }) = &s.point {
        r.put("x", x.to_string())
            .put("y", y.to_string())
            .put("h_x", x.height()?);
    }
    r.emit(a.json, out).map_err(io)
}

fn eds(a: &EdsArgs, out: &mut dyn Write) -> Result<()> {
    let s = setup_curve(&a.curve)?;
    let p = need_point(&s)?;
    let range = parse_range(&a.range)?;
    let terms = EdsModel::new(&s.curve, p)?.terms(*range.end(), true)?;
    if !a.curve.json {
        writeln!(out, "#n\tdegB\tB\tfactored").map_err(io)?;
    }
    for t in &terms[(*range.start() - 1) as usize..] {
        let (deg, b, fac) = match t.b() {
            None => (Value::Null, "O".to_string(), "O".to_string()),
            Some(b) => (json!(b.degree().unwrap_or(0)), b.to_string(), factored(b)?),
        };
        if a.curve.json {
            writeln!(out, "{}", json!({"n": t.n, "degB": deg, "B": b, "factored": fac})).map_err(io)?;
        } else {
            let deg = if deg.is_null() { "-".to_string() } else { deg.to_string() };
            writeln!(out, "{}\t{}\t{}\t{}", t.n, deg, b, fac).map_err(io)?;
        }
    }
    Ok(())
}

fn run_scan(a: &ScanArgs, out: &mut dyn Write) -> Result<()> {
    let s = setup_curve(&a.curve)?;
    let p = need_point(&s)?.clone();
    let mut cfg = ScanConfig::new(s.curve, p);
    cfg.range = parse_range(&a.range)?;
    if let Some(places) = &a.s {
        cfg.s = parse_places(places, &s.field)?;
    }
    cfg.prune = a.prune || a.no_prune_verify;
    cfg.verify_pruning = a.no_prune_verify;
    cfg.threads = a.threads;
    cfg.format = if a.curve.json { OutputFormat::Json } else { OutputFormat::Tsv };
    let rows = scan(&cfg)?;
    out.write_all(format_rows(&rows, cfg.format).as_bytes()).map_err(io)
}

fn bound_record(b: &BoundReport) -> Record {
    let mut r = Record::default();
    r.put("formula", b.formula.clone());
    for (k, v) in [("C", b.c), ("ell_max", b.ell_max), ("degB_max", b.deg_b_max), ("n_max", b.n_max), ("n_max_crude", b.n_max_crude)] {
        if let Some(v) = v {
            r.put(k, v);
        }
    }
    for (k, v) in &b.unfloored {
        r.put(&format!("{k}_unfloored"), v.clone());
    }
    if let Some(n) = &b.note {
        r.put("note", n.clone());
    }
    r
}

fn run_bounds(which: &BoundsCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    let rec = match *which {
        BoundsCommand::Prop19 { deg_disc, h_x, h_j } => bound_record(&bounds::prop19_bounds(deg_disc, h_x, h_j)?),
        BoundsCommand::Generic { genus, s_size, kappa } => {
            bound_record(&bounds::generic_exponent_bound(genus, s_size, kappa)?)
        }
        BoundsCommand::Refined { h_ab, n_ab } => bound_record(&bounds::refined_exponent_bound(h_ab, n_ab)),
        BoundsCommand::Eee { deg_disc, n0, h_x, h_j } => {
            bound_record(&bounds::eee_index_bound(deg_disc, n0, h_x, h_j)?)
        }
        BoundsCommand::Hhat { h_x, h_j } => {
            let (lo, hi) = bounds::hhat_bracket(h_x, h_j);
            let mut r = Record::default();
            r.put("formula", "h(x(P))/2 - h(j)/24 <= hhat(P) <= h(x(P))/2");
            r.put("lower", lo.to_string()).put("upper", hi.to_string());
            r
        }
        BoundsCommand::SumHeight { h_a, h_b, h_x, h_y, kappa, c } => {
            let mut r = Record::default();
            match (kappa, c) {
                (Some(k), Some(c)) => r
                    .put("formula", "2 kappa + 33 C")
                    .put("bound", bounds::sum_height_bound_kappa(k, c)),
                _ => r
                    .put("formula", "h(a) + h(b) + 3 h(X) + 2 h(Y)")
                    .put("bound", bounds::sum_height_bound(h_a, h_b, h_x, h_y)),
            };
            r
        }
    };
    rec.emit(json, out).map_err(io)
}

fn mason(a: &MasonArgs, out: &mut dyn Write) -> Result<()> {
    let f = Field::prime(a.p)?;
    let g = [&a.g1, &a.g2, &a.g3].map(|s| parse_ratfunc(s, &f));
    let [g1, g2, g3] = g;
    let rep = bounds::mason_check(&g1?, &g2?, &g3?, a.genus)?;
    let mut r = Record::default();
    r.put("height", rep.height_ratio)
        .put("places", rep.places.join(","))
        .put("place_count", rep.place_count)
        .put("place_degree", rep.place_degree)
        .put("bound", rep.bound)
        .put("pth_power_escape", rep.pth_power_escape)
        .put("holds", rep.holds);
    r.emit(a.json, out).map_err(io)
}

fn identity_setup(a: &IdentityArgs) -> Result<Setup> {
    let curve = a.curve.as_deref().ok_or_else(|| usage("--curve or --random is required"))?;
    setup(a.p, curve, a.point.as_deref(), a.subst.as_deref())
}

fn syzygy(a: &IdentityArgs, out: &mut dyn Write) -> Result<()> {
    let mut r = Record::default();
    if let Some(count) = a.random {
        let f = Field::prime(a.p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let mut ratios = std::collections::BTreeSet::new();
        let mut holds = 0;
        for _ in 0..count {
            let sample = split_torsion_sample(&f, &mut rng, 3, true)?;
            let cubic = BinaryCubic::klein(sample.curve.a4(), sample.curve.a6());
            let cov = covariants(&cubic)?;
            holds += cov.syzygy_holds(&cubic) as usize;
            ratios.insert(cov.disc_f.try_div(sample.curve.discriminant())?.to_string());
        }
        r.put("instances", count)
            .put("syzygy_holds", holds)
            .put("discF_over_disc", ratios.into_iter().collect::<Vec<_>>().join(","));
        return r.emit(a.json, out).map_err(io);
    }
    let s = identity_setup(a)?;
    let sf = to_short_form(&s.curve)?;
    let e = sf.curve();
    let cubic = BinaryCubic::klein(e.a4(), e.a6());
    let cov = covariants(&cubic)?;
    r.put("a", e.a4().to_string())
        .put("b", e.a6().to_string())
        .put("F", show_form(cubic.form()))
        .put("H", show_form(&cov.h))
        .put("G", show_form(&cov.g))
        .put("discF", cov.disc_f.to_string())
        .put("discF_over_disc", cov.disc_f.try_div(e.discriminant())?.to_string())
        .put("syzygy_holds", cov.syzygy_holds(&cubic));
    if let Some(q) = &s.point {
        let w = ternary_witness(e, &sf.to_short(q)?)?;
        let disc = e.discriminant().as_poly().cloned();
        r.put("X", w.x.to_string())
            .put("Y", w.y.to_string())
            .put("F_value", w.fval.to_string())
            .put("B_part", w.bp_part.to_string())
            .put("delta", w.delta.to_string())
            .put("normalization", w.normalization());
        if let Some(d) = disc {
            r.put("gcds_supported_on_disc", w.gcds_supported_on(&d)?);
        }
    }
    r.emit(a.json, out).map_err(io)
}

fn alphas_of(e: &Curve) -> Result<[RatFunc; 3]> {
    let roots = two_torsion_x(e)?;
    roots
        .try_into()
        .map_err(|v: Vec<RatFunc>| Error::Precondition(format!("{} rational 2-torsion points, need 3", v.len())))
}

fn siegel(a: &IdentityArgs, out: &mut dyn Write) -> Result<()> {
    let mut r = Record::default();
    if let Some(count) = a.random {
        let f = Field::prime(a.p)?;
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let mut ok = 0;
        for _ in 0..count {
            let sm = split_torsion_sample(&f, &mut rng, 2, false)?;
            let d = siegel_z(&sm.curve, &sm.p, &sm.alphas, SiegelMode::Exact)?;
            ok += (d.bb_holds() && d.reconstruction_matches()?) as usize;
        }
        r.put("instances", count).put("passed", ok);
        return r.emit(a.json, out).map_err(io);
    }
    let s = identity_setup(a)?;
    let p = need_point(&s)?;
    let alphas = alphas_of(&s.curve)?;
    let d = match siegel_z(&s.curve, p, &alphas, SiegelMode::Exact) {
        Err(Error::NotSquare(_)) => siegel_z(&s.curve, p, &alphas, SiegelMode::WithUnits)?,
        other => other?,
    };
    for i in 0..3 {
        r.put(&format!("alpha{}", i + 1), d.alphas[i].to_string())
            .put(&format!("z{}", i + 1), d.z[i].to_string())
            .put(&format!("u{}", i + 1), d.units[i]);
    }
    r.put("A_P", d.a_p.to_string())
        .put("B_P", d.b_p.to_string())
        .put("bb_holds", d.bb_holds());
    if let Some(z) = &d.z_plus {
        r.put("Z_plus", z.to_string());
    }
    if let Some(z) = &d.z_minus {
        r.put("Z_minus", z.to_string());
    }
    r.put("reconstruction_matches", d.reconstruction_matches()?);
    let (lambda, j) = lambda_j(&alphas)?;
    r.put("lambda", lambda.to_string()).put("j_from_lambda", j.to_string());
    if d.is_exact() {
        r.put("case", format!("{:?}", pth_power_case(&s.curve, &d)?));
    }
    r.emit(a.json, out).map_err(io)
}

fn descend(a: &CurveArgs, out: &mut dyn Write) -> Result<()> {
    let s = setup_curve(a)?;
    let (ed, k) = frobenius_descend(&s.curve)?;
    let mut r = Record::default();
    r.put("s", k)
        .put("curve", crate::parser::print_canonical(&ed))
        .put("j", ed.j_invariant().to_string());
    r.emit(a.json, out).map_err(io)
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("output: {e}"))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::CurveInfo(a) => curve_info(a, out),
        Command::Eds(a) => eds(a, out),
        Command::Scan(a) => run_scan(a, out),
        Command::Bounds { which, json } => run_bounds(which, *json, out),
        Command::Mason(a) => mason(a, out),
        Command::Syzygy(a) => syzygy(a, out),
        Command::Siegel(a) => siegel(a, out),
        Command::Descend(a) => descend(a, out),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
