//! Scans B_1..B_N for perfect powers. Usage: perfect_power_scan [N] [threads]

use edsfq::algebra::Field;
use edsfq::harness::{format_rows, scan, OutputFormat, ScanConfig};
use edsfq::parser::{parse_curve, parse_point};

fn main() -> edsfq::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(60);
    let threads: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let f = Field::prime(5)?;
    let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f)?;
    let p = parse_point("t;t^2", &e)?;
    let mut cfg = ScanConfig::new(e, p);
    cfg.range = 1..=n;
    cfg.prune = true;
    cfg.threads = threads;
    let rows = scan(&cfg)?;
    print!("{}", format_rows(&rows, OutputFormat::Tsv));

    let flagged: Vec<u64> = rows.iter().filter(|r| r.flagged).map(|r| r.n).collect();
    eprintln!("flagged: {flagged:?}");
    Ok(())
}
