use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{squarefree_decomp, PlaceSet, Poly};
use crate::curve::{Curve, Point};
use crate::eds::{term_from_point, EdsModel, EdsTerm, Strategy};
use crate::error::{Error, Result};

pub const TSV_HEADER: &str = "#n\tdegB\tsquarefree\tell_max\tflagged";

/// One scanned index. `squarefree` is `None` when the test was skipped by pruning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u64,
    #[serde(rename = "degB")]
    pub deg_b: u64,
    pub squarefree: Option<bool>,
    pub ell_max: u64,
    pub flagged: bool,
}

impl ScanRow {
    /// The flag predicate, recomputed from the stored fields.
    pub fn flag_from_fields(&self, moduli: &[u64]) -> bool {
        self.deg_b == 0 || (self.squarefree == Some(false) && !moduli.iter().any(|m| self.n % m == 0))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Tsv,
    Json,
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub curve: Curve,
    pub point: Point,
    pub range: RangeInclusive<u64>,
    /// Places stripped from `B_n` before testing.
    pub s: PlaceSet,
    pub moduli: Vec<u64>,
    pub prune: bool,
    /// Compute every row in full and check each pruning decision against it.
    pub verify_pruning: bool,
    pub strategy: Strategy,
    pub threads: usize,
    pub format: OutputFormat,
}

impl ScanConfig {
    pub fn new(curve: Curve, point: Point) -> ScanConfig {
        ScanConfig {
            curve,
            point,
            range: 1..=crate::bounds::SCAN_CEILING,
            s: PlaceSet::infinity_only(),
            moduli: vec![3, 4, 5],
            prune: false,
            verify_pruning: false,
            strategy: Strategy::DivisionRecurrence,
            threads: 1,
            format: OutputFormat::Tsv,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.range.is_empty() || *self.range.start() == 0 {
            return Err(Error::Precondition("range must be a nonempty subset of 1..".into()));
        }
        if self.moduli.iter().any(|&m| m < 2) {
            return Err(Error::Precondition("pruning moduli must be >= 2".into()));
        }
        if self.threads == 0 {
            return Err(Error::Precondition("thread count must be >= 1".into()));
        }
        Ok(())
    }
}

struct Analysis {
    row: ScanRow,
    has_simple: bool,
}

fn away_from(b: &Poly, s: &PlaceSet) -> Poly {
    s.finite_places().iter().fold(b.clone(), |acc, pi| acc.strip(pi).0)
}

fn analyze(n: u64, b: &Poly, moduli: &[u64]) -> Result<Analysis> {
    let deg_b = b.degree().unwrap_or(0) as u64;
    if deg_b == 0 {
        return Ok(Analysis {
            row: ScanRow { n, deg_b, squarefree: Some(true), ell_max: 0, flagged: true },
            has_simple: false,
        });
    }
    let d = squarefree_decomp(b)?;
    let squarefree = d.parts.iter().all(|(_, e)| *e == 1);
    let ell_max = d.parts.iter().fold(0, |g, (_, e)| num_integer::gcd(g, *e));
    let mut row = ScanRow { n, deg_b, squarefree: Some(squarefree), ell_max, flagged: false };
    row.flagged = row.flag_from_fields(moduli);
    Ok(Analysis {
        row,
        has_simple: d.parts.iter().any(|(_, e)| *e == 1),
    })
}

fn pruned_row(n: u64, b: &Poly) -> ScanRow {
    ScanRow {
        n,
        deg_b: b.degree().unwrap_or(0) as u64,
        squarefree: None,
        ell_max: 1,
        flagged: false,
    }
}

fn b_of(term: EdsTerm) -> Result<Poly> {
    let n = term.n;
    term.coords
        .map(|c| c.b)
        .ok_or_else(|| Error::Precondition(format!("{n}P = O; the scan needs a point of infinite order")))
}

/// Computes `B_n` for each requested index, in order.
fn denominators(cfg: &ScanConfig, ns: &[u64]) -> Result<Vec<Poly>> {
    let (e, p) = (&cfg.curve, &cfg.point);
    let top = ns.iter().copied().max().unwrap_or(1);
    match cfg.strategy {
        Strategy::DivisionRecurrence => {
            let model = EdsModel::new(e, p)?;
            if model.is_two_torsion() {
                return Err(Error::Precondition("2P = O; the scan needs a point of infinite order".into()));
            }
            let table = model.psi_table(top as usize + 2);
            ns.par_iter()
                .map(|&n| b_of(model.term_from_table(&table, n as usize, false)?))
                .collect()
        }
        Strategy::Ladder => {
            EdsModel::new(e, p)?;
            ns.par_iter()
                .map(|&n| b_of(term_from_point(n, &e.mul_unchecked(n as i64, p))?))
                .collect()
        }
        Strategy::IterativeAddition => {
            EdsModel::new(e, p)?;
            let mut out = Vec::with_capacity(ns.len());
            let mut cur = Point::Infinity;
            let mut next = 1;
            for &n in ns {
                while next <= n {
                    cur = e.add_unchecked(&cur, p);
                    next += 1;
                }
                out.push(b_of(term_from_point(n, &cur)?)?);
            }
            Ok(out)
        }
    }
}

fn scan_inner(cfg: &ScanConfig) -> Result<Vec<ScanRow>> {
    let char_p = cfg.curve.field().characteristic() as u64;
    let (lo, hi) = (*cfg.range.start(), *cfg.range.end());
    let mut moduli = cfg.moduli.clone();
    moduli.sort_unstable();
    moduli.dedup();

    let pruning = cfg.prune || cfg.verify_pruning;
    let seeds: Vec<u64> = if pruning {
        moduli.iter().copied().filter(|&m| m < hi).collect()
    } else {
        Vec::new()
    };
    let mut ns: Vec<u64> = seeds.iter().copied().filter(|&m| m < lo).collect();
    let first = ns.len();
    ns.extend(lo..=hi);
    let bs: Vec<Poly> = denominators(cfg, &ns)?
        .into_iter()
        .map(|b| away_from(&b, &cfg.s))
        .collect();

    let mut simple = std::collections::BTreeMap::new();
    for &m in &seeds {
        let i = ns.iter().position(|&n| n == m).unwrap();
        simple.insert(m, analyze(m, &bs[i], &moduli)?.has_simple);
    }
    let prunable = |n: u64| {
        simple
            .iter()
            .any(|(&m, &s)| s && m < n && n % m == 0 && (n / m) % char_p != 0)
    };

    let work: Vec<(u64, &Poly)> = ns[first..].iter().copied().zip(&bs[first..]).collect();
    work.par_iter()
        .map(|&(n, b)| {
            let skip = pruning && prunable(n);
            if skip && !cfg.verify_pruning {
                return Ok(pruned_row(n, b));
            }
            let full = analyze(n, b, &moduli)?.row;
            if skip {
                let predicted = pruned_row(n, b);
                if full.ell_max != 1 || full.flagged != predicted.flagged {
                    return Err(Error::Internal(format!(
                        "pruning predicted a simple factor in B_{n}, found ell_max = {}",
                        full.ell_max
                    )));
                }
            }
            Ok(full)
        })
        .collect()
}

/// Scans `B_n` over the configured range, one row per index in increasing order.
pub fn scan(cfg: &ScanConfig) -> Result<Vec<ScanRow>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| scan_inner(cfg))
}

pub fn format_rows(rows: &[ScanRow], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Tsv => {
            out.push_str(TSV_HEADER);
            out.push('\n');
            for r in rows {
                let sf = r.squarefree.map_or("-".to_string(), |s| s.to_string());
                out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.n, r.deg_b, sf, r.ell_max, r.flagged));
            }
        }
        OutputFormat::Json => {
            for r in rows {
                out.push_str(&serde_json::to_string(r).expect("rows serialize"));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::parser::{parse_curve, parse_point};

    fn example() -> ScanConfig {
        let f = Field::prime(5).unwrap();
        let e = parse_curve("0,-t*(t-2),0,2*t^2*(t+1),0", &f).unwrap();
        let p = parse_point("t;t^2", &e).unwrap();
        ScanConfig::new(e, p)
    }

    #[test]
    fn small_scan() {
        let mut cfg = example();
        cfg.range = 1..=30;
        let rows = scan(&cfg).unwrap();
        let flagged: Vec<u64> = rows.iter().filter(|r| r.flagged).map(|r| r.n).collect();
        assert_eq!(flagged, vec![1, 2]);
        assert_eq!(rows[2].deg_b, 2);
        assert!(rows.iter().all(|r| r.flagged == r.flag_from_fields(&cfg.moduli)));
        cfg.prune = true;
        let pruned = scan(&cfg).unwrap();
        assert!(pruned.iter().any(|r| r.squarefree.is_none()));
        assert_eq!(
            pruned.iter().map(|r| r.flagged).collect::<Vec<_>>(),
            rows.iter().map(|r| r.flagged).collect::<Vec<_>>()
        );
        cfg.verify_pruning = true;
        assert_eq!(scan(&cfg).unwrap(), rows);
    }

    #[test]
    fn strategies_agree() {
        let mut cfg = example();
        cfg.range = 5..=14;
        let reference = scan(&cfg).unwrap();
        for s in [Strategy::Ladder, Strategy::IterativeAddition] {
            cfg.strategy = s;
            assert_eq!(scan(&cfg).unwrap(), reference);
        }
    }

    #[test]
    fn bad_configs() {
        let mut cfg = example();
        cfg.range = 0..=3;
        assert!(scan(&cfg).is_err());
        cfg.range = 1..=3;
        cfg.moduli = vec![1];
        assert!(scan(&cfg).is_err());
    }

    #[test]
    fn formats() {
        let rows = vec![ScanRow { n: 7, deg_b: 3, squarefree: None, ell_max: 1, flagged: false }];
        assert_eq!(format_rows(&rows, OutputFormat::Tsv), format!("{TSV_HEADER}\n7\t3\t-\t1\tfalse\n"));
        assert_eq!(
            format_rows(&rows, OutputFormat::Json),
            "{\"n\":7,\"degB\":3,\"squarefree\":null,\"ell_max\":1,\"flagged\":false}\n"
        );
    }
}
