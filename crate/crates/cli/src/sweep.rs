//! CSV tables over parameter ranges. Rows are computed in parallel and
//! written in lexicographic `(d, r, k)` order.

use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use enumgeom::conics::deg_conics_seeded;
use enumgeom::planes::{deg_ci_planes, deg_fano, deg_planes_bott, deg_planes_dm, ProblemSpec};
use enumgeom::{Error, TorusWeights};
use itertools::Itertools;
use rayon::prelude::*;

use crate::envelope::{RowKey, CSV_HEADER};
use crate::{join, Method, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Planes,
    CiPlanes,
    FanoDegree,
    Surface,
    Conics,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// What to tabulate.
    #[arg(value_enum)]
    pub target: Target,
    /// Degree ranges, one per equation: `3..5`, or `2,2..4` for complete intersections.
    #[arg(long)]
    pub d: String,
    #[arg(long)]
    pub r: String,
    #[arg(long, default_value = "1")]
    pub k: String,
    #[arg(long, value_enum, default_value_t = Method::Dm)]
    pub method: Method,
    /// Also emit rows for specs outside the valid regime, with an empty value.
    #[arg(long)]
    pub show_skipped: bool,
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, Error> {
    let bad = || Error::Parameter(format!("cannot parse range {s:?}; expected N or A..B"));
    let range = match s.trim().split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            a.trim().parse().map_err(|_| bad())?..=b.trim().parse().map_err(|_| bad())?
        }
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            n..=n
        }
    };
    if range.is_empty() {
        return Err(Error::Parameter(format!("empty range {s:?}")));
    }
    Ok(range)
}

fn degree_lists(s: &str) -> Result<Vec<Vec<u32>>, Error> {
    let ranges = s.split(',').map(parse_range).collect::<Result<Vec<_>, _>>()?;
    Ok(ranges.into_iter().map(|r| r.collect::<Vec<_>>()).multi_cartesian_product().collect())
}

enum Cell {
    Value(String, &'static str),
    Skipped(String),
    Broken(String),
}

fn compute(target: Target, method: Method, degrees: &[u32], r: u32, k: u32, seed: u64) -> Cell {
    let result = (|| -> Result<(String, &'static str), Error> {
        let spec = ProblemSpec::new(degrees.to_vec(), r, k)?;
        let single = || match degrees {
            [d] => Ok(*d),
            _ => Err(Error::Parameter("planes takes a single degree".into())),
        };
        let bott =
            |d| -> Result<_, Error> { deg_planes_bott(d, r, k, &TorusWeights::seeded_distinct(r as usize + 1, seed)?) };
        Ok(match (target, method) {
            (Target::Planes, Method::Dm) => (deg_planes_dm(single()?, r, k)?.to_string(), "dm"),
            (Target::Planes, Method::Bott) => (bott(single()?)?.to_string(), "bott"),
            (Target::Planes, Method::Both) => {
                let d = single()?;
                let (a, b) = (deg_planes_dm(d, r, k)?, bott(d)?);
                if a != b {
                    return Err(Error::Inconsistency(format!("dm {a} != bott {b}")));
                }
                (a.to_string(), "dm=bott")
            }
            (Target::Planes | Target::Conics, Method::Closed) => {
                return Err(Error::Parameter("method closed is not available in sweeps".into()))
            }
            (Target::CiPlanes, _) => (deg_ci_planes(&spec)?.to_string(), "ci"),
            (Target::FanoDegree, _) => (deg_fano(&spec)?.to_string(), "fano-degree"),
            (Target::Surface, _) => (enumgeom::invariants::surface_invariants(&spec)?.chi_o.to_string(), "chi"),
            (Target::Conics, _) => unreachable!("conic rows are computed separately"),
        })
    })();
    match result {
        Ok((v, m)) => Cell::Value(v, m),
        Err(e) if e.is_regime() => Cell::Skipped(e.to_string()),
        Err(e) => Cell::Broken(e.to_string()),
    }
}

fn compute_conic(d: u32, r: u32, seed: u64) -> Cell {
    match deg_conics_seeded(d, r, [seed, seed + 1]) {
        Ok(v) => Cell::Value(v.to_string(), "bott"),
        Err(e) if e.is_regime() => Cell::Skipped(e.to_string()),
        Err(e) => Cell::Broken(e.to_string()),
    }
}

pub fn run(args: &SweepArgs, seed: u64) -> Output {
    match sweep_csv(args, seed) {
        Ok((stdout, broken)) => {
            let code = if broken.is_empty() { 0 } else { 1 };
            let stderr = broken.into_iter().map(|b| format!("inconsistency: {b}\n")).collect();
            Output { stdout, stderr, code }
        }
        Err(e) => Output { stdout: String::new(), stderr: format!("{e}\n"), code: if e.is_regime() { 2 } else { 1 } },
    }
}

/// CSV text plus the descriptions of rows that hit an internal inconsistency.
pub fn sweep_csv(args: &SweepArgs, seed: u64) -> Result<(String, Vec<String>), Error> {
    let degree_lists = degree_lists(&args.d)?;
    let rs: Vec<u32> = parse_range(&args.r)?.collect();
    let ks: Vec<u32> = if args.target == Target::Conics { vec![0] } else { parse_range(&args.k)?.collect() };
    if args.target == Target::Conics && degree_lists.iter().any(|d| d.len() != 1) {
        return Err(Error::Parameter("conic sweeps take a single degree range".into()));
    }
    let mut keys: Vec<(Vec<u32>, u32, u32)> =
        degree_lists.into_iter().cartesian_product(rs).cartesian_product(ks).map(|((d, r), k)| (d, r, k)).collect();
    keys.sort();

    let rows: Vec<(RowKey, Cell)> = keys
        .par_iter()
        .map(|(d, r, k)| {
            if args.target == Target::Conics {
                let row = RowKey { d: join(d), r: r.to_string(), ..RowKey::default() };
                return (row, compute_conic(d[0], *r, seed));
            }
            let mut row = RowKey { d: join(d), r: r.to_string(), k: k.to_string(), ..RowKey::default() };
            if let Ok(s) = ProblemSpec::new(d.clone(), *r, *k) {
                row.gamma = s.gamma().to_string();
                row.delta = s.delta().to_string();
            }
            let cell = compute(args.target, args.method, d, *r, *k, seed);
            (row, cell)
        })
        .collect();

    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Inconsistency(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    let mut broken = Vec::new();
    for (row, cell) in &rows {
        match cell {
            Cell::Value(v, m) => w.write_record(row.record(v, m)).map_err(csv_err)?,
            Cell::Skipped(reason) if args.show_skipped => {
                w.write_record(row.record("", &format!("skipped:{reason}"))).map_err(csv_err)?
            }
            Cell::Skipped(_) => {}
            Cell::Broken(msg) => {
                w.write_record(row.record("", &format!("inconsistency:{msg}"))).map_err(csv_err)?;
                broken.push(format!("d={} r={} k={}: {msg}", row.d, row.r, row.k));
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Inconsistency(format!("csv: {}", e.error())))?;
    Ok((String::from_utf8(bytes).expect("utf-8"), broken))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), 3..=5);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range(" 4 ").unwrap(), 4..=4);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
        assert_eq!(degree_lists("2,2..3").unwrap(), vec![vec![2, 2], vec![2, 3]]);
    }
}
