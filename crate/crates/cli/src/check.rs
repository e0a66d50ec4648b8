//! Recomputes every published reference value.

use std::collections::BTreeMap;

use enumgeom::conics::{deg_conics, fixed_point_census};
use enumgeom::invariants::surface_invariants;
use enumgeom::planes::ProblemSpec;
use num_bigint::BigInt;

use crate::envelope::{Envelope, Status};

/// `(label, degrees, r, k, [deg, c2, A, B, e, K^2, chi])`
type Reference = (&'static str, &'static [u32], u32, u32, [i64; 7]);

const SURFACES: [Reference; 4] = [
    ("cubic threefold", &[3], 4, 1, [45, 27, 6, -9, 27, 45, 6]),
    ("quintic fourfold", &[5], 5, 1, [6125, 2875, 66, -33, 309375, 496125, 67125]),
    ("two quadrics in P^5", &[2, 2], 5, 1, [32, 16, 3, -6, 0, 0, 0]),
    ("cubic fivefold", &[3], 6, 2, [2835, 1701, 13, -14, 13041, 25515, 3213]),
];

const FIELDS: [&str; 7] = ["deg", "c2", "A", "B", "e", "K2", "chi"];

struct Anchor {
    name: String,
    expected: BigInt,
    got: Result<BigInt, String>,
}

fn anchors() -> Vec<Anchor> {
    let mut out = Vec::new();
    for (label, degrees, r, k, want) in SURFACES {
        let rep =
            ProblemSpec::new(degrees.to_vec(), r, k).and_then(|s| surface_invariants(&s)).map_err(|e| e.to_string());
        for (i, field) in FIELDS.iter().enumerate() {
            let got = rep.as_ref().map_err(Clone::clone).map(|rep| {
                [&rep.deg_f, &rep.c2_integral, &rep.a, &rep.b, &rep.euler, &rep.k_delta, &rep.chi_o][i].clone()
            });
            out.push(Anchor { name: format!("{label} {field}"), expected: want[i].into(), got });
        }
    }
    out.push(Anchor {
        name: "gamma((3), 5, 2)".into(),
        expected: 1.into(),
        got: ProblemSpec::hypersurface(3, 5, 2).map(|s| s.gamma().into()).map_err(|e| e.to_string()),
    });
    out.push(Anchor {
        name: "quartic surfaces containing a conic".into(),
        expected: 2508.into(),
        got: deg_conics(4, 3).map_err(|e| e.to_string()),
    });
    out.push(Anchor {
        name: "fixed conics in P^3".into(),
        expected: 24.into(),
        got: fixed_point_census(3).map(BigInt::from).map_err(|e| e.to_string()),
    });
    out
}

/// Envelope with one result per anchor, named `NN name` so JSON key order
/// matches the check order. The status is `inconsistency` if any anchor fails.
pub fn paper_check() -> Envelope {
    let mut inputs = BTreeMap::new();
    inputs.insert("subcommand".to_string(), "paper-check".to_string());
    let mut env = Envelope::new(inputs);
    let mut failures = 0;
    for (i, a) in anchors().into_iter().enumerate() {
        let (value, pass) = match &a.got {
            Ok(v) => (v.to_string(), *v == a.expected),
            Err(e) => (format!("error: {e}"), false),
        };
        if !pass {
            failures += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        env.push(&format!("{:02} {}", i + 1, a.name), value, &format!("{verdict}, expected {}", a.expected));
    }
    if failures > 0 {
        env.status = Status::Inconsistency;
        env.error = Some(format!("{failures} reference values not reproduced"));
    }
    env
}

pub fn render_lines(env: &Envelope) -> String {
    let mut out = String::new();
    for (name, e) in &env.results {
        let (verdict, expected) = e.provenance.split_once(", ").unwrap_or((&e.provenance, ""));
        let name = name.split_once(' ').map_or(name.as_str(), |(_, n)| n);
        out.push_str(&format!("{verdict} {name}: {} ({expected})\n", e.value));
    }
    let passed = env.results.iter().filter(|(_, e)| e.provenance.starts_with("PASS")).count();
    out.push_str(&format!("{passed}/{} reference values reproduced\n", env.results.len()));
    out
}
