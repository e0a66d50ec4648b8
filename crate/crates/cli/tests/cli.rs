use std::process::Command;

use enumgeom::Error;
use enumgeom_cli::{Envelope, Status};
use serde_json::Value;

fn enumgeom(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_enumgeom")).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn json(args: &[&str]) -> (Value, String, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (out, _, code) = enumgeom(&full);
    (serde_json::from_str(&out).expect("valid json"), out, code)
}

fn value<'a>(v: &'a Value, name: &str) -> &'a str {
    v["results"][name]["value"].as_str().unwrap_or_else(|| panic!("missing {name} in {v}"))
}

#[test]
fn planes_both_methods_agree() {
    let (v, _, code) = json(&["planes", "--d", "4", "--r", "3", "--k", "1", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(value(&v, "degree_dm"), "320");
    assert_eq!(value(&v, "degree_bott"), "320");
    assert_eq!(value(&v, "equal"), "true");
    assert_eq!(v["status"], "ok");
}

#[test]
fn cubic_threefold_surface() {
    let (v, _, code) = json(&["surface", "--d", "3", "--r", "4", "--k", "1"]);
    assert_eq!(code, 0);
    for (name, want) in [("deg", "45"), ("c2", "27"), ("A", "6"), ("B", "-9"), ("e", "27"), ("K2", "45"), ("chi", "6")]
    {
        assert_eq!(value(&v, name), want, "{name}");
    }
    for (_, entry) in v["results"].as_object().unwrap() {
        assert!(!entry["provenance"].as_str().unwrap().is_empty());
    }
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        vec!["surface", "--d", "5", "--r", "5", "--k", "1"],
        vec!["ci-planes", "--d", "2,2,3", "--r", "5", "--k", "1"],
        vec!["planes", "--d", "3", "--r", "3"],
        vec!["conics", "--d", "4", "--r", "3", "--method", "both"],
    ] {
        let (v, text, _) = json(&args);
        assert_eq!(enumgeom_cli::envelope::render_value(&v), text, "{args:?}");
    }
}

#[test]
fn quartic_surfaces_with_a_conic() {
    let (out, _, code) = enumgeom(&["conics", "--d", "4", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("degree") && l.contains(" 2508 ")), "{out}");
}

#[test]
fn regime_errors_exit_2_and_name_the_condition() {
    let (v, _, code) = json(&["planes", "--d", "3", "--r", "3", "--k", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "regime-error");
    assert!(v["error"].as_str().unwrap().contains("gamma must be positive"));

    let (v, _, code) = json(&["conics", "--d", "5", "--r", "4"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("boundary"));

    let (_, _, code) = enumgeom(&["conics", "--d", "4", "--r", "3", "--method", "dm"]);
    assert_eq!(code, 2);
    let (_, _, code) = enumgeom(&["planes", "--d", "4"]);
    assert_eq!(code, 2, "missing --r is a usage error");
    let (_, _, code) = enumgeom(&["sweep", "planes", "--d", "5..3", "--r", "3"]);
    assert_eq!(code, 2, "empty range");
}

#[test]
fn inconsistencies_map_to_exit_1() {
    let mut env = Envelope::new(Default::default());
    env.fail(&Error::Inconsistency("boom".into()));
    assert_eq!(env.status, Status::Inconsistency);
    assert_eq!(env.status.exit_code(), 1);
    env.fail(&Error::Regime("gamma must be positive".into()));
    assert_eq!(env.status.exit_code(), 2);
}

#[test]
fn paper_check_passes_everything() {
    let (out, _, code) = enumgeom(&["paper-check"]);
    assert_eq!(code, 0, "{out}");
    let pass = out.lines().filter(|l| l.starts_with("PASS ")).count();
    assert_eq!(pass, 31, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn seed_makes_bott_reproducible() {
    let args = ["planes", "--d", "6", "--r", "4", "--k", "1", "--method", "bott", "--seed", "99", "--format", "json"];
    let (a, _, _) = enumgeom(&args);
    let (b, _, _) = enumgeom(&args);
    assert_eq!(a, b);
    let (v, _, _) = json(&["planes", "--d", "6", "--r", "4", "--k", "1"]);
    let bott: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(value(&bott, "degree"), value(&v, "degree"));
}

#[test]
fn sweep_filters_regimes_and_orders_rows() {
    let (out, _, code) = enumgeom(&["sweep", "planes", "--d", "3..5", "--r", "3..5", "--k", "1"]);
    assert_eq!(code, 0);
    assert!(!out.contains('\r'));
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("d,r,k,gamma,delta,value,method"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows, vec![vec!["4", "3", "1", "1", "-1", "320", "dm"], vec!["5", "3", "1", "2", "-2", "1990", "dm"]]);
    for row in &rows {
        let (gamma, r, k): (i64, u32, u32) =
            (row[3].parse().unwrap(), row[1].parse().unwrap(), row[2].parse().unwrap());
        assert!(gamma > 0 && 2 * k < r);
    }
}

#[test]
fn sweep_shows_skipped_rows_on_request() {
    let (out, _, code) = enumgeom(&["sweep", "planes", "--d", "3..4", "--r", "3", "--show-skipped"]);
    assert_eq!(code, 0);
    assert_eq!(out, "d,r,k,gamma,delta,value,method\n3,3,1,0,0,,skipped:regime violation: gamma must be positive\n4,3,1,1,-1,320,dm\n");
}

#[test]
fn fano_degree_sweeps_hit_the_reference_surfaces() {
    let (hyper, _, code) = enumgeom(&["sweep", "fano-degree", "--d", "3..5", "--r", "4..6", "--k", "1..2"]);
    assert_eq!(code, 0);
    let (quadrics, _, code) = enumgeom(&["sweep", "fano-degree", "--d", "2,2", "--r", "5", "--k", "1"]);
    assert_eq!(code, 0);
    for (text, row) in [
        (&hyper, "3,4,1,-2,2,45,fano-degree"),
        (&hyper, "5,5,1,-2,2,6125,fano-degree"),
        (&hyper, "3,6,2,-2,2,2835,fano-degree"),
        (&quadrics, "\"2,2\",5,1,-2,2,32,fano-degree"),
    ] {
        assert!(text.lines().any(|l| l == row), "missing {row} in\n{text}");
    }
}

#[test]
fn csv_output_for_single_commands() {
    let (out, _, code) = enumgeom(&["fano-degree", "--d", "3", "--r", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("d,r,k,gamma,delta,value,method\n"));
    assert!(out.contains("3,4,1,-2,2,45,degree\n"));
}
