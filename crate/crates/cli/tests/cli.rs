use std::path::Path;
use std::process::Command;

use hypvol_cli::{fmt6, run, EXIT_INVALID, EXIT_NOT_APPLICABLE, EXIT_OK};

/// Run with the given arguments; returns (exit code, stdout, stderr).
fn hv(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hypvol").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn row<'a>(table: &'a str, name: &str) -> &'a str {
    let first = |l: &str| l.split_whitespace().next().map(|w| w.trim_end_matches('*').to_string());
    table
        .lines()
        .find(|l| first(l).as_deref() == Some(name) && !l.contains(':'))
        .unwrap_or_else(|| panic!("no row {name}"))
}

#[test]
fn lob_of_pi_over_four() {
    let (code, out, _) = hv(&["lob", "--theta", "0.7853981633974483"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("value  0.457983"), "{out}");
    let (_, out, _) = hv(&["lob", "--theta", "0.7853981633974483", "--quadrature", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["value"].to_string(), "0.457983");
}

#[test]
fn two_bridge_golden() {
    let (code, out, _) = hv(&["link", "two-bridge", "--fraction", "55/17", "--jones", "1,2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("two_bridge_55_17.txt"));
    assert!(row(&out, "adams_twist").contains("16.042742"));
    assert!(row(&out, "agol_thurston").contains("20.298832"));

    let (_, json, _) = hv(&["link", "two-bridge", "--fraction", "55/17", "--format", "json"]);
    assert_eq!(json, golden("two_bridge_55_17.json"));
}

#[test]
fn prism_nine_report() {
    let (code, out, _) = hv(&["poly", "family", "--name", "prism", "--n", "9", "--bounds"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, golden("prism_9.txt"));
    assert!(out.contains("prism_atkinson vs all_trivalent: all_trivalent"));
    assert!(row(&out, "all_trivalent").contains("41 v_tet"));
    assert!(row(&out, "prism_atkinson").contains("23/2 v_oct"));
}

#[test]
fn constants_golden() {
    let (_, out, _) = hv(&["constants", "--format", "json"]);
    assert_eq!(out, golden("constants.json"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["link", "two-bridge", "--fraction", "89/34", "--format", "json"][..],
        &["poly", "family", "--name", "two-apex-pyramid", "--n", "7", "--bounds"],
        &["link", "twists", "--lengths", "1,-2,3,5,8,13,2,2,9", "--alternating", "--reduced"],
    ] {
        assert_eq!(hv(args), hv(args));
    }
}

#[test]
fn every_value_has_six_decimals() {
    let (_, out, _) = hv(&["poly", "family", "--name", "cube", "--bounds", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for b in v["bounds"].as_array().unwrap() {
        assert!(!b["citation"].as_str().unwrap().is_empty());
        if b["applicable"].as_bool().unwrap() {
            let text = b["value"].to_string();
            assert_eq!(text.split('.').nth(1).map(str::len), Some(6), "{text}");
        }
    }
}

#[test]
fn fmt6_rounds_to_nearest() {
    // A double is never exactly halfway at the sixth decimal (5e-7 is not
    // dyadic), so rounding is decided by the exact binary value.
    assert_eq!(fmt6(0.5), "0.500000");
    assert_eq!(fmt6(0.457_982_797_088_9), "0.457983");
    assert_eq!(fmt6(1.000_000_499_999), "1.000000");
    assert_eq!(fmt6(1.000_000_500_001), "1.000001");
    assert_eq!(fmt6(-1e-9), "0.000000");
}

#[test]
fn medial_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.json");
    let y = dir.path().join("y.json");
    let (x, y) = (x.to_str().unwrap(), y.to_str().unwrap());
    assert_eq!(hv(&["poly", "family", "--name", "prism", "--n", "5", "--out", x]).0, EXIT_OK);
    let (code, medial_out, _) = hv(&["poly", "medial", "--file", x, "--out", y, "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let (code, graph_out, _) = hv(&["poly", "graph", "--file", y, "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let a: serde_json::Value = serde_json::from_str(&medial_out).unwrap();
    let b: serde_json::Value = serde_json::from_str(&graph_out).unwrap();
    for key in ["V", "E", "F", "degrees", "faces"] {
        assert_eq!(a["census"][key], b["census"][key], "{key}");
    }
    // The dual of the medial of a prism is again 3-connected.
    let (code, _, _) = hv(&["poly", "dual", "--file", y, "--out", x]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(hv(&["poly", "graph", "--file", x, "--bounds"]).0, EXIT_OK);
}

#[test]
fn exit_codes() {
    assert_eq!(hv(&["frobnicate"]).0, EXIT_INVALID);
    assert_eq!(hv(&["lob", "--theta", "x"]).0, EXIT_INVALID);
    assert_eq!(hv(&["link", "two-bridge", "--fraction", "55/11"]).0, EXIT_INVALID);
    assert_eq!(hv(&["link", "two-bridge", "--fraction", "7/1"]).0, EXIT_INVALID);
    assert_eq!(hv(&["poly", "family", "--name", "prism"]).0, EXIT_INVALID);
    assert_eq!(hv(&["poly", "graph", "--file", "/nonexistent/map.json"]).0, EXIT_INVALID);
    assert_eq!(hv(&["--help"]).0, EXIT_OK);

    let (code, out, _) = hv(&["link", "twists", "--lengths", "3,4,4", "--bound", "adams_twist"]);
    assert_eq!(code, EXIT_NOT_APPLICABLE);
    assert!(out.contains("requires --alternating"));
    let args = ["link", "twists", "--lengths", "3,4,4", "--alternating", "--reduced", "--not-borromean"];
    let (code, out, _) = hv(&[&args[..], &["--bound", "adams_twist"]].concat());
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("16.042742"));
    let (code, _, err) = hv(&["link", "twists", "--lengths", "3,4,4", "--bound", "nope"]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("unknown bound"));
}

#[test]
fn invalid_map_file_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"darts": 4, "alpha": [1, 0, 3, 3], "sigma": [0, 1, 2, 3]}"#).unwrap();
    let (code, _, err) = hv(&["poly", "graph", "--file", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn census_flag_enables_white_face_bound() {
    let base = ["link", "twists", "--lengths", "3,4,4", "--format", "json"];
    let (_, out, _) = hv(&[&base[..], &["--census", "3:2,4:3"]].concat());
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let wf = v["bounds"].as_array().unwrap().iter().find(|b| b["name"] == "white_face").unwrap();
    assert_eq!(wf["exact"], "8 v_tet + 3 v_oct");
    let (_, out, _) = hv(&[&base[..], &["--census", "3:3,4:2"]].concat());
    assert!(out.contains("census mismatch") || out.contains("expected 18"), "{out}");
}

#[test]
fn augment_writes_polyhedron() {
    let dir = tempfile::tempdir().unwrap();
    let diag = dir.path().join("d.json");
    let poly = dir.path().join("p.json");
    let (diag, poly) = (diag.to_str().unwrap(), poly.to_str().unwrap());
    assert_eq!(hv(&["link", "two-bridge", "--fraction", "55/17", "--out", diag]).0, EXIT_OK);
    let (code, out, _) = hv(&["link", "augment", "--file", diag, "--out", poly, "--bounds", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["census"]["white faces"], serde_json::json!({"3": 2, "4": 3}));
    let p: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(poly).unwrap()).unwrap();
    assert_eq!(p["darts"], 36);
    assert_eq!(p["dark_faces"].as_array().unwrap().len(), 6);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hypvol");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["constants"]), Some(0));
    assert_eq!(status(&["poly"]), Some(2));
    assert_eq!(status(&["link", "twists", "--lengths", "3", "--bound", "twist_number"]), Some(3));
}
