use std::path::{Path, PathBuf};
use std::process::Command;

use sutured::cli::{run, EXIT_INVALID, EXIT_OK, EXIT_USAGE};
use sutured::diagram::HeegaardDiagram;
use sutured::fixtures::fixture;

fn fx(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = vec![];
    let mut err = vec![];
    let mut full = vec!["sutured"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("sutured-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn bsda_of_the_identity() {
    let (code, out, _) = call(&["bsda", &fx("identity_n2")]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "degree 0 (2 -> 2)");
    assert_eq!(
        &lines[1..],
        [
            "out{} <- in{}: 1",
            "out{1} <- in{1}: 1",
            "out{2} <- in{2}: 1",
            "out{1,2} <- in{1,2}: 1"
        ]
    );
}

#[test]
fn bsda_json_entries_are_one_based() {
    let (code, out, _) = call(&["bsda", &fx("identity_n1"), "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], 0);
    let e = v["entries"].as_array().unwrap();
    assert_eq!(e.len(), 2);
    assert_eq!(e[1]["in"], serde_json::json!([1]));
    assert_eq!(e[1]["value"], "-1");
}

#[test]
fn bsda_single_entry() {
    let (code, out, _) = call(&["bsda", &fx("identity_n2"), "--in", "1", "--out", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("out{2} <- in{1}: 0"), "{out}");
    let (code, _, err) = call(&["bsda", &fx("identity_n2"), "--in", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("outside"));
}

#[test]
fn weighted_annulus_comparison() {
    let (code, out, _) = call(&[
        "alexander",
        &fx("annulus_n3_weighted"),
        "--ring",
        "zg",
        "--compare",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1 + t1 + t1^2"), "{out}");
    assert!(out.contains("unit: +t^0"));
    assert_eq!(out.lines().last(), Some("PASS"));
}

#[test]
fn alexander_rejects_zh() {
    let (code, _, _) = call(&["alexander", &fx("annulus_n1"), "--ring", "zh"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn fn_reports_kernel_data() {
    let (code, out, _) = call(&["fn", &fx("annulus_n3")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("prefactor: 3"));
    assert!(out.lines().last().unwrap().starts_with("PASS"));
}

#[test]
fn generators_listing() {
    let (code, out, _) = call(&["generators", &fx("mixed_2x2"), "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn validation_and_malformed_input() {
    assert_eq!(call(&["validate", &fx("twisted_f2_m3")]).0, EXIT_OK);
    let d = scratch("bad");
    let bad = d.join("bad.json");
    std::fs::write(&bad, "{\n  \"group\": 3\n}").unwrap();
    let (code, _, err) = call(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("line 2"), "{err}");
    let mut h = fixture("identity_n1").unwrap();
    h.points[0].sign = 3;
    let inv = d.join("invalid.json");
    std::fs::write(&inv, h.to_json()).unwrap();
    let (code, out, _) = call(&["validate", inv.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(out.starts_with("error:"));
    assert_eq!(call(&["bsda", inv.to_str().unwrap()]).0, EXIT_INVALID);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["bsda"]).0, EXIT_USAGE);
    assert_eq!(call(&["bsda", "x.json", "--ring", "r"]).0, EXIT_USAGE);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("selftest"));
}

#[test]
fn glue_normalize_and_cap_write_diagrams() {
    let d = scratch("ops");
    let glued = d.join("glued.json");
    let (code, _, _) = call(&[
        "glue",
        &fx("halfproj_left"),
        &fx("halfproj_right"),
        "-o",
        glued.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let h = HeegaardDiagram::from_json(&std::fs::read_to_string(&glued).unwrap()).unwrap();
    assert!(h.validate().is_empty());
    let (code, out, _) = call(&["normalize", glued.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(HeegaardDiagram::from_json(&out).unwrap().has_roles());
    let (code, out, _) = call(&["disjoint", &fx("identity_n1"), &fx("identity_n2")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(HeegaardDiagram::from_json(&out).unwrap().n0(), 3);
    let (code, out, _) = call(&["cap", &fx("identity_n2"), "--in", "1", "--out", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(HeegaardDiagram::from_json(&out).unwrap().is_ordinary());
    assert_eq!(
        call(&["glue", &fx("identity_n1"), &fx("identity_n2")]).0,
        EXIT_INVALID
    );
}

#[test]
fn fixture_export_matches_shipped_files() {
    let d = scratch("fixtures");
    let (code, _, _) = call(&["fixtures", "-o", d.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let shipped = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut n = 0;
    for e in std::fs::read_dir(&d).unwrap() {
        let p = e.unwrap().path();
        let name = p.file_name().unwrap();
        assert_eq!(
            std::fs::read(&p).unwrap(),
            std::fs::read(shipped.join(name)).unwrap(),
            "{name:?}"
        );
        n += 1;
    }
    assert_eq!(n, std::fs::read_dir(&shipped).unwrap().count());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sutured");
    let ok = Command::new(bin)
        .args(["bsda", &fx("identity_n2")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("out{1,2} <- in{1,2}: 1"));
    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    let cmp = Command::new(bin)
        .args([
            "alexander",
            &fx("annulus_n3_weighted"),
            "--ring",
            "zg",
            "--compare",
        ])
        .output()
        .unwrap();
    assert_eq!(cmp.status.code(), Some(EXIT_OK));
}

#[test]
fn output_is_deterministic() {
    let a = call(&["bsda", &fx("twisted_f2_m3"), "--ring", "qh"]);
    let b = call(&["bsda", &fx("twisted_f2_m3"), "--ring", "qh"]);
    assert_eq!(a, b);
}
