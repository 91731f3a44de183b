use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn kaehler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kaehler")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = kaehler(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn scheme_info_reports_degree_and_hf() {
    let v = json(&["scheme", "info", &fixture("two_lines.json")]);
    assert_eq!(v["scheme"]["deg"], 5);
    assert_eq!(v["scheme"]["r"], 2);
    assert_eq!(ints(&v["scheme"]["hf"]), vec![1, 3, 5, 5]);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "kaehler", "hf", "conic.json", "--m", "1"];
    let path = fixture("conic.json");
    let args: Vec<&str> = args.iter().map(|a| if *a == "conic.json" { path.as_str() } else { a }).collect();
    let a = kaehler(&args);
    let b = kaehler(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn table_and_json_agree() {
    let f = fixture("two_lines.json");
    let v = json(&["kaehler", "hf", &f, "--m", "1"]);
    let h = &v["results"][0]["value"];
    assert_eq!(ints(&h["values"]), vec![0, 3, 8, 10, 7, 5, 5]);
    assert_eq!(h["ri"], 5);
    let table = stdout(&kaehler(&["kaehler", "hf", &f, "--m", "1"]));
    assert!(table.contains("0 3 8 10 7 5 5  hp 5  ri 5"), "{table}");
}

#[test]
fn submodule_flags() {
    let f = fixture("complete_intersection_f3.json");
    let cases: [(&str, &[i64]); 3] = [
        ("--torsion", &[0, 0, 0, 1, 0]),
        ("--koszul", &[0, 0, 3, 4, 4]),
        ("--euler-kernel", &[0, 0, 3, 5, 4]),
    ];
    for (flag, want) in cases {
        let v = json(&["kaehler", "hf", &f, flag]);
        let got = ints(&v["results"][0]["value"]["values"]);
        assert_eq!(&got[..want.len()], want, "{flag}");
    }
}

#[test]
fn checks_and_formulas() {
    let v = json(&["check", "cbp", &fixture("conic.json"), "--d", "1"]);
    assert!(v["results"].as_array().unwrap().iter().any(|e| e["value"] == true));
    let v = json(&["check", "curvilinear", &fixture("curvilinear_quartic.json")]);
    assert!(v.to_string().contains("CurvilinearNotSmooth"), "{v}");
    let v = json(&["formula", "hp", &fixture("fat_points_p2.json"), "--m", "3"]);
    assert_eq!(v["results"][0]["value"], 4);
    assert_eq!(v["results"][0]["ok"], true);
    let v = json(&["formula", "local", "--n", "2", "--k", "3", "--m", "1"]);
    assert!(v["results"].as_array().unwrap().iter().all(|e| e["ok"] != false));
}

#[test]
fn exit_codes() {
    let f = fixture("two_lines.json");
    assert_eq!(kaehler(&["kaehler", "hf", &f, "--torsion", "--koszul"]).status.code(), Some(2));
    assert_eq!(kaehler(&["scheme", "info", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(kaehler(&["frobnicate"]).status.code(), Some(2));
    // a closed form that does not apply in characteristic 2
    assert_eq!(kaehler(&["formula", "local", "--n", "2", "--k", "2", "--m", "1", "--field", "F2"]).status.code(), Some(1));
    for sweep in ["char-gates", "worked-examples", "paper-examples"] {
        assert_eq!(kaehler(&["verify", "--sweep", sweep]).status.code(), Some(0), "{sweep}");
    }
}

#[test]
fn malformed_scheme_file_is_a_usage_error() {
    let dir = std::env::temp_dir().join(format!("kaehler-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"format": 1, "field": "Q", "n": 2, "ideal": ["X1 X2"]}"#).unwrap();
    let o = kaehler(&["scheme", "info", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::remove_dir_all(&dir).ok();
}
