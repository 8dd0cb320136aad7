use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn connsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_connsys"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn result(out: &Output) -> serde_json::Value {
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).expect("report is JSON");
    report["result"].clone()
}

#[test]
fn width_with_certificate_re_evaluates() {
    let out = connsys(&["width", "branch", &data("c4-edges.json"), "--certificate"]);
    assert_eq!(out.status.code(), Some(0));
    let r = result(&out);
    assert_eq!(r["width"], 2);
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    std::fs::write(&cert, r["certificate"].to_string()).unwrap();
    let again = connsys(&["width", "branch", &data("c4-edges.json"), "--evaluate", cert.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(result(&again)["width"], 2);
}

#[test]
fn linear_certificate_re_evaluates() {
    let out = connsys(&["width", "linear", &data("k4-edges.json"), "--certificate"]);
    let r = result(&out);
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("order.json");
    std::fs::write(&cert, r["certificate"].to_string()).unwrap();
    let again = connsys(&["width", "linear", &data("k4-edges.json"), "--evaluate", cert.to_str().unwrap()]);
    assert_eq!(result(&again)["width"], r["width"]);
    let wrong = connsys(&["width", "branch", &data("k4-edges.json"), "--evaluate", cert.to_str().unwrap()]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn family_check_exit_codes() {
    let ok = connsys(&[
        "family",
        "check",
        "--kind",
        "ultrafilter",
        "-k",
        "1",
        "--family",
        &data("fX.json"),
        &data("c4-edges.json"),
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(result(&ok)["holds"], true);
    // {X} at k=2 misses every efficient singleton and its complement
    let bad = connsys(&[
        "family",
        "check",
        "--kind",
        "ultrafilter",
        "-k",
        "2",
        "--family",
        &data("fX.json"),
        &data("c4-edges.json"),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(result(&bad)["violated_axiom"], "Q4");
    let unknown =
        connsys(&["family", "check", "--kind", "nonsense", "--family", &data("fX.json"), &data("c4-edges.json")]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let out = connsys(&["validate", &data("bad-table.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("symmetry violated"));
    assert_eq!(connsys(&["validate", &data("missing.json")]).status.code(), Some(2));
    assert_eq!(connsys(&["width", "sideways", &data("c4-edges.json")]).status.code(), Some(2));
    assert_eq!(connsys(&["audit", &data("c4-edges.json")]).status.code(), Some(2));
}

#[test]
fn size_gate_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let edges: Vec<[usize; 2]> = (0..12).map(|i| [i, (i + 1) % 12]).collect();
    std::fs::write(
        &path,
        serde_json::json!({"function": {"type": "graph_edge_cut", "vertices": 12, "edges": edges}}).to_string(),
    )
    .unwrap();
    let out = connsys(&["enumerate", "ultrafilters", "-k", "2", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("CONNSYS_MAX_N"));
}

#[test]
fn audit_reports_the_antichain_finding() {
    let out = connsys(&["audit", "--theorems", "all", "-k", "0", &data("two-elem-trivial.json")]);
    assert_eq!(out.status.code(), Some(1));
    let reports = result(&out)["reports"].as_array().unwrap().clone();
    let tsc = reports.iter().find(|r| r["theorem"] == "TSC-no-antichain").unwrap();
    assert_eq!(tsc["status"], "counterexample_found");
    assert_eq!(tsc["witness"], serde_json::json!([["x", "y"]]));
    let keys: Vec<&String> = tsc.as_object().unwrap().keys().collect();
    assert_eq!(keys[..3], ["theorem", "status", "witness"]);
}

#[test]
fn reports_are_byte_identical_across_runs_and_worker_counts() {
    let args = ["enumerate", "ultrafilters", "-k", "2", &data("k4-edges.json")];
    let a = connsys(&args);
    let b = connsys(&args);
    assert_eq!(a.stdout, b.stdout);
    let audit = |p: &str| {
        connsys(&["audit", "--theorems", "all", "--k-range", "0..2", "--parallel", p, &data("c4-edges.json")])
    };
    let one = result(&audit("1"));
    let four = result(&audit("4"));
    assert_eq!(one, four);
    assert_eq!(audit("4").stdout, audit("4").stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = connsys(&["validate", &data("c4-edges.json")]);
    let report: serde_json::Value = serde_json::from_slice(&plain.stdout).unwrap();
    assert!(report["timing"].is_null());
    let timed = connsys(&["--timing", "validate", &data("c4-edges.json")]);
    let report: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(report["timing"]["elapsed_ms"].is_number());
}

#[test]
fn construction_commands() {
    let r = result(&connsys(&["construct", "ultrafilter", "-k", "2", &data("c4-edges.json")]));
    assert_eq!(
        r["family"],
        serde_json::json!({"k": 2, "sets": ["e1", "e1,e2", "e1,e2,e3", "e1,e4", "e1,e2,e4", "e1,e3,e4", "e1,e2,e3,e4"]})
    );
    let r = result(&connsys(&["ultrafilter-number", "-k", "1", &data("c4-edges.json")]));
    assert_eq!(r["u"], 1);
    let r = result(&connsys(&["ultrafilter-number", "-k", "2", &data("c4-edges.json")]));
    assert!(r["u"].is_null());
    let out = connsys(&["extend", "--family", &data("e1-fixed.json"), &data("c4-edges.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(result(&out)["family"]["sets"].as_array().unwrap().len(), 7);
    let r = result(&connsys(&["generate", "--subbase", &data("e1-fixed.json"), &data("c4-edges.json")]));
    assert_eq!(r["ultrafilter"], true);
    let r = result(&connsys(&["dilworth", "-k", "2", &data("c4-edges.json")]));
    assert_eq!(r["equal"], true);
    assert_eq!(r["max_antichain"].as_array().unwrap().len(), 4);
}

/// Golden reports: byte-for-byte. Regenerate with CONNSYS_BLESS=1.
#[test]
fn golden_reports() {
    let cases: [(&str, &[&str]); 4] = [
        ("width-c4.json", &["width", "branch", "tests/data/c4-edges.json", "--certificate"]),
        (
            "check-fx.json",
            &[
                "family",
                "check",
                "--kind",
                "ultrafilter",
                "-k",
                "1",
                "--family",
                "tests/data/fX.json",
                "tests/data/c4-edges.json",
            ],
        ),
        ("audit-two.json", &["audit", "--theorems", "all", "-k", "0", "tests/data/two-elem-trivial.json"]),
        ("enumerate-c4.json", &["enumerate", "ultrafilters", "-k", "2", "tests/data/c4-edges.json"]),
    ];
    let bless = std::env::var_os("CONNSYS_BLESS").is_some();
    for (name, args) in cases {
        let out = connsys(args);
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let want = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden {name}; run with CONNSYS_BLESS=1"));
        assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&want), "{name}");
    }
}
