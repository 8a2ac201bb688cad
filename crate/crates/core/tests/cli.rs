use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbifold-ring"));
    cmd.args(args).env_remove("ORBIFOLD_RING_MAX_TOTAL");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn orbifold-ring");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn cells(doc: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let strings = |v: &Value| -> Vec<String> {
        v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
    };
    let rows = strings(&doc["payload"]["rows"]);
    let cells = doc["payload"]["cells"].as_array().unwrap().iter().map(strings).collect();
    (rows, cells)
}

#[test]
fn chow_and_xi_goldens() {
    assert_eq!(run(&["table", "mult", "--ring", "chow", "1", "2", "3"]).1, golden("mult_chow_1_2_3.txt"));
    assert_eq!(run(&["table", "xi", "1", "2", "3"]).1, golden("xi_1_2_3.txt"));
    assert_eq!(
        run(&["--format", "json", "table", "mult", "1", "2", "3"]).1,
        golden("mult_model_1_2_3.json")
    );
}

#[test]
fn chow_and_model_tables_agree_under_xi() {
    for w in [&["1", "2", "3"][..], &["2", "3", "3"], &["1", "1", "3"], &["4", "6"]] {
        let xi_doc = json(&[&["table", "xi"][..], w].concat());
        let (labels, xi_cells) = cells(&xi_doc);
        let relabel: BTreeMap<String, String> =
            labels.iter().cloned().zip(xi_cells.iter().map(|c| c[0].clone())).collect();

        let (chow_rows, chow_cells) = cells(&json(&[&["table", "mult", "--ring", "chow"][..], w].concat()));
        let (model_rows, model_cells) = cells(&json(&[&["table", "mult", "--ring", "model"][..], w].concat()));
        let position: BTreeMap<&String, usize> = model_rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
        for (i, x) in chow_rows.iter().enumerate() {
            for (j, y) in chow_rows.iter().enumerate() {
                let cell = &chow_cells[i][j];
                let expected = relabel.get(cell).cloned().unwrap_or_else(|| cell.clone());
                let mi = position[&relabel[x]];
                let mj = position[&relabel[y]];
                assert_eq!(model_cells[mi][mj], expected, "w={w:?}: {x} ∪ {y}");
            }
        }
    }
}

#[test]
fn csv_output() {
    let (code, out, _) = run(&["--format", "csv", "table", "pairing", "1", "2", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], ",xi^0,xi^1,xi^2,xi^3,xi^4,xi^5");
    assert_eq!(lines[1], "xi^0,0,0,1/6,0,0,0");
    assert_eq!(lines.len(), 7);
    let (_, out, _) = run(&["--format", "csv", "table", "xi", "1", "2", "3"]);
    assert!(out.contains("\"eta(gamma=1/3, 0)\",xi^5,1\n"), "{out}");
    let (_, out, _) = run(&["--format", "csv", "verify", "2", "3"]);
    assert!(out.starts_with("check,weights,inputs,status,operands,lhs,rhs\n"));
    assert!(out.lines().skip(1).all(|l| l.contains(",pass,")), "{out}");
}

#[test]
fn poincare_and_info() {
    let (_, out, _) = run(&["poincare", "1", "2", "3"]);
    assert_eq!(out, "poincare, w = (1, 2, 3)\ndegree  multiplicity\n0       1\n1       4\n2       1\n");
    let info = json(&["info", "1", "1", "3"]);
    assert_eq!(info["kind"], "info");
    assert_eq!(info["payload"]["gorenstein"], false);
    assert_eq!(info["payload"]["total"], 5);
    let degrees: Vec<&str> = info["payload"]["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["degree"].as_str().unwrap())
        .collect();
    assert!(degrees.contains(&"4/3"), "{degrees:?}");
}

#[test]
fn verify_json_report() {
    let report = json(&["verify", "1", "2", "3"]);
    assert_eq!(report["kind"], "verify-report");
    assert_eq!(report["payload"]["status"], "pass");
    let checks = report["payload"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true && c["counterexample"].is_null()));
    let sweep = json(&["verify", "sweep", "--max-n", "2", "--max-weight", "3"]);
    assert_eq!(sweep["weights"], Value::Null);
    assert_eq!(sweep["payload"]["vectors"], 3 + 9 + 27);
    assert_eq!(sweep["payload"]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("orbifold-ring-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("deg.txt");
    let (code, out, _) = run(&["table", "deg", "--out", path.to_str().unwrap(), "1", "2", "3"]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("deg_model_1_2_3.txt"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn environment_cap() {
    let (code, _, err) = run_env(&["verify", "1", "2", "3"], &[("ORBIFOLD_RING_MAX_TOTAL", "5")]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds the verification cap 5"), "{err}");
    let (code, _, _) = run_env(&["verify", "--max-total", "6", "1", "2", "3"], &[("ORBIFOLD_RING_MAX_TOTAL", "5")]);
    assert_eq!(code, 0);
}

#[test]
fn single_weight_is_accepted() {
    let (code, out, _) = run(&["table", "mult", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("xi^1  xi^1  xi^2  xi^0\n"), "{out}");
    assert_eq!(run(&["verify", "5"]).0, 0);
}
