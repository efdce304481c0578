use std::process::{Command, Output};

fn grpconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grpconn")).args(args).env_remove("GRPCONN_ORDER_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_of_cyclic_five_order_sum() {
    let o = grpconn(&["invariants", "--group", "cyclic:5", "--kind", "ordersum"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for line in ["n: 5", "edges: 10", "min_degree: 4", "kappa: 4", "kappa_edge: 4", "diameter: 1", "complete: true"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn minimality_of_dihedral_commuting_reports_witness() {
    let o = grpconn(&["minimality", "--group", "dihedral:3", "--kind", "commuting", "--mode", "edge", "--per-edge"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("minimally edge connected: false"));
    assert!(text.contains("violating edges: [(0, 1), (0, 2), (1, 2)]"));
    assert!(text.contains("delete {1,2}: 1"));
    assert!(!text.contains("minimally connected:"));
}

#[test]
fn minimality_of_noninverse_z5_holds() {
    let o = grpconn(&["minimality", "--group", "cyclic:5", "--kind", "noninverse"]);
    let text = stdout(&o);
    assert!(text.contains("minimally edge connected: true"));
    assert!(text.contains("minimally connected: true"));
}

#[test]
fn oracle_command_is_clean_and_reproducible() {
    let args = ["oracle", "--trials", "200", "--seed", "1", "--max-n", "9"];
    let a = grpconn(&args);
    let b = grpconn(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("mismatches: 0"));
}

#[test]
fn graph_export_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let csv = dir.path().join("g.csv");
    let o = grpconn(&[
        "graph",
        "--group",
        "cyclic:4",
        "--kind",
        "ordersum",
        "--dot",
        dot.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv_text, "u,v\n0,1\n0,3\n1,2\n1,3\n2,3\n");
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
}

#[test]
fn file_group_spec_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("z3.txt");
    std::fs::write(&table, "# Z3\n3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let spec = format!("file:{}", table.display());
    let o = grpconn(&["invariants", "--group", &spec, "--kind", "noninverse"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("kappa: 1"));
}

#[test]
fn errors_are_reported_with_nonzero_status() {
    let usage = grpconn(&["invariants", "--group", "cyclic:5", "--kind", "friendship"]);
    assert!(!usage.status.success());

    let missing = grpconn(&["invariants", "--group", "file:/nonexistent/table.txt", "--kind", "commuting"]);
    assert!(!missing.status.success());
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/nonexistent/table.txt"));

    let capped = grpconn(&["--order-cap", "10", "invariants", "--group", "symmetric:4", "--kind", "commuting"]);
    assert!(!capped.status.success());

    let bad_claim = grpconn(&["verify", "--claims", "NOT_A_CLAIM"]);
    assert!(!bad_claim.status.success());
}

#[test]
fn order_cap_env_var_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_grpconn"))
        .args(["invariants", "--group", "cyclic:12", "--kind", "commuting"])
        .env("GRPCONN_ORDER_CAP", "8")
        .output()
        .unwrap();
    assert!(!o.status.success());
}

#[test]
fn verify_csv_has_one_row_per_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.txt");
    std::fs::write(&corpus, "# small\ncyclic:4\ndihedral:3\n\nea:2,2\n").unwrap();
    let json_path = dir.path().join("r.json");
    let csv_path = dir.path().join("r.csv");
    let claims = "T_OS_VERTEX_IFF_PRIME_POWER,WHITNEY";
    let base = ["verify", "--corpus", corpus.to_str().unwrap(), "--claims", claims];

    let j = grpconn(&[&base[..], &["--out", json_path.to_str().unwrap()]].concat());
    assert!(j.status.success(), "{}", String::from_utf8_lossy(&j.stderr));
    let c = grpconn(&[&base[..], &["--format", "csv", "--out", csv_path.to_str().unwrap()]].concat());
    assert!(c.status.success());

    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let verdicts = report["verdicts"].as_array().unwrap().len();
    // 3 groups: one for the group claim, four graphs each for the graph claim
    assert_eq!(verdicts, 3 + 3 * 4);
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(&reader.headers().unwrap()[0], "claim");
    assert_eq!(reader.records().count(), verdicts);
}

#[test]
fn verify_with_missing_corpus_names_path() {
    let o = grpconn(&["verify", "--corpus", "/nonexistent/corpus.txt"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/corpus.txt"));
}
