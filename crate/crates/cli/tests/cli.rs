use std::io::Write;
use std::process::{Command, Output, Stdio};

use grouplabel::cert::{Certificate, SequenceCertificate};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_grouplabel"));
    c.env_remove("GROUPLABEL_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn construct_antimagic_path_for_the_cube_group() {
    let o = run(&["construct", "antimagic-path", "--group", "Z2xZ2xZ2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert.route.as_deref(), Some("figure-4"));
    assert!(cert.recheck().unwrap().sound());
    let demo: Certificate = serde_json::from_slice(&run(&["demo", "4", "--format", "json"]).stdout).unwrap();
    assert_eq!(cert.edge_labels, demo.edge_labels);
}

#[test]
fn decide_exit_codes() {
    let o = run(&["decide", "path-ek", "--n", "6", "--k", "6"]);
    assert_eq!((code(&o), stdout(&o).trim()), (1, "impossible"));
    let o = run(&["decide", "path-ek", "--n", "9", "--k", "3"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "possible"));
    let o = run(&["decide", "cycle-zk", "--n", "12", "--k", "12", "--format", "json"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["answer"], false);
    let o = run(&["decide", "tree-obstruction", "--n", "6", "--group", "Z6"]);
    assert_eq!((code(&o), stdout(&o).trim()), (1, "obstructed"));
    let o = run(&["decide", "path-antimagic", "--group", "z2^3"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn sigma_max_both_modes() {
    let o = run(&["sigma-max", "--group", "Z4", "--mode", "both", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!((v["formula"].as_u64(), v["search"].as_u64(), v["agree"].as_bool()), (Some(3), Some(3), Some(true)));
    let cycle: SequenceCertificate = serde_json::from_value(v["cycle"].clone()).unwrap();
    assert!(cycle.recheck().unwrap());
    let o = run(&["sigma-max", "--group", "Z17", "--mode", "search"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(code(&run(&["construct", "antimagic-path", "--group", "Q8"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["decide", "path-ek", "--n", "1", "--k", "3"])), 2);
    assert_eq!(code(&run(&["demo", "7"])), 2);
    assert_eq!(code(&run(&["verify", "/nonexistent/cert.json"])), 2);
    assert_eq!(code(&run(&["construct", "ant-path", "--group", "Z6"])), 2);
    assert_eq!(code(&run(&["search", "ea-cordial", "--group", "Z3"])), 2);
    let o = run(&["search", "ea-cordial", "--group", "Z3", "--graph", "wheel:4"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
}

#[test]
fn search_statuses_and_budget_override() {
    let o = run(&["search", "ea-cordial", "--group", "Z6", "--graph", "path:6"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("not-exists"));
    let o = run(&["search", "a-star-antimagic", "--group", "Z2xZ2xZ2", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let o = run(&["search", "a-cordial", "--group", "Z4", "--graph", "cycle:8", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let cert: Certificate = serde_json::from_value(json(&o)["certificate"].clone()).unwrap();
    assert!(cert.recheck().unwrap().sound());
    let o = bin()
        .args(["search", "ea-cordial", "--group", "Z6", "--graph", "path:18"])
        .env("GROUPLABEL_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let o = run(&["search", "ea-cordial", "--group", "Z6", "--graph", "path:18", "--budget", "100"]);
    assert_eq!(code(&o), 3);
    let o = run(&["construct", "path-ek", "--n", "17", "--k", "6", "--budget", "5"]);
    assert_eq!(code(&o), 3);
    let o = run(&["search", "r-star", "--group", "Z2^4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let seq: SequenceCertificate = serde_json::from_value(json(&o)["certificate"].clone()).unwrap();
    assert!(seq.recheck().unwrap());
}

#[test]
fn identical_requests_give_identical_bytes() {
    for args in [
        vec!["construct", "antimagic-path", "--group", "Z2xZ8", "--format", "json"],
        vec!["search", "ea-cordial", "--group", "Z4", "--graph", "cycle:16", "--format", "json"],
        vec!["explore", "--n-max", "6", "--format", "json"],
    ] {
        let a = run(&args);
        let mut one_thread = args.clone();
        one_thread.extend(["--threads", "1"]);
        let b = run(&one_thread);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn certificates_round_trip_and_verify() {
    for n in ["1", "2", "3", "4"] {
        let o = run(&["demo", n, "--format", "json"]);
        assert_eq!(code(&o), 0);
        let cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
        let again: Certificate = serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
        assert_eq!(cert, again);
        let dir = std::env::temp_dir().join(format!("grouplabel-cli-{}-{n}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cert.json");
        std::fs::write(&path, &o.stdout).unwrap();
        let v = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(code(&v), 0, "figure {n}");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}

#[test]
fn verify_rejects_tampering_and_reads_stdin() {
    let o = run(&["demo", "4", "--format", "json"]);
    let mut cert: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    cert.edge_labels.swap(0, 1);
    let verify = |cert: &Certificate, extra: &[&str]| {
        let mut child = bin()
            .args(["verify", "-"])
            .args(extra)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .unwrap();
        child
            .stdin
            .take()
            .unwrap()
            .write_all(serde_json::to_string(cert).unwrap().as_bytes())
            .unwrap();
        child.wait_with_output().unwrap()
    };
    let out = verify(&cert, &[]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid"));
    // Figure 4 uses 0, so it is not A*-antimagic
    let original: Certificate = serde_json::from_slice(&o.stdout).unwrap();
    let out = verify(&original, &["--property", "a-star-antimagic"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("zero-edge-forbidden"));
}

#[test]
fn text_group_in_input_certificates() {
    let o = bin()
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin
                .take()
                .unwrap()
                .write_all(br#"{"property":"ea-cordial","group":"z3","graph":{"kind":"tree","edges":[[0,1],[1,2]]},"edge_labels":[[1],[2]],"vertex_labels":[[1],[0],[2]]}"#)?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn output_file_and_edge_files() {
    let dir = std::env::temp_dir().join(format!("grouplabel-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("tree.txt");
    std::fs::write(&edges, "0 1\n0 2\n0 3\n0 4\n1 5\n3 6\n4 7\n").unwrap();
    let out = dir.join("result.json");
    let o = run(&[
        "search",
        "a-star-antimagic",
        "--group",
        "Z2^3",
        "--edges",
        edges.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["status"], "found");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explore_small_table() {
    let o = run(&["explore", "--n-max", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("counterexamples: 0, unknown: 0"));
    let o = run(&["explore", "--n-max", "9"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("counterexamples: 4, unknown: 0"));
    assert_eq!(code(&run(&["explore", "--n-max", "11"])), 2);
}
