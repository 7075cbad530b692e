use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use wordrep::cli::{parse_graph, ReportDocument};
use wordrep::Graph;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.txt"))
}

fn wordrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wordrep"))
        .args(args)
        .env_remove("WORDREP_WORD_CAP")
        .env_remove("WORDREP_ORACLE_CAP")
        .output()
        .unwrap()
}

fn report(out: &Output) -> ReportDocument {
    ReportDocument::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let out = wordrep(&["check", path(&fixture("w5"))]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out).witness, Some(vec![1, 2, 3, 4, 5]));

    let out = wordrep(&["check", path(&fixture("w6"))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).numbers.r, Some(3));

    let out = wordrep(&["check", path(&fixture("bad_header"))]);
    assert_eq!(out.status.code(), Some(64));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = wordrep(&["check", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn undecided_quotient_exits_two() {
    let out = wordrep(&["check", path(&fixture("c5")), "--word-cap", "1", "--oracle-cap", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let doc = report(&out);
    assert_eq!(doc.status, "ReducedToQuotient");
    assert_eq!((doc.caps.word, doc.caps.oracle), (1, 0));
}

#[test]
fn reports_are_byte_stable() {
    let a = wordrep(&["check", path(&fixture("w6"))]);
    let b = wordrep(&["check", path(&fixture("w6"))]);
    assert_eq!(a.stdout, b.stdout);
    let timed = wordrep(&["--timing", "check", path(&fixture("w6"))]);
    assert!(report(&timed).timing_ms.is_some());
    assert!(report(&a).timing_ms.is_none());
}

#[test]
fn environment_sets_default_caps_and_flags_win() {
    let c6 = fixture("c6");
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["repnum", path(&c6)];
        args.extend_from_slice(extra);
        Command::new(env!("CARGO_BIN_EXE_wordrep"))
            .args(&args)
            .env("WORDREP_WORD_CAP", env)
            .output()
            .unwrap()
    };
    let out = run("1", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out).status, "cap-exceeded");
    let out = run("1", &["--cap", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).numbers.r, Some(2));
}

#[test]
fn repnum_and_prn() {
    assert_eq!(report(&wordrep(&["repnum", path(&fixture("k2"))])).numbers.r, Some(1));
    assert_eq!(report(&wordrep(&["repnum", path(&fixture("c6"))])).numbers.r, Some(2));
    assert_eq!(wordrep(&["repnum", path(&fixture("c6")), "--cap", "1"]).status.code(), Some(2));

    assert_eq!(report(&wordrep(&["prn", path(&fixture("c6"))])).numbers.prn, Some(3));
    assert_eq!(report(&wordrep(&["prn", path(&fixture("k5"))])).numbers.prn, Some(1));
    let out = wordrep(&["prn", path(&fixture("c5"))]);
    assert_eq!(out.status.code(), Some(1));
    let doc = report(&out);
    assert_eq!(doc.status, "not-comparability");
    assert!(doc.permutational_certificate.is_none());
}

#[test]
fn decompose() {
    let doc = report(&wordrep(&["decompose", path(&fixture("w6"))]));
    assert_eq!(doc.blocks, Some(vec![vec![0], vec![1, 2, 3, 4, 5, 6]]));
    assert_eq!(doc.quotient.unwrap().edges, vec![(0, 1)]);

    let doc = report(&wordrep(&["decompose", path(&fixture("c5"))]));
    let q = doc.quotient.unwrap();
    assert_eq!(Graph::new(q.n, &q.edges).unwrap(), Graph::cycle(5));
    assert!(q.blocks.iter().all(|b| b.len() == 1));

    let doc = report(&wordrep(&["decompose", path(&fixture("k2"))]));
    assert_eq!(doc.blocks, Some(vec![vec![0], vec![1]]));
}

#[test]
fn product_writes_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("w5.txt");
    let out = wordrep(&[
        "product",
        path(&fixture("k2")),
        path(&fixture("c5")),
        "--op",
        "substitute",
        "--at",
        "0",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(parse_graph(&written).unwrap(), Graph::wheel(5));
    assert_eq!(report(&out).graph.as_deref(), Some(written.as_str()));

    let out = wordrep(&["product", path(&fixture("k2")), path(&fixture("c6")), "--op", "lex", "--numbers"]);
    let doc = report(&out);
    assert_eq!((doc.n, doc.numbers.r), (12, Some(3)));

    let out = wordrep(&["product", path(&fixture("c6")), path(&fixture("k1"))]);
    assert_eq!(parse_graph(report(&out).graph.as_deref().unwrap()).unwrap(), Graph::cycle(6));

    let out = wordrep(&["product", path(&fixture("k2")), path(&fixture("c5")), "--op", "substitute", "--at", "2"]);
    assert_eq!(out.status.code(), Some(64));
    let out = wordrep(&["product", path(&fixture("k2")), path(&fixture("c5")), "--op", "substitute"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, cmd) in [("w5", "check"), ("w6", "check"), ("c6", "repnum"), ("c6", "prn"), ("c5", "prn"), ("w6", "decompose")] {
        let g = fixture(name);
        let out = wordrep(&[cmd, path(&g)]);
        let file = dir.path().join(format!("{name}-{cmd}.json"));
        std::fs::write(&file, &out.stdout).unwrap();
        let verified = wordrep(&["verify", path(&g), file.to_str().unwrap()]);
        assert_eq!(verified.status.code(), Some(0), "{name} {cmd}");
        assert_eq!(String::from_utf8_lossy(&verified.stdout).trim(), "verified");
    }

    let out = wordrep(&["repnum", path(&fixture("c6"))]);
    let mut doc = report(&out);
    doc.certificate = Some("0 1 2 3 4 5 0 1 2 3 4 5".into());
    let file = dir.path().join("tampered.json");
    std::fs::write(&file, doc.to_json()).unwrap();
    let verified = wordrep(&["verify", path(&fixture("c6")), file.to_str().unwrap()]);
    assert_eq!(verified.status.code(), Some(1));
}
