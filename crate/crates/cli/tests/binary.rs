use std::path::Path;
use std::process::{Command, Output};

const FIGURE1_EDGES: &str = "1 2 5\n2 3 5\n1 3 3\n3 4 3\n2 4 3\n1 4 2\n3 5 2\n3 6 2\n5 6 1\n";

fn csd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csd"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn without_timings(report: &str) -> String {
    report
        .lines()
        .filter(|l| !l.starts_with("build_time_ms"))
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn build_then_stats() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g.edges");
    let diagram = dir.path().join("g.csd");
    std::fs::write(&edges, FIGURE1_EDGES).unwrap();
    let o = csd(&[
        "build-flag",
        path(&edges),
        "--t",
        "5",
        "--out",
        path(&diagram),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());

    let o = csd(&["stats", path(&diagram), "--verify", "--with-st"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = stdout(&o);
    assert!(report.contains("build_time_ms_csd: "));
    assert!(report.contains("build_time_ms_st: "));
    assert_eq!(
        without_timings(&report),
        "n: 6\nd: 3\nt: 5\nstars: 12\nkappa: 12\nk: 2\nm: 21\nnode_count_csd: 22\n\
         node_count_st: 21\npsi: 5\npsi_avg: 3.667\ngamma0: 2\ngamma0_avg: 1.167\n\
         level stars maximal nodes\n0 6 0 6\n1 1 0 2\n2 2 1 5\n3 2 0 5\n5 1 1 4\n"
    );
}

#[test]
fn empty_diagram_stats_are_zero() {
    let dir = tempfile::tempdir().unwrap();
    let diagram = dir.path().join("empty.csd");
    std::fs::write(&diagram, "csd n=0 t=0\n").unwrap();
    let o = csd(&["stats", path(&diagram), "--with-st"]);
    assert!(o.status.success());
    assert_eq!(
        without_timings(&stdout(&o)),
        "n: 0\nd: 0\nt: 0\nstars: 0\nkappa: 0\nk: 0\nnode_count_csd: 0\nnode_count_st: 0\n\
         psi: 0\npsi_avg: 0.000\ngamma0: 0\ngamma0_avg: 0.000\nlevel stars maximal nodes\n"
    );
}

#[test]
fn header_only_edge_file() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g.edges");
    std::fs::write(&edges, "n=3\n").unwrap();
    let o = csd(&["build-flag", path(&edges)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "csd n=3 t=0\n0 1 1\n0 1 2\n0 1 3\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "1 x 3\n").unwrap();
    let o = csd(&["build-flag", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    assert_eq!(
        csd(&["build-flag", "/nonexistent/file"]).status.code(),
        Some(2)
    );

    let heavy = dir.path().join("heavy.edges");
    std::fs::write(&heavy, "1 2 9\n").unwrap();
    assert_eq!(
        csd(&["build-flag", path(&heavy), "--t", "5"]).status.code(),
        Some(3)
    );

    let edited = dir.path().join("edited.csd");
    std::fs::write(&edited, "csd n=2 t=1\n0 1 1\n0 1 2\n1 1 1 2\n").unwrap();
    let o = csd(&["stats", path(&edited), "--verify"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[1] at level 0 (maximal)"));

    let diagram = dir.path().join("ok.csd");
    std::fs::write(&diagram, "csd n=2 t=1\n0 0 1\n0 0 2\n1 1 1 2\n").unwrap();
    assert!(csd(&["stats", path(&diagram), "--verify"]).status.success());
    assert_eq!(
        csd(&["query", path(&diagram), "member", "1", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn queries() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("g.edges");
    let diagram = dir.path().join("g.csd");
    std::fs::write(&edges, FIGURE1_EDGES).unwrap();
    csd(&["build-flag", path(&edges), "--out", path(&diagram)]);
    let ask = |kind: &str, s: &str| stdout(&csd(&["query", path(&diagram), kind, s]));
    assert_eq!(ask("filtration", "1 3 4"), "3\n");
    assert_eq!(ask("member", "1 5"), "false\n");
    assert_eq!(ask("filtration", "1 5"), "absent\n");
    assert_eq!(ask("critical", "2 4"), "true\n");
    assert_eq!(ask("facets", "1 2 3 4").lines().count(), 4);
    assert_eq!(ask("cofaces", "1 4"), "1 2 4: 5\n1 3 4: 3\n");
    let o = csd(&["query", path(&diagram), "maximal", "3", "5", "6"]);
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn rips_and_delaunay_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.pts");
    std::fs::write(&tri, "0 0\n1 0\n0.5 0.8660254037844386\n").unwrap();
    let o = csd(&["build-rips", path(&tri), "--rmax", "0.6", "--t", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("3 1 1 2 3\n"), "{}", stdout(&o));

    let far = dir.path().join("far.pts");
    std::fs::write(&far, "0 0\n5 5\n").unwrap();
    let o = csd(&["build-rips", path(&far), "--rmax", "1", "--t", "3"]);
    assert_eq!(stdout(&o), "csd n=2 t=3\n0 1 1\n0 1 2\n");

    let line = dir.path().join("line.pts");
    std::fs::write(&line, "0\n1\n2\n").unwrap();
    let o = csd(&[
        "build-delaunay",
        path(&line),
        path(&line),
        "--rho",
        "5",
        "--t",
        "2",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(
        text.lines()
            .filter(|l| l.split(' ').nth(1) == Some("1"))
            .count(),
        1
    );
    assert!(text.contains(" 1 1 2 3\n"));

    let o = csd(&[
        "build-delaunay",
        path(&line),
        path(&line),
        "--rho",
        "0",
        "--t",
        "2",
    ]);
    assert_eq!(stdout(&o), "csd n=3 t=2\n0 1 1\n0 1 2\n0 1 3\n");

    let o = csd(&[
        "build-delaunay",
        path(&line),
        path(&line),
        "--rho=-1",
        "--t",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn quantized_edge_weights() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("real.edges");
    std::fs::write(&edges, "1 2 0.5\n2 3 2.0\n1 3 1.0\n").unwrap();
    let o = csd(&["build-flag", path(&edges), "--quantize", "4"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "csd n=3 t=4\n0 0 1\n0 0 2\n0 0 3\n1 0 1 2\n2 0 1 3\n4 1 1 2 3\n"
    );
    assert_eq!(csd(&["build-flag", path(&edges)]).status.code(), Some(2));
}

#[test]
fn klein_sample_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("klein.pts");
    let o = csd(&[
        "klein",
        "--points",
        "40",
        "--seed",
        "3",
        "--out",
        path(&pts),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&pts).unwrap();
    assert_eq!(text.lines().count(), 40);
    assert!(text.lines().all(|l| l.split(' ').count() == 5));
    let o = csd(&["build-rips", path(&pts), "--rmax", "0.5", "--t", "4"]);
    assert!(o.status.success());
}

#[test]
fn klein_chain_report() {
    let o = csd(&["klein-chain", "--points", "60", "--rmax", "0.6", "--t", "8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<u64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(' ').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(
        rows.iter().map(|r| r[0]).collect::<Vec<_>>(),
        vec![1, 2, 4, 8]
    );
    for w in rows.windows(2) {
        assert!(w[0][2] <= w[1][2]);
        assert!(w[0][6] <= w[1][6]);
    }
}
