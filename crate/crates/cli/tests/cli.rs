use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use indpoly::{parse_graph6, write_graph6};
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_indpoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_k2() {
    let o = run(&["compute", "--indpoly", "--graph6", "A_"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + 2x\n");
    assert_eq!(
        stdout(&run(&["compute", "--matching", "--graph6", "A_"])),
        "1 + x\n"
    );
    assert_eq!(
        stdout(&run(&["compute", "--dependence", "--graph6", "A_"])),
        "1 - 2x + x^2\n"
    );
}

#[test]
fn compute_json_uses_strings() {
    let o = run(&[
        "compute",
        "--json",
        "--fixture",
        &fixture("triangle_two_tails.adj"),
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "independence");
    assert_eq!(v["polynomial"], serde_json::json!(["1", "6", "9", "3"]));
}

#[test]
fn family_source() {
    let o = run(&["compute", "--family", "gutman_j", "--params", "4,3"]);
    assert_eq!(stdout(&o), "1 + 8x + 14x^2 + x^3\n");
}

#[test]
fn verify_clique_cover_example() {
    let o = run(&[
        "verify",
        "clique_cover_thm",
        "--fixture",
        &fixture("triangle_tail3.adj"),
        "--cover-file",
        &fixture("triangle_tail3.cliques"),
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(
        v["quotient"],
        serde_json::json!(["1", "12", "48", "76", "48", "12", "1"])
    );
}

#[test]
fn verify_other_identities() {
    let cases: &[&[&str]] = &[
        &[
            "verify",
            "cycle_cover_thm",
            "--family",
            "cycle",
            "--params",
            "4",
            "--cover",
            "0,1,2,3",
        ],
        &[
            "verify",
            "join_sum",
            "--graph6",
            "@",
            "--second-graph6",
            "@",
        ],
        &["verify", "antiregular_formula", "--n", "4"],
        &["verify", "hn_recurrence", "--n", "9"],
        &[
            "verify",
            "vertex_recurrence",
            "--family",
            "path",
            "--params",
            "5",
            "--vertex",
            "2",
        ],
        &[
            "verify",
            "clique_corona_lemma",
            "--family",
            "complete",
            "--params",
            "3",
            "--clique",
            "0,1",
            "--second-family",
            "path",
            "--second-params",
            "3",
        ],
        &[
            "verify",
            "cycle_corona_lemma",
            "--family",
            "cycle",
            "--params",
            "5",
            "--cycle",
            "0,1,2,3,4",
            "--second-family",
            "complete",
            "--second-params",
            "2",
        ],
        &[
            "verify",
            "symmetric_divisor",
            "--family",
            "path",
            "--params",
            "4",
            "--k",
            "2",
        ],
        &["verify", "gutman_symmetric", "--pq", "4,3"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(stdout(&o).contains(": holds"), "{args:?}");
    }
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["compute", "--graph6", "~~"][..],
        &[
            "compute", "--graph6", "A_", "--family", "path", "--params", "2",
        ],
        &["compute"],
        &["verify", "no_such_identity", "--graph6", "A_"],
        &[
            "verify",
            "clique_cover_thm",
            "--graph6",
            "A_",
            "--cover",
            "0; 2",
        ],
        &["verify", "symmetric_divisor", "--graph6", "A_", "--k", "2"],
        &["classify", "--poly", "1 + + x"],
        &["compute", "--family", "cycle", "--params", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exceeded_exits_1() {
    let o = run(&[
        "--budget-n",
        "10",
        "compute",
        "--family",
        "path",
        "--params",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn construct_outputs_graph6() {
    let o = run(&["construct", "rule1", "--graph6", "@"]);
    let g = parse_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (3, 2));

    let o = run(&[
        "construct",
        "rule3",
        "--fixture",
        &fixture("triangle_two_tails.adj"),
        "--cover-file",
        &fixture("triangle_two_tails.cover"),
    ]);
    let h3 = stdout(&o);
    let o = run(&["compute", "--graph6", h3.trim()]);
    assert_eq!(
        stdout(&o),
        "1 + 12x + 48x^2 + 77x^3 + 48x^4 + 12x^5 + x^6\n"
    );

    let o = run(&[
        "construct",
        "corona",
        "--family",
        "complete",
        "--params",
        "2",
        "--second-graph6",
        "A?",
    ]);
    let o = run(&["compute", "--graph6", stdout(&o).trim()]);
    assert_eq!(stdout(&o), "1 + 6x + 10x^2 + 6x^3 + x^4\n");

    let o = run(&["construct", "gutman", "--pq", "4,3", "--format", "adjlist"]);
    assert!(stdout(&o).starts_with("14; "));
    let o = run(&["construct", "h-family", "--m", "2"]);
    assert_eq!(
        parse_graph6(stdout(&o).trim().as_bytes())
            .unwrap()
            .edge_count(),
        5
    );
}

#[test]
fn classify_text_and_json() {
    let o = run(&["classify", "--poly", "1 + 68x + 54x^2 + 68x^3 + x^4"]);
    let text = stdout(&o);
    assert!(text.contains("symmetric: true") && text.contains("unimodal: false"));
    let o = run(&[
        "classify",
        "--json",
        "--family",
        "antiregular",
        "--params",
        "6",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["profile"]["almost_symmetric"], true);
    assert_eq!(v["polynomial"], serde_json::json!(["1", "6", "6", "2"]));
}

fn connected_graphs(n: usize) -> String {
    std::fs::read_to_string(fixture("graphs_n1-9.g6"))
        .unwrap()
        .lines()
        .filter(|l| {
            let g = parse_graph6(l.as_bytes()).unwrap();
            g.n() == n && g.is_connected()
        })
        .map(|l| format!("{l}\n"))
        .collect()
}

#[test]
fn search_finds_antiregular() {
    let input = connected_graphs(6);
    assert_eq!(input.lines().count(), 112);
    let o = run_with_stdin(&["search", "--almost-symmetric"], &input);
    assert_eq!(o.status.code(), Some(0));
    let a6 = indpoly::named_graph("antiregular", &[6]).unwrap();
    let hits: Vec<String> = stdout(&o).lines().map(String::from).collect();
    let target = indpoly::independence_polynomial(&a6, &Default::default()).unwrap();
    assert!(hits.iter().any(|l| {
        let g = parse_graph6(l.as_bytes()).unwrap();
        indpoly::independence_polynomial(&g, &Default::default()).unwrap() == target
            && g.edge_count() == a6.edge_count()
    }));
    // Hits keep their input order.
    let positions: Vec<usize> = hits
        .iter()
        .map(|h| input.lines().position(|l| l == h).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn search_predicates() {
    let input = "A_\nBg\nC~\n";
    let o = run_with_stdin(&["search", "--predicate", "symmetric"], input);
    // K2: 1+2x, P3: 1+3x+x^2, K4: 1+4x.
    assert_eq!(stdout(&o), "Bg\n");
    let o = run_with_stdin(&["search", "--non-unimodal"], input);
    assert_eq!(stdout(&o), "");

    let catalog = std::env::temp_dir().join("indpoly-cli-catalog.g6");
    // 2K1 has I = 1 + 2x + x^2, its own reciprocal; K2 plus an isolated vertex has 1 + 3x + 2x^2.
    let k2_k1 = write_graph6(&indpoly::Graph::from_edges(3, &[(0, 1)]).unwrap()).unwrap();
    std::fs::write(&catalog, format!("A?\n{k2_k1}\n")).unwrap();
    let o = run_with_stdin(
        &[
            "search",
            "--reciprocal-pair",
            "--catalog",
            catalog.to_str().unwrap(),
            "--json",
        ],
        "A?\nA_\n",
    );
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["graph6"], "A?");
    assert_eq!(lines[0]["partner"], "A?");
    assert_eq!(
        run_with_stdin(&["search", "--reciprocal-pair"], "A?\n")
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn search_reports_bad_lines_and_continues() {
    let o = run_with_stdin(&["search", "--symmetric"], "Bg\n!!\nBg\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "Bg\nBg\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
