use std::process::{Command, Output};

use clanhess::clan::Clan;
use clanhess::hess::HessOrbitReport;
use clanhess::perm::Permutation;
use clanhess::schubert::SchubertExpansion;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clanhess"))
        .args(args)
        .env_remove("CLANHESS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_one_one() {
    assert_eq!(stdout(&["clans", "enumerate", "--p", "1", "--q", "1"]), "+-\n-+\n11\n");
}

#[test]
fn w_set_of_gamma_123() {
    let text = stdout(&["wset", "--p", "3", "--q", "3", "123"]);
    let words: Vec<&str> = text.lines().map(|l| l.split(" = ").next().unwrap()).collect();
    assert_eq!(
        words,
        ["s4*s5*s4", "s2*s4*s5", "s1*s5*s4", "s1*s2*s5", "s2*s1*s4", "s1*s2*s1"]
    );
    // The clan form gives the same answer.
    assert_eq!(stdout(&["wset", "--p", "3", "--q", "3", "123123"]), text);
}

#[test]
fn classify_two_two() {
    assert_eq!(
        stdout(&["hess", "classify", "--p", "2", "--q", "2"]),
        "12 -> (3,4,4,4)\n21 -> (4,4,4,4)\n"
    );
}

#[test]
fn dimension_and_class() {
    assert_eq!(stdout(&["hess", "dim", "12", "--p", "2", "--q", "2"]), "5\n");
    assert_eq!(stdout(&["hess", "dim", "213", "--p", "3", "--q", "3"]), "13\n");
    assert_eq!(
        stdout(&["class", "--p", "3", "--q", "3", "213"]),
        "1 * S[1,2,3,6,4,5]\n1 * S[1,3,2,4,6,5]\n1 * S[3,1,2,4,5,6]\n"
    );
}

#[test]
fn monk_modes() {
    assert_eq!(stdout(&["monk", "1", "21", "--stable"]), "1 * S[3,1,2]\n");
    assert_eq!(stdout(&["monk", "2", "21", "--stable"]), "1 * S[2,3,1]\n1 * S[3,1,2]\n");
    // In S_2 there is nothing above s_1.
    assert_eq!(stdout(&["monk", "1", "12"]), "1 * S[2,1]\n");
    assert_eq!(run(&["monk", "2", "12"]).status.code(), Some(1));
}

#[test]
fn statistics_text() {
    let text = stdout(&["clans", "stats", "--p", "5", "--q", "3", "+1+-2+21"]);
    assert!(text.contains("plus: 1 1 2 2 2 3 4 5\n"));
    assert!(text.contains("minus: 0 0 0 1 1 1 2 3\n"));
    assert!(text.contains("  0 0 0 0 0 2 1 0\n"));
}

#[test]
fn weak_order_dot() {
    let dot = stdout(&["poset", "weak", "--interval", "--p", "3", "--q", "3", "--format", "dot"]);
    assert!(dot.starts_with("digraph weak_order {\n"));
    assert!(dot.contains("\"123123\" -> \"123213\" [label=\"s1,s4\"];"));
    assert!(dot.contains("\"123123\" -> \"123132\" [label=\"s2,s5\"];"));
    assert_eq!(dot.matches("->").count(), 8);
}

#[test]
fn inclusion_hasse_diagram() {
    assert_eq!(stdout(&["poset", "inclusion", "--p", "1", "--q", "1"]), "+- < 11\n-+ < 11\n");
    let json: Value = serde_json::from_str(&stdout(&[
        "poset", "inclusion", "--p", "2", "--q", "1", "--format", "json",
    ]))
    .unwrap();
    let nodes = json["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), Clan::enumerate(2, 1).unwrap().len());
    for edge in json["edges"].as_array().unwrap() {
        let a = Clan::parse(edge[0].as_str().unwrap(), 2, 1).unwrap();
        let b = Clan::parse(edge[1].as_str().unwrap(), 2, 1).unwrap();
        assert!(a.inclusion_leq(&b).unwrap());
    }
}

#[test]
fn json_round_trips() {
    let clans: Vec<Clan> =
        serde_json::from_str(&stdout(&["clans", "enumerate", "--p", "2", "--q", "2", "--format", "json"])).unwrap();
    assert_eq!(clans, Clan::enumerate(2, 2).unwrap());

    let report: HessOrbitReport = serde_json::from_str(&stdout(&[
        "hess", "report", "3,4,4,4", "--p", "2", "--q", "2", "--format", "json",
    ]))
    .unwrap();
    assert!(report.irreducible);
    assert_eq!(report.witness, Some("12".parse::<Permutation>().unwrap()));

    let value: Value = serde_json::from_str(&stdout(&[
        "class", "--p", "3", "--q", "3", "123", "--format", "json",
    ]))
    .unwrap();
    let class = SchubertExpansion::from_json(&value).unwrap();
    assert_eq!(class.len(), 6);
    assert!(class.is_multiplicity_free());

    let wset: Value = serde_json::from_str(&stdout(&[
        "wset", "--p", "3", "--q", "3", "213", "--format", "json",
    ]))
    .unwrap();
    for entry in wset.as_array().unwrap() {
        let w: Permutation = serde_json::from_value(entry["one_line"].clone()).unwrap();
        assert_eq!(w.reduced_word().to_string(), entry["word"].as_str().unwrap());
    }
}

#[test]
fn bijection_agrees() {
    let text = stdout(&["wset-bijection", "3214", "--p", "4", "--q", "4"]);
    assert_eq!(text.lines().count(), 4);
    assert!(!text.contains("FAIL"));
}

#[test]
fn validation_errors_exit_one() {
    for args in [
        &["clans", "enumerate", "--p", "1", "--q", "2"][..],
        &["clans", "enumerate"],
        &["wset", "--p", "2", "--q", "2", "1x2y"],
        &["hess", "report", "2,1,4,4", "--p", "2", "--q", "2"],
        &["hess", "dim", "231", "--p", "3", "--q", "3"],
        &["no-such-command"],
        &["wset", "--p", "3", "--q", "3", "123", "--format", "dot"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verification_failure_exits_two() {
    // Two reference product lists disagree with Monk's rule.
    let out = run(&["verify", "monk", "--max-q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL [1] Monk product with s3"));
    assert!(text.contains("PASS [1] Monk product with s1"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "oracle", "--max-n", "5", "--seed", "11"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    assert!(first.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn out_file_and_thread_env() {
    let dir = std::env::temp_dir().join(format!("clanhess-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("clans.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_clanhess"))
        .args(["clans", "enumerate", "--p", "1", "--q", "1", "--out"])
        .arg(&path)
        .env("CLANHESS_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "+-\n-+\n11\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
