mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use tutte_genus::matroid::Matroid;
use tutte_genus::poly::Polynomial;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte-genus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tutte-genus-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn genus_two_of_a_single_coloop() {
    let o = run(&["genus", "--builtin", "U:1,1", "-g", "2", "--threads", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let expected = common::brute_force_genus(&Matroid::uniform(1, 1).unwrap(), 2);
    assert_eq!(stdout(&o), format!("{}\n", expected.canonical_text()));

    let o = run(&["--format", "json", "genus", "--builtin", "U:1,1", "-g", "2"]);
    assert_eq!(Polynomial::from_json(stdout(&o).trim()).unwrap(), expected);
}

#[test]
fn classical_methods_agree() {
    let outputs: Vec<String> = ["sum", "dc", "closed"]
        .iter()
        .map(|m| stdout(&run(&["tutte", "--builtin", "U:2,4", "--method", m])))
        .collect();
    assert_eq!(outputs[0], "x1^2 + 2*x1 + y1^2 + 2*y1\n");
    assert!(outputs.iter().all(|o| o == &outputs[0]));
    let o = run(&["tutte", "--builtin", "R:3,6", "--method", "closed"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rank_of_subsets_from_a_file() {
    let path = temp_file(
        "vector.json",
        r#"{"type":"vector","p":2,"matrix":[[1,0,1],[0,1,1]]}"#,
    );
    let m = path.to_str().unwrap();
    assert_eq!(stdout(&run(&["rank", "-m", m, "-s", "1,2,3"])), "2\n");
    assert_eq!(stdout(&run(&["rank", "-m", m, "-s", "3"])), "1\n");
    assert_eq!(stdout(&run(&["rank", "-m", m, "-s", ""])), "0\n");
    assert_eq!(run(&["rank", "-m", m, "-s", "4"]).status.code(), Some(2));
}

#[test]
fn compare_reports_witness_and_exit_code() {
    let o = run(&[
        "compare",
        "--builtin",
        "R:3,6",
        "--builtin",
        "Q:3,6",
        "-g",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let line = stdout(&o);
    assert!(line.starts_with("DIFFER monomial="), "{line}");
    assert!(
        line.contains(" left=") && line.contains(" right="),
        "{line}"
    );

    let o = run(&[
        "compare",
        "--builtin",
        "R:3,6",
        "--builtin",
        "Q:3,6",
        "-g",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "EQUAL\n");
}

#[test]
fn budget_refusal() {
    let o = run(&["genus", "--builtin", "S:3", "-g", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("2^48"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn isomorphism_subcommand() {
    let o = run(&["iso", "--builtin", "R:3,6", "--builtin", "Q:3,6"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NONISO after 720 permutations\n");
    let o = run(&["iso", "--builtin", "U:2,4", "--builtin", "U:2,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ISO witness=[1,2,3,4]\n");
    let o = run(&["iso", "--builtin", "S:3", "--builtin", "Sprime:3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_subcommand() {
    for b in ["R:3,6", "Q:4,8", "S:3", "Sprime:3"] {
        let o = run(&["verify", "--builtin", b]);
        assert_eq!(
            (o.status.code(), stdout(&o).as_str()),
            (Some(0), "PASS\n"),
            "{b}"
        );
    }
    let bad = temp_file("bad.json", r#"{"type":"bases","n":3,"bases":[[1,2],[3]]}"#);
    let o = run(&["verify", "-m", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"), "{}", stdout(&o));
}

#[test]
fn specialize_check_and_bounds() {
    let o = run(&["specialize-check", "--builtin", "Q:3,6"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "PASS\n"));
    assert_eq!(stdout(&run(&["mbounds", "3"])), "m1=2 m2=4\n");
    assert_eq!(
        stdout(&run(&["--format", "json", "mbounds", "10"])),
        "{\"m1\":4,\"m2\":8}\n"
    );
}

#[test]
fn output_file_flag() {
    let dir = std::env::temp_dir().join(format!("tutte-genus-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.txt");
    let o = run(&["-o", path.to_str().unwrap(), "tutte", "--builtin", "U:1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "x1 + y1\n");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(
        run(&["genus", "--builtin", "U:1,2", "-g", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["genus", "--builtin", "X:1", "-g", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compare", "--builtin", "U:1,2"]).status.code(),
        Some(2)
    );
    let missing = run(&["tutte", "-m", "/nonexistent/m.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("cannot read"));
}
