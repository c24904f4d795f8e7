use std::io::Write;
use std::process::{Command, Output, Stdio};

use clifford_brackets::golden::golden_text;
use clifford_brackets::BracketKind;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clifford-brackets"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

#[test]
fn tables_match_reference_files_except_the_misprint() {
    for n in 1..=10 {
        for kind in BracketKind::ALL {
            let out = run(&["tables", "--n", &n.to_string(), "--kind", kind.name()]);
            assert_eq!(out.status.code(), Some(0));
            let text = String::from_utf8(out.stdout).unwrap();
            let body = text.strip_prefix(&format!("# {kind}\n")).unwrap();
            let golden = golden_text(n, kind).unwrap();
            if (n, kind) == (7, BracketKind::Anticommutator) {
                assert_eq!(body, golden.replace("\t13/7\t", "\t3/7\t"));
            } else {
                assert_eq!(body, golden, "n={n} {kind}");
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = run(&[
        "subalgebras",
        "--n",
        "8",
        "--enumerate",
        "--augmented",
        "--format",
        "json",
    ]);
    let b = run(&[
        "subalgebras",
        "--n",
        "8",
        "--enumerate",
        "--augmented",
        "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn check_reads_files_and_stdin() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"signature":{{"p":1,"q":0}},"terms":[{{"indices":[1],"re":"1","im":0}}]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let out = run(&["check", path, "--predicate", "group"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "group: true\n");
    let out = run(&["check", path, "--predicate", "lie"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("2e^{1}"));

    let mut child = bin()
        .args(["check", "-", "--predicate", "lie"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"signature":{"p":2,"q":0},"terms":[{"indices":[1,2],"re":3,"im":0}]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let missing = run(&["check", "/nonexistent/doc.json", "--predicate", "lie"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "--n-max", "6"]).status.code(), Some(0));
    assert_eq!(
        run(&["verify", "--n-max", "4", "--budget", "5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["tables", "--n", "x"]).status.code(), Some(2));
}
