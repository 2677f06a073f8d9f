//! Runs the binary and compares against files in `tests/golden/`.
//! Set `VBRAID_BLESS=1` to rewrite them.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

const SIX: &str = "n=4 a[1,3] a[2,4] a[1,4] a[1,4]^-1 a[2,4]^-1 a[1,3]^-1";

fn run(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vbraid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str, actual: &str) {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    if std::env::var_os("VBRAID_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden file {name}");
}

#[test]
fn six_letter_text_outputs() {
    for (name, args) in [
        ("classify.txt", vec!["classify", SIX]),
        ("classify_states.txt", vec!["classify", "--states", SIX]),
        ("project.txt", vec!["project", SIX]),
        ("stab.txt", vec!["stab", SIX]),
        ("act.txt", vec!["act", SIX]),
        ("realizable.txt", vec!["realizable", SIX]),
        ("render_word.txt", vec!["render", SIX]),
        ("equiv.txt", vec!["equiv", SIX, "n=4"]),
    ] {
        let (code, out, err) = run(&args, None);
        assert_eq!(code, 0, "{name}: {err}");
        golden(name, &out);
    }
}

#[test]
fn six_letter_json_outputs() {
    for (name, args) in [
        ("classify.json", vec!["--json", "classify", "--states", SIX]),
        ("project.json", vec!["--json", "project", SIX]),
        ("stab.json", vec!["--json", "stab", SIX]),
        ("act.json", vec!["--json", "act", SIX]),
        ("equiv.json", vec!["--json", "equiv", SIX, "n=4"]),
    ] {
        let (code, out, err) = run(&args, None);
        assert_eq!(code, 0, "{name}: {err}");
        serde_json::from_str::<serde_json::Value>(&out).expect("one JSON document");
        golden(name, &out);
    }
}

#[test]
fn diagram_outputs() {
    let (code, out, _) = run(&["omap", "n=2 s1 s1"], None);
    assert_eq!(code, 0);
    assert_eq!(out, "n=2 a[1,2] a[2,1]\n");
    let (code, out, _) = run(&["render", "n=3 s1 s2 v1 s1^-1"], None);
    assert_eq!(code, 0);
    golden("render_diagram.txt", &out);
    let (code, out, _) = run(&["reconstruct", "n=3 a[1,2] a[2,1]"], None);
    assert_eq!(code, 0);
    golden("reconstruct.txt", &out);
}

#[test]
fn stdin_matches_arguments() {
    for cmd in ["classify", "project", "stab", "act", "render"] {
        assert_eq!(run(&[cmd], Some(SIX)), run(&[cmd, SIX], None), "{cmd}");
    }
}

#[test]
fn exit_statuses() {
    assert_eq!(run(&["classify", "n=4 a[1,3"], None).0, 1);
    assert_eq!(run(&["frobnicate"], None).0, 1);
    assert_eq!(run(&["--help"], None).0, 0);
    let (code, out, err) = run(&["reconstruct", SIX], None);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.contains("bad"));
    assert_eq!(run(&["omap", "n=3 s1"], None).0, 2);
    assert_eq!(run(&["equiv", "n=2 a[1,2]", "n=3 a[1,2]"], None).0, 2);
    let (code, out, _) = run(&["equiv", "n=3 a[1,2]", "n=3 a[1,2]^-1"], None);
    assert_eq!(code, 3);
    assert!(out.contains("differ"));
    let args = ["equiv", "n=3 a[1,2]", "n=3 a[2,1]", "--max-len", "3", "--max-states", "500"];
    let (code, out, _) = run(&args, None);
    assert_eq!(code, 3);
    assert!(out.starts_with("unknown in PBn"));
    assert_eq!(run(&["equiv", "n=3 a[1,2]", "n=3 a[2,1]", "--mode", "TildePBn"], None).0, 0);
}

#[test]
fn campaign_json_is_one_document() {
    let (code, out, _) = run(&["--json", "campaign", "lemma3", "--n", "4"], None);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["name"], "lemma3");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}
