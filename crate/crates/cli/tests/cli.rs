use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_dialect-forge");

fn repo(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn transform_conllu_then_density() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.conllu");
    let prov = dir.path().join("prov.jsonl");
    let input = repo("fixtures/rule_examples.conllu");
    let args = |seed: &str| {
        vec![
            "transform".to_owned(),
            "--profile".into(),
            "IndE".into(),
            "--seed".into(),
            seed.into(),
            "--conllu".into(),
            input.to_str().unwrap().into(),
            "--out".into(),
            out.to_str().unwrap().into(),
            "--provenance".into(),
            prov.to_str().unwrap().into(),
        ]
    };
    let a: Vec<String> = args("5");
    ok(&a.iter().map(String::as_str).collect::<Vec<_>>());
    let first = (fs::read(&out).unwrap(), fs::read(&prov).unwrap());
    ok(&a.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(first, (fs::read(&out).unwrap(), fs::read(&prov).unwrap()));

    let lines: Vec<Value> = fs::read_to_string(&prov)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 28);
    for key in ["sent_id", "source_text", "output_text", "edits", "seed"] {
        assert!(lines[0].get(key).is_some(), "{key}");
    }
    let report: Value = serde_json::from_str(&ok(&["density", "--provenance", prov.to_str().unwrap()])).unwrap();
    assert_eq!(report["sentences_total"], 28);
    let changed = lines
        .iter()
        .filter(|l| !l["edits"].as_array().unwrap().is_empty())
        .count();
    assert_eq!(report["sentences_changed"], changed);
}

#[test]
fn transform_jsonl_keeps_other_fields() {
    let dir = tempfile::tempdir().unwrap();
    let conllu = fs::read_to_string(repo("fixtures/rule_examples.conllu")).unwrap();
    let passive = conllu
        .split("\n\n")
        .find(|b| b.contains("# sent_id = f153"))
        .unwrap()
        .replace("# sent_id = f153", "# sent_id = r1/question/0");
    let sidecar = dir.path().join("side.conllu");
    fs::write(&sidecar, format!("{passive}\n\n")).unwrap();
    let data = dir.path().join("in.jsonl");
    let line = r#"{"id":"r1", "question": "John was scolded by his boss.", "label": 1.0e0, "x": [1,2]}"#;
    fs::write(&data, format!("{line}\n")).unwrap();
    let out = dir.path().join("out.jsonl");
    let prov = dir.path().join("prov.jsonl");
    let profile = dir.path().join("GiveOnly.tsv");
    fs::write(&profile, "153\tA\n").unwrap();
    let p = |p: &Path| p.to_str().unwrap().to_owned();
    let (profile, data, sidecar, out_s, prov_s) = (p(&profile), p(&data), p(&sidecar), p(&out), p(&prov));
    ok(&[
        "transform",
        "--profile",
        &profile,
        "--jsonl",
        &data,
        "--fields",
        "question",
        "--parses",
        &sidecar,
        "--out",
        &out_s,
        "--provenance",
        &prov_s,
    ]);
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "{\"id\":\"r1\", \"question\": \"John give his boss scold.\", \"label\": 1.0e0, \"x\": [1,2]}\n"
    );
    let entry: Value = serde_json::from_str(fs::read_to_string(&prov).unwrap().trim()).unwrap();
    assert_eq!(entry["sent_id"], "r1/question");

    let missing = run(&[
        "transform",
        "--profile",
        &profile,
        "--jsonl",
        &data,
        "--out",
        &out_s,
        "--provenance",
        &prov_s,
    ]);
    assert!(!missing.status.success());
}

#[test]
fn distance_prints_a_number() {
    let same: f64 = ok(&["distance", "--profile-a", "IndE", "--profile-b", "IndE"])
        .trim()
        .parse()
        .unwrap();
    assert_eq!(same, 0.0);
    let dir = tempfile::tempdir().unwrap();
    let (a, b, u) = (
        dir.path().join("a.tsv"),
        dir.path().join("b.tsv"),
        dir.path().join("u.txt"),
    );
    fs::write(&a, "1\tA\n2\tB\n").unwrap();
    fs::write(&b, "1\tC\n").unwrap();
    fs::write(&u, "1\n2\n").unwrap();
    let d: f64 = ok(&[
        "distance",
        "--profile-a",
        a.to_str().unwrap(),
        "--profile-b",
        b.to_str().unwrap(),
        "--universe",
        u.to_str().unwrap(),
    ])
    .trim()
    .parse()
    .unwrap();
    assert!((d - 0.65).abs() < 1e-12);
    assert!(!run(&["distance", "--profile-a", "Klingon", "--profile-b", "IndE"])
        .status
        .success());
}

#[test]
fn eval_report() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, rows: &[(&str, &str)]| {
        let path = dir.path().join(name);
        let text: String = rows
            .iter()
            .map(|(id, t)| format!("{}\n", serde_json::json!({"id": id, "text": t})))
            .collect();
        fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_owned()
    };
    let gold = write("g.jsonl", &[("1", "the cat"), ("2", "a dog"), ("3", "blue")]);
    let a = write("a.jsonl", &[("3", "blue"), ("1", "the cat"), ("2", "a dog")]);
    let b = write("b.jsonl", &[("1", "the"), ("2", "dog"), ("3", "red")]);
    let report: Value = serde_json::from_str(&ok(&[
        "eval",
        "--pred-a",
        &a,
        "--pred-b",
        &b,
        "--gold",
        &gold,
        "--metric",
        "em",
        "--resamples",
        "500",
        "--seed",
        "1",
    ]))
    .unwrap();
    assert_eq!(report["score_a"], 1.0);
    assert_eq!(report["score_b"], 0.0);
    assert_eq!(report["delta"], 1.0);
    assert_eq!(report["p_value"], 0.0);
    let f1: Value = serde_json::from_str(&ok(&["eval", "--pred-a", &a, "--pred-b", &b, "--gold", &gold])).unwrap();
    assert!((f1["score_b"].as_f64().unwrap() - (2.0 / 3.0 + 2.0 / 3.0) / 3.0).abs() < 1e-12);

    let partial = write("p.jsonl", &[("1", "the cat")]);
    assert!(!run(&["eval", "--pred-a", &partial, "--pred-b", &b, "--gold", &gold])
        .status
        .success());
}

#[test]
fn terminal_survey() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("A", "10\tA\n11\tA\n"),
        ("B", "10\tA\n11\tD\n"),
        ("C", "10\tD\n11\tB\n"),
        ("D", "10\tC\n"),
    ] {
        fs::write(dir.path().join(format!("{name}.tsv")), body).unwrap();
    }
    let other = tempfile::tempdir().unwrap();
    let bank = other.path().join("bank.tsv");
    fs::write(&bank, "10\tsentence ten\n11\tsentence eleven\n").unwrap();
    let mut child = Command::new(BIN)
        .args([
            "survey",
            "--profiles",
            dir.path().to_str().unwrap(),
            "--bank",
            bank.to_str().unwrap(),
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"huh\nn\ny\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("sentence ten"));
    assert!(text.contains("Please answer y or n."));
    assert!(text.trim_end().ends_with("Closest dialect(s): C"), "{text}");

    let mut child = Command::new(BIN)
        .args([
            "survey",
            "--profiles",
            dir.path().to_str().unwrap(),
            "--bank",
            bank.to_str().unwrap(),
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    drop(child.stdin.take());
    assert!(!child.wait_with_output().unwrap().status.success());
}
