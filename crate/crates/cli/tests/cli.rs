use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use stateogram::{parse_circuit, Amplitude, TraceDocument};

fn sog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sog"))
        .args(args)
        .output()
        .expect("run sog")
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../circuits")
        .join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn render_writes_one_svg_per_step_and_a_strip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h-twice");
    let o = sog(&[
        "render",
        corpus("hadamard-1q.sogc.json").to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mut names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["step-000.svg", "step-001.svg", "step-002.svg", "strip.svg"]);
    let strip = fs::read_to_string(out.join("strip.svg")).unwrap();
    for k in 1..=3 {
        assert!(strip.contains(&format!(">({k})</text>")));
    }
}

#[test]
fn render_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let file = corpus("dj-balanced-mask3-negated.sogc.json");
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let o = sog(&[
            "render",
            file.to_str().unwrap(),
            "-o",
            out.to_str().unwrap(),
            "--width",
            "500",
            "--title",
            "balanced",
        ]);
        assert!(o.status.success());
    }
    let mut count = 0;
    for entry in fs::read_dir(&a).unwrap() {
        let name = entry.unwrap().file_name();
        assert_eq!(fs::read(a.join(&name)).unwrap(), fs::read(b.join(&name)).unwrap());
        count += 1;
    }
    assert_eq!(count, 7);
}

#[test]
fn render_flags_reach_the_svg() {
    let dir = tempfile::tempdir().unwrap();
    let o = sog(&[
        "render",
        corpus("bell-phi-plus.sogc.json").to_str().unwrap(),
        "-o",
        dir.path().to_str().unwrap(),
        "--width",
        "800",
        "--height",
        "300",
        "--bar-width",
        "20",
        "--no-vanishing-box",
        "--title",
        "Bell",
    ]);
    assert!(o.status.success());
    let svg = fs::read_to_string(dir.path().join("step-002.svg")).unwrap();
    assert!(svg.contains(r#"width="800.0000" height="300.0000""#));
    assert!(svg.contains(r#"width="20.0000""#));
    assert!(svg.contains(">Bell</text>"));
    assert!(!svg.contains("vanishing"));
}

#[test]
fn missing_file_exits_3_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never");
    let o = sog(&["render", "/nonexistent/circuit.sogc.json", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!out.exists());
    assert_eq!(sog(&["trace", "/nonexistent/circuit.sogc.json"]).status.code(), Some(3));
}

#[test]
fn invalid_json_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.sogc.json");
    fs::write(&bad, "{\"version\":\"1\",\n\"qubits\":1,\"init\":[0],\"columns\":[[{\"gate\":\"H\" \"targets\":[0]}]]}").unwrap();
    let out = dir.path().join("out");
    let o = sog(&["render", bad.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2, column"), "{err}");
    assert!(!out.exists());

    let o = sog(&["trace", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validation_errors_exit_2_naming_column() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("dup.sogc.json");
    fs::write(
        &bad,
        r#"{"version":"1","qubits":2,"init":[0,0],"columns":[[{"gate":"CNOT","targets":[0,0]}]]}"#,
    )
    .unwrap();
    let o = sog(&["trace", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("column 0") && err.contains("qubit 0"), "{err}");
}

#[test]
fn trace_of_dj_constant_ends_in_000_minus_001() {
    let o = sog(&["trace", corpus("dj-constant0.sogc.json").to_str().unwrap()]);
    assert!(o.status.success());
    let doc: TraceDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.steps.len(), doc.circuit.columns.len() + 1);
    let last = doc.steps.last().unwrap().state.amplitudes().to_vec();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let want = [r, -r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    for (a, w) in last.iter().zip(want) {
        assert!((a - Amplitude::new(w, 0.0)).norm() < 1e-10);
    }
}

#[test]
fn trace_of_balanced_cancels_first_two_states() {
    let doc = sog(&["dj", "--balanced", "2", "--n", "3"]);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bal.sogc.json");
    fs::write(&file, &doc.stdout).unwrap();
    let o = sog(&["trace", file.to_str().unwrap()]);
    let doc: TraceDocument = serde_json::from_str(&stdout(&o)).unwrap();
    let last = doc.steps.last().unwrap();
    assert!(last.state.amplitudes()[0].norm() < 1e-10);
    assert!(last.state.amplitudes()[1].norm() < 1e-10);
}

#[test]
fn trace_of_empty_circuit_is_single_step() {
    let o = sog(&["trace", corpus("empty-2q.sogc.json").to_str().unwrap()]);
    let doc: TraceDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.steps.len(), 1);
    assert_eq!(doc.steps[0].layout.bars.len(), 1);
    assert_eq!(doc.steps[0].layout.vanishing, ["|01⟩", "|10⟩", "|11⟩"]);
}

#[test]
fn dj_command_documents() {
    let o = sog(&["dj", "--constant", "0", "--n", "3"]);
    assert!(o.status.success());
    let c = parse_circuit(&stdout(&o)).unwrap();
    assert_eq!(c.columns().len(), 2, "no oracle columns between the Hadamard layers");

    let o = sog(&["dj", "--balanced", "3", "--negate", "--n", "3"]);
    let text = stdout(&o);
    assert_eq!(text.matches("\"CNOT\"").count(), 2);
    assert_eq!(text.matches("\"X\"").count(), 1);

    assert_eq!(sog(&["dj", "--balanced", "0b11", "--n", "3"]).status.code(), Some(0));
    assert_eq!(sog(&["dj", "--balanced", "0", "--n", "3"]).status.code(), Some(2));
    assert_eq!(sog(&["dj", "--balanced", "4", "--n", "3"]).status.code(), Some(2));
    assert_eq!(sog(&["dj", "--constant", "2"]).status.code(), Some(2));
    assert_eq!(sog(&["dj", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn corpus_dj_files_match_generator() {
    for (file, args) in [
        ("dj-constant0.sogc.json", vec!["--constant", "0"]),
        ("dj-constant1.sogc.json", vec!["--constant", "1"]),
        ("dj-balanced-mask1-negated.sogc.json", vec!["--balanced", "1", "--negate"]),
    ] {
        let mut full = vec!["dj"];
        full.extend(args);
        full.extend(["--n", "3"]);
        let generated = stdout(&sog(&full));
        assert_eq!(generated, fs::read_to_string(corpus(file)).unwrap(), "{file}");
    }
}
