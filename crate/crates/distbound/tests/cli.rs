//! End-to-end tests of the `distbound` binary: exit codes, diagnostics,
//! determinism and conformance of every output to the shipped schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn example(name: &str) -> String {
    crate_dir().join("examples").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distbound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distbound"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(crate_dir().join("schemas").join(name)).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, instance: &Value, what: &str) {
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{what}: {errors:#?}");
}

const EXAMPLES: &[&str] = &["kite.json", "unit_square.json", "pentagon.json", "kite_distances.json"];
const POINT_EXAMPLES: &[&str] = &["kite.json", "unit_square.json"];

#[test]
fn kite_configuration_bound() {
    let r = json(&run(&["bound", &example("kite.json")]));
    assert_eq!(r["best_bound"], "4");
    assert_eq!(r["tight"], true);
    assert_eq!(r["absolute_bound"], "6");
    let best = &r["modp"]["best"];
    assert_eq!(best["ideal"]["p"], "2");
    assert_eq!(best["ideal"]["factor"], serde_json::json!(["1", "1"]));
    assert_eq!(best["s_eff"], 1);
    assert_eq!(r["lrs"]["bound_value"], "4");
}

#[test]
fn input_flag_and_positional_path_agree() {
    let a = run(&["bound", &example("kite.json")]);
    let b = run(&["bound", "--input", &example("kite.json")]);
    assert_eq!(a.stdout, b.stdout);
    let both = run(&["bound", "--input", &example("kite.json"), &example("kite.json")]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_distbound"))
        .args(["lrs", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read(example("pentagon.json")).unwrap();
    child.stdin.take().unwrap().write_all(&text).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(json(&out)["bound_value"], "8");
}

#[test]
fn dims_subcommand() {
    let r = json(&run(&["dims", "2", "1"]));
    assert_eq!(r["dim"], "4");
    let text = run(&["dims", "2", "1", "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().ends_with("dim P_1(R^2) = 4\n"));
    assert_eq!(run(&["dims", "0", "1"]).status.code(), Some(2));
}

#[test]
fn capability_error_for_verify_on_distances() {
    let out = run(&["verify", &example("kite_distances.json")]);
    assert_eq!(out.status.code(), Some(3));
    let msg = stderr(&out);
    assert_eq!(msg.lines().count(), 1);
    assert!(msg.contains("$.distances"), "{msg}");
    assert!(out.stdout.is_empty());
}

#[test]
fn lrs_needs_two_distances() {
    let dir = std::env::temp_dir().join(format!("distbound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.json");
    std::fs::write(
        &path,
        r#"{"field": {"min_poly": [-1, 1]}, "dim": 2, "points": [[["0"],["0"]], [["3"],["4"]]]}"#,
    )
    .unwrap();
    let p = path.display().to_string();
    let out = run(&["lrs", &p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("$.points"));
    let r = json(&run(&["bound", &p]));
    assert_eq!(r["s"], 1);
    assert!(r["lrs"].is_null());
    assert_eq!(r["best_bound"], "3");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn input_errors_name_the_json_path() {
    let dir = std::env::temp_dir().join(format!("distbound-cli-err-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        (r#"{"field": {"min_poly": [-3, 0, 1]}, "dim": 2, "points": [[["0","0"],["0","0"]], [["1","0"],["x","0"]]]}"#, "$.points[1][1][0]"),
        (r#"{"field": {"min_poly": [-3, 0, 1]}, "dim": 2, "distances": [["1","0"], ["0","0"]]}"#, "$.distances[1]"),
        (r#"{"field": {"min_poly": [-4, 0, 1]}, "dim": 2, "distances": [["1","0"]]}"#, "$.field.min_poly"),
        (r#"{"field": {"min_poly": [-3, 0, 1]}, "dim": 2}"#, "$"),
        (r#"{"field": {"min_poly": [-3, 0, 1]}, "dim": 2, "points": "#, "$"),
    ];
    for (i, (text, path)) in cases.iter().enumerate() {
        let file = dir.join(format!("bad{i}.json"));
        std::fs::write(&file, text).unwrap();
        let out = run(&["bound", &file.display().to_string()]);
        assert_eq!(out.status.code(), Some(2), "case {i}");
        let msg = stderr(&out);
        assert_eq!(msg.lines().count(), 1, "case {i}: {msg}");
        assert!(msg.contains(&format!(": {path}: ")), "case {i}: {msg}");
    }
    let missing = run(&["bound", &dir.join("missing.json").display().to_string()]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("missing.json"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn argument_errors_exit_2() {
    assert_eq!(run(&["bound", "--prime-limit", "1", &example("kite.json")]).status.code(), Some(2));
    assert_eq!(run(&["bound", "--format", "xml", &example("kite.json")]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn redirected_output_defaults_to_json() {
    let out = run(&["bound", &example("kite.json")]);
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_ok());
    let text = run(&["bound", &example("kite.json"), "--format", "text"]);
    assert!(String::from_utf8(text.stdout).unwrap().contains("best bound:     4 (modp), tight"));
}

#[test]
fn output_is_byte_identical_across_runs_threads_and_seeds() {
    for name in EXAMPLES {
        for cmd in ["bound", "certify"] {
            for format in ["json", "text"] {
                let base = run(&[cmd, &example(name), "--format", format, "--prime-limit", "300"]);
                assert_eq!(base.status.code(), Some(0));
                for jobs in ["1", "2", "8"] {
                    let again = run(&[cmd, &example(name), "--format", format, "--prime-limit", "300", "--jobs", jobs]);
                    assert_eq!(again.stdout, base.stdout, "{cmd} {name} {format} jobs={jobs}");
                }
                let env = run_env(&[cmd, &example(name), "--format", format, "--prime-limit", "300"], "RAYON_NUM_THREADS", "3");
                assert_eq!(env.stdout, base.stdout);
                let seeded = run(&[cmd, &example(name), "--format", format, "--prime-limit", "300", "--seed", "987654321"]);
                assert_eq!(seeded.stdout, base.stdout, "{cmd} {name} {format} seed");
            }
        }
    }
    for name in POINT_EXAMPLES {
        let a = run(&["verify", &example(name), "--jobs", "1"]);
        let b = run(&["verify", &example(name), "--jobs", "4"]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn outputs_validate_against_schemas() {
    let input = schema("input.schema.json");
    let report = schema("report.schema.json");
    let certify = schema("certify.schema.json");
    let lrs = schema("lrs.schema.json");
    let verify = schema("verify.schema.json");
    let dims = schema("dims.schema.json");
    for name in EXAMPLES {
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(example(name)).unwrap()).unwrap();
        assert_valid(&input, &doc, name);
        assert_valid(&report, &json(&run(&["bound", &example(name)])), name);
        assert_valid(&certify, &json(&run(&["certify", &example(name)])), name);
        assert_valid(&lrs, &json(&run(&["lrs", &example(name)])), name);
    }
    for name in POINT_EXAMPLES {
        assert_valid(&verify, &json(&run(&["verify", &example(name)])), name);
    }
    assert_valid(&dims, &json(&run(&["dims", "4", "6"])), "dims");
    // A report with no certificate and warnings.
    let none = json(&run(&["bound", &example("pentagon.json"), "--prime-limit", "2"]));
    assert!(none["modp"]["best"].is_null());
    assert_valid(&report, &none, "pentagon, limit 2");
    assert!(!none["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn schemas_reject_malformed_reports() {
    let report = schema("report.schema.json");
    let mut r = json(&run(&["bound", &example("kite.json")]));
    r["best_bound"] = Value::from(4);
    assert!(!report.is_valid(&r));
    let input = schema("input.schema.json");
    let both: Value = serde_json::json!({
        "field": {"min_poly": [-1, 1]}, "dim": 1,
        "points": [[["0"]], [["1"]]], "distances": [["1"]]
    });
    assert!(!input.is_valid(&both));
}
