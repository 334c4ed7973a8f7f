use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn cubeflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubeflow")).args(args).env_remove("CUBEFLOW_MAX_CROSSINGS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn assert_schema(schema: &str, out: &Output) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(schema);
    let schema: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(out)).expect("output is JSON");
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn trefoil_signature_matches_oracle() {
    let o = cubeflow(&["sig", "--pd", &fixture("trefoil.json"), "--compare-oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("σ=2 det=3 ν=0"), "{s}");
    assert!(s.contains("oracle: MATCH"));
}

#[test]
fn unknot_is_one_line() {
    let o = cubeflow(&["kh", "--pd", &fixture("unknot.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t=0 q=0 rank=1\n");
}

#[test]
fn path_algebra_on_the_cube() {
    let o = cubeflow(&["pathalg", "--lattice", "1,1,1", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS (all 27 intervals)"));
    for lattice in ["point", "1", "1,1", "1,1,1", "2"] {
        let o = cubeflow(&["pathalg", "--lattice", lattice, "--dump"]);
        assert_eq!(o.status.code(), Some(0), "{lattice}: {}", stdout(&o));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cubeflow(&["kh", "--pd", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(cubeflow(&["kh", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(cubeflow(&["polytope", "--lattice", "0,1"]).status.code(), Some(2));
    assert_eq!(cubeflow(&["pathalg", "--lattice", "1,1,1,1,1", "--dump"]).status.code(), Some(2));
    let bounded = Command::new(env!("CARGO_BIN_EXE_cubeflow"))
        .args(["kh", "--pd", &fixture("figure_eight.json")])
        .env("CUBEFLOW_MAX_CROSSINGS", "3")
        .output()
        .unwrap();
    assert_eq!(bounded.status.code(), Some(2));
}

#[test]
fn json_outputs_match_schemas() {
    assert_schema("kh.schema.json", &cubeflow(&["kh", "--pd", &fixture("figure_eight.json"), "--json"]));
    assert_schema("sig.schema.json", &cubeflow(&["sig", "--pd", &fixture("figure_eight.json"), "--json"]));
    assert_schema("pages.schema.json", &cubeflow(&["ss", "--complex", &fixture("complex.json"), "--pages", "3", "--json"]));
    assert_schema("pages.schema.json", &cubeflow(&["ss", "--from-pd", &fixture("trefoil.json"), "--json"]));
    assert_schema("fvector.schema.json", &cubeflow(&["polytope", "--lattice", "2,2", "--fvector"]));
    assert_schema("vertices.schema.json", &cubeflow(&["polytope", "--lattice", "1,1,1,1", "--realize"]));
    assert_schema("cancellation.schema.json", &cubeflow(&["polytope", "--lattice", "1,1,1", "--cancellation"]));
}

#[test]
fn fixture_complex_matches_schema() {
    let schema: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas/complex.schema.json")).unwrap(),
    )
    .unwrap();
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixture("complex.json")).unwrap()).unwrap();
    assert!(jsonschema::is_valid(&schema, &value));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["kh", "--pd", "FIG8", "--json"],
        vec!["ss", "--from-pd", "FIG8", "--json"],
        vec!["polytope", "--lattice", "1,1,1", "--realize"],
    ] {
        let fig8 = fixture("figure_eight.json");
        let args: Vec<&str> = args.iter().map(|a| if *a == "FIG8" { fig8.as_str() } else { a }).collect();
        let first = cubeflow(&args);
        let parallel_again = cubeflow(&args);
        let mut seq = args.clone();
        seq.push("--sequential");
        let sequential = cubeflow(&seq);
        assert_eq!(first.stdout, parallel_again.stdout);
        assert_eq!(first.stdout, sequential.stdout);
    }
}
