use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn jonq(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jonq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut input = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            input.write_all(text.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn json_of(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| panic!("{e}: {}", run.stdout))
}

fn repo_file(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

fn validate(def: &str, instance: &Value) {
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(repo_file("docs/report.schema.json")).unwrap(),
    )
    .unwrap();
    let wrapper = json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$defs": schema["$defs"],
        "$ref": format!("#/$defs/{def}"),
    });
    let validator = jsonschema::validator_for(&wrapper).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{def}: {errors:?}\n{instance}");
    if def != "batch_input" {
        let top = jsonschema::validator_for(&schema).unwrap();
        assert!(top.is_valid(instance), "{def} at top level");
    }
}

#[test]
fn classify_octic() {
    let run = jonq(&["classify", "[[y,2*y^8],[y,1]]", "--json"], None);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = json_of(&run);
    assert_eq!(r["case_tag"], "Case2a");
    assert_eq!(r["mu_formula"], 9);
    assert_eq!(r["mu_oracle"], 9);
    assert_eq!(r["consistent"], true);
    validate("report", &r);

    let text = jonq(&["classify", "[[y,2*y^8],[y,1]]"], None);
    assert!(text.stdout.contains("Case2a"));
}

#[test]
fn classify_elliptic() {
    let run = jonq(&["classify", "--json", "[[2,0],[0,1]]"], None);
    assert_eq!(run.code, 0);
    let r = json_of(&run);
    assert_eq!(r["case_tag"], "Elliptic");
    assert_eq!(r["mu_oracle"], 0);
    assert_eq!(r["bb"]["is_constant"], true);
    validate("report", &r);
}

#[test]
fn exit_codes() {
    let singular = jonq(&["classify", "[[y,0],[y,0]]"], None);
    assert_eq!(singular.code, 3);
    assert!(singular.stderr.contains("singular"), "{}", singular.stderr);

    let parse = jonq(&["classify", "[[y,1],[0,1]"], None);
    assert_eq!(parse.code, 2);
    assert!(parse.stderr.contains("byte"), "{}", parse.stderr);

    assert_eq!(jonq(&["normal-form", "[[2,0],[0,1]]"], None).code, 3);
    assert_eq!(jonq(&["ns-matrix", "-d", "1"], None).code, 3);
    assert_eq!(
        jonq(
            &["classify", "[[y,1],[0,1]]", "--base", "[[y,0],[0,1]]"],
            None
        )
        .code,
        2
    );
}

#[test]
fn iterate_tables() {
    let run = jonq(
        &["iterate", "-k", "5", "[[(1-y)*y, 0],[0, 1]]", "--json"],
        None,
    );
    let r = json_of(&run);
    validate("iterate_output", &r);
    let degrees: Vec<u64> = r["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["degree"].as_u64().unwrap())
        .collect();
    let points: Vec<u64> = r["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["base_points"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, [3, 5, 7, 9, 11]);
    assert_eq!(points, [5, 9, 13, 17, 21]);

    let identity = jonq(&["iterate", "-k", "3", "[[1,0],[0,1]]"], None);
    assert_eq!(
        identity.stdout,
        "k\tdeg\tbase-points\n1\t1\t0\n2\t1\t0\n3\t1\t0\n"
    );

    let nonic = json_of(&jonq(
        &[
            "iterate",
            "-k",
            "4",
            "--json",
            "[[y*(y+2)^8, y^5],[1, y*(y+2)^8]]",
        ],
        None,
    ));
    let degrees: Vec<u64> = nonic["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, [10, 18, 26, 34]);
}

#[test]
fn other_commands_validate() {
    let mu = jonq(&["mu", "--json", "[[y*(y+2), y^5],[1, y*(y+2)]]"], None);
    let r = json_of(&mu);
    assert_eq!(r["mu"], 3);
    validate("mu_output", &r);
    assert_eq!(jonq(&["mu", "[[y, y*(y-1)],[0, 1]]"], None).stdout, "2\n");

    let nf = json_of(&jonq(
        &["normal-form", "--json", "[[-y^2, y],[1, 0]]"],
        None,
    ));
    validate("normal_form_output", &nf);

    let ns = json_of(&jonq(&["ns-matrix", "-d", "4", "--json"], None));
    validate("ns_output", &ns);
    assert_eq!(ns["preserves_form"], true);
}

#[test]
fn method_and_var_flags() {
    let r = json_of(&jonq(
        &[
            "classify",
            "--json",
            "--method",
            "formula",
            "--var",
            "t",
            "[[t, 2*t^8],[t, 1]]",
        ],
        None,
    ));
    assert_eq!(r["mu_formula"], 9);
    assert_eq!(r["mu_oracle"], Value::Null);
    assert_eq!(r["degree_sequence"], json!([]));
    validate("report", &r);

    let r = json_of(&jonq(
        &[
            "classify",
            "--json",
            "--method",
            "oracle",
            "--kmax",
            "12",
            "[[t, 2*t^8],[t, 1]]",
            "--var",
            "t",
        ],
        None,
    ));
    assert_eq!(r["mu_formula"], Value::Null);
    assert_eq!(r["mu_oracle"], 9);
    assert_eq!(r["degree_sequence"].as_array().unwrap().len(), 12);

    let r = json_of(&jonq(
        &["classify", "--json", "--timings", "[[y, 1],[0, 1]]"],
        None,
    ));
    assert!(r["timings_ms"]["total"].is_number());
    validate("report", &r);
}

#[test]
fn unresolved_map_is_flagged() {
    let run = jonq(
        &[
            "classify",
            "--json",
            "[[y*(y+1)^2, y*(y+1)^3*(y+2)],[1, y*(y+1)^2]]",
        ],
        None,
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    let r = json_of(&run);
    assert_eq!(r["case_tag"], "Unresolved");
    assert_eq!(r["mu_formula"], Value::Null);
    assert!(r["mu_oracle"].is_u64());
    assert!(!r["notes"].as_array().unwrap().is_empty());
    validate("report", &r);
}

#[test]
fn json_output_is_byte_stable() {
    let args = [
        "classify",
        "--json",
        "[[y*(y+1)*(y+2), y^2],[y+2, y*(y+1)*(y+2)]]",
    ];
    let a = jonq(&args, None).stdout;
    let b = jonq(&args, None).stdout;
    assert_eq!(a, b);
}

#[test]
fn batch_over_the_corpus() {
    let path = repo_file("corpus/examples.txt");
    let run = jonq(&["batch", path.to_str().unwrap(), "--json"], None);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let out = json_of(&run);
    validate("batch_output", &out);
    assert_eq!(
        out["summary"]["cases"],
        json!({"Case1": 2, "Case2a": 2, "Case2b": 2, "Case2c": 1})
    );
    assert_eq!(out["summary"]["mismatches"], 0);
    let mus: Vec<u64> = out["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["report"]["mu_formula"].as_u64().unwrap())
        .collect();
    assert_eq!(mus, [4, 2, 3, 9, 3, 16, 3]);

    let sequential = jonq(
        &["batch", path.to_str().unwrap(), "--json", "--jobs", "1"],
        None,
    );
    let parallel = jonq(
        &["batch", path.to_str().unwrap(), "--json", "--jobs", "4"],
        None,
    );
    assert_eq!(sequential.stdout, parallel.stdout);
    assert_eq!(sequential.stdout, run.stdout);
}

#[test]
fn batch_json_input_and_empty_input() {
    let input = r#"[{"fiber": "[[t, 1],[0, 1]]", "var": "t"}, {"fiber": "[[-y^2, y],[1, 0]]", "base": "[[-1, 0],[0, 1]]"}]"#;
    let run = jonq(&["batch", "-", "--json"], Some(input));
    assert_eq!(run.code, 0, "{}", run.stderr);
    let out = json_of(&run);
    validate("batch_output", &out);
    assert_eq!(out["summary"]["reports"], 2);
    let entries: Value = serde_json::from_str(input).unwrap();
    validate("batch_input", &entries);

    for empty in ["", "[]"] {
        let run = jonq(&["batch", "-", "--json"], Some(empty));
        assert_eq!(run.code, 0);
        let out = json_of(&run);
        assert_eq!(out["summary"]["total"], 0);
        assert_eq!(out["summary"]["cases"], json!({}));
    }

    assert_eq!(jonq(&["batch", "-"], Some("[{\"fibre\": 1}]")).code, 2);
}

#[test]
fn batch_with_a_malformed_entry() {
    let input = "[[y, 2*y^8],[y, 1]]\n[[y, 1],[0\n[[-y^2, y],[1, 0]]\n";
    let keep = jonq(&["batch", "-", "--json"], Some(input));
    assert_eq!(keep.code, 0);
    let out = json_of(&keep);
    validate("batch_output", &out);
    assert_eq!(out["summary"]["reports"], 2);
    assert_eq!(out["summary"]["errors"], 1);
    assert_eq!(out["records"][1]["error"]["kind"], "parse");
    assert!(out["records"][1]["error"]["position"].is_u64());

    assert_eq!(jonq(&["batch", "-", "--keep-going"], Some(input)).code, 0);
    let strict = jonq(&["batch", "-", "--strict"], Some(input));
    assert_eq!(strict.code, 2);
    assert!(strict.stdout.contains("errors 1"));
}
