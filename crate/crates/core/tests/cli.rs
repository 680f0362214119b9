use std::io::Write;
use std::process::{Command, Output};

use mixvol::cli::{JobFile, EXIT_CHECK_FAILED, EXIT_INVALID_INPUT, EXIT_OK};
use num_bigint::BigInt;
use serde_json::Value;
use tempfile::NamedTempFile;

fn job(name: &str) -> String {
    format!("{}/jobs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn mvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvol")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON document")
}

fn temp_job(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn sutures_of_worked_example() {
    let out = mvol(&["sutures", &job("W.job"), "--json"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let doc = json(&out);
    assert_eq!(doc["sutures"].as_array().unwrap().len(), 4);
    assert_eq!(doc["vdag"], serde_json::json!(["1", "1", "1", "1"]));
    assert_eq!(doc["v"], serde_json::json!(["1", "2", "2", "4"]));
    assert_eq!(doc["result"], "1");
}

#[test]
fn voff_of_ten_point_fixture() {
    let out = mvol(&["voff", &job("fig6.job")]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = stdout(&out);
    assert!(text.starts_with("result: 0\n"), "{text}");
    assert!(text.contains("zero witness: {1, 2, 3}"), "{text}");
    let out = mvol(&["bk-detect", &job("fig6.job"), "--json"]);
    assert_eq!(json(&out)["result"], Value::Null);
}

#[test]
fn parallel_segments_have_a_zero_witness() {
    let out = mvol(&["mixed-volume", &job("two-parallel-segments.job")]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&out), "mixed volume: 0\nzero witness: {1, 2}\n");
    let doc = json(&mvol(&["mixed-volume", &job("two-parallel-segments.job"), "--json", "--check"]));
    assert_eq!(doc["zero_witness"], serde_json::json!([0, 1]));
}

#[test]
fn regression_jobs_pass_with_check() {
    let cases = [
        ("sutures", "W.job"),
        ("verify-lemma", "W.job"),
        ("semi-check", "W.job"),
        ("daughter-check", "W.job"),
        ("voff", "fig6.job"),
        ("volume", "fig6.job"),
        ("mixed-volume", "two-parallel-segments.job"),
        ("mldeg", "ml-line.job"),
        ("mldeg", "ml-conic.job"),
        ("mldeg", "ml-vertical-line.job"),
        ("eddeg", "ed-line.job"),
        ("eddeg", "ed-conic.job"),
        ("pdeg", "pdeg-linear.job"),
        ("pdeg", "pdeg-conic.job"),
        ("pdeg", "pdeg-cubic.job"),
        ("mult", "cusp.job"),
        ("newton", "newton-3simplex.job"),
        ("newton", "b1-triangle.job"),
        ("bk-detect", "b1-triangle.job"),
    ];
    for (cmd, file) in cases {
        let out = mvol(&[cmd, &job(file), "--check"]);
        assert_eq!(out.status.code(), Some(EXIT_OK), "{cmd} {file}: {}", stderr(&out));
        let oracle = mvol(&[cmd, &job(file), "--oracle", "--json"]);
        let formula = mvol(&[cmd, &job(file), "--json"]);
        assert_eq!(json(&oracle)["result"], json(&formula)["result"], "{cmd} {file}");
    }
}

#[test]
fn output_is_byte_stable_and_round_trips() {
    for (cmd, file) in [("sutures", "W.job"), ("voff", "fig6.job"), ("mult", "cusp.job")] {
        let a = mvol(&[cmd, &job(file), "--json"]);
        let b = mvol(&[cmd, &job(file), "--json"]);
        assert_eq!(a.stdout, b.stdout);
        let doc = json(&a);
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(again, stdout(&a));
    }
    let doc = json(&mvol(&["sutures", &job("W.job"), "--json"]));
    for row in doc["d"].as_array().unwrap() {
        for x in row.as_array().unwrap() {
            x.as_str().unwrap().parse::<BigInt>().unwrap();
        }
    }
}

#[test]
fn job_files_round_trip() {
    for file in ["W.job", "fig6.job", "ml-conic.job", "pdeg-cubic.job", "cusp.job"] {
        let text = std::fs::read_to_string(job(file)).unwrap();
        let parsed = JobFile::parse(&text).unwrap();
        assert_eq!(JobFile::parse(&parsed.to_json()).unwrap(), parsed);
    }
}

#[test]
fn big_integers_survive_exactly() {
    let big = "1000000000000000000000000000007";
    let f = temp_job(&format!(r#"{{"dim":1,"points":[["0"],["{big}"]]}}"#));
    let out = mvol(&["volume", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(json(&out)["result"], big);
}

#[test]
fn invalid_input_exits_with_two() {
    let f = temp_job(r#"{"dim":2,"points":[["0","0"],["1"]]}"#);
    let out = mvol(&["volume", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID_INPUT));
    assert!(stderr(&out).contains("points[1]"), "{}", stderr(&out));

    let f = temp_job(r#"{"dim":2,"points":[[0,0],[1,0]],"bogus":1}"#);
    assert_eq!(mvol(&["volume", f.path().to_str().unwrap()]).status.code(), Some(EXIT_INVALID_INPUT));

    let out = mvol(&["sutures", &job("fig6.job")]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID_INPUT));
    assert!(stderr(&out).contains("daughters"), "{}", stderr(&out));

    let out = mvol(&["volume", "/nonexistent/job.json"]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID_INPUT));

    let out = mvol(&["pdeg", &job("pdeg-conic.job")]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let f = temp_job(r#"{"dim":2,"points":[[0,0],[1,0],[0,1]],"params":{"d":2}}"#);
    assert_eq!(mvol(&["pdeg", f.path().to_str().unwrap()]).status.code(), Some(EXIT_INVALID_INPUT));

    assert_eq!(mvol(&["no-such-command"]).status.code(), Some(EXIT_INVALID_INPUT));
}

#[test]
fn failed_properties_exit_with_one() {
    let not_semi = temp_job(r#"{"dim":2,"points":[[0,0],[1,0],[2,0],[0,1],[0,2]],"daughters":[[1,2],[1,2]]}"#);
    let path = not_semi.path().to_str().unwrap();
    let out = mvol(&["semi-check", path]);
    assert_eq!(out.status.code(), Some(EXIT_CHECK_FAILED));
    assert!(stdout(&out).contains("semi-interlaced: false"));
    assert_eq!(mvol(&["sutures", path]).status.code(), Some(EXIT_CHECK_FAILED));

    // The segment from the apex to the middle of the base edge is not a daughter.
    let tetra = temp_job(
        r#"{"dim":3,"points":[[0,0,0],[2,0,0],[0,2,0],[0,0,2],[1,0,0]],"daughters":[[3,4]]}"#,
    );
    let out = mvol(&["daughter-check", tetra.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_CHECK_FAILED), "{}", stdout(&out));
}

#[test]
fn help_and_version_succeed() {
    let out = mvol(&["--help"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    for cmd in ["volume", "mixed-volume", "daughter-check", "semi-check", "sutures", "voff", "newton", "bk-detect", "mldeg", "eddeg", "pdeg", "mult", "verify-lemma"] {
        assert!(stdout(&out).contains(cmd), "missing {cmd}");
    }
}

#[test]
fn library_entry_point_matches_the_binary() {
    let lib = mixvol::cli::run(["mvol", "sutures", &job("W.job"), "--json"]);
    let bin = mvol(&["sutures", &job("W.job"), "--json"]);
    assert_eq!(lib.code, EXIT_OK);
    assert_eq!(lib.stdout, stdout(&bin));
}
