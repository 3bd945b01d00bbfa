//! End-to-end runs of the `ttlink` binary: output shapes and exit codes.

use std::process::{Command, Output};

fn ttlink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ttlink"))
        .args(args)
        .env_remove("TTLINK_JONES_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn braid_prints_the_word() {
    let out = ttlink(&["braid", "5,2,3,-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "5: 1 2 3 4 1 2 3 4 -2 -1 -2 -1 -2 -1\n"
    );
}

#[test]
fn braid_rejects_bad_parameters() {
    let out = ttlink(&["braid", "3,0,2,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("q must be at least 1"), "{}", stderr(&out));

    let out = ttlink(&["braid", "5,2,8,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("does not fit"), "{}", stderr(&out));
}

#[test]
fn braid_writes_svg() {
    let path = std::env::temp_dir().join(format!("ttlink-svg-{}.svg", std::process::id()));
    let out = ttlink(&["braid", "4,2,3,-1", "--svg", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<line"));
}

#[test]
fn invariants_from_parameters() {
    let out = ttlink(&["invariants", "8,2,4,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(r#""components":2"#), "{text}");
    assert!(text.contains(r#""linking":[[0,0],[0,0]]"#), "{text}");
    assert!(text.contains(r#""jones_unlink":true"#), "{text}");
}

#[test]
fn invariants_from_raw_word() {
    let out = ttlink(&["invariants", "--word", "2: 1 1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(r#""linking":[[0,1],[1,0]]"#), "{}", stdout(&out));
}

#[test]
fn invariants_needs_exactly_one_input() {
    let out = ttlink(&["invariants"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ttlink(&["invariants", "8,2,4,-1", "--word", "2: 1 1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invariants_skips_jones_past_the_limit() {
    let out = ttlink(&["invariants", "12,3,6,-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(r#""jones_unlink":"skipped""#), "{}", stdout(&out));
}

#[test]
fn jones_limit_env_and_flag() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ttlink"));
        cmd.args(args).env_remove("TTLINK_JONES_LIMIT");
        if let Some(v) = env {
            cmd.env("TTLINK_JONES_LIMIT", v);
        }
        cmd.output().expect("binary runs")
    };
    // The environment lowers the limit below the braid width.
    let out = run(Some("2"), &["invariants", "4,2,2,-2"]);
    assert!(stdout(&out).contains(r#""jones_unlink":"skipped""#), "{}", stdout(&out));
    // The flag wins over the environment.
    let out = run(Some("2"), &["invariants", "4,2,2,-2", "--jones-limit", "10"]);
    assert!(stdout(&out).contains(r#""jones_unlink":true"#), "{}", stdout(&out));
    // Garbage in the environment is a usage error.
    let out = run(Some("wide"), &["invariants", "4,2,2,-2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_reports_families_and_reasons() {
    let out = ttlink(&["classify", "6,4,5,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(r#""unlink":true"#), "{text}");
    assert!(text.contains(r#""family":"F1","witness":{"n":2}"#), "{text}");

    let out = ttlink(&["classify", "10,2,2,-5"]);
    assert!(
        stdout(&out).contains(r#""family":"F3","witness":{"m":2,"n":5}"#),
        "{}",
        stdout(&out)
    );

    let out = ttlink(&["classify", "6,4,5,1"]);
    let text = stdout(&out);
    assert!(text.contains(r#""unlink":false"#), "{text}");
    assert!(text.contains("positive twists"), "{text}");
}

#[test]
fn classify_requires_a_link() {
    let out = ttlink(&["classify", "5,2,3,-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("at least 2 components"), "{}", stderr(&out));
}

#[test]
fn scan_small_box_summary() {
    let out = ttlink(&["scan", "--p-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"discrepancies\":0,\"jones_skipped\":0,\"tuples\":24,\"unlinks\":[\"T(4,2,2,-2)\",\"T(4,2,3,-1)\"]}\n"
    );
}

#[test]
fn scan_json_streams_every_tuple() {
    let out = ttlink(&["scan", "--p-max", "4", "--json", "--jobs", "2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 25); // 24 records plus the summary
    assert!(lines[0].starts_with(r#"{"tuple":"T(4,2,2,-4)""#), "{}", lines[0]);
    assert!(lines[23].starts_with(r#"{"tuple":"T(4,2,4,4)""#), "{}", lines[23]);
}

#[test]
fn scan_empty_box() {
    let out = ttlink(&["scan", "--p-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(r#""tuples":0"#), "{}", stdout(&out));
}

#[test]
fn scan_beyond_p_stays_clean() {
    let out = ttlink(&["scan", "--p-max", "4", "--r-beyond-p"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(r#""tuples":40"#), "{text}");
    assert!(text.contains(r#""discrepancies":0"#), "{text}");
}

#[test]
fn scan_validates_config() {
    let out = ttlink(&["scan", "--p-max", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("p_max"), "{}", stderr(&out));
}

#[test]
fn equal_compares_group_elements() {
    let out = ttlink(&["equal", "3: 1 2 1", "3: 2 1 2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "equal\n");

    let out = ttlink(&["equal", "2: 1", "2: -1"]);
    assert_eq!(stdout(&out), "different\n");

    let out = ttlink(&["equal", "2: 1", "3: 1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_lemma_certifies_each_k() {
    let out = ttlink(&["verify-lemma", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n=1 k=0: certified\nn=1 k=1: certified\n");

    let out = ttlink(&["verify-lemma", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let out = ttlink(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ttlink(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("braid"));
}
