use std::path::PathBuf;
use std::process::{Command, Output};

use hyperlimit::io::{emit_report_document, parse_report};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn lh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lh"))
        .args(args)
        .current_dir(golden(""))
        .env_remove("LH_JOBS")
        .output()
        .expect("spawn lh")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_golden(args: &[&str], file: &str) {
    let o = lh(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    let expected = std::fs::read_to_string(golden(file)).unwrap();
    assert_eq!(stdout(&o), expected, "{args:?} differs from {file}");
}

#[test]
fn reports_match_goldens() {
    assert_golden(&["report", "sierpinski.json"], "sierpinski_report.txt");
    assert_golden(&["report", "three_point.json"], "three_point_report.txt");
    assert_golden(
        &[
            "report",
            "three_point.json",
            "--carrier",
            "F",
            "--topology",
            "s",
        ],
        "three_point_report_F_s.txt",
    );
}

#[test]
fn verify_matches_goldens() {
    assert_golden(&["verify", "sierpinski.json"], "sierpinski_verify.txt");
    assert_golden(
        &["verify", "three_point.json", "--json"],
        "three_point_verify.json",
    );
}

#[test]
fn converge_matches_golden() {
    assert_golden(
        &[
            "converge",
            "sierpinski.json",
            "--seq",
            "pre:[{a,b}];cyc:[{b},{a,b}]",
            "--target",
            "{b}",
            "--topology",
            "w",
        ],
        "sierpinski_converge.txt",
    );
}

#[test]
fn json_report_round_trips() {
    let o = lh(&["verify", "three_point.json", "--json"]);
    let text = stdout(&o);
    let doc = parse_report(&text).unwrap();
    assert_eq!(doc.results.len(), 13);
    assert_eq!(emit_report_document(&doc), text);
}

#[test]
fn validate_counts() {
    let o = lh(&["validate", "three_point.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid: 3 points, 5 opens, 5 closed sets\n");
}

#[test]
fn sweep_three_is_clean_and_job_independent() {
    let one = lh(&["sweep", "3", "--jobs", "1"]);
    let four = lh(&["sweep", "3", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert!(stdout(&one).starts_with("sweep n=3: 29 spaces, 0 failures\n"));
    assert_eq!(stdout(&one), stdout(&four));
    let json = lh(&["sweep", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["spaces"], 29);
    assert_eq!(v["failures"], 0);
}

#[test]
fn jobs_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_lh"))
        .args(["sweep", "2"])
        .env("LH_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--jobs"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("lh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    };
    let not_union = write(
        "bad_union.json",
        r#"{"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]}"#,
    );
    let unknown = write(
        "unknown.json",
        r#"{"points":["a"],"opens":[[],["z"],["a"]]}"#,
    );
    let syntax = write(
        "syntax.json",
        "{\"points\": [\"a\"],\n \"opens\": [[], [\"a\"]\n",
    );
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec![], "Usage"),
        (vec!["frobnicate"], "frobnicate"),
        (vec!["sweep", "5"], "--long"),
        (vec!["sweep", "6", "--long"], "budget"),
        (
            vec!["validate", "/nonexistent/x.json"],
            "/nonexistent/x.json",
        ),
        (vec!["validate", &not_union], "union"),
        (vec!["validate", &unknown], "z"),
        (vec!["validate", &syntax], "line"),
        (vec!["report", "sierpinski.json", "--carrier", "Q"], "Q"),
        (
            vec![
                "converge",
                "sierpinski.json",
                "--seq",
                "pre:[];cyc:[]",
                "--target",
                "{}",
            ],
            "cycle",
        ),
        (
            vec![
                "converge",
                "sierpinski.json",
                "--seq",
                "pre:[];cyc:[{a}]",
                "--target",
                "{}",
            ],
            "{a}",
        ),
    ];
    for (args, needle) in cases {
        let o = lh(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stdout(&o).is_empty(), "{args:?}");
        let err = stderr(&o);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_exits_zero() {
    let o = lh(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("converge"));
}
