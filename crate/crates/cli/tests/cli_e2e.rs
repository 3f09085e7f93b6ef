//! End-to-end tests driving the `cutset` binary as a subprocess: output
//! shapes, pipelines, the golden table, cache behavior, and exit codes.

use std::io::Write as _;
use std::process::{Command, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_cutset");

fn run_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(BIN);
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn cutset");
    if let Some(data) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(data.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("wait for cutset");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with(args, None, &[])
}

/// Asserts success and returns stdout.
fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}");
    stdout
}

#[test]
fn g_reports_value_and_representation() {
    let text = ok(&["g", "100", "4", "8", "--no-cache"]);
    assert_eq!(
        text,
        "g_100(4,8) = 3,759,525 = C(98,4)+C(96,3)+C(93,2)+C(87,1)\n"
    );

    let json = ok(&["g", "100", "4", "8", "--no-cache", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["g"].to_string(), "3759525");
    assert_eq!(doc["cascade"], "C(98,4)+C(96,3)+C(93,2)+C(87,1)");
}

#[test]
fn feasible_decides_the_worked_profiles() {
    let yes = ok(&["feasible", "--n", "5", "--profile", "[0,2,5,6,0,0]"]);
    assert_eq!(yes, "true\n");
    let no = ok(&[
        "feasible",
        "--n",
        "5",
        "--profile",
        "[0,2,6,5,0,0]",
        "--validate-all-levels",
    ]);
    assert_eq!(no, "false\n");

    let json = ok(&[
        "feasible",
        "--n",
        "5",
        "--profile",
        "[0,2,6,5,0,0]",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["feasible"], serde_json::Value::Bool(false));
    assert_eq!(doc["slack"].as_array().unwrap().len(), 6);
}

#[test]
fn scalar_commands_round_trip() {
    assert_eq!(ok(&["repr", "13", "2"]), "13 = C(5,2)+C(3,1)\n");
    assert_eq!(ok(&["repr", "3,759,525", "4"]), "3,759,525 = C(98,4)+C(96,3)+C(93,2)+C(87,1)\n");
    assert_eq!(ok(&["boundary", "13", "2"]), "6\n");
    assert_eq!(ok(&["boundary", "-5", "3"]), "0\n");
    assert_eq!(ok(&["rank", "[1,3,5]"]), "6\n");
    assert_eq!(ok(&["unrank", "6", "3", "5"]), "[1,3,5]\n");

    // A number far beyond u64 survives the JSON route exactly.
    let big = "123456789012345678901234567890";
    let json = ok(&["repr", big, "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["k"].to_string(), big);
    assert_eq!(doc["cascade"], format!("C({big},1)"));
}

#[test]
fn shadow_and_shade_transform_families() {
    let (code, stdout, _) = run_with(&["shadow"], Some("[1,2]\n[1,3]\n"), &[]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[1]\n[2]\n[3]\n");

    let (code, stdout, _) = run_with(&["shade", "--n", "3"], Some("[1]\n"), &[]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[1,2]\n[1,3]\n");

    // Empty input has an empty image.
    let (code, stdout, _) = run_with(&["shadow"], Some("# nothing\n"), &[]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "");

    // Mixed sizes cannot form one level.
    let (code, _, stderr) = run_with(&["shadow"], Some("[1]\n[1,2]\n"), &[]);
    assert_eq!(code, 3, "{stderr}");
}

#[test]
fn canonical_emission_pipes_into_verify() {
    let family = ok(&[
        "canonical",
        "--n",
        "5",
        "--profile",
        "[0,2,5,6,0,0]",
        "--pivot",
        "2",
        "--emit-sets",
    ]);
    assert!(family.starts_with("# feasible: true\n"));
    let (code, verdict, _) = run_with(&["verify", "--n", "5"], Some(&family), &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict, "true\n");

    let family = ok(&[
        "canonical",
        "--n",
        "5",
        "--profile",
        "[0,2,6,5,0,0]",
        "--pivot",
        "2",
        "--emit-sets",
    ]);
    assert!(family.starts_with("# feasible: false\n"));
    let (code, verdict, _) = run_with(&["verify", "--n", "5"], Some(&family), &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict, "false\n");
}

#[test]
fn table_output_matches_the_golden_file() {
    let csv = ok(&["table", "100", "4", "--no-cache"]);
    assert_eq!(csv, include_str!("golden/table_100_4.csv"));
}

#[test]
fn table_formats_round_trip() {
    let csv = ok(&["table", "12", "2", "--no-cache"]);
    assert!(csv.starts_with("l,g,cascade\n"));
    assert_eq!(csv.lines().count(), 1 + (10 - 2 + 1));

    let json = ok(&["table", "12", "2", "--no-cache", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["n"], 12);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 9);

    let text = ok(&["table", "12", "2", "--no-cache", "--format", "text"]);
    assert!(text.lines().next().unwrap().contains("cascade"));

    // Explicit single-row range.
    let one = ok(&["table", "12", "2", "--from", "2", "--to", "2", "--no-cache"]);
    assert_eq!(one, "l,g,cascade\n2,66,\"C(12,2)\"\n");
}

#[test]
fn cache_makes_reruns_identical_and_rejects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("g.csv");
    let cache = cache.to_str().unwrap();

    let args = ["table", "14", "2", "--cache", cache];
    let first = ok(&args);
    let stored = std::fs::read_to_string(cache).unwrap();
    assert!(stored.starts_with("n,m,l,g\n"));
    assert!(stored.contains("14,2,2,91"));
    let second = ok(&args);
    assert_eq!(first, second);
    // No rows were added, so the file was not rewritten.
    assert_eq!(std::fs::read_to_string(cache).unwrap(), stored);

    // A cached value is trusted without recomputation.
    let (code, stdout, _) = run_with(&["g", "14", "2", "2", "--cache", cache], None, &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("= 91 ="), "{stdout}");

    // The environment variable selects the same cache.
    let (code, _, _) = run_with(&["g", "14", "2", "3"], None, &[("CUTSET_CACHE", cache)]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(cache).unwrap().contains("14,2,3,"));

    // Corruption is rejected with a line number, not repaired.
    std::fs::write(cache, "n,m,l,g\n14,2,2,91\nbroken\n").unwrap();
    let (code, _, stderr) = run_with(&["g", "14", "2", "2", "--cache", cache], None, &[]);
    assert_eq!(code, 3);
    assert!(stderr.contains("line 3"), "{stderr}");
}

#[test]
fn constructions_emit_verifiable_families() {
    let two = ok(&["construct", "two-level", "3", "1"]);
    assert_eq!(
        two,
        "# kind: two-level\n# n: 3\n# profile: [0,2,2,0]\n[1]\n[2]\n[1,3]\n[2,3]\n"
    );

    let qrs = ok(&["construct", "qrs", "6", "1"]);
    assert!(qrs.contains("# profile: [0,5,4,4,0,0,0]"));
    let (code, verdict, _) = run_with(&["verify", "--n", "6"], Some(&qrs), &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict, "true\n");

    let doubled = ok(&["construct", "double", "7", "1"]);
    assert!(doubled.contains("# input cutset verified: true"));
    let (code, verdict, _) = run_with(&["verify", "--n", "7"], Some(&doubled), &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict, "true\n");

    let json = ok(&["construct", "double", "7", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["input_verified"], serde_json::Value::Bool(true));
    // Doubling the two-level construction instead of the three-level one.
    let via_two = ok(&["construct", "double", "7", "1", "2"]);
    assert!(via_two.contains("# profile: [0,5,5,0,0,5,5,0]"));
}

#[test]
fn reports_bounds_conjecture_and_identity() {
    assert_eq!(
        ok(&["bounds", "100", "4", "8"]),
        "3,612,280 < g_100(4,8) <= 3,759,624\n"
    );
    assert_eq!(
        ok(&["bounds", "100", "4", "96"]),
        "3,464,840 < g_100(4,96) <= 3,607,625\n"
    );
    assert_eq!(
        ok(&["conjecture", "100", "4", "8"]),
        "conjectured g_100(4,8) = 3,759,525 = C(98,4)+C(96,3)+C(93,2)+C(87,1)\n"
    );
    assert_eq!(ok(&["identity", "20", "5", "3"]), "true\n");
}

#[test]
fn family_input_errors_carry_line_numbers() {
    let (code, _, stderr) = run_with(&["verify", "--n", "5"], Some("[1]\n[2\n"), &[]);
    assert_eq!(code, 3);
    assert!(stderr.contains("line 2"), "{stderr}");

    let (code, _, stderr) = run_with(&["verify", "--n", "5"], Some("[1]\n[2]\n[1]\n"), &[]);
    assert_eq!(code, 3);
    assert!(stderr.contains("line 3 repeats the set from line 1"), "{stderr}");
}

#[test]
fn exit_codes_separate_usage_domain_and_budget() {
    // Usage: unknown subcommand, malformed profile, csv where unsupported,
    // wrong construction band.
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["feasible", "--n", "3", "--profile", "oops"]).0, 2);
    assert_eq!(run(&["feasible", "--n", "3", "--profile", "[0,1]"]).0, 2);
    assert_eq!(run(&["g", "5", "1", "2", "--format", "csv", "--no-cache"]).0, 2);
    assert_eq!(run(&["construct", "qrs", "8", "1", "4"]).0, 2);

    // Precondition violations.
    assert_eq!(run(&["construct", "qrs", "5", "2"]).0, 3);
    assert_eq!(run(&["construct", "double", "6", "1"]).0, 3);
    assert_eq!(run(&["bounds", "10", "0", "5"]).0, 3);
    assert_eq!(run(&["g", "5", "3", "2", "--no-cache"]).0, 3);
    assert_eq!(
        run(&["canonical", "--n", "3", "--profile", "[0,1,1,0]", "--pivot", "9"]).0,
        3
    );
    // A profile entry beyond its level width is a mathematical violation,
    // not a syntax problem.
    assert_eq!(run(&["feasible", "--n", "3", "--profile", "[0,9,0,0]"]).0, 3);

    // Budget refusals.
    let (code, _, _) = run_with(&["verify", "--n", "26"], Some("[1]\n"), &[]);
    assert_eq!(code, 3);
    let (code, _, stderr) = run_with(
        &[
            "canonical",
            "--n",
            "20",
            "--profile",
            "[0,0,0,0,0,0,0,0,0,0,184756,0,0,0,0,0,0,0,0,0,0]",
            "--pivot",
            "10",
            "--emit-sets",
            "--budget",
            "1000",
        ],
        None,
        &[],
    );
    assert_eq!(code, 3, "{stderr}");
    assert!(stderr.contains("budget"), "{stderr}");
}
