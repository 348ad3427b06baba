mod common;

use common::{check_golden, selfloop, selfloop_stdin, GOLDENS};

#[test]
fn golden_outputs_are_stable() {
    let failures: Vec<String> = GOLDENS.iter().filter_map(|g| check_golden(g).err()).collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn stdin_matches_file_input() {
    let text = std::fs::read_to_string(common::tests_dir().join("golden/instances.txt")).unwrap();
    let out = selfloop_stdin(&["spectrum", "-"], &text);
    assert_eq!(out.stdout, common::expected("spectrum"));
}

#[test]
fn parse_errors_exit_with_two() {
    for (args, input) in [
        (&["spectrum"][..], "D? | -\n"),
        (&["spectrum"][..], "A_ | 5\n"),
        (&["energy"][..], "zz\n"),
        (&["bounds"][..], "A_ | 0,0\n"),
    ] {
        let out = selfloop_stdin(args, input);
        assert_eq!(out.status.code(), Some(2), "{args:?} {input:?}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    }
    assert_eq!(selfloop(&["bounds", "--only", "B19"]).status.code(), Some(2));
    assert_eq!(selfloop(&["fuzz", "--exhaustive", "9"]).status.code(), Some(2));
    assert_eq!(selfloop(&["family", "--name", "petersen"]).status.code(), Some(2));
}

#[test]
fn good_lines_survive_a_bad_one() {
    let out = selfloop_stdin(&["spectrum"], "A_ | 0\nzz\nA_ | -\n");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
}

#[test]
fn violations_exit_with_one() {
    // A negative tolerance turns an exact equality into a violation.
    let out = selfloop_stdin(&["bounds", "--only", "B7", "--tol=-1"], "A_ | 0\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"violated\""));

    let out = selfloop(&[
        "fuzz", "--count", "5", "--n-max", "4", "--only", "B7", "--tol=-1", "--sigma", "fixed:4",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fuzz_hash_ignores_bound_selection() {
    let hash = |only: &str| {
        let out = selfloop(&[
            "fuzz", "--seed", "11", "--count", "30", "--n-max", "7", "--only", only,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["corpus_hash"].as_str().unwrap().to_string()
    };
    assert_eq!(hash("B17"), hash("B1,B14"));
}

#[test]
fn family_output_feeds_back_in() {
    let fam = selfloop(&["family", "--name", "kn_hat", "--n", "4"]);
    assert_eq!(fam.status.code(), Some(0));
    let line = String::from_utf8(fam.stdout).unwrap();
    let out = selfloop_stdin(&["spectrum"], &line);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["spectrum"][0], "4.000000000000");
}
