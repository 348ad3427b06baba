#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Fixture {
    pub g6: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn fixtures() -> Vec<Fixture> {
    let text = std::fs::read_to_string(tests_dir().join("fixtures/graph6.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split('\t');
            let g6 = f.next().unwrap().to_string();
            let n = f.next().unwrap().parse().unwrap();
            let m = f.next().unwrap().parse().unwrap();
            let edges = f
                .next()
                .unwrap_or("")
                .split_whitespace()
                .map(|e| {
                    let (u, v) = e.split_once('-').unwrap();
                    (u.parse().unwrap(), v.parse().unwrap())
                })
                .collect();
            Fixture { g6, n, m, edges }
        })
        .collect()
}

/// A CLI invocation whose stdout is pinned under `tests/golden/<name>.out`.
pub struct Golden {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const INSTANCES: &str = "@instances";

pub const GOLDENS: &[Golden] = &[
    Golden {
        name: "spectrum",
        args: &["spectrum", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "energy",
        args: &["energy", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "charpoly",
        args: &["charpoly", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "linegraph",
        args: &["linegraph", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "complement",
        args: &["complement", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "complement_loops",
        args: &["complement", "--complement-loops", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "bounds",
        args: &["bounds", INSTANCES],
        exit: 0,
    },
    Golden {
        name: "bounds_only",
        args: &["bounds", "--only", "B14,B7", INSTANCES],
        exit: 0,
    },
    // The edgeless instance has no line graph to compare.
    Golden {
        name: "identity",
        args: &["identity", INSTANCES],
        exit: 1,
    },
    Golden {
        name: "family",
        args: &["family", "--name", "kn_sigma", "--n", "5", "--sigma", "2"],
        exit: 0,
    },
    Golden {
        name: "fuzz",
        args: &[
            "fuzz",
            "--seed",
            "3",
            "--n-max",
            "6",
            "--count",
            "40",
            "--exhaustive",
            "3",
        ],
        exit: 0,
    },
    Golden {
        name: "oracle",
        args: &["oracle", "--n-max", "6", "--kn-max", "5"],
        exit: 0,
    },
];

pub fn selfloop(args: &[&str]) -> Output {
    let instances = tests_dir().join("golden/instances.txt");
    let args: Vec<&std::ffi::OsStr> = args
        .iter()
        .map(|a| {
            if *a == INSTANCES {
                instances.as_os_str()
            } else {
                a.as_ref()
            }
        })
        .collect();
    Command::new(env!("CARGO_BIN_EXE_selfloop"))
        .args(args)
        .output()
        .unwrap()
}

pub fn selfloop_stdin(args: &[&str], stdin: &str) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_selfloop"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

pub fn expected(name: &str) -> Vec<u8> {
    std::fs::read(tests_dir().join("golden").join(format!("{name}.out"))).unwrap()
}

/// Runs one golden case twice. Returns a description of the first mismatch.
pub fn check_golden(g: &Golden) -> Result<(), String> {
    let first = selfloop(g.args);
    let second = selfloop(g.args);
    if first.stdout != second.stdout {
        return Err(format!("{}: output differs between runs", g.name));
    }
    if first.status.code() != Some(g.exit) {
        return Err(format!(
            "{}: exit {:?}, expected {}",
            g.name,
            first.status.code(),
            g.exit
        ));
    }
    if first.stdout != expected(g.name) {
        return Err(format!("{}: output differs from golden file", g.name));
    }
    Ok(())
}
