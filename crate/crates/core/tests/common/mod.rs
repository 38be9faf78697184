//! Helpers shared by the CLI and acceptance test targets.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

pub fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data/golden")
        .join(name)
}

pub fn su11_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su11"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

pub fn su11(args: &[&str]) -> Output {
    su11_in(&std::env::temp_dir(), args)
}

pub fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&su11(&full))).unwrap()
}

pub fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "output differs from {}", path.display());
}

/// Whether `actual` equals the checked-in golden file, without updating it.
pub fn matches_golden(name: &str, actual: &str) -> bool {
    std::fs::read_to_string(golden_path(name)).is_ok_and(|expected| expected == actual)
}

pub fn cases() -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    let commands = ["classify", "iwasawa", "conjugate", "sl2r", "coefficients"];
    let stacks = ["qw", "hw", "mirror"];
    let matrices = [
        ("hyperbolic", "2,0,1.7320508,0"),
        ("lens", "1,-1.5,1.5,0"),
        ("rotation", "0.6,0.8,0,0"),
    ];
    for cmd in commands {
        for s in stacks {
            if cmd == "conjugate" && s == "hw" {
                continue;
            }
            out.push((
                format!("{cmd}_{s}.txt"),
                vec![cmd.to_string(), "--stack".into(), data(&format!("{s}.stack"))],
            ));
            out.push((
                format!("{cmd}_{s}.json"),
                vec![
                    "--json".into(),
                    cmd.to_string(),
                    "--stack".into(),
                    data(&format!("{s}.stack")),
                ],
            ));
        }
        for (name, m) in matrices {
            out.push((
                format!("{cmd}_{name}.txt"),
                vec![cmd.to_string(), "--matrix".into(), m.to_string()],
            ));
        }
    }
    out
}

/// `(golden name, arguments)` for orbit runs; each writes the named file
/// into the working directory.
pub fn orbit_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        (
            "orbit_k.csv",
            vec!["orbit", "k", "--seed", "0.5,0", "--samples", "32", "-o", "orbit_k.csv"],
        ),
        (
            "orbit_a.csv",
            vec![
                "orbit",
                "a",
                "--seed",
                "0.3,0.2",
                "--range",
                "-14,14",
                "--samples",
                "32",
                "-o",
                "orbit_a.csv",
            ],
        ),
        (
            "orbit_n.svg",
            vec![
                "orbit",
                "n",
                "--seed",
                "0.3,0.2",
                "--samples",
                "64",
                "--format",
                "svg",
                "-o",
                "orbit_n.svg",
            ],
        ),
        (
            "orbit_a.svg",
            vec![
                "orbit",
                "a",
                "--seed",
                "-0.4,0.1",
                "--samples",
                "64",
                "--format",
                "svg",
                "-o",
                "orbit_a.svg",
            ],
        ),
    ]
}
