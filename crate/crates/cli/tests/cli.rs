use std::process::{Command, Output};

use heckechar::LaurentHalf;
use serde_json::Value;

fn heckechar(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_heckechar"));
    cmd.args(args);
    for k in [
        "HECKECHAR_CONFIG",
        "HECKECHAR_THREADS",
        "HECKECHAR_MAX_GROUP_ORDER",
        "HECKECHAR_MAX_SUBGROUP_ORDER",
        "HECKECHAR_MAX_DEGREE",
    ] {
        cmd.env_remove(k);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = heckechar(args, &[]);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str], env: &[(&str, &str)]) -> i32 {
    heckechar(args, env).status.code().expect("exit code")
}

#[test]
fn char_examples() {
    assert_eq!(
        stdout(&[
            "char", "--type", "A", "--n", "6", "--lambda", "3,2,1", "--base", "trivial", "--K",
            "s1,s3"
        ]),
        "24*q^2 - 28*q + 8\n"
    );
    assert_eq!(
        stdout(&[
            "char", "--type", "A", "--n", "6", "--lambda", "3,2,1", "--base", "sign", "--K",
            "s1,s3"
        ]),
        "8*q^2 - 28*q + 24\n"
    );
    assert_eq!(
        stdout(&[
            "char", "--type", "I", "--m", "14", "--c", "1", "--base", "sign", "--len", "9",
            "--start", "1"
        ]),
        "2*q^5 - 3*q^4 - 1\n"
    );
    assert_eq!(
        stdout(&["char", "--type", "I", "--m", "14", "--c", "1", "--len", "9", "--start", "1"]),
        "q^9 + 3*q^5 - 2*q^4\n"
    );
    assert_eq!(
        stdout(&[
            "char",
            "--type",
            "B",
            "--n",
            "5",
            "--J",
            "t,s1,s2,s4",
            "--K",
            "t,s1,s3"
        ]),
        "12*q^3 - 12*q^2 + 2*q\n"
    );
    assert_eq!(
        stdout(&[
            "char", "--type", "B", "--n", "5", "--lambda", "-3,2", "--base", "sign", "--K",
            "t,s1,s3"
        ]),
        "-2*q^2 + 12*q - 12\n"
    );
    assert_eq!(
        stdout(&[
            "char", "--type", "B", "--n", "5", "--lambda", "-2,2,1", "--base", "sign", "--K",
            "t,s1,s3"
        ]),
        "2*q^3 - 27*q^2 + 62*q - 41\n"
    );
    assert_eq!(
        stdout(&[
            "char",
            "--type",
            "D",
            "--n",
            "5",
            "--J",
            "t,s1,s2,s4",
            "--w",
            "-1,-2,4,3,5"
        ]),
        "13*q^3 - 17*q^2 + 8*q - 2\n"
    );
}

#[test]
fn routes_agree() {
    for extra in [
        &["--w", "3412"][..],
        &["--w", "s2*s1*s3*s2"],
        &["--K", "s1,s3"],
    ] {
        let base = ["char", "--type", "A", "--n", "4", "--lambda", "2,2"];
        let auto = stdout(&[&base[..], extra].concat());
        let oracle = stdout(&[&base[..], extra, &["--route", "oracle"]].concat());
        assert_eq!(auto, oracle, "{extra:?}");
        let base = ["char", "--type", "A", "--n", "4", "--irreducible", "2,1,1"];
        let auto = stdout(&[&base[..], extra].concat());
        let oracle = stdout(&[&base[..], extra, &["--route", "oracle"]].concat());
        assert_eq!(auto, oracle, "{extra:?}");
    }
    assert_eq!(
        stdout(&["char", "--type", "B", "--n", "3", "--lambda", "2,-1", "--K", "s1"]),
        "7*q - 5\n"
    );
}

#[test]
fn sequence_table() {
    let out = stdout(&[
        "char",
        "--type",
        "A",
        "--n",
        "6",
        "--lambda",
        "3,2,1",
        "--K",
        "s1,s3",
        "--sequences",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "a\tweight");
    assert_eq!(lines.len(), 26);
    assert_eq!(lines[25], "total\t24*q^2 - 28*q + 8");
}

#[test]
fn tables() {
    let csv = stdout(&["table", "--type", "A", "--n", "6", "--format", "csv"]);
    assert!(csv.starts_with("lambda,mu,value\n"));
    assert!(csv.contains("\n\"3,2,1\",\"2,2,2\",2*q^3 - 6*q^2 + 6*q - 2\n"));
    assert_eq!(csv.lines().count(), 1 + 11 * 11);

    let two = stdout(&["table", "--type", "A", "--n", "2", "--format", "csv"]);
    assert_eq!(
        two,
        "lambda,mu,value\n2,2,q\n2,\"1,1\",1\n\"1,1\",2,-1\n\"1,1\",\"1,1\",1\n"
    );
    assert_eq!(
        stdout(&["table", "--type", "A", "--n", "1", "--format", "csv"]),
        "lambda,mu,value\n1,1,1\n"
    );
    assert_eq!(
        stdout(&["table", "--type", "A", "--n", "3", "--format", "csv"]),
        stdout(&["table", "--type", "A", "--n", "3", "--format", "csv", "--route", "oracle"])
    );

    let induced = stdout(&[
        "table", "--type", "I", "--m", "5", "--c", "2", "--format", "csv",
    ]);
    assert_eq!(induced.lines().count(), 11);
    let induced = stdout(&[
        "table", "--type", "B", "--n", "2", "--lambda", "-1,1", "--base", "sign", "--format", "csv",
    ]);
    assert_eq!(induced.lines().count(), 5);
}

#[test]
fn json_round_trips() {
    let v: Value = serde_json::from_str(&stdout(&[
        "char", "--type", "A", "--n", "6", "--lambda", "3,2,1", "--K", "s1,s3", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["value"], "24*q^2 - 28*q + 8");
    assert_eq!(v["base"], "trivial");
    assert_eq!(v["character"], "3,2,1");
    assert_eq!(v["element"], "214356");

    let table: Value = serde_json::from_str(&stdout(&[
        "table", "--type", "A", "--n", "4", "--format", "json",
    ]))
    .unwrap();
    let entries = table["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 25);
    for e in entries {
        let s = e["value"].as_str().unwrap();
        let p: LaurentHalf = s.parse().unwrap();
        assert_eq!(p.to_string(), s);
    }
    let again: Value = serde_json::from_str(&serde_json::to_string(&table).unwrap()).unwrap();
    assert_eq!(again, table);

    let expand: Value = serde_json::from_str(&stdout(&[
        "expand", "--mu", "3,3", "--r", "7", "--format", "json",
    ]))
    .unwrap();
    let term = expand["terms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["shape"] == "5,4,3,1")
        .unwrap();
    assert_eq!(term["coeff"], "q^4 - q^3");

    let report: Value = serde_json::from_str(&stdout(&[
        "verify", "--suite", "I", "--m", "5", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(report[0]["suite"], "i");
    assert!(report[0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["failure"].is_null()));
}

#[test]
fn expand_examples() {
    let out = stdout(&["expand", "--mu", "3,3", "--r", "7"]);
    assert!(out.contains("+ (q^4 - q^3)*s[5,4,3,1]"), "{out}");
    assert_eq!(
        stdout(&["expand", "--mu", "", "--r", "3"]),
        "q^2*s[3] - q*s[2,1] + s[1,1,1]\n"
    );
    let out = stdout(&["expand", "--mu", "4,2,2,2", "--r", "10"]);
    assert!(!out.contains("s[6,5,4,3,2]"));
}

#[test]
fn verify_examples() {
    for args in [
        &["verify", "--suite", "A", "--n", "4"][..],
        &["verify", "--suite", "I", "--m", "6"],
        &["verify", "--suite", "omega", "--n", "5"],
    ] {
        let out = stdout(args);
        assert!(out.lines().skip(1).all(|l| l.starts_with("PASS")), "{out}");
    }
    assert_eq!(code(&["verify", "--suite", "nope"], &[]), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(
            &["char", "--type", "A", "--n", "3", "--lambda", "2,x", "--K", "s1"],
            &[]
        ),
        2
    );
    assert_eq!(
        code(
            &["char", "--type", "A", "--n", "3", "--lambda", "2,2", "--K", "s1"],
            &[]
        ),
        2
    );
    assert_eq!(code(&["char", "--bogus"], &[]), 2);
    assert_eq!(
        code(
            &["char", "--type", "D", "--n", "4", "--J", "t,s2", "--K", "s1"],
            &[]
        ),
        3
    );
    assert_eq!(
        code(
            &[
                "char", "--type", "B", "--n", "3", "--lambda", "2,-1", "--K", "s1", "--route",
                "oracle"
            ],
            &[]
        ),
        3
    );
    assert_eq!(code(&["expand", "--mu", "3,3", "--r", "30"], &[]), 4);
    assert_eq!(
        code(
            &["char", "--type", "A", "--n", "5", "--J", "s1", "--w", "21453", "--route", "oracle"],
            &[("HECKECHAR_MAX_SUBGROUP_ORDER", "10")]
        ),
        4
    );
    assert_eq!(
        code(
            &["verify", "--suite", "A", "--n", "4"],
            &[("HECKECHAR_MAX_GROUP_ORDER", "5")]
        ),
        4
    );
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bounds.toml");
    std::fs::write(&path, "max_degree = 8\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        code(&["expand", "--mu", "3,3", "--r", "7", "--config", p], &[]),
        4
    );
    assert_eq!(
        code(&["expand", "--mu", "3,3", "--r", "2", "--config", p], &[]),
        0
    );
    assert_eq!(
        code(
            &["expand", "--mu", "3,3", "--r", "7"],
            &[("HECKECHAR_CONFIG", p)]
        ),
        4
    );
    assert_eq!(
        code(
            &["expand", "--mu", "3,3", "--r", "7", "--config", p],
            &[("HECKECHAR_MAX_DEGREE", "20")]
        ),
        0
    );
    std::fs::write(&path, "max_dgree = 8\n").unwrap();
    assert_eq!(
        code(&["expand", "--mu", "3,3", "--r", "2", "--config", p], &[]),
        2
    );
}

#[test]
fn output_is_byte_stable() {
    let args = ["table", "--type", "A", "--n", "5", "--format", "json"];
    let one = heckechar(&args, &[("HECKECHAR_THREADS", "1")]);
    let four = heckechar(&args, &[("HECKECHAR_THREADS", "4")]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let verify = ["verify", "--suite", "irreducible", "--n", "4"];
    assert_eq!(
        heckechar(&verify, &[("HECKECHAR_THREADS", "1")]).stdout,
        heckechar(&verify, &[("HECKECHAR_THREADS", "3")]).stdout
    );
}
