//! End-to-end runs of the `pentagon` binary. Golden reports live in
//! `tests/data/golden`; run with `BLESS=1` to regenerate them.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pentagon::algebra::Group;
use pentagon::constructions::{kac_takesaki_s, kac_takesaki_t};
use pentagon::corpus;
use pentagon::format::{pairmap_to_string, parse_table_file, table_file_to_string};
use pentagon::pentagon::{is_solution_direct, PairMap};
use serde_json::Value;
use tempfile::tempdir;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentagon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_arg(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

fn check_golden(name: &str, actual: &str) {
    let path = data("golden").join(name);
    if std::env::var_os("BLESS").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden {name} differs");
}

#[test]
fn verify_remark_map_reports_kernel_and_representatives() {
    let out = run(&[
        "verify",
        path_arg(&data("remark34.pairmap")),
        "--group",
        path_arg(&data("z6.group")),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("solution: true"));
    assert!(text.contains("kernel: 0 2 4\n"));
    assert!(text.contains("R: 0 1\n"));
    check_golden("verify_remark34.txt", &text);
}

#[test]
fn verify_uses_the_group_reference_in_the_map_file() {
    let out = run(&["verify", path_arg(&data("remark34.pairmap"))]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kernel: 0 2 4\n"));
}

#[test]
fn verify_flip_fails_with_witness() {
    let out = run(&["verify", path_arg(&data("flip2.pairmap"))]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("solution: false"));
    assert!(text.contains("witness: 0 1 0\n"));
    check_golden("verify_flip2.txt", &text);
}

#[test]
fn enumerate_s3_with_both_methods_and_classes() {
    let out = run(&[
        "enumerate",
        "--group",
        path_arg(&data("s3.group")),
        "--method",
        "both",
        "--classify",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("solutions: 5\n"));
    assert!(text.contains("classes: 3\n"));
    assert!(text.contains("agreement: true\n"));
    check_golden("enumerate_s3_both.txt", &text);

    let again = run(&[
        "enumerate",
        "--group",
        path_arg(&data("s3.group")),
        "--method",
        "both",
        "--classify",
    ]);
    assert_eq!(stdout(&again), text, "reports are byte-deterministic");
}

#[test]
fn structured_reports_are_json() {
    let out = run(&[
        "classify",
        "--group",
        path_arg(&data("z6.group")),
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["counts"]["solutions"], 9);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 7);
    check_golden("classify_z6.json", &stdout(&out));

    let out = run(&[
        "verify",
        path_arg(&data("flip2.pairmap")),
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["solution"], false);
    assert_eq!(doc["witness"], serde_json::json!([0, 1, 0]));
}

#[test]
fn other_verbs() {
    let out = run(&[
        "decompose",
        path_arg(&data("remark34.pairmap")),
        "--group",
        path_arg(&data("z6.group")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n: 6\nK: 0 2 4\nR: 0 1\n");

    let out = run(&["factorize", "--group", path_arg(&data("s3.group"))]);
    assert_eq!(out.status.code(), Some(0));
    check_golden("factorize_s3.txt", &stdout(&out));

    let out = run(&["props", path_arg(&data("flip2.pairmap"))]);
    assert_eq!(out.status.code(), Some(0));
    check_golden("props_flip2.txt", &stdout(&out));

    let out = run(&["enumerate", "--size", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("solutions: 24\n"));
}

#[test]
fn constructions_verify() {
    let dir = tempdir().unwrap();
    let s3 = data("s3.group");
    let z6 = data("z6.group");
    let cases: Vec<Vec<&str>> = vec![
        vec!["kt-s", "--group", path_arg(&s3)],
        vec!["kt-t", "--group", path_arg(&s3)],
        vec!["endo", "--group", path_arg(&z6), "--gamma", "0 3 0 3 0 3"],
        vec!["constant", "--group", path_arg(&z6), "--element", "0"],
        vec![
            "militaru", "--size", "3", "--alpha", "0 0 2", "--beta", "0 1 0",
        ],
        vec![
            "zakrzewski",
            "--group",
            path_arg(&s3),
            "--factor-a",
            "0 3 4",
            "--factor-b",
            "0 2",
        ],
        vec![
            "baaj-skandalis",
            "--group",
            path_arg(&s3),
            "--factor-a",
            "0,3,4",
            "--factor-b",
            "0,2",
        ],
        vec![
            "coset",
            "--group",
            path_arg(&z6),
            "--kernel",
            "0 2 4",
            "--reps",
            "0 1",
        ],
        vec!["sign", "--degree", "4"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let file = dir.path().join(format!("c{i}.pairmap"));
        let mut args = vec!["construct"];
        args.extend(case);
        args.extend(["-o", path_arg(&file)]);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{case:?}: {}", stderr(&out));
        assert!(out.stdout.is_empty());
        let verdict = run(&["verify", path_arg(&file)]);
        assert_eq!(
            verdict.status.code(),
            Some(0),
            "{case:?}: {}",
            stdout(&verdict)
        );
    }

    let bad = run(&[
        "construct",
        "endo",
        "--group",
        path_arg(&z6),
        "--gamma",
        "0 2 4 0 2 4",
    ]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).starts_with("error[algebra]"));
    let missing = run(&["construct", "coset", "--group", path_arg(&z6)]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).starts_with("error[usage]"));
}

#[test]
fn verify_agrees_with_the_library_on_the_corpus() {
    let dir = tempdir().unwrap();
    for (name, g) in corpus::all() {
        let n = g.order();
        let maps: Vec<(&str, PairMap)> = vec![
            ("kt-s", kac_takesaki_s(&g)),
            ("kt-t", kac_takesaki_t(&g)),
            ("flip", PairMap::flip(n)),
            ("identity", PairMap::identity(n)),
            (
                "shifted",
                PairMap::from_fn(n, |x, y| (g.mul(x, y), (y + 1) % n)),
            ),
        ];
        for (label, s) in maps {
            let file = dir
                .path()
                .join(format!("{}-{label}.pairmap", corpus::file_stem(name)));
            fs::write(&file, pairmap_to_string(Some(label), None, &s)).unwrap();
            let out = run(&["verify", path_arg(&file)]);
            let expected = if is_solution_direct(&s).holds() { 0 } else { 1 };
            assert_eq!(out.status.code(), Some(expected), "{name} {label}");
        }
    }
}

#[test]
fn canonical_files_round_trip() {
    for file in ["z6.group", "s3.group", "remark34.pairmap", "flip2.pairmap"] {
        let path = data(file);
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(
            table_file_to_string(&parse_table_file(&path).unwrap()),
            text,
            "{file}"
        );
    }
    let dir = tempdir().unwrap();
    let out_file = dir.path().join("kt.pairmap");
    let out = run(&[
        "construct",
        "kt-s",
        "--group",
        path_arg(&data("s3.group")),
        "-o",
        path_arg(&out_file),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&out_file).unwrap();
    assert_eq!(
        table_file_to_string(&parse_table_file(&out_file).unwrap()),
        text
    );
    assert_eq!(
        pairmap_to_string(
            Some("kt-s"),
            Some(path_arg(&data("s3.group"))),
            &kac_takesaki_s(&Group::symmetric(3))
        ),
        text
    );
}

#[test]
fn input_errors_exit_two_with_distinct_codes() {
    let dir = tempdir().unwrap();
    let bad = dir.path().join("bad.group");
    let mut table = fs::read_to_string(data("z6.group")).unwrap();
    table = table.replace("1 2 3 4 5 0", "1 2 3 4 5 7");
    fs::write(&bad, table).unwrap();
    let out = run(&["factorize", "--group", path_arg(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.starts_with("error[parse]: line 5"), "{err}");
    assert!(err.contains("row 1, col 5"), "{err}");

    let out = run(&["verify", path_arg(&dir.path().join("absent.pairmap"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[io]"));

    let out = run(&["enumerate", "--size", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[budget]"));

    let out = run(&[
        "enumerate",
        "--group",
        path_arg(&data("z6.group")),
        "--method",
        "theta",
        "--budget",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[budget]"));

    let out = run(&["verify", path_arg(&data("z6.group"))]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[usage]"));

    let out = run(&["enumerate", "--method", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
}
