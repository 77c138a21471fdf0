use std::process::{Command, Output};

use rre::baselines::{NnResult, PerceptronResult};
use rre::datasets::builtin_listing;
use rre::eval::parse_surface;
use rre::RreModel;

fn rre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rre"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reproduce_iris_table() {
    let o = rre(&["reproduce", "table3.2a"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("PASS table3.2a both test miss: expected 1/60, got 1/60"),
        "{text}"
    );
    assert!(text.contains("PASS table3.2a misclassified point: expected (4.5, 2.3)"));
    assert!(text.trim_end().ends_with("PASS table3.2a"));
}

#[test]
fn reproduce_every_target() {
    let targets = [
        "table3.2a",
        "table3.2b",
        "table3.2c",
        "table3.3a",
        "table3.3b",
        "table3.3c",
        "table3.7",
        "table3.7.2",
        "svm4.3",
        "table5.1",
        "table5.2",
        "table5.3",
    ];
    let mut args = vec!["reproduce"];
    args.extend(targets);
    let o = rre(&args);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    for t in targets {
        assert!(text.contains(&format!("\nPASS {t}\n")), "{t}");
    }
    assert!(text.contains("INFO table5.2 epochs: published 32"));
}

#[test]
fn svm_worked_example() {
    let o = rre(&[
        "baseline",
        "svm",
        "--dataset",
        "support1",
        "--sv",
        "5,3;5.4,3.3|5.4,3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("a_hat = [6.0000, -5.0000, 6.6667]"), "{text}");
    assert!(text.contains("rho = 0.1200"));
}

#[test]
fn svm_rejects_foreign_support_vector() {
    let o = rre(&["baseline", "svm", "--sv", "5,3;9,9|5.4,3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn xor_eval_lists_scores() {
    let o = rre(&["rre", "eval", "--dataset", "xor", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "train  (-1, -1)           two       -0.9993  two",
        "train  (-1, 1)            one        0.9993  one",
        "train  (1, -1)            one        0.9993  one",
        "train  (1, 1)             two       -0.9993  two",
    ] {
        assert!(text.contains(line), "{line}\n{text}");
    }
}

#[test]
fn eval_csv_report() {
    let o = rre(&[
        "rre",
        "eval",
        "--dataset",
        "iris_setosa_versicolor",
        "--split",
        "0.4",
        "--f",
        "const:20",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("category,train_miss,train_total,test_miss,test_total,acc_excl,acc_incl")
    );
    assert!(text.contains("\nboth,0,40,1,60,"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(rre(&[]).status.code(), Some(1));
    assert_eq!(rre(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        rre(&["rre", "eval", "--dataset", "xor", "--bogus"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(rre(&["reproduce", "table9.9"]).status.code(), Some(1));
    assert_eq!(
        rre(&["rre", "eval", "--dataset", "xor", "--f", "cubic"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        rre(&[
            "rre",
            "eval",
            "--dataset",
            "iris_setosa_versicolor",
            "--split",
            "0.33"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(rre(&["--help"]).status.code(), Some(0));
}

#[test]
fn surface_streams_csv() {
    let o = rre(&[
        "rre",
        "surface",
        "--dataset",
        "xor",
        "--grid",
        "-1.5,1.5,-1.5,1.5,2,2",
        "--out",
        "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    let s = parse_surface(&text).unwrap();
    assert_eq!((s.values.nx, s.values.ny), (2, 2));
}

#[test]
fn output_is_byte_identical() {
    let args = [
        "rre",
        "surface",
        "--dataset",
        "support2",
        "--f",
        "const:2",
        "--grid",
        "0,20,0,20,31,31",
    ];
    assert_eq!(rre(&args).stdout, rre(&args).stdout);
}

#[test]
fn dataset_export_matches_listing() {
    let o = rre(&["datasets", "export", "--dataset", "support1"]);
    assert_eq!(stdout(&o), builtin_listing("support1").unwrap());
    let list = stdout(&rre(&["datasets", "list"]));
    assert_eq!(list.lines().count(), 5);
}

#[test]
fn file_dataset_and_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("pts.csv");
    std::fs::write(&csv, "x1,x2,label\n0,0,1\n0,1,1\n3,3,2\n3,4,2\n").unwrap();
    let snap = dir.path().join("model.txt");
    let o = rre(&[
        "rre",
        "filter",
        "--dataset",
        csv.to_str().unwrap(),
        "--lambda",
        "0.5",
        "--out",
        snap.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("training accuracy after filtering: 100.00%"));
    let model = RreModel::from_snapshot(&std::fs::read_to_string(&snap).unwrap()).unwrap();
    assert!(model.n1() >= 1 && model.n2() >= 1);

    let pca = dir.path().join("pca.txt");
    let curve = dir.path().join("curve.csv");
    let o = rre(&[
        "baseline",
        "perceptron",
        "--dataset",
        "iris_setosa_versicolor",
        "--split",
        "0.6",
        "--out",
        pca.to_str().unwrap(),
        "--curve",
        curve.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let fit = PerceptronResult::from_text(&std::fs::read_to_string(&pca).unwrap()).unwrap();
    assert!(fit.converged);
    let curve = std::fs::read_to_string(&curve).unwrap();
    assert_eq!(curve.lines().count(), fit.iterations as usize + 1);

    let o = rre(&["baseline", "nn", "--max-epochs", "10", "--out", "-"]);
    let text = stdout(&o);
    let snapshot = &text[text.find("nn221 v1").unwrap()..];
    assert_eq!(NnResult::from_text(snapshot).unwrap().epochs, 10);
}

#[test]
fn fisher_flags_support2() {
    let text = stdout(&rre(&["baseline", "fisher", "--dataset", "support2"]));
    assert!(text.contains("degenerate = true"), "{text}");
}
