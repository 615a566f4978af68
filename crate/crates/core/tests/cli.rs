use std::fs;
use std::process::{Command, Output};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .env_remove("QSCHUR_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn describe_reports_saturation() {
    let o = qschur(&["describe", "--type", "A1", "--pi", "0;2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("saturated: yes"));
    assert!(out.contains("dims: (0)=1 (2)=3"));
    assert!(out.contains("predicted: 10"));

    let out = stdout(&qschur(&["describe", "--type", "A1", "--pi", "2"]));
    assert!(out.contains("saturated: no"));
    assert!(out.contains("closure: {(0),(2)}"));

    let out = stdout(&qschur(&["describe", "--type", "A2", "--pi", "1,1"]));
    assert!(out.contains("closure: {(0,0),(1,1)}"));
    assert!(out.contains("dims: (0,0)=1 (1,1)=8"));
    assert!(out.contains("predicted: 65"));
}

#[test]
fn build_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.out");
    let b = dir.path().join("b.out");
    for p in [&a, &b] {
        let o = qschur(&[
            "build",
            "--type",
            "A1",
            "--pi",
            "0;2",
            "-o",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = fs::read(&a).unwrap();
    assert_eq!(text, fs::read(&b).unwrap());
    let text = String::from_utf8(text).unwrap();
    assert!(text.contains("dim 4\n"));
    assert_eq!(text.lines().filter(|l| l.contains(" rank ")).count(), 3);

    let o = qschur(&["build", "--type", "A1", "--pi", "1"]);
    assert!(stdout(&o).contains("dim 2\n"));
}

#[test]
fn matrix_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("g2.txt");
    fs::write(&m, "2\n2 -3\n-1 2\n").unwrap();
    let o = qschur(&["describe", "--matrix", m.to_str().unwrap(), "--pi", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dims: (0,0)=1 (1,0)=7"));
}

#[test]
fn verify_passes_and_detects_tampering() {
    let o = qschur(&["verify", "--type", "A1", "--pi", "0;2", "--abound", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = qschur(&["verify", "--type", "A2", "--pi", "0,0;1,0;0,1;1,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = qschur(&["verify", "--type", "A1", "--pi", "1", "--fault", "k-tamper"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("defect at"));
}

#[test]
fn dim_verdicts() {
    let out = stdout(&qschur(&[
        "dim",
        "--type",
        "A1",
        "--pi",
        "0;2",
        "--degree-bound",
        "10",
    ]));
    assert!(out.contains("assembled: 10\npresented: 10\nprediction: 10\n"));
    assert!(out.contains("verdict: AGREE"));

    let o = qschur(&[
        "dim",
        "--type",
        "A1",
        "--pi",
        "2",
        "--degree-bound",
        "8",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("presented=0\n"));
    assert!(out.contains("note="));

    let o = qschur(&[
        "dim",
        "--type",
        "A2",
        "--pi",
        "2,0;0,1",
        "--degree-bound",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("UNSTABILIZED"));
}

#[test]
fn envdim_contrast() {
    let out = stdout(&qschur(&[
        "envdim", "--type", "A1", "--hw", "2", "--d", "1",
    ]));
    assert!(out.contains("image: 9") && out.contains("prediction: 10"));
    let out = stdout(&qschur(&[
        "envdim", "--type", "A1", "--hw", "1", "--d", "2",
    ]));
    assert!(out.contains("image: 10") && out.contains("prediction: 10"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(
        qschur(&["describe", "--type", "Z3", "--pi", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qschur(&["build", "--type", "A1", "--pi", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qschur(&["describe", "--type", "A1", "--pi", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(qschur(&["describe", "--pi", "1"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(["build", "--type", "A2", "--pi", "0,0;1,1"])
        .env("QSCHUR_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn present_dumps_relations() {
    let o = qschur(&["present", "--type", "A1", "--pi", "1", "--classical"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("relations 14"));
    assert!(out.contains("coefficients classical"));
    assert!(out.contains("round degree="));
    assert!(out.contains("dimension: 4"));
}
