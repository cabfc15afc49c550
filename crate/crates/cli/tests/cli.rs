use std::fs;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qho-tunnel"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn qho-tunnel")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn exact_ground_state() {
    let out = stdout(&["exact", "--n", "0"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,p_exact,err_estimate"));
    assert!(lines.next().unwrap().starts_with("0,0.157299207050,"));
}

#[test]
fn exact_first_excited() {
    let out = stdout(&["exact", "--n", "1"]);
    assert!(out.lines().nth(1).unwrap().starts_with("1,0.1116"));
}

#[test]
fn range_rows_are_ordered() {
    let rows = data_rows(&stdout(&["exact", "--n-range", "5:7"]));
    let ns: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    assert_eq!(ns, ["5", "6", "7"]);
}

#[test]
fn asymptotic_orders() {
    let one = stdout(&["asympt", "--order", "1", "--n", "1"]);
    let two = stdout(&["asympt", "--order", "2", "--n", "1"]);
    let v1: f64 = data_rows(&one)[0][1].parse().unwrap();
    let v2: f64 = data_rows(&two)[0][1].parse().unwrap();
    assert!((v1 - 0.133975).abs() < 1e-6);
    assert!((v2 - 0.121723).abs() < 1e-6);

    let big: f64 = data_rows(&stdout(&["asympt", "--order", "1", "--n", "1000"]))[0][1]
        .parse()
        .unwrap();
    assert!((big - 0.133975 * 1000f64.powf(-1.0 / 3.0)).abs() < 1e-6);
}

#[test]
fn asymptotic_rejects_zero() {
    assert_eq!(run(&["asympt", "--order", "1", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["asympt", "--order", "3", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["exact"][..],
        &["exact", "--n-range", "7:5"],
        &["exact", "--n-range", "1:5:0"],
        &["exact", "--n", "-1"],
        &["exact", "--n", "1", "--rel-tol", "0"],
        &["fig", "--id", "9"],
        &["fig", "--id", "1", "--plot-script"],
        &["bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert!(run(&["--help"]).status.success());
}

#[test]
fn compare_second_order_wins_at_large_n() {
    let rows = data_rows(&stdout(&["compare", "--n-range", "513:520"]));
    assert_eq!(rows.len(), 8);
    for r in rows {
        let lead: f64 = r[4].parse().unwrap();
        let second: f64 = r[5].parse().unwrap();
        assert!(second < lead, "{r:?}");
    }
}

#[test]
fn fn_command_ratio_above_one() {
    let rows = data_rows(&stdout(&["fn", "--n-range", "6:10:2"]));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1][0], "8");
    for r in rows {
        let ratio: f64 = r[2].parse().unwrap();
        assert!(ratio > 1.0 && ratio < 1.05);
    }
}

#[test]
fn lemma_report() {
    let out = stdout(&["lemma", "--x-max", "20", "--grid", "2000"]);
    assert!(out.contains("grid_size: 2000"));
    assert!(out.contains("endpoint_left: 0.629960524947"));
    assert!(out.contains("passed: true"));
}

#[test]
fn figure_four_rows() {
    let out = stdout(&["fig", "--id", "4"]);
    assert_eq!(out.lines().next(), Some("n,ratio"));
    assert_eq!(data_rows(&out).len(), 495);
}

#[test]
fn figure_three_starts_at_turning_point() {
    let out = stdout(&["fig", "--id", "3"]);
    assert_eq!(out.lines().nth(1), Some("1,0"));
}

#[test]
fn output_is_reproducible() {
    let a = run(&["compare", "--n-range", "1:30"]);
    let b = run(&["compare", "--n-range", "1:30"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("exact.csv");
    let printed = stdout(&["exact", "--n-range", "0:4"]);
    stdout(&["exact", "--n-range", "0:4", "--out", path.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(&path).unwrap(), printed);
}

#[test]
fn figure_with_plot_script() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let printed = stdout(&["fig", "--id", "1", "--out", path.to_str().unwrap(), "--plot-script"]);
    assert!(printed.is_empty());
    let main = fs::read_to_string(&path).unwrap();
    assert!(main.starts_with("x,p_density,p_class\n"));
    let side = fs::read_to_string(dir.path().join("fig1_tunneling.csv")).unwrap();
    assert!(side.starts_with("n,p_tun\n0,0.157299207050\n"));
    let script = fs::read_to_string(dir.path().join("fig1.gp")).unwrap();
    assert!(script.contains("'fig1.csv'"));
    assert!(script.contains("'fig1_tunneling.csv'"));
}

#[test]
fn failed_run_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    let out = run(&["asympt", "--order", "1", "--n-range", "0:3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());
}
