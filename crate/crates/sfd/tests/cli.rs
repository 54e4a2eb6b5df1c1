use std::path::Path;
use std::process::{Command, Output};

use sfd_core::exact::{format_complex, parse_complex};

fn sfd(args: &[&str], data_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sfd"))
        .args(args)
        .env("SFD_DATA_DIR", data_dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn empty_dir() -> tempfile::TempDir {
    tempfile::tempdir().unwrap()
}

#[test]
fn g2_half_table_as_csv() {
    let dir = empty_dir();
    let o = sfd(&["table", "G2", "--half", "--format", "csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2_s,2_ss,2_sss\n1,0,0\n1,0,1\n0,1,1\n0,2,0\n");
}

#[test]
fn b2_half_table() {
    let dir = empty_dir();
    let o = sfd(&["table", "B2", "--half", "--format", "csv"], dir.path());
    assert_eq!(stdout(&o), "(2),\"(1,1)\"\n1,0\n1,1\n0,2\n");
}

#[test]
fn json_has_type_n_degrees_and_columns() {
    let dir = empty_dir();
    let o = sfd(&["table", "G2", "--format", "json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "G2");
    assert_eq!(v["N"], 6);
    assert_eq!(v["degrees"], serde_json::json!([2, 6]));
    assert_eq!(v["characters"][0]["coefficients"], serde_json::json!([1, 1, 0, 0, 0, 1, 1]));
}

#[test]
fn missing_data_exits_2_and_points_at_basic() {
    let dir = empty_dir();
    for t in ["E8", "E7"] {
        let o = sfd(&["table", t], dir.path());
        assert_eq!(o.status.code(), Some(2), "{t}");
        let err = stderr(&o);
        assert!(err.contains(&format!("{t}.classes")) && err.contains(&format!("sfd basic {t}")), "{err}");
    }
}

#[test]
fn basic_closed_forms() {
    let dir = empty_dir();
    assert_eq!(stdout(&sfd(&["basic", "G2"], dir.path())), "1 + t + t^5 + t^6\n");
    assert!(stdout(&sfd(&["basic", "E7"], dir.path())).starts_with("2 + 2t + "));
    let o = sfd(&["basic", "F4", "--deep"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn verify_reports_census() {
    let dir = empty_dir();
    let o = sfd(&["verify", "E6"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("5 type M + 4 type Q"));
}

#[test]
fn verify_deep_g2() {
    let dir = empty_dir();
    let o = sfd(&["verify", "G2", "--deep"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS full-cover oracle"));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn corrupted_dataset_fails_with_a_named_pair() {
    let dir = empty_dir();
    let classes = sfd(&["classes", "F4", "--export"], dir.path());
    let spin = sfd(&["chartable", "F4", "--export"], dir.path());
    std::fs::write(dir.path().join("F4.classes"), stdout(&classes)).unwrap();
    let text = stdout(&spin);
    std::fs::write(dir.path().join("F4.spin"), &text).unwrap();
    let loaded = sfd(&["verify", "F4"], dir.path());
    assert_eq!(loaded.status.code(), Some(0), "{}", stderr(&loaded));
    assert!(stdout(&loaded).contains("loaded from curated data"));

    // Negate the first nonzero non-identity value of the first character.
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let i = lines.iter().position(|l| l.starts_with("char ")).unwrap();
    let (head, values) = lines[i].split_once("values=").unwrap();
    let mut vals: Vec<String> = values.split(';').map(str::to_string).collect();
    let k = (1..vals.len()).find(|&k| vals[k] != "0").unwrap();
    vals[k] = format_complex(&-parse_complex(&vals[k]).unwrap());
    lines[i] = format!("{head}values={}", vals.join(";"));
    std::fs::write(dir.path().join("F4.spin"), lines.join("\n")).unwrap();
    let o = sfd(&["verify", "F4"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("orthogonality failure: <"), "{}", stderr(&o));
}

#[test]
fn output_is_deterministic() {
    let dir = empty_dir();
    let a = sfd(&["table", "D4", "--format", "json"], dir.path());
    let b = sfd(&["table", "D4", "--format", "json"], dir.path());
    assert_eq!(a.stdout, b.stdout);
    let a = sfd(&["chartable", "A4"], dir.path());
    let b = sfd(&["chartable", "A4"], dir.path());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn half_table_reflects_to_full() {
    let dir = empty_dir();
    let half = stdout(&sfd(&["table", "F4", "--half", "--format", "csv"], dir.path()));
    let full = stdout(&sfd(&["table", "F4", "--format", "csv"], dir.path()));
    let half_rows: Vec<&str> = half.lines().skip(1).collect();
    let full_rows: Vec<&str> = full.lines().skip(1).collect();
    let n = full_rows.len() - 1;
    let mut rebuilt: Vec<&str> = half_rows.clone();
    rebuilt.extend(half_rows.iter().rev().skip(if n % 2 == 0 { 1 } else { 0 }));
    assert_eq!(rebuilt, full_rows);
}

#[test]
fn classes_and_molien_render() {
    let dir = empty_dir();
    let o = sfd(&["classes", "G2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("| name | size |"));
    let o = sfd(&["molien", "G2", "--format", "csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("2_s,2_ss,2_sss"));
}

#[test]
fn unsupported_type_is_a_usage_error() {
    let dir = empty_dir();
    let o = sfd(&["table", "C9"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}
