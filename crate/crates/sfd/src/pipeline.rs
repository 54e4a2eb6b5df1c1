//! Loading or computing a spin table, deriving fake degrees and checking them.

use std::path::PathBuf;

use sfd_core::molien::{
    basic_spin_closed_form, full_cover_oracle_h, mass_target, palindrome_check, poincare_identity_check, FakeDegreeTable,
    QNormalization,
};
use sfd_core::exact::{QuadComplex, Rational, Ring};
use sfd_core::spinchar::{identify_basic_spin, CharKind, SpinCharacterTable, SpinComputation};
use sfd_core::weyl::{group_order, Parity};
use sfd_core::{CartanType, Family, RootSystem};

use crate::data::{self, ClassDataset};
use crate::reference::{match_columns, reference_table, ColumnMatch};

pub const DEFAULT_BUDGET: u64 = 100_000;
pub const EXTENDED_BUDGET: u64 = 3_000_000;

#[derive(Clone, Debug)]
pub struct Options {
    pub data_dir: PathBuf,
    pub budget: u64,
    pub extended: bool,
    /// Forces a type Q normalization instead of selecting one by the reference.
    pub normalization: Option<QNormalization>,
}

impl Default for Options {
    fn default() -> Self {
        Options { data_dir: PathBuf::from("data"), budget: DEFAULT_BUDGET, extended: false, normalization: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    /// Curated data is required but absent.
    MissingData(String),
    Failed(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::MissingData(m) | Failure::Failed(m) => f.write_str(m),
        }
    }
}

impl From<sfd_core::Error> for Failure {
    fn from(e: sfd_core::Error) -> Self {
        Failure::Failed(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Scratch,
    Dataset,
}

pub struct Prepared {
    pub rs: RootSystem,
    pub source: Source,
    pub spin: SpinCharacterTable,
    pub fake: FakeDegreeTable,
    pub computation: Option<SpinComputation>,
    pub class_data: Option<ClassDataset>,
    /// Set when a published table exists and every column matched.
    pub matched: Option<ColumnMatch>,
    pub notes: Vec<String>,
}

/// Whether `t` is computed from scratch under these options.
pub fn enumerable(t: CartanType, opts: &Options) -> bool {
    let Ok(rs) = RootSystem::new(t) else { return false };
    let order = group_order(&rs);
    if t.family() == Family::E && t.rank() == 7 && !opts.extended {
        return false;
    }
    let budget = if opts.extended { opts.budget.max(EXTENDED_BUDGET) } else { opts.budget };
    order <= budget as u128
}

fn missing_message(t: CartanType, opts: &Options) -> String {
    let extended = if t.family() == Family::E && t.rank() == 7 { " (or rerun with --extended)" } else { "" };
    format!(
        "{t} is not enumerated under the current budget and no curated data was found: expected {} and {}{extended}. \
         The basic spin column is still available via `sfd basic {t}`.",
        data::class_path(&opts.data_dir, t).display(),
        data::spin_path(&opts.data_dir, t).display()
    )
}

fn load_spin_table(t: CartanType, rs: &RootSystem, opts: &Options) -> Result<(Source, SpinCharacterTable, Option<SpinComputation>, Option<ClassDataset>), Failure> {
    let cpath = data::class_path(&opts.data_dir, t);
    let spath = data::spin_path(&opts.data_dir, t);
    if cpath.exists() && spath.exists() {
        let cds = data::load_class_dataset(&cpath)?;
        let ds = data::load_spin_dataset(&spath)?;
        let report = data::validate_spin_table(&ds, &cds);
        if !report.is_empty() {
            return Err(Failure::Failed(format!("{} failed validation:\n  {}", spath.display(), report.join("\n  "))));
        }
        let spin = data::assemble(&ds, &cds)?;
        return Ok((Source::Dataset, spin, None, Some(cds)));
    }
    if !enumerable(t, opts) {
        return Err(Failure::MissingData(missing_message(t, opts)));
    }
    let budget = if opts.extended { opts.budget.max(EXTENDED_BUDGET) } else { opts.budget };
    let comp = SpinComputation::new(rs, budget)?;
    let cds = ClassDataset::from_computation(&comp);
    Ok((Source::Scratch, comp.spin.clone(), Some(comp), Some(cds)))
}

/// Reorders (and optionally relabels) characters, fake degree rows and the
/// graded constituents in step.
fn apply_order(
    spin: &mut SpinCharacterTable,
    fake: &mut FakeDegreeTable,
    comp: Option<&mut SpinComputation>,
    order: &[usize],
    labels: &[String],
) {
    spin.characters = order.iter().map(|&i| spin.characters[i].clone()).collect();
    fake.rows = order.iter().map(|&i| fake.rows[i].clone()).collect();
    for (k, label) in labels.iter().enumerate() {
        spin.characters[k].label = label.clone();
        fake.rows[k].label = label.clone();
    }
    if let Some(c) = comp {
        c.reorder(order);
        c.spin = spin.clone();
    }
}

/// Computes fake degrees, labels them canonically and, when a published
/// table exists, adopts its labels and column order. Without a forced
/// normalization the sum convention is tried first, then the half one.
pub fn prepare(t: CartanType, opts: &Options) -> Result<Prepared, Failure> {
    let rs = RootSystem::new(t)?;
    let (source, base_spin, base_comp, class_data) = load_spin_table(t, &rs, opts)?;
    let reference = reference_table(t);
    let candidates = match opts.normalization {
        Some(n) => vec![n],
        None => vec![QNormalization::Sum, QNormalization::Half],
    };
    let mut notes = Vec::new();
    let mut fallback = None;
    for norm in candidates {
        let mut spin = base_spin.clone();
        let mut comp = base_comp.clone();
        let mut fake = match FakeDegreeTable::compute(&spin, rs.degrees(), norm) {
            Ok(f) => f,
            Err(e) => {
                notes.push(format!("{norm} normalization: {e}"));
                continue;
            }
        };
        let polys: Vec<_> = fake.rows.iter().map(|r| r.p.clone()).collect();
        let order = spin.assign_canonical_labels(&polys)?;
        fake.rows = order.iter().map(|&i| fake.rows[i].clone()).collect();
        for (r, c) in fake.rows.iter_mut().zip(&spin.characters) {
            r.label = c.label.clone();
        }
        if let Some(c) = comp.as_mut() {
            c.reorder(&order);
            c.spin = spin.clone();
        }
        let Some(reference) = &reference else {
            return Ok(Prepared { rs, source, spin, fake, computation: comp, class_data, matched: None, notes });
        };
        match match_columns(&fake, reference) {
            Ok(m) => {
                apply_order(&mut spin, &mut fake, comp.as_mut(), &m.computed, &reference.labels);
                if spin.type_census().1 == 0 {
                    notes.push("no type Q characters; the normalization does not apply".to_string());
                } else {
                    notes.push(format!("type Q normalization: {norm} (matches the published table)"));
                }
                for tie in &m.ties {
                    notes.push(format!("identical columns: {}", tie.join(", ")));
                }
                for label in &m.kind_mismatches {
                    notes.push(format!("column {label}: published type tag differs from the computed type"));
                }
                return Ok(Prepared { rs, source, spin, fake, computation: comp, class_data, matched: Some(m), notes });
            }
            Err(missing) => {
                notes.push(format!("{norm} normalization: no published match for {}", missing.join(", ")));
                fallback.get_or_insert((spin, fake, comp));
            }
        }
    }
    match fallback {
        Some((spin, fake, comp)) => Ok(Prepared { rs, source, spin, fake, computation: comp, class_data, matched: None, notes }),
        None => Err(Failure::Failed(notes.join("; "))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name, passed, detail: detail.into() }
    }
}

/// Graded values on every cover class, scaled for the table's normalization.
pub fn graded_cover_values(comp: &SpinComputation, fake: &FakeDegreeTable, row: usize) -> Vec<QuadComplex> {
    let values = comp.graded_cover_values(row);
    if fake.rows[row].kind == CharKind::Q && fake.normalization == QNormalization::Half {
        values.iter().map(|v| v.scale(&fake.normalization.factor())).collect()
    } else {
        values
    }
}

/// Every consistency check available for the prepared table; `deep` adds
/// the full-cover Molien oracle.
pub fn verify(p: &Prepared, deep: bool) -> Vec<Check> {
    let mut checks = Vec::new();
    let report = p.spin.check();
    checks.push(Check::new(
        "character table",
        report.is_empty(),
        if report.is_empty() { "orthogonality, type M vanishing and count recipe hold".to_string() } else { report.join("; ") },
    ));
    let (m, q) = p.spin.type_census();
    checks.push(Check::new("census", true, format!("{m} type M + {q} type Q")));

    let bad: Vec<&str> = p.fake.rows.iter().filter(|r| !palindrome_check(&r.p, p.fake.n)).map(|r| r.label.as_str()).collect();
    checks.push(Check::new(
        "palindromic",
        bad.is_empty(),
        if bad.is_empty() { format!("{} columns palindromic of degree {}", p.fake.rows.len(), p.fake.n) } else { bad.join(", ") },
    ));

    let closed = basic_spin_closed_form(p.rs.rank(), p.rs.degrees());
    match identify_basic_spin(&p.spin) {
        Ok(row) => {
            let ok = p.fake.rows[row].p == closed;
            let verdict = if ok { "equals" } else { "differs from" };
            checks.push(Check::new("basic spin", ok, format!("{} {verdict} m·∏(1 + t^(d-1))", p.fake.rows[row].label)));
        }
        Err(e) => checks.push(Check::new("basic spin", false, e.to_string())),
    }

    let mass = p.fake.mass();
    let target = Rational::from_int(mass_target(&p.rs, p.spin.weyl_order));
    checks.push(Check::new("mass identity", mass == target, format!("{mass} vs dim B·|W| = {target}")));

    let trace_failures = data::trace_identity_failures(&p.spin);
    checks.push(Check::new(
        "trace identity",
        trace_failures.is_empty(),
        if trace_failures.is_empty() { "trace² = det(I + x) on even split classes".to_string() } else { trace_failures.join("; ") },
    ));

    if let Some(comp) = &p.computation {
        let mut failures = Vec::new();
        for row in 0..p.fake.rows.len() {
            let values = comp.graded_cover_values(row);
            for (k, cls) in comp.classes.classes.iter().enumerate() {
                let parity = comp.classes.weyl.classes[cls.weyl_class].parity;
                if (cls.lift_sign == 0 || parity == Parity::Odd) && !values[k].is_zero() {
                    failures.push(format!("{} on cover class {k}", p.fake.rows[row].label));
                }
            }
        }
        checks.push(Check::new(
            "vanishing",
            failures.is_empty(),
            if failures.is_empty() { "graded characters vanish on odd and non-split classes".to_string() } else { failures.join("; ") },
        ));
        let ok = poincare_identity_check(comp.cover.weyl(), p.rs.degrees(), p.fake.n + 1);
        checks.push(Check::new("Poincaré identity", ok, format!("through t^{}", p.fake.n)));
        if deep {
            let mut failures = Vec::new();
            for (row, r) in p.fake.rows.iter().enumerate() {
                let chi = graded_cover_values(comp, &p.fake, row);
                match full_cover_oracle_h(&chi, &comp.cover, &comp.classes, p.fake.n + 1) {
                    Ok(h) if h == r.h => {}
                    Ok(_) => failures.push(format!("{}: oracle series differs", r.label)),
                    Err(e) => failures.push(format!("{}: {e}", r.label)),
                }
            }
            checks.push(Check::new(
                "full-cover oracle",
                failures.is_empty(),
                if failures.is_empty() { format!("{} columns agree", p.fake.rows.len()) } else { failures.join("; ") },
            ));
        }
    }

    match (&p.matched, reference_table(p.rs.cartan())) {
        (Some(m), _) => {
            let mut detail = format!("all {} columns match the published table", m.computed.len());
            if !m.kind_mismatches.is_empty() {
                detail.push_str(&format!("; type tag differs for {}", m.kind_mismatches.join(", ")));
            }
            checks.push(Check::new("published table", true, detail));
        }
        (None, Some(_)) => {
            checks.push(Check::new("published table", false, "columns do not match the published table"));
        }
        (None, None) => {}
    }
    checks
}
