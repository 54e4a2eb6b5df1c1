use sfd::data::{fake_degrees_from_dataset, validate_spin_table, ClassDataset, SpinTableDataset};
use sfd::pipeline::{prepare, Options};
use sfd_core::exact::{QuadComplex, Ring};
use sfd_core::molien::QNormalization;
use sfd_core::CartanType;

fn exported(t: &str) -> (ClassDataset, SpinTableDataset, sfd::pipeline::Prepared) {
    let p = prepare(t.parse().unwrap(), &Options::default()).unwrap();
    let cds = p.class_data.clone().unwrap();
    let ds = SpinTableDataset::from_table(&p.spin);
    (cds, ds, p)
}

#[test]
fn export_then_load_is_identity() {
    for t in ["G2", "B2", "A3", "A4", "B3", "D4", "F4"] {
        let (cds, ds, _) = exported(t);
        assert_eq!(ClassDataset::parse(&cds.to_text()).unwrap(), cds, "{t}");
        assert_eq!(SpinTableDataset::parse(&ds.to_text()).unwrap(), ds, "{t}");
        assert!(validate_spin_table(&ds, &cds).is_empty(), "{t}");
    }
}

#[test]
fn dataset_fake_degrees_agree_with_scratch() {
    for t in ["G2", "A4", "D4", "F4"] {
        let (cds, ds, p) = exported(t);
        let fake = fake_degrees_from_dataset(&ds, &cds, QNormalization::Sum).unwrap();
        let a: Vec<_> = fake.rows.iter().map(|r| r.p.clone()).collect();
        let b: Vec<_> = p.fake.rows.iter().map(|r| r.p.clone()).collect();
        assert_eq!(a, b, "{t}");
    }
}

#[test]
fn size_deficit_is_named() {
    let (cds, _, _) = exported("G2");
    let text = cds.to_text().replacen("size=1 ", "size=0 ", 1);
    let err = ClassDataset::parse(&text).unwrap_err().to_string();
    assert!(err.contains("deficit 1"), "{err}");
}

#[test]
fn odd_word_declared_even_is_rejected() {
    let text = "weyl_type G2\norder 12\nclass name=a size=12 word=1 parity=even split=yes\n";
    let err = ClassDataset::parse(text).unwrap_err().to_string();
    assert!(err.contains("declared even"), "{err}");
}

#[test]
fn split_even_class_needs_det_zero_when_declared_non_split() {
    let (cds, _, _) = exported("G2");
    let mut bad = cds.clone();
    let e = bad.entries.iter_mut().find(|e| e.split && !e.word.is_empty()).unwrap();
    e.split = false;
    assert!(bad.validate().unwrap_err().to_string().contains("non-split"));
}

#[test]
fn carter_parity_is_checked() {
    let text = "weyl_type G2\norder 12\nclass name=a size=12 word= parity=even split=yes carter=A1\n";
    let err = ClassDataset::parse(text).unwrap_err().to_string();
    assert!(err.contains("Carter"), "{err}");
}

#[test]
fn sign_flip_names_an_orthogonality_pair() {
    let (cds, mut ds, _) = exported("E6");
    let k = (1..ds.classes.len()).find(|&k| !ds.rows[3].values[k].is_zero()).unwrap();
    ds.rows[3].values[k] = -ds.rows[3].values[k].clone();
    let report = validate_spin_table(&ds, &cds);
    assert!(report.iter().any(|l| l.contains("orthogonality failure: <")), "{report:?}");
}

#[test]
fn missing_row_breaks_the_count_recipe() {
    let (cds, mut ds, _) = exported("F4");
    ds.rows.pop();
    let report = validate_spin_table(&ds, &cds);
    assert!(report.iter().any(|l| l.starts_with("count recipe")), "{report:?}");
    assert!(fake_degrees_from_dataset(&ds, &cds, QNormalization::Sum).is_err());
}

#[test]
fn type_m_value_on_odd_class_is_reported() {
    let (cds, mut ds, _) = exported("A4");
    let odd = ds.classes.iter().position(|c| c.1 == sfd_core::weyl::Parity::Odd).unwrap();
    let m = ds.rows.iter().position(|r| r.kind == sfd_core::spinchar::CharKind::M).unwrap();
    ds.rows[m].values[odd] = QuadComplex::one();
    let report = validate_spin_table(&ds, &cds);
    assert!(report.iter().any(|l| l.contains("nonzero on odd class")), "{report:?}");
}

#[test]
fn mismatched_types_are_rejected() {
    let (cds, ds, _) = exported("G2");
    let mut other = ds.clone();
    other.weyl_type = "B2".parse::<CartanType>().unwrap();
    assert!(!validate_spin_table(&other, &cds).is_empty());
}
