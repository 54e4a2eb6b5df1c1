use sfd_core::exact::{format_complex, parse_complex, IntPolynomial, QuadComplex, Ring};
use sfd_core::molien::{basic_spin_closed_form, FakeDegreeTable, QNormalization};
use sfd_core::spinchar::{identify_basic_spin, CharKind, SpinComputation};
use sfd_core::weyl::{group_order, WeylGroup};
use sfd_core::{CartanType, RootSystem};

fn computation(t: &str) -> (RootSystem, SpinComputation) {
    let rs = RootSystem::new(t.parse::<CartanType>().unwrap()).unwrap();
    let c = SpinComputation::new(&rs, 100_000).unwrap();
    (rs, c)
}

#[test]
fn g2_fake_degrees() {
    let (rs, c) = computation("G2");
    let fake = FakeDegreeTable::compute(&c.spin, rs.degrees(), QNormalization::Sum).unwrap();
    let mut columns: Vec<Vec<i64>> = fake.rows.iter().map(|r| r.p.coeffs().to_vec()).collect();
    columns.sort();
    assert_eq!(columns, vec![vec![0, 0, 1, 2, 1], vec![0, 1, 1, 0, 1, 1], vec![1, 1, 0, 0, 0, 1, 1]]);
}

#[test]
fn basic_spin_matches_closed_form_in_type_a() {
    for t in ["A2", "A3", "A4", "A5"] {
        let (rs, c) = computation(t);
        let fake = FakeDegreeTable::compute(&c.spin, rs.degrees(), QNormalization::Sum).unwrap();
        let row = identify_basic_spin(&c.spin).unwrap();
        assert_eq!(fake.rows[row].p, basic_spin_closed_form(rs.rank(), rs.degrees()), "{t}");
    }
}

#[test]
fn b3_has_type_q_characters_with_imaginary_values() {
    let (_, c) = computation("B3");
    let (_, q) = c.spin.type_census();
    assert!(q > 0);
    let ch = c.spin.characters.iter().find(|ch| ch.kind == CharKind::Q).unwrap();
    assert!(ch.values.iter().any(|v| !v.is_real()));
    assert!(c.spin.check().is_empty());
}

#[test]
fn half_normalization_halves_type_q_columns() {
    let (rs, c) = computation("A4");
    let sum = FakeDegreeTable::compute(&c.spin, rs.degrees(), QNormalization::Sum).unwrap();
    let half = FakeDegreeTable::compute(&c.spin, rs.degrees(), QNormalization::Half).unwrap();
    for (a, b) in sum.rows.iter().zip(&half.rows) {
        match a.kind {
            CharKind::M => assert_eq!(a.p, b.p),
            CharKind::Q => assert_eq!(a.p, b.p.scale(&2)),
        }
    }
}

#[test]
fn group_orders() {
    for (t, order) in [("A7", 40320u128), ("E6", 51840), ("E7", 2903040), ("E8", 696729600), ("F4", 1152)] {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        assert_eq!(group_order(&rs), order, "{t}");
    }
    let rs = RootSystem::new("E7".parse().unwrap()).unwrap();
    assert!(WeylGroup::enumerate(&rs, 100_000).is_err());
}

#[test]
fn literals_round_trip() {
    for s in ["0", "-3/2", "1+r5", "1/2ir3", "-i", "2-ir2"] {
        let v = parse_complex(s).unwrap();
        assert_eq!(parse_complex(&format_complex(&v)).unwrap(), v, "{s}");
    }
    let i = parse_complex("i").unwrap();
    assert_eq!(&i * &i, -QuadComplex::one());
}

#[test]
fn closed_form_e8_degree_and_symmetry() {
    let rs = RootSystem::new("E8".parse().unwrap()).unwrap();
    let p: IntPolynomial = basic_spin_closed_form(8, rs.degrees());
    assert_eq!(p.degree(), Some(120));
    assert!(p.is_palindromic(120));
    assert_eq!(p.eval(&1), 256);
}
