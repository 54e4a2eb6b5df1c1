use alloc::vec::Vec;

use super::*;
use crate::cover::trace_factor;
use crate::exact::{QuadField, Rational};
use crate::rootsystem::CartanType;
use crate::weyl::DEFAULT_BUDGET;

fn compute(name: &str) -> (RootSystem, SpinComputation) {
    let rs = RootSystem::new(name.parse::<CartanType>().unwrap()).unwrap();
    let s = SpinComputation::new(&rs, DEFAULT_BUDGET).unwrap();
    (rs, s)
}

fn degrees(s: &SpinComputation, rows: &[usize]) -> Vec<u64> {
    let mut d: Vec<u64> = rows.iter().map(|&r| s.ordinary.degree(r)).collect();
    d.sort();
    d
}

#[test]
fn g2_table() {
    let (_, s) = compute("G2");
    assert_eq!(s.ordinary.len(), s.classes.len());
    let spin = extract_spin(&s.ordinary, &s.class_data);
    assert_eq!(degrees(&s, &spin), [2, 2, 2]);
    // trivial character
    assert!(s.ordinary.values.iter().any(|row| row.iter().all(|v| *v == QuadComplex::one())));
    // Burnside
    let total: u64 = (0..s.ordinary.len()).map(|r| s.ordinary.degree(r).pow(2)).sum();
    assert_eq!(total, 24);
}

#[test]
fn f4_spin_degrees() {
    let (_, s) = compute("F4");
    let spin = extract_spin(&s.ordinary, &s.class_data);
    assert_eq!(degrees(&s, &spin), [4, 4, 8, 8, 8, 8, 12, 12, 24]);
    assert_eq!(s.spin.type_census(), (9, 0));
    assert!(s.spin.check().is_empty());
    let basic = identify_basic_spin(&s.spin).unwrap();
    assert_eq!(s.spin.degree(basic).unwrap(), 4);
}

#[test]
fn e6_census_and_pairs() {
    let (rs, s) = compute("E6");
    let spin = extract_spin(&s.ordinary, &s.class_data);
    assert_eq!(spin.len(), 13);
    assert_eq!(s.spin.type_census(), (5, 4));
    let mut q: Vec<(u64, u64)> = s
        .graded_rows
        .iter()
        .filter(|g| g.kind == CharKind::Q)
        .map(|g| (s.ordinary.degree(g.rows[0]), s.ordinary.degree(g.rows[1])))
        .collect();
    q.sort();
    assert_eq!(q, [(20, 20), (60, 60), (64, 64), (80, 80)]);
    let basic = identify_basic_spin(&s.spin).unwrap();
    assert_eq!(s.spin.graded_degree(basic).unwrap(), trace_factor(rs.rank()) as u64);
    assert!(s.spin.check().is_empty());
}

#[test]
fn spin_rows_are_odd_under_z_and_vanish_off_even_split_classes() {
    for name in ["B3", "A4", "D4"] {
        let (_, s) = compute(name);
        for &r in &extract_spin(&s.ordinary, &s.class_data) {
            for x in 0..s.cover.weyl().order() as u32 {
                let plus = s.classes.class_of(crate::cover::CoverElt { w: x, sign: 1 });
                let minus = s.classes.class_of(crate::cover::CoverElt { w: x, sign: -1 });
                assert_eq!(s.ordinary.values[r][minus], -s.ordinary.values[r][plus].clone());
            }
        }
        for row in 0..s.spin.characters.len() {
            let graded = s.graded_cover_values(row);
            for (k, cls) in s.classes.classes.iter().enumerate() {
                let wc = &s.classes.weyl.classes[cls.weyl_class];
                if wc.parity == Parity::Odd || cls.lift_sign == 0 {
                    assert!(graded[k].is_zero(), "{name} row {row} class {k}");
                }
            }
        }
    }
}

#[test]
fn pairing_rejects_orphans() {
    let one = QuadComplex::one();
    let values = alloc::vec![alloc::vec![one.clone(), one.clone()], alloc::vec![one.clone(), -one.clone() - one]];
    assert!(classify_and_pair(&values, &[Parity::Even, Parity::Odd]).is_err());
}

#[test]
fn validator_flags_sign_flip() {
    let (_, s) = compute("G2");
    let mut t = s.spin.clone();
    let v = &mut t.characters[0].values[1];
    *v = -v.clone();
    if t.characters[0].values[1].is_zero() {
        t.characters[0].values[2] = -t.characters[0].values[2].clone();
    }
    assert!(t.check().iter().any(|line| line.contains("orthogonality")));
    let mut t = s.spin.clone();
    t.characters.pop();
    assert!(t.check().iter().any(|line| line.contains("count recipe")));
}

#[test]
fn split_class_from_word_matches_cover() {
    let (rs, s) = compute("B3");
    for c in &s.spin.classes {
        let rebuilt = SplitClass::from_word(&rs, c.name.clone(), c.size, c.word.clone()).unwrap();
        assert_eq!(rebuilt.trace, c.trace);
        assert_eq!(rebuilt.charpoly, c.charpoly);
        assert_eq!(rebuilt.parity, c.parity);
    }
    assert_eq!(
        s.spin.classes.iter().find(|c| c.word.is_empty()).unwrap().trace,
        QuadField::from_rational(Rational::from_int(4))
    );
}
