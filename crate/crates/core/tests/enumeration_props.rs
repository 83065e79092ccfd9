mod common;

use std::collections::BTreeSet;

use dib_core::codec::from_digraph6;
use dib_core::dib_exact;
use dib_core::enumeration::{
    canonical_form, conjecture_scan, enumerate_profile, enumerate_regular, property_sweep,
    revalidate_witness, PropertyId,
};

fn sequences(n: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    for _ in 0..n {
        all = all
            .into_iter()
            .flat_map(|s: Vec<usize>| (0..n).map(move |d| [s.clone(), vec![d]].concat()))
            .collect();
    }
    all
}

#[test]
fn profiles_cover_all_labeled_digraphs() {
    for n in 1..=3 {
        let total: usize = sequences(n)
            .iter()
            .flat_map(|o| sequences(n).into_iter().map(move |i| (o.clone(), i)))
            .map(|(o, i)| enumerate_profile(&o, &i).unwrap().len())
            .sum();
        assert_eq!(total, 1 << (n * n - n), "n={n}");
    }
}

#[test]
fn catalogs_are_regular_unique_and_consistent() {
    let scan = conjecture_scan(6).unwrap();
    for cat in &scan {
        let mut forms = BTreeSet::new();
        let mut total = 0;
        for class in &cat.classes {
            assert_eq!(class.count, class.digraphs.len());
            for s in &class.digraphs {
                let d = from_digraph6(s).unwrap();
                assert_eq!(d.regularity(), Some(cat.regularity));
                assert_eq!(dib_exact(&d).unwrap().value, class.dib);
                assert!(forms.insert(canonical_form(&d).unwrap()));
                total += 1;
            }
        }
        assert_eq!(total, cat.total);
        assert!(cat.within_expected);
    }
    assert_eq!(scan, conjecture_scan(6).unwrap());
}

#[test]
fn one_regular_orders_are_all_dib_two() {
    for cat in conjecture_scan(8)
        .unwrap()
        .iter()
        .filter(|c| c.regularity == 1)
    {
        assert_eq!(cat.classes.len(), 1);
        assert_eq!(cat.classes[0].dib, 2);
    }
}

#[test]
fn iso_enumeration_matches_labeled_classes_at_seven() {
    let labeled: BTreeSet<_> = enumerate_regular(7, 1, false)
        .unwrap()
        .iter()
        .map(|d| canonical_form(d).unwrap())
        .collect();
    assert_eq!(enumerate_regular(7, 1, true).unwrap().len(), labeled.len());
}

#[test]
fn full_sweep_has_no_counterexamples() {
    let reports = property_sweep(4, &PropertyId::ALL, None).unwrap();
    assert_eq!(reports.len(), PropertyId::ALL.len());
    for r in &reports {
        assert!(r.verified(), "{} has counterexamples", r.property);
        for w in r.tightness.iter().take(50) {
            assert!(revalidate_witness(r.property, w).unwrap());
        }
    }
}

#[test]
fn order_one_corpus_is_degenerate() {
    let reports = property_sweep(1, &PropertyId::ALL, None).unwrap();
    for r in &reports {
        assert_eq!(r.instances, 1);
        assert!(r.verified());
    }
}
