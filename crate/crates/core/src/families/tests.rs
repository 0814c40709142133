use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::carrier::{GroundSet, Predicate, Window};

fn add(bound: u64) -> Arc<Window> {
    Arc::new(Window::additive(bound).unwrap())
}

fn vals(w: &Window, es: &[Element]) -> Vec<u64> {
    es.iter().map(|&e| w.value(e).unwrap()).collect()
}

#[test]
fn translation_examples() {
    let w = add(100);
    let right = FamilySpec::right_translations(w.clone());
    assert_eq!(right.apply(&[5], &[Element(2)]).unwrap(), Some(Element(7)));
    assert_eq!(right.apply(&[0], &[Element(42)]).unwrap(), Some(Element(42)));

    let m = Arc::new(Window::multiplicative(100).unwrap());
    let mul = FamilySpec::right_translations(m.clone());
    let r = m.from_value(4).unwrap().0 as u64;
    let out = mul.apply(&[r], &[m.from_value(3).unwrap()]).unwrap().unwrap();
    assert_eq!(m.value(out), Some(12));

    let words = Arc::new(Window::words(&['a', 'b'], 4).unwrap());
    let wr = FamilySpec::right_translations(words.clone());
    let a = words.parse("a").unwrap().0 as u64;
    let out = wr.apply(&[a], &[words.parse("ab").unwrap()]).unwrap().unwrap();
    assert_eq!(words.display(out), "aba");
    let wl = FamilySpec::left_translations(words.clone());
    let out = wl.apply(&[a], &[words.parse("ab").unwrap()]).unwrap().unwrap();
    assert_eq!(words.display(out), "aab");
}

#[test]
fn affine_examples() {
    let w = add(100);
    let aff = FamilySpec::affine(w.clone()).unwrap();
    assert_eq!(aff.apply(&[3, 2], &[Element(5)]).unwrap(), Some(Element(13)));
    assert_eq!(aff.apply(&[0, 1], &[Element(7)]).unwrap(), Some(Element(7)));
    let f: Vec<Element> = (0..=3).map(Element).collect();
    assert_eq!(vals(&w, &aff.image(&[0, 2], &f).unwrap()), vec![0, 2, 4, 6]);
    assert!(matches!(
        aff.apply(&[3, 0], &[Element(1)]),
        Err(FamilyError::ParamsOutsideRegion(_))
    ));
    let m = Arc::new(Window::multiplicative(10).unwrap());
    assert!(matches!(
        FamilySpec::affine(m),
        Err(FamilyError::WrongCarrier { .. })
    ));
}

#[test]
fn affine_images_of_intervals_are_progressions() {
    let w = add(200);
    let aff = FamilySpec::affine(w.clone()).unwrap();
    for k in 1..8usize {
        let f: Vec<Element> = (0..=k).map(Element).collect();
        for a in 0..5 {
            for b in 1..5 {
                let image = vals(&w, &aff.image(&[a, b], &f).unwrap());
                assert_eq!(image.len(), k + 1);
                assert!(image.windows(2).all(|p| p[1] - p[0] == b));
            }
        }
    }
}

#[test]
fn geoarithmetic_examples() {
    let w = add(100);
    let geo = FamilySpec::geoarithmetic(w.clone()).unwrap();
    assert_eq!(geo.apply(&[2, 1, 1], &[Element(2), Element(3)]).unwrap(), Some(Element(16)));
    assert_eq!(geo.apply(&[2, 0, 1], &[Element(0), Element(1)]).unwrap(), Some(Element(1)));
    assert!(matches!(
        geo.apply(&[1, 1, 1], &[Element(0), Element(1)]),
        Err(FamilyError::ParamsOutsideRegion(_))
    ));
    assert!(geo.apply(&[2, 1, 0], &[Element(0), Element(1)]).is_err());
    // 2^10 * (1 + 1) = 2048 > 100
    assert_eq!(geo.apply(&[2, 1, 1], &[Element(10), Element(1)]).unwrap(), None);
    let full = GroundSet::full(w.clone());
    let stream = geo.enumerate_params(&[Element(1)], &full);
    assert!(!stream.complete);
}

#[test]
fn polynomial_examples() {
    let w = add(100);
    let n = GroundSet::full(add(100));
    let lin = FamilySpec::polynomial(w.clone(), n.clone(), &[0, 1], 1).unwrap();
    assert_eq!(lin.apply(&[3, 2], &[Element(5)]).unwrap(), Some(Element(13)));
    let sq = FamilySpec::polynomial(w.clone(), n.clone(), &[2], 2).unwrap();
    assert_eq!(sq.apply(&[1], &[Element(4)]).unwrap(), Some(Element(16)));
    let even = FamilySpec::polynomial(w.clone(), n.clone(), &[0, 2], 2).unwrap();
    assert_eq!(even.apply(&[1, 2], &[Element(3)]).unwrap(), Some(Element(19)));
    // constant polynomials are excluded once D reaches past 0
    assert!(even.apply(&[7, 0], &[Element(3)]).is_err());

    assert!(matches!(
        FamilySpec::polynomial(w.clone(), n.clone(), &[], 2),
        Err(FamilyError::EmptyDegrees)
    ));
    assert!(matches!(
        FamilySpec::polynomial(w.clone(), n.clone(), &[3], 2),
        Err(FamilyError::InconsistentDegree { .. })
    ));
    let none = GroundSet::empty(add(10));
    assert!(matches!(
        FamilySpec::polynomial(w, none, &[1], 1),
        Err(FamilyError::EmptyCoefficients)
    ));
}

#[test]
fn polynomial_agrees_with_affine() {
    let w = add(120);
    let lin = FamilySpec::polynomial(w.clone(), GroundSet::full(add(120)), &[0, 1], 1).unwrap();
    let aff = FamilySpec::affine(w).unwrap();
    for x in 0..20 {
        for a in 0..6 {
            for b in 1..6 {
                assert_eq!(lin.eval(&[a, b], &[Element(x)]), aff.eval(&[a, b], &[Element(x)]));
            }
        }
    }
}

#[test]
fn word_suffix_examples() {
    let w = Arc::new(Window::words(&['a', 'b'], 4).unwrap());
    let fam = FamilySpec::word_suffix(w.clone(), 'a').unwrap();
    let run = |n: u64, s: &str| w.display(fam.apply(&[n], &[w.parse(s).unwrap()]).unwrap().unwrap());
    assert_eq!(run(2, "b"), "baa");
    assert_eq!(run(0, "ab"), "ab");
    assert_eq!(run(1, "aa"), "aaa");
    assert_eq!(fam.apply(&[3], &[w.parse("ab").unwrap()]).unwrap(), None);
    assert!(matches!(
        FamilySpec::word_suffix(w, 'c'),
        Err(FamilyError::LetterNotInAlphabet('c'))
    ));
}

#[test]
fn pair_examples() {
    let w = add(1000);
    let power = FamilySpec::from_pair(
        w.clone(),
        1,
        1,
        "slot0 ^ param0",
        Region(vec![Predicate::Primes]),
        ParamEnumeration::default(),
    )
    .unwrap();
    assert_eq!(power.apply(&[3], &[Element(2)]).unwrap(), Some(Element(8)));
    assert_eq!(power.apply(&[2], &[Element(31)]).unwrap(), Some(Element(961)));
    assert!(power.apply(&[9], &[Element(2)]).is_err());
    let exps: Vec<u64> = power.scan_params(12).map(|p| p[0]).collect();
    assert_eq!(exps, vec![2, 3, 5, 7, 11]);

    let shift =
        FamilySpec::from_pair(w.clone(), 1, 1, "slot0 + param0", Region::all(), ParamEnumeration::default())
            .unwrap();
    let right = FamilySpec::right_translations(w.clone());
    for x in 0..30 {
        for r in 0..30 {
            assert_eq!(shift.eval(&[r], &[Element(x)]), right.eval(&[r], &[Element(x)]));
        }
    }

    let two =
        FamilySpec::from_pair(w.clone(), 1, 2, "param0 + param1 * slot0", Region::all(), ParamEnumeration::default())
            .unwrap();
    assert!(matches!(
        two.apply(&[1, 2, 3], &[Element(1)]),
        Err(FamilyError::ArityMismatch { .. })
    ));
    assert!(matches!(
        FamilySpec::from_pair(w.clone(), 1, 1, "param0 + param1", Region::all(), ParamEnumeration::default()),
        Err(FamilyError::ArityMismatch { .. })
    ));
    assert!(matches!(
        FamilySpec::from_pair(w, 1, 1, "slot0 -", Region::all(), ParamEnumeration::default()),
        Err(FamilyError::MalformedTerm(_))
    ));
}

#[test]
fn anchored_translation_candidates() {
    let w = add(20);
    let b = GroundSet::from_values(w.clone(), [5, 7, 9]).unwrap();
    let fam = FamilySpec::right_translations(w);
    let stream = fam.enumerate_params(&[Element(0), Element(2)], &b);
    assert!(stream.complete);
    let got: Vec<u64> = stream.map(|p| p[0]).collect();
    assert_eq!(got, vec![5, 7, 9]);
}

#[test]
fn anchored_affine_candidates() {
    let w = add(20);
    let b = GroundSet::from_values(w.clone(), [3, 5, 7]).unwrap();
    let fam = FamilySpec::affine(w).unwrap();
    let stream = fam.enumerate_params(&[Element(1), Element(2)], &b);
    assert!(stream.complete);
    let got: Vec<Params> = stream.collect();
    assert!(got.contains(&vec![1, 2]));
    for p in &got {
        assert!(p[0] + p[1] == 3 || p[0] + p[1] == 5 || p[0] + p[1] == 7);
    }
}

#[test]
fn emitted_params_respect_region() {
    let w = add(30);
    let target = GroundSet::predicate(w.clone(), Predicate::Odds).unwrap();
    let f = [Element(1), Element(4)];
    let fams = [
        FamilySpec::affine_with_min_slope(w.clone(), 3).unwrap(),
        FamilySpec::geoarithmetic(w.clone()).unwrap().with_enumeration(ParamEnumeration {
            mode: EnumMode::BoundedScan,
            bound: Some(6),
        }),
        FamilySpec::polynomial(w.clone(), GroundSet::predicate(add(30), Predicate::Odds).unwrap(), &[0, 2], 2)
            .unwrap(),
        FamilySpec::from_pair(
            w.clone(),
            1,
            2,
            "param0 * slot0 + param1",
            Region(vec![Predicate::Primes, Predicate::Evens]),
            ParamEnumeration::default(),
        )
        .unwrap(),
    ];
    for fam in &fams {
        for p in fam.enumerate_params(&f, &target) {
            assert!(fam.in_region(&p), "{} emitted {p:?}", fam.name());
        }
    }
}

/// Brute-force witnesses: every parameter tuple up to `bound` whose image of
/// `f` (evaluated by the formula written out here) lies in `target`.
fn brute_witnesses(kind: &str, f: &[u64], target: &BTreeSet<u64>, window: u64, bound: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    match kind {
        "translations" => {
            for r in 0..=bound {
                if f.iter().all(|&x| x + r <= window && target.contains(&(x + r))) {
                    out.insert(vec![r]);
                }
            }
        }
        "affine" => {
            for a in 0..=bound {
                for b in 1..=bound {
                    if f.iter().all(|&x| a + b * x <= window && target.contains(&(a + b * x))) {
                        out.insert(vec![a, b]);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    out
}

proptest! {
    #[test]
    fn anchored_enumeration_is_complete(
        window in 5u64..30,
        f_raw in proptest::collection::btree_set(0u64..30, 1..4),
        b_raw in proptest::collection::btree_set(0u64..30, 0..10),
        use_affine in any::<bool>(),
    ) {
        let f: Vec<u64> = f_raw.into_iter().filter(|&x| x <= window).collect();
        prop_assume!(!f.is_empty());
        // F = {0} leaves the affine slope unconstrained
        prop_assume!(!(use_affine && f == [0]));
        let target: BTreeSet<u64> = b_raw.into_iter().filter(|&x| x <= window).collect();
        let w = add(window);
        let fam = if use_affine {
            FamilySpec::affine(w.clone()).unwrap()
        } else {
            FamilySpec::right_translations(w.clone())
        };
        let b = GroundSet::from_values(w.clone(), target.iter().copied()).unwrap();
        let f_el: Vec<Element> = f.iter().map(|&x| Element(x as usize)).collect();
        let stream = fam.enumerate_params(&f_el, &b);
        prop_assert!(stream.complete);
        let candidates: BTreeSet<Params> = stream.collect();
        let kind = if use_affine { "affine" } else { "translations" };
        for witness in brute_witnesses(kind, &f, &target, window, 3 * window) {
            prop_assert!(candidates.contains(&witness), "missing {:?}", witness);
        }
    }
}
