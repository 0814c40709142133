use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::carrier::{Predicate, Window};

fn ap3() -> Pattern {
    Pattern::Ap(3)
}

#[test]
fn pattern_strings_round_trip() {
    for s in ["ap:3", "schur", "gap:1", "gap-strict:2", "poly:3:1,2", "eq:x+y-z", "eq-distinct:x^2+y^2-z^2"] {
        assert_eq!(s.parse::<Pattern>().unwrap().to_string(), s);
    }
    for bad in ["ap:0", "ap", "schur:1", "gap:x", "poly:3:0", "cube:2", "eq:7"] {
        assert!(bad.parse::<Pattern>().is_err(), "{bad}");
    }
}

#[test]
fn van_der_waerden_examples() {
    let c = find_avoiding_coloring(8, 2, &ap3()).unwrap();
    assert_eq!(c.coloring().unwrap(), least_avoiding(8, &ap3()).unwrap());
    assert!(c.verify());
    let c = find_avoiding_coloring(9, 2, &ap3()).unwrap();
    assert!(matches!(c.outcome, ColoringOutcome::Forced { exhaustive: true, .. }));
    let c = find_avoiding_coloring(1, 1, &ap3()).unwrap();
    assert_eq!(c.coloring().unwrap(), &[0]);
    assert!(matches!(find_avoiding_coloring(0, 2, &ap3()), Err(PrError::ZeroN)));
    assert!(matches!(find_avoiding_coloring(3, 0, &ap3()), Err(PrError::ZeroColors)));
}

#[test]
fn threshold_examples() {
    let t = ramsey_threshold(&ap3(), 2, 20).unwrap();
    assert_eq!(t.threshold, Some(9));
    assert!(t.below.as_ref().unwrap().verify());
    let t = ramsey_threshold(&Pattern::Schur, 2, 20).unwrap();
    assert_eq!(t.threshold, Some(5));
    let below = t.below.unwrap();
    assert_eq!(below.coloring().unwrap(), &[0, 1, 1, 0]);
    assert!(below.verify());
    assert_eq!(ramsey_threshold(&ap3(), 1, 20).unwrap().threshold, Some(3));
    assert_eq!(ramsey_threshold(&ap3(), 2, 8).unwrap().threshold, None);
}

#[test]
fn strong_pr_examples() {
    let w = Arc::new(Window::additive(20).unwrap());
    let nine = GroundSet::predicate(w.clone(), Predicate::Interval(1, 9)).unwrap();
    assert!(matches!(strong_pr_probe(&nine, &ap3(), 2, ProbeMode::Auto), Err(PrError::BadSet)));
    let nine = GroundSet::from_values(w.clone(), 1..=9).unwrap();
    let v = strong_pr_probe(&nine, &ap3(), 2, ProbeMode::Auto).unwrap();
    assert!(v.is_forced());
    assert_eq!(v.mode, "exhaustive");
    assert_eq!(v.outcome, StrongOutcome::Forced { examined: 512, exhaustive: true });
    let v = strong_pr_probe(&nine, &ap3(), 2, ProbeMode::Backtrack).unwrap();
    assert!(v.is_forced());

    let eight = GroundSet::from_values(w.clone(), 1..=8).unwrap();
    let v = strong_pr_probe(&eight, &ap3(), 2, ProbeMode::Auto).unwrap();
    assert!(!v.is_forced());
    assert!(v.verify());

    let three = GroundSet::from_values(w.clone(), [1, 2, 3]).unwrap();
    assert!(strong_pr_probe(&three, &ap3(), 1, ProbeMode::Exhaustive).unwrap().is_forced());

    let big = GroundSet::from_values(w, 1..=20).unwrap();
    assert!(matches!(
        strong_pr_probe(&big, &ap3(), 3, ProbeMode::Exhaustive),
        Err(PrError::BudgetExceeded(_))
    ));
}

#[test]
fn sparse_set_escapes_the_pattern() {
    // no 3-AP among powers of two
    let w = Arc::new(Window::additive(1024).unwrap());
    let pow = GroundSet::from_values(w, (0..10).map(|i| 1u64 << i)).unwrap();
    let v = strong_pr_probe(&pow, &ap3(), 1, ProbeMode::Auto).unwrap();
    assert!(v.verify());
    assert!(!v.is_forced());
}

#[test]
fn equation_examples() {
    let schur: Polynomial = "x+y-z".parse().unwrap();
    let (c, h) = homogeneous_pr_check(&schur, 2, 5, false, true).unwrap();
    assert!(h.homogeneous);
    assert!(c.is_forced());
    let (c, _) = homogeneous_pr_check(&schur, 2, 4, false, true).unwrap();
    assert_eq!(c.coloring().unwrap(), &[0, 1, 1, 0]);
    assert!(c.verify());
    let pattern = Pattern::Equation { poly: schur.clone(), distinct: false };
    let roots = instances(&pattern, 4, 100).unwrap();
    assert_eq!(roots, vec![vec![1, 2], vec![1, 2, 3], vec![1, 3, 4], vec![2, 4]]);

    let pyth: Polynomial = "x^2+y^2-z^2".parse().unwrap();
    let (c, _) = homogeneous_pr_check(&pyth, 2, 60, false, true).unwrap();
    assert!(c.verify());
    assert!(!c.is_forced());

    let shifted: Polynomial = "x+y-z-1".parse().unwrap();
    assert!(matches!(
        homogeneous_pr_check(&shifted, 2, 5, false, true),
        Err(PrError::NonHomogeneous { .. })
    ));
    let (_, h) = homogeneous_pr_check(&shifted, 2, 5, false, false).unwrap();
    assert!(!h.homogeneous);
}

#[test]
fn distinct_flag_drops_repeated_roots() {
    let schur: Polynomial = "x+y-z".parse().unwrap();
    let pattern = Pattern::Equation { poly: schur, distinct: true };
    // with x != y the threshold rises past 5
    let c = find_avoiding_coloring(5, 2, &pattern).unwrap();
    assert!(c.verify());
    assert!(!c.is_forced());
}

#[test]
fn ps_solution_examples() {
    let w = Arc::new(Window::additive(100).unwrap());
    let schur: Polynomial = "x+y-z".parse().unwrap();
    let threes = GroundSet::predicate(w.clone(), Predicate::Multiples(3)).unwrap();
    assert!(ps_solutions_experiment(&schur, &threes, 30).unwrap().contains(&vec![3, 3, 6]));
    let one = GroundSet::from_values(w.clone(), [1]).unwrap();
    assert!(ps_solutions_experiment(&schur, &one, 10).unwrap().is_empty());
    let pyth: Polynomial = "x^2+y^2-z^2".parse().unwrap();
    let fives = GroundSet::predicate(w, Predicate::Multiples(5)).unwrap();
    let sols = ps_solutions_experiment(&pyth, &fives, 100).unwrap();
    assert!(sols.contains(&vec![30, 40, 50]));
    assert!(sols.iter().all(|s| s.iter().all(|v| v % 5 == 0)));
}

#[test]
fn gap_and_poly_patterns() {
    let g = instances(&Pattern::GapGrid { n: 1, strict: false }, 6, 1000).unwrap();
    assert!(g.contains(&vec![1, 2, 4]));
    assert!(g.contains(&vec![2, 3, 4, 6]));
    let strict = instances(&Pattern::GapGrid { n: 1, strict: true }, 6, 1000).unwrap();
    assert!(strict.contains(&vec![1, 2, 4]));
    assert!(!strict.contains(&vec![2, 3, 4, 6]));
    let sq = instances(&Pattern::PolyProgression { len: 2, degrees: vec![2] }, 8, 1000).unwrap();
    assert_eq!(sq, vec![vec![1, 4], vec![2, 8]]);
    let c = find_avoiding_coloring(12, 2, &Pattern::GapGrid { n: 1, strict: false }).unwrap();
    assert!(c.verify());
}

#[test]
fn instance_budget_is_enforced() {
    assert_eq!(
        instances(&ap3(), 100, 10),
        Err(PrError::InstanceOverflow { limit: 10 })
    );
}

/// Lexicographically least 2-coloring with no monochromatic instance, by
/// running through all `2^n` colorings.
fn least_avoiding(n: u64, pattern: &Pattern) -> Option<Vec<u8>> {
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect::<Vec<u8>>())
        .find(|c| find_monochromatic(pattern, n, |v| Some(c[v as usize - 1])).is_none())
}

#[test]
fn search_returns_least_coloring() {
    for n in 1..=12 {
        for p in [ap3(), Pattern::Schur, Pattern::GapGrid { n: 1, strict: false }] {
            let c = find_avoiding_coloring(n, 2, &p).unwrap();
            assert_eq!(c.coloring().map(<[u8]>::to_vec), least_avoiding(n, &p), "{p} N={n}");
        }
    }
}

fn brute_instances(pattern: &Pattern, n: u64) -> Vec<Vec<u64>> {
    // independent enumeration: every subset-like value tuple checked directly
    let mut out: Vec<Vec<u64>> = Vec::new();
    match pattern {
        Pattern::Ap(l) => {
            for a in 1..=n {
                for b in a + 1..=n {
                    let s = b - a;
                    let vals: Vec<u64> = (0..*l as u64).map(|i| a + i * s).collect();
                    if vals.iter().all(|&v| v <= n) {
                        out.push(vals);
                    }
                }
            }
        }
        Pattern::Schur => {
            for x in 1..=n {
                for y in 1..=n {
                    for z in 1..=n {
                        if x + y == z {
                            let mut v = vec![x, y, z];
                            v.sort_unstable();
                            v.dedup();
                            out.push(v);
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn matchers_equal_brute_force() {
    for n in 1..=60 {
        assert_eq!(instances(&ap3(), n, usize::MAX).unwrap(), brute_instances(&ap3(), n));
        assert_eq!(instances(&Pattern::Ap(4), n, usize::MAX).unwrap(), brute_instances(&Pattern::Ap(4), n));
        assert_eq!(instances(&Pattern::Schur, n, usize::MAX).unwrap(), brute_instances(&Pattern::Schur, n));
    }
    let schur_eq = Pattern::Equation { poly: "x+y-z".parse().unwrap(), distinct: false };
    for n in 1..=30 {
        assert_eq!(instances(&schur_eq, n, usize::MAX).unwrap(), brute_instances(&Pattern::Schur, n));
    }
}

#[test]
fn verdicts_do_not_depend_on_order() {
    let desc = SearchLimits { order: SearchOrder::Descending, ..Default::default() };
    for (pattern, r, n) in [(ap3(), 2, 8), (ap3(), 2, 9), (Pattern::Schur, 2, 4), (Pattern::Schur, 2, 5), (Pattern::Ap(4), 2, 20)] {
        let a = find_avoiding_coloring(n, r, &pattern).unwrap();
        let d = find_avoiding_coloring_with(n, r, &pattern, &desc).unwrap();
        assert_eq!(a.is_forced(), d.is_forced(), "{pattern} N={n}");
        assert!(a.verify() && d.verify());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn forced_persists_to_next_n(n in 1u64..14, l in 3usize..5) {
        let p = Pattern::Ap(l);
        if find_avoiding_coloring(n, 2, &p).unwrap().is_forced() {
            prop_assert!(find_avoiding_coloring(n + 1, 2, &p).unwrap().is_forced());
        }
    }

    #[test]
    fn strong_probe_matches_coloring_search(n in 1u64..13, r in 1u8..3) {
        let w = Arc::new(Window::additive(20).unwrap());
        let set = GroundSet::from_values(w, 1..=n).unwrap();
        let probe = strong_pr_probe(&set, &Pattern::Ap(3), r, ProbeMode::Auto).unwrap();
        let search = find_avoiding_coloring(n, r, &Pattern::Ap(3)).unwrap();
        prop_assert_eq!(probe.is_forced(), search.is_forced());
        if let (StrongOutcome::Avoiding(part), Some(c)) = (&probe.outcome, search.coloring()) {
            let colors: Vec<u8> = part.iter().map(|p| p.1).collect();
            prop_assert_eq!(colors, c.to_vec());
        }
    }

    #[test]
    fn homogeneous_roots_scale(lambda in 1u64..=5) {
        let w = Arc::new(Window::additive(40).unwrap());
        for src in ["x+y-z", "x^2+y^2-z^2", "x*y-z^2"] {
            let p: Polynomial = src.parse().unwrap();
            for root in ps_solutions_experiment(&p, &GroundSet::full(w.clone()), 40).unwrap() {
                let scaled: Vec<u64> = root.iter().map(|v| v * lambda).collect();
                prop_assert!(p.is_root(&scaled));
            }
        }
    }
}
