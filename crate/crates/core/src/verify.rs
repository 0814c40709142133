//! Seeded property suites run by `fembed verify`.
//!
//! Each suite draws its instances from a ChaCha stream keyed by the seed and
//! the suite name, so a suite gives the same cases whether it runs alone or
//! inside `all`. A suite stops at its first violation and reports the
//! offending instance.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::carrier::{Element, GroundSet, Predicate, Window};
use crate::density::{check_density_monotonicity, ratio_string, upper_density, weak_cancellativity_bound, Net};
use crate::embed::{
    check_reflexive_criterion, check_transitive_criterion, check_union_split, check_upward_closed, fe_decide,
    CriterionOutcome, EmbedError,
};
use crate::families::{FamilySpec, Generator};
use crate::prsearch::{find_avoiding_coloring, ramsey_threshold, strong_pr_probe, Pattern, ProbeMode};
use crate::rich::{is_thick_window, longest_ap, maximality_probe, SetProperty};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite {0:?} (expected listona, preorder, maxset, density-mono, strong-pr, upward-closed or all)")]
    UnknownSuite(String),
    #[error("unknown budget {0:?} (expected tiny, small or medium)")]
    UnknownBudget(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Listona,
    Preorder,
    Maxset,
    DensityMono,
    StrongPr,
    UpwardClosed,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Listona,
        Suite::Preorder,
        Suite::Maxset,
        Suite::DensityMono,
        Suite::StrongPr,
        Suite::UpwardClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Listona => "listona",
            Suite::Preorder => "preorder",
            Suite::Maxset => "maxset",
            Suite::DensityMono => "density-mono",
            Suite::StrongPr => "strong-pr",
            Suite::UpwardClosed => "upward-closed",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// Instance counts and window sizes for a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub name: &'static str,
    pub window: u64,
    pub triples: usize,
    pub unions: usize,
    pub samples: usize,
    pub param_bound: u64,
    pub density_window: u64,
    pub density_pairs: usize,
    pub net: usize,
    pub pr_nmax: u64,
    pub upward_pairs: usize,
}

impl Budget {
    pub const TINY: Budget = Budget {
        name: "tiny",
        window: 24,
        triples: 60,
        unions: 20,
        samples: 10,
        param_bound: 3,
        density_window: 200,
        density_pairs: 20,
        net: 30,
        pr_nmax: 10,
        upward_pairs: 10,
    };
    pub const SMALL: Budget = Budget {
        name: "small",
        window: 40,
        triples: 500,
        unions: 100,
        samples: 50,
        param_bound: 4,
        density_window: 400,
        density_pairs: 100,
        net: 60,
        pr_nmax: 12,
        upward_pairs: 50,
    };
    pub const MEDIUM: Budget = Budget {
        name: "medium",
        window: 60,
        triples: 2000,
        unions: 300,
        samples: 100,
        param_bound: 5,
        density_window: 800,
        density_pairs: 200,
        net: 100,
        pr_nmax: 14,
        upward_pairs: 100,
    };
}

impl FromStr for Budget {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tiny" => Ok(Budget::TINY),
            "small" => Ok(Budget::SMALL),
            "medium" => Ok(Budget::MEDIUM),
            other => Err(VerifyError::UnknownBudget(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Outcome of one check: number of cases, or the first failing instance.
type Check = Result<usize, Value>;

struct Ctx {
    rng: ChaCha8Rng,
    budget: Budget,
}

impl Ctx {
    fn new(seed: u64, suite: Suite, budget: Budget) -> Self {
        let salt = suite.name().bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(u64::from(b)));
        Ctx {
            rng: ChaCha8Rng::seed_from_u64(seed ^ salt),
            budget,
        }
    }

    fn subset(&mut self, w: &Arc<Window>, lo: u64, hi: u64, k: usize) -> Vec<u64> {
        let span = (hi - lo + 1) as usize;
        let mut v: Vec<u64> = sample(&mut self.rng, span, k.min(span))
            .into_iter()
            .map(|i| lo + i as u64)
            .collect();
        v.sort_unstable();
        debug_assert!(v.iter().all(|&x| x <= w.bound()));
        v
    }

    fn noise(&mut self, w: &Arc<Window>, count: usize) -> Vec<u64> {
        let b = w.bound();
        self.subset(w, 0, b, count)
    }
}

fn set(w: &Arc<Window>, vals: impl IntoIterator<Item = u64>) -> GroundSet {
    GroundSet::from_values(w.clone(), vals).expect("values drawn inside the window")
}

fn embeds(a: &GroundSet, b: &GroundSet, fam: &FamilySpec) -> Result<bool, EmbedError> {
    let v = fe_decide(a, b, fam)?;
    if let Some(w) = v.witness() {
        if !w.verify(fam, b) {
            return Err(EmbedError::UnverifiedPair {
                index: 0,
                reason: "witness failed re-verification".into(),
            });
        }
    }
    Ok(v.is_yes())
}

fn failure(detail: Value) -> Check {
    Err(detail)
}

fn err_value(e: impl fmt::Display) -> Value {
    json!({ "error": e.to_string() })
}

/// Image of `vals` under the family member `params`, if in-window.
fn image_of(fam: &FamilySpec, params: &[u64], vals: &[u64]) -> Option<Vec<u64>> {
    let w = fam.window();
    let f: Vec<Element> = vals.iter().map(|&v| w.from_value(v)).collect::<Option<_>>()?;
    let img = fam.image(params, &f)?;
    img.into_iter().map(|e| w.value(e)).collect()
}

fn random_member(ctx: &mut Ctx, fam: &FamilySpec) -> Vec<u64> {
    let w = ctx.budget.window;
    match fam.generator() {
        Generator::Affine { min_slope } => {
            let slope = ctx.rng.random_range(*min_slope..=(*min_slope + 2));
            vec![ctx.rng.random_range(0..=w / 4), slope]
        }
        _ => vec![ctx.rng.random_range(0..=w / 2)],
    }
}

fn listona(ctx: &mut Ctx) -> Vec<CheckResult> {
    let w = Arc::new(Window::additive(ctx.budget.window).expect("budget window"));
    let families = [
        FamilySpec::right_translations(w.clone()),
        FamilySpec::affine(w.clone()).expect("additive"),
    ];
    let mut out = Vec::new();

    // (iii) A1 ⊆ A2 ≤ B ⇒ A1 ≤ B, and (iv) A ≤ B1 ⊆ B2 ⇒ A ≤ B2
    let monotone = (|| -> Check {
        let top = ctx.budget.window;
        for case in 0..ctx.budget.triples {
            let fam = &families[case % 2];
            let k = ctx.rng.random_range(1..=4);
            let a2 = ctx.subset(&w, 0, top / 3, k);
            let keep = ctx.rng.random_range(1..=a2.len());
            let a1: Vec<u64> = a2[..keep].to_vec();
            let params = random_member(ctx, fam);
            let mut b1 = image_of(fam, &params, &a2).unwrap_or_default();
            if ctx.rng.random_bool(0.3) && !b1.is_empty() {
                let drop = ctx.rng.random_range(0..b1.len());
                b1.remove(drop);
            }
            let noise = ctx.rng.random_range(0..=top as usize / 3);
            let mut b2 = b1.clone();
            b2.extend(ctx.noise(&w, noise));
            let (sa1, sa2, sb1, sb2) = (set(&w, a1.clone()), set(&w, a2.clone()), set(&w, b1.clone()), set(&w, b2.clone()));
            let r = (|| -> Result<Option<&'static str>, EmbedError> {
                if embeds(&sa2, &sb1, fam)? && !embeds(&sa1, &sb1, fam)? {
                    return Ok(Some("subset of A"));
                }
                if embeds(&sa2, &sb1, fam)? && !embeds(&sa2, &sb2, fam)? {
                    return Ok(Some("superset of B"));
                }
                Ok(None)
            })();
            match r {
                Ok(None) => {}
                Ok(Some(which)) => {
                    return failure(json!({
                        "property": which, "family": fam.name(),
                        "A1": a1, "A2": a2, "B1": b1, "B2": sb2.values(),
                    }))
                }
                Err(e) => return failure(err_value(e)),
            }
        }
        Ok(ctx.budget.triples)
    })();
    out.push(result("monotonicity", monotone));

    // (ii) A ≤ B under F1 ∪ ... ∪ Fk splits to some Fi
    let union = (|| -> Check {
        let top = ctx.budget.window;
        let pool = [
            FamilySpec::right_translations(w.clone()),
            FamilySpec::affine(w.clone()).expect("additive"),
            FamilySpec::affine_with_min_slope(w.clone(), 2).expect("additive"),
            FamilySpec::left_translations(w.clone()),
        ];
        for _ in 0..ctx.budget.unions {
            let k = ctx.rng.random_range(1..=3);
            let fams: Vec<FamilySpec> = sample(&mut ctx.rng, pool.len(), k).into_iter().map(|i| pool[i].clone()).collect();
            let chosen = ctx.rng.random_range(0..k);
            let size = ctx.rng.random_range(1..=4);
            let a = ctx.subset(&w, 0, top / 4, size);
            let params = random_member(ctx, &fams[chosen]);
            let Some(mut b) = image_of(&fams[chosen], &params, &a) else {
                continue;
            };
            let n = ctx.rng.random_range(0..=3);
            b.extend(ctx.noise(&w, n));
            let (sa, sb) = (set(&w, a.clone()), set(&w, b));
            let names: Vec<&str> = fams.iter().map(FamilySpec::name).collect();
            let bad = |why: String| json!({ "A": a, "B": sb.values(), "families": names, "problem": why });
            match check_union_split(&sa, &sb, &fams) {
                Ok(split) => {
                    let i = split.index - 1;
                    let ok = split.verdicts[i]
                        .witness()
                        .is_some_and(|wit| wit.verify(&fams[i], &sb))
                        && split.verdicts[..i].iter().all(|v| v.is_no());
                    if !ok {
                        return failure(bad(format!("index {} does not re-verify", split.index)));
                    }
                }
                Err(e) => return failure(bad(e.to_string())),
            }
        }
        Ok(ctx.budget.unions)
    })();
    out.push(result("union-split", union));
    out
}

fn sample_sets(ctx: &mut Ctx, w: &Arc<Window>, hi: u64) -> Vec<Vec<Element>> {
    (0..ctx.budget.samples)
        .map(|_| {
            let k = ctx.rng.random_range(1..=3);
            ctx.subset(w, 0, hi, k).into_iter().map(|v| w.from_value(v).expect("in window")).collect()
        })
        .collect()
}

fn preorder(ctx: &mut Ctx) -> Vec<CheckResult> {
    // room for F + r_f + r_g and for two affine maps with small parameters
    let hi = 6u64;
    let pb = ctx.budget.param_bound;
    let w = Arc::new(Window::additive(hi * (pb + 1) * (pb + 1) + pb * (pb + 2) + 8).expect("window"));
    let tr = FamilySpec::right_translations(w.clone());
    let aff = FamilySpec::affine(w.clone()).expect("additive");
    let samples = sample_sets(ctx, &w, hi);
    let mut out = Vec::new();

    let trans = (|| -> Check {
        let mut cases = 0;
        for (fam, composed) in [(&tr, true), (&aff, false)] {
            let report = check_transitive_criterion(fam, &samples, pb).map_err(err_value)?;
            for e in &report.entries {
                let CriterionOutcome::Satisfied { h } = &e.outcome else {
                    if e.outcome == CriterionOutcome::Skipped {
                        continue;
                    }
                    return failure(json!({
                        "family": fam.name(), "F": e.f_set.iter().map(|x| x.0).collect::<Vec<_>>(),
                        "f": e.f, "g": e.g, "outcome": format!("{:?}", e.outcome),
                    }));
                };
                // the composition g∘f is itself a witness
                let comp = if composed {
                    vec![e.f[0] + e.g[0]]
                } else {
                    vec![e.g[0] + e.g[1] * e.f[0], e.g[1] * e.f[1]]
                };
                let target = set(&w, e.target.iter().map(|x| x.0 as u64));
                if !fam.maps_into(h, &e.f_set, &target) || !fam.maps_into(&comp, &e.f_set, &target) {
                    return failure(json!({
                        "family": fam.name(), "F": e.f_set.iter().map(|x| x.0).collect::<Vec<_>>(),
                        "f": e.f, "g": e.g, "h": h, "composition": comp,
                    }));
                }
                if composed && *h != comp {
                    return failure(json!({ "family": fam.name(), "f": e.f, "g": e.g, "h": h, "expected": comp }));
                }
                cases += 1;
            }
        }
        Ok(cases)
    })();
    out.push(result("transitivity", trans));

    let refl = (|| -> Check {
        let report = check_reflexive_criterion(&aff, &samples).map_err(err_value)?;
        for e in &report.entries {
            if e.outcome != (CriterionOutcome::Satisfied { h: vec![0, 1] }) {
                return failure(json!({
                    "family": "affine", "F": e.f_set.iter().map(|x| x.0).collect::<Vec<_>>(),
                    "outcome": format!("{:?}", e.outcome),
                }));
            }
        }
        Ok(report.entries.len())
    })();
    out.push(result("reflexivity", refl));
    out
}

fn maxset(ctx: &mut Ctx) -> Vec<CheckResult> {
    let top = ctx.budget.window;
    let w = Arc::new(Window::additive(top).expect("window"));
    let aff = FamilySpec::affine(w.clone()).expect("additive");
    let tr = FamilySpec::right_translations(w.clone());
    let mut out = Vec::new();

    // longest AP > k iff [0..k] embeds under the affine family
    let ap = (|| -> Check {
        for _ in 0..ctx.budget.samples {
            let size = ctx.rng.random_range(1..=top as usize / 2);
            let vals = ctx.subset(&w, 0, top, size);
            let a = set(&w, vals.clone());
            let longest = longest_ap(&a).map_err(err_value)?;
            if !longest.verify(&a) {
                return failure(json!({ "A": vals, "problem": "AP certificate does not re-verify" }));
            }
            let probes: Vec<usize> = (1..=6).collect();
            let res = maximality_probe(&a, &aff, &probes).map_err(err_value)?;
            for p in res {
                if (longest.length >= p.size) != p.verdict.is_yes() {
                    return failure(json!({ "A": vals, "probe": p.size, "longest_ap": longest.length }));
                }
            }
        }
        Ok(ctx.budget.samples)
    })();
    out.push(result("ap-rich-iff-affine-maximal", ap));

    // thick at every probe length up to p implies translation-maximal up to p+1
    let thick = (|| -> Check {
        for _ in 0..ctx.budget.samples {
            let lo = ctx.rng.random_range(0..top / 2);
            let len = ctx.rng.random_range(0..top / 3);
            let mut vals: Vec<u64> = (lo..=lo + len).collect();
            let noise = ctx.rng.random_range(0..5);
            vals.extend(ctx.noise(&w, noise));
            let a = set(&w, vals);
            let lengths: Vec<u64> = (0..6).collect();
            let report = is_thick_window(&a, &lengths).map_err(err_value)?;
            let pass = report.probes.iter().take_while(|p| p.shift.is_some()).count();
            let sizes: Vec<usize> = (1..=pass).collect();
            let probes = maximality_probe(&a, &tr, &sizes).map_err(err_value)?;
            if let Some(p) = probes.iter().find(|p| !p.verdict.is_yes()) {
                return failure(json!({ "A": a.values(), "probe": p.size, "thick_up_to": pass }));
            }
        }
        Ok(ctx.budget.samples)
    })();
    out.push(result("thick-implies-translation-maximal", thick));
    out
}

fn density_mono(ctx: &mut Ctx) -> Vec<CheckResult> {
    let top = ctx.budget.density_window;
    let n = ctx.budget.net;
    let w = Arc::new(Window::additive(top).expect("window"));
    let tr = FamilySpec::right_translations(w.clone());
    let net = Net::interval(w.clone(), n).expect("net fits");
    let tol = Ratio::new(1, 50);
    let mut out = Vec::new();

    let b = weak_cancellativity_bound(&w);
    out.push(result(
        "cancellativity-bound",
        if b.b == 1 { Ok(1) } else { failure(json!({ "b": b.b, "x": b.x, "y": b.y })) },
    ));

    let evens = GroundSet::predicate(w.clone(), Predicate::Evens).expect("numeric");
    let full = GroundSet::full(w.clone());
    let values = (|| -> Check {
        let de = upper_density(&evens, &net, None).map_err(err_value)?;
        let df = upper_density(&full, &net, None).map_err(err_value)?;
        let half = Ratio::new(1u64, 2);
        let off = if de.value > half { de.value - half } else { half - de.value };
        if off > Ratio::new(1, n as u64) || df.value != Ratio::from_integer(1) {
            return failure(json!({ "evens": ratio_string(&de.value), "full": ratio_string(&df.value) }));
        }
        Ok(2)
    })();
    out.push(result("reference-densities", values));

    let pairs = (|| -> Check {
        let region = top / 2 - n as u64;
        let mut pairs = Vec::with_capacity(ctx.budget.density_pairs + 1);
        let shifted = evens.right_translate(Element(6)).expect("in window");
        pairs.push((evens.clone(), evens.union(&shifted).expect("same window")));
        for _ in 0..ctx.budget.density_pairs {
            let size = ctx.rng.random_range(1..=region as usize);
            let a = ctx.subset(&w, 0, region, size);
            let r = ctx.rng.random_range(0..=top / 2);
            let noise = ctx.rng.random_range(0..=top as usize / 4);
            let mut bv: Vec<u64> = a.iter().map(|v| v + r).collect();
            bv.extend(ctx.noise(&w, noise));
            pairs.push((set(&w, a), set(&w, bv)));
        }
        let report = check_density_monotonicity(&pairs, &tr, &net, &[2, 8, 16], tol).map_err(err_value)?;
        for (e, (a, bset)) in report.entries.iter().zip(&pairs) {
            if !e.holds() {
                return failure(json!({
                    "A": a.values(), "B": bset.values(),
                    "dA": ratio_string(&e.d_a), "dB": ratio_string(&e.d_b), "margin": ratio_string(&e.margin),
                }));
            }
        }
        Ok(pairs.len())
    })();
    out.push(result("monotone-under-translation", pairs));
    out
}

fn strong_pr(ctx: &Ctx) -> Vec<CheckResult> {
    let nmax = ctx.budget.pr_nmax;
    let w = Arc::new(Window::additive(nmax).expect("window"));
    let mut out = Vec::new();
    let views = (|| -> Check {
        let mut cases = 0;
        for pattern in [Pattern::Ap(3), Pattern::Schur] {
            for r in 1..=2u8 {
                for n in 1..=nmax {
                    let a = set(&w, 1..=n);
                    let probe = strong_pr_probe(&a, &pattern, r, ProbeMode::Auto).map_err(err_value)?;
                    let search = find_avoiding_coloring(n, r, &pattern).map_err(err_value)?;
                    if probe.is_forced() != search.is_forced() || !probe.verify() || !search.verify() {
                        return failure(json!({ "pattern": pattern.to_string(), "colors": r, "N": n }));
                    }
                    cases += 1;
                }
            }
        }
        Ok(cases)
    })();
    out.push(result("strong-equals-weak-on-window", views));

    let thresholds = (|| -> Check {
        let expected = [(Pattern::Ap(3), 2u8, 9u64), (Pattern::Schur, 2, 5), (Pattern::Ap(3), 1, 3)];
        for (pattern, r, t) in &expected {
            let got = ramsey_threshold(pattern, *r, nmax).map_err(err_value)?;
            let forced_next = match got.threshold {
                Some(n) => find_avoiding_coloring(n + 1, *r, pattern).map_err(err_value)?.is_forced(),
                None => false,
            };
            if got.threshold != Some(*t) || !forced_next || !got.below.as_ref().is_some_and(|c| c.verify()) {
                return failure(json!({ "pattern": pattern.to_string(), "colors": r, "threshold": got.threshold }));
            }
        }
        Ok(expected.len())
    })();
    out.push(result("thresholds", thresholds));
    out
}

fn upward_closed(ctx: &mut Ctx) -> Vec<CheckResult> {
    let top = ctx.budget.window * 2;
    let w = Arc::new(Window::additive(top).expect("window"));
    let tr = FamilySpec::right_translations(w.clone());
    let mut out = Vec::new();

    let ap = (|| -> Check {
        let mut pairs = Vec::new();
        for _ in 0..ctx.budget.upward_pairs {
            let stride = ctx.rng.random_range(1..=top / 16);
            let start = ctx.rng.random_range(0..=top / 4);
            let mut a: Vec<u64> = (0..4).map(|i| start + i * stride).collect();
            let extra = ctx.rng.random_range(0..4);
            a.extend(ctx.subset(&w, 0, top / 2, extra));
            let r = ctx.rng.random_range(0..=top / 2);
            let mut b: Vec<u64> = a.iter().map(|v| v + r).collect();
            let noise = ctx.rng.random_range(0..6);
            b.extend(ctx.noise(&w, noise));
            pairs.push((set(&w, a), set(&w, b)));
        }
        let report = check_upward_closed(&SetProperty::ContainsAp(4), &pairs, &tr).map_err(err_value)?;
        if let Some(i) = report.counterexample {
            return failure(json!({ "A": pairs[i].0.values(), "B": pairs[i].1.values() }));
        }
        if report.entries.iter().any(|e| !e.in_a) {
            return failure(json!({ "problem": "constructed A lacks its AP" }));
        }
        Ok(pairs.len())
    })();
    out.push(result("contains-ap-4-transfers", ap));

    let zero = (|| -> Check {
        let r = ctx.rng.random_range(1..=top / 2);
        let pairs = vec![(set(&w, [0]), set(&w, [r]))];
        let report = check_upward_closed(&SetProperty::ContainsElement(0), &pairs, &tr).map_err(err_value)?;
        match report.counterexample {
            Some(0) => Ok(1),
            _ => failure(json!({ "A": [0], "B": [r], "problem": "no counterexample reported" })),
        }
    })();
    out.push(result("contains-0-is-not-closed", zero));
    out
}

fn result(name: &'static str, check: Check) -> CheckResult {
    match check {
        Ok(cases) => CheckResult {
            name,
            cases,
            passed: true,
            reproducer: None,
        },
        Err(rep) => CheckResult {
            name,
            cases: 0,
            passed: false,
            reproducer: Some(rep),
        },
    }
}

/// Runs one suite (or every suite, stopping after the first failing one).
pub fn run_suite(suite: Suite, seed: u64, budget: Budget) -> Vec<SuiteResult> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in suites {
        let mut ctx = Ctx::new(seed, s, budget);
        let checks = match s {
            Suite::Listona => listona(&mut ctx),
            Suite::Preorder => preorder(&mut ctx),
            Suite::Maxset => maxset(&mut ctx),
            Suite::DensityMono => density_mono(&mut ctx),
            Suite::StrongPr => strong_pr(&ctx),
            Suite::UpwardClosed => upward_closed(&mut ctx),
            Suite::All => unreachable!(),
        };
        let passed = checks.iter().all(|c| c.passed);
        out.push(SuiteResult {
            suite: s.name(),
            passed,
            checks,
        });
        if !passed {
            break;
        }
    }
    out
}
