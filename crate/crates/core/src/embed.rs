//! Deciding `A <=_F B` at window scale.
//!
//! `A` is `F`-finitely embeddable in `B` when every finite `F0 ⊆ A` has a
//! member `f` of the family with `f(F0^n) ⊆ B`. For a finite `A` it is
//! enough to check `F0 = A`. Negative answers are only given when the
//! parameter enumeration was complete; otherwise the verdict is `Unknown`.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::carrier::{element_json, CarrierError, Element, GroundSet};
use crate::families::{for_each_tuple, FamilyError, FamilySpec, Params};
use crate::rich::{RichError, SetProperty};

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error("the finite set F is empty")]
    EmptySet,
    #[error("F is not inside the window: {0}")]
    OutsideWindow(CarrierError),
    #[error("A must be an explicit finite set")]
    NotExplicit,
    #[error("sets and family live in different windows")]
    WindowMismatch,
    #[error("|F| = {size} exceeds the cap {cap} for arity-{arity} families")]
    TooManyTuples { size: usize, arity: usize, cap: usize },
    #[error("probe sizes must be strictly ascending")]
    ProbesNotAscending,
    #[error("A does not embed in B under the union family{}", if *.undetermined { " (some verdicts unknown)" } else { "" })]
    UnionEmbeddingFails { undetermined: bool },
    #[error("pair {index} is not a verified embedding: {reason}")]
    UnverifiedPair { index: usize, reason: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Rich(#[from] RichError),
}

/// `f(F^n) ⊆ B` for the member selected by `params`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedWitness {
    pub f_set: Vec<Element>,
    pub params: Params,
    pub image: Vec<Element>,
}

impl EmbedWitness {
    /// Re-evaluates every tuple through the checked `apply` path.
    pub fn verify(&self, family: &FamilySpec, target: &GroundSet) -> bool {
        let mut image = Vec::new();
        let ok = for_each_tuple(&self.f_set, family.arity(), |tuple| {
            match family.apply(&self.params, tuple) {
                Ok(Some(e)) if target.contains(e).unwrap_or(false) => {
                    image.push(e);
                    true
                }
                _ => false,
            }
        });
        image.sort_unstable();
        image.dedup();
        ok && image == self.image
    }

    pub fn to_json(&self, family: &FamilySpec) -> Value {
        let w = family.window();
        json!({
            "F": self.f_set.iter().map(|&e| element_json(w, e)).collect::<Vec<_>>(),
            "params": family.params_json(&self.params),
            "image": self.image.iter().map(|&e| element_json(w, e)).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes(EmbedWitness),
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbedVerdict {
    pub outcome: Outcome,
    /// Parameter tuples examined.
    pub examined: usize,
    /// Whether the parameter enumeration was complete.
    pub complete: bool,
}

impl EmbedVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self.outcome, Outcome::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        self.outcome == Outcome::No
    }

    pub fn witness(&self) -> Option<&EmbedWitness> {
        match &self.outcome {
            Outcome::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self.outcome {
            Outcome::Yes(_) => "yes",
            Outcome::No => "no",
            Outcome::Unknown => "unknown",
        }
    }

    pub fn to_json(&self, family: &FamilySpec) -> Value {
        let mut v = json!({
            "outcome": self.label(),
            "complete": self.complete,
            "examined": self.examined,
        });
        if let Outcome::Yes(w) = &self.outcome {
            v["witness"] = w.to_json(family);
        }
        v
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EmbedOptions {
    /// Largest `|F|` accepted for families of arity >= 2.
    pub tuple_cap: usize,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions { tuple_cap: 12 }
    }
}

fn prepare(f_set: &[Element], target: &GroundSet, family: &FamilySpec, opts: EmbedOptions) -> Result<Vec<Element>, EmbedError> {
    if target.window() != family.window() && **target.window() != **family.window() {
        return Err(EmbedError::WindowMismatch);
    }
    if f_set.is_empty() {
        return Err(EmbedError::EmptySet);
    }
    let mut f: Vec<Element> = f_set.to_vec();
    for &e in &f {
        family.window().check(e).map_err(EmbedError::OutsideWindow)?;
    }
    f.sort_unstable();
    f.dedup();
    if family.arity() >= 2 && f.len() > opts.tuple_cap {
        return Err(EmbedError::TooManyTuples {
            size: f.len(),
            arity: family.arity(),
            cap: opts.tuple_cap,
        });
    }
    Ok(f)
}

/// Is there a member `f` with `f(F^n) ⊆ B`?
pub fn embed_finite(f_set: &[Element], target: &GroundSet, family: &FamilySpec) -> Result<EmbedVerdict, EmbedError> {
    embed_finite_with(f_set, target, family, EmbedOptions::default())
}

pub fn embed_finite_with(
    f_set: &[Element],
    target: &GroundSet,
    family: &FamilySpec,
    opts: EmbedOptions,
) -> Result<EmbedVerdict, EmbedError> {
    let f = prepare(f_set, target, family, opts)?;
    let mut stream = family.enumerate_params(&f, target);
    let complete = stream.complete;
    let mut examined = 0;
    for params in stream.by_ref() {
        examined += 1;
        if family.maps_into(&params, &f, target) {
            let image = family
                .image(&params, &f)
                .expect("maps_into guarantees an in-window image");
            return Ok(EmbedVerdict {
                outcome: Outcome::Yes(EmbedWitness { f_set: f, params, image }),
                examined,
                complete,
            });
        }
    }
    Ok(EmbedVerdict {
        outcome: if complete { Outcome::No } else { Outcome::Unknown },
        examined,
        complete,
    })
}

/// `A <=_F B` for an explicit finite `A`.
pub fn fe_decide(a: &GroundSet, b: &GroundSet, family: &FamilySpec) -> Result<EmbedVerdict, EmbedError> {
    if !a.is_explicit() {
        return Err(EmbedError::NotExplicit);
    }
    let elements: Vec<Element> = a.iter().collect();
    embed_finite(&elements, b, family)
}

#[derive(Clone, Debug, Default)]
pub struct ProbeOptions {
    /// Seed and count for extra random subsets drawn at each probe size.
    pub random: Option<(u64, usize)>,
    pub embed: EmbedOptions,
}

#[derive(Clone, Debug)]
pub struct ProbeResult {
    pub size: usize,
    /// `false` for canonical-prefix probes, `true` for seeded random subsets.
    pub random: bool,
    pub verdict: EmbedVerdict,
}

/// Probes `A <=_F B` with the first `p` elements of `A` for each probe size.
/// A `No` certifies non-embeddability; all-`Yes` is only evidence.
pub fn fe_probe(
    a: &GroundSet,
    b: &GroundSet,
    family: &FamilySpec,
    probe_sizes: &[usize],
    opts: &ProbeOptions,
) -> Result<Vec<ProbeResult>, EmbedError> {
    if a.is_empty() {
        return Err(EmbedError::EmptySet);
    }
    if probe_sizes.windows(2).any(|p| p[0] >= p[1]) || probe_sizes.first() == Some(&0) {
        return Err(EmbedError::ProbesNotAscending);
    }
    let members: Vec<Element> = a.iter().collect();
    let mut rng = opts.random.map(|(seed, _)| ChaCha8Rng::seed_from_u64(seed));
    let mut out = Vec::new();
    for &p in probe_sizes {
        let prefix = &members[..p.min(members.len())];
        out.push(ProbeResult {
            size: p,
            random: false,
            verdict: embed_finite_with(prefix, b, family, opts.embed)?,
        });
        if let (Some(rng), Some((_, count))) = (rng.as_mut(), opts.random) {
            let take = p.min(members.len());
            for _ in 0..count {
                let subset: Vec<Element> = sample(rng, members.len(), take)
                    .into_iter()
                    .map(|i| members[i])
                    .collect();
                out.push(ProbeResult {
                    size: p,
                    random: true,
                    verdict: embed_finite_with(&subset, b, family, opts.embed)?,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct UnionSplit {
    /// Position of the first family that embeds `A` alone, counted from 1.
    pub index: usize,
    pub verdicts: Vec<EmbedVerdict>,
}

/// For `A <= B` under `F_1 ∪ ... ∪ F_k`, find an `i` with `A <=_{F_i} B`.
pub fn check_union_split(a: &GroundSet, b: &GroundSet, families: &[FamilySpec]) -> Result<UnionSplit, EmbedError> {
    let verdicts = families
        .iter()
        .map(|fam| fe_decide(a, b, fam))
        .collect::<Result<Vec<_>, _>>()?;
    match verdicts.iter().position(EmbedVerdict::is_yes) {
        Some(i) => Ok(UnionSplit { index: i + 1, verdicts }),
        None => Err(EmbedError::UnionEmbeddingFails {
            undetermined: verdicts.iter().any(|v| v.outcome == Outcome::Unknown),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionOutcome {
    Satisfied { h: Params },
    Violated,
    Unknown,
    /// `f` or `g` left the window on this sample.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct TransitivityEntry {
    pub f_set: Vec<Element>,
    pub f: Params,
    pub g: Params,
    /// `g([f(F^n)]^n)`
    pub target: Vec<Element>,
    pub outcome: CriterionOutcome,
}

#[derive(Clone, Debug)]
pub struct CriterionReport<T> {
    pub entries: Vec<T>,
    pub satisfied: usize,
    pub violated: usize,
    pub unknown: usize,
    pub skipped: usize,
}

impl<T> Default for CriterionReport<T> {
    fn default() -> Self {
        CriterionReport {
            entries: Vec::new(),
            satisfied: 0,
            violated: 0,
            unknown: 0,
            skipped: 0,
        }
    }
}

impl<T> CriterionReport<T> {
    fn tally(&mut self, outcome: &CriterionOutcome) {
        match outcome {
            CriterionOutcome::Satisfied { .. } => self.satisfied += 1,
            CriterionOutcome::Violated => self.violated += 1,
            CriterionOutcome::Unknown => self.unknown += 1,
            CriterionOutcome::Skipped => self.skipped += 1,
        }
    }

    pub fn all_satisfied(&self) -> bool {
        self.violated == 0 && self.unknown == 0 && self.satisfied > 0
    }
}

fn outcome_of(verdict: EmbedVerdict) -> CriterionOutcome {
    match verdict.outcome {
        Outcome::Yes(w) => CriterionOutcome::Satisfied { h: w.params },
        Outcome::No => CriterionOutcome::Violated,
        Outcome::Unknown => CriterionOutcome::Unknown,
    }
}

/// Transitivity criterion: for each sample `F` and each pair `(f, g)` of
/// members with parameters up to `param_bound`, search `h` with
/// `h(F^n) ⊆ g([f(F^n)]^n)`.
pub fn check_transitive_criterion(
    family: &FamilySpec,
    samples: &[Vec<Element>],
    param_bound: u64,
) -> Result<CriterionReport<TransitivityEntry>, EmbedError> {
    let members: Vec<Params> = family.scan_params(param_bound).collect();
    let mut report = CriterionReport::default();
    for f_set in samples {
        let f_sorted = prepare(f_set, &GroundSet::empty(family.window().clone()), family, EmbedOptions::default())?;
        for f in &members {
            for g in &members {
                let target = family
                    .image(f, &f_sorted)
                    .and_then(|inner| family.image(g, &inner));
                let entry = match target {
                    None => TransitivityEntry {
                        f_set: f_sorted.clone(),
                        f: f.clone(),
                        g: g.clone(),
                        target: Vec::new(),
                        outcome: CriterionOutcome::Skipped,
                    },
                    Some(target) => {
                        let t_set = GroundSet::explicit(family.window().clone(), target.iter().copied())
                            .expect("images are in-window");
                        let outcome = outcome_of(embed_finite(&f_sorted, &t_set, family)?);
                        TransitivityEntry {
                            f_set: f_sorted.clone(),
                            f: f.clone(),
                            g: g.clone(),
                            target,
                            outcome,
                        }
                    }
                };
                report.tally(&entry.outcome);
                report.entries.push(entry);
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ReflexiveEntry {
    pub f_set: Vec<Element>,
    pub outcome: CriterionOutcome,
}

/// Reflexivity criterion: for each sample `F`, is there `f` with `f(F^n) ⊆ F`?
pub fn check_reflexive_criterion(
    family: &FamilySpec,
    samples: &[Vec<Element>],
) -> Result<CriterionReport<ReflexiveEntry>, EmbedError> {
    let mut report = CriterionReport::default();
    for f_set in samples {
        let own = GroundSet::explicit(family.window().clone(), f_set.iter().copied()).map_err(EmbedError::OutsideWindow)?;
        let outcome = outcome_of(embed_finite(f_set, &own, family)?);
        report.tally(&outcome);
        let mut sorted = f_set.clone();
        sorted.sort_unstable();
        sorted.dedup();
        report.entries.push(ReflexiveEntry { f_set: sorted, outcome });
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct UpwardEntry {
    pub witness: EmbedWitness,
    pub in_a: bool,
    pub in_b: bool,
}

impl UpwardEntry {
    pub fn transfers(&self) -> bool {
        !self.in_a || self.in_b
    }
}

#[derive(Clone, Debug)]
pub struct UpwardReport {
    pub property: String,
    pub entries: Vec<UpwardEntry>,
    /// First pair (counted from 0) with `A ∈ P` and `B ∉ P`.
    pub counterexample: Option<usize>,
}

impl UpwardReport {
    pub fn closed_at_window(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `A ∈ P ⇒ B ∈ P` on pairs whose embedding `A <=_F B` is verified
/// first (explicit `A` only).
pub fn check_upward_closed(
    property: &SetProperty,
    pairs: &[(GroundSet, GroundSet)],
    family: &FamilySpec,
) -> Result<UpwardReport, EmbedError> {
    let mut entries = Vec::new();
    for (index, (a, b)) in pairs.iter().enumerate() {
        let verdict = fe_decide(a, b, family).map_err(|e| EmbedError::UnverifiedPair {
            index,
            reason: e.to_string(),
        })?;
        let Outcome::Yes(witness) = verdict.outcome else {
            return Err(EmbedError::UnverifiedPair {
                index,
                reason: format!("embedding verdict is {}", verdict.label()),
            });
        };
        entries.push(UpwardEntry {
            witness,
            in_a: property.holds(a)?,
            in_b: property.holds(b)?,
        });
    }
    let counterexample = entries.iter().position(|e| !e.transfers());
    Ok(UpwardReport {
        property: property.to_string(),
        entries,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::carrier::{Predicate, Window};

    fn add(bound: u64) -> Arc<Window> {
        Arc::new(Window::additive(bound).unwrap())
    }

    fn set(w: &Arc<Window>, vals: &[u64]) -> GroundSet {
        GroundSet::from_values(w.clone(), vals.iter().copied()).unwrap()
    }

    fn els(vals: &[usize]) -> Vec<Element> {
        vals.iter().map(|&v| Element(v)).collect()
    }

    #[test]
    fn embed_finite_examples() {
        let w = add(40);
        let tr = FamilySpec::right_translations(w.clone());
        let v = embed_finite(&els(&[0, 2]), &set(&w, &[5, 7, 9]), &tr).unwrap();
        let wit = v.witness().unwrap();
        assert_eq!(wit.params, vec![5]);
        assert_eq!(wit.image, els(&[5, 7]));
        assert!(v.complete);

        let aff = FamilySpec::affine(w.clone()).unwrap();
        let v = embed_finite(&els(&[3]), &set(&w, &[3]), &aff).unwrap();
        assert_eq!(v.witness().unwrap().params, vec![0, 1]);

        let evens = GroundSet::predicate(w.clone(), Predicate::Evens).unwrap();
        let v = embed_finite(&els(&[0, 1]), &evens, &tr).unwrap();
        assert!(v.is_no());
        assert!(v.complete);
    }

    #[test]
    fn embed_finite_errors() {
        let w = add(10);
        let tr = FamilySpec::right_translations(w.clone());
        assert!(matches!(
            embed_finite(&els(&[11]), &set(&w, &[1]), &tr),
            Err(EmbedError::OutsideWindow(_))
        ));
        assert!(matches!(
            embed_finite(&[], &set(&w, &[1]), &tr),
            Err(EmbedError::EmptySet)
        ));
        let other = add(11);
        assert!(matches!(
            embed_finite(&els(&[1]), &set(&other, &[1]), &tr),
            Err(EmbedError::WindowMismatch)
        ));
        let geo = FamilySpec::geoarithmetic(add(100)).unwrap();
        let f13: Vec<Element> = (0..13).map(Element).collect();
        assert!(matches!(
            embed_finite(&f13, &GroundSet::full(geo.window().clone()), &geo),
            Err(EmbedError::TooManyTuples { size: 13, arity: 2, cap: 12 })
        ));
    }

    #[test]
    fn fe_decide_examples() {
        let w = add(40);
        let evens = GroundSet::predicate(w.clone(), Predicate::Evens).unwrap();
        let aff = FamilySpec::affine(w.clone()).unwrap();
        let v = fe_decide(&set(&w, &[1, 2, 3]), &evens, &aff).unwrap();
        let wit = v.witness().unwrap();
        assert_eq!(wit.params, vec![0, 2]);
        assert_eq!(wit.image, els(&[2, 4, 6]));
        assert!(wit.verify(&aff, &evens));

        let empty = GroundSet::empty(w.clone());
        assert!(fe_decide(&set(&w, &[1]), &empty, &aff).unwrap().is_no());

        let tr = FamilySpec::right_translations(w.clone());
        let v = fe_decide(&set(&w, &[0, 2]), &set(&w, &[5, 7]), &tr).unwrap();
        assert_eq!(v.witness().unwrap().params, vec![5]);

        assert!(matches!(
            fe_decide(&evens, &evens, &tr),
            Err(EmbedError::NotExplicit)
        ));
    }

    #[test]
    fn fe_probe_examples() {
        let w = add(200);
        let all = GroundSet::full(w.clone());
        let b = GroundSet::predicate(
            w.clone(),
            "union(interval:10:20,interval:100:120)".parse().unwrap(),
        )
        .unwrap();
        let tr = FamilySpec::right_translations(w.clone());
        let res = fe_probe(&all, &b, &tr, &[3, 5, 10], &ProbeOptions::default()).unwrap();
        assert_eq!(res.len(), 3);
        assert!(res.iter().all(|r| r.verdict.is_yes()));

        let evens = GroundSet::predicate(w.clone(), Predicate::Evens).unwrap();
        let res = fe_probe(&all, &evens, &tr, &[2], &ProbeOptions::default()).unwrap();
        assert!(res[0].verdict.is_no());

        let aff = FamilySpec::affine(w.clone()).unwrap();
        let odds = GroundSet::predicate(w.clone(), Predicate::Odds).unwrap();
        let res = fe_probe(&odds, &all, &aff, &[1, 4, 9], &ProbeOptions::default()).unwrap();
        assert!(res.iter().all(|r| r.verdict.is_yes()));

        assert!(matches!(
            fe_probe(&all, &b, &tr, &[5, 3], &ProbeOptions::default()),
            Err(EmbedError::ProbesNotAscending)
        ));
        assert!(matches!(
            fe_probe(&GroundSet::empty(w.clone()), &b, &tr, &[1], &ProbeOptions::default()),
            Err(EmbedError::EmptySet)
        ));

        let opts = ProbeOptions {
            random: Some((7, 3)),
            ..Default::default()
        };
        let first = fe_probe(&odds, &all, &aff, &[2, 4], &opts).unwrap();
        let second = fe_probe(&odds, &all, &aff, &[2, 4], &opts).unwrap();
        assert_eq!(first.len(), 8);
        for (x, y) in first.iter().zip(&second) {
            assert_eq!(x.verdict, y.verdict);
        }
    }

    #[test]
    fn union_split_examples() {
        let w = add(40);
        let steep = FamilySpec::affine_with_min_slope(w.clone(), 2).unwrap();
        let tr = FamilySpec::right_translations(w.clone());
        let aff = FamilySpec::affine(w.clone()).unwrap();
        let split = check_union_split(&set(&w, &[0, 2]), &set(&w, &[5, 7]), &[steep, tr.clone()]).unwrap();
        assert_eq!(split.index, 2);
        assert_eq!(split.verdicts[1].witness().unwrap().params, vec![5]);

        let split = check_union_split(&set(&w, &[0, 1, 2]), &set(&w, &[0, 2, 4]), &[tr.clone(), aff.clone()]).unwrap();
        assert_eq!(split.index, 2);
        assert!(split.verdicts[0].is_no());
        assert_eq!(split.verdicts[1].witness().unwrap().params, vec![0, 2]);

        let m = Arc::new(Window::multiplicative(40).unwrap());
        let mtr = FamilySpec::right_translations(m.clone());
        let one = GroundSet::from_values(m.clone(), [1]).unwrap();
        let split = check_union_split(&one, &one, &[mtr.clone(), mtr]).unwrap();
        assert_eq!(split.index, 1);

        assert!(matches!(
            check_union_split(&set(&w, &[0, 1]), &set(&w, &[5]), &[tr, aff]),
            Err(EmbedError::UnionEmbeddingFails { undetermined: false })
        ));
    }

    #[test]
    fn transitivity_examples() {
        let w = add(60);
        let tr = FamilySpec::right_translations(w.clone());
        let report = check_transitive_criterion(&tr, &[els(&[0, 3, 4])], 3).unwrap();
        assert!(report.all_satisfied());
        for e in &report.entries {
            assert_eq!(e.outcome, CriterionOutcome::Satisfied { h: vec![e.f[0] + e.g[0]] });
        }

        let aff = FamilySpec::affine(w.clone()).unwrap();
        let report = check_transitive_criterion(&aff, &[els(&[0, 1])], 3).unwrap();
        assert!(report.all_satisfied());
        let entry = report
            .entries
            .iter()
            .find(|e| e.f == vec![1, 2] && e.g == vec![0, 3])
            .unwrap();
        assert_eq!(entry.outcome, CriterionOutcome::Satisfied { h: vec![3, 6] });

        let constants = FamilySpec::from_pair(
            w.clone(),
            1,
            1,
            "param0",
            crate::families::Region::all(),
            Default::default(),
        )
        .unwrap()
        .with_enumeration(crate::families::ParamEnumeration {
            mode: crate::families::EnumMode::BoundedScan,
            bound: Some(60),
        });
        let report = check_transitive_criterion(&constants, &[els(&[2, 9])], 4).unwrap();
        assert!(report.all_satisfied());
    }

    #[test]
    fn reflexivity_examples() {
        let w = add(30);
        let aff = FamilySpec::affine(w.clone()).unwrap();
        let report = check_reflexive_criterion(&aff, &[els(&[1, 2]), els(&[5, 9, 11])]).unwrap();
        assert!(report.all_satisfied());

        let tr = FamilySpec::right_translations(w.clone());
        let report = check_reflexive_criterion(&tr, &[els(&[1, 2])]).unwrap();
        assert_eq!(report.entries[0].outcome, CriterionOutcome::Satisfied { h: vec![0] });

        // shifts by at least 1 push max F out of F
        let positive = FamilySpec::from_pair(
            w.clone(),
            1,
            1,
            "slot0 + param0",
            crate::families::Region(vec![Predicate::AtLeast(1)]),
            Default::default(),
        )
        .unwrap();
        let report = check_reflexive_criterion(&positive, &[els(&[1, 2])]).unwrap();
        assert_eq!(report.satisfied, 0);

        let words = Arc::new(Window::words(&['a', 'b'], 3).unwrap());
        let suffix = FamilySpec::word_suffix(words.clone(), 'a').unwrap();
        let a = words.parse("a").unwrap();
        let report = check_reflexive_criterion(&suffix, &[vec![a]]).unwrap();
        assert_eq!(report.entries[0].outcome, CriterionOutcome::Satisfied { h: vec![0] });
    }

    #[test]
    fn upward_closure_examples() {
        let w = add(60);
        let tr = FamilySpec::right_translations(w.clone());
        let a = set(&w, &[0, 2, 4, 6]);
        let b = set(&w, &[5, 7, 9, 11]);
        let report = check_upward_closed(&SetProperty::ContainsAp(4), &[(a, b)], &tr).unwrap();
        assert!(report.closed_at_window());
        assert!(report.entries[0].in_a && report.entries[0].in_b);

        let report = check_upward_closed(
            &SetProperty::ContainsElement(0),
            &[(set(&w, &[0]), set(&w, &[5]))],
            &tr,
        )
        .unwrap();
        assert_eq!(report.counterexample, Some(0));

        assert!(matches!(
            check_upward_closed(&SetProperty::ContainsAp(2), &[(set(&w, &[0, 1]), set(&w, &[0, 2]))], &tr),
            Err(EmbedError::UnverifiedPair { index: 0, .. })
        ));

        // GAP grids survive multiplicative translation
        let m = Arc::new(Window::multiplicative(400).unwrap());
        let mtr = FamilySpec::right_translations(m.clone());
        let grid = GroundSet::from_values(m.clone(), [2, 4, 3, 6]).unwrap();
        let scaled = GroundSet::from_values(m.clone(), [6, 12, 9, 18]).unwrap();
        let prop = SetProperty::GapGrid { side: 2, zero_based: true };
        let report = check_upward_closed(&prop, &[(grid, scaled)], &mtr).unwrap();
        assert!(report.entries[0].in_a);
        assert!(report.closed_at_window());
    }
}
