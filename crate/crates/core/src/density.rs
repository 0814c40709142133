//! Net-based upper density `d*_F` at window scale, the weak left
//! cancellativity bound `b`, and the check `d*(A) / b <= d*(B)` for
//! right-translation embeddings.

use std::sync::Arc;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::carrier::{CarrierError, Element, GroundSet, Window};
use crate::embed::{fe_decide, fe_probe, EmbedError, ProbeOptions};
use crate::families::{FamilySpec, Generator};

#[derive(Debug, Error)]
pub enum DensityError {
    #[error("net maxN must be ≥ 1")]
    EmptyNet,
    #[error("net level {n} is empty")]
    EmptyLevel { n: usize },
    #[error("net level {n} does not contain level {prev}")]
    NotNested { n: usize, prev: usize },
    #[error("net level {n} has no in-window shift")]
    NetExceedsWindow { n: usize },
    #[error("tail start {tail} outside 1..={len}")]
    TailOutOfRange { tail: usize, len: usize },
    #[error("set and net live in different windows")]
    WindowMismatch,
    #[error("monotonicity check needs the right-translation family")]
    NotRightTranslations,
    #[error("pair {index} is not a verified embedding: {reason}")]
    UnverifiedPair { index: usize, reason: String },
    #[error(transparent)]
    Carrier(#[from] CarrierError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// `p/q` with no normalization to integers, e.g. `"1/1"`.
pub fn ratio_string<T: std::fmt::Display>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// An increasing chain `F_1 ⊆ F_2 ⊆ ... ⊆ F_N` of finite non-empty sets.
#[derive(Clone, Debug)]
pub struct Net {
    window: Arc<Window>,
    levels: Vec<Vec<Element>>,
    /// `F_n \ F_{n-1}`
    deltas: Vec<Vec<Element>>,
    label: String,
}

impl Net {
    /// `F_n = {1, ..., n}`.
    pub fn interval(window: Arc<Window>, max_n: usize) -> Result<Net, DensityError> {
        if max_n == 0 {
            return Err(DensityError::EmptyNet);
        }
        let mut levels = Vec::with_capacity(max_n);
        let mut current = Vec::with_capacity(max_n);
        for v in 1..=max_n as u64 {
            let e = window
                .from_value(v)
                .ok_or(DensityError::NetExceedsWindow { n: v as usize })?;
            current.push(e);
            levels.push(current.clone());
        }
        let mut net = Net::explicit(window, levels)?;
        net.label = format!("interval:{max_n}");
        Ok(net)
    }

    pub fn explicit(window: Arc<Window>, levels: Vec<Vec<Element>>) -> Result<Net, DensityError> {
        if levels.is_empty() {
            return Err(DensityError::EmptyNet);
        }
        let mut sorted: Vec<Vec<Element>> = Vec::with_capacity(levels.len());
        let mut deltas = Vec::with_capacity(levels.len());
        for (i, mut level) in levels.into_iter().enumerate() {
            level.sort_unstable();
            level.dedup();
            if level.is_empty() {
                return Err(DensityError::EmptyLevel { n: i + 1 });
            }
            for &e in &level {
                window.check(e)?;
            }
            let delta = match sorted.last() {
                None => level.clone(),
                Some(prev) => {
                    if prev.iter().any(|e| level.binary_search(e).is_err()) {
                        return Err(DensityError::NotNested { n: i + 1, prev: i });
                    }
                    level.iter().copied().filter(|e| prev.binary_search(e).is_err()).collect()
                }
            };
            deltas.push(delta);
            sorted.push(level);
        }
        Ok(Net {
            window,
            levels: sorted,
            deltas,
            label: "explicit".into(),
        })
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// `F_n`, counted from 1.
    pub fn level(&self, n: usize) -> &[Element] {
        &self.levels[n - 1]
    }

    pub fn window(&self) -> &Arc<Window> {
        &self.window
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// `|A ∩ F_n·x| / |F_n|` realized at level `n` and shift `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityWitness {
    /// Tail start this witness answers for.
    pub tail: usize,
    pub n: usize,
    /// `None` is the formal identity shift on carriers without a unit.
    pub shift: Option<Element>,
    pub hits: u64,
    pub size: u64,
}

impl DensityWitness {
    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new(self.hits, self.size)
    }

    /// Recounts `A ∩ F_n·x` directly.
    pub fn verify(&self, set: &GroundSet, net: &Net) -> bool {
        let w = net.window();
        let level = net.level(self.n);
        let mut hits = 0;
        for &e in level {
            let y = match self.shift {
                None => Some(e),
                Some(x) => w.op_unchecked(e, x),
            };
            match y {
                Some(y) => hits += u64::from(set.has(y)),
                None => return false,
            }
        }
        hits == self.hits && level.len() as u64 == self.size
    }
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub value: Ratio<u64>,
    pub tail_start: usize,
    /// One per tail start `m` in `tail_start..=N` where the witness changes.
    pub witnesses: Vec<DensityWitness>,
    /// Best ratio per level `n`, for inspection.
    pub per_level: Vec<Ratio<u64>>,
    /// `(n, x)` pairs skipped because `F_n·x` leaves the window.
    pub skipped: u64,
}

/// Finite-scale `d*_F(A)`: the maximum over `n >= m` and in-window shifts
/// `x` of `|A ∩ F_n·x| / |F_n|`, at tail start `m` (default `N`, where the
/// non-increasing tail maxima bottom out).
pub fn upper_density(set: &GroundSet, net: &Net, tail: Option<usize>) -> Result<DensityReport, DensityError> {
    let w = net.window();
    if set.window() != w && **set.window() != **w {
        return Err(DensityError::WindowMismatch);
    }
    let len = net.len();
    let tail_start = tail.unwrap_or(len);
    if tail_start == 0 || tail_start > len {
        return Err(DensityError::TailOutOfRange { tail: tail_start, len });
    }
    let mut shifts: Vec<Option<Element>> = Vec::with_capacity(w.size() + 1);
    if w.identity().is_none() {
        shifts.push(None);
    }
    shifts.extend(w.elements().map(Some));

    // best (hits, shift) per level; hits compared at fixed |F_n|
    let mut best: Vec<Option<(u64, Option<Element>)>> = vec![None; len];
    let mut skipped = 0u64;
    for &x in &shifts {
        let mut hits = 0u64;
        for (i, delta) in net.deltas.iter().enumerate() {
            let mut out = false;
            for &e in delta {
                let y = match x {
                    None => Some(e),
                    Some(x) => w.op_unchecked(e, x),
                };
                match y {
                    Some(y) => hits += u64::from(set.has(y)),
                    None => {
                        out = true;
                        break;
                    }
                }
            }
            if out {
                skipped += (len - i) as u64;
                break;
            }
            if best[i].is_none_or(|(h, _)| hits > h) {
                best[i] = Some((hits, x));
            }
        }
    }
    let sizes: Vec<u64> = net.levels.iter().map(|l| l.len() as u64).collect();
    let mut per_level = Vec::with_capacity(len);
    for (i, b) in best.iter().enumerate() {
        let (h, _) = b.ok_or(DensityError::NetExceedsWindow { n: i + 1 })?;
        per_level.push(Ratio::new(h, sizes[i]));
    }

    // suffix argmax, earliest level on ties
    let mut witnesses = Vec::new();
    let mut arg = len - 1;
    let mut by_tail = vec![0usize; len];
    for i in (0..len).rev() {
        if per_level[i] >= per_level[arg] {
            arg = i;
        }
        by_tail[i] = arg;
    }
    for m in tail_start..=len {
        let i = by_tail[m - 1];
        if witnesses.last().is_some_and(|w: &DensityWitness| w.n == i + 1) {
            continue;
        }
        let (hits, shift) = best[i].expect("checked above");
        witnesses.push(DensityWitness {
            tail: m,
            n: i + 1,
            shift,
            hits,
            size: sizes[i],
        });
    }
    Ok(DensityReport {
        value: per_level[by_tail[tail_start - 1]],
        tail_start,
        witnesses,
        per_level,
        skipped,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CancellativityBound {
    pub b: u64,
    /// A pair `(x, y)` with `b` solutions of `s·x = y`.
    pub x: usize,
    pub y: usize,
}

/// `max_{x,y} |{s : s·x = y}|` over the window.
pub fn weak_cancellativity_bound(window: &Window) -> CancellativityBound {
    let mut counts = vec![0u64; window.size()];
    let mut best = CancellativityBound { b: 0, x: 0, y: 0 };
    for x in window.elements() {
        counts.iter_mut().for_each(|c| *c = 0);
        for s in window.elements() {
            if let Some(y) = window.op_unchecked(s, x) {
                counts[y.0] += 1;
                if counts[y.0] > best.b {
                    best = CancellativityBound { b: counts[y.0], x: x.0, y: y.0 };
                }
            }
        }
    }
    best
}

#[derive(Clone, Debug)]
pub struct MonotonicityEntry {
    pub d_a: Ratio<u64>,
    pub d_b: Ratio<u64>,
    /// `d*(B) + tol - d*(A) / b`; non-negative when the inequality holds.
    pub margin: Ratio<i64>,
    /// Translation parameters found for the largest probe.
    pub shift: Vec<u64>,
}

impl MonotonicityEntry {
    pub fn holds(&self) -> bool {
        self.margin >= Ratio::from_integer(0)
    }
}

#[derive(Clone, Debug)]
pub struct MonotonicityReport {
    pub b: CancellativityBound,
    pub tolerance: Ratio<u64>,
    pub entries: Vec<MonotonicityEntry>,
}

impl MonotonicityReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(MonotonicityEntry::holds)
    }
}

fn signed(r: Ratio<u64>) -> Ratio<i64> {
    Ratio::new(*r.numer() as i64, *r.denom() as i64)
}

/// For each pair, first confirms `A <= B` under right translations (whole
/// `A` when explicit, else the prefix probes), then checks
/// `d*(A) / b <= d*(B) + tol` with `b` the window's cancellativity bound.
pub fn check_density_monotonicity(
    pairs: &[(GroundSet, GroundSet)],
    family: &FamilySpec,
    net: &Net,
    probes: &[usize],
    tolerance: Ratio<u64>,
) -> Result<MonotonicityReport, DensityError> {
    if !matches!(family.generator(), Generator::RightTranslation) {
        return Err(DensityError::NotRightTranslations);
    }
    let b = weak_cancellativity_bound(net.window());
    let mut entries = Vec::with_capacity(pairs.len());
    for (index, (a, bset)) in pairs.iter().enumerate() {
        let unverified = |reason: String| DensityError::UnverifiedPair { index, reason };
        let shift = if a.is_explicit() {
            let v = fe_decide(a, bset, family).map_err(|e| unverified(e.to_string()))?;
            v.witness()
                .ok_or_else(|| unverified(format!("embedding verdict is {}", v.label())))?
                .params
                .clone()
        } else {
            let results =
                fe_probe(a, bset, family, probes, &ProbeOptions::default()).map_err(|e| unverified(e.to_string()))?;
            let mut last = Vec::new();
            for r in &results {
                match r.verdict.witness() {
                    Some(w) => last = w.params.clone(),
                    None => return Err(unverified(format!("probe {} verdict is {}", r.size, r.verdict.label()))),
                }
            }
            last
        };
        let d_a = upper_density(a, net, None)?.value;
        let d_b = upper_density(bset, net, None)?.value;
        let margin = signed(d_b) + signed(tolerance) - signed(d_a) / Ratio::from_integer(b.b.max(1) as i64);
        entries.push(MonotonicityEntry { d_a, d_b, margin, shift });
    }
    Ok(MonotonicityReport { b, tolerance, entries })
}
