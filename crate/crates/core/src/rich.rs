//! Detectors for the structures that make a set maximal under the usual
//! families: thickness, long APs, geoarithmetic grids, polynomial
//! progressions and piecewise syndeticity. Everything is relative to the
//! window; nothing here claims an infinite property.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::carrier::{Element, GroundSet, Window, WindowKind};
use crate::embed::{embed_finite, EmbedError, EmbedVerdict};
use crate::families::FamilySpec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RichError {
    #[error("detector needs a numeric carrier, got {0}")]
    NotNumeric(WindowKind),
    #[error("degree set D is empty")]
    EmptyDegrees,
    #[error("degree set D must lie in 0..={degree} and reach at least 1 (max is {max})")]
    InconsistentDegree { max: u32, degree: u32 },
    #[error("probe length {length} exceeds the window bound {bound}")]
    ProbeTooLong { length: u64, bound: u64 },
    #[error("gap bound must be at least 1")]
    ZeroGap,
    #[error("unknown set property {0:?}")]
    UnknownProperty(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProgressionKind {
    Ap,
    GapGrid,
    Polynomial,
}

/// A progression realized inside a set.
///
/// `params` layout by kind:
/// - `ap`: `[start, stride]`
/// - `gap-grid` (one-based): `[r, a, b, k]`, grid `r^i (a + j b)` for `1 <= i, j <= k`
/// - `gap-grid` (zero-based): `[b, q, a, d, n]`, grid `b q^j (a + i d)` for `0 <= i, j <= n`
/// - `polynomial`: the coefficients `a_i` for `i` in `D`, in the order of `D`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionCertificate {
    pub kind: ProgressionKind,
    pub params: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
    #[serde(skip)]
    pub zero_based: bool,
    pub realized: Vec<u64>,
    pub length: usize,
}

impl ProgressionCertificate {
    fn empty(kind: ProgressionKind) -> Self {
        ProgressionCertificate {
            kind,
            params: Vec::new(),
            degrees: None,
            zero_based: false,
            realized: Vec::new(),
            length: 0,
        }
    }

    /// Recomputes the progression from `params` and checks every element
    /// against `set`.
    pub fn verify(&self, set: &GroundSet) -> bool {
        if self.length == 0 {
            return self.realized.is_empty();
        }
        let expected = match self.kind {
            ProgressionKind::Ap => match self.params[..] {
                [a, s] if s >= 1 => (0..self.length as u64).map(|i| s.checked_mul(i).and_then(|x| x.checked_add(a))).collect(),
                _ => return false,
            },
            ProgressionKind::GapGrid if self.zero_based => match self.params[..] {
                [b, q, a, d, n] if q > 1 && d > 0 && n as usize + 1 == self.length => zero_grid(b, q, a, d, n),
                _ => return false,
            },
            ProgressionKind::GapGrid => match self.params[..] {
                [r, a, b, k] if r > 1 && b > 0 && k as usize == self.length => one_grid(r, a, b, k),
                _ => return false,
            },
            ProgressionKind::Polynomial => {
                let Some(degrees) = &self.degrees else { return false };
                if degrees.len() != self.params.len() {
                    return false;
                }
                (1..=self.length as u64)
                    .map(|x| poly_eval(&self.params, degrees, x))
                    .collect()
            }
        };
        let expected: Option<Vec<u64>> = expected;
        match expected {
            Some(vals) => vals == self.realized && vals.iter().all(|&v| set.has_value(v)),
            None => false,
        }
    }
}

fn numeric(set: &GroundSet) -> Result<&Window, RichError> {
    let w = set.window();
    match w.kind() {
        WindowKind::AdditiveNaturals | WindowKind::MultiplicativeNaturals => Ok(w),
        k => Err(RichError::NotNumeric(k)),
    }
}

/// Longest AP with stride >= 1 inside `A`. Ties go to the smaller stride,
/// then the smaller start.
pub fn longest_ap(set: &GroundSet) -> Result<ProgressionCertificate, RichError> {
    numeric(set)?;
    let vals = set.values();
    let (Some(&lo), Some(&hi)) = (vals.first(), vals.last()) else {
        return Ok(ProgressionCertificate::empty(ProgressionKind::Ap));
    };
    let (mut best_start, mut best_stride, mut best_len) = (lo, 1u64, 1u64);
    let span = hi - lo;
    for stride in 1..=span {
        if span / stride + 1 <= best_len {
            break;
        }
        for &start in &vals {
            if start >= stride && set.has_value(start - stride) {
                continue;
            }
            if (hi - start) / stride + 1 <= best_len {
                // starts only grow from here
                break;
            }
            let mut len = 1;
            while set.has_value(start + len * stride) {
                len += 1;
            }
            if len > best_len {
                (best_start, best_stride, best_len) = (start, stride, len);
            }
        }
    }
    Ok(ProgressionCertificate {
        kind: ProgressionKind::Ap,
        params: vec![best_start, best_stride],
        degrees: None,
        zero_based: false,
        realized: (0..best_len).map(|i| best_start + i * best_stride).collect(),
        length: best_len as usize,
    })
}

fn one_grid(r: u64, a: u64, b: u64, k: u64) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    for i in 1..=k {
        let ri = r.checked_pow(u32::try_from(i).ok()?)?;
        for j in 1..=k {
            out.push(ri.checked_mul(a.checked_add(j.checked_mul(b)?)?)?);
        }
    }
    Some(out)
}

fn zero_grid(b: u64, q: u64, a: u64, d: u64, n: u64) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    for j in 0..=n {
        let bq = b.checked_mul(q.checked_pow(u32::try_from(j).ok()?)?)?;
        for i in 0..=n {
            out.push(bq.checked_mul(a.checked_add(i.checked_mul(d)?)?)?);
        }
    }
    Some(out)
}

/// Largest `k` with `r^i (a + j b) ∈ A` for all `1 <= i, j <= k`
/// (`r > 1`, `b > 0`). With `zero_based`, the grid is
/// `b q^j (a + i d)` for `0 <= i, j <= n` (`q > 1`, `a, b, d >= 1`) and the
/// reported length is the side `n + 1`.
///
/// Ties: larger `k`, then smaller ratio, then smaller `a`, then smaller step.
pub fn longest_gap_grid(set: &GroundSet, zero_based: bool) -> Result<ProgressionCertificate, RichError> {
    numeric(set)?;
    let vals = set.values();
    let Some(&top) = vals.last() else {
        let mut c = ProgressionCertificate::empty(ProgressionKind::GapGrid);
        c.zero_based = zero_based;
        return Ok(c);
    };
    let has = |v: Option<u64>| v.is_some_and(|v| v <= top && set.has_value(v));
    let mut best: Option<(u64, Vec<u64>)> = None;
    let better = |k: u64, best: &Option<(u64, Vec<u64>)>| best.as_ref().is_none_or(|(bk, _)| k > *bk);

    if zero_based {
        // params [b, q, a, d, n]; key order q, a, d, b
        if let Some(&x) = vals.iter().find(|&&v| v > 0) {
            best = Some((1, vec![x, 2, 1, 1, 0]));
        }
        for q in 2..=top {
            for a in 1..=top / q {
                for d in 1..=top / q - a.min(top / q) {
                    for b in 1..=top / (q * (a + d)) {
                        let cell = |i: u64, j: u64| {
                            q.checked_pow(j as u32)
                                .and_then(|p| p.checked_mul(b))
                                .and_then(|x| i.checked_mul(d).and_then(|id| id.checked_add(a)).and_then(|y| x.checked_mul(y)))
                        };
                        let mut n = 0;
                        while (0..=n + 1).all(|t| has(cell(n + 1, t)) && has(cell(t, n + 1))) && has(cell(0, 0)) {
                            n += 1;
                        }
                        if n >= 1 && better(n + 1, &best) {
                            best = Some((n + 1, vec![b, q, a, d, n]));
                        }
                    }
                }
            }
        }
        let mut c = ProgressionCertificate::empty(ProgressionKind::GapGrid);
        c.zero_based = true;
        if let Some((side, params)) = best {
            c.realized = zero_grid(params[0], params[1], params[2], params[3], params[4]).expect("grid verified in range");
            c.params = params;
            c.length = side as usize;
        }
        return Ok(c);
    }

    // params [r, a, b, k]; key order r, a, b
    for r in 2..=top {
        for a in 0..top {
            if r * (a + 1) > top {
                break;
            }
            for b in 1..=top {
                if r * (a + b) > top {
                    break;
                }
                if !set.has_value(r * (a + b)) {
                    continue;
                }
                let mut k = 1;
                loop {
                    let m = k + 1;
                    let cell = |i: u64, j: u64| {
                        r.checked_pow(i as u32)
                            .and_then(|ri| j.checked_mul(b).and_then(|jb| jb.checked_add(a)).and_then(|y| ri.checked_mul(y)))
                    };
                    if !(1..=m).all(|t| has(cell(m, t)) && has(cell(t, m))) {
                        break;
                    }
                    k = m;
                }
                if better(k, &best) {
                    best = Some((k, vec![r, a, b, k]));
                }
            }
        }
    }
    Ok(match best {
        None => ProgressionCertificate::empty(ProgressionKind::GapGrid),
        Some((k, params)) => ProgressionCertificate {
            kind: ProgressionKind::GapGrid,
            realized: one_grid(params[0], params[1], params[2], params[3]).expect("grid verified in range"),
            params,
            degrees: None,
            zero_based: false,
            length: k as usize,
        },
    })
}

fn poly_eval(coeffs: &[u64], degrees: &[u32], x: u64) -> Option<u64> {
    coeffs.iter().zip(degrees).try_fold(0u64, |acc, (&c, &e)| {
        acc.checked_add(c.checked_mul(x.checked_pow(e)?)?)
    })
}

/// Validates `D ⊆ {0..d}` with `max(D) >= 1` and returns it sorted.
pub fn check_degrees(degrees: &[u32], d: u32) -> Result<Vec<u32>, RichError> {
    let mut ds = degrees.to_vec();
    ds.sort_unstable();
    ds.dedup();
    let max = *ds.last().ok_or(RichError::EmptyDegrees)?;
    if max > d || max == 0 {
        return Err(RichError::InconsistentDegree { max, degree: d });
    }
    Ok(ds)
}

/// Longest `{P(1), ..., P(l)} ⊆ A` over `(S, D)`-polynomials
/// `P(x) = Σ_{i∈D} a_i x^i` with `a_i ∈ S` and some `a_i ≠ 0` for `i >= 1`.
/// Ties go to the lexicographically least coefficient vector.
pub fn longest_poly_progression(
    set: &GroundSet,
    d: u32,
    coeffs: &GroundSet,
    degrees: &[u32],
) -> Result<ProgressionCertificate, RichError> {
    numeric(set)?;
    numeric(coeffs)?;
    let ds = check_degrees(degrees, d)?;
    let mut best = ProgressionCertificate::empty(ProgressionKind::Polynomial);
    best.degrees = Some(ds.clone());
    let Some(top) = set.values().last().copied() else {
        return Ok(best);
    };
    // P(1) = Σ a_i bounds every coefficient
    let pool: Vec<u64> = coeffs.values().into_iter().filter(|&c| c <= top).collect();
    let mut current = vec![0u64; ds.len()];
    let mut best_len = 0usize;
    fn walk(
        slot: usize,
        sum: u64,
        pool: &[u64],
        ds: &[u32],
        top: u64,
        current: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if slot == ds.len() {
            visit(current);
            return;
        }
        for &c in pool {
            if sum + c > top {
                break;
            }
            current[slot] = c;
            walk(slot + 1, sum + c, pool, ds, top, current, visit);
        }
    }
    let mut visit = |cs: &[u64]| {
        if !cs.iter().zip(&ds).any(|(&c, &e)| e >= 1 && c > 0) {
            return;
        }
        let mut l = 0usize;
        while let Some(v) = poly_eval(cs, &ds, l as u64 + 1) {
            if v > top || !set.has_value(v) {
                break;
            }
            l += 1;
        }
        if l > best_len {
            best_len = l;
            best.params = cs.to_vec();
        }
    };
    walk(0, 0, &pool, &ds, top, &mut current, &mut visit);
    if best_len > 0 {
        best.realized = (1..=best_len as u64)
            .map(|x| poly_eval(&best.params, &ds, x).expect("checked during search"))
            .collect();
        best.length = best_len;
    } else {
        best.params.clear();
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThickProbe {
    pub length: u64,
    /// Least `s` with `F·s ⊆ A`, `F` the first `length + 1` window elements.
    pub shift: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThickReport {
    pub thick: bool,
    pub probes: Vec<ThickProbe>,
}

/// Thickness at window scale: for each probe length `L`, a shift `s` with
/// `F·s ⊆ A` where `F` is the first `L + 1` window elements (`[0..L]` in the
/// additive window, so an interval of `L + 1` members).
pub fn is_thick_window(set: &GroundSet, probe_lengths: &[u64]) -> Result<ThickReport, RichError> {
    let w = numeric(set)?;
    let mut probes = Vec::new();
    for &length in probe_lengths {
        if length > w.bound() {
            return Err(RichError::ProbeTooLong { length, bound: w.bound() });
        }
        let f: Vec<Element> = w.elements().take(length as usize + 1).collect();
        let shift = w
            .elements()
            .find(|&s| f.iter().all(|&x| w.op_unchecked(x, s).is_some_and(|y| set.has(y))))
            .map(|s| w.value(s).expect("numeric window"));
        probes.push(ThickProbe { length, shift });
    }
    Ok(ThickReport {
        thick: probes.iter().all(|p| p.shift.is_some()),
        probes,
    })
}

#[derive(Clone, Debug)]
pub struct MaximalityProbe {
    pub size: usize,
    pub verdict: EmbedVerdict,
}

/// For each probe size `p`, decides `F <= A` for `F` the first `p` window
/// elements. A `No` shows `A` is not maximal at window scale.
pub fn maximality_probe(
    set: &GroundSet,
    family: &FamilySpec,
    probe_sizes: &[usize],
) -> Result<Vec<MaximalityProbe>, EmbedError> {
    probe_sizes
        .iter()
        .map(|&size| {
            let f: Vec<Element> = family.window().elements().take(size).collect();
            Ok(MaximalityProbe {
                size,
                verdict: embed_finite(&f, set, family)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyndeticProbe {
    pub span: u64,
    /// First interval `[lo, hi]` (values) meeting the gap condition.
    pub interval: Option<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyndeticReport {
    pub piecewise_syndetic: bool,
    pub gap: u64,
    pub probes: Vec<SyndeticProbe>,
}

/// Window reading of piecewise syndeticity: for each span `L` there is an
/// interval of `L` consecutive integers in which every `g` consecutive
/// integers meet `A`. In the multiplicative window the interval is
/// `[s, L·s]` with `s ∈ A`, consecutive members at ratio at most `g`, and
/// `L·s <= g·max`.
pub fn is_piecewise_syndetic_window(set: &GroundSet, gap: u64, spans: &[u64]) -> Result<SyndeticReport, RichError> {
    let w = numeric(set)?;
    if gap == 0 {
        return Err(RichError::ZeroGap);
    }
    let probes = spans
        .iter()
        .map(|&span| SyndeticProbe {
            span,
            interval: match w.kind() {
                WindowKind::AdditiveNaturals => additive_syndetic(set, w.bound(), gap, span),
                _ => multiplicative_syndetic(set, w.bound(), gap, span),
            },
        })
        .collect::<Vec<_>>();
    Ok(SyndeticReport {
        piecewise_syndetic: probes.iter().all(|p| p.interval.is_some()),
        gap,
        probes,
    })
}

fn additive_syndetic(set: &GroundSet, bound: u64, gap: u64, span: u64) -> Option<(u64, u64)> {
    if span == 0 || span > bound + 1 {
        return None;
    }
    let g = gap.min(span);
    // empty_end[p]: no member in [p-g+1, p]
    let mut run = 0u64;
    let mut last_empty_end: Option<u64> = None;
    for p in 0..=bound {
        run = if set.has_value(p) { 0 } else { run + 1 };
        if run >= g {
            last_empty_end = Some(p);
        }
        if p + 1 >= span {
            let lo = p + 1 - span;
            // an empty g-block fully inside [lo, p] ends at some q >= lo + g - 1
            if last_empty_end.is_none_or(|q| q < lo + g - 1) {
                return Some((lo, p));
            }
        }
    }
    None
}

fn multiplicative_syndetic(set: &GroundSet, bound: u64, gap: u64, span: u64) -> Option<(u64, u64)> {
    let vals = set.values();
    for (i, &s) in vals.iter().enumerate() {
        let hi = s.checked_mul(span)?;
        if hi > bound {
            return None;
        }
        let mut prev = s;
        let mut ok = true;
        for &v in vals[i + 1..].iter().take_while(|&&v| v <= hi) {
            if v > prev.saturating_mul(gap) {
                ok = false;
                break;
            }
            prev = v;
        }
        if ok && hi <= prev.saturating_mul(gap) {
            return Some((s, hi));
        }
    }
    None
}

/// Properties of subsets evaluated at window scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetProperty {
    /// Contains an AP (stride >= 1) of the given length.
    ContainsAp(usize),
    ContainsElement(u64),
    GapGrid { side: usize, zero_based: bool },
    /// Contains `F·s` for the first `len + 1` window elements and some `s`.
    Thick(u64),
}

impl SetProperty {
    pub fn holds(&self, set: &GroundSet) -> Result<bool, RichError> {
        Ok(match *self {
            SetProperty::ContainsAp(len) => longest_ap(set)?.length >= len,
            SetProperty::ContainsElement(v) => set.has_value(v),
            SetProperty::GapGrid { side, zero_based } => longest_gap_grid(set, zero_based)?.length >= side,
            SetProperty::Thick(len) => match is_thick_window(set, &[len]) {
                Ok(r) => r.thick,
                Err(RichError::ProbeTooLong { .. }) => false,
                Err(e) => return Err(e),
            },
        })
    }
}

impl fmt::Display for SetProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetProperty::ContainsAp(l) => write!(f, "contains-ap:{l}"),
            SetProperty::ContainsElement(v) => write!(f, "contains:{v}"),
            SetProperty::GapGrid { side, zero_based: false } => write!(f, "gap-grid:{side}"),
            SetProperty::GapGrid { side, zero_based: true } => write!(f, "gap-grid0:{side}"),
            SetProperty::Thick(l) => write!(f, "thick:{l}"),
        }
    }
}

impl FromStr for SetProperty {
    type Err = RichError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RichError::UnknownProperty(s.to_string());
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: u64 = arg.parse().map_err(|_| bad())?;
        Ok(match name {
            "contains-ap" => SetProperty::ContainsAp(n as usize),
            "contains" => SetProperty::ContainsElement(n),
            "gap-grid" => SetProperty::GapGrid { side: n as usize, zero_based: false },
            "gap-grid0" => SetProperty::GapGrid { side: n as usize, zero_based: true },
            "thick" => SetProperty::Thick(n),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::carrier::Predicate;

    fn add(bound: u64) -> Arc<Window> {
        Arc::new(Window::additive(bound).unwrap())
    }

    fn set(w: &Arc<Window>, vals: &[u64]) -> GroundSet {
        GroundSet::from_values(w.clone(), vals.iter().copied()).unwrap()
    }

    fn pred(w: &Arc<Window>, p: &str) -> GroundSet {
        GroundSet::predicate(w.clone(), p.parse().unwrap()).unwrap()
    }

    #[test]
    fn thick_examples() {
        let w = add(100);
        let r = is_thick_window(&pred(&w, "interval:50:80"), &[20]).unwrap();
        assert_eq!(r.probes[0].shift, Some(50));
        assert!(!is_thick_window(&pred(&w, "evens"), &[1]).unwrap().thick);
        let r = is_thick_window(&GroundSet::full(w.clone()), &[0, 10, 100]).unwrap();
        assert!(r.probes.iter().all(|p| p.shift == Some(0)));
        assert_eq!(
            is_thick_window(&GroundSet::full(w), &[101]),
            Err(RichError::ProbeTooLong { length: 101, bound: 100 })
        );
    }

    #[test]
    fn ap_examples() {
        let w = add(30);
        let c = longest_ap(&set(&w, &[1, 3, 5, 7])).unwrap();
        assert_eq!((c.length, c.params.clone()), (4, vec![1, 2]));
        assert_eq!(longest_ap(&set(&w, &[1])).unwrap().length, 1);
        let c = longest_ap(&pred(&w, "multiples:3")).unwrap();
        assert_eq!((c.length, c.params.clone()), (11, vec![0, 3]));
        assert!(c.verify(&pred(&w, "multiples:3")));
        assert_eq!(longest_ap(&GroundSet::empty(w)).unwrap().length, 0);
    }

    #[test]
    fn gap_grid_examples() {
        let w = add(50);
        let a = set(&w, &[4, 6, 8, 12]);
        let c = longest_gap_grid(&a, false).unwrap();
        assert_eq!((c.length, c.params.clone()), (2, vec![2, 1, 1, 2]));
        assert!(c.verify(&a));
        let c = longest_gap_grid(&set(&w, &[5]), false).unwrap();
        assert_eq!((c.length, c.params.clone()), (1, vec![5, 0, 1, 1]));
        assert_eq!(longest_gap_grid(&GroundSet::empty(w.clone()), false).unwrap().length, 0);

        let g = set(&w, &[2, 3, 4, 6]);
        let c = longest_gap_grid(&g, true).unwrap();
        assert_eq!(c.length, 2);
        assert_eq!(c.params, vec![1, 2, 2, 1, 1]);
        assert!(c.verify(&g));
    }

    #[test]
    fn poly_examples() {
        let w = add(100);
        let n = GroundSet::full(w.clone());
        let c = longest_poly_progression(&pred(&w, "squares"), 2, &n, &[2]).unwrap();
        assert_eq!((c.length, c.params.clone()), (10, vec![1]));
        assert!(c.verify(&pred(&w, "squares")));

        let evens = pred(&w, "intersect(evens,atleast:2)");
        let c = longest_poly_progression(&evens, 1, &n, &[1]).unwrap();
        assert_eq!((c.length, c.params.clone()), (50, vec![2]));

        let c = longest_poly_progression(&set(&w, &[0, 50]), 2, &set(&w, &[7]), &[0, 2]).unwrap();
        assert_eq!(c.length, 0);

        assert_eq!(
            longest_poly_progression(&evens, 2, &n, &[]),
            Err(RichError::EmptyDegrees)
        );
        assert!(matches!(
            longest_poly_progression(&evens, 1, &n, &[2]),
            Err(RichError::InconsistentDegree { .. })
        ));
    }

    #[test]
    fn maximality_examples() {
        let w = add(60);
        let tr = FamilySpec::right_translations(w.clone());
        let full = GroundSet::full(w.clone());
        let res = maximality_probe(&full, &tr, &[1, 5, 10]).unwrap();
        assert!(res.iter().all(|p| p.verdict.witness().unwrap().params == vec![0]));
        let evens = pred(&w, "evens");
        assert!(maximality_probe(&evens, &tr, &[2]).unwrap()[0].verdict.is_no());
        let aff = FamilySpec::affine(w.clone()).unwrap();
        let res = maximality_probe(&evens, &aff, &[5]).unwrap();
        assert_eq!(res[0].verdict.witness().unwrap().params, vec![0, 2]);
    }

    #[test]
    fn syndetic_examples() {
        let w = add(200);
        let r = is_piecewise_syndetic_window(&pred(&w, "evens"), 2, &[5, 20, 100]).unwrap();
        assert!(r.piecewise_syndetic);
        let r = is_piecewise_syndetic_window(&pred(&w, "squares"), 2, &[20]).unwrap();
        assert!(!r.piecewise_syndetic);
        let r = is_piecewise_syndetic_window(&GroundSet::full(w.clone()), 1, &[201]).unwrap();
        assert_eq!(r.probes[0].interval, Some((0, 200)));
        assert_eq!(
            is_piecewise_syndetic_window(&GroundSet::full(w), 0, &[3]),
            Err(RichError::ZeroGap)
        );

        let m = Arc::new(Window::multiplicative(1000).unwrap());
        let pow2 = GroundSet::from_values(m.clone(), (0..10).map(|i| 1u64 << i)).unwrap();
        assert!(is_piecewise_syndetic_window(&pow2, 2, &[64]).unwrap().piecewise_syndetic);
        assert!(!is_piecewise_syndetic_window(&pow2, 1, &[64]).unwrap().piecewise_syndetic);
    }

    #[test]
    fn property_strings_round_trip() {
        for p in ["contains-ap:4", "contains:0", "gap-grid:2", "gap-grid0:3", "thick:5"] {
            assert_eq!(p.parse::<SetProperty>().unwrap().to_string(), p);
        }
        assert!("ap:4".parse::<SetProperty>().is_err());
    }

    #[test]
    fn words_are_rejected() {
        let w = Arc::new(Window::words(&['a'], 3).unwrap());
        assert!(matches!(
            longest_ap(&GroundSet::full(w)),
            Err(RichError::NotNumeric(WindowKind::FreeWords))
        ));
        let _ = Predicate::All;
    }

    fn brute_ap(vals: &[u64]) -> usize {
        let set: std::collections::BTreeSet<u64> = vals.iter().copied().collect();
        let mut best = usize::from(!set.is_empty());
        for &a in &set {
            for &b in &set {
                if b > a {
                    let s = b - a;
                    let mut len = 2;
                    while set.contains(&(a + len as u64 * s)) {
                        len += 1;
                    }
                    best = best.max(len);
                }
            }
        }
        best
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ap_matches_brute_force(vals in proptest::collection::btree_set(0u64..=120, 0..40)) {
            let w = add(120);
            let s = set(&w, &vals.iter().copied().collect::<Vec<_>>());
            let c = longest_ap(&s).unwrap();
            prop_assert_eq!(c.length, brute_ap(&s.values()));
            prop_assert!(c.verify(&s));
        }

        #[test]
        fn ap_agrees_with_affine_embedding(vals in proptest::collection::btree_set(0u64..=30, 1..12), k in 1usize..5) {
            let w = add(30);
            let s = set(&w, &vals.iter().copied().collect::<Vec<_>>());
            let aff = FamilySpec::affine(w.clone()).unwrap();
            let prefix: Vec<Element> = (0..=k).map(Element).collect();
            let v = embed_finite(&prefix, &s, &aff).unwrap();
            prop_assert_eq!(longest_ap(&s).unwrap().length > k, v.is_yes());
        }

        #[test]
        fn thick_implies_translation_maximal(lo in 0u64..40, len in 0u64..20, p in 1usize..8) {
            let w = add(80);
            let s = pred(&w, &format!("interval:{lo}:{}", lo + len));
            let lengths: Vec<u64> = (0..p as u64).collect();
            let thick = is_thick_window(&s, &lengths).unwrap().thick;
            if thick {
                let tr = FamilySpec::right_translations(w.clone());
                let sizes: Vec<usize> = (1..=p).collect();
                prop_assert!(maximality_probe(&s, &tr, &sizes).unwrap().iter().all(|m| m.verdict.is_yes()));
            }
        }
    }
}
