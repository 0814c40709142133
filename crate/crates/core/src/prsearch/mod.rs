//! Partition regularity at desk scale: backtracking search for colorings of
//! `[1..N]` with no monochromatic pattern instance, Ramsey thresholds, the
//! strong-PR probe on explicit sets, and homogeneous equations.

mod poly;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::carrier::{GroundSet, WindowKind};
use crate::families::Odometer;

pub use poly::{HomogeneityReport, Polynomial, VARIABLES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrError {
    #[error("N must be at least 1")]
    ZeroN,
    #[error("at least one color is required")]
    ZeroColors,
    #[error("pattern has more than {limit} instances")]
    InstanceOverflow { limit: usize },
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("polynomial has no variables")]
    ZeroVariables,
    #[error("malformed polynomial {0}")]
    MalformedPolynomial(String),
    #[error("polynomial is not homogeneous (total degrees {degrees:?})")]
    NonHomogeneous { degrees: Vec<u32> },
    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),
    #[error("set must be explicit and numeric")]
    BadSet,
}

/// Patterns whose monochromatic instances are searched for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `{a, a+s, ..., a+(l-1)s}`, `s >= 1`.
    Ap(usize),
    /// `{x, y, x+y}`, `x <= y`, `x = y` allowed.
    Schur,
    /// `{b q^j (a + i d) : 0 <= i, j <= n}` with `q >= 2`, `a, b, d >= 1`.
    /// `strict` also puts `q` and `d` in the cell.
    GapGrid { n: u64, strict: bool },
    /// `{P(1), ..., P(len)}` for non-constant `P(x) = Σ_{i∈D} a_i x^i`, `a_i >= 0`.
    PolyProgression { len: usize, degrees: Vec<u32> },
    /// Value sets of roots of `P` in `[1..N]^v`.
    Equation { poly: Polynomial, distinct: bool },
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Ap(l) => write!(f, "ap:{l}"),
            Pattern::Schur => write!(f, "schur"),
            Pattern::GapGrid { n, strict: false } => write!(f, "gap:{n}"),
            Pattern::GapGrid { n, strict: true } => write!(f, "gap-strict:{n}"),
            Pattern::PolyProgression { len, degrees } => {
                let ds: Vec<String> = degrees.iter().map(u32::to_string).collect();
                write!(f, "poly:{len}:{}", ds.join(","))
            }
            Pattern::Equation { poly, distinct: false } => write!(f, "eq:{poly}"),
            Pattern::Equation { poly, distinct: true } => write!(f, "eq-distinct:{poly}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = PrError;

    /// `ap:<l>`, `schur`, `gap:<n>`, `gap-strict:<n>`, `poly:<l>:<D>`,
    /// `eq:<poly>`, `eq-distinct:<poly>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PrError::UnknownPattern(s.to_string());
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        Ok(match name.trim() {
            "ap" => match num(rest)? {
                0 => return Err(bad()),
                l => Pattern::Ap(l as usize),
            },
            "schur" if rest.is_empty() => Pattern::Schur,
            "gap" | "gap-strict" => match num(rest)? {
                0 => return Err(bad()),
                n => Pattern::GapGrid { n, strict: name.trim() == "gap-strict" },
            },
            "poly" => {
                let (len, ds) = rest.split_once(':').ok_or_else(bad)?;
                let degrees = ds.split(',').map(|d| num(d).map(|d| d as u32)).collect::<Result<Vec<_>, _>>()?;
                let len = num(len)? as usize;
                if len == 0 || !degrees.iter().any(|&d| d >= 1) {
                    return Err(bad());
                }
                Pattern::PolyProgression { len, degrees }
            }
            "eq" | "eq-distinct" => Pattern::Equation {
                poly: rest.parse()?,
                distinct: name.trim() == "eq-distinct",
            },
            _ => return Err(bad()),
        })
    }
}

/// Instance sets inside `[1..n]`, each sorted and deduplicated, the list
/// sorted and deduplicated.
pub fn instances(pattern: &Pattern, n: u64, limit: usize) -> Result<Vec<Vec<u64>>, PrError> {
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut push = |mut inst: Vec<u64>| -> Result<(), PrError> {
        inst.sort_unstable();
        inst.dedup();
        out.push(inst);
        if out.len() > limit {
            return Err(PrError::InstanceOverflow { limit });
        }
        Ok(())
    };
    match pattern {
        Pattern::Ap(l) => {
            let l = *l as u64;
            if l == 1 {
                for a in 1..=n {
                    push(vec![a])?;
                }
            } else {
                for s in 1..=n {
                    for a in 1..=n {
                        if a + (l - 1) * s > n {
                            break;
                        }
                        push((0..l).map(|i| a + i * s).collect())?;
                    }
                }
            }
        }
        Pattern::Schur => {
            for x in 1..=n {
                for y in x..=n - x.min(n) {
                    push(vec![x, y, x + y])?;
                }
            }
        }
        Pattern::GapGrid { n: side, strict } => {
            for q in 2..=n {
                for d in 1..=n {
                    for a in 1..=n {
                        if q * (a + d) > n {
                            break;
                        }
                        for b in 1..=n {
                            match grid(b, q, a, d, *side) {
                                Some(g) if g.iter().all(|&v| v <= n) => {
                                    let mut inst = g;
                                    if *strict {
                                        inst.extend([q, d]);
                                    }
                                    push(inst)?;
                                }
                                _ => break,
                            }
                        }
                    }
                }
            }
        }
        Pattern::PolyProgression { len, degrees } => {
            let ds = degrees.clone();
            let len = *len as u64;
            // every coefficient is at most P(len) <= n
            let mut od = Odometer::new(vec![(0..=n).collect(); ds.len()]);
            while let Some(cs) = od.next() {
                if !cs.iter().zip(&ds).any(|(&c, &e)| c > 0 && e >= 1) {
                    continue;
                }
                match progression(&cs, &ds, len) {
                    Some(p) if p.iter().all(|&v| (1..=n).contains(&v)) => push(p)?,
                    _ => {}
                }
            }
        }
        Pattern::Equation { poly, distinct } => {
            for_each_root(poly, &(1..=n).collect::<Vec<_>>(), *distinct, |root| push(root.to_vec()))?;
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn grid(b: u64, q: u64, a: u64, d: u64, n: u64) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    for j in 0..=n {
        let bq = b.checked_mul(q.checked_pow(u32::try_from(j).ok()?)?)?;
        for i in 0..=n {
            out.push(bq.checked_mul(a.checked_add(i.checked_mul(d)?)?)?);
        }
    }
    Some(out)
}

fn progression(coeffs: &[u64], degrees: &[u32], len: u64) -> Option<Vec<u64>> {
    (1..=len)
        .map(|x| {
            coeffs.iter().zip(degrees).try_fold(0u64, |acc, (&c, &e)| {
                acc.checked_add(c.checked_mul(x.checked_pow(e)?)?)
            })
        })
        .collect()
}

/// Calls `visit` on every root of `poly` with entries from `pool`.
fn for_each_root(
    poly: &Polynomial,
    pool: &[u64],
    distinct: bool,
    mut visit: impl FnMut(&[u64]) -> Result<(), PrError>,
) -> Result<(), PrError> {
    let v = poly.arity();
    if pool.is_empty() {
        return Ok(());
    }
    let total = (pool.len() as f64).powi(v as i32);
    if total > 2e8 {
        return Err(PrError::BudgetExceeded(format!("{} candidate tuples", total as u64)));
    }
    let mut idx = vec![0usize; v];
    let mut tuple: Vec<i128> = vec![i128::from(pool[0]); v];
    let mut values: Vec<u64> = vec![pool[0]; v];
    loop {
        if (!distinct || all_distinct(&values)) && poly.eval(&tuple) == Some(0) {
            visit(&values)?;
        }
        let mut k = v;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pool.len() {
                break;
            }
            idx[k] = 0;
        }
        for i in k..v {
            values[i] = pool[idx[i]];
            tuple[i] = i128::from(values[i]);
        }
    }
}

fn all_distinct(values: &[u64]) -> bool {
    values.iter().enumerate().all(|(i, v)| !values[..i].contains(v))
}

/// All roots of `P` with every entry in `A ∩ [1..N]`, in lexicographic order.
pub fn ps_solutions_experiment(poly: &Polynomial, set: &GroundSet, n: u64) -> Result<Vec<Vec<u64>>, PrError> {
    if !matches!(
        set.window().kind(),
        WindowKind::AdditiveNaturals | WindowKind::MultiplicativeNaturals
    ) {
        return Err(PrError::BadSet);
    }
    let pool: Vec<u64> = set.values().into_iter().filter(|v| (1..=n).contains(v)).collect();
    let mut out = Vec::new();
    for_each_root(poly, &pool, false, |root| {
        out.push(root.to_vec());
        Ok(())
    })?;
    Ok(out)
}

/// Independent matcher: the first monochromatic instance of `pattern`
/// among the colored values, scanning the pattern's own parameters.
/// `color(v)` is `None` for uncolored values.
pub fn find_monochromatic(pattern: &Pattern, n: u64, color: impl Fn(u64) -> Option<u8>) -> Option<Vec<u64>> {
    let mono = |vals: &[u64]| -> bool {
        let Some(c) = vals.first().and_then(|&v| color(v)) else { return false };
        vals.iter().all(|&v| color(v) == Some(c))
    };
    match pattern {
        Pattern::Ap(l) => {
            let l = *l as u64;
            for a in 1..=n {
                for s in 1..=n {
                    let vals: Vec<u64> = (0..l).map(|i| a + i * s).collect();
                    if vals.last().is_some_and(|&v| v > n) {
                        break;
                    }
                    if mono(&vals) {
                        return Some(vals);
                    }
                    if l == 1 {
                        break;
                    }
                }
            }
        }
        Pattern::Schur => {
            for z in 2..=n {
                for x in 1..=z / 2 {
                    if mono(&[x, z - x, z]) {
                        return Some(vec![x, z - x, z]);
                    }
                }
            }
        }
        Pattern::GapGrid { n: side, strict } => {
            for b in 1..=n {
                for q in 2..=n {
                    for a in 1..=n {
                        for d in 1..=n {
                            let Some(mut g) = grid(b, q, a, d, *side).filter(|g| g.iter().all(|&v| v <= n)) else {
                                break;
                            };
                            if *strict {
                                g.extend([q, d]);
                            }
                            if mono(&g) {
                                return Some(g);
                            }
                        }
                    }
                }
            }
        }
        Pattern::PolyProgression { len, degrees } => {
            let mut od = Odometer::new(vec![(0..=n).collect(); degrees.len()]);
            while let Some(cs) = od.next() {
                if !cs.iter().zip(degrees).any(|(&c, &e)| c > 0 && e >= 1) {
                    continue;
                }
                if let Some(p) = progression(&cs, degrees, *len as u64) {
                    if p.iter().all(|&v| (1..=n).contains(&v)) && mono(&p) {
                        return Some(p);
                    }
                }
            }
        }
        Pattern::Equation { poly, distinct } => {
            let v = poly.arity();
            let mut od = Odometer::new(vec![(1..=n).collect(); v]);
            while let Some(t) = od.next() {
                if (!distinct || all_distinct(&t)) && poly.is_root(&t) && mono(&t) {
                    return Some(t);
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub max_instances: usize,
    /// Backtracking nodes before giving up.
    pub max_nodes: u64,
    pub order: SearchOrder,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_instances: 5_000_000,
            max_nodes: 50_000_000,
            order: SearchOrder::Ascending,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringOutcome {
    /// Color of `1, ..., N` (or of the set's members in ascending order).
    Avoiding(Vec<u8>),
    Forced { nodes: u64, exhaustive: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub pattern: Pattern,
    pub n: u64,
    pub colors: u8,
    pub outcome: ColoringOutcome,
}

impl ColoringCertificate {
    pub fn is_forced(&self) -> bool {
        matches!(self.outcome, ColoringOutcome::Forced { .. })
    }

    pub fn coloring(&self) -> Option<&[u8]> {
        match &self.outcome {
            ColoringOutcome::Avoiding(c) => Some(c),
            _ => None,
        }
    }

    /// Re-scans an avoiding coloring with the independent matcher. Forced
    /// outcomes cannot be checked this way and return `true` only when
    /// marked exhaustive.
    pub fn verify(&self) -> bool {
        match &self.outcome {
            ColoringOutcome::Avoiding(c) => {
                c.len() as u64 == self.n
                    && c.iter().all(|&x| x < self.colors)
                    && find_monochromatic(&self.pattern, self.n, |v| c.get(v as usize - 1).copied()).is_none()
            }
            ColoringOutcome::Forced { exhaustive, .. } => *exhaustive,
        }
    }
}

/// Relabels colors by first occurrence.
pub fn canonicalize(coloring: &[u8]) -> Vec<u8> {
    let mut map: Vec<Option<u8>> = vec![None; 256];
    let mut next = 0u8;
    coloring
        .iter()
        .map(|&c| {
            *map[c as usize].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

enum Search {
    Found(Vec<u8>),
    Exhausted(u64),
}

/// Backtracking over positions `0..m` with instances given as position
/// lists. Colors are tried in ascending order with the first position in
/// search order fixed to color 0 and new colors opened one at a time.
fn backtrack(m: usize, instances: &[Vec<usize>], r: u8, limits: &SearchLimits) -> Result<Search, PrError> {
    let order: Vec<usize> = match limits.order {
        SearchOrder::Ascending => (0..m).collect(),
        SearchOrder::Descending => (0..m).rev().collect(),
    };
    let mut rank = vec![0usize; m];
    for (i, &p) in order.iter().enumerate() {
        rank[p] = i;
    }
    // instances checked when their last position (in search order) is colored
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (k, inst) in instances.iter().enumerate() {
        if let Some(&last) = inst.iter().max_by_key(|&&p| rank[p]) {
            closing[rank[last]].push(k);
        }
    }
    let mut colors = vec![u8::MAX; m];
    let mut next_try = vec![0u8; m];
    let mut used_before = vec![0u8; m + 1];
    let mut depth = 0usize;
    let mut nodes = 0u64;
    loop {
        if depth == m {
            return Ok(Search::Found(colors));
        }
        let pos = order[depth];
        let cap = used_before[depth].saturating_add(1).min(r);
        let mut placed = false;
        while next_try[depth] < cap {
            let c = next_try[depth];
            next_try[depth] += 1;
            nodes += 1;
            if nodes > limits.max_nodes {
                return Err(PrError::BudgetExceeded(format!("more than {} nodes", limits.max_nodes)));
            }
            colors[pos] = c;
            let clash = closing[depth]
                .iter()
                .any(|&k| instances[k].iter().all(|&p| colors[p] == c));
            if !clash {
                placed = true;
                break;
            }
        }
        if placed {
            used_before[depth + 1] = used_before[depth].max(colors[pos] + 1);
            depth += 1;
            if depth < m {
                next_try[depth] = 0;
            }
        } else {
            colors[pos] = u8::MAX;
            if depth == 0 {
                return Ok(Search::Exhausted(nodes));
            }
            depth -= 1;
        }
    }
}

fn positions(instances: &[Vec<u64>], index: impl Fn(u64) -> Option<usize>) -> Vec<Vec<usize>> {
    instances
        .iter()
        .filter_map(|inst| inst.iter().map(|&v| index(v)).collect::<Option<Vec<_>>>())
        .collect()
}

fn check_args(n: u64, r: u8) -> Result<(), PrError> {
    if n == 0 {
        return Err(PrError::ZeroN);
    }
    if r == 0 {
        return Err(PrError::ZeroColors);
    }
    Ok(())
}

/// Complete search for an `r`-coloring of `[1..N]` with no monochromatic
/// instance. The avoiding coloring returned is canonical (colors labeled by
/// first occurrence).
pub fn find_avoiding_coloring(n: u64, r: u8, pattern: &Pattern) -> Result<ColoringCertificate, PrError> {
    find_avoiding_coloring_with(n, r, pattern, &SearchLimits::default())
}

pub fn find_avoiding_coloring_with(
    n: u64,
    r: u8,
    pattern: &Pattern,
    limits: &SearchLimits,
) -> Result<ColoringCertificate, PrError> {
    check_args(n, r)?;
    let inst = instances(pattern, n, limits.max_instances)?;
    search_prefix(n, r, pattern, &inst, limits)
}

fn search_prefix(
    n: u64,
    r: u8,
    pattern: &Pattern,
    inst: &[Vec<u64>],
    limits: &SearchLimits,
) -> Result<ColoringCertificate, PrError> {
    let pos = positions(inst, |v| (v >= 1 && v <= n).then(|| v as usize - 1));
    let outcome = match backtrack(n as usize, &pos, r, limits)? {
        Search::Found(c) => ColoringOutcome::Avoiding(canonicalize(&c)),
        Search::Exhausted(nodes) => ColoringOutcome::Forced { nodes, exhaustive: true },
    };
    Ok(ColoringCertificate {
        pattern: pattern.clone(),
        n,
        colors: r,
        outcome,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    /// Least forced `N`, or `None` when every `N <= nmax` admits an avoiding coloring.
    pub threshold: Option<u64>,
    pub nmax: u64,
    /// Avoiding coloring of the largest `N` below the threshold.
    pub below: Option<ColoringCertificate>,
    /// Forced record at the threshold.
    pub at: Option<ColoringCertificate>,
}

/// Scans `N = 1, 2, ...` up to `nmax`; the instance list is built once for
/// `nmax` and filtered per `N`.
pub fn ramsey_threshold(pattern: &Pattern, r: u8, nmax: u64) -> Result<Threshold, PrError> {
    ramsey_threshold_with(pattern, r, nmax, &SearchLimits::default())
}

pub fn ramsey_threshold_with(pattern: &Pattern, r: u8, nmax: u64, limits: &SearchLimits) -> Result<Threshold, PrError> {
    check_args(nmax, r)?;
    let all = instances(pattern, nmax, limits.max_instances)?;
    let mut below = None;
    for n in 1..=nmax {
        let inst: Vec<Vec<u64>> = all.iter().filter(|i| i.last().is_some_and(|&v| v <= n)).cloned().collect();
        let cert = search_prefix(n, r, pattern, &inst, limits)?;
        if cert.is_forced() {
            return Ok(Threshold {
                threshold: Some(n),
                nmax,
                below,
                at: Some(cert),
            });
        }
        below = Some(cert);
    }
    Ok(Threshold {
        threshold: None,
        nmax,
        below,
        at: None,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProbeMode {
    /// Exhaustive when `r^|A|` fits the budget, else backtracking.
    #[default]
    Auto,
    Exhaustive,
    Backtrack,
}

/// Largest number of partitions enumerated one by one.
pub const EXHAUSTION_BUDGET: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongOutcome {
    /// Every `r`-partition of `A` has a monochromatic instance.
    Forced { examined: u64, exhaustive: bool },
    /// `(a, color)` for each member of `A`, ascending.
    Avoiding(Vec<(u64, u8)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongPrVerdict {
    pub pattern: Pattern,
    pub colors: u8,
    pub set: Vec<u64>,
    /// `exhaustive` or `backtrack`.
    pub mode: &'static str,
    pub outcome: StrongOutcome,
}

impl StrongPrVerdict {
    pub fn is_forced(&self) -> bool {
        matches!(self.outcome, StrongOutcome::Forced { .. })
    }

    pub fn verify(&self) -> bool {
        match &self.outcome {
            StrongOutcome::Forced { exhaustive, .. } => *exhaustive,
            StrongOutcome::Avoiding(part) => {
                let top = self.set.last().copied().unwrap_or(0);
                part.len() == self.set.len()
                    && part.iter().zip(&self.set).all(|((a, c), b)| a == b && *c < self.colors)
                    && find_monochromatic(&self.pattern, top, |v| {
                        part.binary_search_by_key(&v, |p| p.0).ok().map(|i| part[i].1)
                    })
                    .is_none()
            }
        }
    }
}

/// Is every `r`-partition of `A` forced to contain a monochromatic instance?
pub fn strong_pr_probe(set: &GroundSet, pattern: &Pattern, r: u8, mode: ProbeMode) -> Result<StrongPrVerdict, PrError> {
    if !set.is_explicit()
        || !matches!(
            set.window().kind(),
            WindowKind::AdditiveNaturals | WindowKind::MultiplicativeNaturals
        )
    {
        return Err(PrError::BadSet);
    }
    if r == 0 {
        return Err(PrError::ZeroColors);
    }
    let vals: Vec<u64> = set.values().into_iter().filter(|&v| v >= 1).collect();
    let top = vals.last().copied().unwrap_or(0);
    let all = if top == 0 {
        Vec::new()
    } else {
        instances(pattern, top, SearchLimits::default().max_instances)?
    };
    let inst = positions(&all, |v| vals.binary_search(&v).ok());
    let m = vals.len();
    let partitions = (r as f64).powi(m as i32);
    let exhaustive = match mode {
        ProbeMode::Exhaustive if partitions > EXHAUSTION_BUDGET as f64 => {
            return Err(PrError::BudgetExceeded(format!("{r}^{m} partitions")));
        }
        ProbeMode::Exhaustive => true,
        ProbeMode::Auto => partitions <= EXHAUSTION_BUDGET as f64,
        ProbeMode::Backtrack => false,
    };
    let found = if exhaustive {
        let mut examined = 0u64;
        let mut colors = vec![0u8; m];
        let mut found = None;
        loop {
            examined += 1;
            if !inst.iter().any(|i| i.iter().all(|&p| colors[p] == colors[i[0]])) {
                found = Some(canonicalize(&colors));
                break;
            }
            let mut k = m;
            let done = loop {
                if k == 0 {
                    break true;
                }
                k -= 1;
                colors[k] += 1;
                if colors[k] < r {
                    break false;
                }
                colors[k] = 0;
            };
            if done {
                break;
            }
        }
        found.ok_or(examined)
    } else {
        match backtrack(m, &inst, r, &SearchLimits::default())? {
            Search::Found(c) => Ok(canonicalize(&c)),
            Search::Exhausted(nodes) => Err(nodes),
        }
    };
    let outcome = match found {
        Ok(c) => StrongOutcome::Avoiding(vals.iter().copied().zip(c).collect()),
        Err(examined) => StrongOutcome::Forced { examined, exhaustive: true },
    };
    Ok(StrongPrVerdict {
        pattern: pattern.clone(),
        colors: r,
        set: vals,
        mode: if exhaustive { "exhaustive" } else { "backtrack" },
        outcome,
    })
}

/// Coloring search for the roots of `P` in `[1..N]`, after a symbolic
/// homogeneity check. With `strict`, non-homogeneous `P` is rejected.
pub fn homogeneous_pr_check(
    poly: &Polynomial,
    r: u8,
    n: u64,
    distinct: bool,
    strict: bool,
) -> Result<(ColoringCertificate, HomogeneityReport), PrError> {
    let report = poly.homogeneity();
    if strict && !report.homogeneous {
        return Err(PrError::NonHomogeneous { degrees: report.degrees });
    }
    let pattern = Pattern::Equation {
        poly: poly.clone(),
        distinct,
    };
    Ok((find_avoiding_coloring(n, r, &pattern)?, report))
}

#[cfg(test)]
mod tests;
