//! Function families given by generating pairs `(G, R)`: a map `G` from an
//! `n`-tuple of elements and a `k`-tuple of parameters to an element, and a
//! parameter region `R`. Each parameter tuple in `R` picks one member of the
//! family.

mod json;
mod term;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::carrier::{element_json, CarrierError, Element, GroundSet, Predicate, Window, WindowKind};

pub use json::{EnumerationSpec, FamilyJson, PairSpec};
pub use term::Term;

/// A parameter tuple. Translation families store element encodings; every
/// other family stores natural numbers.
pub type Params = Vec<u64>;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("family {family} needs a different carrier (got {kind})")]
    WrongCarrier { family: &'static str, kind: WindowKind },
    #[error("the exponent set D is empty")]
    EmptyDegrees,
    #[error("exponent {max} exceeds the declared degree {degree}")]
    InconsistentDegree { max: u32, degree: u32 },
    #[error("the coefficient set is empty")]
    EmptyCoefficients,
    #[error("letter {0:?} is not in the alphabet")]
    LetterNotInAlphabet(char),
    #[error("malformed term {0}")]
    MalformedTerm(String),
    #[error("arity mismatch: {what} expects {expected}, got {got}")]
    ArityMismatch { what: &'static str, expected: usize, got: usize },
    #[error("parameters {0:?} lie outside the family's region")]
    ParamsOutsideRegion(Params),
    #[error("unknown builtin family {0:?}")]
    UnknownBuiltin(String),
    #[error("bad family arguments: {0}")]
    BadArgs(String),
    #[error(transparent)]
    Carrier(#[from] CarrierError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumMode {
    /// Derive candidates from the target set; provably covers every
    /// parameter admitting a witness.
    CompleteAnchored,
    /// Scan every parameter tuple with entries up to the bound.
    BoundedScan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamEnumeration {
    pub mode: EnumMode,
    /// Scan cap; `None` means `max(window bound, 64)`.
    pub bound: Option<u64>,
}

impl Default for ParamEnumeration {
    fn default() -> Self {
        ParamEnumeration {
            mode: EnumMode::CompleteAnchored,
            bound: None,
        }
    }
}

/// Per-parameter membership predicates for term families. A single
/// predicate applies to every parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region(pub Vec<Predicate>);

impl Region {
    pub fn all() -> Self {
        Region(vec![Predicate::All])
    }

    fn admits(&self, params: &[u64]) -> bool {
        match self.0.as_slice() {
            [single] => params.iter().all(|&p| single.eval(p)),
            preds => preds.iter().zip(params).all(|(p, &v)| p.eval(v)),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Generator {
    /// `G(s, r) = s * r`
    RightTranslation,
    /// `G(s, r) = r * s`
    LeftTranslation,
    /// `G(x, (a, b)) = a + b x` with `b >= min_slope`
    Affine { min_slope: u64 },
    /// `G((n, m), (r, a, b)) = r^n (a + m b)` with `r > 1`, `b > 0`
    Geoarithmetic,
    /// `G(x, coeffs) = sum over i in D of a_i x^i`, coefficients from a set
    Polynomial {
        degrees: Vec<u32>,
        coeffs: GroundSet,
        coeff_values: Vec<u64>,
    },
    /// `G(w, n) = w a^n`
    WordSuffix { letter: char, letter_elem: Element },
    /// A catalog term with a per-parameter region.
    Term { term: Term, region: Region },
}

/// A function family over a window.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    name: String,
    window: Arc<Window>,
    arity: usize,
    param_arity: usize,
    generator: Generator,
    enumeration: ParamEnumeration,
}

/// Candidate parameter tuples for one `(F, B)` query.
pub struct ParamStream<'a> {
    /// Whether the stream provably contains every parameter tuple whose
    /// image of `F` lies in `B`.
    pub complete: bool,
    iter: Box<dyn Iterator<Item = Params> + 'a>,
}

impl Iterator for ParamStream<'_> {
    type Item = Params;

    fn next(&mut self) -> Option<Params> {
        self.iter.next()
    }
}

fn require_additive(window: &Window, family: &'static str) -> Result<(), FamilyError> {
    if window.kind() == WindowKind::AdditiveNaturals {
        Ok(())
    } else {
        Err(FamilyError::WrongCarrier {
            family,
            kind: window.kind(),
        })
    }
}

impl FamilySpec {
    fn build(name: &str, window: Arc<Window>, arity: usize, param_arity: usize, generator: Generator) -> Self {
        FamilySpec {
            name: name.to_string(),
            window,
            arity,
            param_arity,
            generator,
            enumeration: ParamEnumeration::default(),
        }
    }

    pub fn right_translations(window: Arc<Window>) -> Self {
        Self::build("translations-right", window, 1, 1, Generator::RightTranslation)
    }

    pub fn left_translations(window: Arc<Window>) -> Self {
        Self::build("translations-left", window, 1, 1, Generator::LeftTranslation)
    }

    /// `x -> a + b x` with slope `b >= 1`.
    pub fn affine(window: Arc<Window>) -> Result<Self, FamilyError> {
        Self::affine_with_min_slope(window, 1)
    }

    pub fn affine_with_min_slope(window: Arc<Window>, min_slope: u64) -> Result<Self, FamilyError> {
        require_additive(&window, "affine")?;
        let min_slope = min_slope.max(1);
        let name = if min_slope == 1 {
            "affine".to_string()
        } else {
            format!("affine(slope>={min_slope})")
        };
        Ok(Self::build(&name, window, 1, 2, Generator::Affine { min_slope }))
    }

    pub fn geoarithmetic(window: Arc<Window>) -> Result<Self, FamilyError> {
        require_additive(&window, "geoarithmetic")?;
        let mut family = Self::build("geoarithmetic", window, 2, 3, Generator::Geoarithmetic);
        family.enumeration.mode = EnumMode::BoundedScan;
        Ok(family)
    }

    /// `(S, D)`-polynomials of degree at most `degree`: coefficients for the
    /// exponents in `degrees` drawn from `coeffs`, all other coefficients 0.
    pub fn polynomial(
        window: Arc<Window>,
        coeffs: GroundSet,
        degrees: &[u32],
        degree: u32,
    ) -> Result<Self, FamilyError> {
        require_additive(&window, "polynomial")?;
        let mut degrees = degrees.to_vec();
        degrees.sort_unstable();
        degrees.dedup();
        let Some(&max) = degrees.last() else {
            return Err(FamilyError::EmptyDegrees);
        };
        if max > degree {
            return Err(FamilyError::InconsistentDegree { max, degree });
        }
        let coeff_values = coeffs.values();
        if coeff_values.is_empty() {
            return Err(FamilyError::EmptyCoefficients);
        }
        let k = degrees.len();
        Ok(Self::build(
            "polynomial",
            window,
            1,
            k,
            Generator::Polynomial {
                degrees,
                coeffs,
                coeff_values,
            },
        ))
    }

    pub fn word_suffix(window: Arc<Window>, letter: char) -> Result<Self, FamilyError> {
        if window.kind() != WindowKind::FreeWords {
            return Err(FamilyError::WrongCarrier {
                family: "word-suffix",
                kind: window.kind(),
            });
        }
        let letter_elem = window
            .parse(&letter.to_string())
            .map_err(|_| FamilyError::LetterNotInAlphabet(letter))?;
        Ok(Self::build(
            "word-suffix",
            window,
            1,
            1,
            Generator::WordSuffix { letter, letter_elem },
        ))
    }

    /// A family generated by a catalog term over `n` slots and `k`
    /// parameters. Numeric carriers only; values outside the window count as
    /// overflow.
    pub fn from_pair(
        window: Arc<Window>,
        n: usize,
        k: usize,
        term: &str,
        region: Region,
        enumeration: ParamEnumeration,
    ) -> Result<Self, FamilyError> {
        if !window.kind().is_numeric() {
            return Err(FamilyError::WrongCarrier {
                family: "pair",
                kind: window.kind(),
            });
        }
        let term: Term = term.parse()?;
        let (slots, params) = term.arities();
        if slots > n {
            return Err(FamilyError::ArityMismatch {
                what: "term slots",
                expected: n,
                got: slots,
            });
        }
        if params > k {
            return Err(FamilyError::ArityMismatch {
                what: "term parameters",
                expected: k,
                got: params,
            });
        }
        if region.0.is_empty() || (region.0.len() != 1 && region.0.len() != k) {
            return Err(FamilyError::ArityMismatch {
                what: "region predicates",
                expected: k,
                got: region.0.len(),
            });
        }
        let mut family = Self::build("pair", window, n, k, Generator::Term { term, region });
        family.enumeration = ParamEnumeration {
            mode: EnumMode::BoundedScan,
            bound: enumeration.bound,
        };
        Ok(family)
    }

    pub fn with_enumeration(mut self, enumeration: ParamEnumeration) -> Self {
        self.enumeration = enumeration;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn window(&self) -> &Arc<Window> {
        &self.window
    }

    /// `n`: length of the element tuples `G` consumes.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `k`: length of the parameter tuples.
    pub fn param_arity(&self) -> usize {
        self.param_arity
    }

    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    pub fn enumeration(&self) -> ParamEnumeration {
        self.enumeration
    }

    pub fn scan_bound(&self) -> u64 {
        self.enumeration
            .bound
            .unwrap_or_else(|| self.window.bound().max(64))
    }

    pub fn is_translation(&self) -> bool {
        matches!(
            self.generator,
            Generator::RightTranslation | Generator::LeftTranslation
        )
    }

    /// Membership of a parameter tuple in `R`.
    pub fn in_region(&self, params: &[u64]) -> bool {
        if params.len() != self.param_arity {
            return false;
        }
        match &self.generator {
            Generator::RightTranslation | Generator::LeftTranslation => {
                (params[0] as usize) < self.window.size()
            }
            Generator::Affine { min_slope } => params[1] >= *min_slope,
            Generator::Geoarithmetic => params[0] > 1 && params[2] > 0,
            Generator::Polynomial { degrees, coeffs, .. } => {
                let members = params.iter().all(|&c| coeffs.has_value(c));
                // the all-constant polynomial is excluded once D reaches past 0
                let nondegenerate = degrees.last() == Some(&0)
                    || degrees.iter().zip(params).any(|(&d, &c)| d > 0 && c > 0);
                members && nondegenerate
            }
            Generator::WordSuffix { .. } => true,
            Generator::Term { region, .. } => region.admits(params),
        }
    }

    /// `apply`: evaluate the member selected by `params` on `tuple`.
    /// `Ok(None)` is overflow.
    pub fn apply(&self, params: &[u64], tuple: &[Element]) -> Result<Option<Element>, FamilyError> {
        if params.len() != self.param_arity {
            return Err(FamilyError::ArityMismatch {
                what: "parameters",
                expected: self.param_arity,
                got: params.len(),
            });
        }
        if tuple.len() != self.arity {
            return Err(FamilyError::ArityMismatch {
                what: "tuple",
                expected: self.arity,
                got: tuple.len(),
            });
        }
        for &e in tuple {
            self.window.check(e)?;
        }
        if !self.in_region(params) {
            return Err(FamilyError::ParamsOutsideRegion(params.to_vec()));
        }
        Ok(self.eval(params, tuple))
    }

    /// Unchecked evaluation for in-region parameters and in-window tuples.
    pub fn eval(&self, params: &[u64], tuple: &[Element]) -> Option<Element> {
        let w = &self.window;
        match &self.generator {
            Generator::RightTranslation => w.op_unchecked(tuple[0], Element(params[0] as usize)),
            Generator::LeftTranslation => w.op_unchecked(Element(params[0] as usize), tuple[0]),
            Generator::Affine { .. } => {
                let x = w.value(tuple[0])?;
                let v = params[1].checked_mul(x)?.checked_add(params[0])?;
                w.from_value(v)
            }
            Generator::Geoarithmetic => {
                let n = w.value(tuple[0])?;
                let m = w.value(tuple[1])?;
                let (r, a, b) = (params[0], params[1], params[2]);
                let scale = r.checked_pow(u32::try_from(n).ok()?)?;
                let v = scale.checked_mul(b.checked_mul(m)?.checked_add(a)?)?;
                w.from_value(v)
            }
            Generator::Polynomial { degrees, .. } => {
                let x = w.value(tuple[0])?;
                let mut total = 0u64;
                for (&d, &c) in degrees.iter().zip(params) {
                    if c == 0 {
                        continue;
                    }
                    let term = x.checked_pow(d)?.checked_mul(c)?;
                    total = total.checked_add(term)?;
                }
                w.from_value(total)
            }
            Generator::WordSuffix { letter_elem, .. } => {
                let mut word = tuple[0];
                for _ in 0..params[0] {
                    word = w.op_unchecked(word, *letter_elem)?;
                }
                Some(word)
            }
            Generator::Term { term, .. } => {
                let slots: Vec<u64> = tuple.iter().map(|&e| w.value(e)).collect::<Option<_>>()?;
                w.from_value(term.eval(&slots, params)?)
            }
        }
    }

    /// `f(F^n)` for the member selected by `params`, sorted and deduplicated;
    /// `None` if any tuple overflows. `f_set` must be in-window.
    pub fn image(&self, params: &[u64], f_set: &[Element]) -> Option<Vec<Element>> {
        let mut out = Vec::new();
        let ok = for_each_tuple(f_set, self.arity, |tuple| match self.eval(params, tuple) {
            Some(e) => {
                out.push(e);
                true
            }
            None => false,
        });
        if !ok {
            return None;
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    /// Whether `f(F^n)` lies inside `target`, stopping at the first miss.
    pub fn maps_into(&self, params: &[u64], f_set: &[Element], target: &GroundSet) -> bool {
        for_each_tuple(f_set, self.arity, |tuple| {
            self.eval(params, tuple).is_some_and(|e| target.has(e))
        })
    }

    /// Every in-region parameter tuple with entries up to `bound`, in
    /// lexicographic order.
    pub fn scan_params(&self, bound: u64) -> impl Iterator<Item = Params> + '_ {
        let k = self.param_arity;
        let ranges: Vec<Vec<u64>> = match &self.generator {
            Generator::RightTranslation | Generator::LeftTranslation => {
                vec![(0..self.window.size() as u64).take_while(|&r| r <= bound).collect()]
            }
            Generator::Polynomial { coeff_values, .. } => {
                let vals: Vec<u64> = coeff_values.iter().copied().filter(|&c| c <= bound).collect();
                vec![vals; k]
            }
            _ => vec![(0..=bound).collect(); k],
        };
        Odometer::new(ranges).filter(move |p| self.in_region(p))
    }

    /// `enumerate_params` for the query `(F, B)`.
    pub fn enumerate_params<'a>(&'a self, f_set: &[Element], target: &'a GroundSet) -> ParamStream<'a> {
        let bound = self.scan_bound();
        let anchored = self.enumeration.mode == EnumMode::CompleteAnchored;
        let Some(&first) = f_set.first() else {
            return ParamStream {
                complete: true,
                iter: Box::new(std::iter::empty()),
            };
        };
        let w = &self.window;
        match &self.generator {
            Generator::RightTranslation | Generator::LeftTranslation => {
                let right = matches!(self.generator, Generator::RightTranslation);
                let candidates = if anchored {
                    translation_candidates(w, first, target, right)
                } else {
                    w.elements().map(|e| e.0 as u64).collect()
                };
                self.finish(candidates.into_iter().map(|r| vec![r]).collect(), true)
            }
            Generator::Affine { min_slope } if anchored => {
                let mut xs: Vec<u64> = f_set.iter().filter_map(|&e| w.value(e)).collect();
                xs.sort_unstable();
                xs.dedup();
                let betas = target.values();
                let mut out = Vec::new();
                if xs.len() >= 2 {
                    let (x1, x2) = (xs[0], xs[1]);
                    for (i, &b1) in betas.iter().enumerate() {
                        for &b2 in &betas[i + 1..] {
                            let rise = b2 - b1;
                            if rise % (x2 - x1) != 0 {
                                continue;
                            }
                            let slope = rise / (x2 - x1);
                            if slope < *min_slope {
                                continue;
                            }
                            if let Some(a) = slope.checked_mul(x1).and_then(|s| b1.checked_sub(s)) {
                                out.push(vec![a, slope]);
                            }
                        }
                    }
                } else if xs[0] > 0 {
                    let x = xs[0];
                    for &b in &betas {
                        for slope in *min_slope..=b / x {
                            out.push(vec![b - slope * x, slope]);
                        }
                    }
                } else {
                    // F = {0}: the image is {a} whatever the slope
                    for &b in &betas {
                        for slope in *min_slope..=bound.max(*min_slope) {
                            out.push(vec![b, slope]);
                        }
                    }
                }
                self.finish(out, true)
            }
            Generator::Polynomial { coeffs, .. } => {
                let complete = coeffs.is_explicit() || coeffs.window().bound() >= w.bound();
                let has_positive = f_set.iter().any(|&e| w.value(e).is_some_and(|v| v > 0));
                let cap = if has_positive { w.bound() } else { u64::MAX };
                let scan_cap = if complete { u64::MAX } else { bound };
                // every coefficient is at most P(x) <= W once some x >= 1
                let iter = self
                    .scan_params(scan_cap)
                    .filter(move |p| p.iter().try_fold(0u64, |acc, &c| acc.checked_add(c)).is_some_and(|s| s <= cap));
                ParamStream {
                    complete,
                    iter: Box::new(iter),
                }
            }
            Generator::WordSuffix { letter_elem, .. } if anchored => {
                let mut out = Vec::new();
                let mut word = Some(first);
                let mut n = 0u64;
                while let Some(cur) = word {
                    if target.has(cur) {
                        out.push(vec![n]);
                    }
                    word = w.op_unchecked(cur, *letter_elem);
                    n += 1;
                }
                self.finish(out, true)
            }
            Generator::WordSuffix { .. } => {
                // exponents past the word-length cap always overflow
                let complete = bound >= w.bound();
                ParamStream {
                    complete,
                    iter: Box::new(self.scan_params(bound)),
                }
            }
            _ => ParamStream {
                complete: false,
                iter: Box::new(self.scan_params(bound)),
            },
        }
    }

    fn finish<'a>(&'a self, mut candidates: Vec<Params>, complete: bool) -> ParamStream<'a> {
        candidates.sort_unstable();
        candidates.dedup();
        ParamStream {
            complete,
            iter: Box::new(candidates.into_iter().filter(move |p| self.in_region(p))),
        }
    }

    /// JSON rendering of a parameter tuple.
    pub fn params_json(&self, params: &[u64]) -> Vec<Value> {
        if self.is_translation() {
            params
                .iter()
                .map(|&r| element_json(&self.window, Element(r as usize)))
                .collect()
        } else {
            params.iter().map(|&p| Value::from(p)).collect()
        }
    }
}

fn translation_candidates(w: &Window, x: Element, target: &GroundSet, right: bool) -> Vec<u64> {
    match w.kind() {
        WindowKind::AdditiveNaturals => target
            .iter()
            .filter(|b| b.0 >= x.0)
            .map(|b| (b.0 - x.0) as u64)
            .collect(),
        WindowKind::MultiplicativeNaturals => {
            let xv = x.0 as u64 + 1;
            target
                .iter()
                .filter_map(|b| {
                    let bv = b.0 as u64 + 1;
                    (bv % xv == 0).then(|| bv / xv - 1)
                })
                .collect()
        }
        WindowKind::FreeWords => {
            let xw = w.word(x).unwrap_or_default();
            target
                .iter()
                .filter_map(|b| {
                    let bw = w.word(b)?;
                    if bw.len() <= xw.len() {
                        return None;
                    }
                    let rest = if right {
                        bw.strip_prefix(xw.as_str())?
                    } else {
                        bw.strip_suffix(xw.as_str())?
                    };
                    w.parse(rest).ok().map(|r| r.0 as u64)
                })
                .collect()
        }
        WindowKind::Table => w
            .elements()
            .filter(|&r| {
                let p = if right { w.op_unchecked(x, r) } else { w.op_unchecked(r, x) };
                p.is_some_and(|p| target.has(p))
            })
            .map(|r| r.0 as u64)
            .collect(),
    }
}

/// Calls `visit` on every `n`-tuple over `items` in lexicographic order,
/// stopping early when it returns `false`. Returns whether every call
/// returned `true`.
pub fn for_each_tuple<T: Copy>(items: &[T], n: usize, mut visit: impl FnMut(&[T]) -> bool) -> bool {
    if n == 0 {
        return visit(&[]);
    }
    if items.is_empty() {
        return true;
    }
    let mut idx = vec![0usize; n];
    let mut tuple: Vec<T> = vec![items[0]; n];
    loop {
        for (slot, &i) in tuple.iter_mut().zip(&idx) {
            *slot = items[i];
        }
        if !visit(&tuple) {
            return false;
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < items.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Lexicographic product of value lists.
pub(crate) struct Odometer {
    ranges: Vec<Vec<u64>>,
    idx: Vec<usize>,
    done: bool,
}

impl Odometer {
    pub(crate) fn new(ranges: Vec<Vec<u64>>) -> Self {
        let done = ranges.iter().any(Vec::is_empty);
        let idx = vec![0; ranges.len()];
        Odometer { ranges, idx, done }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let item: Vec<u64> = self.idx.iter().zip(&self.ranges).map(|(&i, r)| r[i]).collect();
        let mut pos = self.idx.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.ranges[pos].len() {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests;
