use std::fmt;

use super::CarrierError;

/// Largest number of elements a window may hold.
pub const MAX_WINDOW_ELEMENTS: usize = 1 << 24;

/// Largest user-supplied operation table (side length).
pub const MAX_TABLE_SIZE: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WindowKind {
    AdditiveNaturals,
    MultiplicativeNaturals,
    FreeWords,
    Table,
}

impl WindowKind {
    pub fn name(self) -> &'static str {
        match self {
            WindowKind::AdditiveNaturals => "additive-naturals",
            WindowKind::MultiplicativeNaturals => "multiplicative-naturals",
            WindowKind::FreeWords => "free-words",
            WindowKind::Table => "table",
        }
    }

    pub fn is_numeric(self) -> bool {
        matches!(
            self,
            WindowKind::AdditiveNaturals | WindowKind::MultiplicativeNaturals
        )
    }
}

impl std::str::FromStr for WindowKind {
    type Err = CarrierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "additive-naturals" => Ok(WindowKind::AdditiveNaturals),
            "multiplicative-naturals" => Ok(WindowKind::MultiplicativeNaturals),
            "free-words" => Ok(WindowKind::FreeWords),
            "table" => Ok(WindowKind::Table),
            other => Err(CarrierError::InvalidKind(other.to_string())),
        }
    }
}

impl fmt::Display for WindowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of a window, identified by its position in the window's
/// canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A closed finite truncation of a semigroup.
///
/// Numeric windows order their elements by value: `[0..=W]` under `+`, and
/// `[1..=W]` under `*`. Word windows hold every non-empty word of length at
/// most `W` over the alphabet, ordered by length and then lexicographically.
/// Table windows are `0..m` with a user-supplied associative table.
///
/// Products that leave the window are reported as `None` (overflow).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    kind: WindowKind,
    bound: u64,
    alphabet: Vec<char>,
    table: Vec<Vec<usize>>,
    size: usize,
    // word_offsets[l] = number of words of length < l
    word_offsets: Vec<usize>,
}

impl Window {
    /// `make_window`: numeric and word windows. Tables go through
    /// [`Window::from_table`].
    pub fn new(kind: WindowKind, bound: u64, alphabet: &[char]) -> Result<Self, CarrierError> {
        if kind == WindowKind::Table {
            return Err(CarrierError::InvalidKind(
                "table windows are built from an operation table".into(),
            ));
        }
        if bound < 1 {
            return Err(CarrierError::BoundTooSmall { kind, bound });
        }
        match kind {
            WindowKind::FreeWords => {
                if alphabet.is_empty() {
                    return Err(CarrierError::EmptyAlphabet);
                }
                for (i, c) in alphabet.iter().enumerate() {
                    if alphabet[..i].contains(c) {
                        return Err(CarrierError::DuplicateLetter(*c));
                    }
                }
                let k = alphabet.len();
                let mut offsets = vec![0usize, 0usize];
                let mut layer = 1usize;
                for _ in 1..=bound {
                    layer = layer
                        .checked_mul(k)
                        .ok_or(CarrierError::BoundTooLarge { bound })?;
                    let next = offsets
                        .last()
                        .copied()
                        .unwrap_or(0)
                        .checked_add(layer)
                        .ok_or(CarrierError::BoundTooLarge { bound })?;
                    if next > MAX_WINDOW_ELEMENTS {
                        return Err(CarrierError::BoundTooLarge { bound });
                    }
                    offsets.push(next);
                }
                let size = *offsets.last().unwrap();
                Ok(Window {
                    kind,
                    bound,
                    alphabet: alphabet.to_vec(),
                    table: Vec::new(),
                    size,
                    word_offsets: offsets,
                })
            }
            _ => {
                if !alphabet.is_empty() {
                    return Err(CarrierError::UnexpectedAlphabet(kind));
                }
                let size = match kind {
                    WindowKind::AdditiveNaturals => bound.checked_add(1),
                    _ => Some(bound),
                };
                let size = size
                    .and_then(|s| usize::try_from(s).ok())
                    .filter(|&s| s <= MAX_WINDOW_ELEMENTS)
                    .ok_or(CarrierError::BoundTooLarge { bound })?;
                Ok(Window {
                    kind,
                    bound,
                    alphabet: Vec::new(),
                    table: Vec::new(),
                    size,
                    word_offsets: Vec::new(),
                })
            }
        }
    }

    pub fn additive(bound: u64) -> Result<Self, CarrierError> {
        Self::new(WindowKind::AdditiveNaturals, bound, &[])
    }

    pub fn multiplicative(bound: u64) -> Result<Self, CarrierError> {
        Self::new(WindowKind::MultiplicativeNaturals, bound, &[])
    }

    pub fn words(alphabet: &[char], max_len: u64) -> Result<Self, CarrierError> {
        Self::new(WindowKind::FreeWords, max_len, alphabet)
    }

    /// A window over `0..rows.len()` whose product is `rows[x][y]`.
    /// The table must be square, closed and associative.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, CarrierError> {
        let m = rows.len();
        if m == 0 {
            return Err(CarrierError::MalformedTable("empty table".into()));
        }
        if m > MAX_TABLE_SIZE {
            return Err(CarrierError::BoundTooLarge { bound: m as u64 });
        }
        for (x, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(CarrierError::MalformedTable(format!(
                    "row {x} has {} entries, expected {m}",
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= m) {
                return Err(CarrierError::MalformedTable(format!(
                    "row {x} contains {v}, outside 0..{m}"
                )));
            }
        }
        for x in 0..m {
            for y in 0..m {
                let xy = rows[x][y];
                for z in 0..m {
                    if rows[xy][z] != rows[x][rows[y][z]] {
                        return Err(CarrierError::NotAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(Window {
            kind: WindowKind::Table,
            bound: (m - 1) as u64,
            alphabet: Vec::new(),
            table: rows,
            size: m,
            word_offsets: Vec::new(),
        })
    }

    pub fn kind(&self) -> WindowKind {
        self.kind
    }

    /// The inclusive cap: largest integer for numeric windows, longest word
    /// length for word windows, largest index for tables.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn table(&self) -> Option<&[Vec<usize>]> {
        (self.kind == WindowKind::Table).then_some(self.table.as_slice())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, e: Element) -> bool {
        e.0 < self.size
    }

    pub fn check(&self, e: Element) -> Result<Element, CarrierError> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(CarrierError::ElementOutOfWindow(format!(
                "encoding {} (window holds {} elements)",
                e.0, self.size
            )))
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size).map(Element)
    }

    /// `op_apply`: `Ok(None)` is the overflow outcome.
    pub fn op(&self, x: Element, y: Element) -> Result<Option<Element>, CarrierError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.op_unchecked(x, y))
    }

    /// Product of two in-window elements; callers guarantee membership.
    pub fn op_unchecked(&self, x: Element, y: Element) -> Option<Element> {
        match self.kind {
            WindowKind::AdditiveNaturals => {
                let s = x.0 + y.0;
                (s < self.size).then_some(Element(s))
            }
            WindowKind::MultiplicativeNaturals => {
                let p = (x.0 as u64 + 1).checked_mul(y.0 as u64 + 1)?;
                (p <= self.bound).then(|| Element(p as usize - 1))
            }
            WindowKind::FreeWords => {
                let (lx, ix) = self.word_split(x);
                let (ly, iy) = self.word_split(y);
                let len = lx + ly;
                if len as u64 > self.bound {
                    return None;
                }
                let k = self.alphabet.len();
                let idx = ix * k.pow(ly as u32) + iy;
                Some(Element(self.word_offsets[len] + idx))
            }
            WindowKind::Table => Some(Element(self.table[x.0][y.0])),
        }
    }

    /// The identity element, when the window carries one.
    pub fn identity(&self) -> Option<Element> {
        match self.kind {
            WindowKind::AdditiveNaturals | WindowKind::MultiplicativeNaturals => Some(Element(0)),
            WindowKind::FreeWords => None,
            WindowKind::Table => (0..self.size)
                .find(|&e| (0..self.size).all(|x| self.table[e][x] == x && self.table[x][e] == x))
                .map(Element),
        }
    }

    /// Integer value of an element (numeric and table windows).
    pub fn value(&self, e: Element) -> Option<u64> {
        match self.kind {
            WindowKind::AdditiveNaturals | WindowKind::Table => Some(e.0 as u64),
            WindowKind::MultiplicativeNaturals => Some(e.0 as u64 + 1),
            WindowKind::FreeWords => None,
        }
    }

    /// Element with the given integer value, if it lies in the window.
    pub fn from_value(&self, v: u64) -> Option<Element> {
        let e = match self.kind {
            WindowKind::AdditiveNaturals | WindowKind::Table => usize::try_from(v).ok()?,
            WindowKind::MultiplicativeNaturals => usize::try_from(v.checked_sub(1)?).ok()?,
            WindowKind::FreeWords => return None,
        };
        (e < self.size).then_some(Element(e))
    }

    /// Length of a word element.
    pub fn word_len(&self, e: Element) -> Option<usize> {
        (self.kind == WindowKind::FreeWords).then(|| self.word_split(e).0)
    }

    fn word_split(&self, e: Element) -> (usize, usize) {
        // word_offsets is ascending; find the length layer containing e
        let len = self.word_offsets.partition_point(|&off| off <= e.0) - 1;
        (len, e.0 - self.word_offsets[len])
    }

    pub fn word(&self, e: Element) -> Option<String> {
        if self.kind != WindowKind::FreeWords || !self.contains(e) {
            return None;
        }
        let (len, mut idx) = self.word_split(e);
        let k = self.alphabet.len();
        let mut letters = vec![' '; len];
        for slot in letters.iter_mut().rev() {
            *slot = self.alphabet[idx % k];
            idx /= k;
        }
        Some(letters.into_iter().collect())
    }

    pub fn display(&self, e: Element) -> String {
        match self.kind {
            WindowKind::FreeWords => self.word(e).unwrap_or_else(|| format!("#{}", e.0)),
            _ => self.value(e).map(|v| v.to_string()).unwrap_or_default(),
        }
    }

    /// Inverse of [`Window::display`].
    pub fn parse(&self, s: &str) -> Result<Element, CarrierError> {
        match self.kind {
            WindowKind::FreeWords => {
                let len = s.chars().count();
                if len == 0 || len as u64 > self.bound {
                    return Err(CarrierError::ElementOutOfWindow(format!("word {s:?}")));
                }
                let k = self.alphabet.len();
                let mut idx = 0usize;
                for c in s.chars() {
                    let digit = self
                        .alphabet
                        .iter()
                        .position(|&a| a == c)
                        .ok_or_else(|| CarrierError::Parse(format!("letter {c:?} not in alphabet")))?;
                    idx = idx * k + digit;
                }
                Ok(Element(self.word_offsets[len] + idx))
            }
            _ => {
                let v: u64 = s
                    .trim()
                    .parse()
                    .map_err(|_| CarrierError::Parse(format!("{s:?} is not a natural number")))?;
                self.from_value(v)
                    .ok_or_else(|| CarrierError::ElementOutOfWindow(format!("value {v}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_window_is_zero_to_bound() {
        let w = Window::additive(100).unwrap();
        assert_eq!(w.size(), 101);
        assert_eq!(w.display(Element(0)), "0");
        assert_eq!(w.display(Element(100)), "100");
        assert_eq!(w.identity(), Some(Element(0)));
    }

    #[test]
    fn word_window_counts_nonempty_words() {
        let w = Window::words(&['a', 'b'], 3).unwrap();
        assert_eq!(w.size(), 2 + 4 + 8);
        let shown: Vec<String> = w.elements().map(|e| w.display(e)).collect();
        assert_eq!(&shown[..6], &["a", "b", "aa", "ab", "ba", "bb"]);
        assert_eq!(shown.last().unwrap(), "bbb");
        assert_eq!(w.identity(), None);
    }

    #[test]
    fn multiplicative_bound_zero_rejected() {
        assert!(matches!(
            Window::multiplicative(0),
            Err(CarrierError::BoundTooSmall { .. })
        ));
        let w = Window::multiplicative(1).unwrap();
        assert_eq!(w.size(), 1);
        assert_eq!(w.display(Element(0)), "1");
    }

    #[test]
    fn alphabet_rules() {
        assert!(matches!(
            Window::words(&[], 2),
            Err(CarrierError::EmptyAlphabet)
        ));
        assert!(matches!(
            Window::new(WindowKind::AdditiveNaturals, 5, &['a']),
            Err(CarrierError::UnexpectedAlphabet(_))
        ));
        assert!(matches!(
            Window::words(&['a', 'a'], 2),
            Err(CarrierError::DuplicateLetter('a'))
        ));
        assert!(matches!(
            Window::words(&['a', 'b'], 40),
            Err(CarrierError::BoundTooLarge { .. })
        ));
    }

    #[test]
    fn op_examples() {
        let w = Window::additive(100).unwrap();
        assert_eq!(w.op(Element(2), Element(3)).unwrap(), Some(Element(5)));
        let w10 = Window::additive(10).unwrap();
        assert_eq!(w10.op(Element(7), Element(8)).unwrap(), None);
        assert!(w10.op(Element(11), Element(0)).is_err());

        let words = Window::words(&['a', 'b'], 4).unwrap();
        let ab = words.parse("ab").unwrap();
        let a = words.parse("a").unwrap();
        let aba = words.op(ab, a).unwrap().unwrap();
        assert_eq!(words.display(aba), "aba");
        let abab = words.op(ab, ab).unwrap().unwrap();
        assert_eq!(words.op(abab, a).unwrap(), None);

        let m = Window::multiplicative(20).unwrap();
        let three = m.from_value(3).unwrap();
        let four = m.from_value(4).unwrap();
        assert_eq!(m.value(m.op(three, four).unwrap().unwrap()), Some(12));
        let five = m.from_value(5).unwrap();
        assert_eq!(m.op(four, five).unwrap().map(|e| m.value(e)), Some(Some(20)));
        assert_eq!(m.op(three, m.from_value(7).unwrap()).unwrap(), None);
    }

    #[test]
    fn table_rules() {
        let max_table: Vec<Vec<usize>> =
            (0..11).map(|x| (0..11).map(|y| x.max(y)).collect()).collect();
        let w = Window::from_table(max_table).unwrap();
        assert_eq!(w.size(), 11);
        assert_eq!(w.identity(), Some(Element(0)));
        // x - y mod 3 is not associative
        let sub: Vec<Vec<usize>> = (0..3)
            .map(|x| (0..3).map(|y| (x + 3 - y) % 3).collect())
            .collect();
        assert!(matches!(
            Window::from_table(sub),
            Err(CarrierError::NotAssociative { .. })
        ));
        assert!(Window::from_table(vec![vec![0, 1]]).is_err());
        assert!(Window::from_table(vec![vec![2, 0], vec![0, 0]]).is_err());
    }

    #[test]
    fn display_round_trips() {
        for w in [
            Window::additive(30).unwrap(),
            Window::multiplicative(30).unwrap(),
            Window::words(&['x', 'y', 'z'], 3).unwrap(),
        ] {
            for e in w.elements() {
                assert_eq!(w.parse(&w.display(e)).unwrap(), e);
            }
        }
    }

    fn associativity_holds(w: &Window) {
        for x in w.elements() {
            for y in w.elements() {
                let Some(xy) = w.op_unchecked(x, y) else { continue };
                for z in w.elements() {
                    let Some(yz) = w.op_unchecked(y, z) else { continue };
                    assert_eq!(w.op_unchecked(xy, z), w.op_unchecked(x, yz));
                }
            }
        }
    }

    #[test]
    fn small_windows_are_associative() {
        associativity_holds(&Window::additive(63).unwrap());
        associativity_holds(&Window::multiplicative(64).unwrap());
        associativity_holds(&Window::words(&['a', 'b'], 5).unwrap());
    }

    #[test]
    fn numeric_overflow_is_monotone() {
        for w in [Window::additive(40).unwrap(), Window::multiplicative(40).unwrap()] {
            for x in w.elements() {
                for y in w.elements() {
                    if w.op_unchecked(x, y).is_none() {
                        for x2 in x.0..w.size() {
                            for y2 in y.0..w.size() {
                                assert!(w.op_unchecked(Element(x2), Element(y2)).is_none());
                            }
                        }
                    }
                }
            }
        }
    }
}
