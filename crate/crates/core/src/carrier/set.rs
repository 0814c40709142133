use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::{CarrierError, Element, Predicate, Window, WindowKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Explicit,
    /// Predicate membership, evaluated once over the whole window at
    /// construction.
    Predicate(Predicate),
}

/// A subset of a window.
#[derive(Clone, Debug)]
pub struct GroundSet {
    window: Arc<Window>,
    members: FixedBitSet,
    membership: Membership,
    label: String,
}

impl GroundSet {
    pub fn explicit(
        window: Arc<Window>,
        elements: impl IntoIterator<Item = Element>,
    ) -> Result<Self, CarrierError> {
        let mut members = FixedBitSet::with_capacity(window.size());
        for e in elements {
            window.check(e)?;
            members.insert(e.0);
        }
        Ok(GroundSet {
            window,
            members,
            membership: Membership::Explicit,
            label: String::new(),
        })
    }

    /// Explicit set from integer values (numeric and table windows).
    pub fn from_values(
        window: Arc<Window>,
        values: impl IntoIterator<Item = u64>,
    ) -> Result<Self, CarrierError> {
        let elements = values
            .into_iter()
            .map(|v| {
                window
                    .from_value(v)
                    .ok_or_else(|| CarrierError::ElementOutOfWindow(format!("value {v}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::explicit(window, elements)
    }

    /// Explicit set from displayed elements (words, or decimal numerals).
    pub fn from_displays<S: AsRef<str>>(
        window: Arc<Window>,
        items: impl IntoIterator<Item = S>,
    ) -> Result<Self, CarrierError> {
        let elements = items
            .into_iter()
            .map(|s| window.parse(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::explicit(window, elements)
    }

    pub fn predicate(window: Arc<Window>, predicate: Predicate) -> Result<Self, CarrierError> {
        if window.kind() == WindowKind::FreeWords && !predicate.is_all() {
            return Err(CarrierError::PredicateNotSupported {
                predicate: predicate.to_string(),
                kind: window.kind(),
            });
        }
        let mut members = FixedBitSet::with_capacity(window.size());
        for e in window.elements() {
            let hit = match window.value(e) {
                Some(v) => predicate.eval(v),
                None => true,
            };
            members.set(e.0, hit);
        }
        Ok(GroundSet {
            window,
            members,
            membership: Membership::Predicate(predicate),
            label: String::new(),
        })
    }

    /// The whole window.
    pub fn full(window: Arc<Window>) -> Self {
        Self::predicate(window, Predicate::All).expect("`all` is defined on every carrier")
    }

    pub fn empty(window: Arc<Window>) -> Self {
        Self::explicit(window, []).expect("no elements to check")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn window(&self) -> &Arc<Window> {
        &self.window
    }

    pub fn membership(&self) -> &Membership {
        &self.membership
    }

    pub fn is_explicit(&self) -> bool {
        self.membership == Membership::Explicit
    }

    /// Membership query; elements outside the window are an error.
    pub fn contains(&self, e: Element) -> Result<bool, CarrierError> {
        self.window.check(e)?;
        Ok(self.members.contains(e.0))
    }

    /// Membership for an element already known to be in the window.
    pub fn has(&self, e: Element) -> bool {
        self.members.contains(e.0)
    }

    /// Membership by integer value; `false` when the value is not in the
    /// window (used by detectors that scan values directly).
    pub fn has_value(&self, v: u64) -> bool {
        self.window.from_value(v).is_some_and(|e| self.has(e))
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.ones().map(Element)
    }

    /// First `cap` members in canonical order.
    pub fn elements(&self, cap: usize) -> Vec<Element> {
        self.iter().take(cap).collect()
    }

    pub fn values(&self) -> Vec<u64> {
        self.iter().filter_map(|e| self.window.value(e)).collect()
    }

    pub fn is_subset(&self, other: &GroundSet) -> bool {
        self.members.is_subset(&other.members)
    }

    fn same_window(&self, other: &GroundSet) -> Result<(), CarrierError> {
        if self.window == other.window {
            Ok(())
        } else {
            Err(CarrierError::WindowMismatch)
        }
    }

    /// Union as an explicit set.
    pub fn union(&self, other: &GroundSet) -> Result<GroundSet, CarrierError> {
        self.same_window(other)?;
        let mut members = self.members.clone();
        members.union_with(&other.members);
        Ok(GroundSet {
            window: self.window.clone(),
            members,
            membership: Membership::Explicit,
            label: String::new(),
        })
    }

    pub fn intersection(&self, other: &GroundSet) -> Result<GroundSet, CarrierError> {
        self.same_window(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(GroundSet {
            window: self.window.clone(),
            members,
            membership: Membership::Explicit,
            label: String::new(),
        })
    }

    /// `{ x * r : x in self }`, dropping products that overflow.
    pub fn right_translate(&self, r: Element) -> Result<GroundSet, CarrierError> {
        self.window.check(r)?;
        let image: Vec<Element> = self
            .iter()
            .filter_map(|x| self.window.op_unchecked(x, r))
            .collect();
        GroundSet::explicit(self.window.clone(), image)
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.window == other.window && self.members == other.members
    }
}
