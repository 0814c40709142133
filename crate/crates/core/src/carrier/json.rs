use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{CarrierError, Element, GroundSet, Membership, Window, WindowKind};

/// `{"kind": "...", "bound": W, "alphabet": ["a","b"]}`; table windows give
/// `"table": [[...], ...]` instead of a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowSpec {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetBody {
    Explicit(Vec<Value>),
    Predicate(String),
}

/// `{"window": {...}, "set": {"explicit": [...]} | {"predicate": "..."}}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSpec {
    pub window: WindowSpec,
    pub set: SetBody,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl WindowSpec {
    pub fn build(&self) -> Result<Window, CarrierError> {
        let kind: WindowKind = self.kind.parse()?;
        if kind == WindowKind::Table {
            let rows = self
                .table
                .clone()
                .ok_or_else(|| CarrierError::MalformedTable("missing field `table`".into()))?;
            return Window::from_table(rows);
        }
        let bound = self.bound.ok_or(CarrierError::MissingBound)?;
        let mut letters = Vec::new();
        for s in self.alphabet.iter().flatten() {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => letters.push(c),
                _ => return Err(CarrierError::Parse(format!("alphabet entry {s:?} is not a single letter"))),
            }
        }
        Window::new(kind, bound, &letters)
    }

    pub fn describe(window: &Window) -> Self {
        let kind = window.kind();
        WindowSpec {
            kind: kind.name().to_string(),
            bound: (kind != WindowKind::Table).then(|| window.bound()),
            alphabet: (kind == WindowKind::FreeWords)
                .then(|| window.alphabet().iter().map(|c| c.to_string()).collect()),
            table: window.table().map(|t| t.to_vec()),
        }
    }
}

impl SetSpec {
    pub fn build(&self) -> Result<GroundSet, CarrierError> {
        let window = Arc::new(self.window.build()?);
        self.build_in(window)
    }

    /// Builds the set inside an existing window, which must match the spec's.
    pub fn build_in(&self, window: Arc<Window>) -> Result<GroundSet, CarrierError> {
        if self.window.build()? != *window {
            return Err(CarrierError::WindowMismatch);
        }
        let set = match &self.set {
            SetBody::Explicit(items) => {
                let elements = items
                    .iter()
                    .map(|v| parse_element(&window, v))
                    .collect::<Result<Vec<_>, _>>()?;
                GroundSet::explicit(window, elements)?
            }
            SetBody::Predicate(p) => GroundSet::predicate(window, p.parse()?)?,
        };
        Ok(match &self.label {
            Some(l) => set.with_label(l.clone()),
            None => set,
        })
    }

    pub fn describe(set: &GroundSet) -> Self {
        let window = set.window();
        let body = match set.membership() {
            Membership::Explicit => {
                SetBody::Explicit(set.iter().map(|e| element_json(window, e)).collect())
            }
            Membership::Predicate(p) => SetBody::Predicate(p.to_string()),
        };
        SetSpec {
            window: WindowSpec::describe(window),
            set: body,
            label: (!set.label().is_empty()).then(|| set.label().to_string()),
        }
    }
}

/// JSON rendering of an element: integers for numeric and table windows,
/// strings for words.
pub fn element_json(window: &Window, e: Element) -> Value {
    match window.value(e) {
        Some(v) => Value::from(v),
        None => Value::from(window.display(e)),
    }
}

pub fn parse_element(window: &Window, v: &Value) -> Result<Element, CarrierError> {
    match v {
        Value::Number(n) => {
            let n = n
                .as_u64()
                .ok_or_else(|| CarrierError::Parse(format!("{n} is not a natural number")))?;
            window
                .from_value(n)
                .ok_or_else(|| CarrierError::ElementOutOfWindow(format!("value {n}")))
        }
        Value::String(s) => window.parse(s),
        other => Err(CarrierError::Parse(format!("unexpected element {other}"))),
    }
}
