use serde::Serialize;

/// Outcome of a computation whose formula only holds on a stated domain.
///
/// `NotCovered` is an ordinary result, not an error: the inputs are valid
/// but no formula applies to them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Coverage<T> {
    Covered(T),
    NotCovered { reason: String },
}

impl<T> Coverage<T> {
    pub fn not_covered(reason: impl Into<String>) -> Self {
        Coverage::NotCovered { reason: reason.into() }
    }

    pub fn covered(self) -> Option<T> {
        match self {
            Coverage::Covered(v) => Some(v),
            Coverage::NotCovered { .. } => None,
        }
    }

    pub fn as_ref(&self) -> Coverage<&T> {
        match self {
            Coverage::Covered(v) => Coverage::Covered(v),
            Coverage::NotCovered { reason } => Coverage::NotCovered { reason: reason.clone() },
        }
    }

    pub fn is_covered(&self) -> bool {
        matches!(self, Coverage::Covered(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Coverage<U> {
        match self {
            Coverage::Covered(v) => Coverage::Covered(f(v)),
            Coverage::NotCovered { reason } => Coverage::NotCovered { reason },
        }
    }
}
