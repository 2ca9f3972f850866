use serde::Serialize;

/// Result of an exhaustive search that may run out of budget.
///
/// `Holds` carries the evidence (a certificate), `Fails` carries a
/// counter-witness when one exists. Running out of budget is reported
/// explicitly and never collapses into `Fails`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T, W = ()> {
    Holds(T),
    Fails(W),
    BudgetExceeded { explored: usize },
}

impl<T, W> Outcome<T, W> {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }

    pub fn is_budget_exceeded(&self) -> bool {
        matches!(self, Outcome::BudgetExceeded { .. })
    }

    /// `Some(true)` / `Some(false)` for a decided search, `None` otherwise.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Outcome::Holds(_) => Some(true),
            Outcome::Fails(_) => Some(false),
            Outcome::BudgetExceeded { .. } => None,
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self.decided() {
            Some(true) => Verdict::True,
            Some(false) => Verdict::False,
            None => Verdict::BudgetExceeded,
        }
    }

    pub fn certificate(&self) -> Option<&T> {
        match self {
            Outcome::Holds(c) => Some(c),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::Fails(w) => Some(w),
            _ => None,
        }
    }
}

/// Three-valued verdict as it appears in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    #[serde(rename = "true")]
    True,
    #[serde(rename = "false")]
    False,
    #[serde(rename = "budget-exceeded")]
    BudgetExceeded,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}
