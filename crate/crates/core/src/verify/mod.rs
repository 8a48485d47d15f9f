//! Bounded-degree ideal membership and relation-preservation checks.

mod check;
mod echelon;
mod index;

use serde::Serialize;

use crate::scalars::Scalar;
use crate::superalg::Element;

pub use check::{
    check_morphism, check_zero, fast_reduce, InstanceResult, MorphismReport, RelationFilter, RelationSummary, VerifyError,
    recombine, specialize_constant,
};
pub(crate) use check::{Growth, Search};
pub use index::{Placement, RelationIndex};

/// Search bounds for `check_zero`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Longest monomial (σ bits and group-likes counted) in any candidate.
    pub max_len: usize,
    /// Loop window for the words multiplying a relation; `None` follows the
    /// presentation.
    pub window: Option<i32>,
    /// Cap on candidate products formed.
    pub max_steps: usize,
    /// Cap on independent basis rows.
    pub max_basis: usize,
    /// Cap on expansion rounds (one residual monomial, or one sweep over
    /// the basis, per round).
    pub max_rounds: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_len: 12, window: None, max_steps: 200_000, max_basis: 50_000, max_rounds: 2_000 }
    }
}

impl Budget {
    pub fn zero() -> Self {
        Budget { max_len: 0, window: None, max_steps: 0, max_basis: 0, max_rounds: 0 }
    }

    pub fn with_len(max_len: usize) -> Self {
        Budget { max_len, ..Budget::default() }
    }
}

/// `coeff · σ_L w_L · relation · w_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateTerm {
    pub placement: Placement,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified { certificate: Vec<CertificateTerm> },
    NonzeroAtBound { residual: Element },
    BudgetExceeded,
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Verified { .. } => "verified",
            Verdict::NonzeroAtBound { .. } => "nonzero-at-bound",
            Verdict::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[cfg(test)]
mod tests;
