//! Instantiated relation catalogues for the Chevalley and Drinfeld
//! presentations, `κ̂` expansions and the rescaling automorphisms.

mod chevalley;
mod drinfeld;
mod kappa;
mod rescale;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cartan::Family;
use crate::superalg::{Algebra, AlgebraError, Element, Style};

pub use chevalley::chevalley_relations;
pub use drinfeld::{drinfeld_relations, loop_values};
pub use kappa::kappa_hat;
pub use rescale::rescale_to_standard;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("window {0} is too small (need at least 2)")]
    WindowTooSmall(i32),
    #[error("kappa-hat index {m} exceeds expansion order {order}")]
    OrderExceeded { m: i32, order: i32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One instantiated relation, stored as `lhs - rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub params: Vec<(&'static str, i32)>,
    pub element: Element,
    /// Relations that structural reduction already enforces (group-like
    /// conjugation, invertibility, sign-group rules). They are listed but
    /// never needed as certificate rows.
    pub structural: bool,
}

impl Relation {
    pub fn new(name: &str, params: Vec<(&'static str, i32)>, element: Element) -> Self {
        Relation { name: name.to_string(), params, element, structural: false }
    }

    pub fn structural(name: &str, params: Vec<(&'static str, i32)>, element: Element) -> Self {
        Relation { name: name.to_string(), params, element, structural: true }
    }

    pub fn param(&self, key: &str) -> Option<i32> {
        self.params.iter().find(|(k, _)| *k == key).map(|(_, v)| *v)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name)?;
        for (k, (key, v)) in self.params.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{key}={v}")?;
        }
        write!(f, ")")
    }
}

/// An alphabet together with an instantiated relation catalogue.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub algebra: Algebra,
    pub window: Option<i32>,
    pub relations: Vec<Relation>,
}

#[derive(Serialize)]
pub struct RelationReport {
    pub name: String,
    pub params: Vec<(String, i32)>,
    pub structural: bool,
    pub element: String,
}

impl Presentation {
    pub fn family(&self) -> Family {
        self.algebra.family()
    }

    pub fn style(&self) -> Style {
        self.algebra.style()
    }

    pub fn names(&self) -> BTreeSet<&str> {
        self.relations.iter().map(|r| r.name.as_str()).collect()
    }

    pub fn by_name<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Relation> + 'a {
        self.relations.iter().filter(move |r| r.name == name)
    }

    /// Relations that are not enforced by structural reduction.
    pub fn working(&self) -> impl Iterator<Item = &Relation> + '_ {
        self.relations.iter().filter(|r| !r.structural)
    }

    pub fn report(&self) -> Vec<RelationReport> {
        self.relations
            .iter()
            .map(|r| RelationReport {
                name: r.name.clone(),
                params: r.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                structural: r.structural,
                element: crate::superalg::format_element(&r.element),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests;
