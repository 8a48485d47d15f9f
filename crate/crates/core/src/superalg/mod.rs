//! The free smash-product superalgebra on a presentation's alphabet.

mod algebra;
mod element;
mod gens;
mod text;

pub use algebra::{sym_over, Algebra, AlgebraError, Schedule};
pub use element::{Element, Monomial};
pub use gens::{AlgebraTag, Gen, Kind, Style};
pub use text::{format_element, format_monomial, format_scalar_factor, parse_element, parse_scalar, parse_statements, ParseError};
