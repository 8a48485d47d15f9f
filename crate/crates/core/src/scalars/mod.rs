//! Exact arithmetic in `Q(i)(q^{1/2})`, q-combinatorics and structure constants.

mod gauss;
mod laurent;
mod qnum;
mod scalar;
mod structure;
mod unit;

use thiserror::Error;

pub use gauss::GaussRational;
pub use laurent::HalfLaurent;
pub use qnum::{q_binomial, q_factorial, q_int};
pub use scalar::Scalar;
pub use structure::{o_sign_power, structure_coeff, u_coeff, u_prime_coeff, uses_half_c};
pub use unit::UnitMonomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("degenerate base {0}: z - z^-1 vanishes")]
    DegenerateBase(UnitMonomial),
    #[error("q-binomial index out of range: N = {n}, k = {k}")]
    OutOfRange { n: u32, k: i64 },
    #[error("o({i})^(c*{r}) is not a defined sign")]
    UndefinedPower { i: usize, r: i32 },
}
