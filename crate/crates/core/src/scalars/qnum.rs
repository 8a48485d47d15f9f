//! Quantum integers and Gaussian binomials `[j]_z`, `[N]_z!`, `[N k]_z`.

use super::gauss::GaussRational;
use super::laurent::HalfLaurent;
use super::scalar::Scalar;
use super::unit::UnitMonomial;
use super::ScalarError;

/// `[j]_z = (z^j - z^{-j}) / (z - z^{-1})`.
///
/// Computed as the finite sum `z^{j-1} + z^{j-3} + … + z^{1-j}` (negated for
/// negative `j`), which is the exact quotient. `[0]_z = 0`.
pub fn q_int(j: i64, z: UnitMonomial) -> Result<Scalar, ScalarError> {
    if z.is_involutive() {
        return Err(ScalarError::DegenerateBase(z));
    }
    let sign = if j < 0 { -1 } else { 1 };
    let j = j.abs();
    let terms = (0..j).map(|k| {
        let p = z.pow((j - 1 - 2 * k) as i32);
        (p.half_exp(), GaussRational::i_pow(p.unit() as i64).scale_int(sign))
    });
    Ok(Scalar::from_laurent(HalfLaurent::from_terms(terms)))
}

/// `[N]_z! = [1]_z [2]_z … [N]_z` with the empty product equal to 1.
pub fn q_factorial(n: u32, z: UnitMonomial) -> Result<Scalar, ScalarError> {
    let mut acc = Scalar::one();
    for j in 1..=n {
        acc = &acc * &q_int(j as i64, z)?;
    }
    Ok(acc)
}

/// Gaussian binomial `[N]_z! / ([N-k]_z! [k]_z!)`.
pub fn q_binomial(n: u32, k: i64, z: UnitMonomial) -> Result<Scalar, ScalarError> {
    if k < 0 || k > n as i64 {
        return Err(ScalarError::OutOfRange { n, k });
    }
    let k = k as u32;
    if k == 0 || k == n {
        return Ok(Scalar::one());
    }
    let num = q_factorial(n, z)?;
    let den = &q_factorial(n - k, z)? * &q_factorial(k, z)?;
    Ok(&num / &den)
}
