//! Structure constants `u_{i,j,r}`, `u'_{i,j,r}` and the sign powers `o(i)^{c r}`.

use super::gauss::GaussRational;
use super::scalar::Scalar;
use super::unit::UnitMonomial;
use super::ScalarError;
use crate::cartan::{sign_exponent_c, CartanDatum, Family, Shape};

/// `z - z^{-1}`.
fn diff(z: UnitMonomial) -> Scalar {
    &Scalar::from(z) - &Scalar::from(z.inv())
}

fn sum_pm(z: UnitMonomial) -> Scalar {
    &Scalar::from(z) + &Scalar::from(z.inv())
}

fn alt(r: i32) -> Scalar {
    Scalar::from_int(if r.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `u_{i,j,r}` for a super family (with `q`) or `u'_{i,j,r}` for a dual
/// family (with `t`); the datum's family selects the case table.
pub fn structure_coeff(datum: &CartanDatum, i: usize, j: usize, r: i32) -> Scalar {
    let n = datum.n;
    let base = datum.base();
    let qn = datum.q_node(n);
    // q_i^{r a_ij} = base^{2 r (α_i, α_j)}
    let generic = || diff(base.pow(2 * r * datum.gram[i][j]));
    // (1 + (-1)^r)(q_i^{r a_ij/2} - q_i^{-r a_ij/2})
    let halved = || {
        if r.rem_euclid(2) == 1 {
            Scalar::zero()
        } else {
            &Scalar::from_int(2) * &diff(base.pow(r * datum.gram[i][j]))
        }
    };
    let top = i == n && j == n;
    match datum.family {
        Family::Osp1 if top => &diff(qn.pow(4 * r)) - &diff(qn.pow(2 * r)),
        Family::Sl2 | Family::Osp22 if top => &alt(r) * &diff(qn.pow(2 * r)),
        Family::Osp1 | Family::Sl2 => generic(),
        Family::Osp22 => halved(),
        Family::A2n2 if top => &diff(qn.pow(2 * r)) * &(&sum_pm(qn.pow(2 * r)) - &alt(r)),
        Family::A2n2 | Family::Bn1 => generic(),
        Family::Dn12 if top => diff(qn.pow(2 * r)),
        Family::Dn12 => halved(),
    }
}

/// `u_{i,j,r}` of a super family.
pub fn u_coeff(datum: &CartanDatum, i: usize, j: usize, r: i32) -> Scalar {
    debug_assert!(datum.is_super());
    structure_coeff(datum, i, j, r)
}

/// `u'_{i,j,r}` of a dual family, with `t` eliminated through `t^{1/2} = i q^{1/2}`.
pub fn u_prime_coeff(datum: &CartanDatum, i: usize, j: usize, r: i32) -> Scalar {
    debug_assert!(!datum.is_super());
    structure_coeff(datum, i, j, r)
}

/// `o(i)^{c r}` with `o(i) = (-1)^{n-i}`.
pub fn o_sign_power(n: usize, family: Family, i: usize, r: i32) -> Result<GaussRational, ScalarError> {
    if (n - i) % 2 == 0 {
        return Ok(GaussRational::one());
    }
    let (cn, cd) = sign_exponent_c(family);
    let e = cn * r;
    if e % cd != 0 {
        return Err(ScalarError::UndefinedPower { i, r });
    }
    Ok(if (e / cd).rem_euclid(2) == 0 { GaussRational::one() } else { -GaussRational::one() })
}

/// True when `family` uses the halved exponent `c = 1/2`.
pub fn uses_half_c(family: Family) -> bool {
    family.shape() == Shape::Osp22
}
