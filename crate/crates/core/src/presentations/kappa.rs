use num_bigint::BigInt;
use num_rational::BigRational;

use crate::scalars::{GaussRational, Scalar};
use crate::superalg::{Algebra, Element, Gen, Monomial};

use super::PresentationError;

/// Partitions of `m` into parts accepted by `allowed`, as multiplicity lists
/// `(part, count)` in increasing part order.
fn partitions(m: i32, max_part: i32, allowed: &dyn Fn(i32) -> bool) -> Vec<Vec<(i32, u32)>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in (1..=max_part.min(m)).rev() {
        if !allowed(p) {
            continue;
        }
        for count in 1..=(m / p) {
            for mut rest in partitions(m - p * count, p - 1, allowed) {
                rest.push((p, count as u32));
                out.push(rest);
            }
        }
    }
    out
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(j))
}

/// `κ̂^±_{i,m}`: the coefficient of `u^{-m}` in
/// `γ_i^{±1} exp(±(base² - base⁻²) Σ_{r>0} κ_{i,±r} u^{∓r})`.
///
/// Zero when `m` has the wrong sign. Only `κ_{i,s}` with `(i, s)` in the loop
/// index set appear. The result is in reduced form (`γ_i^{±1}` at the right).
pub fn kappa_hat(alg: &Algebra, sign: i32, i: usize, m: i32, order: i32) -> Result<Element, PresentationError> {
    if m.abs() > order {
        return Err(PresentationError::OrderExceeded { m, order });
    }
    if m * sign < 0 {
        return Ok(alg.zero());
    }
    let base = alg.base();
    let qq = &Scalar::from(base.pow(2)) - &Scalar::from(base.pow(-2));
    let c = if sign > 0 { qq } else { -qq };
    let loops = alg.datum().loop_set();
    let allowed = |p: i32| loops.contains_star(i, sign * p);
    let group = if sign > 0 { Gen::gamma(i) } else { Gen::gamma_inv(i) };
    let mut out = alg.zero();
    for part in partitions(m.abs(), m.abs(), &allowed) {
        let mut word = Vec::new();
        let mut coeff = Scalar::one();
        let mut denom = BigInt::from(1);
        let mut sorted = part.clone();
        sorted.sort_by_key(|&(p, _)| sign * p);
        for &(p, count) in &sorted {
            word.extend(std::iter::repeat(Gen::kappa(i, sign * p)).take(count as usize));
            coeff = &coeff * &c.pow(count as i32);
            denom *= factorial(count);
        }
        word.push(group);
        let inv = GaussRational::new(BigRational::new(1.into(), denom), BigRational::from_integer(0.into()));
        out.add_term(Monomial::from_word(word), coeff.scale_gauss(&inv));
    }
    Ok(out)
}
