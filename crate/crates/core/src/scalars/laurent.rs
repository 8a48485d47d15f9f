use std::cmp::Ordering;
use std::fmt;

use super::gauss::GaussRational;

/// Laurent polynomial in `q^{1/2}` with Gaussian-rational coefficients.
///
/// `coeffs[k]` is the coefficient of `q^{(low + k)/2}`. The vector is trimmed:
/// it is empty for zero and otherwise starts and ends with nonzero entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HalfLaurent {
    low: i32,
    coeffs: Vec<GaussRational>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · q^{m/2}`.
    pub fn monomial(c: GaussRational, m: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HalfLaurent { low: m, coeffs: vec![c] }
    }

    /// Builds from `(half_exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussRational)>>(terms: I) -> Self {
        let terms: Vec<(i32, GaussRational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![GaussRational::zero(); (hi - lo + 1) as usize];
        for (m, c) in terms {
            coeffs[(m - lo) as usize] += &c;
        }
        Self::from_raw(lo, coeffs)
    }

    fn from_raw(low: i32, mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        HalfLaurent { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest half-exponent present (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest half-exponent present.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Width `high - low` in half-steps; the degree of the stripped polynomial.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn lowest_coeff(&self) -> Option<&GaussRational> {
        self.coeffs.first()
    }

    pub fn highest_coeff(&self) -> Option<&GaussRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, m: i32) -> GaussRational {
        let k = m - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            GaussRational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(half_exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by `q^{m/2}`.
    pub fn shift(&self, m: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        HalfLaurent { low: self.low + m, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HalfLaurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high().max(rhs.high());
        let mut coeffs = vec![GaussRational::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - lo) as usize + k] += c;
        }
        Self::from_raw(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        HalfLaurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if rhs.is_monomial() {
            let c = &rhs.coeffs[0];
            let mut out = self.scale(c);
            out.low += rhs.low;
            return out;
        }
        if self.is_monomial() {
            return rhs.mul(self);
        }
        let mut coeffs = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[a + b] += &(x * y);
                }
            }
        }
        Self::from_raw(self.low + rhs.low, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division with remainder of the stripped polynomials (both taken with
    /// lowest exponent 0). Returns `(quotient, remainder)` as stripped
    /// polynomials with `low = 0` convention kept for the quotient.
    pub(crate) fn poly_divrem(num: &[GaussRational], den: &[GaussRational]) -> (Vec<GaussRational>, Vec<GaussRational>) {
        let mut rem: Vec<GaussRational> = num.to_vec();
        if num.len() < den.len() {
            return (Vec::new(), rem);
        }
        let lead_inv = den.last().expect("nonzero divisor").inv().expect("nonzero lead");
        let mut quot = vec![GaussRational::zero(); num.len() - den.len() + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + den.len() - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.iter().enumerate() {
                let t = &c * d;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(den.len() - 1);
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        (quot, rem)
    }

    /// Monic gcd of two stripped polynomials (coefficient slices, constant term first).
    pub(crate) fn poly_gcd(a: &[GaussRational], b: &[GaussRational]) -> Vec<GaussRational> {
        let mut x: Vec<GaussRational> = a.to_vec();
        let mut y: Vec<GaussRational> = b.to_vec();
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let (_, r) = Self::poly_divrem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(lead) = x.last() {
            let inv = lead.inv().expect("nonzero lead");
            x = x.iter().map(|c| c * &inv).collect();
        }
        x
    }

    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = Self::poly_divrem(&self.coeffs, &rhs.coeffs);
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_raw(self.low - rhs.low, q))
    }

    pub(crate) fn from_stripped(low: i32, coeffs: Vec<GaussRational>) -> Self {
        Self::from_raw(low, coeffs)
    }

    /// Substitutes `q^{1/2} -> -q^{1/2}`.
    pub fn flip_half(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if (self.low + k as i32).rem_euclid(2) == 1 { -c } else { c.clone() })
            .collect();
        HalfLaurent { low: self.low, coeffs }
    }

    /// Substitutes `q^{1/2} -> q^{-1/2}`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        HalfLaurent { low: -self.high(), coeffs }
    }
}

impl PartialOrd for HalfLaurent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfLaurent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low
            .cmp(&other.low)
            .then_with(|| self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

fn fmt_exponent(m: i32) -> String {
    if m % 2 == 0 {
        format!("{}", m / 2)
    } else {
        format!("{m}/2")
    }
}

/// Terms in decreasing exponent order, each written `(c)*q^(e)`; the
/// exponent-zero term is written `(c)`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*q^({})", fmt_exponent(m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> HalfLaurent {
        HalfLaurent::from_terms(terms.iter().map(|&(m, c)| (m, GaussRational::from_int(c))))
    }

    #[test]
    fn trims_and_shifts() {
        let a = p(&[(-2, 0), (0, 1), (4, 0)]);
        assert!(a.is_one());
        assert_eq!(p(&[(3, 2)]).low(), 3);
        assert!(p(&[(1, 1), (1, -1)]).is_zero());
    }

    #[test]
    fn product_of_q_minus_inverse() {
        // (q - q^{-1})(q + q^{-1}) = q^2 - q^{-2}
        let a = p(&[(2, 1), (-2, -1)]);
        let b = p(&[(2, 1), (-2, 1)]);
        assert_eq!(a.mul(&b), p(&[(4, 1), (-4, -1)]));
    }

    #[test]
    fn exact_division() {
        let num = p(&[(4, 1), (-4, -1)]);
        let den = p(&[(2, 1), (-2, -1)]);
        assert_eq!(num.div_exact(&den).unwrap(), p(&[(2, 1), (-2, 1)]));
        assert!(den.div_exact(&p(&[(1, 1), (0, 2)])).is_none());
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[(0, -1), (4, 1)]); // x^4 - 1
        let b = p(&[(0, 2), (2, 2)]); // 2x^2 + 2
        let g = HalfLaurent::poly_gcd(a.coeffs(), b.coeffs());
        assert_eq!(g, vec![GaussRational::one(), GaussRational::zero(), GaussRational::one()]);
    }

    #[test]
    fn display_is_descending() {
        let a = p(&[(2, 1), (0, 3), (-1, -1)]);
        assert_eq!(a.to_string(), "(1)*q^(1) + (3) + (-1)*q^(-1/2)");
    }
}
