use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gauss::GaussRational;
use super::laurent::HalfLaurent;
use super::unit::UnitMonomial;

/// Exact element of `Q(i)(q^{1/2})`.
///
/// Canonical form: numerator and denominator coprime, denominator with lowest
/// exponent 0 and lowest coefficient 1. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: HalfLaurent::zero(), den: HalfLaurent::one() }
    }

    pub fn one() -> Self {
        Scalar { num: HalfLaurent::one(), den: HalfLaurent::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRational::from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_gauss(GaussRational::from_ratio(num, den))
    }

    pub fn from_gauss(c: GaussRational) -> Self {
        Self::from_laurent(HalfLaurent::constant(c))
    }

    pub fn from_laurent(p: HalfLaurent) -> Self {
        Scalar { num: p, den: HalfLaurent::one() }
    }

    /// `q^{m/2}`.
    pub fn q_half_pow(m: i32) -> Self {
        Self::from_laurent(HalfLaurent::monomial(GaussRational::one(), m))
    }

    pub fn q() -> Self {
        Self::q_half_pow(2)
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRational::i())
    }

    /// `num / den`, `None` when `den` is zero.
    pub fn fraction(num: HalfLaurent, den: HalfLaurent) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    fn normalize(num: HalfLaurent, den: HalfLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = num.low() - den.low();
        if den.is_monomial() {
            let inv = den.coeffs()[0].inv().expect("nonzero");
            return Scalar { num: num.scale(&inv).shift(-den.low()), den: HalfLaurent::one() };
        }
        let mut n: Vec<GaussRational> = num.coeffs().to_vec();
        let mut d: Vec<GaussRational> = den.coeffs().to_vec();
        let g = HalfLaurent::poly_gcd(&n, &d);
        if g.len() > 1 {
            n = HalfLaurent::poly_divrem(&n, &g).0;
            d = HalfLaurent::poly_divrem(&d, &g).0;
        }
        let c = d[0].inv().expect("stripped polynomial has nonzero constant term");
        let n: Vec<GaussRational> = n.iter().map(|x| x * &c).collect();
        let d: Vec<GaussRational> = d.iter().map(|x| x * &c).collect();
        Scalar { num: HalfLaurent::from_stripped(shift, n), den: HalfLaurent::from_stripped(0, d) }
    }

    pub fn numerator(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &HalfLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a unit monomial `±q^{m/2}` or `±i·q^{m/2}` when it is one.
    pub fn as_unit(&self) -> Option<UnitMonomial> {
        if !self.is_laurent() || !self.num.is_monomial() {
            return None;
        }
        let c = &self.num.coeffs()[0];
        (0..4)
            .find(|&k| GaussRational::i_pow(k) == *c)
            .map(|k| UnitMonomial::new(k as u8, self.num.low()))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv().expect("power of zero") } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn scale_gauss(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by `±i^k q^{m/2}` without renormalizing.
    pub fn mul_unit(&self, u: UnitMonomial) -> Self {
        if u.is_one() {
            return self.clone();
        }
        Scalar {
            num: self.num.scale(&GaussRational::i_pow(u.unit() as i64)).shift(u.half_exp()),
            den: self.den.clone(),
        }
    }

    /// Field automorphism `q^{1/2} -> -q^{1/2}` (so `q -> q`).
    pub fn flip_half(&self) -> Self {
        Self::normalize(self.num.flip_half(), self.den.flip_half())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: self.num.add(&rhs.num), den: HalfLaurent::one() };
        }
        if self.den == rhs.den {
            return Scalar::normalize(self.num.add(&rhs.num), self.den.clone());
        }
        Scalar::normalize(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: self.num.mul(&rhs.num), den: HalfLaurent::one() };
        }
        if rhs.is_laurent() && rhs.num.is_monomial() {
            let c = &rhs.num.coeffs()[0];
            return Scalar { num: self.num.scale(c).shift(rhs.num.low()), den: self.den.clone() };
        }
        if self.is_laurent() && self.num.is_monomial() {
            return rhs * self;
        }
        Scalar::normalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<UnitMonomial> for Scalar {
    fn from(u: UnitMonomial) -> Scalar {
        Scalar::from_laurent(HalfLaurent::monomial(GaussRational::i_pow(u.unit() as i64), u.half_exp()))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(m: i32) -> Scalar {
        Scalar::q_half_pow(m)
    }

    #[test]
    fn canonical_fraction() {
        // (q^2 - q^{-2}) / (q - q^{-1}) = q + q^{-1}
        let a = &qm(4) - &qm(-4);
        let b = &qm(2) - &qm(-2);
        let c = &a / &b;
        assert!(c.is_laurent());
        assert_eq!(c, &qm(2) + &qm(-2));
    }

    #[test]
    fn common_factor_cancels() {
        let a = &qm(1) + &Scalar::one();
        let b = &qm(3) - &Scalar::from_int(2);
        let c = &qm(2) - &Scalar::i();
        let lhs = &a / &b;
        let rhs = &(&a * &c) / &(&b * &c);
        assert_eq!(lhs, rhs);
        assert!(lhs.denominator().lowest_coeff().unwrap().is_one());
        assert_eq!(lhs.denominator().low(), 0);
    }

    #[test]
    fn unit_roundtrip() {
        let u = UnitMonomial::new(1, -3);
        assert_eq!(Scalar::from(u).as_unit(), Some(u));
        assert_eq!((&qm(2) + &qm(0)).as_unit(), None);
    }

    #[test]
    fn display_fraction() {
        let s = &Scalar::one() / &(&qm(2) - &qm(-2));
        assert_eq!(s.to_string(), "((-1)*q^(1))/((-1)*q^(2) + (1))");
    }
}
