use std::fmt;
use std::ops::Mul;

/// `i^unit · q^{half_exp/2}` with `unit` taken mod 4.
///
/// Houses `q_i`, `t_i` and the constant `t^{1/2} = i·q^{1/2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UnitMonomial {
    unit: u8,
    half_exp: i32,
}

impl UnitMonomial {
    pub fn new(unit: u8, half_exp: i32) -> Self {
        UnitMonomial { unit: unit % 4, half_exp }
    }

    pub const ONE: UnitMonomial = UnitMonomial { unit: 0, half_exp: 0 };
    pub const MINUS_ONE: UnitMonomial = UnitMonomial { unit: 2, half_exp: 0 };

    /// `q^{1/2}`.
    pub fn q_half() -> Self {
        UnitMonomial::new(0, 1)
    }

    pub fn q() -> Self {
        UnitMonomial::new(0, 2)
    }

    /// `t^{1/2} = i·q^{1/2}`.
    pub fn t_half() -> Self {
        UnitMonomial::new(1, 1)
    }

    /// `t = -q`.
    pub fn t() -> Self {
        Self::t_half().pow(2)
    }

    pub fn sign(negative: bool) -> Self {
        if negative {
            Self::MINUS_ONE
        } else {
            Self::ONE
        }
    }

    pub fn unit(&self) -> u8 {
        self.unit
    }

    pub fn half_exp(&self) -> i32 {
        self.half_exp
    }

    pub fn is_one(&self) -> bool {
        self.unit == 0 && self.half_exp == 0
    }

    pub fn inv(&self) -> Self {
        UnitMonomial::new((4 - self.unit) % 4, -self.half_exp)
    }

    pub fn pow(&self, e: i32) -> Self {
        let u = (self.unit as i64 * e as i64).rem_euclid(4) as u8;
        UnitMonomial::new(u, self.half_exp * e)
    }

    /// `z - z^{-1} = 0` exactly when `z^2 = 1`.
    pub fn is_involutive(&self) -> bool {
        self.pow(2).is_one()
    }
}

impl Mul for UnitMonomial {
    type Output = UnitMonomial;
    fn mul(self, rhs: UnitMonomial) -> UnitMonomial {
        UnitMonomial::new((self.unit + rhs.unit) % 4, self.half_exp + rhs.half_exp)
    }
}

impl fmt::Display for UnitMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = ["1", "i", "-1", "-i"][self.unit as usize];
        if self.half_exp == 0 {
            write!(f, "({c})")
        } else if self.half_exp % 2 == 0 {
            write!(f, "({c})*q^({})", self.half_exp / 2)
        } else {
            write!(f, "({c})*q^({}/2)", self.half_exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_is_minus_q() {
        assert_eq!(UnitMonomial::t(), UnitMonomial::new(2, 2));
        assert_eq!(UnitMonomial::t_half().pow(4), UnitMonomial::q().pow(2));
    }

    #[test]
    fn group_laws() {
        let z = UnitMonomial::new(3, -5);
        assert!((z * z.inv()).is_one());
        assert_eq!(z.pow(-2), z.inv() * z.inv());
        assert!(UnitMonomial::MINUS_ONE.is_involutive());
        assert!(!UnitMonomial::new(1, 0).is_involutive());
    }
}
