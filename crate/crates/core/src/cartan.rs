//! Root data for the three super families and their dual affine families.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::scalars::UnitMonomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("unsupported rank {0}: rank must be at least 1")]
    UnsupportedRank(usize),
    #[error("{0} is already a dual (non-super) family")]
    AlreadyDual(Family),
    #[error("unknown family `{0}` (expected one of osp1, sl2, osp2-2, a2n2, bn1, dn12)")]
    UnknownFamily(String),
}

/// The six affine families; the first three are super, the rest their
/// non-super partners.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    /// osp(1|2n)^(1)
    Osp1,
    /// sl(1|2n)^(2)
    Sl2,
    /// osp(2|2n)^(2)
    Osp22,
    /// A_{2n}^(2)
    A2n2,
    /// B_n^(1)
    Bn1,
    /// D_{n+1}^(2)
    Dn12,
}

/// Shape shared by a super family and its partner; decides the root
/// realisation, `θ`, `c` and the `γ_g` exponents.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    Osp1,
    Sl2,
    Osp22,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Osp1, Family::Sl2, Family::Osp22, Family::A2n2, Family::Bn1, Family::Dn12];
    pub const SUPER: [Family; 3] = [Family::Osp1, Family::Sl2, Family::Osp22];

    pub fn is_super(self) -> bool {
        matches!(self, Family::Osp1 | Family::Sl2 | Family::Osp22)
    }

    pub fn shape(self) -> Shape {
        match self {
            Family::Osp1 | Family::A2n2 => Shape::Osp1,
            Family::Sl2 | Family::Bn1 => Shape::Sl2,
            Family::Osp22 | Family::Dn12 => Shape::Osp22,
        }
    }

    /// The table partner, in either direction.
    pub fn partner(self) -> Family {
        match self {
            Family::Osp1 => Family::A2n2,
            Family::Sl2 => Family::Bn1,
            Family::Osp22 => Family::Dn12,
            Family::A2n2 => Family::Osp1,
            Family::Bn1 => Family::Sl2,
            Family::Dn12 => Family::Osp22,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Family::Osp1 => "osp1",
            Family::Sl2 => "sl2",
            Family::Osp22 => "osp2-2",
            Family::A2n2 => "a2n2",
            Family::Bn1 => "bn1",
            Family::Dn12 => "dn12",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            Family::Osp1 => "osp(1|2n)^(1)",
            Family::Sl2 => "sl(1|2n)^(2)",
            Family::Osp22 => "osp(2|2n)^(2)",
            Family::A2n2 => "A_2n^(2)",
            Family::Bn1 => "B_n^(1)",
            Family::Dn12 => "D_n+1^(2)",
        }
    }
}

/// The non-super partner of a super family.
pub fn dual_family(family: Family) -> Result<Family, CartanError> {
    if family.is_super() {
        Ok(family.partner())
    } else {
        Err(CartanError::AlreadyDual(family))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Family {
    type Err = CartanError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.short_name() == s)
            .ok_or_else(|| CartanError::UnknownFamily(s.to_string()))
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.short_name())
    }
}

/// Root datum of one family at rank `n`, nodes `0..=n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CartanDatum {
    pub family: Family,
    pub n: usize,
    /// `(α_i, α_j)`; every entry is an integer for these families.
    pub gram: Vec<Vec<i32>>,
    pub cartan: Vec<Vec<i32>>,
    /// Odd nodes `τ`.
    pub parity: Vec<usize>,
    pub zeta: Vec<u32>,
    #[serde(skip)]
    pub q_of_node: Vec<UnitMonomial>,
}

/// Simple roots in the `ε` basis; the `δ` component is isotropic and dropped.
fn simple_roots(shape: Shape, n: usize) -> Vec<Vec<i32>> {
    let eps = |k: usize| {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        v
    };
    let mut roots = Vec::with_capacity(n + 1);
    let alpha0 = match shape {
        Shape::Osp1 => eps(1).into_iter().map(|x| -2 * x).collect(),
        Shape::Sl2 if n >= 2 => {
            let mut v = vec![0; n];
            v[0] = -1;
            v[1] = -1;
            v
        }
        Shape::Sl2 | Shape::Osp22 => eps(1).into_iter().map(|x| -x).collect(),
    };
    roots.push(alpha0);
    for i in 1..n {
        let mut v = eps(i);
        v[i] = -1;
        roots.push(v);
    }
    roots.push(eps(n));
    roots
}

pub fn build_datum(family: Family, n: usize) -> Result<CartanDatum, CartanError> {
    if n < 1 {
        return Err(CartanError::UnsupportedRank(n));
    }
    let roots = simple_roots(family.shape(), n);
    let dot = |a: &[i32], b: &[i32]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i32>();
    let gram: Vec<Vec<i32>> =
        roots.iter().map(|a| roots.iter().map(|b| dot(a, b)).collect()).collect();
    let cartan: Vec<Vec<i32>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let num = 2 * gram[i][j];
                    assert_eq!(num % gram[i][i], 0, "non-integral Cartan entry");
                    num / gram[i][i]
                })
                .collect()
        })
        .collect();
    let parity = match family {
        // at n = 1 the affine root δ - ε_1 of sl(1|2)^(2) is odd
        Family::Sl2 if n == 1 => vec![0, 1],
        Family::Osp1 | Family::Sl2 => vec![n],
        Family::Osp22 => vec![0, n],
        _ => Vec::new(),
    };
    // ζ_i = 2 exactly on the nodes with q_i = q^{1/2} (t^{1/2}), so no half
    // power enters an e-f relation
    let zeta = (0..=n).map(|i| if gram[i][i] % 2 != 0 { 2 } else { 1 }).collect();
    let base = if family.is_super() { UnitMonomial::q_half() } else { UnitMonomial::t_half() };
    let q_of_node = (0..=n).map(|i| base.pow(gram[i][i])).collect();
    Ok(CartanDatum { family, n, gram, cartan, parity, zeta, q_of_node })
}

impl CartanDatum {
    pub fn is_super(&self) -> bool {
        self.family.is_super()
    }

    /// `q^{1/2}` for super families, `t^{1/2} = i q^{1/2}` for their partners.
    pub fn base(&self) -> UnitMonomial {
        if self.is_super() {
            UnitMonomial::q_half()
        } else {
            UnitMonomial::t_half()
        }
    }

    /// `q_i` (or `t_i`).
    pub fn q_node(&self, i: usize) -> UnitMonomial {
        self.q_of_node[i]
    }

    /// `q_i^{a_ij} = base^{2(α_i, α_j)}`; the conjugation factor `k_i e_j k_i^{-1}`.
    pub fn q_pow_a(&self, i: usize, j: usize) -> UnitMonomial {
        self.base().pow(2 * self.gram[i][j])
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.parity.contains(&i)
    }

    pub fn loop_set(&self) -> LoopIndexSet {
        LoopIndexSet { family: self.family, n: self.n }
    }

    pub fn theta(&self, i: usize, j: usize) -> i32 {
        theta(self.family, self.n, i, j)
    }

    /// `d_i a_ij == d_j a_ji` with `d_i = (α_i, α_i)/2`, as `gram[i][i] a_ij == gram[j][j] a_ji`.
    pub fn is_symmetrizable(&self) -> bool {
        (0..=self.n).all(|i| {
            (0..=self.n).all(|j| self.gram[i][i] * self.cartan[i][j] == self.gram[j][j] * self.cartan[j][i])
        })
    }
}

/// Membership in `I_g`: all `(i, r)` with `1 <= i <= n`, except odd `r` at
/// `i < n` for the `osp(2|2n)^(2)` shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LoopIndexSet {
    pub family: Family,
    pub n: usize,
}

impl LoopIndexSet {
    pub fn contains(&self, i: usize, r: i32) -> bool {
        if i < 1 || i > self.n {
            return false;
        }
        !(self.family.shape() == Shape::Osp22 && i < self.n && r.rem_euclid(2) == 1)
    }

    /// `I_g^*`: members with `r != 0`.
    pub fn contains_star(&self, i: usize, r: i32) -> bool {
        r != 0 && self.contains(i, r)
    }
}

/// `θ = 2` for the `osp(2|2n)^(2)` shape away from `(n, n)`, else 1.
pub fn theta(family: Family, n: usize, i: usize, j: usize) -> i32 {
    if family.shape() == Shape::Osp22 && (i, j) != (n, n) {
        2
    } else {
        1
    }
}

/// Exponents `(e_1, …, e_n)` of `γ_g = γ_1^{e_1} ⋯ γ_n^{e_n}`.
pub fn gamma_g_exponents(family: Family, n: usize) -> Vec<u32> {
    (1..=n)
        .map(|i| match family.shape() {
            Shape::Osp1 => 2,
            Shape::Sl2 => {
                if i == 1 {
                    1
                } else {
                    2
                }
            }
            Shape::Osp22 => 1,
        })
        .collect()
}

/// `c = 1/2` for the `osp(2|2n)^(2)` shape, else 1; returned as `(num, den)`.
pub fn sign_exponent_c(family: Family) -> (i32, i32) {
    if family.shape() == Shape::Osp22 {
        (1, 2)
    } else {
        (1, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_zero_rejected() {
        assert_eq!(build_datum(Family::Osp1, 0), Err(CartanError::UnsupportedRank(0)));
    }

    #[test]
    fn dual_pairs() {
        assert_eq!(dual_family(Family::Osp1), Ok(Family::A2n2));
        assert_eq!(dual_family(Family::Sl2), Ok(Family::Bn1));
        assert_eq!(dual_family(Family::Osp22), Ok(Family::Dn12));
        assert_eq!(dual_family(Family::Bn1), Err(CartanError::AlreadyDual(Family::Bn1)));
    }

    #[test]
    fn theta_rule() {
        assert_eq!(theta(Family::Osp22, 2, 1, 2), 2);
        assert_eq!(theta(Family::Osp22, 2, 2, 2), 1);
        assert_eq!(theta(Family::Osp1, 2, 1, 1), 1);
        assert_eq!(theta(Family::Dn12, 3, 1, 1), 2);
    }

    #[test]
    fn gamma_exponents() {
        assert_eq!(gamma_g_exponents(Family::Osp1, 2), vec![2, 2]);
        assert_eq!(gamma_g_exponents(Family::Sl2, 2), vec![1, 2]);
        assert_eq!(gamma_g_exponents(Family::Osp22, 3), vec![1, 1, 1]);
    }

    #[test]
    fn normalisation_and_zeta() {
        for f in Family::ALL {
            for n in 1..=3 {
                let d = build_datum(f, n).unwrap();
                assert_eq!(d.gram[n][n], 1);
                assert_eq!(d.zeta[n], 2);
                assert!((1..n).all(|i| d.zeta[i] == 1));
                let short_zero = f.shape() == Shape::Osp22 || (f.shape() == Shape::Sl2 && n == 1);
                assert_eq!(d.zeta[0], if short_zero { 2 } else { 1 });
                assert!((0..=n).all(|i| d.cartan[i][i] == 2));
            }
        }
    }

    #[test]
    fn loop_set_excludes_odd_for_osp22() {
        let s = build_datum(Family::Osp22, 2).unwrap().loop_set();
        assert!(!s.contains(1, 3));
        assert!(s.contains(1, -2));
        assert!(s.contains(2, 3));
        assert!(!s.contains(0, 0));
        assert!(!s.contains_star(2, 0));
    }

    #[test]
    fn parse_short_names() {
        assert_eq!("osp2-2".parse::<Family>(), Ok(Family::Osp22));
        assert!("e8".parse::<Family>().is_err());
    }
}
