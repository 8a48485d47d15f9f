use std::fmt;

use serde::Serialize;

use crate::cartan::Family;

/// Generator kinds across the four presentations.
///
/// Declaration order fixes the canonical order of the group-like tail of a
/// reduced monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Kind {
    E,
    F,
    XiPlus,
    XiMinus,
    Kappa,
    K,
    KInv,
    Gamma,
    GammaInv,
    GammaHalf,
    GammaHalfInv,
    /// The symbolic constant `c` of the `f_0` image.
    Const,
    Sigma,
}

impl Kind {
    /// Group-like kinds act on weight vectors by scalars and are moved to the
    /// right end of a word by structural reduction.
    pub fn is_grouplike(self) -> bool {
        matches!(
            self,
            Kind::K | Kind::KInv | Kind::Gamma | Kind::GammaInv | Kind::GammaHalf | Kind::GammaHalfInv | Kind::Const
        )
    }

    pub fn inverse(self) -> Option<Kind> {
        Some(match self {
            Kind::K => Kind::KInv,
            Kind::KInv => Kind::K,
            Kind::Gamma => Kind::GammaInv,
            Kind::GammaInv => Kind::Gamma,
            Kind::GammaHalf => Kind::GammaHalfInv,
            Kind::GammaHalfInv => Kind::GammaHalf,
            Kind::Sigma => Kind::Sigma,
            _ => return None,
        })
    }

    /// `+1` for `e`, `ξ⁺`, `-1` for `f`, `ξ⁻`, 0 for weight-zero kinds.
    pub fn weight_sign(self) -> i32 {
        match self {
            Kind::E | Kind::XiPlus => 1,
            Kind::F | Kind::XiMinus => -1,
            _ => 0,
        }
    }

    /// Exponent sign of a group-like kind (`k` is +1, `k⁻¹` is -1).
    pub fn group_sign(self) -> i32 {
        match self {
            Kind::KInv | Kind::GammaInv | Kind::GammaHalfInv => -1,
            _ => 1,
        }
    }
}

/// A generator symbol: kind, node and loop index (0 for non-loop kinds).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen {
    pub kind: Kind,
    pub node: u8,
    pub loop_index: i16,
}

impl Gen {
    pub fn new(kind: Kind, node: usize, loop_index: i32) -> Self {
        Gen { kind, node: node as u8, loop_index: loop_index as i16 }
    }

    pub fn e(i: usize) -> Self {
        Gen::new(Kind::E, i, 0)
    }
    pub fn f(i: usize) -> Self {
        Gen::new(Kind::F, i, 0)
    }
    pub fn k(i: usize) -> Self {
        Gen::new(Kind::K, i, 0)
    }
    pub fn k_inv(i: usize) -> Self {
        Gen::new(Kind::KInv, i, 0)
    }
    pub fn xi_plus(i: usize, r: i32) -> Self {
        Gen::new(Kind::XiPlus, i, r)
    }
    pub fn xi_minus(i: usize, r: i32) -> Self {
        Gen::new(Kind::XiMinus, i, r)
    }
    /// `ξ⁺` for `sign > 0`, `ξ⁻` otherwise.
    pub fn xi(sign: i32, i: usize, r: i32) -> Self {
        if sign > 0 {
            Gen::xi_plus(i, r)
        } else {
            Gen::xi_minus(i, r)
        }
    }
    pub fn kappa(i: usize, r: i32) -> Self {
        Gen::new(Kind::Kappa, i, r)
    }
    pub fn gamma(i: usize) -> Self {
        Gen::new(Kind::Gamma, i, 0)
    }
    pub fn gamma_inv(i: usize) -> Self {
        Gen::new(Kind::GammaInv, i, 0)
    }
    pub fn gamma_half() -> Self {
        Gen::new(Kind::GammaHalf, 0, 0)
    }
    pub fn gamma_half_inv() -> Self {
        Gen::new(Kind::GammaHalfInv, 0, 0)
    }
    pub fn constant() -> Self {
        Gen::new(Kind::Const, 0, 0)
    }
    pub fn sigma(i: usize) -> Self {
        Gen::new(Kind::Sigma, i, 0)
    }

    pub fn node(&self) -> usize {
        self.node as usize
    }

    pub fn loop_index(&self) -> i32 {
        self.loop_index as i32
    }

    pub fn is_grouplike(&self) -> bool {
        self.kind.is_grouplike()
    }

    pub fn inverse(&self) -> Option<Gen> {
        self.kind.inverse().map(|k| Gen { kind: k, ..*self })
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.node;
        let r = self.loop_index;
        match self.kind {
            Kind::E => write!(f, "e[{i}]"),
            Kind::F => write!(f, "f[{i}]"),
            Kind::K => write!(f, "k[{i}]"),
            Kind::KInv => write!(f, "k-[{i}]"),
            Kind::XiPlus => write!(f, "xi+[{i},{r}]"),
            Kind::XiMinus => write!(f, "xi-[{i},{r}]"),
            Kind::Kappa => write!(f, "kap[{i},{r}]"),
            Kind::Gamma => write!(f, "g[{i}]"),
            Kind::GammaInv => write!(f, "g-[{i}]"),
            Kind::GammaHalf => write!(f, "g^(1/2)"),
            Kind::GammaHalfInv => write!(f, "g^(-1/2)"),
            Kind::Const => write!(f, "c"),
            Kind::Sigma => write!(f, "sigma[{i}]"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Chevalley,
    Drinfeld,
}

/// Identifies one of the four presentations (at a given family and rank).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraTag {
    pub family: Family,
    pub n: usize,
    pub style: Style,
}

impl Serialize for AlgebraTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AlgebraTag", 3)?;
        st.serialize_field("family", self.family.short_name())?;
        st.serialize_field("rank", &self.n)?;
        st.serialize_field("style", &self.style)?;
        st.end()
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.style {
            Style::Chevalley => "U",
            Style::Drinfeld => "U^D",
        };
        write!(f, "{s}({}, n={})", self.family.long_name(), self.n)
    }
}
