use crate::cartan::{Family, Shape};
use crate::scalars::{o_sign_power, GaussRational, Scalar};
use crate::superalg::{Algebra, Element, Gen, Kind, Style};

use super::map::{is_central_symbol, GeneratorMap, MapError};

/// Bits `σ_j … σ_n` (empty when `j > n`).
pub fn tail_mask(j: usize, n: usize) -> u32 {
    (j.max(1)..=n).fold(0, |acc, k| acc | (1 << k))
}

/// `Φ_j = σ_j σ_{j+1} ⋯ σ_n` in `alg`, the empty product when `j = n + 1`.
pub fn sigma_tail_word(alg: &Algebra, j: usize) -> Element {
    alg.sigma(tail_mask(j, alg.rank()))
}

fn mask_of(nodes: impl IntoIterator<Item = usize>, n: usize) -> u32 {
    nodes.into_iter().filter(|&k| (1..=n).contains(&k)).fold(0, |acc, k| acc | (1 << k))
}

/// `(ι_e, ι_f)` as sign-group masks.
fn iota(family: Family, n: usize) -> (u32, u32) {
    match family.shape() {
        Shape::Osp1 => (0, 0),
        Shape::Sl2 => (mask_of(2..=n, n), mask_of(1..=n, n)),
        Shape::Osp22 => (mask_of((0..=n).map(|i| 2 + 2 * i), n), mask_of((0..=n).map(|i| 1 + 2 * i), n)),
    }
}

/// Nodes of the nested `Ad` in the images of `e_0`, `f_0`, outermost first,
/// and the node of the innermost generator.
pub fn affine_ad_nodes(family: Family, n: usize) -> (Vec<usize>, usize) {
    match family.shape() {
        Shape::Osp1 if n == 1 => (vec![1], 1),
        Shape::Osp1 => ((1..=n).chain(std::iter::once(n)).chain((2..n).rev()).collect(), 1),
        Shape::Sl2 if n == 1 => (Vec::new(), 1),
        Shape::Sl2 => ((2..=n).chain(std::iter::once(n)).chain((2..n).rev()).collect(), 1),
        Shape::Osp22 => ((1..n).collect(), n),
    }
}

/// Images of `e_0, f_0, k_0, k_0^{-1}` in a Drinfeld presentation, with the
/// symbolic constant `c` in front of the `f_0` image.
pub fn affine_node_images(alg: &Algebra) -> Result<[Element; 4], MapError> {
    let (nodes, inner) = affine_ad_nodes(alg.family(), alg.rank());
    let gamma = alg.gamma_half_pow(2);
    let gamma_inv = alg.gamma_half_pow(-2);
    let k0 = alg.mul(&gamma, &alg.gamma_g(true));
    let k0_inv = alg.mul(&gamma_inv, &alg.gamma_g(false));
    let e = alg.nested_ad(false, &nodes, &alg.gen(Gen::xi_minus(inner, 1)))?;
    let f = alg.nested_ad(true, &nodes, &alg.gen(Gen::xi_plus(inner, -1)))?;
    let e0 = alg.mul(&e, &k0);
    let f0 = alg.product([&alg.gen(Gen::constant()), &k0_inv, &f]);
    Ok([alg.reduce(&e0), alg.reduce(&f0), k0, k0_inv])
}

/// Chevalley-to-Drinfeld images (`e_i ↦ ξ⁺_{i,0}` etc. and the node-0 words).
fn drinfeld_image(t: &Algebra, g: &Gen, label: &str) -> Result<Element, MapError> {
    let i = g.node();
    Ok(match g.kind {
        Kind::E if i > 0 => t.gen(Gen::xi_plus(i, 0)),
        Kind::F if i > 0 => t.gen(Gen::xi_minus(i, 0)),
        Kind::K if i > 0 => t.gen(Gen::gamma(i)),
        Kind::KInv if i > 0 => t.gen(Gen::gamma_inv(i)),
        Kind::E | Kind::F | Kind::K | Kind::KInv => {
            let [e0, f0, k0, k0_inv] = affine_node_images(t)?;
            match g.kind {
                Kind::E => e0,
                Kind::F => f0,
                Kind::K => k0,
                _ => k0_inv,
            }
        }
        Kind::Sigma => t.gen(*g),
        _ => return Err(MapError::NotInDomain { map: label.to_string(), gen: g.to_string() }),
    })
}

/// `ψ`: the quantum correspondence between the smash-extended Chevalley
/// presentations of `g` and its partner.
pub fn psi_map(family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let source = Algebra::new(family, n, Style::Chevalley, true)?;
    let target = Algebra::new(family.partner(), n, Style::Chevalley, true)?;
    let (ie, if_) = iota(family, n);
    Ok(GeneratorMap::new("psi", source, target, move |t, g| {
        let i = g.node();
        let dressed = |mask: u32, x: Gen| t.mul(&t.sigma(mask), &t.gen(x));
        Ok(match (g.kind, i) {
            (Kind::E, 0) => dressed(ie, *g),
            (Kind::F, 0) => dressed(if_, *g),
            (Kind::K | Kind::KInv, 0) => dressed(ie ^ if_, *g),
            (Kind::E, _) => dressed(tail_mask(i + 1, n), *g),
            (Kind::F, _) => dressed(tail_mask(i, n), *g),
            (Kind::K | Kind::KInv, _) => dressed(1 << i, *g),
            (Kind::Sigma, _) => t.gen(*g),
            _ => return Err(MapError::NotInDomain { map: "psi".into(), gen: g.to_string() }),
        })
    }))
}

fn sign_scalar(z: GaussRational) -> Scalar {
    Scalar::from_gauss(z)
}

/// Shared rule of `φ` and `φ⁻¹`; `fam` is the super family fixing `o` and `c`.
fn phi_rule(t: &Algebra, g: &Gen, fam: Family, label: &str) -> Result<Element, MapError> {
    let n = t.rank();
    let i = g.node();
    let r = g.loop_index();
    let o = || o_sign_power(n, fam, i, r).map(sign_scalar);
    Ok(match g.kind {
        _ if is_central_symbol(g) => t.gen(*g),
        Kind::Kappa => t.gen(*g).scale(&-o()?),
        Kind::Gamma | Kind::GammaInv => t.mul(&t.sigma(1 << i), &t.gen(*g)),
        Kind::Sigma => t.gen(*g),
        Kind::XiPlus => t.mul(&t.sigma(tail_mask(i + 1, n)), &t.gen(*g)).scale(&o()?),
        Kind::XiMinus => t.mul(&t.sigma(tail_mask(i, n)), &t.gen(*g)).scale(&o()?),
        _ => return Err(MapError::NotInDomain { map: label.to_string(), gen: g.to_string() }),
    })
}

/// `φ`: smash-extended Drinfeld presentation of `g` to that of its partner.
pub fn phi_map(family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let source = Algebra::new(family, n, Style::Drinfeld, true)?;
    let target = Algebra::new(family.partner(), n, Style::Drinfeld, true)?;
    Ok(GeneratorMap::new("phi", source, target, move |t, g| phi_rule(t, g, family, "phi")))
}

/// `φ⁻¹`.
pub fn phi_inverse(family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let source = Algebra::new(family.partner(), n, Style::Drinfeld, true)?;
    let target = Algebra::new(family, n, Style::Drinfeld, true)?;
    Ok(GeneratorMap::new("phi-inv", source, target, move |t, g| phi_rule(t, g, family, "phi-inv")))
}

/// `ρ`: Drinfeld's isomorphism for the partner family (identity on the sign
/// group). `family` is the dual family.
pub fn rho_map(family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let source = Algebra::new(family, n, Style::Chevalley, true)?;
    let target = Algebra::new(family, n, Style::Drinfeld, true)?;
    Ok(GeneratorMap::new("rho", source, target, |t, g| drinfeld_image(t, g, "rho")))
}

/// `Ψ` from the displayed images.
pub fn psi_cap(family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let source = Algebra::new(family, n, Style::Chevalley, false)?;
    let target = Algebra::new(family, n, Style::Drinfeld, false)?;
    Ok(GeneratorMap::new("Psi", source, target, |t, g| drinfeld_image(t, g, "Psi")))
}

/// `Ψ` obtained as `φ⁻¹ ∘ ρ ∘ ψ` restricted to the σ-free part.
pub fn psi_cap_composed(family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let whole = phi_inverse(family, n)?.compose(&rho_map(family.partner(), n)?.compose(&psi_map(family, n)?, "rho.psi"), "Phi");
    let source = Algebra::new(family, n, Style::Chevalley, false)?;
    let target = Algebra::new(family, n, Style::Drinfeld, false)?;
    Ok(GeneratorMap::new("Psi-composed", source, target, move |_, g| {
        let x = whole.image(g)?;
        if x.terms().any(|(m, _)| m.sigma != 0) {
            return Err(MapError::NotSigmaFree(g.to_string()));
        }
        Ok(x)
    }))
}

/// Looks a map up by its CLI name.
pub fn map_by_name(name: &str, family: Family, n: usize) -> Result<GeneratorMap, MapError> {
    let sup = if family.is_super() { family } else { family.partner() };
    match name {
        "psi" => psi_map(sup, n),
        "phi" => phi_map(sup, n),
        "phi-inv" => phi_inverse(sup, n),
        "rho" => rho_map(sup.partner(), n),
        "Psi" => psi_cap(sup, n),
        "Psi-composed" => psi_cap_composed(sup, n),
        _ => Err(MapError::NotInDomain { map: name.to_string(), gen: String::new() }),
    }
}

/// Ratio `Ψ_composed(g) / Ψ_direct(g)` for one Chevalley generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiAgreement {
    pub gen: Gen,
    /// `Some(λ)` when the two images are proportional, `None` otherwise.
    pub ratio: Option<Scalar>,
}

impl PsiAgreement {
    pub fn exact(&self) -> bool {
        self.ratio.as_ref().is_some_and(Scalar::is_one)
    }
}

/// Compares both constructions of `Ψ` on every Chevalley generator.
pub fn psi_agreement(family: Family, n: usize) -> Result<Vec<PsiAgreement>, MapError> {
    let direct = psi_cap(family, n)?;
    let composed = psi_cap_composed(family, n)?;
    let mut out = Vec::new();
    for i in 0..=n {
        for g in [Gen::e(i), Gen::f(i), Gen::k(i), Gen::k_inv(i)] {
            let a = direct.image(&g)?;
            let b = composed.image(&g)?;
            out.push(PsiAgreement { gen: g, ratio: proportionality(&a, &b) });
        }
    }
    Ok(out)
}

/// `λ` with `b = λ a`, if any.
pub fn proportionality(a: &Element, b: &Element) -> Option<Scalar> {
    let (m, ca) = a.leading()?;
    let ratio = &b.coeff(m) / ca;
    (!ratio.is_zero() && a.scale(&ratio) == *b).then_some(ratio)
}
