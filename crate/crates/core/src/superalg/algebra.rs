use std::collections::BTreeMap;

use thiserror::Error;

use crate::cartan::{build_datum, gamma_g_exponents, CartanDatum, CartanError, Family};
use crate::scalars::{Scalar, UnitMonomial};

use super::element::{Element, Monomial};
use super::gens::{AlgebraTag, Gen, Kind, Style};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot combine elements of {left} and {right}")]
    MixedAlgebra { left: AlgebraTag, right: AlgebraTag },
    #[error("operand is not homogeneous in parity")]
    InhomogeneousParity,
    #[error("generator {0} is not in the alphabet of this presentation")]
    UnknownGenerator(String),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

/// Order in which structural reduction performs its swaps. All schedules give
/// the same result; the choice only exists so that this can be tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schedule {
    LeftmostFirst,
    RightmostFirst,
}

/// One of the four presentations at a fixed family and rank, optionally
/// extended by the sign group.
#[derive(Clone, Debug)]
pub struct Algebra {
    tag: AlgebraTag,
    datum: CartanDatum,
    smash: bool,
    /// `odd_mask[j]` has bit `i` set when `(α_i, α_j)` is odd.
    odd_mask: Vec<u32>,
}

impl Algebra {
    pub fn new(family: Family, n: usize, style: Style, smash: bool) -> Result<Self, AlgebraError> {
        let datum = build_datum(family, n)?;
        let odd_mask = (0..=n)
            .map(|j| (1..=n).filter(|&i| datum.gram[i][j].rem_euclid(2) == 1).fold(0u32, |acc, i| acc | (1 << i)))
            .collect();
        Ok(Algebra { tag: AlgebraTag { family, n, style }, datum, smash, odd_mask })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn family(&self) -> Family {
        self.tag.family
    }

    pub fn rank(&self) -> usize {
        self.tag.n
    }

    pub fn style(&self) -> Style {
        self.tag.style
    }

    pub fn is_smash(&self) -> bool {
        self.smash
    }

    /// The base `q^{1/2}` or `t^{1/2}` of all conjugation scalars.
    pub fn base(&self) -> UnitMonomial {
        self.datum.base()
    }

    pub fn validate_gen(&self, g: &Gen) -> Result<(), AlgebraError> {
        let n = self.tag.n;
        let i = g.node();
        let r = g.loop_index();
        let loops = self.datum.loop_set();
        let ok = match (self.tag.style, g.kind) {
            (Style::Chevalley, Kind::E | Kind::F | Kind::K | Kind::KInv) => i <= n && r == 0,
            (Style::Drinfeld, Kind::XiPlus | Kind::XiMinus) => (1..=n).contains(&i) && loops.contains(i, r),
            (Style::Drinfeld, Kind::Kappa) => (1..=n).contains(&i) && loops.contains_star(i, r),
            (Style::Drinfeld, Kind::Gamma | Kind::GammaInv) => (1..=n).contains(&i) && r == 0,
            (Style::Drinfeld, Kind::GammaHalf | Kind::GammaHalfInv | Kind::Const) => i == 0 && r == 0,
            (_, Kind::Sigma) => self.smash && (1..=n).contains(&i) && r == 0,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::UnknownGenerator(g.to_string()))
        }
    }

    pub fn validate(&self, x: &Element) -> Result<(), AlgebraError> {
        self.check_tag(x)?;
        for (m, _) in x.terms() {
            for g in &m.word {
                self.validate_gen(g)?;
            }
            for i in 0..32 {
                if m.sigma & (1 << i) != 0 {
                    self.validate_gen(&Gen::sigma(i))?;
                }
            }
        }
        Ok(())
    }

    fn check_tag(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.tag() != self.tag {
            return Err(AlgebraError::MixedAlgebra { left: self.tag, right: x.tag() });
        }
        Ok(())
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.tag)
    }

    pub fn one(&self) -> Element {
        Element::one(self.tag)
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(self.tag, c)
    }

    /// A single generator; σ symbols become sign-group monomials.
    pub fn gen(&self, g: Gen) -> Element {
        if g.kind == Kind::Sigma {
            return self.sigma(1 << g.node());
        }
        Element::gen(self.tag, g)
    }

    pub fn sigma(&self, mask: u32) -> Element {
        Element::monomial(self.tag, Monomial::sigma_mask(mask), Scalar::one())
    }

    /// Product of the given generators in order.
    pub fn word(&self, gens: &[Gen]) -> Element {
        gens.iter().fold(self.one(), |acc, g| self.mul(&acc, &self.gen(*g)))
    }

    pub fn gen_parity(&self, g: &Gen) -> bool {
        match g.kind {
            Kind::E | Kind::F | Kind::XiPlus | Kind::XiMinus => self.datum.is_odd(g.node()),
            _ => false,
        }
    }

    pub fn monomial_parity(&self, m: &Monomial) -> bool {
        m.word.iter().filter(|g| self.gen_parity(g)).count() % 2 == 1
    }

    /// `Some(p)` when every term has parity `p` (the zero element is even).
    pub fn parity(&self, x: &Element) -> Option<bool> {
        let mut it = x.terms().map(|(m, _)| self.monomial_parity(m));
        let first = it.next().unwrap_or(false);
        it.all(|p| p == first).then_some(first)
    }

    /// Coordinates of the weight in the basis `α_0, …, α_n`.
    pub fn monomial_weight(&self, m: &Monomial) -> Vec<i32> {
        let mut w = vec![0; self.tag.n + 1];
        for g in &m.word {
            let s = g.kind.weight_sign();
            if s != 0 {
                w[g.node()] += s;
            }
        }
        w
    }

    pub fn weight(&self, x: &Element) -> Option<Vec<i32>> {
        let mut it = x.terms().map(|(m, _)| self.monomial_weight(m));
        let first = it.next().unwrap_or_else(|| vec![0; self.tag.n + 1]);
        it.all(|w| w == first).then_some(first)
    }

    /// Whether moving `σ_mask` across `g` flips the sign.
    fn chi_flips(&self, mask: u32, g: &Gen) -> bool {
        g.kind.weight_sign() != 0 && (mask & self.odd_mask[g.node()]).count_ones() % 2 == 1
    }

    /// Sign `χ(σ_mask, w)` of moving a sign-group element across a word.
    pub fn chi(&self, mask: u32, word: &[Gen]) -> i64 {
        if word.iter().filter(|g| self.chi_flips(mask, g)).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> (i64, Monomial) {
        let sign = self.chi(b.sigma, &a.word);
        let mut word = Vec::with_capacity(a.word.len() + b.word.len());
        word.extend_from_slice(&a.word);
        word.extend_from_slice(&b.word);
        (sign, Monomial { sigma: a.sigma ^ b.sigma, word })
    }

    /// Product with σ-normalisation only.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        debug_assert_eq!(a.tag(), b.tag());
        let mut out = self.zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let (sign, m) = self.mul_monomials(ma, mb);
                let c = ca * cb;
                out.add_term(m, if sign < 0 { -c } else { c });
            }
        }
        out
    }

    pub fn checked_mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check_tag(a)?;
        self.check_tag(b)?;
        Ok(self.mul(a, b))
    }

    /// Product of a sequence of elements.
    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(&self, xs: I) -> Element {
        xs.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &Element, e: u32) -> Element {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Half-exponent of the base picked up when the group-like `g` moves right
    /// past `h`: `g h = base^m h g`.
    pub fn conj_exponent(&self, g: &Gen, h: &Gen) -> i32 {
        let s = h.kind.weight_sign();
        if s == 0 {
            return 0;
        }
        match g.kind {
            Kind::K | Kind::KInv | Kind::Gamma | Kind::GammaInv => {
                g.kind.group_sign() * s * 2 * self.datum.gram[g.node()][h.node()]
            }
            _ => 0,
        }
    }

    /// Structural reduction of a single monomial: group-like symbols moved to
    /// the right end, sorted, and inverse pairs cancelled.
    pub fn reduce_monomial(&self, m: &Monomial) -> (UnitMonomial, Monomial) {
        let mut exp = 0i32;
        let mut core = Vec::with_capacity(m.word.len());
        let mut pending: Vec<&Gen> = Vec::new();
        for g in &m.word {
            if g.is_grouplike() {
                pending.push(g);
            } else {
                exp += pending.iter().map(|p| self.conj_exponent(p, g)).sum::<i32>();
                core.push(*g);
            }
        }
        core.extend(canonical_tail(pending.into_iter()));
        (self.base().pow(exp), Monomial { sigma: m.sigma, word: core })
    }

    pub fn reduce(&self, x: &Element) -> Element {
        x.map_terms(|m, c| {
            let (u, m2) = self.reduce_monomial(m);
            (m2, c.mul_unit(u))
        })
    }

    /// Step-by-step reduction following a swap schedule. Returns the result
    /// and the number of swaps. Each swap lowers the number of
    /// (group-like, non-group-like) inversions by exactly one; this is checked.
    pub fn reduce_scheduled(&self, x: &Element, schedule: Schedule) -> (Element, usize) {
        let mut steps = 0;
        let out = x.map_terms(|m, c| {
            let mut w = m.word.clone();
            let mut exp = 0i32;
            let mut measure = inversions(&w);
            loop {
                let pos = match schedule {
                    Schedule::LeftmostFirst => (0..w.len().saturating_sub(1)).find(|&i| out_of_place(&w, i)),
                    Schedule::RightmostFirst => (0..w.len().saturating_sub(1)).rev().find(|&i| out_of_place(&w, i)),
                };
                let Some(i) = pos else { break };
                exp += self.conj_exponent(&w[i], &w[i + 1]);
                w.swap(i, i + 1);
                steps += 1;
                let next = inversions(&w);
                assert_eq!(next + 1, measure, "reduction measure must drop by one");
                measure = next;
            }
            let split = w.iter().position(|g| g.is_grouplike()).unwrap_or(w.len());
            let tail: Vec<Gen> = canonical_tail(w[split..].iter()).collect();
            w.truncate(split);
            w.extend(tail);
            (Monomial { sigma: m.sigma, word: w }, c.mul_unit(self.base().pow(exp)))
        });
        (out, steps)
    }

    /// `[x, y]_a = x y - (-1)^{[x][y]} a y x`.
    pub fn super_bracket(&self, x: &Element, y: &Element, a: &Scalar) -> Result<Element, AlgebraError> {
        self.check_tag(x)?;
        self.check_tag(y)?;
        let px = self.parity(x).ok_or(AlgebraError::InhomogeneousParity)?;
        let py = self.parity(y).ok_or(AlgebraError::InhomogeneousParity)?;
        let mut out = self.mul(x, y);
        let c = if px && py { a.clone() } else { -a };
        out.add_scaled(&self.mul(y, x), &c);
        Ok(out)
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.super_bracket(x, y, &Scalar::one())
    }

    /// The raising generator at node `i` and its group-like conjugator.
    fn raising(&self, i: usize) -> (Gen, Gen, Gen) {
        match self.tag.style {
            Style::Chevalley => (Gen::e(i), Gen::k(i), Gen::k_inv(i)),
            Style::Drinfeld => (Gen::xi_plus(i, 0), Gen::gamma(i), Gen::gamma_inv(i)),
        }
    }

    fn lowering(&self, i: usize) -> (Gen, Gen, Gen) {
        match self.tag.style {
            Style::Chevalley => (Gen::f(i), Gen::k_inv(i), Gen::k(i)),
            Style::Drinfeld => (Gen::xi_minus(i, 0), Gen::gamma_inv(i), Gen::gamma(i)),
        }
    }

    fn ad_with(&self, (e, k, k_inv): (Gen, Gen, Gen), x: &Element) -> Result<Element, AlgebraError> {
        self.check_tag(x)?;
        let px = self.parity(x).ok_or(AlgebraError::InhomogeneousParity)?;
        let e = self.gen(e);
        let mut out = self.mul(&e, x);
        let conj = self.product([&self.gen(k), x, &self.gen(k_inv), &e]);
        let sign = if px && self.parity(&e) == Some(true) { 1 } else { -1 };
        out.add_scaled(&conj, &Scalar::from_int(sign));
        Ok(self.reduce(&out))
    }

    /// `Ad_{e_i}(x) = e_i x - (-1)^{[e_i][x]} k_i x k_i^{-1} e_i`; in a Drinfeld
    /// presentation `e_i, k_i` are `ξ⁺_{i,0}, γ_i`. The result is reduced.
    pub fn ad_e(&self, i: usize, x: &Element) -> Result<Element, AlgebraError> {
        self.ad_with(self.raising(i), x)
    }

    /// `Ad_{f_i}(x) = f_i x - (-1)^{[f_i][x]} k_i^{-1} x k_i f_i`.
    pub fn ad_f(&self, i: usize, x: &Element) -> Result<Element, AlgebraError> {
        self.ad_with(self.lowering(i), x)
    }

    /// Applies `Ad` at the listed nodes, innermost last: `[a, b]` gives
    /// `Ad_a Ad_b (x)`.
    pub fn nested_ad(&self, raise: bool, nodes: &[usize], x: &Element) -> Result<Element, AlgebraError> {
        nodes.iter().rev().try_fold(x.clone(), |acc, &i| if raise { self.ad_e(i, &acc) } else { self.ad_f(i, &acc) })
    }

    /// `γ_g` (or its inverse) for the family.
    pub fn gamma_g(&self, inverse: bool) -> Element {
        let exps = gamma_g_exponents(self.tag.family, self.tag.n);
        let mut word = Vec::new();
        for (idx, &e) in exps.iter().enumerate() {
            let g = if inverse { Gen::gamma_inv(idx + 1) } else { Gen::gamma(idx + 1) };
            word.extend(std::iter::repeat(g).take(e as usize));
        }
        Element::monomial(self.tag, Monomial::from_word(word), Scalar::one())
    }

    /// The central element `γ^{m/2}`.
    pub fn gamma_half_pow(&self, m: i32) -> Element {
        let g = if m >= 0 { Gen::gamma_half() } else { Gen::gamma_half_inv() };
        Element::monomial(self.tag, Monomial::from_word(vec![g; m.unsigned_abs() as usize]), Scalar::one())
    }

    pub fn equal_mod_structure(&self, a: &Element, b: &Element) -> bool {
        self.reduce(&(a - b)).is_zero()
    }
}

/// Sum over all orderings of `values` (with repetition when values coincide).
pub fn sym_over<F: FnMut(&[i32]) -> Element>(zero: Element, values: &[i32], mut f: F) -> Element {
    let mut out = zero;
    let mut perm = values.to_vec();
    permute(&mut perm, 0, &mut |p| {
        let term = f(p);
        out.add_scaled(&term, &Scalar::one());
    });
    out
}

fn permute<F: FnMut(&[i32])>(v: &mut Vec<i32>, k: usize, f: &mut F) {
    if k + 1 >= v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

fn out_of_place(w: &[Gen], i: usize) -> bool {
    w[i].is_grouplike() && !w[i + 1].is_grouplike()
}

fn inversions(w: &[Gen]) -> usize {
    let mut seen = 0;
    let mut inv = 0;
    for g in w {
        if g.is_grouplike() {
            seen += 1;
        } else {
            inv += seen;
        }
    }
    inv
}

fn tail_class(k: Kind) -> Kind {
    match k {
        Kind::KInv => Kind::K,
        Kind::GammaInv => Kind::Gamma,
        Kind::GammaHalfInv => Kind::GammaHalf,
        other => other,
    }
}

/// Sorted group-like tail with inverse pairs cancelled.
fn canonical_tail<'a, I: Iterator<Item = &'a Gen>>(gens: I) -> impl Iterator<Item = Gen> {
    let mut exps: BTreeMap<(Kind, u8), i32> = BTreeMap::new();
    for g in gens {
        *exps.entry((tail_class(g.kind), g.node)).or_insert(0) += g.kind.group_sign();
    }
    exps.into_iter().flat_map(|((kind, node), e)| {
        let g = Gen { kind, node, loop_index: 0 };
        let g = if e < 0 { g.inverse().unwrap_or(g) } else { g };
        std::iter::repeat(g).take(e.unsigned_abs() as usize)
    })
}
