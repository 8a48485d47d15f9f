use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalars::Scalar;

use super::gens::{AlgebraTag, Gen};

/// A sign-group part (bit `i` set means `σ_i` is present) followed by a word
/// of non-σ generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub sigma: u32,
    pub word: Vec<Gen>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_word(word: Vec<Gen>) -> Self {
        Monomial { sigma: 0, word }
    }

    pub fn gen(g: Gen) -> Self {
        Monomial { sigma: 0, word: vec![g] }
    }

    pub fn sigma_mask(mask: u32) -> Self {
        Monomial { sigma: mask, word: Vec::new() }
    }

    pub fn is_one(&self) -> bool {
        self.sigma == 0 && self.word.is_empty()
    }

    /// Number of symbols, counting each σ once.
    pub fn len(&self) -> usize {
        self.word.len() + self.sigma.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    /// Symbols that are not group-like, in order.
    pub fn core(&self) -> impl Iterator<Item = &Gen> + '_ {
        self.word.iter().filter(|g| !g.is_grouplike())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.sigma.cmp(&other.sigma))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    tag: AlgebraTag,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero(tag: AlgebraTag) -> Self {
        Element { tag, terms: BTreeMap::new() }
    }

    pub fn one(tag: AlgebraTag) -> Self {
        Element::monomial(tag, Monomial::one(), Scalar::one())
    }

    pub fn scalar(tag: AlgebraTag, c: Scalar) -> Self {
        Element::monomial(tag, Monomial::one(), c)
    }

    pub fn monomial(tag: AlgebraTag, m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero(tag);
        e.add_term(m, c);
        e
    }

    pub fn gen(tag: AlgebraTag, g: Gen) -> Self {
        Element::monomial(tag, Monomial::gen(g), Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(tag: AlgebraTag, terms: I) -> Self {
        let mut e = Element::zero(tag);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    /// Same terms, relabelled as an element of another presentation.
    pub fn retag(mut self, tag: AlgebraTag) -> Self {
        self.tag = tag;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Length of the longest monomial (0 for the zero element).
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }

    /// The scalar value if the element is a multiple of 1.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// The leading (largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        debug_assert_eq!(self.tag, other.tag, "mixed algebras");
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.tag);
        }
        Element { tag: self.tag, terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect() }
    }

    /// Applies `f` to every monomial and re-collects.
    pub fn map_terms<F: FnMut(&Monomial, &Scalar) -> (Monomial, Scalar)>(&self, mut f: F) -> Element {
        let mut out = Element::zero(self.tag);
        for (m, c) in &self.terms {
            let (m2, c2) = f(m, c);
            out.add_term(m2, c2);
        }
        out
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self.add_scaled(&rhs, &Scalar::one());
        self
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self.add_scaled(&rhs, &Scalar::from_int(-1));
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}
