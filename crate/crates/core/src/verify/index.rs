use std::collections::{BTreeMap, HashMap};

use crate::presentations::Presentation;
use crate::superalg::{Algebra, Element, Gen, Kind, Monomial};

/// Key of a group-like symbol up to inversion.
fn tail_key(g: &Gen) -> (Kind, usize) {
    let base = match g.kind {
        Kind::KInv => Kind::K,
        Kind::GammaInv => Kind::Gamma,
        Kind::GammaHalfInv => Kind::GammaHalf,
        k => k,
    };
    (base, g.node())
}

fn tail_exponents<'a>(gs: impl Iterator<Item = &'a Gen>) -> BTreeMap<(Kind, usize), i32> {
    let mut out = BTreeMap::new();
    for g in gs.filter(|g| g.is_grouplike()) {
        let s = if matches!(g.kind, Kind::KInv | Kind::GammaInv | Kind::GammaHalfInv) { -1 } else { 1 };
        *out.entry(tail_key(g)).or_insert(0) += s;
    }
    out
}

/// Group-like word `G` with `tail(t)·G = tail(m)`; `None` if it needs `c⁻¹`.
fn tail_quotient(m: &Monomial, t: &Monomial) -> Option<Vec<Gen>> {
    let mut e = tail_exponents(m.word.iter());
    for (k, v) in tail_exponents(t.word.iter()) {
        *e.entry(k).or_insert(0) -= v;
    }
    let mut word = Vec::new();
    for ((kind, node), v) in e {
        if v == 0 {
            continue;
        }
        let g = Gen::new(kind, node, 0);
        let g = if v > 0 { g } else { g.inverse()? };
        word.extend(std::iter::repeat(g).take(v.unsigned_abs() as usize));
    }
    Some(word)
}

/// One two-sided multiple `σ_L w_L · rel · w_R G`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Placement {
    pub relation: usize,
    pub left: Monomial,
    pub right: Monomial,
}

/// Reduced working relations of a presentation, indexed by the core words of
/// their terms.
pub struct RelationIndex {
    pub algebra: Algebra,
    pub window: Option<i32>,
    pub names: Vec<String>,
    pub relations: Vec<Element>,
    by_core: HashMap<Vec<Gen>, Vec<(usize, Monomial)>>,
    empty_core: Vec<(usize, Monomial)>,
}

impl RelationIndex {
    pub fn new(pres: &Presentation) -> Self {
        let alg = pres.algebra.clone();
        let mut idx = RelationIndex {
            algebra: alg.clone(),
            window: pres.window,
            names: Vec::new(),
            relations: Vec::new(),
            by_core: HashMap::new(),
            empty_core: Vec::new(),
        };
        for rel in pres.working() {
            let x = alg.reduce(&rel.element);
            if x.is_zero() {
                continue;
            }
            let k = idx.relations.len();
            for (m, _) in x.terms() {
                let core: Vec<Gen> = m.core().copied().collect();
                if core.is_empty() {
                    idx.empty_core.push((k, m.clone()));
                } else {
                    idx.by_core.entry(core).or_default().push((k, m.clone()));
                }
            }
            idx.names.push(rel.to_string());
            idx.relations.push(x);
        }
        idx
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    fn in_window(window: Option<i32>, word: &[Gen]) -> bool {
        match window {
            Some(w) => word.iter().all(|g| g.loop_index().abs() <= w),
            None => true,
        }
    }

    /// All placements that produce `m` from one of the relation terms, with
    /// the multiplying words inside `window` (default: the presentation's).
    pub fn placements(&self, m: &Monomial, window: Option<i32>) -> Vec<Placement> {
        let window = window.or(self.window);
        let core: Vec<Gen> = m.core().copied().collect();
        let mut out = Vec::new();
        let mut push = |k: usize, t: &Monomial, a: usize, b: usize| {
            let Some(tail) = tail_quotient(m, t) else { return };
            let left = Monomial { sigma: m.sigma ^ t.sigma, word: core[..a].to_vec() };
            let mut right = core[b..].to_vec();
            right.extend(tail);
            if !Self::in_window(window, &left.word) || !Self::in_window(window, &right) {
                return;
            }
            out.push(Placement { relation: k, left, right: Monomial::from_word(right) });
        };
        if core.is_empty() {
            for (k, t) in &self.empty_core {
                push(*k, t, 0, 0);
            }
        }
        for a in 0..core.len() {
            for b in a + 1..=core.len() {
                if let Some(hits) = self.by_core.get(&core[a..b]) {
                    for (k, t) in hits {
                        push(*k, t, a, b);
                    }
                }
            }
        }
        out
    }

    /// `σ_L w_L · rel · w_R`, reduced.
    pub fn expand(&self, p: &Placement) -> Element {
        let a = &self.algebra;
        let tag = a.tag();
        let l = Element::monomial(tag, p.left.clone(), crate::scalars::Scalar::one());
        let r = Element::monomial(tag, p.right.clone(), crate::scalars::Scalar::one());
        a.reduce(&a.product([&l, &self.relations[p.relation], &r]))
    }
}
