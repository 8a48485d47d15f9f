use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::morphisms::{GeneratorMap, MapError};
use crate::presentations::{Presentation, Relation};
use crate::scalars::Scalar;
use crate::superalg::{format_element, AlgebraError, AlgebraTag, Element, Kind, Monomial};

use super::echelon::{Combination, Echelon, Vector};
use super::index::{Placement, RelationIndex};
use super::{Budget, CertificateTerm, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("target window {target:?} is smaller than the {required} needed by the source")]
    WindowMismatch { required: i32, target: Option<i32> },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The exact structural rules only: σ's fronted, group-likes moved right with
/// their unit factors, inverse pairs cancelled.
pub fn fast_reduce(x: &Element, pres: &Presentation) -> Element {
    pres.algebra.reduce(x)
}

/// Incremental search state: candidates generated so far and their echelon
/// basis.
pub(crate) struct Search<'a> {
    index: &'a RelationIndex,
    budget: &'a Budget,
    ech: Echelon,
    cands: Vec<Placement>,
    seen: HashSet<Placement>,
    divided: HashSet<Monomial>,
    expanded: HashSet<Monomial>,
    steps: usize,
    rounds: usize,
}

pub(crate) enum Growth {
    Grew,
    Closed,
    OutOfBudget,
}

impl<'a> Search<'a> {
    pub(crate) fn new(index: &'a RelationIndex, budget: &'a Budget) -> Self {
        Search {
            index,
            budget,
            ech: Echelon::default(),
            cands: Vec::new(),
            seen: HashSet::new(),
            divided: HashSet::new(),
            expanded: HashSet::new(),
            steps: 0,
            rounds: 0,
        }
    }

    pub(crate) fn residual(&self, x: &Element) -> (Vector, Combination) {
        let mut v: Vector = x.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut combo = Combination::new();
        self.ech.reduce(&mut v, &mut combo);
        (v, combo)
    }

    pub(crate) fn certificate(&self, combo: &Combination) -> Vec<CertificateTerm> {
        combo.iter().map(|(k, c)| CertificateTerm { placement: self.cands[*k].clone(), coeff: -c }).collect()
    }

    /// One round. Prefers division steps: multiples of a relation whose
    /// leading monomial is the largest residual monomial. When none exist it
    /// adds every multiple touching that monomial, and once the residual is
    /// exhausted it sweeps all unexpanded monomials of the basis.
    pub(crate) fn grow(&mut self, residuals: &[&Vector]) -> Growth {
        let max_len = self.budget.max_len;
        if self.rounds >= self.budget.max_rounds
            || self.steps >= self.budget.max_steps
            || self.ech.len() >= self.budget.max_basis
        {
            return Growth::OutOfBudget;
        }
        let in_len = |m: &&Monomial| m.len() <= max_len;
        let lead_of = |done: &HashSet<Monomial>| {
            residuals.iter().flat_map(|r| r.keys()).filter(in_len).filter(|m| !done.contains(*m)).max().cloned()
        };
        self.rounds += 1;
        if let Some(m) = lead_of(&self.divided) {
            self.divided.insert(m.clone());
            match self.expand(&m, true) {
                Some(0) => {}
                Some(_) => return Growth::Grew,
                None => return Growth::OutOfBudget,
            }
            self.expanded.insert(m.clone());
            return match self.expand(&m, false) {
                Some(_) => Growth::Grew,
                None => Growth::OutOfBudget,
            };
        }
        let mut todo: BTreeSet<Monomial> = lead_of(&self.expanded).into_iter().collect();
        if todo.is_empty() {
            todo = self.ech.monomials().filter(in_len).filter(|m| !self.expanded.contains(*m)).cloned().collect();
        }
        if todo.is_empty() {
            return Growth::Closed;
        }
        for m in todo.into_iter().rev() {
            self.divided.insert(m.clone());
            self.expanded.insert(m.clone());
            if self.expand(&m, false).is_none() {
                return Growth::OutOfBudget;
            }
        }
        Growth::Grew
    }

    /// Adds the multiples touching `m` (only those led by `m` when
    /// `heads_only`); returns how many were new, `None` on budget overrun.
    fn expand(&mut self, m: &Monomial, heads_only: bool) -> Option<usize> {
        let mut added = 0;
        for p in self.index.placements(m, self.budget.window) {
            if self.seen.contains(&p) {
                continue;
            }
            let v = self.index.expand(&p);
            if heads_only && v.leading().map(|(l, _)| l) != Some(m) {
                continue;
            }
            self.seen.insert(p.clone());
            if v.is_zero() || v.max_len() > self.budget.max_len {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget.max_steps {
                return None;
            }
            if self.ech.insert(self.cands.len(), v.into_terms()) && self.ech.len() > self.budget.max_basis {
                return None;
            }
            self.cands.push(p);
            added += 1;
        }
        Some(added)
    }
}

/// Re-multiplies a certificate.
pub fn recombine(index: &RelationIndex, cert: &[CertificateTerm]) -> Element {
    let mut out = index.algebra.zero();
    for t in cert {
        out.add_scaled(&index.expand(&t.placement), &t.coeff);
    }
    out
}

/// Decides whether `x` lies in the two-sided ideal spanned by the indexed
/// relations, up to the budget. Verified certificates are re-multiplied and
/// compared with `x` before being returned.
pub fn check_zero(x: &Element, index: &RelationIndex, budget: &Budget) -> Verdict {
    let x = index.algebra.reduce(x);
    if x.is_zero() {
        return Verdict::Verified { certificate: Vec::new() };
    }
    if x.max_len() > budget.max_len {
        return Verdict::BudgetExceeded;
    }
    let mut search = Search::new(index, budget);
    loop {
        let (res, combo) = search.residual(&x);
        if res.is_empty() {
            let cert = search.certificate(&combo);
            let back = recombine(index, &cert);
            if back != x {
                return Verdict::NonzeroAtBound { residual: &x - &back };
            }
            return Verdict::Verified { certificate: cert };
        }
        match search.grow(&[&res]) {
            Growth::Grew => {}
            Growth::Closed => return Verdict::NonzeroAtBound { residual: Element::from_terms(x.tag(), res) },
            Growth::OutOfBudget => return Verdict::BudgetExceeded,
        }
    }
}

/// Which source relations a morphism check covers.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RelationFilter {
    /// Relation names; a trailing `*` matches a prefix. `None` selects all.
    pub names: Option<Vec<String>>,
    pub skip_structural: bool,
}

impl RelationFilter {
    pub fn names<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> Self {
        RelationFilter { names: Some(names.into_iter().map(Into::into).collect()), skip_structural: false }
    }

    pub fn matches(&self, rel: &Relation) -> bool {
        if self.skip_structural && rel.structural {
            return false;
        }
        match &self.names {
            None => true,
            Some(ns) => ns.iter().any(|f| match f.strip_suffix('*') {
                Some(p) => rel.name.starts_with(p),
                None => rel.name == *f,
            }),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub relation: String,
    pub name: String,
    pub verdict: &'static str,
    pub certificate_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct RelationSummary {
    pub name: String,
    pub instances: usize,
    pub verified: usize,
    pub nonzero_at_bound: usize,
    pub budget_exceeded: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismReport {
    pub map: String,
    pub source: AlgebraTag,
    pub target: AlgebraTag,
    pub all_verified: bool,
    pub summaries: Vec<RelationSummary>,
    pub instances: Vec<InstanceResult>,
}

impl MorphismReport {
    pub fn strip_timings(&mut self) {
        for i in &mut self.instances {
            i.millis = None;
        }
    }

    pub fn summary(&self, name: &str) -> Option<&RelationSummary> {
        self.summaries.iter().find(|s| s.name == name)
    }
}

fn max_loop(x: &Element) -> i32 {
    x.terms().flat_map(|(m, _)| m.word.iter()).map(|g| g.loop_index().abs()).max().unwrap_or(0)
}

/// Applies `map` to every selected relation of `source` and checks the image
/// against `target`. Instances run in parallel; output order is the
/// catalogue order.
pub fn check_morphism(
    map: &GeneratorMap,
    source: &Presentation,
    target: &Presentation,
    filter: &RelationFilter,
    budget: &Budget,
) -> Result<MorphismReport, VerifyError> {
    for (want, got) in [(map.source.tag(), source.algebra.tag()), (map.target.tag(), target.algebra.tag())] {
        if want != got {
            return Err(AlgebraError::MixedAlgebra { left: want, right: got }.into());
        }
    }
    let selected: Vec<&Relation> = source.relations.iter().filter(|r| filter.matches(r)).collect();
    let images: Vec<Element> =
        selected.iter().map(|r| map.apply(&r.element)).collect::<Result<_, _>>()?;
    let window = budget.window.or(target.window);
    if let Some(w) = window {
        let required = images.iter().map(max_loop).max().unwrap_or(0).max(source.window.unwrap_or(0));
        if required > w {
            return Err(VerifyError::WindowMismatch { required, target: window });
        }
    }
    let index = RelationIndex::new(target);
    let instances: Vec<InstanceResult> = selected
        .par_iter()
        .zip(images.par_iter())
        .map(|(rel, img)| {
            let start = Instant::now();
            let v = check_zero(img, &index, budget);
            let (size, residual) = match &v {
                Verdict::Verified { certificate } => (certificate.len(), None),
                Verdict::NonzeroAtBound { residual } => (0, Some(format_element(residual))),
                Verdict::BudgetExceeded => (0, None),
            };
            InstanceResult {
                relation: rel.to_string(),
                name: rel.name.clone(),
                verdict: v.kind(),
                certificate_size: size,
                residual,
                millis: Some(start.elapsed().as_secs_f64() * 1e3),
            }
        })
        .collect();
    let mut by_name: BTreeMap<&str, RelationSummary> = BTreeMap::new();
    for r in &instances {
        let s = by_name.entry(&r.name).or_insert_with(|| RelationSummary { name: r.name.clone(), ..Default::default() });
        s.instances += 1;
        match r.verdict {
            "verified" => s.verified += 1,
            "nonzero-at-bound" => s.nonzero_at_bound += 1,
            _ => s.budget_exceeded += 1,
        }
    }
    Ok(MorphismReport {
        map: map.label.clone(),
        source: source.algebra.tag(),
        target: target.algebra.tag(),
        all_verified: instances.iter().all(|r| r.verdict == "verified"),
        summaries: by_name.into_values().collect(),
        instances,
    })
}

/// Replaces the symbolic constant by `c` in every term.
pub fn specialize_constant(x: &Element, c: &Scalar) -> Element {
    x.map_terms(|m, k| {
        let n = m.word.iter().filter(|g| g.kind == Kind::Const).count();
        let word = m.word.iter().filter(|g| g.kind != Kind::Const).copied().collect();
        (Monomial { sigma: m.sigma, word }, k * &c.pow(n as i32))
    })
}
