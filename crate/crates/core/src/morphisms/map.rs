use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::scalars::{Scalar, ScalarError};
use crate::superalg::{Algebra, AlgebraError, Element, Gen, Kind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("map {map} has no image for {gen}")]
    NotInDomain { map: String, gen: String },
    #[error("image under {0} leaves the σ-free part")]
    NotSigmaFree(String),
}

pub type Rule = dyn Fn(&Algebra, &Gen) -> Result<Element, MapError> + Send + Sync;

/// A homomorphism given by generator images and extended multiplicatively.
#[derive(Clone)]
pub struct GeneratorMap {
    pub label: String,
    pub source: Algebra,
    pub target: Algebra,
    rule: Arc<Rule>,
    cache: Arc<Mutex<HashMap<Gen, Element>>>,
}

impl fmt::Debug for GeneratorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorMap({}: {} -> {})", self.label, self.source.tag(), self.target.tag())
    }
}

impl GeneratorMap {
    pub fn new<F>(label: &str, source: Algebra, target: Algebra, rule: F) -> Self
    where
        F: Fn(&Algebra, &Gen) -> Result<Element, MapError> + Send + Sync + 'static,
    {
        GeneratorMap { label: label.to_string(), source, target, rule: Arc::new(rule), cache: Arc::default() }
    }

    /// Image of one generator (σ symbols included).
    pub fn image(&self, g: &Gen) -> Result<Element, MapError> {
        if let Some(x) = self.cache.lock().expect("cache lock").get(g) {
            return Ok(x.clone());
        }
        self.source.validate_gen(g)?;
        let x = (self.rule)(&self.target, g)?;
        let x = self.target.reduce(&x);
        self.cache.lock().expect("cache lock").insert(*g, x.clone());
        Ok(x)
    }

    /// Linear, multiplicative extension; the output is structurally reduced.
    pub fn apply(&self, x: &Element) -> Result<Element, MapError> {
        if x.tag() != self.source.tag() {
            return Err(AlgebraError::MixedAlgebra { left: self.source.tag(), right: x.tag() }.into());
        }
        let t = &self.target;
        let mut out = t.zero();
        for (m, c) in x.terms() {
            let mut acc = t.one();
            for i in 0..32 {
                if m.sigma & (1 << i) != 0 {
                    acc = t.mul(&acc, &self.image(&Gen::sigma(i))?);
                }
            }
            for g in &m.word {
                acc = t.mul(&acc, &self.image(g)?);
            }
            out.add_scaled(&acc, c);
        }
        Ok(t.reduce(&out))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GeneratorMap, label: &str) -> GeneratorMap {
        let outer = self.clone();
        let inner = inner.clone();
        GeneratorMap::new(label, inner.source.clone(), self.target.clone(), move |_, g| {
            let mid = inner.image(g)?;
            outer.apply(&mid)
        })
    }
}

/// True for the symbols a Drinfeld-side map fixes by name (central `γ^{±1/2}`
/// and the symbolic constant).
pub(crate) fn is_central_symbol(g: &Gen) -> bool {
    matches!(g.kind, Kind::GammaHalf | Kind::GammaHalfInv | Kind::Const)
}

impl GeneratorMap {
    /// The same map with the symbolic constant replaced by `c`.
    pub fn with_constant(&self, c: Scalar) -> GeneratorMap {
        let inner = self.clone();
        GeneratorMap::new(&self.label, self.source.clone(), self.target.clone(), move |_, g| {
            Ok(crate::verify::specialize_constant(&inner.image(g)?, &c))
        })
    }
}
