use std::collections::{BTreeMap, HashMap};

use crate::scalars::Scalar;
use crate::superalg::Monomial;

pub(crate) type Vector = BTreeMap<Monomial, Scalar>;
pub(crate) type Combination = BTreeMap<usize, Scalar>;

/// Incremental row echelon form over `K`. Each row has its largest monomial as
/// pivot with coefficient 1 and remembers which candidates it combines.
#[derive(Default)]
pub(crate) struct Echelon {
    rows: Vec<(Vector, Combination)>,
    pivots: HashMap<Monomial, usize>,
}

fn axpy<K: Ord + Clone>(y: &mut BTreeMap<K, Scalar>, a: &Scalar, x: &BTreeMap<K, Scalar>) {
    for (k, c) in x {
        let v = y.entry(k.clone()).or_insert_with(Scalar::zero);
        *v = &*v + &(a * c);
        if v.is_zero() {
            y.remove(k);
        }
    }
}

impl Echelon {
    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.rows.iter().flat_map(|(v, _)| v.keys())
    }

    /// Fully reduces `v` (tracking `combo`), from the largest monomial down.
    pub(crate) fn reduce(&self, v: &mut Vector, combo: &mut Combination) {
        let mut cursor: Option<Monomial> = None;
        loop {
            let hit = {
                let mut it: Box<dyn DoubleEndedIterator<Item = (&Monomial, &Scalar)>> = match &cursor {
                    Some(c) => Box::new(v.range(..c.clone())),
                    None => Box::new(v.iter()),
                };
                it.rfind(|(m, _)| self.pivots.contains_key(*m)).map(|(m, c)| (m.clone(), c.clone()))
            };
            let Some((m, c)) = hit else { return };
            let (row, rc) = &self.rows[self.pivots[&m]];
            let a = -c;
            axpy(v, &a, row);
            axpy(combo, &a, rc);
            cursor = Some(m);
        }
    }

    /// Adds candidate `idx`; returns false when it is already in the span.
    pub(crate) fn insert(&mut self, idx: usize, mut v: Vector) -> bool {
        let mut combo = Combination::from([(idx, Scalar::one())]);
        self.reduce(&mut v, &mut combo);
        let Some((m, c)) = v.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let inv = c.inv().expect("nonzero pivot");
        for x in v.values_mut() {
            *x = &*x * &inv;
        }
        for x in combo.values_mut() {
            *x = &*x * &inv;
        }
        self.pivots.insert(m, self.rows.len());
        self.rows.push((v, combo));
        true
    }
}
