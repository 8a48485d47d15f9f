use serde::Serialize;
use thiserror::Error;

use crate::cartan::Family;
use crate::presentations::{drinfeld_relations, PresentationError};
use crate::scalars::Scalar;
use crate::superalg::{Element, Gen};
use crate::verify::{check_zero, specialize_constant, Budget, Growth, RelationIndex, Search, Verdict};

use super::maps::psi_cap;
use super::map::MapError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("no value of c makes the e_0-f_0 relation hold at this bound")]
    NoSolution,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CSolution {
    Solved { c: Scalar, certificate_size: usize },
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct CReport {
    pub family: Family,
    pub rank: usize,
    pub window: i32,
    pub c: Option<String>,
}

/// `[Ψ(e_0), Ψ(f_0)]|_{c=1}` and `(Ψ(k_0) - Ψ(k_0)⁻¹)/(q_0^{ζ_0} - q_0^{-ζ_0})`.
pub fn node_zero_parts(family: Family, n: usize) -> Result<(Element, Element), MapError> {
    let psi = psi_cap(family, n)?;
    let t = &psi.target;
    let e = psi.image(&Gen::e(0))?;
    let f = specialize_constant(&psi.image(&Gen::f(0))?, &Scalar::one());
    let bracket = t.bracket(&e, &f)?;
    let d = psi.source.datum();
    let q0 = Scalar::from(d.q_node(0)).pow(d.zeta[0] as i32);
    let denom = &q0 - &q0.inv().expect("unit");
    let k = &psi.image(&Gen::k(0))? - &psi.image(&Gen::k_inv(0))?;
    Ok((t.reduce(&bracket), k.scale(&denom.inv().expect("nonzero"))))
}

/// Solves `c·[Ψ(e_0), Ψ(f_0)]|_{c=1} ≡ (Ψ(k_0) - Ψ(k_0)⁻¹)/(q_0^{ζ_0} - q_0^{-ζ_0})`
/// modulo the Drinfeld relations at window `w`, then certifies the value.
pub fn solve_c(family: Family, n: usize, w: i32, budget: &Budget) -> Result<CSolution, SolveError> {
    let (b, k) = node_zero_parts(family, n)?;
    let pres = drinfeld_relations(family, n, w, false)?;
    let index = RelationIndex::new(&pres);
    let mut search = Search::new(&index, budget);
    loop {
        let (rb, _) = search.residual(&b);
        let (rk, _) = search.residual(&k);
        if let Some((m, cb)) = rb.iter().next_back() {
            let c = &rk.get(m).cloned().unwrap_or_else(Scalar::zero) / cb;
            let proportional = rb.len() == rk.len() && rb.iter().all(|(m, x)| rk.get(m) == Some(&(&c * x)));
            if proportional && !c.is_zero() {
                let x = &b.scale(&c) - &k;
                return match check_zero(&x, &index, budget) {
                    Verdict::Verified { certificate } => Ok(CSolution::Solved { c, certificate_size: certificate.len() }),
                    Verdict::BudgetExceeded => Ok(CSolution::Inconclusive),
                    Verdict::NonzeroAtBound { .. } => Err(SolveError::NoSolution),
                };
            }
        }
        match search.grow(&[&rb, &rk]) {
            Growth::Grew => {}
            Growth::Closed => return Err(SolveError::NoSolution),
            Growth::OutOfBudget => return Ok(CSolution::Inconclusive),
        }
    }
}
