use crate::morphisms::GeneratorMap;
use crate::scalars::{q_int, Scalar};
use crate::superalg::{Kind, Style};

use super::Presentation;

/// Diagonal automorphism to the textbook normalisation: `e_i ↦ [ζ_i]_{q_i} e_i`
/// (Chevalley) or `κ_{i,s}, ξ⁺_{i,s} ↦ (q - q⁻¹)/(q_i - q_i⁻¹)·(same)` (Drinfeld).
/// Every other generator is fixed.
pub fn rescale_to_standard(pres: &Presentation) -> GeneratorMap {
    let alg = pres.algebra.clone();
    GeneratorMap::new("rescale", alg.clone(), alg, |t, g| {
        let d = t.datum();
        let x = t.gen(*g);
        let i = g.node();
        let factor = match (t.style(), g.kind) {
            (Style::Chevalley, Kind::E) => q_int(d.zeta[i] as i64, d.q_node(i))?,
            (Style::Drinfeld, Kind::Kappa | Kind::XiPlus) => {
                let qi = Scalar::from(d.q_node(i));
                let q = Scalar::from(t.base()).pow(2);
                &(&q - &q.inv().expect("q is a unit")) / &(&qi - &qi.inv().expect("q_i is a unit"))
            }
            _ => return Ok(x),
        };
        Ok(x.scale(&factor))
    })
}
