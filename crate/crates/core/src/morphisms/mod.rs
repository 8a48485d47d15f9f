//! Generator maps `ψ`, `φ`, `φ⁻¹`, `ρ`, `Ψ` and the solver for `c_g`.

mod map;
mod maps;
mod solve;

pub use map::{GeneratorMap, MapError};
pub use maps::{
    affine_ad_nodes, affine_node_images, map_by_name, phi_inverse, proportionality, psi_agreement, PsiAgreement, phi_map, psi_cap, psi_cap_composed, psi_map,
    rho_map, sigma_tail_word, tail_mask,
};

pub use solve::{node_zero_parts, solve_c, CReport, CSolution, SolveError};
