//! The fuzzy sphere on `H_Λ = ⊕_{l ≤ Λ} V_l`: operators, relation checks,
//! rotations, coherent-state families, resolution of the identity,
//! uncertainty audits and the spectral analysis of `x₀`.

mod algebra;
mod audit;
mod lemmas;
mod resolution;
mod rotation;
mod space;
mod spectral;
mod states;

pub use algebra::{sphere_so4_check, verify_sphere_algebra, So4Report};
pub use audit::{sphere_ur_audit, theorem2_audit, theorem2_audit_mixed};
pub use lemmas::{exp_nilpotent, gauss_decomposition_check, jacobi_lemma_check, projector_identity_check, GaussDecompositionReport};
pub use resolution::{sphere_resolution_check, SphereNodes};
pub use rotation::{random_rotations, rotate_state, wigner_rotation, EulerAngles};
pub use space::{build_sphere, clebsch_a, clebsch_b, so4_scale, FuzzySphereSpace};
pub use spectral::{alpha1_chain, b0_max_gap, bm_coefficients, sphere_bm_analysis, BmReport};
pub use states::{
    omega_l_dispersion_closed, phi_l_dispersion_closed, sphere_chi_tilde, sphere_scs_family, ChiTildeComparison, ScsFamily,
};
