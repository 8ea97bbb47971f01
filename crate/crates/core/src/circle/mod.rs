//! The fuzzy circle on `span{ψ_n : |n| ≤ Λ}`: operators, relation checks,
//! coherent states, resolution of the identity, uncertainty audits, the
//! spectrum of `x₁` and the eigenproblem of `L - iμx₁`.

mod amu;
mod audit;
mod space;
mod spectral;
mod states;

pub use amu::{a_mu_char_poly, a_mu_matrix, circle_a_mu_eigen, mirror, AMuEigenpair};
pub use audit::{circle_resolution_check, circle_ur_audit};
pub use space::{build_circle, circle_su2_check, f_minus, f_plus, verify_circle_algebra, FuzzyCircleSpace};
pub use spectral::{circle_x1_analysis, X1Analysis};
pub use states::{circle_lambda1_minimizer, circle_scs_omega, toeplitz_state, Lambda1Minimizer};
