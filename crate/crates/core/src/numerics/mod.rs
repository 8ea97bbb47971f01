//! Dense complex linear algebra, root finding, quadrature and state statistics.

mod dispersion;
mod eigen;
mod matrix;
mod poly;
mod quadrature;
mod state;

pub use dispersion::{dispersion_report, expectation, DispersionReport};
pub use eigen::{hermitian_eigen, sym_tridiag_eigen, SpectrumFlags, SpectrumReport};
pub use matrix::{product_residual, ComplexMatrix};
pub use poly::{poly_eval, poly_roots};
pub use quadrature::{gauss_legendre, make_rule, periodic_trapezoid, QuadratureKind, QuadratureRule};
pub use state::{random_state, random_states, BasisTag, StateVector};

pub(crate) const C0: num_complex::Complex64 = num_complex::Complex64::new(0.0, 0.0);
pub(crate) const C1: num_complex::Complex64 = num_complex::Complex64::new(1.0, 0.0);
