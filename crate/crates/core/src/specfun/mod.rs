//! Special functions and exact identities: Pochhammer symbols, terminating
//! hypergeometric series, Jacobi polynomials, factorial-ratio products,
//! closed-form Toeplitz spectra and a battery of finite sums.

mod hypergeometric;
mod products;
mod sums;
mod toeplitz;

pub use hypergeometric::{hyp2f1_terminating, jacobi_norm_sq, jacobi_poly, pochhammer, JacobiParams};
pub use products::{factorial_ratio, product_formula_closed, product_formula_f, product_formula_g};
pub use sums::summation_suite;
pub use toeplitz::{toeplitz_closed_form, ToeplitzSpectrum};
