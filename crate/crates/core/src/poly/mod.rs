//! Exact multivariate polynomials over ℚ and the operators acting on them.

mod demazure;
mod monomial;
mod operators;
mod order;
mod polynomial;
pub mod schubert;
mod symmetric;

pub use demazure::demazure;
pub use monomial::{Exponent, Monomial};
pub use operators::{
    divided_difference, divided_difference_residual, isobaric_divided_difference,
    permute_variables, swap_variables,
};
pub use order::{neglex_cmp, MonomialOrder};
pub use polynomial::{integer_value, Coeff, Polynomial};
pub use schubert::{schubert, word_schubert};
pub use symmetric::{elementary, homogeneous};
