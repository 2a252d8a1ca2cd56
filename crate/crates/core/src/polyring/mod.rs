//! Monomials, polynomials and the polynomial text parser.

mod monomial;
mod parser;
mod polynomial;

pub use monomial::{monomials_below, monomials_of_degree, Monomial};
pub use parser::parse_polynomial;
pub use polynomial::Polynomial;
