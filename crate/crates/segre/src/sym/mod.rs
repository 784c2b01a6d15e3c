//! Exact symbolic arithmetic: variable tables, sparse Laurent polynomials
//! over the integers, their fraction field, and symbolic linear algebra.

pub mod frac;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod vars;

pub use frac::{RationalFunction, SymError};
pub use matrix::SymbolicMatrix;
pub use parse::{parse_polynomial, parse_rational, parse_simple_rational};
pub use poly::Polynomial;
pub use vars::VariableTable;

use std::sync::Arc;

/// Q(b,q) = q^2 + b - q^2 b, the quadratic unit of the deformed operators.
pub fn q_beta(table: &Arc<VariableTable>) -> RationalFunction {
    let b = RationalFunction::symbol(table, "b");
    let q2 = RationalFunction::symbol(table, "q").pow(2).unwrap();
    &(&q2 + &b) - &(&q2 * &b)
}

/// The connective counterpart Q(b, xq) = xq^2 + b - xq^2 b.
pub fn q_beta_connective(table: &Arc<VariableTable>) -> RationalFunction {
    let b = RationalFunction::symbol(table, "b");
    let x2 = RationalFunction::symbol(table, "xq").pow(2).unwrap();
    &(&x2 + &b) - &(&x2 * &b)
}
