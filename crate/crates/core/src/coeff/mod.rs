//! Exact ground arithmetic: monomials with rational exponents, Laurent
//! polynomials, their fraction field, the parameter matrix and
//! q-combinatorics.

pub mod field;
mod gcd;
pub mod monomial;
pub mod params;
pub mod poly;
pub mod qnum;
pub mod specialize;

pub use field::FieldElem;
pub use gcd::poly_gcd;
pub use monomial::{Monomial, Rat, Var};
pub use params::{ParamMatrix, Preset};
pub use poly::Poly;
pub use qnum::{gauss_product_check, qbinom, qfact, qint};
pub use specialize::{specialize, Assignment, Specializer};
