//! Exact coefficients, linear combinations over tree bases, and the
//! symmetric algebra of forests.

mod combination;
mod element;
mod poly;
mod qspec;

pub use combination::{BasisText, Combination, MonoidBasis};
pub use element::{
    counit, from_json, parse_combination, sigma, to_json, BasisParse, Element, JsonBasis, TensorElement,
};
pub use poly::{Coefficient, Monomial, QVar};
pub use qspec::QSpec;
