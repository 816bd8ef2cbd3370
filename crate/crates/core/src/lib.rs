//! Exact computation with the family of Hopf algebra structures on
//! symmetric and tensor algebras of rooted trees with coloured edges, and
//! with the pre-Lie structures on the primitives of their duals.
//!
//! * [`forest`]: canonical trees and forests, enumeration, subforests.
//! * [`coeff`]: polynomial coefficients in the deformation parameters and
//!   linear combinations over tree bases.
//! * [`hopf`]: coproducts, antipodes, axiom verification, simplicial maps.
//! * [`prelie`]: the products `•`, `•′`, the free pre-Lie algebra and `φ`.
//! * [`planar`]: the same constructions on planar trees.

pub mod coeff;
pub mod error;
pub mod forest;
pub mod hopf;
pub mod planar;
pub mod prelie;
pub mod text;

pub use coeff::{Coefficient, Combination, Element, QSpec, QVar, TensorElement};
pub use error::{Error, Result};
pub use forest::{Colour, ColouredTree, Forest};
pub use hopf::HopfContext;
