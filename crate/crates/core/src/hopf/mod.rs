//! The q-family of coproducts on the symmetric algebra of coloured trees,
//! its antipodes, exhaustive axiom verification, and the simplicial maps
//! relating different colour counts.

mod antipode;
mod ck;
mod coproduct;
mod simplicial;
mod verify;

pub use antipode::{antipode_partitions, antipode_recursive, antipode_series, convolution};
pub use ck::ck_coproduct_oracle;
pub use coproduct::{
    coproduct, coproduct_forest, coproduct_inductive, lambda_element, q_coeff, sigma_pair, sigma_tensor, subset_q,
    Coproduct,
};
pub use simplicial::{simplicial_d, simplicial_s};
pub use verify::{
    check_cocommutative, compare_antipodes, compare_coproducts, forest_tuples, verify_axioms, verify_bialgebra,
    verify_bialgebra_with, verify_specialization, CheckResult, VerificationReport,
};

use crate::coeff::{Element, QSpec};
use crate::error::{Error, Result};

/// Colour count and deformation parameters of one member of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfContext {
    qspec: QSpec,
}

impl HopfContext {
    pub fn new(qspec: QSpec) -> Self {
        HopfContext { qspec }
    }

    /// All `2n` parameters symbolic.
    pub fn symbolic(n: u16) -> Self {
        Self::new(QSpec::symbolic(n))
    }

    pub fn n(&self) -> u16 {
        self.qspec.colour_count()
    }

    pub fn qspec(&self) -> &QSpec {
        &self.qspec
    }

    /// Rejects elements using colours beyond `n`.
    pub fn check(&self, a: &Element) -> Result<()> {
        for f in a.basis_elements() {
            let m = f.max_colour();
            if m > self.n() {
                return Err(Error::ColourOutOfRange { colour: m, n: self.n() });
            }
        }
        Ok(())
    }
}
