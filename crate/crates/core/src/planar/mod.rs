//! Planar trees: every vertex carries, for each colour, an ordered list of
//! children. Words of planar trees span the tensor algebra, on which the same
//! family of coproducts is defined with products taken in planar order.

mod algebra;
mod tree;

pub use algebra::{
    planar_antipode, planar_bullet, planar_coproduct, planar_coproduct_inductive, planar_coproduct_word,
    planar_lie_bracket, verify_planar, PlanarBulletTable, PlanarDual, PlanarElement, PlanarTensor,
};
pub use tree::{
    enumerate_planar_trees, enumerate_planar_words, forget, forget_word, planar_lambda, planar_words_up_to, PlanarTree,
    PlanarWord,
};
