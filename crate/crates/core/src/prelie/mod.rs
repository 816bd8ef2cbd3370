//! Primitives of the graded dual: the products `•` and `•′` on the duals
//! `D_t` of trees, the Lie bracket, the free pre-Lie algebra on `n`
//! generators and the embedding `φ`.

mod bullet;
mod labelled;

pub(crate) use bullet::ProductCache;
pub use bullet::{
    aut_rescale, aut_rescale_inverse, bullet, bullet_prime, graft, graft_all, lie_bracket, lie_bracket_opposite,
    BulletTable, DualElement, DEFAULT_BUDGET,
};
pub use labelled::{down_map, free_bullet, free_graft, phi, up_map, LabelledTree, PreLieElement};

use crate::coeff::Combination;

/// A bilinear product on combinations.
pub type Product<'a, B> = dyn Fn(&Combination<B>, &Combination<B>) -> Combination<B> + 'a;

/// `(x·y)·z − x·(y·z)`.
pub fn associator<B: Ord + Clone>(
    mul: &Product<'_, B>,
    x: &Combination<B>,
    y: &Combination<B>,
    z: &Combination<B>,
) -> Combination<B> {
    mul(&mul(x, y), z).sub(&mul(x, &mul(y, z)))
}

/// Whether the associator of `mul` is symmetric in its last two arguments on
/// `(x, y, z)`.
pub fn prelie_identity_holds<B: Ord + Clone>(
    mul: &Product<'_, B>,
    x: &Combination<B>,
    y: &Combination<B>,
    z: &Combination<B>,
) -> bool {
    associator(mul, x, y, z) == associator(mul, x, z, y)
}

/// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
pub fn jacobiator<B: Ord + Clone>(
    bracket: &Product<'_, B>,
    x: &Combination<B>,
    y: &Combination<B>,
    z: &Combination<B>,
) -> Combination<B> {
    bracket(&bracket(x, y), z)
        .add(&bracket(&bracket(y, z), x))
        .add(&bracket(&bracket(z, x), y))
}
