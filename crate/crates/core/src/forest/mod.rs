//! Coloured rooted trees and forests: canonical forms, construction,
//! enumeration and the subforest machinery behind the coproduct.

mod enumerate;
#[allow(clippy::module_inception)]
mod forest;
mod layout;
mod raw;
mod tree;

pub use enumerate::{enumerate_forests, enumerate_trees, forests_up_to, tree_counts, TreeCatalogue};
pub use forest::Forest;
pub use layout::{p_count, subforests, ForestLayout, InducedVertex, RootedShape, Subforest, VertexRef, VertexSet};
pub use raw::{canonicalize, RawEdge, RawTree};
pub(crate) use tree::parse_edges;
pub use tree::{lambda, Colour, ColouredTree};
