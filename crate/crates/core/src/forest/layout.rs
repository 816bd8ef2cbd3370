//! Concrete, vertex-indexed representatives of trees and forests.
//!
//! The coproduct sums over vertex subsets, not isomorphism classes, so every
//! subforest computation runs on an explicit representative: vertices are
//! numbered in depth-first preorder (children visited in their stored
//! order), which makes parents precede their descendants.

use std::fmt;

use super::{Colour, ColouredTree, Forest};
use crate::error::{Error, Result};

/// Trees that expose an ordered list of coloured child edges.
pub trait RootedShape: Sized {
    fn child_edges(&self) -> &[(Colour, Self)];
}

impl RootedShape for ColouredTree {
    fn child_edges(&self) -> &[(Colour, Self)] {
        self.children()
    }
}

/// Address of a vertex in a representative: the tree index within the
/// forest, then `(colour, k)` steps meaning "the k-th child along a
/// colour edge".
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub tree: usize,
    pub path: Vec<(Colour, usize)>,
}

impl VertexRef {
    pub fn root(tree: usize) -> Self {
        VertexRef { tree, path: Vec::new() }
    }

    pub fn child(&self, colour: Colour, k: usize) -> Self {
        let mut path = self.path.clone();
        path.push((colour, k));
        VertexRef { tree: self.tree, path }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.tree)?;
        for (c, k) in &self.path {
            write!(f, "/{c}.{k}")?;
        }
        Ok(())
    }
}

/// Bit set of vertex indices of a layout.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn full(len: usize) -> Self {
        assert!(len < 64, "vertex sets hold at most 63 vertices");
        VertexSet((1u64 << len) - 1)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1 << i)
    }

    pub fn minus(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VertexSet(cur))
        })
    }
}

/// One vertex of an induced structure: its layout index, and its parent
/// as a position in the same list together with the colour of the edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedVertex {
    pub vertex: usize,
    pub parent: Option<(usize, Colour)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestLayout {
    parent: Vec<Option<usize>>,
    colour: Vec<Option<Colour>>,
    address: Vec<VertexRef>,
}

impl ForestLayout {
    pub fn from_trees<T: RootedShape>(trees: &[T]) -> Self {
        let mut layout = ForestLayout {
            parent: Vec::new(),
            colour: Vec::new(),
            address: Vec::new(),
        };
        for (k, t) in trees.iter().enumerate() {
            layout.push(t, None, None, VertexRef::root(k));
        }
        layout
    }

    pub fn from_forest(f: &Forest) -> Self {
        Self::from_trees(f.trees())
    }

    pub fn from_tree(t: &ColouredTree) -> Self {
        Self::from_trees(std::slice::from_ref(t))
    }

    fn push<T: RootedShape>(&mut self, t: &T, parent: Option<usize>, colour: Option<Colour>, at: VertexRef) {
        let me = self.parent.len();
        self.parent.push(parent);
        self.colour.push(colour);
        self.address.push(at.clone());
        let mut seen: Vec<(Colour, usize)> = Vec::new();
        for (c, child) in t.child_edges() {
            let k = match seen.iter_mut().find(|(sc, _)| sc == c) {
                Some((_, k)) => {
                    *k += 1;
                    *k
                }
                None => {
                    seen.push((*c, 0));
                    0
                }
            };
            self.push(child, Some(me), Some(*c), at.child(*c, k));
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Colour of the edge from `v` down to its parent.
    pub fn edge_colour(&self, v: usize) -> Option<Colour> {
        self.colour[v]
    }

    pub fn address(&self, v: usize) -> &VertexRef {
        &self.address[v]
    }

    pub fn resolve(&self, r: &VertexRef) -> Result<usize> {
        self.address
            .iter()
            .position(|a| a == r)
            .ok_or_else(|| Error::InvalidVertex(r.to_string()))
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.len())
    }

    /// Colour-indexed counts of the edges on the path from `v` down to its
    /// root whose lower vertex lies in `host \ side`. Paths are those of the
    /// structure induced on `host`; `v` must belong to `side ⊆ host`.
    ///
    /// An induced edge `a < b` takes the colour of the original edge leaving
    /// `a` towards `b`, so it suffices to walk the original ancestors.
    pub fn path_counts(&self, v: usize, side: VertexSet, host: VertexSet, out: &mut [u32]) {
        let other = host.minus(side);
        let mut child = v;
        while let Some(p) = self.parent[child] {
            if other.contains(p) {
                let c = self.colour[child].expect("non-root vertices carry an edge colour");
                out[c.index()] += 1;
            }
            child = p;
        }
    }

    /// Induced forest structure on `mask`, listed in preorder.
    pub fn induced(&self, mask: VertexSet) -> Vec<InducedVertex> {
        let mut position = vec![usize::MAX; self.len()];
        let mut out = Vec::with_capacity(mask.len());
        for v in mask.iter() {
            let mut child = v;
            let mut parent = None;
            while let Some(p) = self.parent[child] {
                if mask.contains(p) {
                    parent = Some((position[p], self.colour[child].expect("edge colour")));
                    break;
                }
                child = p;
            }
            position[v] = out.len();
            out.push(InducedVertex { vertex: v, parent });
        }
        out
    }

    /// Canonical forest induced on `mask`.
    pub fn induced_forest(&self, mask: VertexSet) -> Forest {
        let induced = self.induced(mask);
        let mut kids: Vec<Vec<(Colour, ColouredTree)>> = vec![Vec::new(); induced.len()];
        let mut roots = Vec::new();
        for (k, iv) in induced.iter().enumerate().rev() {
            let tree = ColouredTree::from_children(std::mem::take(&mut kids[k]));
            match iv.parent {
                Some((p, c)) => kids[p].push((c, tree)),
                None => roots.push(tree),
            }
        }
        Forest::from_trees(roots)
    }

    pub fn subforests(&self) -> impl Iterator<Item = Subforest<'_>> {
        self.all()
            .subsets()
            .map(move |selected| Subforest { layout: self, selected })
    }
}

/// A vertex subset of a representative, with the induced partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Subforest<'a> {
    layout: &'a ForestLayout,
    selected: VertexSet,
}

impl<'a> Subforest<'a> {
    pub fn new(layout: &'a ForestLayout, selected: VertexSet) -> Self {
        assert!(selected.minus(layout.all()).is_empty(), "selection outside the layout");
        Subforest { layout, selected }
    }

    pub fn from_refs(layout: &'a ForestLayout, refs: &[VertexRef]) -> Result<Self> {
        let mut set = VertexSet::empty();
        for r in refs {
            set = set.with(layout.resolve(r)?);
        }
        Ok(Subforest::new(layout, set))
    }

    pub fn layout(&self) -> &'a ForestLayout {
        self.layout
    }

    pub fn selected(&self) -> VertexSet {
        self.selected
    }

    pub fn selected_refs(&self) -> Vec<VertexRef> {
        self.selected.iter().map(|v| self.layout.address(v).clone()).collect()
    }

    pub fn contains(&self, v: &VertexRef) -> Result<bool> {
        Ok(self.selected.contains(self.layout.resolve(v)?))
    }

    pub fn complement(&self) -> Subforest<'a> {
        Subforest {
            layout: self.layout,
            selected: self.layout.all().minus(self.selected),
        }
    }

    pub fn induced_forest(&self) -> Forest {
        self.layout.induced_forest(self.selected)
    }
}

/// Subforests of the canonical representative of `f`, paired with the
/// layout they refer to.
pub fn subforests(f: &Forest) -> (ForestLayout, Vec<VertexSet>) {
    let layout = ForestLayout::from_forest(f);
    let sets = layout.all().subsets().collect();
    (layout, sets)
}

/// Number of colour-`k` edges on the path from `v` to its root whose lower
/// vertex lies outside `s`; computed inside `v`'s own component.
pub fn p_count(k: Colour, v: &VertexRef, s: &Subforest<'_>) -> Result<u32> {
    let layout = s.layout;
    let idx = layout.resolve(v)?;
    if !s.selected.contains(idx) {
        return Err(Error::VertexNotSelected(v.to_string()));
    }
    let max = (k.get() as usize).max(
        (0..layout.len())
            .filter_map(|i| layout.edge_colour(i))
            .map(|c| c.get() as usize)
            .max()
            .unwrap_or(0),
    );
    let mut counts = vec![0u32; max];
    layout.path_counts(idx, s.selected, layout.all(), &mut counts);
    Ok(counts[k.index()])
}
