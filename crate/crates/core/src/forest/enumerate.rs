use std::collections::BTreeMap;

use super::{Colour, ColouredTree, Forest};

/// All canonical `n`-coloured trees with `m` vertices, in canonical order.
pub fn enumerate_trees(n: u16, m: usize) -> Vec<ColouredTree> {
    TreeCatalogue::new(n).trees(m).to_vec()
}

/// All `n`-coloured forests with exactly `m` vertices, in canonical order.
pub fn enumerate_forests(n: u16, m: usize) -> Vec<Forest> {
    TreeCatalogue::new(n).forests(m)
}

/// All forests with at most `max` vertices, grouped by increasing size.
pub fn forests_up_to(n: u16, max: usize) -> Vec<Forest> {
    let mut cat = TreeCatalogue::new(n);
    (0..=max).flat_map(|m| cat.forests(m)).collect()
}

/// Memoised tree lists by vertex count for a fixed colour count.
#[derive(Debug, Clone)]
pub struct TreeCatalogue {
    n: u16,
    by_size: Vec<Vec<ColouredTree>>,
}

impl TreeCatalogue {
    pub fn new(n: u16) -> Self {
        TreeCatalogue {
            n,
            by_size: vec![Vec::new(), vec![ColouredTree::root_only()]],
        }
    }

    pub fn trees(&mut self, m: usize) -> &[ColouredTree] {
        while self.by_size.len() <= m {
            let size = self.by_size.len();
            let next = self.generate(size);
            self.by_size.push(next);
        }
        &self.by_size[m]
    }

    fn generate(&mut self, size: usize) -> Vec<ColouredTree> {
        // Child edges of total weight size - 1, as non-decreasing sequences
        // in the canonical child order.
        let mut kinds: Vec<(Colour, ColouredTree)> = Vec::new();
        for k in 1..size {
            for t in self.trees(k).to_vec() {
                kinds.extend(Colour::all(self.n).map(|c| (c, t.clone())));
            }
        }
        kinds.sort();
        let mut out = Vec::new();
        let mut current = Vec::new();
        choose_multisets(&kinds, 0, size - 1, &mut current, &mut |children| {
            out.push(ColouredTree::from_children(children.to_vec()));
        });
        out.sort();
        out
    }

    /// Forests with exactly `m` vertices.
    pub fn forests(&mut self, m: usize) -> Vec<Forest> {
        let mut kinds: Vec<ColouredTree> = Vec::new();
        for k in 1..=m {
            kinds.extend_from_slice(self.trees(k));
        }
        kinds.sort();
        let mut out = Vec::new();
        let mut current = Vec::new();
        choose_multisets(&kinds, 0, m, &mut current, &mut |trees| {
            out.push(Forest::from_trees(trees.to_vec()));
        });
        out.sort();
        out
    }
}

trait Weighted {
    fn weight(&self) -> usize;
}

impl Weighted for ColouredTree {
    fn weight(&self) -> usize {
        self.vertex_count()
    }
}

impl Weighted for (Colour, ColouredTree) {
    fn weight(&self) -> usize {
        self.1.vertex_count()
    }
}

fn choose_multisets<T: Clone + Weighted>(
    kinds: &[T],
    start: usize,
    remaining: usize,
    current: &mut Vec<T>,
    emit: &mut dyn FnMut(&[T]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for i in start..kinds.len() {
        let w = kinds[i].weight();
        if w <= remaining {
            current.push(kinds[i].clone());
            choose_multisets(kinds, i, remaining - w, current, emit);
            current.pop();
        }
    }
}

/// Number of trees by size, for quick reporting.
pub fn tree_counts(n: u16, max: usize) -> BTreeMap<usize, usize> {
    let mut cat = TreeCatalogue::new(n);
    (1..=max).map(|m| (m, cat.trees(m).len())).collect()
}
