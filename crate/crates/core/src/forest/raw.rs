//! Canonical forms from arbitrary parent-map presentations.

use super::{Colour, ColouredTree};
use crate::error::{Error, Result};

/// An edge `parent -> child` of colour `colour` between vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawEdge {
    pub parent: usize,
    pub child: usize,
    pub colour: u16,
}

/// A rooted tree presented by explicit vertex indices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTree {
    pub vertex_count: usize,
    pub edges: Vec<RawEdge>,
}

impl RawTree {
    /// From `parents[v]` (`None` for the root) and the colour of the edge
    /// below each non-root vertex.
    pub fn from_parents(parents: &[Option<usize>], colours: &[u16]) -> Self {
        let edges = parents
            .iter()
            .enumerate()
            .filter_map(|(v, p)| {
                p.map(|parent| RawEdge {
                    parent,
                    child: v,
                    colour: colours[v],
                })
            })
            .collect();
        RawTree {
            vertex_count: parents.len(),
            edges,
        }
    }
}

/// Canonical isomorphism class of `raw`, checking that it is a finite
/// rooted tree with colours in `1..=n`.
pub fn canonicalize(raw: &RawTree, n: u16) -> Result<ColouredTree> {
    let count = raw.vertex_count;
    if count == 0 {
        return Err(Error::MalformedTree("a tree needs at least one vertex".into()));
    }
    let mut parent: Vec<Option<usize>> = vec![None; count];
    let mut children: Vec<Vec<(Colour, usize)>> = vec![Vec::new(); count];
    for e in &raw.edges {
        if e.parent >= count || e.child >= count {
            return Err(Error::MalformedTree(format!(
                "edge {}->{} names a vertex outside 0..{count}",
                e.parent, e.child
            )));
        }
        let colour = Colour::in_range(e.colour, n)?;
        if parent[e.child].replace(e.parent).is_some() {
            return Err(Error::MalformedTree(format!("vertex {} has two parents", e.child)));
        }
        children[e.parent].push((colour, e.child));
    }
    let roots: Vec<usize> = (0..count).filter(|&v| parent[v].is_none()).collect();
    let root = match roots.as_slice() {
        [r] => *r,
        [] => return Err(Error::MalformedTree("no root: the edges contain a cycle".into())),
        _ => {
            return Err(Error::MalformedTree(format!(
                "{} roots: input is disconnected",
                roots.len()
            )))
        }
    };

    // Iterative post-order so deep chains do not exhaust the stack.
    let mut order = Vec::with_capacity(count);
    let mut seen = vec![false; count];
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::MalformedTree("cycle detected".into()));
        }
        order.push(v);
        stack.extend(children[v].iter().map(|&(_, c)| c));
    }
    if order.len() != count {
        return Err(Error::MalformedTree(
            "some vertices are unreachable from the root (cycle)".into(),
        ));
    }
    let mut built: Vec<Option<ColouredTree>> = vec![None; count];
    for &v in order.iter().rev() {
        let kids = children[v]
            .iter()
            .map(|&(c, w)| (c, built[w].take().expect("children are built first")))
            .collect();
        built[v] = Some(ColouredTree::from_children(kids));
    }
    Ok(built[root].take().expect("root built"))
}
