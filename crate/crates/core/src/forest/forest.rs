use std::fmt;
use std::str::FromStr;

use super::ColouredTree;
use crate::coeff::MonoidBasis;
use crate::error::{Error, Result};
use crate::text::{parse_all, Cursor};

/// A finite multiset of coloured trees, kept sorted; the empty forest is
/// the unit of the symmetric algebra.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<ColouredTree>,
}

impl Forest {
    pub fn empty() -> Self {
        Forest::default()
    }

    pub fn single(tree: ColouredTree) -> Self {
        Forest { trees: vec![tree] }
    }

    pub fn from_trees(mut trees: Vec<ColouredTree>) -> Self {
        trees.sort();
        Forest { trees }
    }

    pub fn trees(&self) -> &[ColouredTree] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn tree_count(&self) -> usize {
        self.trees.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(ColouredTree::vertex_count).sum()
    }

    pub fn max_colour(&self) -> u16 {
        self.trees.iter().map(ColouredTree::max_colour).max().unwrap_or(0)
    }

    pub fn check_colours(&self, n: u16) -> Result<()> {
        self.trees.iter().try_for_each(|t| t.check_colours(n))
    }

    /// The single tree, if this forest has exactly one.
    pub fn as_tree(&self) -> Option<&ColouredTree> {
        match self.trees.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Disjoint union.
    pub fn union(&self, other: &Forest) -> Forest {
        let mut trees = Vec::with_capacity(self.trees.len() + other.trees.len());
        let (a, b) = (&self.trees, &other.trees);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] <= b[j] {
                trees.push(a[i].clone());
                i += 1;
            } else {
                trees.push(b[j].clone());
                j += 1;
            }
        }
        trees.extend_from_slice(&a[i..]);
        trees.extend_from_slice(&b[j..]);
        Forest { trees }
    }

    pub(crate) fn parse(cur: &mut Cursor<'_>) -> Result<Forest> {
        if cur.peek() == Some('1') {
            cur.bump();
            return Ok(Forest::empty());
        }
        let mut trees = vec![ColouredTree::parse(cur)?];
        while cur.eat_padded('*') {
            trees.push(ColouredTree::parse(cur)?);
        }
        Ok(Forest::from_trees(trees))
    }

    pub(crate) fn write(&self, out: &mut String) {
        if self.trees.is_empty() {
            out.push('1');
        }
        for (k, t) in self.trees.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            t.write(out);
        }
    }
}

impl From<ColouredTree> for Forest {
    fn from(t: ColouredTree) -> Self {
        Forest::single(t)
    }
}

impl MonoidBasis for Forest {
    fn unit() -> Self {
        Forest::empty()
    }

    fn product(&self, other: &Self) -> Self {
        self.union(other)
    }

    fn degree(&self) -> usize {
        self.vertex_count()
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, Forest::parse)
    }
}
