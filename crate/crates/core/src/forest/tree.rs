use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::Forest;
use crate::error::{Error, Result};
use crate::text::{parse_all, Cursor};

/// An edge colour `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colour(u16);

impl Colour {
    pub fn new(value: u16) -> Result<Self> {
        if value == 0 {
            Err(Error::ColourOutOfRange { colour: 0, n: 0 })
        } else {
            Ok(Colour(value))
        }
    }

    /// Checked against a colour count.
    pub fn in_range(value: u16, n: u16) -> Result<Self> {
        if value == 0 || value > n {
            Err(Error::ColourOutOfRange { colour: value, n })
        } else {
            Ok(Colour(value))
        }
    }

    pub fn get(self) -> u16 {
        self.0
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Colour(i as u16 + 1)
    }

    /// All colours `1..=n`.
    pub fn all(n: u16) -> impl Iterator<Item = Colour> {
        (1..=n).map(Colour)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Canonical isomorphism class of a rooted tree with coloured edges.
///
/// The children of every vertex are kept sorted by `(colour, subtree)`, so
/// two values are equal exactly when the trees are isomorphic. The derived
/// order (vertex count first, then children) is the total order used for
/// every deterministic listing in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColouredTree {
    size: usize,
    children: Vec<(Colour, ColouredTree)>,
}

impl ColouredTree {
    /// The tree with a single vertex.
    pub fn root_only() -> Self {
        ColouredTree {
            size: 1,
            children: Vec::new(),
        }
    }

    /// Builds the canonical tree whose root carries the given edges.
    pub fn from_children(mut children: Vec<(Colour, ColouredTree)>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|(_, c)| c.size).sum::<usize>();
        ColouredTree { size, children }
    }

    pub fn vertex_count(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[(Colour, ColouredTree)] {
        &self.children
    }

    /// Largest colour used on any edge, 0 for the single vertex.
    pub fn max_colour(&self) -> u16 {
        self.children
            .iter()
            .map(|(c, t)| c.get().max(t.max_colour()))
            .max()
            .unwrap_or(0)
    }

    pub fn check_colours(&self, n: u16) -> Result<()> {
        match self.max_colour() {
            m if m > n => Err(Error::ColourOutOfRange { colour: m, n }),
            _ => Ok(()),
        }
    }

    /// The forests hanging off the root, one per colour `1..=n`.
    pub fn decompose(&self, n: u16) -> Vec<Forest> {
        let mut slots = vec![Vec::new(); n as usize];
        for (c, t) in &self.children {
            slots[c.index()].push(t.clone());
        }
        slots.into_iter().map(Forest::from_trees).collect()
    }

    /// Order of the colour-preserving automorphism group.
    pub fn aut_order(&self) -> BigUint {
        let mut order = BigUint::one();
        let mut run = 0u32;
        for (k, (_, t)) in self.children.iter().enumerate() {
            order *= t.aut_order();
            if k > 0 && self.children[k - 1] == self.children[k] {
                run += 1;
            } else {
                run = 1;
            }
            order *= run;
        }
        order
    }

    pub(crate) fn parse(cur: &mut Cursor<'_>) -> Result<ColouredTree> {
        let children = parse_edges(cur, ColouredTree::parse)?;
        Ok(ColouredTree::from_children(children))
    }

    pub(crate) fn write(&self, out: &mut String) {
        out.push('[');
        for (k, (c, t)) in self.children.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&c.to_string());
            out.push(':');
            t.write(out);
        }
        out.push(']');
    }
}

/// `[` edges `]` with `edge := colour ":" tree`; shared by the planar grammar.
pub(crate) fn parse_edges<T>(
    cur: &mut Cursor<'_>,
    mut child: impl FnMut(&mut Cursor<'_>) -> Result<T>,
) -> Result<Vec<(Colour, T)>> {
    cur.expect('[')?;
    let mut edges = Vec::new();
    cur.skip_ws();
    if cur.eat(']') {
        return Ok(edges);
    }
    loop {
        cur.skip_ws();
        let pos = cur.pos();
        let c: u16 = cur.uint()?;
        let colour = Colour::new(c).map_err(|_| Error::parse(pos, "colours start at 1"))?;
        cur.skip_ws();
        cur.expect(':')?;
        cur.skip_ws();
        edges.push((colour, child(cur)?));
        cur.skip_ws();
        if cur.eat(']') {
            return Ok(edges);
        }
        cur.expect(',')?;
    }
}

/// Joins `n` forests under a new root; the trees of `forests[i]` are
/// attached by edges of colour `i + 1`.
pub fn lambda(n: u16, forests: &[Forest]) -> Result<ColouredTree> {
    if forests.len() != n as usize {
        return Err(Error::ArityMismatch {
            expected: n as usize,
            got: forests.len(),
        });
    }
    let mut children = Vec::new();
    for (i, f) in forests.iter().enumerate() {
        f.check_colours(n)?;
        let colour = Colour::from_index(i);
        children.extend(f.trees().iter().map(|t| (colour, t.clone())));
    }
    Ok(ColouredTree::from_children(children))
}

impl fmt::Display for ColouredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for ColouredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ColouredTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, ColouredTree::parse)
    }
}
