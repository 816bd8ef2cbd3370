use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::coeff::{BasisParse, BasisText, JsonBasis, MonoidBasis};
use crate::error::{Error, Result};
use crate::forest::{parse_edges, Colour, ColouredTree, Forest, RootedShape};
use crate::text::{parse_all, Cursor};

/// A rooted tree with coloured edges whose same-colour children are linearly
/// ordered. Children are stored grouped by increasing colour, each group in
/// its planar order; nothing else is sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarTree {
    size: usize,
    children: Vec<(Colour, PlanarTree)>,
}

impl PlanarTree {
    pub fn root_only() -> Self {
        PlanarTree {
            size: 1,
            children: Vec::new(),
        }
    }

    /// Keeps the relative order of same-colour children.
    pub fn from_children(mut children: Vec<(Colour, PlanarTree)>) -> Self {
        children.sort_by_key(|(c, _)| *c);
        let size = 1 + children.iter().map(|(_, t)| t.size).sum::<usize>();
        PlanarTree { size, children }
    }

    pub fn vertex_count(&self) -> usize {
        self.size
    }

    pub fn children(&self) -> &[(Colour, PlanarTree)] {
        &self.children
    }

    pub fn max_colour(&self) -> u16 {
        self.children
            .iter()
            .map(|(c, t)| c.get().max(t.max_colour()))
            .max()
            .unwrap_or(0)
    }

    /// The words hanging off the root, one per colour `1..=n`.
    pub fn decompose(&self, n: u16) -> Vec<PlanarWord> {
        let mut slots = vec![Vec::new(); n as usize];
        for (c, t) in &self.children {
            slots[c.index()].push(t.clone());
        }
        slots.into_iter().map(PlanarWord).collect()
    }

    fn parse(cur: &mut Cursor<'_>) -> Result<Self> {
        Ok(PlanarTree::from_children(parse_edges(cur, PlanarTree::parse)?))
    }

    fn write(&self, out: &mut String) {
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

impl RootedShape for PlanarTree {
    fn child_edges(&self) -> &[(Colour, Self)] {
        &self.children
    }
}

/// New root whose colour-`i` children are the trees of `words[i - 1]`, in order.
pub fn planar_lambda(n: u16, words: &[PlanarWord]) -> Result<PlanarTree> {
    if words.len() != n as usize {
        return Err(Error::ArityMismatch {
            expected: n as usize,
            got: words.len(),
        });
    }
    let mut children = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let m = w.max_colour();
        if m > n {
            return Err(Error::ColourOutOfRange { colour: m, n });
        }
        children.extend(w.0.iter().map(|t| (Colour::from_index(i), t.clone())));
    }
    Ok(PlanarTree::from_children(children))
}

/// Forgets the orderings.
pub fn forget(t: &PlanarTree) -> ColouredTree {
    ColouredTree::from_children(t.children.iter().map(|(c, s)| (*c, forget(s))).collect())
}

pub fn forget_word(w: &PlanarWord) -> Forest {
    Forest::from_trees(w.0.iter().map(forget).collect())
}

/// A word in planar trees; the empty word is the unit.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarWord(pub Vec<PlanarTree>);

impl PlanarWord {
    pub fn empty() -> Self {
        PlanarWord(Vec::new())
    }

    pub fn single(t: PlanarTree) -> Self {
        PlanarWord(vec![t])
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(PlanarTree::vertex_count).sum()
    }

    pub fn max_colour(&self) -> u16 {
        self.0.iter().map(PlanarTree::max_colour).max().unwrap_or(0)
    }

    pub fn as_tree(&self) -> Option<&PlanarTree> {
        match self.0.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn concat(&self, other: &PlanarWord) -> PlanarWord {
        let mut trees = self.0.clone();
        trees.extend_from_slice(&other.0);
        PlanarWord(trees)
    }

    fn parse(cur: &mut Cursor<'_>) -> Result<Self> {
        if cur.peek() == Some('1') {
            cur.bump();
            return Ok(PlanarWord::empty());
        }
        let mut trees = vec![PlanarTree::parse(cur)?];
        while cur.eat_padded('*') {
            trees.push(PlanarTree::parse(cur)?);
        }
        Ok(PlanarWord(trees))
    }

    fn write(&self, out: &mut String) {
        if self.0.is_empty() {
            out.push('1');
        }
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            t.write(out);
        }
    }
}

impl MonoidBasis for PlanarWord {
    fn unit() -> Self {
        PlanarWord::empty()
    }

    fn product(&self, other: &Self) -> Self {
        self.concat(other)
    }

    fn degree(&self) -> usize {
        self.vertex_count()
    }
}

impl From<PlanarTree> for PlanarWord {
    fn from(t: PlanarTree) -> Self {
        PlanarWord::single(t)
    }
}

macro_rules! text_impls {
    ($ty:ty, $key:literal) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut s = String::new();
                self.write(&mut s);
                f.write_str(&s)
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                parse_all(s, <$ty>::parse)
            }
        }

        impl BasisText for $ty {
            fn write_basis(&self, out: &mut String) {
                self.write(out);
            }
        }

        impl BasisParse for $ty {
            fn parse_basis(cur: &mut Cursor<'_>) -> Result<Self> {
                <$ty>::parse(cur)
            }
        }

        impl JsonBasis for $ty {
            fn to_fields(&self, obj: &mut Map<String, Value>) {
                obj.insert($key.into(), json!(self.to_string()));
            }

            fn from_fields(obj: &Map<String, Value>) -> Result<Self> {
                obj.get($key)
                    .and_then(Value::as_str)
                    .ok_or_else(|| Error::parse(0, concat!("JSON term is missing string field '", $key, "'")))?
                    .parse()
            }
        }
    };
}

text_impls!(PlanarTree, "planar_tree");
text_impls!(PlanarWord, "word");

impl JsonBasis for (PlanarWord, PlanarWord) {
    fn to_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("left".into(), json!(self.0.to_string()));
        obj.insert("right".into(), json!(self.1.to_string()));
    }

    fn from_fields(obj: &Map<String, Value>) -> Result<Self> {
        let field = |key: &str| {
            obj.get(key)
                .and_then(Value::as_str)
                .ok_or_else(|| Error::parse(0, format!("JSON term is missing string field '{key}'")))
        };
        Ok((field("left")?.parse()?, field("right")?.parse()?))
    }
}

/// Sequences of `(colour, tree)` with non-decreasing colours `≥ from` and
/// `total` vertices in all.
fn child_sequences(n: u16, total: usize, from: u16, by_size: &[Vec<PlanarTree>]) -> Vec<Vec<(Colour, PlanarTree)>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for c in from..=n {
        let colour = Colour::new(c).expect("colours start at 1");
        for size in 1..=total {
            for t in &by_size[size] {
                for mut rest in child_sequences(n, total - size, c, by_size) {
                    rest.insert(0, (colour, t.clone()));
                    out.push(rest);
                }
            }
        }
    }
    out
}

fn planar_catalogue(n: u16, m: usize) -> Vec<Vec<PlanarTree>> {
    let mut by_size: Vec<Vec<PlanarTree>> = vec![Vec::new()];
    for size in 1..=m {
        let mut trees: Vec<PlanarTree> = child_sequences(n, size - 1, 1, &by_size)
            .into_iter()
            .map(PlanarTree::from_children)
            .collect();
        trees.sort();
        by_size.push(trees);
    }
    by_size
}

/// All planar `n`-coloured trees with `m` vertices.
pub fn enumerate_planar_trees(n: u16, m: usize) -> Vec<PlanarTree> {
    planar_catalogue(n, m).pop().unwrap_or_default()
}

/// All words of planar trees with exactly `m` vertices.
pub fn enumerate_planar_words(n: u16, m: usize) -> Vec<PlanarWord> {
    let by_size = planar_catalogue(n, m);
    let mut words: Vec<Vec<PlanarWord>> = vec![vec![PlanarWord::empty()]];
    for total in 1..=m {
        let mut here = Vec::new();
        for first in 1..=total {
            for t in &by_size[first] {
                for rest in &words[total - first] {
                    let mut trees = vec![t.clone()];
                    trees.extend_from_slice(&rest.0);
                    here.push(PlanarWord(trees));
                }
            }
        }
        here.sort();
        words.push(here);
    }
    words.pop().unwrap_or_default()
}

/// All words with at most `max` vertices, by increasing size.
pub fn planar_words_up_to(n: u16, max: usize) -> Vec<PlanarWord> {
    (0..=max).flat_map(|m| enumerate_planar_words(n, m)).collect()
}
