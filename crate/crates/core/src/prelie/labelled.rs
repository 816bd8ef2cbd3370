use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::bullet::DualElement;
use crate::coeff::{BasisParse, BasisText, Coefficient, Combination, JsonBasis};
use crate::error::{Error, Result};
use crate::forest::{Colour, ColouredTree};
use crate::text::{parse_all, Cursor};

/// Canonical rooted tree with vertices labelled by colours and unlabelled
/// edges. Children are kept sorted, so equality is isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledTree {
    size: usize,
    label: Colour,
    children: Vec<LabelledTree>,
}

/// Element of the free pre-Lie algebra on `n` generators.
pub type PreLieElement = Combination<LabelledTree>;

impl LabelledTree {
    pub fn leaf(label: Colour) -> Self {
        Self::new(label, Vec::new())
    }

    pub fn new(label: Colour, mut children: Vec<LabelledTree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        LabelledTree { size, label, children }
    }

    pub fn label(&self) -> Colour {
        self.label
    }

    pub fn children(&self) -> &[LabelledTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        self.size
    }

    fn parse(cur: &mut Cursor<'_>) -> Result<Self> {
        cur.expect('(')?;
        cur.skip_ws();
        let pos = cur.pos();
        let label = Colour::new(cur.uint()?).map_err(|_| Error::parse(pos, "labels start at 1"))?;
        cur.skip_ws();
        cur.expect(')')?;
        cur.skip_ws();
        cur.expect('[')?;
        let mut children = Vec::new();
        cur.skip_ws();
        if !cur.eat(']') {
            loop {
                cur.skip_ws();
                children.push(Self::parse(cur)?);
                cur.skip_ws();
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        Ok(Self::new(label, children))
    }

    fn write(&self, out: &mut String) {
        out.push('(');
        out.push_str(&self.label.to_string());
        out.push_str(")[");
        for (k, c) in self.children.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            c.write(out);
        }
        out.push(']');
    }
}

impl fmt::Display for LabelledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for LabelledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LabelledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_all(s, LabelledTree::parse)
    }
}

impl BasisText for LabelledTree {
    fn write_basis(&self, out: &mut String) {
        self.write(out);
    }
}

impl BasisParse for LabelledTree {
    fn parse_basis(cur: &mut Cursor<'_>) -> Result<Self> {
        LabelledTree::parse(cur)
    }
}

impl JsonBasis for LabelledTree {
    fn to_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("labelled".into(), json!(self.to_string()));
    }

    fn from_fields(obj: &Map<String, Value>) -> Result<Self> {
        obj.get("labelled")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse(0, "JSON term is missing string field 'labelled'"))?
            .parse()
    }
}

fn graft_everywhere(t: &LabelledTree, s: &LabelledTree) -> Vec<LabelledTree> {
    let mut children = t.children.clone();
    children.push(s.clone());
    let mut out = vec![LabelledTree::new(t.label, children)];
    for (k, child) in t.children.iter().enumerate() {
        for grafted in graft_everywhere(child, s) {
            let mut children = t.children.clone();
            children[k] = grafted;
            out.push(LabelledTree::new(t.label, children));
        }
    }
    out
}

/// `t ∘_v s`: the root of `s` joined by a new edge to the vertex of `t` with
/// preorder index `v`.
pub fn free_graft(t: &LabelledTree, v: usize, s: &LabelledTree) -> Result<LabelledTree> {
    graft_everywhere(t, s)
        .into_iter()
        .nth(v)
        .ok_or_else(|| Error::InvalidVertex(format!("{v} in a tree with {} vertices", t.size)))
}

/// `t • s = Σ_{v ∈ t} t ∘_v s`, extended bilinearly.
pub fn free_bullet(a: &PreLieElement, b: &PreLieElement) -> PreLieElement {
    let mut out = PreLieElement::zero();
    for (t, c) in a {
        for (s, d) in b {
            let cd = c * d;
            for w in graft_everywhere(t, s) {
                out.add_term(cd.clone(), w);
            }
        }
    }
    out
}

/// `↑_i t`: the root is labelled `i` and every other vertex takes the colour
/// of the edge below it.
pub fn up_map(i: Colour, t: &ColouredTree) -> LabelledTree {
    LabelledTree::new(i, t.children().iter().map(|(c, child)| up_map(*c, child)).collect())
}

/// Inverse of [`up_map`]: the root label and the coloured tree.
pub fn down_map(t: &LabelledTree) -> (Colour, ColouredTree) {
    let children = t.children.iter().map(down_map).collect();
    (t.label, ColouredTree::from_children(children))
}

/// `φ(D_t) = Σ_{j=1}^n ↑_j t`, extended linearly.
pub fn phi(a: &DualElement, n: u16) -> PreLieElement {
    a.map_linear(|t| Colour::all(n).map(|j| (Coefficient::one(), up_map(j, t))).collect())
}
