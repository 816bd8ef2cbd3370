//! Elements of the symmetric algebra on coloured trees, their tensor
//! squares, and the shared text and JSON encodings of linear combinations.

use serde_json::{json, Map, Value};

use super::{BasisText, Coefficient, Combination, QSpec};
use crate::error::{Error, Result};
use crate::forest::{Colour, ColouredTree, Forest};
use crate::text::{parse_all, Cursor};

/// Linear combination of forests.
pub type Element = Combination<Forest>;

/// Linear combination of ordered pairs of forests.
pub type TensorElement = Combination<(Forest, Forest)>;

/// Coefficient of the empty forest.
pub fn counit(a: &Element) -> Coefficient {
    a.constant_term()
}

/// `σ_i(t_1, …, t_n) = (Π_j q_{ij}^{|t_j|}) · t_1 ⋯ t_n`, extended
/// multilinearly; `|t_j|` is read off each homogeneous component.
pub fn sigma(side: u8, qspec: &QSpec, args: &[Element]) -> Result<Element> {
    let n = qspec.colour_count();
    if args.len() != n as usize {
        return Err(Error::ArityMismatch {
            expected: n as usize,
            got: args.len(),
        });
    }
    let mut acc = Element::one();
    for (j, arg) in args.iter().enumerate() {
        let q = qspec.entry(side, Colour::from_index(j));
        let weighted = arg.map_linear(|f| Element::term(q.pow(f.vertex_count() as u32), f.clone()));
        acc = acc.product(&weighted);
    }
    Ok(acc)
}

impl BasisText for Forest {
    fn write_basis(&self, out: &mut String) {
        self.write(out);
    }
}

impl BasisText for ColouredTree {
    fn write_basis(&self, out: &mut String) {
        self.write(out);
    }
}

impl<A: BasisText, B: BasisText> BasisText for (A, B) {
    fn write_basis(&self, out: &mut String) {
        self.0.write_basis(out);
        out.push_str(" ⊗ ");
        self.1.write_basis(out);
    }
}

/// Basis elements that can be read back from their text form.
pub trait BasisParse: Sized {
    fn parse_basis(cur: &mut Cursor<'_>) -> Result<Self>;
}

impl BasisParse for Forest {
    fn parse_basis(cur: &mut Cursor<'_>) -> Result<Self> {
        Forest::parse(cur)
    }
}

impl BasisParse for ColouredTree {
    fn parse_basis(cur: &mut Cursor<'_>) -> Result<Self> {
        ColouredTree::parse(cur)
    }
}

impl<A: BasisParse, B: BasisParse> BasisParse for (A, B) {
    fn parse_basis(cur: &mut Cursor<'_>) -> Result<Self> {
        let a = A::parse_basis(cur)?;
        cur.skip_ws();
        if !cur.eat('⊗') {
            return Err(cur.error("expected '⊗'"));
        }
        cur.skip_ws();
        Ok((a, B::parse_basis(cur)?))
    }
}

/// Parses `coef basis (+|-) coef basis …`; a coefficient of 1 may be
/// omitted and `0` is the empty combination.
pub fn parse_combination<B: BasisParse + Ord + Clone>(s: &str) -> Result<Combination<B>> {
    parse_all(s, |cur| {
        if cur.rest().trim() == "0" {
            cur.reset(cur.pos() + cur.rest().len());
            return Ok(Combination::zero());
        }
        let mut out = Combination::zero();
        let mut negate = cur.eat('-');
        loop {
            cur.skip_ws();
            let (c, b) = parse_term::<B>(cur)?;
            out.add_term(if negate { -c } else { c }, b);
            cur.skip_ws();
            if cur.eat('+') {
                negate = false;
            } else if cur.eat('-') {
                negate = true;
            } else {
                return Ok(out);
            }
        }
    })
}

fn parse_term<B: BasisParse>(cur: &mut Cursor<'_>) -> Result<(Coefficient, B)> {
    let start = cur.pos();
    let starts_tree = cur.peek() == Some('[');
    match B::parse_basis(cur) {
        Ok(b) => {
            let after = cur.pos();
            cur.skip_ws();
            let done = cur.at_end() || matches!(cur.peek(), Some('+') | Some('-'));
            cur.reset(after);
            if done {
                return Ok((Coefficient::one(), b));
            }
        }
        // no coefficient starts with '['
        Err(e) if starts_tree => return Err(e),
        Err(_) => {}
    }
    cur.reset(start);
    let c = Coefficient::parse_factor_chain(cur)?;
    if !matches!(cur.peek(), Some(ch) if ch.is_whitespace()) {
        return Err(cur.error("expected whitespace between coefficient and basis element"));
    }
    cur.skip_ws();
    Ok((c, B::parse_basis(cur)?))
}

/// JSON field encoding of a basis element.
pub trait JsonBasis: Sized {
    fn to_fields(&self, obj: &mut Map<String, Value>);
    fn from_fields(obj: &Map<String, Value>) -> Result<Self>;
}

fn string_field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    obj.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse(0, format!("JSON term is missing string field '{key}'")))
}

impl JsonBasis for Forest {
    fn to_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("forest".into(), json!(self.to_string()));
    }

    fn from_fields(obj: &Map<String, Value>) -> Result<Self> {
        string_field(obj, "forest")?.parse()
    }
}

impl JsonBasis for ColouredTree {
    fn to_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("tree".into(), json!(self.to_string()));
    }

    fn from_fields(obj: &Map<String, Value>) -> Result<Self> {
        string_field(obj, "tree")?.parse()
    }
}

impl JsonBasis for (Forest, Forest) {
    fn to_fields(&self, obj: &mut Map<String, Value>) {
        obj.insert("left".into(), json!(self.0.to_string()));
        obj.insert("right".into(), json!(self.1.to_string()));
    }

    fn from_fields(obj: &Map<String, Value>) -> Result<Self> {
        Ok((
            string_field(obj, "left")?.parse()?,
            string_field(obj, "right")?.parse()?,
        ))
    }
}

/// `[{<basis fields>, "coef": "<coefficient>"}, …]` in canonical order.
pub fn to_json<B: JsonBasis + Ord + Clone>(c: &Combination<B>) -> Value {
    Value::Array(
        c.iter()
            .map(|(b, coef)| {
                let mut obj = Map::new();
                b.to_fields(&mut obj);
                obj.insert("coef".into(), json!(coef.to_string()));
                Value::Object(obj)
            })
            .collect(),
    )
}

pub fn from_json<B: JsonBasis + Ord + Clone>(v: &Value) -> Result<Combination<B>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse(0, "expected a JSON array of terms"))?;
    let mut out = Combination::zero();
    for item in items {
        let obj = item
            .as_object()
            .ok_or_else(|| Error::parse(0, "expected a JSON object per term"))?;
        let coef: Coefficient = string_field(obj, "coef")?.parse()?;
        out.add_term(coef, B::from_fields(obj)?);
    }
    Ok(out)
}
