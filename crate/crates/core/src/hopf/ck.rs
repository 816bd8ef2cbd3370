use crate::coeff::{Coefficient, TensorElement};
use crate::error::{Error, Result};
use crate::forest::{canonicalize, ColouredTree, Forest, RawTree};

/// Connes–Kreimer coproduct of a one-coloured forest by admissible cuts:
/// `Δ(t) = t ⊗ 1 + Σ_c P^c(t) ⊗ R^c(t)`, where `c` runs over edge sets meeting
/// every root path at most once (the empty cut included), `P^c` is the forest
/// cut off and `R^c` the part still attached to the root.
pub fn ck_coproduct_oracle(f: &Forest) -> Result<TensorElement> {
    if f.max_colour() > 1 {
        return Err(Error::ColourOutOfRange {
            colour: f.max_colour(),
            n: 1,
        });
    }
    let mut out = TensorElement::one();
    for t in f.trees() {
        out = out.product(&ck_tree(t)?);
    }
    Ok(out)
}

fn ck_tree(t: &ColouredTree) -> Result<TensorElement> {
    let mut parent: Vec<Option<usize>> = Vec::new();
    flatten(t, None, &mut parent);
    let count = parent.len();
    // edge k is the edge from parent[k + 1] up to vertex k + 1
    let edges = count - 1;
    let mut out = TensorElement::term(Coefficient::one(), (Forest::single(t.clone()), Forest::empty()));
    for cut in 0u64..(1u64 << edges) {
        let is_cut = |v: usize| v > 0 && cut & (1 << (v - 1)) != 0;
        let admissible = (1..count).all(|v| {
            let mut hits = 0;
            let mut w = v;
            while let Some(p) = parent[w] {
                if is_cut(w) {
                    hits += 1;
                }
                w = p;
            }
            hits <= 1
        });
        if !admissible {
            continue;
        }
        // top of each component: the root, or a vertex whose edge is cut
        let mut top = vec![0usize; count];
        for v in 0..count {
            top[v] = match parent[v] {
                Some(p) if !is_cut(v) => top[p],
                _ => v,
            };
        }
        let mut pruned = Vec::new();
        let mut trunk = None;
        for head in (0..count).filter(|&v| top[v] == v) {
            let members: Vec<usize> = (0..count).filter(|&v| top[v] == head).collect();
            let local = |v: usize| members.iter().position(|&m| m == v).expect("member");
            let parents: Vec<Option<usize>> = members
                .iter()
                .map(|&v| if v == head { None } else { parent[v].map(local) })
                .collect();
            let colours = vec![1u16; members.len()];
            let piece = canonicalize(&RawTree::from_parents(&parents, &colours), 1)?;
            if head == 0 {
                trunk = Some(piece);
            } else {
                pruned.push(piece);
            }
        }
        let trunk = trunk.expect("the root heads a component");
        out.add_term(Coefficient::one(), (Forest::from_trees(pruned), Forest::single(trunk)));
    }
    Ok(out)
}

fn flatten(t: &ColouredTree, up: Option<usize>, parent: &mut Vec<Option<usize>>) {
    let me = parent.len();
    parent.push(up);
    for (_, child) in t.children() {
        flatten(child, Some(me), parent);
    }
}
