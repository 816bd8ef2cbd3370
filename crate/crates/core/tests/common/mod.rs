//! Brute-force tree generation used as an oracle for the library's
//! enumeration and canonical forms.
//!
//! Trees are produced as raw parent maps (`parent[v] < v`, one colour per
//! non-root vertex) and identified through their own bracket encoding, with
//! no use of the library's tree types.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// A labelled representative: `parent[0]` is unused, `parent[v] < v` otherwise.
#[derive(Debug, Clone)]
pub struct ParentMap {
    pub parent: Vec<usize>,
    pub colour: Vec<u16>,
}

/// Every parent map on `m` vertices with colours in `1..=n`.
pub fn parent_maps(n: u16, m: usize) -> Vec<ParentMap> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut parent = vec![0usize; m];
    let mut colour = vec![0u16; m];
    fn rec(v: usize, n: u16, parent: &mut Vec<usize>, colour: &mut Vec<u16>, out: &mut Vec<ParentMap>) {
        if v == parent.len() {
            out.push(ParentMap {
                parent: parent.clone(),
                colour: colour.clone(),
            });
            return;
        }
        for p in 0..v {
            for c in 1..=n {
                parent[v] = p;
                colour[v] = c;
                rec(v + 1, n, parent, colour, out);
            }
        }
    }
    rec(1, n, &mut parent, &mut colour, &mut out);
    out
}

fn children(map: &ParentMap, v: usize) -> Vec<usize> {
    (1..map.parent.len()).filter(|&w| map.parent[w] == v).collect()
}

/// Isomorphism-invariant code: a vertex is `(` followed by the sorted codes
/// `c:<child>` of its children and `)`.
pub fn unordered_code(map: &ParentMap, v: usize) -> String {
    let mut parts: Vec<String> = children(map, v)
        .into_iter()
        .map(|w| format!("{}:{}", map.colour[w], unordered_code(map, w)))
        .collect();
    parts.sort();
    format!("({})", parts.join(""))
}

/// Planar code: children listed in increasing label order, grouped by
/// colour without reordering inside a colour.
pub fn planar_code(map: &ParentMap, v: usize) -> String {
    let mut kids = children(map, v);
    kids.sort_by_key(|&w| map.colour[w]);
    let parts: Vec<String> = kids
        .into_iter()
        .map(|w| format!("{}:{}", map.colour[w], planar_code(map, w)))
        .collect();
    format!("({})", parts.join(""))
}

pub fn distinct_trees(n: u16, m: usize) -> BTreeSet<String> {
    parent_maps(n, m).iter().map(|p| unordered_code(p, 0)).collect()
}

/// Planar trees are the parent maps labelled in preorder, so only maps whose
/// labels increase along the planar depth-first walk are kept.
pub fn distinct_planar_trees(n: u16, m: usize) -> BTreeSet<String> {
    parent_maps(n, m)
        .iter()
        .filter(|p| is_preorder(p))
        .map(|p| planar_code(p, 0))
        .collect()
}

fn is_preorder(map: &ParentMap) -> bool {
    let mut order = Vec::new();
    fn walk(map: &ParentMap, v: usize, order: &mut Vec<usize>) {
        order.push(v);
        let mut kids = children(map, v);
        kids.sort_by_key(|&w| map.colour[w]);
        for w in kids {
            walk(map, w, order);
        }
    }
    walk(map, 0, &mut order);
    order.iter().enumerate().all(|(k, &v)| k == v)
}

/// The oracle's encoding of a tree written in the bracket grammar
/// `[c:child,...]`, read character by character.
pub fn code_of_text(s: &str, planar: bool) -> String {
    let bytes = s.as_bytes();
    let mut pos = 0;
    fn tree(b: &[u8], pos: &mut usize, planar: bool) -> String {
        assert_eq!(b[*pos], b'[');
        *pos += 1;
        let mut parts = Vec::new();
        while b[*pos] != b']' {
            if b[*pos] == b',' {
                *pos += 1;
            }
            let start = *pos;
            while b[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let colour: u16 = std::str::from_utf8(&b[start..*pos]).unwrap().parse().unwrap();
            assert_eq!(b[*pos], b':');
            *pos += 1;
            parts.push((colour, format!("{colour}:{}", tree(b, pos, planar))));
        }
        *pos += 1;
        if planar {
            parts.sort_by_key(|(c, _)| *c);
        } else {
            parts.sort();
        }
        let codes: Vec<String> = parts.into_iter().map(|(_, c)| c).collect();
        format!("({})", codes.join(""))
    }
    let out = tree(bytes, &mut pos, planar);
    assert_eq!(pos, bytes.len());
    out
}
