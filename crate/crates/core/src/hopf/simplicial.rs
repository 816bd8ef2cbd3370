use crate::coeff::Element;
use crate::error::{Error, Result};
use crate::forest::{lambda, ColouredTree, Forest};

/// Face map `d_i` from `n` colours to `n - 1`, `0 ≤ i ≤ n`.
///
/// `d_0` detaches the colour-1 subtrees of every vertex and shifts the other
/// colours down; `d_n` detaches the colour-`n` subtrees; for `0 < i < n` the
/// colours `i` and `i + 1` are merged.
pub fn simplicial_d(i: u16, n: u16, a: &Element) -> Result<Element> {
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange {
            index: i as usize,
            max: n as usize,
        });
    }
    check(n, a)?;
    Ok(a.map_basis(|f| face_forest(i, n, f)))
}

/// Degeneracy map `s_i` from `n` colours to `n + 1`, `0 ≤ i ≤ n`: colours
/// above `i` move up by one, leaving colour `i + 1` unused.
pub fn simplicial_s(i: u16, n: u16, a: &Element) -> Result<Element> {
    if i > n {
        return Err(Error::IndexOutOfRange {
            index: i as usize,
            max: n as usize,
        });
    }
    check(n, a)?;
    Ok(a.map_basis(|f| degeneracy_forest(i, n, f)))
}

fn check(n: u16, a: &Element) -> Result<()> {
    for f in a.basis_elements() {
        f.check_colours(n)?;
    }
    Ok(())
}

fn face_forest(i: u16, n: u16, f: &Forest) -> Forest {
    f.trees()
        .iter()
        .fold(Forest::empty(), |acc, t| acc.union(&face_tree(i, n, t)))
}

fn face_tree(i: u16, n: u16, t: &ColouredTree) -> Forest {
    let mut x: Vec<Forest> = t.decompose(n).iter().map(|f| face_forest(i, n, f)).collect();
    let join = |slots: &[Forest]| Forest::single(lambda(n - 1, slots).expect("faces lower every colour"));
    if i == 0 {
        let detached = x.remove(0);
        detached.union(&join(&x))
    } else if i == n {
        let detached = x.pop().expect("n ≥ 1");
        join(&x).union(&detached)
    } else {
        let k = i as usize - 1;
        let merged = x[k].union(&x[k + 1]);
        x[k] = merged;
        x.remove(k + 1);
        join(&x)
    }
}

fn degeneracy_forest(i: u16, n: u16, f: &Forest) -> Forest {
    let trees = f.trees().iter().map(|t| degeneracy_tree(i, n, t)).collect();
    Forest::from_trees(trees)
}

fn degeneracy_tree(i: u16, n: u16, t: &ColouredTree) -> ColouredTree {
    let mut x: Vec<Forest> = t.decompose(n).iter().map(|f| degeneracy_forest(i, n, f)).collect();
    x.insert(i as usize, Forest::empty());
    lambda(n + 1, &x).expect("degeneracies raise every colour")
}
