use std::cell::RefCell;
use std::collections::HashMap;

use super::HopfContext;
use crate::coeff::{Coefficient, Element, TensorElement};
use crate::error::{Error, Result};
use crate::forest::{lambda, ColouredTree, Forest, ForestLayout, Subforest, VertexSet};

/// `q(s, host)` for a subset `side` of the structure induced on `host`:
/// each vertex of `side` picks up `q_{1j}` per colour-`j` edge of its root
/// path whose lower vertex lies in `host \ side`, and each vertex of
/// `host \ side` picks up `q_{2j}` per such edge with lower vertex in
/// `side`.
pub fn subset_q(layout: &ForestLayout, side: VertexSet, host: VertexSet, ctx: &HopfContext) -> Coefficient {
    let n = ctx.n() as usize;
    let mut first = vec![0u32; n];
    let mut second = vec![0u32; n];
    let other = host.minus(side);
    for v in side.iter() {
        layout.path_counts(v, side, host, &mut first);
    }
    for v in other.iter() {
        layout.path_counts(v, other, host, &mut second);
    }
    ctx.qspec().power_product(&first, &second)
}

/// `q(s, t)` for a subforest of its host forest.
pub fn q_coeff(s: &Subforest<'_>, ctx: &HopfContext) -> Coefficient {
    let layout = s.layout();
    subset_q(layout, s.selected(), layout.all(), ctx)
}

/// `Δ(t) = Σ_{s ⊂ t} q(s, t) · s ⊗ s^c` over all vertex subsets of `t`.
pub fn coproduct_forest(f: &Forest, ctx: &HopfContext) -> TensorElement {
    let layout = ForestLayout::from_forest(f);
    let all = layout.all();
    let mut out = TensorElement::zero();
    for s in all.subsets() {
        let q = subset_q(&layout, s, all, ctx);
        if q.is_zero() {
            continue;
        }
        out.add_term(q, (layout.induced_forest(s), layout.induced_forest(all.minus(s))));
    }
    out
}

/// Closed-formula coproduct, extended linearly.
pub fn coproduct(a: &Element, ctx: &HopfContext) -> TensorElement {
    a.map_linear(|f| coproduct_forest(f, ctx))
}

/// `λ` extended multilinearly to elements.
pub fn lambda_element(n: u16, args: &[Element]) -> Result<Element> {
    if args.len() != n as usize {
        return Err(Error::ArityMismatch {
            expected: n as usize,
            got: args.len(),
        });
    }
    let mut partial: Vec<(Coefficient, Vec<Forest>)> = vec![(Coefficient::one(), Vec::new())];
    for arg in args {
        let mut next = Vec::new();
        for (c, fs) in &partial {
            for (f, d) in arg {
                let mut fs = fs.clone();
                fs.push(f.clone());
                next.push((c * d, fs));
            }
        }
        partial = next;
    }
    let mut out = Element::zero();
    for (c, fs) in partial {
        out.add_term(c, Forest::single(lambda(n, &fs)?));
    }
    Ok(out)
}

type Emit<'e, 'a> = dyn FnMut(Coefficient, &[&'a (Forest, Forest)]) -> Result<()> + 'e;

/// Calls `emit` once per choice of one term from each of `parts`, with the
/// product of the chosen coefficients.
pub(crate) fn for_each_choice<'a>(parts: &'a [TensorElement], emit: &mut Emit<'_, 'a>) -> Result<()> {
    fn rec<'a>(
        parts: &'a [TensorElement],
        coef: Coefficient,
        chosen: &mut Vec<&'a (Forest, Forest)>,
        emit: &mut Emit<'_, 'a>,
    ) -> Result<()> {
        let Some((head, tail)) = parts.split_first() else {
            return emit(coef, chosen);
        };
        for (b, c) in head {
            chosen.push(b);
            rec(tail, &coef * c, chosen, emit)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(parts, Coefficient::one(), &mut Vec::with_capacity(parts.len()), emit)
}

fn check_arity(ctx: &HopfContext, got: usize) -> Result<()> {
    if got != ctx.n() as usize {
        return Err(Error::ArityMismatch {
            expected: ctx.n() as usize,
            got,
        });
    }
    Ok(())
}

/// `(Π_j q_{side,j}^{|f_j|}, f_1 ⋯ f_n)`.
fn sigma_basis<'a>(ctx: &HopfContext, side: u8, fs: impl Iterator<Item = &'a Forest>) -> (Coefficient, Forest) {
    let n = ctx.n() as usize;
    let mut exps = vec![0u32; n];
    let zeros = vec![0u32; n];
    let mut product = Forest::empty();
    for (j, f) in fs.enumerate() {
        exps[j] = f.vertex_count() as u32;
        product = product.union(f);
    }
    let q = if side == 1 {
        ctx.qspec().power_product(&exps, &zeros)
    } else {
        ctx.qspec().power_product(&zeros, &exps)
    };
    (q, product)
}

/// `(σ_1, σ_2) ∘ τ` applied to `x_1 ⊗ … ⊗ x_n` with `x_j ∈ C ⊗ C`:
/// `Σ σ_1(x'_1, …, x'_n) ⊗ λ(x''_1, …, x''_n) + λ(x'_1, …) ⊗ σ_2(x''_1, …)`.
pub fn sigma_pair(ctx: &HopfContext, parts: &[TensorElement]) -> Result<TensorElement> {
    check_arity(ctx, parts.len())?;
    let n = ctx.n();
    let mut out = TensorElement::zero();
    for_each_choice(parts, &mut |c, chosen| {
        let lefts: Vec<Forest> = chosen.iter().map(|(l, _)| l.clone()).collect();
        let rights: Vec<Forest> = chosen.iter().map(|(_, r)| r.clone()).collect();
        let (q1, left_product) = sigma_basis(ctx, 1, lefts.iter());
        let (q2, right_product) = sigma_basis(ctx, 2, rights.iter());
        out.add_term(&c * &q1, (left_product, Forest::single(lambda(n, &rights)?)));
        out.add_term(&c * &q2, (Forest::single(lambda(n, &lefts)?), right_product));
        Ok(())
    })?;
    Ok(out)
}

/// `(σ_i ⊗ σ_i) ∘ τ` applied to `x_1 ⊗ … ⊗ x_n` with `x_j ∈ C ⊗ C`.
pub fn sigma_tensor(ctx: &HopfContext, side: u8, parts: &[TensorElement]) -> Result<TensorElement> {
    check_arity(ctx, parts.len())?;
    let mut out = TensorElement::zero();
    for_each_choice(parts, &mut |c, chosen| {
        let (q1, l) = sigma_basis(ctx, side, chosen.iter().map(|(l, _)| l));
        let (q2, r) = sigma_basis(ctx, side, chosen.iter().map(|(_, r)| r));
        out.add_term(&(&c * &q1) * &q2, (l, r));
        Ok(())
    })?;
    Ok(out)
}

/// Memoised coproduct computed by structural recursion:
/// `Δ(λ(f_1, …, f_n)) = (σ_1, σ_2)(Δ f_1, …, Δ f_n)` and `Δ` multiplicative.
#[derive(Debug)]
pub struct Coproduct<'a> {
    ctx: &'a HopfContext,
    trees: RefCell<HashMap<ColouredTree, TensorElement>>,
}

impl<'a> Coproduct<'a> {
    pub fn new(ctx: &'a HopfContext) -> Self {
        Coproduct {
            ctx,
            trees: RefCell::new(HashMap::new()),
        }
    }

    pub fn tree(&self, t: &ColouredTree) -> TensorElement {
        if let Some(hit) = self.trees.borrow().get(t) {
            return hit.clone();
        }
        let n = self.ctx.n();
        let parts: Vec<TensorElement> = t.decompose(n).iter().map(|f| self.forest(f)).collect();
        let out = sigma_pair(self.ctx, &parts).expect("decomposition has one slot per colour");
        self.trees.borrow_mut().insert(t.clone(), out.clone());
        out
    }

    pub fn forest(&self, f: &Forest) -> TensorElement {
        f.trees()
            .iter()
            .fold(TensorElement::one(), |acc, t| acc.product(&self.tree(t)))
    }
}

/// Inductive-formula coproduct, extended linearly.
pub fn coproduct_inductive(a: &Element, ctx: &HopfContext) -> TensorElement {
    let memo = Coproduct::new(ctx);
    a.map_linear(|f| memo.forest(f))
}
