use std::collections::HashMap;

use super::coproduct::{coproduct_forest, subset_q};
use super::HopfContext;
use crate::coeff::{Coefficient, Combination, Element, MonoidBasis};
use crate::forest::{Forest, ForestLayout, VertexSet};

/// `S(x) = Σ_{k ≥ 1} (-1)^k μ^{(k)} Δ̄^{(k-1)}(x)` for a non-unit basis
/// element of a connected graded bialgebra, where `Δ̄(y) = Δ(y) - y ⊗ 1 - 1 ⊗ y`.
/// `S(1) = 1`.
///
/// The iterated reduced coproduct is unfolded on its rightmost leg while the
/// product of the finished legs is carried along, so each stage is a
/// combination of pairs `(prefix, tail)`.
pub fn antipode_series<B: MonoidBasis>(x: &B, mut coproduct: impl FnMut(&B) -> Combination<(B, B)>) -> Combination<B> {
    if *x == B::unit() {
        return Combination::one();
    }
    let mut out = Combination::zero();
    let mut stage: Combination<(B, B)> = Combination::basis((B::unit(), x.clone()));
    let mut sign = Coefficient::from_integer(-1);
    while !stage.is_zero() {
        out.add_scaled(&sign, &stage.map_basis(|(p, t)| p.product(t)));
        let mut next = Combination::zero();
        for ((prefix, tail), c) in &stage {
            let mut reduced = coproduct(tail);
            reduced.add_term(Coefficient::from_integer(-1), (tail.clone(), B::unit()));
            reduced.add_term(Coefficient::from_integer(-1), (B::unit(), tail.clone()));
            for ((a, b), d) in &reduced {
                next.add_term(c * d, (prefix.product(a), b.clone()));
            }
        }
        stage = next;
        sign = -sign;
    }
    out
}

/// `μ ∘ (f ⊗ g) ∘ Δ` on a basis element.
pub fn convolution<B: MonoidBasis>(
    x: &B,
    coproduct: impl Fn(&B) -> Combination<(B, B)>,
    f: impl Fn(&B) -> Combination<B>,
    g: impl Fn(&B) -> Combination<B>,
) -> Combination<B> {
    coproduct(x).map_linear(|(a, b)| f(a).product(&g(b)))
}

/// Antipode from the recursive series over the closed-formula coproduct.
pub fn antipode_recursive(a: &Element, ctx: &HopfContext) -> Element {
    let mut memo: HashMap<Forest, Combination<(Forest, Forest)>> = HashMap::new();
    a.map_linear(|f| {
        antipode_series(f, |t| {
            memo.entry(t.clone())
                .or_insert_with(|| coproduct_forest(t, ctx))
                .clone()
        })
    })
}

/// Antipode as a sum over ordered set partitions `(s_1, …, s_k)` of the
/// vertices: `(-1)^k s_1 ⋯ s_k Π_{j<k} q(s_j, s_j ∪ … ∪ s_k)`, each factor
/// taken inside the structure induced on the remaining vertices.
pub fn antipode_partitions(a: &Element, ctx: &HopfContext) -> Element {
    a.map_linear(|f| antipode_partitions_forest(f, ctx))
}

fn antipode_partitions_forest(f: &Forest, ctx: &HopfContext) -> Element {
    let layout = ForestLayout::from_forest(f);
    let mut induced: HashMap<VertexSet, Forest> = HashMap::new();
    let mut out = Element::zero();
    if layout.is_empty() {
        return Element::one();
    }

    struct Walk<'a> {
        layout: &'a ForestLayout,
        ctx: &'a HopfContext,
        induced: &'a mut HashMap<VertexSet, Forest>,
        out: &'a mut Element,
    }

    impl Walk<'_> {
        fn piece(&mut self, s: VertexSet) -> Forest {
            let layout = self.layout;
            self.induced
                .entry(s)
                .or_insert_with(|| layout.induced_forest(s))
                .clone()
        }

        fn run(&mut self, rest: VertexSet, coef: Coefficient, acc: Forest, blocks: usize) {
            if rest.is_empty() {
                self.out
                    .add_term(if blocks.is_multiple_of(2) { coef } else { -coef }, acc);
                return;
            }
            for s in rest.subsets() {
                if s.is_empty() {
                    continue;
                }
                let piece = self.piece(s);
                let acc = acc.union(&piece);
                if s == rest {
                    self.run(VertexSet::empty(), coef.clone(), acc, blocks + 1);
                } else {
                    let q = subset_q(self.layout, s, rest, self.ctx);
                    if q.is_zero() {
                        continue;
                    }
                    self.run(rest.minus(s), &coef * &q, acc, blocks + 1);
                }
            }
        }
    }

    let mut walk = Walk {
        layout: &layout,
        ctx,
        induced: &mut induced,
        out: &mut out,
    };
    walk.run(layout.all(), Coefficient::one(), Forest::empty(), 0);
    out
}
