use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::coeff::{Coefficient, Combination};
use crate::error::{Error, Result};
use crate::forest::{enumerate_trees, Colour, ColouredTree, ForestLayout};
use crate::hopf::{subset_q, HopfContext};

/// `Σ c_t D_t` over single trees.
pub type DualElement = Combination<ColouredTree>;

/// Basis products of one degree, keyed by `(complement, subtree)`.
pub(crate) type ProductCache<T, V> = HashMap<(T, T), V>;

/// Largest `|t| + |s|` accepted by [`bullet`].
pub const DEFAULT_BUDGET: usize = 8;

/// Structure constants of `•`, filled one output degree at a time by
/// running over every tree `w` of that degree and every split of its vertices
/// into two sets that each induce a single tree.
#[derive(Debug)]
pub struct BulletTable {
    ctx: HopfContext,
    budget: usize,
    by_degree: RefCell<BTreeMap<usize, ProductCache<ColouredTree, DualElement>>>,
}

impl BulletTable {
    pub fn new(ctx: HopfContext, budget: usize) -> Self {
        BulletTable {
            ctx,
            budget,
            by_degree: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn context(&self) -> &HopfContext {
        &self.ctx
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn fill(&self, degree: usize) {
        if self.by_degree.borrow().contains_key(&degree) {
            return;
        }
        let mut table: HashMap<(ColouredTree, ColouredTree), DualElement> = HashMap::new();
        for w in enumerate_trees(self.ctx.n(), degree) {
            let layout = ForestLayout::from_tree(&w);
            let all = layout.all();
            for s in all.subsets() {
                if s.is_empty() || s == all {
                    continue;
                }
                let Some(sub) = layout.induced_forest(s).as_tree().cloned() else {
                    continue;
                };
                let Some(rest) = layout.induced_forest(all.minus(s)).as_tree().cloned() else {
                    continue;
                };
                let q = subset_q(&layout, s, all, &self.ctx);
                table.entry((rest, sub)).or_default().add_term(q, w.clone());
            }
        }
        self.by_degree.borrow_mut().insert(degree, table);
    }

    /// `D_t • D_s`.
    pub fn basis_product(&self, t: &ColouredTree, s: &ColouredTree) -> Result<DualElement> {
        let degree = t.vertex_count() + s.vertex_count();
        if degree > self.budget {
            return Err(Error::BudgetExceeded {
                degree,
                budget: self.budget,
            });
        }
        let n = self.ctx.n();
        t.check_colours(n)?;
        s.check_colours(n)?;
        self.fill(degree);
        let tables = self.by_degree.borrow();
        let key = (t.clone(), s.clone());
        Ok(tables[&degree].get(&key).cloned().unwrap_or_default())
    }

    /// Bilinear extension of `D_t • D_s`.
    pub fn bullet(&self, a: &DualElement, b: &DualElement) -> Result<DualElement> {
        let mut out = DualElement::zero();
        for (t, c) in a {
            for (s, d) in b {
                out.add_scaled(&(c * d), &self.basis_product(t, s)?);
            }
        }
        Ok(out)
    }

    /// `[a, b] = b • a − a • b`.
    pub fn lie_bracket(&self, a: &DualElement, b: &DualElement) -> Result<DualElement> {
        Ok(self.bullet(b, a)?.sub(&self.bullet(a, b)?))
    }
}

/// `D_t • D_s = Σ_w Σ_{s ⊂ w, s^c ≅ t} q(s, w) D_w`, extended bilinearly,
/// with the output degree capped by [`DEFAULT_BUDGET`].
pub fn bullet(a: &DualElement, b: &DualElement, ctx: &HopfContext) -> Result<DualElement> {
    BulletTable::new(ctx.clone(), DEFAULT_BUDGET).bullet(a, b)
}

/// `[D_s, D_t] = D_t • D_s − D_s • D_t`.
pub fn lie_bracket(a: &DualElement, b: &DualElement, ctx: &HopfContext) -> Result<DualElement> {
    BulletTable::new(ctx.clone(), DEFAULT_BUDGET).lie_bracket(a, b)
}

/// `a • b − b • a`, the commutator with the opposite sign convention.
pub fn lie_bracket_opposite(a: &DualElement, b: &DualElement, ctx: &HopfContext) -> Result<DualElement> {
    Ok(lie_bracket(a, b, ctx)?.neg())
}

/// `t ∘_{(v,i)} s` for every vertex `v` of `t`, in preorder.
pub fn graft_all(t: &ColouredTree, colour: Colour, s: &ColouredTree) -> Vec<ColouredTree> {
    let mut children = t.children().to_vec();
    children.push((colour, s.clone()));
    let mut out = vec![ColouredTree::from_children(children)];
    for (k, (c, child)) in t.children().iter().enumerate() {
        for grafted in graft_all(child, colour, s) {
            let mut children = t.children().to_vec();
            children[k] = (*c, grafted);
            out.push(ColouredTree::from_children(children));
        }
    }
    out
}

/// `t ∘_{(v,i)} s` for the vertex of `t` with preorder index `v`.
pub fn graft(t: &ColouredTree, v: usize, colour: Colour, s: &ColouredTree) -> Result<ColouredTree> {
    graft_all(t, colour, s)
        .into_iter()
        .nth(v)
        .ok_or(Error::IndexOutOfRange {
            index: v,
            max: t.vertex_count().saturating_sub(1),
        })
}

/// `D_t •′ D_s = Σ_{v ∈ t} Σ_{i ∈ p} D_{t ∘_{(v,i)} s}`, extended bilinearly.
pub fn bullet_prime(a: &DualElement, b: &DualElement, p: &[Colour]) -> DualElement {
    let mut out = DualElement::zero();
    for (t, c) in a {
        for (s, d) in b {
            let cd = c * d;
            for &i in p {
                for w in graft_all(t, i, s) {
                    out.add_term(cd.clone(), w);
                }
            }
        }
    }
    out
}

/// `D_t ↦ |Aut t| · D_t`.
pub fn aut_rescale(a: &DualElement) -> DualElement {
    a.map_linear(|t| DualElement::term(Coefficient::from_bigint(BigInt::from(t.aut_order())), t.clone()))
}

/// `D_t ↦ |Aut t|⁻¹ · D_t`.
pub fn aut_rescale_inverse(a: &DualElement) -> DualElement {
    a.map_linear(|t| {
        let order = Coefficient::from_bigint(BigInt::from(t.aut_order()));
        let inverse = order.as_rational().expect("constant").recip();
        DualElement::term(Coefficient::from_rational(inverse), t.clone())
    })
}
