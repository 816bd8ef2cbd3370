use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use super::tree::{enumerate_planar_trees, forget_word, planar_lambda, planar_words_up_to, PlanarTree, PlanarWord};
use crate::coeff::{Coefficient, Combination};
use crate::error::{Error, Result};
use crate::forest::{ForestLayout, VertexSet};
use crate::hopf::{
    antipode_series, coproduct_forest, subset_q, verify_axioms, CheckResult, HopfContext, VerificationReport,
};
use crate::prelie::ProductCache;

pub type PlanarElement = Combination<PlanarWord>;
pub type PlanarTensor = Combination<(PlanarWord, PlanarWord)>;
/// `Σ c_t D_t` over planar trees.
pub type PlanarDual = Combination<PlanarTree>;

/// Induced planar word on `mask`: roots in preorder, same-colour siblings in
/// inherited order.
fn induced_word(layout: &ForestLayout, mask: VertexSet) -> PlanarWord {
    let induced = layout.induced(mask);
    let mut kids: Vec<Vec<(crate::forest::Colour, PlanarTree)>> = vec![Vec::new(); induced.len()];
    let mut roots = Vec::new();
    for (k, iv) in induced.iter().enumerate().rev() {
        let mut children = std::mem::take(&mut kids[k]);
        children.reverse();
        let tree = PlanarTree::from_children(children);
        match iv.parent {
            Some((p, c)) => kids[p].push((c, tree)),
            None => roots.push(tree),
        }
    }
    roots.reverse();
    PlanarWord(roots)
}

/// `Δ(w) = Σ_{s ⊂ w} q(s, w) · word(s) ⊗ word(s^c)`.
pub fn planar_coproduct_word(w: &PlanarWord, ctx: &HopfContext) -> PlanarTensor {
    let layout = ForestLayout::from_trees(w.trees());
    let all = layout.all();
    let mut out = PlanarTensor::zero();
    for s in all.subsets() {
        let q = subset_q(&layout, s, all, ctx);
        if !q.is_zero() {
            out.add_term(q, (induced_word(&layout, s), induced_word(&layout, all.minus(s))));
        }
    }
    out
}

pub fn planar_coproduct(a: &PlanarElement, ctx: &HopfContext) -> PlanarTensor {
    a.map_linear(|w| planar_coproduct_word(w, ctx))
}

fn sigma_word(ctx: &HopfContext, side: u8, words: &[&PlanarWord]) -> (Coefficient, PlanarWord) {
    let n = ctx.n() as usize;
    let mut exps = vec![0u32; n];
    let zeros = vec![0u32; n];
    let mut product = PlanarWord::empty();
    for (j, w) in words.iter().enumerate() {
        exps[j] = w.vertex_count() as u32;
        product = product.concat(w);
    }
    let q = match side {
        1 => ctx.qspec().power_product(&exps, &zeros),
        _ => ctx.qspec().power_product(&zeros, &exps),
    };
    (q, product)
}

fn planar_tree_inductive(
    t: &PlanarTree,
    ctx: &HopfContext,
    memo: &RefCell<HashMap<PlanarTree, PlanarTensor>>,
) -> PlanarTensor {
    if let Some(hit) = memo.borrow().get(t) {
        return hit.clone();
    }
    let n = ctx.n();
    let parts: Vec<PlanarTensor> = t
        .decompose(n)
        .iter()
        .map(|w| planar_word_inductive(w, ctx, memo))
        .collect();
    let mut choices: Vec<(Coefficient, Vec<&(PlanarWord, PlanarWord)>)> = vec![(Coefficient::one(), Vec::new())];
    for part in &parts {
        let mut next = Vec::new();
        for (c, chosen) in &choices {
            for (b, d) in part {
                let mut chosen = chosen.clone();
                chosen.push(b);
                next.push((c * d, chosen));
            }
        }
        choices = next;
    }
    let mut out = PlanarTensor::zero();
    for (c, chosen) in choices {
        let lefts: Vec<&PlanarWord> = chosen.iter().map(|(l, _)| l).collect();
        let rights: Vec<&PlanarWord> = chosen.iter().map(|(_, r)| r).collect();
        let (q1, l) = sigma_word(ctx, 1, &lefts);
        let (q2, r) = sigma_word(ctx, 2, &rights);
        let join = |ws: &[&PlanarWord]| {
            let owned: Vec<PlanarWord> = ws.iter().map(|w| (*w).clone()).collect();
            PlanarWord::single(planar_lambda(n, &owned).expect("colours in range"))
        };
        out.add_term(&c * &q1, (l, join(&rights)));
        out.add_term(&c * &q2, (join(&lefts), r));
    }
    memo.borrow_mut().insert(t.clone(), out.clone());
    out
}

fn planar_word_inductive(
    w: &PlanarWord,
    ctx: &HopfContext,
    memo: &RefCell<HashMap<PlanarTree, PlanarTensor>>,
) -> PlanarTensor {
    w.trees().iter().fold(PlanarTensor::one(), |acc, t| {
        acc.product(&planar_tree_inductive(t, ctx, memo))
    })
}

/// Coproduct from `Δ(λ(w_1, …, w_n)) = (σ_1, σ_2) ∘ τ (Δ w_1 ⊗ … ⊗ Δ w_n)`,
/// with `σ_i` concatenating in colour order.
pub fn planar_coproduct_inductive(a: &PlanarElement, ctx: &HopfContext) -> PlanarTensor {
    let memo = RefCell::new(HashMap::new());
    a.map_linear(|w| planar_word_inductive(w, ctx, &memo))
}

pub fn planar_antipode(a: &PlanarElement, ctx: &HopfContext) -> PlanarElement {
    let mut memo: HashMap<PlanarWord, PlanarTensor> = HashMap::new();
    a.map_linear(|w| {
        antipode_series(w, |x| {
            memo.entry(x.clone())
                .or_insert_with(|| planar_coproduct_word(x, ctx))
                .clone()
        })
    })
}

/// Structure constants of the planar `•`:
/// `D_s • D_t = Σ_w Σ_{s ⊂ w, s^c = t} q(s, w) D_w`, where the first factor
/// is the subtree and the second its complement.
#[derive(Debug)]
pub struct PlanarBulletTable {
    ctx: HopfContext,
    budget: usize,
    by_degree: RefCell<BTreeMap<usize, ProductCache<PlanarTree, PlanarDual>>>,
}

impl PlanarBulletTable {
    pub fn new(ctx: HopfContext, budget: usize) -> Self {
        PlanarBulletTable {
            ctx,
            budget,
            by_degree: RefCell::new(BTreeMap::new()),
        }
    }

    fn fill(&self, degree: usize) {
        if self.by_degree.borrow().contains_key(&degree) {
            return;
        }
        let mut table: HashMap<(PlanarTree, PlanarTree), PlanarDual> = HashMap::new();
        for w in enumerate_planar_trees(self.ctx.n(), degree) {
            let layout = ForestLayout::from_trees(std::slice::from_ref(&w));
            let all = layout.all();
            for s in all.subsets() {
                if s.is_empty() || s == all {
                    continue;
                }
                let sub = induced_word(&layout, s);
                let rest = induced_word(&layout, all.minus(s));
                let (Some(sub), Some(rest)) = (sub.as_tree(), rest.as_tree()) else {
                    continue;
                };
                let q = subset_q(&layout, s, all, &self.ctx);
                table
                    .entry((sub.clone(), rest.clone()))
                    .or_default()
                    .add_term(q, w.clone());
            }
        }
        self.by_degree.borrow_mut().insert(degree, table);
    }

    pub fn basis_product(&self, s: &PlanarTree, t: &PlanarTree) -> Result<PlanarDual> {
        let degree = s.vertex_count() + t.vertex_count();
        if degree > self.budget {
            return Err(Error::BudgetExceeded {
                degree,
                budget: self.budget,
            });
        }
        for x in [s, t] {
            if x.max_colour() > self.ctx.n() {
                return Err(Error::ColourOutOfRange {
                    colour: x.max_colour(),
                    n: self.ctx.n(),
                });
            }
        }
        self.fill(degree);
        let tables = self.by_degree.borrow();
        Ok(tables[&degree]
            .get(&(s.clone(), t.clone()))
            .cloned()
            .unwrap_or_default())
    }

    pub fn bullet(&self, a: &PlanarDual, b: &PlanarDual) -> Result<PlanarDual> {
        let mut out = PlanarDual::zero();
        for (s, c) in a {
            for (t, d) in b {
                out.add_scaled(&(c * d), &self.basis_product(s, t)?);
            }
        }
        Ok(out)
    }
}

/// Planar `•` with the output degree capped by `budget`.
pub fn planar_bullet(a: &PlanarDual, b: &PlanarDual, ctx: &HopfContext, budget: usize) -> Result<PlanarDual> {
    PlanarBulletTable::new(ctx.clone(), budget).bullet(a, b)
}

/// `b • a − a • b`, matching the symmetric bracket convention.
pub fn planar_lie_bracket(a: &PlanarDual, b: &PlanarDual, ctx: &HopfContext, budget: usize) -> Result<PlanarDual> {
    let table = PlanarBulletTable::new(ctx.clone(), budget);
    Ok(table.bullet(b, a)?.sub(&table.bullet(a, b)?))
}

/// Hopf axioms on all planar words up to `max_degree`, agreement of the
/// closed and inductive formulas, and compatibility with forgetting the
/// orderings.
pub fn verify_planar(ctx: &HopfContext, max_degree: usize) -> VerificationReport {
    let basis = planar_words_up_to(ctx.n(), max_degree);
    let coproduct = |w: &PlanarWord| planar_coproduct_word(w, ctx);
    let antipode = |w: &PlanarWord| planar_antipode(&PlanarElement::basis(w.clone()), ctx);
    let mut checks = verify_axioms(&basis, max_degree, &coproduct, &antipode);

    let mut inductive = CheckResult {
        name: "closed = inductive coproduct".into(),
        cases: 0,
        failure: None,
    };
    let mut forgetful = CheckResult {
        name: "forgetful compatibility".into(),
        cases: 0,
        failure: None,
    };
    for w in &basis {
        let closed = coproduct(w);
        inductive.cases += 1;
        if inductive.failure.is_none() && closed != planar_coproduct_inductive(&PlanarElement::basis(w.clone()), ctx) {
            inductive.failure = Some(format!("closed and inductive Δ differ at {w}"));
        }
        let image = closed.map_basis(|(l, r)| (forget_word(l), forget_word(r)));
        forgetful.cases += 1;
        if forgetful.failure.is_none() && image != coproduct_forest(&forget_word(w), ctx) {
            forgetful.failure = Some(format!("forgetting orders does not commute with Δ at {w}"));
        }
    }
    checks.push(inductive);
    checks.push(forgetful);
    VerificationReport { checks }
}
