use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::antipode::{antipode_partitions, antipode_recursive, antipode_series};
use super::coproduct::{coproduct_forest, coproduct_inductive, sigma_pair, sigma_tensor};
use super::HopfContext;
use crate::coeff::{sigma, BasisText, Combination, Element, MonoidBasis, QSpec, TensorElement};
use crate::forest::{forests_up_to, lambda, Forest};

/// Outcome of one identity checked over a finite range of inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    /// First counterexample found.
    pub failure: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            cases: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok    {} ({} cases)", self.name, self.cases),
            Some(why) => write!(f, "FAIL  {}: {}", self.name, why),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn text<B: BasisText>(b: &B) -> String {
    let mut s = String::new();
    b.write_basis(&mut s);
    s
}

/// Bialgebra and antipode axioms for a coproduct on a graded monoid basis,
/// checked on every element of `basis` and every product of two of them
/// within `max_degree`.
pub fn verify_axioms<B>(
    basis: &[B],
    max_degree: usize,
    coproduct: &dyn Fn(&B) -> Combination<(B, B)>,
    antipode: &dyn Fn(&B) -> Combination<B>,
) -> Vec<CheckResult>
where
    B: MonoidBasis + BasisText + Hash,
{
    let memo: RefCell<HashMap<B, Combination<(B, B)>>> = RefCell::new(HashMap::new());
    let delta = |b: &B| -> Combination<(B, B)> {
        if let Some(hit) = memo.borrow().get(b) {
            return hit.clone();
        }
        let d = coproduct(b);
        memo.borrow_mut().insert(b.clone(), d.clone());
        d
    };
    let counit = |b: &B| *b == B::unit();

    let mut grading = CheckResult::new("grading");
    let mut counit_check = CheckResult::new("counit");
    let mut coassoc = CheckResult::new("coassociativity");
    let mut mult = CheckResult::new("multiplicativity");
    let mut anti = CheckResult::new("antipode");

    for b in basis {
        let d = delta(b);
        grading.record(d.basis_elements().all(|t| t.degree() == b.degree()), || {
            format!("Δ({}) is not homogeneous", text(b))
        });

        let left: Combination<B> = d
            .iter()
            .filter(|((l, _), _)| counit(l))
            .map(|((_, r), c)| (c.clone(), r.clone()))
            .collect();
        let right: Combination<B> = d
            .iter()
            .filter(|((_, r), _)| counit(r))
            .map(|((l, _), c)| (c.clone(), l.clone()))
            .collect();
        let expected = Combination::basis(b.clone());
        counit_check.record(left == expected && right == expected, || {
            format!("(ε ⊗ id)Δ or (id ⊗ ε)Δ differs from id at {}", text(b))
        });

        let mut lhs: Combination<(B, B, B)> = Combination::zero();
        let mut rhs: Combination<(B, B, B)> = Combination::zero();
        for ((l, r), c) in &d {
            for ((ll, lr), e) in &delta(l) {
                lhs.add_term(c * e, (ll.clone(), lr.clone(), r.clone()));
            }
            for ((rl, rr), e) in &delta(r) {
                rhs.add_term(c * e, (l.clone(), rl.clone(), rr.clone()));
            }
        }
        coassoc.record(lhs == rhs, || format!("(Δ ⊗ id)Δ ≠ (id ⊗ Δ)Δ at {}", text(b)));

        let unit_part = if counit(b) {
            Combination::one()
        } else {
            Combination::zero()
        };
        let s_left = d.map_linear(|(l, r)| antipode(l).product(&Combination::basis(r.clone())));
        let s_right = d.map_linear(|(l, r)| Combination::basis(l.clone()).product(&antipode(r)));
        anti.record(s_left == unit_part && s_right == unit_part, || {
            format!("S * id or id * S differs from ηε at {}", text(b))
        });
    }

    for a in basis {
        for b in basis {
            if a.degree() + b.degree() > max_degree {
                continue;
            }
            let ab = a.product(b);
            mult.record(delta(&ab) == delta(a).product(&delta(b)), || {
                format!("Δ({} · {}) ≠ Δ({}) Δ({})", text(a), text(b), text(a), text(b))
            });
        }
    }

    vec![grading, counit_check, coassoc, mult, anti]
}

/// All `n`-tuples of forests whose vertex counts sum to at most `max_total`.
pub fn forest_tuples(n: u16, max_total: usize) -> Vec<Vec<Forest>> {
    let pool = forests_up_to(n, max_total);
    let mut out: Vec<Vec<Forest>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for prefix in &out {
            let used: usize = prefix.iter().map(Forest::vertex_count).sum();
            for f in pool.iter().take_while(|f| used + f.vertex_count() <= max_total) {
                let mut tuple = prefix.clone();
                tuple.push(f.clone());
                next.push(tuple);
            }
        }
        out = next;
    }
    out
}

/// Full verification of the closed-formula coproduct on all forests with at
/// most `max_degree` vertices.
pub fn verify_bialgebra(ctx: &HopfContext, max_degree: usize) -> VerificationReport {
    verify_bialgebra_with(ctx, max_degree, &|f| coproduct_forest(f, ctx))
}

/// As [`verify_bialgebra`] for an arbitrary candidate coproduct on forests;
/// the antipode is derived from the candidate.
pub fn verify_bialgebra_with(
    ctx: &HopfContext,
    max_degree: usize,
    coproduct: &dyn Fn(&Forest) -> TensorElement,
) -> VerificationReport {
    let n = ctx.n();
    let basis = forests_up_to(n, max_degree);
    let antipode = |f: &Forest| antipode_series(f, coproduct);
    let mut checks = verify_axioms(&basis, max_degree, coproduct, &antipode);

    let memo: RefCell<HashMap<Forest, TensorElement>> = RefCell::new(HashMap::new());
    let delta = |f: &Forest| -> TensorElement {
        if let Some(hit) = memo.borrow().get(f) {
            return hit.clone();
        }
        let d = coproduct(f);
        memo.borrow_mut().insert(f.clone(), d.clone());
        d
    };
    let delta_element = |x: &Element| x.map_linear(|f| delta(f));
    let show = |fs: &[Forest]| fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ");

    let mut eps_sigma = CheckResult::new("counit of sigma");
    let mut delta_sigma = CheckResult::new("coproduct of sigma");
    let mut eps_lambda = CheckResult::new("counit of lambda");
    let mut square = CheckResult::new("defining square");

    for tuple in forest_tuples(n, max_degree) {
        let args: Vec<Element> = tuple.iter().map(|f| Element::basis(f.clone())).collect();
        let parts: Vec<TensorElement> = tuple.iter().map(&delta).collect();
        let total: usize = tuple.iter().map(Forest::vertex_count).sum();
        for side in [1u8, 2] {
            let s = sigma(side, ctx.qspec(), &args).expect("arity matches");
            let eps = tuple.iter().all(Forest::is_empty);
            eps_sigma.record(s.constant_term().is_zero() != eps, || {
                format!("ε(σ_{side}({})) ≠ ε^n", show(&tuple))
            });
            let rhs = sigma_tensor(ctx, side, &parts).expect("arity matches");
            delta_sigma.record(delta_element(&s) == rhs, || {
                format!("Δσ_{side}({}) ≠ (σ_{side} ⊗ σ_{side})τΔ^n", show(&tuple))
            });
        }
        if total < max_degree {
            let t = Forest::single(lambda(n, &tuple).expect("colours in range"));
            eps_lambda.record(!t.is_empty(), || format!("ε(λ({})) ≠ 0", show(&tuple)));
            let rhs = sigma_pair(ctx, &parts).expect("arity matches");
            square.record(delta(&t) == rhs, || format!("Δλ({}) ≠ (σ_1, σ_2)τΔ^n", show(&tuple)));
        }
    }
    checks.extend([eps_sigma, delta_sigma, eps_lambda, square]);
    VerificationReport { checks }
}

/// Closed and inductive coproducts agree on all forests up to `max_degree`.
pub fn compare_coproducts(ctx: &HopfContext, max_degree: usize) -> CheckResult {
    let mut out = CheckResult::new("closed = inductive coproduct");
    for f in forests_up_to(ctx.n(), max_degree) {
        let x = Element::basis(f.clone());
        out.record(coproduct_forest(&f, ctx) == coproduct_inductive(&x, ctx), || {
            format!("closed and inductive Δ differ at {f}")
        });
    }
    out
}

/// Recursive and partition antipodes agree on all forests up to `max_degree`.
pub fn compare_antipodes(ctx: &HopfContext, max_degree: usize) -> CheckResult {
    let mut out = CheckResult::new("recursive = partition antipode");
    for f in forests_up_to(ctx.n(), max_degree) {
        let x = Element::basis(f.clone());
        out.record(antipode_recursive(&x, ctx) == antipode_partitions(&x, ctx), || {
            format!("antipode formulas differ at {f}")
        });
    }
    out
}

/// Coproduct equals its flip on all forests up to `max_degree`.
pub fn check_cocommutative(ctx: &HopfContext, max_degree: usize) -> CheckResult {
    let mut out = CheckResult::new("cocommutativity");
    for f in forests_up_to(ctx.n(), max_degree) {
        let d = coproduct_forest(&f, ctx);
        let flipped = d.map_basis(|(l, r)| (r.clone(), l.clone()));
        out.record(d == flipped, || format!("Δ({f}) is not symmetric"));
    }
    out
}

/// Computing symbolically and then substituting random rationals for the
/// variables agrees with computing at the substituted parameters.
pub fn verify_specialization(ctx: &HopfContext, max_degree: usize, seed: u64) -> CheckResult {
    let n = ctx.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values: Vec<BigRational> = (0..2 * n)
        .map(|_| {
            let num: i64 = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.gen_range(1..=4);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    let point = QSpec::constants(n, &values).expect("2n values");
    let direct = HopfContext::new(
        QSpec::from_entries(n, ctx.qspec().entries().iter().map(|e| point.specialize(e)).collect())
            .expect("2n entries"),
    );
    let mut out = CheckResult::new("specialization commutes");
    for f in forests_up_to(n, max_degree) {
        let x = Element::basis(f.clone());
        let d = coproduct_forest(&f, ctx).map_coefficients(|c| point.specialize(c));
        let s = antipode_partitions(&x, ctx).map_coefficients(|c| point.specialize(c));
        out.record(
            d == coproduct_forest(&f, &direct) && s == antipode_partitions(&x, &direct),
            || format!("specializing at {point} does not commute at {f}"),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_two_colours_small() {
        let ctx = HopfContext::symbolic(2);
        let report = verify_bialgebra(&ctx, 3);
        assert!(report.passed(), "{report}");
        assert!(compare_coproducts(&ctx, 4).passed());
        assert!(compare_antipodes(&ctx, 3).passed());
        assert!(verify_specialization(&ctx, 3, 7).passed());
    }

    #[test]
    fn tuples_respect_budget() {
        let t = forest_tuples(2, 2);
        // (a, b) with |a| + |b| ≤ 2 over 2-coloured forests: sizes (0,0),(0,1),(1,0),(0,2),(1,1),(2,0)
        // forests of size 2 with two colours: [1:[]], [2:[]], []*[]
        assert_eq!(t.len(), 1 + 1 + 1 + 3 + 1 + 3);
        assert!(t.iter().all(|x| x.iter().map(Forest::vertex_count).sum::<usize>() <= 2));
    }

    #[test]
    fn a_broken_coproduct_is_caught() {
        let ctx = HopfContext::symbolic(1);
        // induced subgraph instead of induced order
        let report = verify_bialgebra_with(&ctx, 3, &|f| {
            let mut d = coproduct_forest(f, &ctx);
            if f.to_string() == "[1:[1:[]]]" {
                d = d.add(&TensorElement::basis(("[]".parse().unwrap(), "[]*[]".parse().unwrap())));
            }
            d
        });
        assert!(!report.passed());
    }
}
