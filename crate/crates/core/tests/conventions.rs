//! Orientation and indexing conventions: each identity is checked in the
//! form that holds, alongside the transposed form that does not.

use arbor_hopf::coeff::{Coefficient, QSpec, TensorElement};
use arbor_hopf::forest::{canonicalize, enumerate_trees, Colour, ColouredTree, Forest, ForestLayout, RawTree};
use arbor_hopf::hopf::{coproduct_forest, subset_q, verify_bialgebra_with, HopfContext};
use arbor_hopf::prelie::{
    aut_rescale, aut_rescale_inverse, bullet_prime, free_bullet, graft_all, jacobiator, prelie_identity_holds, up_map,
    BulletTable, DualElement, PreLieElement,
};

fn trees_up_to(n: u16, max: usize) -> Vec<ColouredTree> {
    (1..=max).flat_map(|m| enumerate_trees(n, m)).collect()
}

fn d(t: &ColouredTree) -> DualElement {
    DualElement::basis(t.clone())
}

fn c(k: u16) -> Colour {
    Colour::new(k).unwrap()
}

#[test]
fn rescaling_carries_graft_product_to_bullet() {
    for n in 1..=2u16 {
        let p: Vec<Colour> = Colour::all(n).collect();
        let table = BulletTable::new(HopfContext::new(QSpec::indicator(n, &p)), 6);
        let trees = trees_up_to(n, 5);
        let mut transposed_fails = false;
        for x in &trees {
            for y in &trees {
                if x.vertex_count() + y.vertex_count() > 6 {
                    continue;
                }
                let bullet = table.bullet(&d(x), &d(y)).unwrap();
                let prime = bullet_prime(&d(x), &d(y), &p);
                assert_eq!(
                    aut_rescale(&prime),
                    table.bullet(&aut_rescale(&d(x)), &aut_rescale(&d(y))).unwrap()
                );
                assert_eq!(
                    aut_rescale_inverse(&bullet),
                    bullet_prime(&aut_rescale_inverse(&d(x)), &aut_rescale_inverse(&d(y)), &p)
                );
                transposed_fails |= aut_rescale(&bullet) != bullet_prime(&aut_rescale(&d(x)), &aut_rescale(&d(y)), &p);
            }
        }
        assert!(
            transposed_fails,
            "rescale(x • y) = rescale(x) •′ rescale(y) unexpectedly holds for n={n}"
        );
    }
}

#[test]
fn up_map_keeps_the_outer_root_label() {
    // Σ_v ↑_j(t ∘_(v,i) s) = ↑_j(t) • ↑_i(s); exchanging i and j fails when i ≠ j
    let trees = trees_up_to(2, 3);
    let mut exchanged_fails = false;
    for t in &trees {
        for s in &trees {
            for i in 1..=2 {
                for j in 1..=2 {
                    let lhs: PreLieElement = graft_all(t, c(i), s)
                        .iter()
                        .map(|w| (Coefficient::one(), up_map(c(j), w)))
                        .collect();
                    let up = |k: u16, x: &ColouredTree| PreLieElement::basis(up_map(c(k), x));
                    assert_eq!(lhs, free_bullet(&up(j, t), &up(i, s)));
                    if i != j {
                        exchanged_fails |= lhs != free_bullet(&up(i, t), &up(j, s));
                    }
                }
            }
        }
    }
    assert!(exchanged_fails);
}

#[test]
fn duality_pairs_left_factor_with_subtree() {
    let ctx = HopfContext::symbolic(1);
    let table = BulletTable::new(ctx.clone(), 4);
    let trees = trees_up_to(1, 4);
    let mut literal_fails = false;
    for w in &trees {
        let delta = coproduct_forest(&Forest::single(w.clone()), &ctx);
        for t in &trees {
            for s in &trees {
                if t.vertex_count() + s.vertex_count() != w.vertex_count() {
                    continue;
                }
                let pairing = delta.coefficient(&(Forest::single(t.clone()), Forest::single(s.clone())));
                assert_eq!(pairing, table.basis_product(s, t).unwrap().coefficient(w));
                literal_fails |= pairing != table.basis_product(t, s).unwrap().coefficient(w);
            }
        }
    }
    assert!(literal_fails);
}

#[test]
fn graft_product_and_free_product_are_prelie() {
    for n in 1..=2u16 {
        let trees = trees_up_to(n, 4);
        for p in [vec![c(1)], Colour::all(n).collect::<Vec<_>>()] {
            let mul = |a: &DualElement, b: &DualElement| bullet_prime(a, b, &p);
            for x in &trees {
                for y in &trees {
                    for z in &trees {
                        if x.vertex_count() + y.vertex_count() + z.vertex_count() <= 6 {
                            assert!(prelie_identity_holds(&mul, &d(x), &d(y), &d(z)));
                        }
                    }
                }
            }
        }
        let labelled: Vec<PreLieElement> = trees
            .iter()
            .filter(|t| t.vertex_count() <= 3)
            .flat_map(|t| Colour::all(n).map(move |j| PreLieElement::basis(up_map(j, t))))
            .collect();
        for x in &labelled {
            for y in &labelled {
                for z in &labelled {
                    assert!(prelie_identity_holds(&free_bullet, x, y, z));
                }
            }
        }
    }
}

#[test]
fn bracket_is_antisymmetric_and_jacobi_under_prelie_hypotheses() {
    let symbolic = BulletTable::new(HopfContext::symbolic(2), 6);
    let trees = trees_up_to(2, 3);
    for x in &trees {
        for y in &trees {
            let xy = symbolic.lie_bracket(&d(x), &d(y)).unwrap();
            assert_eq!(xy, symbolic.lie_bracket(&d(y), &d(x)).unwrap().neg());
        }
    }
    let table = BulletTable::new(HopfContext::new(QSpec::indicator(2, &[c(2)])), 6);
    let bracket = |a: &DualElement, b: &DualElement| table.lie_bracket(a, b).unwrap();
    let small = trees_up_to(2, 2);
    for x in &small {
        for y in &small {
            for z in &small {
                assert!(jacobiator(&bracket, &d(x), &d(y), &d(z)).is_zero());
            }
        }
    }
}

/// Δ where a subset carries the structure of the induced subgraph (edges
/// only between parent and child) instead of the induced order.
fn subgraph_coproduct(f: &Forest, ctx: &HopfContext) -> TensorElement {
    let layout = ForestLayout::from_forest(f);
    let all = layout.all();
    let piece = |mask: arbor_hopf::forest::VertexSet| -> Forest {
        let members: Vec<usize> = mask.iter().collect();
        let mut trees = Vec::new();
        for &r in &members {
            if layout.parent(r).is_some_and(|p| mask.contains(p)) {
                continue;
            }
            // component of r in the subgraph
            let mut comp = vec![r];
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                comp.extend(members.iter().copied().filter(|&w| layout.parent(w) == Some(v)));
                k += 1;
            }
            let parents: Vec<Option<usize>> = comp
                .iter()
                .map(|&v| {
                    if v == r {
                        None
                    } else {
                        comp.iter().position(|&u| Some(u) == layout.parent(v))
                    }
                })
                .collect();
            let colours: Vec<u16> = comp
                .iter()
                .map(|&v| layout.edge_colour(v).map_or(0, Colour::get))
                .collect();
            trees.push(canonicalize(&RawTree::from_parents(&parents, &colours), ctx.n()).unwrap());
        }
        Forest::from_trees(trees)
    };
    let mut out = TensorElement::zero();
    for s in all.subsets() {
        out.add_term(subset_q(&layout, s, all, ctx), (piece(s), piece(all.minus(s))));
    }
    out
}

#[test]
fn induced_subgraph_breaks_coassociativity() {
    let ctx = HopfContext::symbolic(1);
    let report = verify_bialgebra_with(&ctx, 4, &|f| subgraph_coproduct(f, &ctx));
    assert!(!report.check("coassociativity").unwrap().passed(), "{report}");
    let small = verify_bialgebra_with(&ctx, 3, &|f| subgraph_coproduct(f, &ctx));
    assert!(small.check("coassociativity").unwrap().passed());
    assert!(!small.check("defining square").unwrap().passed());
}

#[test]
fn dropping_q_breaks_the_defining_square_only() {
    // without q factors Δ is the member q ≡ 1 of the family: still a Hopf
    // algebra, but no longer compatible with the symbolic σ maps
    let ctx = HopfContext::symbolic(1);
    let ones = HopfContext::new(QSpec::integers(1, &[1, 1]).unwrap());
    let report = verify_bialgebra_with(&ctx, 3, &|f| coproduct_forest(f, &ones));
    for name in ["coassociativity", "counit", "multiplicativity", "antipode", "grading"] {
        assert!(report.check(name).unwrap().passed(), "{name}: {report}");
    }
    assert!(!report.check("defining square").unwrap().passed());
    assert!(!report.passed());
}
