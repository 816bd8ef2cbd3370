use arbor_hopf::coeff::{parse_combination, Coefficient, MonoidBasis, QSpec};
use arbor_hopf::hopf::{verify_axioms, HopfContext};
use arbor_hopf::planar::{
    enumerate_planar_trees, planar_antipode, planar_bullet, planar_coproduct, planar_coproduct_word,
    planar_lie_bracket, planar_words_up_to, verify_planar, PlanarDual, PlanarElement, PlanarTensor, PlanarTree,
    PlanarWord,
};

fn p(s: &str) -> PlanarTree {
    s.parse().unwrap()
}

#[test]
fn planar_suite_two_colours() {
    let report = verify_planar(&HopfContext::symbolic(2), 4);
    assert!(report.passed(), "{report}");
    let report = verify_planar(&HopfContext::symbolic(1), 5);
    assert!(report.passed(), "{report}");
}

#[test]
fn words_do_not_commute() {
    let a = PlanarWord::single(p("[]"));
    let b = PlanarWord::single(p("[1:[]]"));
    assert_ne!(a.product(&b), b.product(&a));
}

#[test]
fn antipode_of_three_chain() {
    let ctx = HopfContext::symbolic(1);
    let t = PlanarWord::single(p("[1:[1:[]]]"));
    let s = planar_coproduct_word(&t, &ctx).map_linear(|(l, r)| {
        planar_antipode(&PlanarElement::basis(l.clone()), &ctx).product(&PlanarElement::basis(r.clone()))
    });
    assert!(s.is_zero());
}

#[test]
fn coproduct_text_example() {
    let ctx = HopfContext::symbolic(1);
    let t: PlanarElement = parse_combination("[1:[],1:[1:[]]]").unwrap();
    let d = planar_coproduct(&t, &ctx);
    let two_leaves: PlanarTensor = parse_combination("[]*[1:[]] ⊗ []").unwrap();
    let (key, _) = two_leaves.iter().next().unwrap();
    assert_eq!(d.coefficient(key), "q11^3".parse::<Coefficient>().unwrap());
}

/// Reverses the root order on the left leg only.
fn mismatched(w: &PlanarWord, ctx: &HopfContext) -> PlanarTensor {
    planar_coproduct_word(w, ctx).map_basis(|(l, r)| {
        let mut trees = l.trees().to_vec();
        trees.reverse();
        (PlanarWord(trees), r.clone())
    })
}

#[test]
fn inconsistent_root_order_breaks_the_axioms() {
    let ctx = HopfContext::symbolic(1);
    let basis = planar_words_up_to(1, 4);
    let coproduct = |w: &PlanarWord| mismatched(w, &ctx);
    let antipode = |w: &PlanarWord| planar_antipode(&PlanarElement::basis(w.clone()), &ctx);
    let checks = verify_axioms(&basis, 4, &coproduct, &antipode);
    assert!(checks.iter().any(|c| !c.passed()));
}

/// Branches of `w` isomorphic to `s` whose removal leaves `t`, counted by
/// walking explicit vertex paths.
fn branch_count(w: &PlanarTree, s: &PlanarTree, t: &PlanarTree) -> usize {
    fn remove(w: &PlanarTree, path: &[usize]) -> (PlanarTree, PlanarTree) {
        let (k, rest) = path.split_first().expect("non-root");
        let mut children = w.children().to_vec();
        if rest.is_empty() {
            let (_, cut) = children.remove(*k);
            (cut, PlanarTree::from_children(children))
        } else {
            let (cut, trimmed) = remove(&children[*k].1, rest);
            children[*k].1 = trimmed;
            (cut, PlanarTree::from_children(children))
        }
    }
    fn paths(w: &PlanarTree, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (k, (_, c)) in w.children().iter().enumerate() {
            prefix.push(k);
            out.push(prefix.clone());
            paths(c, prefix, out);
            prefix.pop();
        }
    }
    let mut all = Vec::new();
    paths(w, &mut Vec::new(), &mut all);
    all.iter()
        .filter(|path| {
            let (cut, rest) = remove(w, path);
            &cut == s && &rest == t
        })
        .count()
}

#[test]
fn bullet_matches_branch_counting_at_connes_kreimer() {
    let ctx = HopfContext::new(QSpec::connes_kreimer());
    for total in 2..=5 {
        for a in 1..total {
            for s in enumerate_planar_trees(1, a) {
                for t in enumerate_planar_trees(1, total - a) {
                    let out =
                        planar_bullet(&PlanarDual::basis(s.clone()), &PlanarDual::basis(t.clone()), &ctx, 6).unwrap();
                    for w in enumerate_planar_trees(1, total) {
                        let expected = branch_count(&w, &s, &t) as i64;
                        assert_eq!(
                            out.coefficient(&w),
                            Coefficient::from_integer(expected),
                            "{s} • {t} at {w}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn bullet_grading_and_bracket() {
    let ctx = HopfContext::symbolic(2);
    let a = PlanarDual::basis(p("[2:[]]"));
    let b = PlanarDual::basis(p("[]"));
    let out = planar_bullet(&a, &b, &ctx, 6).unwrap();
    assert!(out.basis_elements().all(|w| w.vertex_count() == 3));
    let bracket = planar_lie_bracket(&a, &b, &ctx, 6).unwrap();
    assert_eq!(bracket, planar_lie_bracket(&b, &a, &ctx, 6).unwrap().neg());
    assert!(planar_bullet(&a, &b, &ctx, 2).is_err());
}
