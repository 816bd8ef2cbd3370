//! Acceptance checks: one PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use arbor_hopf::coeff::{Element, QSpec};
use arbor_hopf::forest::{enumerate_trees, forests_up_to, Colour, ColouredTree, Forest};
use arbor_hopf::hopf::{
    ck_coproduct_oracle, compare_antipodes, compare_coproducts, coproduct_forest, simplicial_d, simplicial_s,
    verify_bialgebra, HopfContext,
};
use arbor_hopf::planar::{enumerate_planar_trees, verify_planar};
use arbor_hopf::prelie::{
    aut_rescale, bullet_prime, free_bullet, phi, prelie_identity_holds, BulletTable, DualElement,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn trees_up_to(n: u16, max: usize) -> Vec<ColouredTree> {
    (1..=max).flat_map(|m| enumerate_trees(n, m)).collect()
}

fn colour_subsets(n: u16) -> Vec<Vec<Colour>> {
    (0u32..1 << n)
        .map(|mask| Colour::all(n).filter(|c| mask & (1 << (c.get() - 1)) != 0).collect())
        .collect()
}

fn full(n: u16) -> Vec<Colour> {
    Colour::all(n).collect()
}

fn d(t: &ColouredTree) -> DualElement {
    DualElement::basis(t.clone())
}

fn axioms() -> Outcome {
    let mut cases = 0;
    for (n, max) in [(1u16, 5usize), (2, 4)] {
        let report = verify_bialgebra(&HopfContext::symbolic(n), max);
        for name in ["coassociativity", "counit", "multiplicativity", "antipode", "grading"] {
            let check = report.check(name).expect("check present");
            if let Some(why) = &check.failure {
                return Err(format!("n={n}: {why}"));
            }
            cases += check.cases;
        }
        let bad = report.failures().next().map(|c| format!("n={n}: {c}"));
        if let Some(bad) = bad {
            return Err(bad);
        }
    }
    Ok(format!("{cases} symbolic cases, n=1 up to 5 vertices, n=2 up to 4"))
}

fn closed_vs_inductive() -> Outcome {
    let mut cases = 0;
    for (n, max) in [(1u16, 5usize), (2, 4)] {
        let r = compare_coproducts(&HopfContext::symbolic(n), max);
        if let Some(why) = r.failure {
            return Err(why);
        }
        cases += r.cases;
    }
    Ok(format!("{cases} forests"))
}

fn antipodes() -> Outcome {
    let mut cases = 0;
    for (n, max) in [(1u16, 5usize), (2, 4)] {
        let r = compare_antipodes(&HopfContext::symbolic(n), max);
        if let Some(why) = r.failure {
            return Err(why);
        }
        cases += r.cases;
    }
    Ok(format!("{cases} forests"))
}

fn connes_kreimer() -> Outcome {
    let ctx = HopfContext::new(QSpec::connes_kreimer());
    let forests = forests_up_to(1, 5);
    for f in &forests {
        let oracle = ck_coproduct_oracle(f).map_err(|e| e.to_string())?;
        if coproduct_forest(f, &ctx) != oracle {
            return Err(format!("differs from admissible cuts at {f}"));
        }
    }
    Ok(format!("{} forests", forests.len()))
}

fn prelie() -> Outcome {
    let mut cases = 0;
    for n in 1..=2u16 {
        let trees = trees_up_to(n, 4);
        for p in colour_subsets(n) {
            let table = BulletTable::new(HopfContext::new(QSpec::indicator(n, &p)), 6);
            let mul = |a: &DualElement, b: &DualElement| table.bullet(a, b).expect("within budget");
            for x in &trees {
                for y in &trees {
                    for z in &trees {
                        if x.vertex_count() + y.vertex_count() + z.vertex_count() > 6 {
                            continue;
                        }
                        cases += 1;
                        if !prelie_identity_holds(&mul, &d(x), &d(y), &d(z)) {
                            return Err(format!("n={n} p={p:?}: ({x}, {y}, {z})"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{cases} triples"))
}

fn rescaling_and_phi() -> Outcome {
    let mut cases = 0;
    for n in 1..=2u16 {
        let p = full(n);
        let table = BulletTable::new(HopfContext::new(QSpec::indicator(n, &p)), 6);
        let trees = trees_up_to(n, 5);
        for x in &trees {
            for y in &trees {
                let total = x.vertex_count() + y.vertex_count();
                if total > 6 {
                    continue;
                }
                let graft = bullet_prime(&d(x), &d(y), &p);
                let lhs = aut_rescale(&graft);
                let rhs = table
                    .bullet(&aut_rescale(&d(x)), &aut_rescale(&d(y)))
                    .expect("within budget");
                if lhs != rhs {
                    return Err(format!("n={n}: |Aut| rescaling fails at ({x}, {y})"));
                }
                if total <= 5 && phi(&graft, n) != free_bullet(&phi(&d(x), n), &phi(&d(y), n)) {
                    return Err(format!("n={n}: φ(x •′ y) ≠ φ(x) • φ(y) at ({x}, {y})"));
                }
                cases += 1;
            }
        }
        let mut seen = BTreeSet::new();
        for t in &trees {
            let image = phi(&d(t), n);
            if image.is_zero() || !image.basis_elements().all(|l| seen.insert(l.clone())) {
                return Err(format!("n={n}: φ images overlap at {t}"));
            }
        }
    }
    Ok(format!(
        "{cases} pairs; rescaling carries •′ to •; φ injective up to 5 vertices"
    ))
}

fn duality() -> Outcome {
    let ctx = HopfContext::symbolic(1);
    let table = BulletTable::new(ctx.clone(), 4);
    let trees = trees_up_to(1, 4);
    let mut cases = 0;
    for w in &trees {
        let delta = coproduct_forest(&Forest::single(w.clone()), &ctx);
        for t in &trees {
            for s in &trees {
                if t.vertex_count() + s.vertex_count() != w.vertex_count() {
                    continue;
                }
                cases += 1;
                let pairing = delta.coefficient(&(Forest::single(t.clone()), Forest::single(s.clone())));
                let constant = table.basis_product(s, t).expect("within budget").coefficient(w);
                if pairing != constant {
                    return Err(format!(
                        "⟨D_{t} ⊗ D_{s}, Δ({w})⟩ = {pairing}, coefficient in D_{s} • D_{t} = {constant}"
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{cases} (w, t, s) triples: ⟨D_t ⊗ D_s, Δw⟩ is the D_w coefficient of D_s • D_t"
    ))
}

fn simplicial() -> Outcome {
    let mut cases = 0;
    let mut check = |ok: bool, what: String| -> Result<(), String> {
        cases += 1;
        if ok {
            Ok(())
        } else {
            Err(what)
        }
    };
    for n in 1..=3u16 {
        for t in trees_up_to(n, 4) {
            let x = Element::basis(Forest::single(t.clone()));
            let dd = |i: u16, m: u16, y: &Element| simplicial_d(i, m, y).expect("in range");
            let ss = |i: u16, m: u16, y: &Element| simplicial_s(i, m, y).expect("in range");
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        check(
                            dd(i, n - 1, &dd(j, n, &x)) == dd(j - 1, n - 1, &dd(i, n, &x)),
                            format!("d{i} d{j} at {t}"),
                        )?;
                    }
                }
            }
            for j in 0..=n {
                for i in 0..=j {
                    check(
                        ss(i, n + 1, &ss(j, n, &x)) == ss(j + 1, n + 1, &ss(i, n, &x)),
                        format!("s{i} s{j} at {t}"),
                    )?;
                }
                for i in 0..=n + 1 {
                    let lhs = dd(i, n + 1, &ss(j, n, &x));
                    if i < j {
                        check(lhs == ss(j - 1, n - 1, &dd(i, n, &x)), format!("d{i} s{j} at {t}"))?;
                    } else if i == j || i == j + 1 {
                        check(lhs == x, format!("d{i} s{j} = id at {t}"))?;
                    } else {
                        check(lhs == ss(j, n - 1, &dd(i - 1, n, &x)), format!("d{i} s{j} at {t}"))?;
                    }
                }
            }
        }
        for a in forests_up_to(n, 3) {
            for b in forests_up_to(n, 3) {
                let (xa, xb) = (Element::basis(a.clone()), Element::basis(b.clone()));
                for i in 0..=n {
                    let d = |y: &Element| simplicial_d(i, n, y).expect("in range");
                    check(
                        d(&xa.product(&xb)) == d(&xa).product(&d(&xb)),
                        format!("d{i} multiplicative at {a}, {b}"),
                    )?;
                }
            }
        }
    }
    Ok(format!("{cases} identities, n ≤ 3, trees up to 4 vertices"))
}

fn enumeration() -> Outcome {
    let expected = [1usize, 1, 2, 4, 9, 20, 48, 115];
    for (m, &want) in (1..=8).zip(expected.iter()) {
        let library: BTreeSet<String> = enumerate_trees(1, m)
            .iter()
            .map(|t| common::code_of_text(&t.to_string(), false))
            .collect();
        let oracle = common::distinct_trees(1, m);
        if library.len() != want || enumerate_trees(1, m).len() != want || library != oracle {
            return Err(format!(
                "{m} vertices: library {} oracle {} expected {want}",
                library.len(),
                oracle.len()
            ));
        }
    }
    let catalan = [1usize, 1, 2, 5, 14];
    for (m, &want) in (1..=5).zip(catalan.iter()) {
        let library: BTreeSet<String> = enumerate_planar_trees(1, m)
            .iter()
            .map(|t| common::code_of_text(&t.to_string(), true))
            .collect();
        let oracle = common::distinct_planar_trees(1, m);
        if library.len() != want || library != oracle {
            return Err(format!(
                "planar {m} vertices: library {} oracle {} expected {want}",
                library.len(),
                oracle.len()
            ));
        }
    }
    Ok("1,1,2,4,9,20,48,115 and 1,1,2,5,14 match the brute-force generator".into())
}

fn planar() -> Outcome {
    let mut cases = 0;
    for n in 1..=2u16 {
        let report = verify_planar(&HopfContext::symbolic(n), 4);
        let bad = report.failures().next().map(|c| format!("n={n}: {c}"));
        if let Some(bad) = bad {
            return Err(bad);
        }
        cases += report.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    Ok(format!("{cases} symbolic cases on planar words up to 4 vertices"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Hopf axioms, symbolic parameters", axioms),
        ("closed = inductive coproduct", closed_vs_inductive),
        ("recursive = partition antipode", antipodes),
        ("Connes-Kreimer specialization", connes_kreimer),
        ("pre-Lie identity", prelie),
        ("rescaling isomorphism and φ embedding", rescaling_and_phi),
        ("duality pairing", duality),
        ("simplicial identities", simplicial),
        ("enumeration counts", enumeration),
        ("planar Hopf axioms and forgetful map", planar),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
