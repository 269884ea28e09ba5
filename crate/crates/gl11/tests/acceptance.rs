//! Acceptance suite: one test per criterion, exact equality throughout.
//!
//! Run with `cargo test --test acceptance -- --show-output` to see the
//! per-criterion pass lines and timings.

use std::time::Instant;

use gl11::batch::{alexander_all, skein_all_sites};
use gl11::invariant::{
    alexander, burau_oracle, corpus, cut_independence_check, hat_q, q_closed, unit_class_eq,
};
use gl11::rep::{
    act_slots, character, character_sum, check_equivariance, r_check, r_check_inverse, ribbon_v,
    theta_pair, upsilon_pair, EquivariantMap, Factor, Gen, ModuleObject, Weight, EPS1,
};
use gl11::scalar::RationalFunction;
use gl11::tangle::{full_twist, BraidWord, Labeling};
use gl11::uq::{
    antipode_axiom, coassociative, counit_axiom, generators, quasi_r, sample::ElementSampler,
    theta_intertwines, TensorElement,
};

fn report(criterion: &str, start: Instant, budget_s: f64) {
    let dt = start.elapsed().as_secs_f64();
    println!("criterion {criterion}: PASS ({dt:.3}s, budget {budget_s}s)");
    assert!(
        dt < budget_s,
        "criterion {criterion} exceeded its {budget_s}s budget ({dt:.3}s)"
    );
}

fn q_minus_qinv() -> RationalFunction {
    RationalFunction::from(
        "q - q^-1"
            .parse::<gl11::scalar::LaurentPoly>()
            .expect("literal"),
    )
}

#[test]
fn criterion_01_hopf_axiom_suite() {
    let start = Instant::now();
    for g in generators() {
        assert!(coassociative(&g), "coassociativity fails on {g}");
        assert!(counit_axiom(&g), "counit axiom fails on {g}");
        assert!(antipode_axiom(&g), "antipode axiom fails on {g}");
    }
    let mut sampler = ElementSampler::new(2024);
    for i in 0..100 {
        let x = sampler.element(3);
        assert!(
            coassociative(&x),
            "coassociativity fails on sample {i}: {x}"
        );
        assert!(counit_axiom(&x), "counit axiom fails on sample {i}: {x}");
        assert!(
            antipode_axiom(&x),
            "antipode axiom fails on sample {i}: {x}"
        );
    }
    report("1 (Hopf axioms, 4 generators + 100 samples)", start, 5.0);
}

#[test]
fn criterion_02_quasi_r_matrix_identities() {
    let start = Instant::now();
    let theta = quasi_r();
    assert_eq!(theta.mul(&theta.bar()), TensorElement::one());
    assert_eq!(theta.bar().mul(&theta), TensorElement::one());
    for g in generators() {
        assert!(theta_intertwines(&g), "intertwining fails on {g}");
    }
    report("2 (Theta inverse + intertwining on generators)", start, 1.0);
}

#[test]
fn criterion_03_quasi_triangularity_as_operators() {
    let start = Instant::now();
    let triples = [
        (Weight::new(1, 0), Weight::new(1, 1), Weight::new(2, -1)),
        (Weight::new(2, 0), Weight::new(0, 1), Weight::new(1, -2)),
        (Weight::new(3, -1), Weight::new(1, 2), Weight::new(-1, 3)),
        (Weight::new(0, 2), Weight::new(2, 1), Weight::new(1, 1)),
    ];
    let d = q_minus_qinv();
    for (lam, mu, nu) in triples {
        let word = ModuleObject::new(vec![
            Factor::simple(lam).unwrap(),
            Factor::simple(mu).unwrap(),
            Factor::simple(nu).unwrap(),
        ]);
        let id = EquivariantMap::identity(&word);
        let theta13 = theta_pair(&word, 0..1, 2..3);
        let theta23 = theta_pair(&word, 1..2, 2..3);
        let theta12 = theta_pair(&word, 0..1, 1..2);
        let ups13 = upsilon_pair(&word, 0..1, 2..3, 1);
        let ups13_inv = upsilon_pair(&word, 0..1, 2..3, -1);

        // (Delta (x) id)(Theta) = 1 + (q-q^-1)(F (x) 1 (x) E + K (x) F (x) E)
        let lhs = id
            .add(
                &act_slots(&word, &[(0, Gen::F), (2, Gen::E)])
                    .add(&act_slots(&word, &[(0, Gen::K), (1, Gen::F), (2, Gen::E)]))
                    .unwrap()
                    .scale(&d),
            )
            .unwrap();
        let rhs = theta13
            .compose(&ups13)
            .and_then(|m| m.compose(&theta23))
            .and_then(|m| m.compose(&ups13_inv))
            .unwrap();
        assert_eq!(lhs, rhs, "(Delta x id)(Theta) at {lam} {mu} {nu}");

        // (id (x) Delta)(Theta) = 1 + (q-q^-1)(F (x) E (x) K^-1 + F (x) 1 (x) E)
        let lhs = id
            .add(
                &act_slots(&word, &[(0, Gen::F), (1, Gen::E), (2, Gen::K_INV)])
                    .add(&act_slots(&word, &[(0, Gen::F), (2, Gen::E)]))
                    .unwrap()
                    .scale(&d),
            )
            .unwrap();
        let rhs = theta13
            .compose(&ups13)
            .and_then(|m| m.compose(&theta12))
            .and_then(|m| m.compose(&ups13_inv))
            .unwrap();
        assert_eq!(lhs, rhs, "(id x Delta)(Theta) at {lam} {mu} {nu}");
    }
    report(
        "3 (coproduct identities for Theta on 4 triples)",
        start,
        5.0,
    );
}

#[test]
fn criterion_04_yang_baxter_on_vector_rep() {
    let start = Instant::now();
    let l = ModuleObject::simple(EPS1).unwrap();
    let r = r_check(&l, &l);
    let id = EquivariantMap::identity(&l);
    let r12 = r.tensor(&id);
    let r23 = id.tensor(&r);
    let lhs = r12.compose(&r23).and_then(|m| m.compose(&r12)).unwrap();
    let rhs = r23.compose(&r12).and_then(|m| m.compose(&r23)).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.source().dim(), 8);
    report("4 (Yang-Baxter braid relation, 8x8 exact)", start, 1.0);
}

#[test]
fn criterion_05_inverse_braiding_table_and_quadratic_relation() {
    let start = Instant::now();
    let rinv = r_check_inverse(EPS1, EPS1).unwrap();
    // the four-case table on the vector representation, entry for entry
    let one = RationalFunction::one();
    let expected: Vec<(usize, usize, RationalFunction)> = vec![
        (0, 0, RationalFunction::q_pow(-1)),
        (2, 1, one.clone()),
        (1, 2, one.clone()),
        (2, 2, -&q_minus_qinv()),
        (3, 3, -&RationalFunction::q_pow(1)),
    ];
    let mut count = 0;
    for r in 0..4 {
        for c in 0..4 {
            let want = expected
                .iter()
                .find(|(er, ec, _)| (*er, *ec) == (r, c))
                .map(|(_, _, v)| v.clone())
                .unwrap_or_else(RationalFunction::zero);
            assert_eq!(rinv.entry(r, c), want, "entry ({r},{c})");
            count += 1;
        }
    }
    assert_eq!(count, 16);
    // (R^-1)^2 = (q^-1 - q) R^-1 + Id and R = R^-1 + (q - q^-1) Id
    let l = ModuleObject::simple(EPS1).unwrap();
    let id = EquivariantMap::identity(&l.concat(&l));
    let lhs = rinv.compose(&rinv).unwrap();
    let rhs = rinv.scale(&-&q_minus_qinv()).add(&id).unwrap();
    assert_eq!(lhs, rhs);
    let r = r_check(&l, &l);
    assert_eq!(r, rinv.add(&id.scale(&q_minus_qinv())).unwrap());
    report(
        "5 (inverse braiding table + quadratic relation)",
        start,
        1.0,
    );
}

#[test]
fn criterion_06_ribbon_structure() {
    let start = Instant::now();
    // identity action on the vector representation and its dual
    let l = ModuleObject::simple(EPS1).unwrap();
    assert_eq!(
        ribbon_v(&l).as_scalar_multiple_of_identity(),
        Some(RationalFunction::one())
    );
    let dual = ModuleObject::new(vec![Factor::dual(EPS1).unwrap()]);
    assert_eq!(
        ribbon_v(&dual).as_scalar_multiple_of_identity(),
        Some(RationalFunction::one())
    );
    // the full twist curl equals the ribbon operator
    let weights = [
        EPS1,
        Weight::new(2, 0),
        Weight::new(1, 1),
        Weight::new(2, -1),
        Weight::new(-1, 3),
        Weight::new(0, 2),
    ];
    for wt in weights {
        assert_eq!(
            full_twist(wt).unwrap(),
            ribbon_v(&ModuleObject::simple(wt).unwrap()),
            "full twist vs ribbon at {wt}"
        );
    }
    // Delta(v) = (R21 R12)^-1 (v (x) v) as operators on five pairs
    let pairs = [
        (EPS1, EPS1),
        (Weight::new(2, 0), EPS1),
        (Weight::new(1, 1), Weight::new(2, -1)),
        (Weight::new(0, 2), Weight::new(3, 0)),
        (Weight::new(-1, 2), Weight::new(1, 1)),
    ];
    for (lam, mu) in pairs {
        let v = ModuleObject::simple(lam).unwrap();
        let w = ModuleObject::simple(mu).unwrap();
        let word = v.concat(&w);
        let double_braiding = r_check(&w, &v).compose(&r_check(&v, &w)).unwrap();
        let rhs = double_braiding
            .inverse()
            .unwrap()
            .compose(&ribbon_v(&v).tensor(&ribbon_v(&w)))
            .unwrap();
        assert_eq!(ribbon_v(&word), rhs, "Delta(v) identity at {lam} {mu}");
        assert!(check_equivariance(&ribbon_v(&word)));
        // u v^-1 = K as operators on the pair word
        let uv = gl11::rep::u_action(&word)
            .compose(&ribbon_v(&word).inverse().unwrap())
            .unwrap();
        assert_eq!(uv, gl11::rep::act_generator(Gen::K, &word));
    }
    report("6 (ribbon operator, full twist, Delta(v))", start, 5.0);
}

#[test]
fn criterion_07_character_decompositions() {
    let start = Instant::now();
    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut out = 1usize;
        for i in 0..k {
            out = out * (n - i) / (i + 1);
        }
        out
    }
    // tensor powers of the vector representation
    let l = ModuleObject::simple(EPS1).unwrap();
    for m in 1..=6usize {
        let mut word = ModuleObject::unit();
        for _ in 0..m {
            word = word.concat(&l);
        }
        let lhs = character(&word);
        let parts: Vec<_> = (0..m)
            .map(|ell| {
                // m eps1 - ell alpha
                let hw = Weight::new(m as i64 - ell as i64, ell as i64);
                (
                    binom(m - 1, ell),
                    character(&ModuleObject::simple(hw).unwrap()),
                )
            })
            .collect();
        assert_eq!(lhs, character_sum(&parts), "power {m}");
    }
    // mixed products with the dual
    for m in 0..=4usize {
        for n in 0..=4usize {
            if m == n {
                continue;
            }
            let mut word = ModuleObject::unit();
            for _ in 0..m {
                word = word.concat(&l);
            }
            let dual = ModuleObject::new(vec![Factor::dual(EPS1).unwrap()]);
            for _ in 0..n {
                word = word.concat(&dual);
            }
            let lhs = character(&word);
            let parts: Vec<_> = (0..m + n)
                .map(|ell| {
                    // m eps1 - n eps2 - ell alpha
                    let hw = Weight::new(m as i64 - ell as i64, -(n as i64) + ell as i64);
                    (
                        binom(m + n - 1, ell),
                        character(&ModuleObject::simple(hw).unwrap()),
                    )
                })
                .collect();
            assert_eq!(lhs, character_sum(&parts), "mixed {m},{n}");
        }
    }
    report("7 (character decompositions, m <= 6 and mixed)", start, 5.0);
}

#[test]
fn criterion_08_vanishing_on_closed_links() {
    let start = Instant::now();
    let assorted = [
        Weight::new(1, 0),
        Weight::new(2, -1),
        Weight::new(1, 1),
        Weight::new(0, 2),
    ];
    let mut checked = 0;
    for (i, entry) in corpus().iter().enumerate() {
        let d = entry.braid().closure();
        let lam = assorted[i % assorted.len()];
        let value = q_closed(&d, &Labeling::constant(lam)).unwrap();
        assert!(
            value.is_zero(),
            "Q({}) with label {lam} = {value}",
            entry.name
        );
        checked += 1;
    }
    // a couple of genuinely mixed labelings on multi-component links
    let hopf = BraidWord::new(2, vec![1, 1]).unwrap().closure();
    let lab = Labeling::PerComponent(
        [(0, Weight::new(1, 0)), (1, Weight::new(0, 2))]
            .into_iter()
            .collect(),
    );
    assert!(q_closed(&hopf, &lab).unwrap().is_zero());
    let borromean = BraidWord::new(3, vec![1, -2, 1, -2, 1, -2])
        .unwrap()
        .closure();
    let lab = Labeling::PerComponent(
        [
            (0, Weight::new(2, 0)),
            (1, Weight::new(1, 1)),
            (2, Weight::new(2, -1)),
        ]
        .into_iter()
        .collect(),
    );
    assert!(q_closed(&borromean, &lab).unwrap().is_zero());
    assert!(checked >= 10);
    report(
        "8 (vanishing on closed links, corpus + mixed labels)",
        start,
        10.0,
    );
}

#[test]
fn criterion_09_cut_invariant_values() {
    for (name, strands, word, expected) in [
        ("unknot", 1usize, vec![], "1"),
        ("trefoil", 2, vec![1, 1, 1], "q^-2 - 1 + q^2"),
        ("hopf", 2, vec![1, 1], "-q^-1 + q"),
        ("figure-eight", 3, vec![1, -2, 1, -2], "-q^-2 + 3 - q^2"),
    ] {
        let start = Instant::now();
        let d = BraidWord::new(strands, word).unwrap().closure();
        let got = hat_q(&d, &Labeling::constant(EPS1), EPS1).unwrap().value;
        assert_eq!(got.to_string(), expected, "{name}");
        report(&format!("9 ({name} = {expected})"), start, 10.0);
    }
}

#[test]
fn criterion_10_skein_markov_and_burau() {
    let start = Instant::now();
    // skein relation at every crossing of every corpus word
    for entry in corpus() {
        let b = entry.braid();
        assert!(
            skein_all_sites(&b).unwrap(),
            "skein fails somewhere in {}",
            entry.name
        );
    }
    // Markov moves on sampled pairs
    let mut pairs = 0;
    let mut originals = Vec::new();
    let mut variants = Vec::new();
    for entry in corpus() {
        let b = entry.braid();
        for positive in [true, false] {
            originals.push(b.clone());
            variants.push(b.stabilized(positive));
            pairs += 1;
        }
        let max_g = (b.strands - 1) as i32;
        for g in 1..=max_g.min(2) {
            for sign in [g, -g] {
                originals.push(b.clone());
                variants.push(b.conjugated_by(sign).unwrap());
                pairs += 1;
            }
        }
    }
    assert!(pairs >= 20, "only {pairs} Markov pairs");
    let base = alexander_all(&originals);
    let moved = alexander_all(&variants);
    for ((a, b), (orig, var)) in base.iter().zip(&moved).zip(originals.iter().zip(&variants)) {
        let (a, b) = (a.as_ref().unwrap(), b.as_ref().unwrap());
        assert_eq!(a, b, "Markov move changed the value: {orig} vs {var}");
    }
    // Burau oracle agreement, up to units, on the full corpus
    for entry in corpus() {
        let ours = alexander(&entry.braid().closure()).unwrap();
        let oracle = burau_oracle(&entry.braid()).unwrap();
        assert!(
            unit_class_eq(&ours, &oracle),
            "{}: {} vs oracle {}",
            entry.name,
            ours,
            oracle
        );
        if let Some(pinned) = entry.alexander {
            assert_eq!(ours.to_string(), pinned, "{} pinned value", entry.name);
        }
    }
    report(
        "10 (skein everywhere, >=20 Markov pairs, Burau)",
        start,
        60.0,
    );
}

#[test]
fn criterion_11_cut_independence() {
    let start = Instant::now();
    for (name, strands, word) in [
        ("trefoil", 2usize, vec![1, 1, 1]),
        ("hopf", 2, vec![1, 1]),
        ("figure-eight", 3, vec![1, -2, 1, -2]),
    ] {
        let d = BraidWord::new(strands, word).unwrap().closure();
        assert!(
            cut_independence_check(&d, &Labeling::constant(EPS1), EPS1).unwrap(),
            "cut sites disagree on {name}"
        );
    }
    report(
        "11 (cut independence on trefoil, hopf, figure-eight)",
        start,
        30.0,
    );
}
