//! Acceptance gate for the toolkit: every expected value is pinned exactly
//! (rational equality, no tolerances).  One test per criterion; each prints
//! a pass line on success.

mod common;

use num::{BigInt, BigRational, FromPrimitive, One};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use sugawara::conformal::{central_charge_check, lowest_conformal_weight, solve_conformal_levels};
use sugawara::rep::{tensor_decompose, tensor_decompose_with, weight_multiplicities, Limits};
use sugawara::verify::{fusion_scan, Status};
use sugawara::{catalog, embed, LieType, RootSystem, Weight};

fn rat(s: &str) -> BigRational {
    s.parse().unwrap()
}

fn sys(s: &str) -> Arc<RootSystem> {
    RootSystem::build(LieType::parse(s).unwrap()).unwrap()
}

fn w(rs: &Arc<RootSystem>, coords: &[i64]) -> Weight {
    Weight::from_ints(rs, coords).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("acceptance {:02}: PASS - {}", n, what);
}

fn solved_ks(name: &str, rank: Option<usize>) -> Vec<BigRational> {
    let spec = catalog::build(name, rank).unwrap();
    solve_conformal_levels(&spec)
        .unwrap()
        .solutions
        .into_iter()
        .map(|s| s.k)
        .collect()
}

#[test]
fn a01_level_solver_reproduces_table_levels() {
    for l in 4..=8i64 {
        let lu = l as usize;
        assert_eq!(solved_ks("cl-in-a2l-1", Some(lu)), vec![rat("-1")], "C{}", l);
        assert_eq!(
            solved_ks("bl1-in-dl", Some(lu)),
            vec![BigRational::from_i64(-l + 2).unwrap()],
            "B{} in D{}",
            l - 1,
            l
        );
        assert_eq!(
            solved_ks("dl-in-bl", Some(lu)),
            vec![rat(&format!("{}/2", -2 * l + 3))],
            "D{} in B{}",
            l,
            l
        );
    }
    assert_eq!(solved_ks("f4-in-e6", None), vec![rat("-3")]);
    assert_eq!(solved_ks("a2-in-g2", None), vec![rat("-5/3")]);
    pass(1, "level solver matches the table of embedding levels");
}

#[test]
fn a02_embedding_indices_match_level_ratios() {
    let one = vec![BigRational::one()];
    for l in 4..=8 {
        for name in ["cl-in-a2l-1", "bl1-in-dl", "dl-in-bl"] {
            let spec = catalog::build(name, Some(l)).unwrap();
            assert_eq!(embed::embedding_index(&spec).unwrap(), one, "{}({})", name, l);
        }
    }
    for name in ["f4-in-e6", "a2-in-g2", "g2-in-d4"] {
        let spec = catalog::build(name, None).unwrap();
        assert_eq!(embed::embedding_index(&spec).unwrap(), one, "{}", name);
    }
    for l in 2..=6 {
        let spec = catalog::build("bl-in-a2l", Some(l)).unwrap();
        assert_eq!(
            embed::embedding_index(&spec).unwrap(),
            vec![rat("2")],
            "bl-in-a2l({})",
            l
        );
    }
    let a1a2 = catalog::build("a1-in-a2", None).unwrap();
    assert_eq!(embed::embedding_index(&a1a2).unwrap(), vec![rat("4")]);
    pass(2, "Dynkin indices reproduce every k'/k ratio");
}

#[test]
fn a03_central_charge_identity_at_every_solved_level() {
    let mut checked = 0;
    for spec in catalog::catalog() {
        let outcome = solve_conformal_levels(&spec).unwrap();
        for sol in &outcome.solutions {
            let (lhs, rhs, equal) = central_charge_check(&spec, &sol.k).unwrap();
            assert!(
                equal,
                "{} at k = {}: {} vs {}",
                spec.display_name(),
                sol.k,
                lhs,
                rhs
            );
            checked += 1;
        }
    }
    assert!(checked >= 40, "expected a full catalog sweep, got {}", checked);

    let g2d4 = catalog::build("g2-in-d4", None).unwrap();
    let (lhs, rhs, _) = central_charge_check(&g2d4, &rat("-2")).unwrap();
    assert_eq!((lhs, rhs), (rat("-14"), rat("-14")));
    let f4e6 = catalog::build("f4-in-e6", None).unwrap();
    let (lhs, rhs, _) = central_charge_check(&f4e6, &rat("-3")).unwrap();
    assert_eq!((lhs, rhs), (rat("-26"), rat("-26")));
    pass(
        3,
        &format!("central-charge identity exact at {} solved levels", checked),
    );
}

#[test]
fn a04_tensor_decompositions_exact_multisets() {
    let a2 = sys("A2");
    assert!(tensor_decompose(&w(&a2, &[1, 0]), &w(&a2, &[1, 0]))
        .unwrap()
        .matches(&[(&[2, 0], 1), (&[0, 1], 1)]));
    assert!(tensor_decompose(&w(&a2, &[0, 1]), &w(&a2, &[0, 1]))
        .unwrap()
        .matches(&[(&[0, 2], 1), (&[1, 0], 1)]));
    assert!(tensor_decompose(&w(&a2, &[1, 0]), &w(&a2, &[0, 1]))
        .unwrap()
        .matches(&[(&[1, 1], 1), (&[0, 0], 1)]));

    let f4 = sys("F4");
    assert!(tensor_decompose(&w(&f4, &[0, 0, 0, 1]), &w(&f4, &[0, 0, 0, 1]))
        .unwrap()
        .matches(&[
            (&[0, 0, 0, 2], 1),
            (&[0, 0, 1, 0], 1),
            (&[0, 0, 0, 1], 1),
            (&[1, 0, 0, 0], 1),
            (&[0, 0, 0, 0], 1),
        ]));

    for l in 4..=8usize {
        let b = sys(&format!("B{}", l - 1));
        let mut two_w1 = vec![0i64; l - 1];
        two_w1[0] = 2;
        let mut w2 = vec![0i64; l - 1];
        w2[1] = 1;
        let zero = vec![0i64; l - 1];
        let mut v = vec![0i64; l - 1];
        v[0] = 1;
        assert!(
            tensor_decompose(&w(&b, &v), &w(&b, &v)).unwrap().matches(&[
                (&two_w1, 1),
                (&w2, 1),
                (&zero, 1)
            ]),
            "B{}",
            l - 1
        );

        let d = sys(&format!("D{}", l));
        let mut two_w1 = vec![0i64; l];
        two_w1[0] = 2;
        let mut w2 = vec![0i64; l];
        w2[1] = 1;
        let zero = vec![0i64; l];
        let mut v = vec![0i64; l];
        v[0] = 1;
        assert!(
            tensor_decompose(&w(&d, &v), &w(&d, &v)).unwrap().matches(&[
                (&two_w1, 1),
                (&w2, 1),
                (&zero, 1)
            ]),
            "D{}",
            l
        );
    }

    let g2 = sys("G2");
    assert!(tensor_decompose(&w(&g2, &[1, 0]), &w(&g2, &[1, 0]))
        .unwrap()
        .matches(&[(&[2, 0], 1), (&[0, 1], 1), (&[1, 0], 1), (&[0, 0], 1)]));
    assert!(tensor_decompose(&w(&g2, &[1, 0]), &w(&g2, &[0, 1]))
        .unwrap()
        .matches(&[(&[1, 1], 1), (&[2, 0], 1), (&[1, 0], 1)]));
    pass(4, "tensor decompositions match the pinned multisets");
}

#[test]
fn a05_lowest_conformal_weights() {
    let a2 = sys("A2");
    assert_eq!(
        lowest_conformal_weight(&w(&a2, &[2, 0]), &rat("-5/3")).unwrap(),
        rat("5/2")
    );
    assert_eq!(
        lowest_conformal_weight(&w(&a2, &[0, 2]), &rat("-5/3")).unwrap(),
        rat("5/2")
    );
    assert_eq!(
        lowest_conformal_weight(&w(&a2, &[1, 1]), &rat("-5/3")).unwrap(),
        rat("9/4")
    );

    for l in 4..=8i64 {
        let b = sys(&format!("B{}", l - 1));
        let k = BigRational::from_i64(-l + 2).unwrap();
        let mut two_w1 = vec![0i64; (l - 1) as usize];
        two_w1[0] = 2;
        let mut w2 = vec![0i64; (l - 1) as usize];
        w2[1] = 1;
        assert_eq!(
            lowest_conformal_weight(&w(&b, &two_w1), &k).unwrap(),
            rat("2") + BigRational::new(BigInt::from(1), BigInt::from(l - 1)),
            "B{} 2w1",
            l - 1
        );
        assert_eq!(
            lowest_conformal_weight(&w(&b, &w2), &k).unwrap(),
            rat("2") - BigRational::new(BigInt::from(1), BigInt::from(l - 1)),
            "B{} w2",
            l - 1
        );

        let d = sys(&format!("D{}", l));
        let k = rat(&format!("{}/2", -2 * l + 3));
        let mut two_w1 = vec![0i64; l as usize];
        two_w1[0] = 2;
        let mut w2 = vec![0i64; l as usize];
        w2[1] = 1;
        assert_eq!(
            lowest_conformal_weight(&w(&d, &two_w1), &k).unwrap(),
            rat("2") + BigRational::new(BigInt::from(2), BigInt::from(2 * l - 1)),
            "D{} 2w1",
            l
        );
        assert_eq!(
            lowest_conformal_weight(&w(&d, &w2), &k).unwrap(),
            rat("2") - BigRational::new(BigInt::from(2), BigInt::from(2 * l - 1)),
            "D{} w2",
            l
        );
    }

    let f4 = sys("F4");
    assert_eq!(
        lowest_conformal_weight(&w(&f4, &[0, 0, 0, 2]), &rat("-3")).unwrap(),
        rat("13/6")
    );
    assert_eq!(
        lowest_conformal_weight(&w(&f4, &[1, 0, 0, 0]), &rat("-3")).unwrap(),
        rat("3/2")
    );
    assert_eq!(
        lowest_conformal_weight(&w(&f4, &[0, 0, 1, 0]), &rat("-3")).unwrap(),
        rat("2")
    );

    let g2 = sys("G2");
    assert_eq!(
        lowest_conformal_weight(&w(&g2, &[2, 0]), &rat("-2")).unwrap(),
        rat("7/3")
    );
    assert_eq!(
        lowest_conformal_weight(&w(&g2, &[1, 1]), &rat("-2")).unwrap(),
        rat("7/2")
    );
    pass(5, "lowest conformal weights exact");
}

/// Frozen rendering of a two-summand decomposition, written out by hand so
/// the comparison is byte-level against an independent construction.
fn two_summands(k: &str, rank: usize, nonzero: &[(usize, i64)]) -> String {
    let zeros = vec!["0"; rank].join(",");
    let mut coords: Vec<String> = vec!["0".into(); rank];
    for &(i, c) in nonzero {
        coords[i] = c.to_string();
    }
    format!("L({},[{}]) (+) L({},[{}])", k, zeros, k, coords.join(","))
}

#[test]
fn a06_verifier_statuses_and_decomposition_bytes() {
    // A2 < G2: plain verified, three summands
    let spec = catalog::build("a2-in-g2", None).unwrap();
    let report = fusion_scan(&spec, &rat("-5/3")).unwrap();
    assert_eq!(report.status, Status::Verified);
    assert_eq!(
        report.decomposition_string(),
        "L(-5/3,[0,0]) (+) L(-5/3,[1,0]) (+) L(-5/3,[0,1])"
    );

    for l in 4..=8i64 {
        let spec = catalog::build("bl1-in-dl", Some(l as usize)).unwrap();
        let k = BigRational::from_i64(-l + 2).unwrap();
        let report = fusion_scan(&spec, &k).unwrap();
        assert_eq!(report.status, Status::Verified, "bl1-in-dl({})", l);
        assert_eq!(
            report.decomposition_string(),
            two_summands(&k.to_string(), (l - 1) as usize, &[(0, 1)]),
            "bl1-in-dl({})",
            l
        );

        let spec = catalog::build("dl-in-bl", Some(l as usize)).unwrap();
        let k = rat(&format!("{}/2", -2 * l + 3));
        let report = fusion_scan(&spec, &k).unwrap();
        assert_eq!(report.status, Status::Verified, "dl-in-bl({})", l);
        assert_eq!(
            report.decomposition_string(),
            two_summands(&k.to_string(), l as usize, &[(0, 1)]),
            "dl-in-bl({})",
            l
        );
    }

    // E6 / F4: annotated, integral flag exactly {w3}, mismatch exactly {w4}
    let spec = catalog::build("f4-in-e6", None).unwrap();
    let report = fusion_scan(&spec, &rat("-3")).unwrap();
    assert_eq!(report.status, Status::VerifiedWithAnnotations);
    assert_eq!(
        report.integral_weights(),
        BTreeSet::from([vec![0, 0, 1, 0]])
    );
    assert_eq!(
        report.mismatch_weights(),
        BTreeSet::from([vec![0, 0, 0, 1]])
    );
    assert_eq!(
        report.decomposition_string(),
        "L(-3,[0,0,0,0]) (+) L(-3,[0,0,0,1])"
    );

    // D4 / G2: annotated, integral flag exactly {w2}, mismatch exactly {w1},
    // four summands in the order of the triality decomposition
    let spec = catalog::build("g2-in-d4", None).unwrap();
    let report = fusion_scan(&spec, &rat("-2")).unwrap();
    assert_eq!(report.status, Status::VerifiedWithAnnotations);
    assert_eq!(report.integral_weights(), BTreeSet::from([vec![0, 1]]));
    assert_eq!(report.mismatch_weights(), BTreeSet::from([vec![1, 0]]));
    assert_eq!(
        report.decomposition_string(),
        "L(-2,[0,0]) (+) L(-2,[0,1]) (+) L^(1)(-2,[1,0]) (+) L^(2)(-2,[1,0])"
    );

    // remaining positive-level table rows emit their two-summand columns
    let spec = catalog::build("bl-in-a2l", Some(3)).unwrap();
    let report = fusion_scan(&spec, &rat("1")).unwrap();
    assert_eq!(report.status, Status::VerifiedWithAnnotations);
    assert_eq!(
        report.decomposition_string(),
        two_summands("2", 3, &[(0, 2)])
    );
    let spec = catalog::build("a1-in-a2", None).unwrap();
    let report = fusion_scan(&spec, &rat("1")).unwrap();
    assert_eq!(report.status, Status::VerifiedWithAnnotations);
    assert_eq!(report.decomposition_string(), "L(4,[0]) (+) L(4,[4])");

    pass(6, "verifier statuses and decomposition bytes match");
}

#[test]
fn a07_reductive_examples_levels() {
    let expect = |name: &str, rank: Option<usize>, ks: &[&str]| {
        let got: BTreeSet<String> = solved_ks(name, rank)
            .into_iter()
            .map(|k| k.to_string())
            .collect();
        let want: BTreeSet<String> = ks.iter().map(|s| s.to_string()).collect();
        assert_eq!(got, want, "{} rank {:?}", name, rank);
    };
    expect("cartan-in-a2", None, &["1"]);
    expect("cartan-in-d4", None, &["1"]);
    for l in 2..=4 {
        expect("gl-in-sp", Some(l), &["1", "-1/2"]);
    }
    for l in 2..=4 {
        let k2 = format!("-{}/2", l + 1);
        // -(l+1)/2 reduces to an integer for odd l
        let k2 = if (l + 1) % 2 == 0 {
            format!("-{}", (l + 1) / 2)
        } else {
            k2
        };
        expect("gl-in-sl", Some(l), &["1", &k2]);
    }
    for l in 4..=5 {
        expect("gl-in-so", Some(l), &["1", "-2"]);
    }
    pass(7, "reductive example levels match");
}

#[test]
fn a08_property_suites() {
    // casimir(theta) = 2 h-check and weyl_dim(theta) = dim g for every type
    // of rank <= 8
    let mut all_types = Vec::new();
    for r in 1..=8 {
        all_types.push(format!("A{}", r));
    }
    for r in 2..=8 {
        all_types.push(format!("B{}", r));
        all_types.push(format!("C{}", r));
    }
    for r in 4..=8 {
        all_types.push(format!("D{}", r));
    }
    for r in 6..=8 {
        all_types.push(format!("E{}", r));
    }
    all_types.push("F4".into());
    all_types.push("G2".into());
    for t in &all_types {
        let rs = sys(t);
        let theta = Weight::theta(&rs);
        assert_eq!(
            theta.casimir().unwrap(),
            BigRational::from_u64(2 * rs.dual_coxeter()).unwrap(),
            "{}",
            t
        );
        assert_eq!(
            theta.weyl_dim().unwrap(),
            BigInt::from(rs.dimension()),
            "{}",
            t
        );
    }

    // dimension conservation and commutativity on 200 seeded random pairs
    // over rank <= 4 systems
    let systems: Vec<Arc<RootSystem>> = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
    ]
    .iter()
    .map(|s| sys(s))
    .collect();
    let mut rng = StdRng::seed_from_u64(0x5EED_CAFE);
    let mut done = 0;
    while done < 200 {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let sample = |rng: &mut StdRng| -> Option<Weight> {
            let coords: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(0..4)).collect();
            let cand = w(rs, &coords);
            (cand.weyl_dim().unwrap() <= BigInt::from(2_500u32)).then_some(cand)
        };
        let (Some(a), Some(b)) = (sample(&mut rng), sample(&mut rng)) else {
            continue;
        };
        let ab = tensor_decompose(&a, &b).unwrap();
        let ba = tensor_decompose(&b, &a).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(
            ab.dimension(),
            a.weyl_dim().unwrap() * b.weyl_dim().unwrap()
        );
        done += 1;
    }

    // Freudenthal totals equal Weyl dimensions on 100 seeded random weights
    let mut done = 0;
    while done < 100 {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let coords: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(0..5)).collect();
        let lam = w(rs, &coords);
        if lam.weyl_dim().unwrap() > BigInt::from(20_000u32) {
            continue;
        }
        let ws = weight_multiplicities(&lam).unwrap();
        assert_eq!(ws.total(), lam.weyl_dim().unwrap());
        done += 1;
    }

    // Klimyk against the character-product oracle: every pair of dominant
    // weights of dimension <= 200 over all rank <= 2 systems (sequential
    // limits: these tensors are far too small to amortize work-stealing)
    let seq = Limits {
        parallel: false,
        ..Limits::default()
    };
    let mut pairs_checked = 0usize;
    for t in ["A1", "A2", "B2", "C2", "G2"] {
        let rs = sys(t);
        let mut oracle = common::CharacterOracle::new(&rs);
        let weights = common::dominant_weights_up_to(&rs, 200);
        for i in 0..weights.len() {
            for j in i..weights.len() {
                let d = tensor_decompose_with(&weights[i], &weights[j], seq).unwrap();
                let got: BTreeMap<Vec<i64>, u64> = d
                    .iter()
                    .map(|(w, m)| (w.int_coords().unwrap(), m))
                    .collect();
                let expected = oracle.tensor(&weights[i], &weights[j]);
                assert_eq!(
                    got, expected,
                    "{}: {:?} x {:?}",
                    t,
                    weights[i].int_coords(),
                    weights[j].int_coords()
                );
                pairs_checked += 1;
            }
        }
    }
    assert!(pairs_checked > 20_000, "swept {} pairs", pairs_checked);

    pass(
        8,
        &format!(
            "property suites (200 tensor pairs, 100 multiplicity totals, {} oracle pairs)",
            pairs_checked
        ),
    );
}
