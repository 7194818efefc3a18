mod common;

use common::*;
use proptest::prelude::*;
use proptest::sample::select;
use quandle::algebra::{
    abelian_extension, builtin, evaluate_word, kei_normalize, make_dihedral, make_trivial, rack_normalize, Element,
    RackClass, RackTable, Sign, WordTree,
};
use quandle::coloring::{
    count_colorings, count_shadow_colorings, enumerate_colorings, enumerate_shadow_colorings, lift_coloring, Coloring,
};
use quandle::diagram::{torus_diagram, Diagram};
use quandle::homology::{boundary_matrix, coboundary, homology, is_cocycle, Cochain, Theory};
use quandle::invariant::{coloring_weight, state_sum_2, state_sum_shadow, state_sum_surface};

fn naive_class(n: usize, t: &[Element]) -> RackClass {
    let op = |a: usize, b: usize| t[a * n + b];
    let r1 = (0..n).all(|b| {
        let mut seen = vec![false; n];
        (0..n).all(|a| !std::mem::replace(&mut seen[op(a, b)], true))
    });
    let r2 = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(op(a, c), op(b, c)))));
    if !(r1 && r2) {
        return RackClass::NotARack;
    }
    if !(0..n).all(|a| op(a, a) == a) {
        return RackClass::Rack;
    }
    if (0..n).all(|a| (0..n).all(|b| op(op(a, b), b) == a)) {
        RackClass::Kei
    } else {
        RackClass::Quandle
    }
}

fn relabel(x: &RackTable, perm: &[Element]) -> RackTable {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    RackTable::from_fn(x.size(), |a, b| perm[x.op(inv[a], inv[b])]).unwrap()
}

fn values_for_nu(phi: &Cochain) -> Vec<u64> {
    phi.values()[..3].to_vec()
}

fn quandles() -> Vec<RackTable> {
    small_racks().into_iter().filter(|x| x.is_quandle()).collect()
}

fn word_tree(symbols: usize) -> impl Strategy<Value = WordTree> {
    let leaf = (0..symbols).prop_map(WordTree::leaf);
    leaf.prop_recursive(4, 16, 2, |inner| (inner.clone(), inner).prop_map(|(l, r)| WordTree::op(l, r)))
}

fn corpus_diagram() -> impl Strategy<Value = (String, Diagram)> {
    select(corpus())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_matches_naive(n in 1usize..=3, seed in proptest::collection::vec(0usize..3, 9)) {
        let t: Vec<Element> = seed.iter().take(n * n).map(|&v| v % n).collect();
        let x = RackTable::from_flat(n, t.clone()).unwrap();
        prop_assert_eq!(x.class(), naive_class(n, &t));
    }

    #[test]
    fn rack_identities_hold(x in select(small_racks()), a in 0usize..4, b in 0usize..4, c in 0usize..4) {
        let n = x.size();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(x.op(x.op(a, b), c), x.op(x.op(a, c), x.op(b, c)));
        prop_assert_eq!(x.op(x.op_inv(a, b), b), a);
        prop_assert_eq!(x.op_inv(x.op(a, b), b), a);
        // a^{bc} = a^{c b^c} and a^{b^c} = a^{c^-1 b c}
        let lhs = evaluate_word(&x, a, &[(b, Sign::Pos), (c, Sign::Pos)]);
        prop_assert_eq!(lhs, evaluate_word(&x, a, &[(c, Sign::Pos), (x.op(b, c), Sign::Pos)]));
        let lhs = evaluate_word(&x, a, &[(x.op(b, c), Sign::Pos)]);
        prop_assert_eq!(lhs, evaluate_word(&x, a, &[(c, Sign::Neg), (b, Sign::Pos), (c, Sign::Pos)]));
    }

    #[test]
    fn normal_forms_evaluate_the_same(w in word_tree(4), assign in proptest::collection::vec(0usize..5, 4)) {
        for spec in ["dihedral:3", "dihedral:5", "trivial:2"] {
            let x = builtin(spec).unwrap();
            let a: Vec<Element> = assign.iter().map(|&v| v % x.size()).collect();
            prop_assert_eq!(kei_normalize(&w).evaluate(&x, &a), w.evaluate(&x, &a));
        }
        for x in small_racks() {
            let a: Vec<Element> = assign.iter().map(|&v| v % x.size()).collect();
            prop_assert_eq!(rack_normalize(&w).evaluate(&x, &a), w.evaluate(&x, &a));
        }
    }

    #[test]
    fn extension_is_quandle_iff_cocycle(values in proptest::collection::vec(0u64..3, 9)) {
        let x = make_dihedral(3).unwrap();
        let phi = Cochain::from_values(3, 2, 3, values);
        let e = abelian_extension(&x, 3, &phi).unwrap();
        prop_assert_eq!(e.is_quandle(), is_cocycle(&x, &phi, Theory::Quandle).unwrap());
        let nu = Cochain::from_values(3, 1, 3, values_for_nu(&phi));
        let cob = coboundary(&x, &nu, Theory::Quandle).unwrap();
        prop_assert!(abelian_extension(&x, 3, &cob).unwrap().is_quandle());
    }

    #[test]
    fn enumeration_is_relabeling_invariant(
        (_, d) in select(small_corpus()),
        x in select(small_racks()),
        perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
    ) {
        let perm: Vec<Element> = perm.into_iter().filter(|&p| p < x.size()).collect();
        let y = relabel(&x, &perm);
        let got = enumerate_colorings(&d, &y).unwrap();
        prop_assert_eq!(&got, &brute_force_colorings(&d, &y));
        prop_assert_eq!(got.len(), count_colorings(&d, &x).unwrap());
    }

    #[test]
    fn homology_is_relabeling_invariant(
        spec in select(vec!["dihedral:3", "dihedral:4", "trivial:2", "alexander:2:1,0,1:0,1"]),
        perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
        n in 1usize..=3,
    ) {
        let x = builtin(spec).unwrap();
        let perm: Vec<Element> = perm.into_iter().filter(|&p| p < x.size()).collect();
        let y = relabel(&x, &perm);
        for th in [Theory::Rack, Theory::Degenerate, Theory::Quandle] {
            prop_assert_eq!(homology(&x, n, th).unwrap(), homology(&y, n, th).unwrap());
            let dd = boundary_matrix(&y, n, th).unwrap().mul(&boundary_matrix(&y, n + 1, th).unwrap());
            prop_assert!(dd.is_zero());
        }
    }

    #[test]
    fn cohomologous_cocycles_agree(
        (name, d) in corpus_diagram(),
        mu in proptest::collection::vec(0u64..3, 9),
        nu in proptest::collection::vec(0u64..3, 3),
        phi_mu in proptest::collection::vec(0u64..3, 3),
    ) {
        let x = make_dihedral(3).unwrap();
        let theta = theta();
        let mut mu = Cochain::from_values(3, 2, 3, mu);
        for a in 0..3 {
            mu.set(&[a, a], 0);
        }
        let shifted = theta.add(&coboundary(&x, &mu, Theory::Quandle).unwrap());
        prop_assert_eq!(state_sum_shadow(&d, &x, &shifted).unwrap(), state_sum_shadow(&d, &x, &theta).unwrap(), "{}", name);
        for (_, sd) in all_surfaces() {
            prop_assert_eq!(state_sum_surface(&sd, &x, &shifted).unwrap(), state_sum_surface(&sd, &x, &theta).unwrap());
        }
        // every quandle 2-cocycle of R3 over Z_3 is a coboundary
        let phi = coboundary(&x, &Cochain::from_values(3, 1, 3, phi_mu), Theory::Quandle).unwrap();
        let phi2 = phi.add(&coboundary(&x, &Cochain::from_values(3, 1, 3, nu), Theory::Quandle).unwrap());
        prop_assert_eq!(state_sum_2(&d, &x, &phi).unwrap(), state_sum_2(&d, &x, &phi2).unwrap());
    }
}

#[test]
fn augmentation_equals_counts() {
    let theta = theta();
    for (name, d) in corpus() {
        for x in quandles() {
            let zero = Cochain::zero(x.size(), 2, 5);
            let n = count_colorings(&d, &x).unwrap() as i64;
            assert_eq!(state_sum_2(&d, &x, &zero).unwrap().augmentation(), n, "{name}");
        }
        let x = make_dihedral(3).unwrap();
        let shadows = count_shadow_colorings(&d, &x).unwrap();
        assert_eq!(state_sum_shadow(&d, &x, &theta).unwrap().augmentation(), shadows as i64, "{name}");
        assert_eq!(shadows, 3 * count_colorings(&d, &x).unwrap(), "{name}");
    }
}

#[test]
fn shadow_colorings_satisfy_face_relations() {
    for (name, d) in small_corpus() {
        for x in quandles() {
            for s in enumerate_shadow_colorings(&d, &x).unwrap() {
                for f in d.face_relations() {
                    assert_eq!(s.regions[f.to], x.op(s.regions[f.from], s.coloring.arcs[f.arc]), "{name}");
                }
            }
        }
    }
}

#[test]
fn mirror_conjugates_and_reverse_mirror_keeps_counts() {
    let x = make_dihedral(3).unwrap();
    let theta = theta();
    for (name, d) in corpus() {
        let m = d.mirror();
        assert_eq!(
            state_sum_shadow(&m, &x, &theta).unwrap(),
            state_sum_shadow(&d, &x, &theta).unwrap().conjugate(),
            "{name}"
        );
        assert_eq!(m.writhe(), -d.writhe());
        let rm = m.reverse();
        for q in quandles() {
            assert_eq!(count_colorings(&rm, &q).unwrap(), count_colorings(&d, &q).unwrap(), "{name}");
        }
    }
}

#[test]
fn trefoil_encodings_agree() {
    let encodings = [pd("trefoil.pd"), braid("2: 1 1 1"), torus_diagram(2, 3).unwrap(), braid("3: 1 1 1 2")];
    let x = make_dihedral(3).unwrap();
    let want = state_sum_shadow(&encodings[0], &x, &theta()).unwrap();
    for d in &encodings {
        for q in small_racks().into_iter().filter(|q| q.is_quandle()) {
            assert_eq!(count_colorings(d, &q).unwrap(), count_colorings(&encodings[0], &q).unwrap());
        }
        assert_eq!(state_sum_shadow(d, &x, &theta()).unwrap(), want);
    }
}

#[test]
fn euler_characteristic_of_regions() {
    for (name, d) in corpus() {
        if d.crossing_count() == 0 {
            assert_eq!(d.region_count(), 2);
        } else {
            assert_eq!(d.region_count() as i64, 2 - d.crossing_count() as i64 + d.edge_count() as i64, "{name}");
            assert_eq!(d.edge_count(), 2 * d.crossing_count(), "{name}");
        }
    }
}

#[test]
fn lift_iff_weight_vanishes_on_hopf_link() {
    let x = make_trivial(2).unwrap();
    let hopf = torus_diagram(2, 2).unwrap();
    let phi = Cochain::from_characteristic(2, 2, 2, &[&[0, 1]]);
    assert!(is_cocycle(&x, &phi, Theory::Quandle).unwrap());
    let mut lifted = 0;
    let mut blocked = 0;
    for rho in enumerate_colorings(&hopf, &x).unwrap() {
        let lifts = !lift_coloring(&hopf, &x, &rho, 2, &phi).unwrap().is_empty();
        assert_eq!(lifts, coloring_weight(&hopf, &rho, &phi) == 0, "{:?}", rho.arcs);
        if lifts {
            lifted += 1;
        } else {
            blocked += 1;
        }
    }
    // the two monochromatic colorings lift, the two mixed ones do not
    assert_eq!((lifted, blocked), (2, 2));
}

#[test]
fn lifts_project_to_the_coloring() {
    let x = make_dihedral(3).unwrap();
    let phi = Cochain::zero(3, 2, 3);
    for file in ["trefoil.pd", "4_1.pd"] {
        let d = pd(file);
        for rho in enumerate_colorings(&d, &x).unwrap() {
            for lift in lift_coloring(&d, &x, &rho, 3, &phi).unwrap() {
                let down = Coloring { arcs: lift.arcs.iter().map(|&e| e / 3).collect() };
                assert_eq!(down, rho);
            }
        }
    }
}

#[test]
fn cocycle_basis_extensions_are_quandles() {
    for spec in ["dihedral:3", "trivial:2", "alexander:2:1,0,1:0,1"] {
        let x = builtin(spec).unwrap();
        for p in [2u64, 3] {
            let c = quandle::homology::cohomology(&x, 2, Theory::Quandle, p).unwrap();
            for phi in c.cocycle_basis.unwrap() {
                assert!(abelian_extension(&x, p, &phi).unwrap().is_quandle(), "{spec} mod {p}");
            }
        }
    }
}
