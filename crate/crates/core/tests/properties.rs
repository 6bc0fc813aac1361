use std::collections::BTreeMap;

use proptest::prelude::*;

use lie_index_core::principal;
use lie_index_core::rational::{big, frac, int};
use lie_index_core::reps::{self, HighestWeight, SizeGuard};
use lie_index_core::{Rational, Root, RootSystem, SimpleType, Weight};

fn any_type() -> impl Strategy<Value = SimpleType> {
    proptest::sample::select(SimpleType::all_up_to(8))
}

fn small_type() -> impl Strategy<Value = SimpleType> {
    proptest::sample::select(SimpleType::all_up_to(4))
}

fn rationals(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-20i64..=20, 1i64..=6), n)
        .prop_map(|v| v.into_iter().map(|(p, q)| frac(p, q)).collect())
}

fn with_vectors(k: usize) -> impl Strategy<Value = (SimpleType, Vec<Vec<Rational>>)> {
    any_type().prop_flat_map(move |t| (Just(t), prop::collection::vec(rationals(t.rank()), k)))
}

fn small_dominant() -> impl Strategy<Value = (SimpleType, Vec<i64>)> {
    small_type().prop_flat_map(|t| (Just(t), prop::collection::vec(0i64..=2, t.rank())))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn form_is_symmetric_and_bilinear((t, v) in with_vectors(3), a in -5i64..=5, b in -5i64..=5) {
        let rs = RootSystem::new(t).unwrap();
        let f = rs.form();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(f.pairing(x, y).unwrap(), f.pairing(y, x).unwrap());
        let combo: Vec<Rational> = x.iter().zip(y).map(|(p, q)| int(a) * p + int(b) * q).collect();
        prop_assert_eq!(
            f.pairing(&combo, z).unwrap(),
            int(a) * f.pairing(x, z).unwrap() + int(b) * f.pairing(y, z).unwrap()
        );
    }

    #[test]
    fn form_is_positive_definite((t, v) in with_vectors(1)) {
        let rs = RootSystem::new(t).unwrap();
        let x = &v[0];
        let norm = rs.form().pairing(x, x).unwrap();
        if x.iter().all(|c| *c == int(0)) {
            prop_assert_eq!(norm, int(0));
        } else {
            prop_assert!(norm > int(0));
        }
    }

    #[test]
    fn root_weight_round_trip(t in any_type(), k in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(t).unwrap();
        let root = k.get(rs.positive_roots());
        let w = rs.root_to_weight(root);
        prop_assert_eq!(rs.weight_to_root(&w), Some(root.clone()));
        let neg = Root::new(root.coords().iter().map(|c| -c).collect());
        prop_assert_eq!(rs.weight_to_root(&rs.root_to_weight(&neg)), Some(neg));
    }

    #[test]
    fn rho_check_measures_height(t in any_type(), k in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(t).unwrap();
        let root = k.get(rs.positive_roots());
        let w = rs.root_to_weight(root);
        prop_assert_eq!(rs.pair_with_rho_check(&w), int(root.height()));
    }

    #[test]
    fn weight_space_gram_matches_root_space(t in any_type(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let rs = RootSystem::new(t).unwrap();
        let a = i.get(rs.positive_roots());
        let b = j.get(rs.positive_roots());
        prop_assert_eq!(
            rs.pair_weights(&rs.root_to_weight(a), &rs.root_to_weight(b)),
            rs.form().pairing_roots(a, b).unwrap()
        );
    }

    #[test]
    fn mass_equals_weyl_dimension((t, coords) in small_dominant()) {
        let rs = RootSystem::new(t).unwrap();
        let lambda = HighestWeight::new(&rs, coords).unwrap();
        prop_assume!(reps::weyl_dim(&rs, &lambda) <= 20_000.into());
        let ws = reps::freudenthal_multiplicities(&rs, &lambda, SizeGuard::DEFAULT).unwrap();
        let mass: u64 = ws.entries().iter().map(|e| e.multiplicity * e.orbit_size).sum();
        prop_assert_eq!(big(ws.dim().clone()), int(mass as i64));
        prop_assert_eq!(ws.dim(), &reps::weyl_dim(&rs, &lambda));
    }

    #[test]
    fn trace_form_matches_casimir_formula((t, coords) in small_dominant()) {
        let rs = RootSystem::new(t).unwrap();
        let lambda = HighestWeight::new(&rs, coords).unwrap();
        prop_assume!(reps::weyl_dim(&rs, &lambda) <= 20_000.into());
        let ws = reps::freudenthal_multiplicities(&rs, &lambda, SizeGuard::DEFAULT).unwrap();
        let value = reps::dynkin_index_rep(&rs, &lambda).unwrap();
        prop_assert_eq!(reps::dynkin_index_by_trace(&rs, ws.all_weights(&rs)), value.clone());
        prop_assert!(value.is_integer());
    }

    #[test]
    fn principal_index_of_module_matches_closed_form((t, coords) in small_dominant()) {
        let rs = RootSystem::new(t).unwrap();
        let lambda = HighestWeight::new(&rs, coords).unwrap();
        prop_assume!(reps::weyl_dim(&rs, &lambda) <= 20_000.into());
        let by_parts = principal::principal_index_rep(&rs, &lambda, SizeGuard::DEFAULT).unwrap();
        prop_assert_eq!(big(by_parts), principal::principal_index_rep_closed_form(&rs, &lambda));
    }

    #[test]
    fn multiplicities_are_weyl_invariant((t, coords) in small_dominant()) {
        let rs = RootSystem::new(t).unwrap();
        let lambda = HighestWeight::new(&rs, coords).unwrap();
        prop_assume!(reps::weyl_dim(&rs, &lambda) <= 20_000.into());
        let ws = reps::freudenthal_multiplicities(&rs, &lambda, SizeGuard::DEFAULT).unwrap();
        for entry in ws.entries() {
            for w in reps::weyl_orbit(&rs, &entry.weight) {
                prop_assert_eq!(ws.multiplicity(&rs, &w), entry.multiplicity);
            }
        }
    }
}

#[test]
fn dual_positive_roots_are_coroots() {
    for t in SimpleType::all_up_to(8) {
        let rs = RootSystem::new(t).unwrap();
        let dual = rs.dual_root_system().unwrap();
        // γ∨ = 2γ/(γ,γ), written in the simple coroots α_i∨ = 2α_i/(α_i,α_i).
        let mut coroots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|g| {
                let norm = rs.form().pairing_roots(g, g).unwrap();
                g.coords()
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        let x = int(c) * &rs.half_norms()[i] * int(2) / &norm;
                        assert!(x.is_integer(), "{t}: coroot coefficient {x}");
                        x.to_integer().try_into().unwrap()
                    })
                    .collect()
            })
            .collect();
        let mut dual_roots: Vec<Vec<i64>> = dual
            .positive_roots()
            .iter()
            .map(|g| g.coords().to_vec())
            .collect();
        coroots.sort();
        dual_roots.sort();
        assert_eq!(coroots, dual_roots, "{t}");
    }
}

#[test]
fn exponents_are_symmetric_and_fill_the_algebra() {
    for t in SimpleType::all_up_to(8) {
        let rs = RootSystem::new(t).unwrap();
        let m = rs.exponents();
        let h = rs.coxeter_number();
        for i in 0..m.len() {
            assert_eq!(m[i] + m[m.len() - 1 - i], h, "{t}");
        }
        assert_eq!(m.iter().map(|x| 2 * x + 1).sum::<i64>(), rs.dim(), "{t}");
        assert_eq!(m[0], 1, "{t}");
    }
}

#[test]
fn d4_and_e8_exponent_multiplicities() {
    let d4 = RootSystem::new("D4".parse().unwrap()).unwrap();
    assert_eq!(d4.exponents(), [1, 3, 3, 5]);
    let e8 = RootSystem::new("E8".parse().unwrap()).unwrap();
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &m in e8.exponents() {
        *counts.entry(m).or_default() += 1;
    }
    assert!(counts.values().all(|&c| c == 1));
    assert_eq!(counts.len(), 8);
}

#[test]
fn adjoint_principal_index_is_index_times_2h_star() {
    for t in SimpleType::all_up_to(8) {
        let rs = RootSystem::new(t).unwrap();
        let adjoint = HighestWeight::adjoint(&rs);
        let by_parts = principal::principal_index_rep(&rs, &adjoint, SizeGuard::DEFAULT).unwrap();
        let index = principal::principal_index(&rs).unwrap().closed_form;
        assert_eq!(
            big(by_parts),
            index * int(2 * rs.dual_coxeter_number()),
            "{t}"
        );
    }
}

#[test]
fn fundamental_indices_are_integers_through_rank_6() {
    for t in SimpleType::all_up_to(6) {
        let rs = RootSystem::new(t).unwrap();
        for i in 0..rs.rank() {
            let lambda = HighestWeight::fundamental(&rs, i);
            let value = reps::dynkin_index_value(&rs, &lambda);
            assert!(value.is_integer(), "{t} ω{}: {value}", i + 1);
        }
    }
}

#[test]
fn zero_weight_is_dominant_and_trivial() {
    let rs = RootSystem::new("F4".parse().unwrap()).unwrap();
    let triv = HighestWeight::new(&rs, vec![0; 4]).unwrap();
    assert!(Weight::zero(4).is_dominant());
    assert_eq!(reps::weyl_dim(&rs, &triv), 1.into());
    assert_eq!(reps::dynkin_index_rep(&rs, &triv).unwrap(), int(0));
}
