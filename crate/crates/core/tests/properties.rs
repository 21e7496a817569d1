use proptest::prelude::*;

use qschur::classify::{donkin_g, donkin_g_inverse, mullineux, restricted_decompose, small_j, IndexTriple, Partition};
use qschur::cli::{run, Command, RunConfig, Suite};
use qschur::hecke::HeckeElt;
use qschur::qmatrix::{QuantumMatrixAlgebra, Strategy as Rewrite};
use qschur::scalars::{specialize, Cyclotomic, Generic, LaurentPoly};
use qschur::superspace::{MultiIndex, TensorSpace, TensorVector};
use qschur::symcomb::Permutation;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..4, -3i64..4), 0..4).prop_map(LaurentPoly::from_terms)
}

fn perm(r: usize) -> impl Strategy<Value = Permutation> {
    Just((0..r).collect::<Vec<usize>>()).prop_shuffle().prop_map(Permutation::from_images)
}

fn hecke(r: usize) -> impl Strategy<Value = HeckeElt<LaurentPoly>> {
    prop::collection::vec((perm(r), laurent()), 1..3).prop_map(move |terms| {
        let mut h = HeckeElt::zero(r);
        for (w, c) in terms {
            h.add_term(w, c);
        }
        h
    })
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn specialization_is_multiplicative(a in laurent(), b in laurent(), l in prop::sample::select(vec![3u32, 5, 7])) {
        prop_assert_eq!(specialize(&(a.clone() * &b), l), specialize(&a, l) * specialize(&b, l));
        prop_assert_eq!(specialize(&(a.clone() + &b), l), specialize(&a, l) + specialize(&b, l));
    }

    #[test]
    fn length_changes_by_one(w in perm(5), k in 0usize..4) {
        let ws = w.times_simple(k);
        prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
        prop_assert_eq!(ws.length() > w.length(), w.lengthens_right(k));
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(Permutation::from_word(5, &w.reduced_word()), w);
    }

    #[test]
    fn hecke_multiplication_is_associative(a in hecke(4), b in hecke(4), c in hecke(4)) {
        let ring = Generic;
        prop_assert_eq!(a.mul(&ring, &b).mul(&ring, &c), a.mul(&ring, &b.mul(&ring, &c)));
    }

    #[test]
    fn tensor_space_is_a_right_module(a in hecke(3), b in hecke(3), i in prop::collection::vec(0usize..2, 3)) {
        let ring = Generic;
        let space = TensorSpace::new(ring, 1, 1, 3);
        let v = TensorVector::basis(&ring, MultiIndex(i));
        prop_assert_eq!(space.act(&space.act(&v, &a), &b), space.act(&v, &a.mul(&ring, &b)));
    }

    #[test]
    fn normal_form_is_confluent(word in prop::collection::vec((0usize..3, 0usize..3), 0..6)) {
        let alg = QuantumMatrixAlgebra::new(Cyclotomic::new(3), 2, 1);
        prop_assert_eq!(alg.normal_form_with(&word, Rewrite::Leftmost), alg.normal_form_with(&word, Rewrite::Rightmost));
    }

    #[test]
    fn comultiplication_is_coassociative(word in prop::collection::vec((0usize..3, 0usize..3), 1..4)) {
        let alg = QuantumMatrixAlgebra::new(Cyclotomic::new(3), 2, 1);
        let e = alg.normal_form(&word);
        let (left, right) = alg.coassociativity_sides(&e);
        prop_assert_eq!(left, right);
        let delta = alg.comul(&e);
        prop_assert_eq!(alg.counit_left(&delta), e.clone());
        prop_assert_eq!(alg.counit_right(&delta), e);
    }

    #[test]
    fn multiplication_respects_products(a in prop::collection::vec((0usize..3, 0usize..3), 0..3), b in prop::collection::vec((0usize..3, 0usize..3), 0..3)) {
        let alg = QuantumMatrixAlgebra::new(Cyclotomic::new(5), 2, 1);
        let joined: Vec<_> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(alg.mul(&alg.normal_form(&a), &alg.normal_form(&b)), alg.normal_form(&joined));
    }

    #[test]
    fn restricted_decomposition_reconstructs(lam in partition(6, 9), p in prop::sample::select(vec![3usize, 5])) {
        let (zero, one) = restricted_decompose(&lam, p);
        prop_assert!(zero.is_restricted(p));
        prop_assert_eq!(zero.plus_scaled(p, &one), lam);
    }

    #[test]
    fn conjugation_is_an_involution(lam in partition(6, 6)) {
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn mullineux_preserves_size_and_restrictedness(lam in partition(5, 4)) {
        prop_assume!(lam.is_restricted(3));
        let image = mullineux(&lam, 3).unwrap();
        prop_assert!(image.is_restricted(3));
        prop_assert_eq!(image.size(), lam.size());
        prop_assert_eq!(mullineux(&image, 3).unwrap(), lam);
    }

    #[test]
    fn j_ignores_p_multiples(mu in partition(4, 4), nu in partition(3, 2)) {
        prop_assert_eq!(small_j(&mu.plus_scaled(3, &nu), 3), small_j(&mu, 3));
    }

    #[test]
    fn donkin_round_trip(lam in partition(4, 4), xi in partition(2, 2), eta in partition(2, 2)) {
        prop_assume!(lam.is_l_regular(3));
        let t = IndexTriple::new(lam, xi, eta);
        let (tau, nu) = donkin_g(&t, 3);
        prop_assert_eq!(tau.size() + 3 * nu.size(), t.weight(3));
        prop_assert_eq!(donkin_g_inverse(&tau, &nu, 3, 2, 2).unwrap(), t);
    }
}

#[test]
fn reports_are_stable_for_a_seed() {
    let mut cfg = RunConfig::new(1, 1, 3, 3, Command::Verify(Suite::All));
    cfg.seed = 7;
    let first = run(&cfg).unwrap().to_json();
    let second = run(&cfg).unwrap().to_json();
    assert_eq!(first, second);
    let checks: Vec<&str> = first.as_array().unwrap().iter().map(|e| e["check"].as_str().unwrap()).collect();
    let mut sorted = checks.clone();
    sorted.sort_unstable();
    assert_eq!(checks, sorted);
    for e in first.as_array().unwrap() {
        assert!(matches!(e["status"].as_str(), Some("pass") | Some("fail")));
        assert!(!e["anchor"].as_str().unwrap().is_empty());
    }
}

#[test]
fn guard_rejects_large_spaces() {
    let mut cfg = RunConfig::new(2, 2, 11, 3, Command::Verify(Suite::Basis));
    assert!(cfg.validate().is_err());
    cfg.force = true;
    assert!(cfg.validate().is_ok());
    assert!(RunConfig::new(1, 1, 2, 4, Command::Dim).validate().is_err());
}
