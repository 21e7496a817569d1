//! Brute-force oracles for the dimension and counting identities.

use qschur::classify::{enumerate_pr, lambda_pp, mullineux, Partition};
use qschur::qmatrix::{matrix_of_triple, SuperMatrix};
use qschur::scalars::{Cyclotomic, Ring};
use qschur::schur::linalg::{Echelon, SparseVec};
use qschur::schur::{schur_dimension, Endo, NormBasisElt};
use qschur::superspace::TensorSpace;
use qschur::symcomb::{double_coset_reps, Permutation, SuperComposition};

/// Dimension of the commutant of the Hecke generators, by solving
/// `E G_k = G_k E` over all entries of `E`.
fn commutant_dimension(m: usize, n: usize, r: usize) -> usize {
    let ring = Cyclotomic::new(3);
    let space = TensorSpace::new(ring, m, n, r);
    let dim = space.dim();
    let mut ech = Echelon::new();
    for a in 0..dim {
        for b in 0..dim {
            let unit = Endo::elementary(&ring, dim, a, b);
            let mut image: SparseVec<_> = SparseVec::new();
            for (k, g) in space.generators().iter().enumerate() {
                let c = unit.then(g).sub(&g.then(&unit));
                for (i, j, x) in c.entries() {
                    image.insert(k * dim * dim + i * dim + j, x.clone());
                }
            }
            ech.insert(&image);
        }
    }
    dim * dim - ech.rank()
}

#[test]
fn commutant_matches_matrix_count() {
    for (m, n, r, frozen) in [(1, 1, 2, 8), (1, 1, 3, 12), (2, 1, 2, 41)] {
        let brute = commutant_dimension(m, n, r);
        assert_eq!(brute, frozen);
        assert_eq!(SuperMatrix::enumerate(m, n, r).len(), frozen);
        assert_eq!(schur_dimension(m, n, r), frozen);
    }
}

#[test]
fn basis_triples_biject_onto_matrices() {
    for (m, n, r) in [(1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 2, 2)] {
        let mut seen = std::collections::BTreeSet::new();
        for b in NormBasisElt::all(m, n, r, 3) {
            let a = matrix_of_triple(&b.lam, &b.mu, &b.d).unwrap();
            assert!(a.is_super());
            assert!(seen.insert(a));
        }
        assert_eq!(seen.len(), SuperMatrix::enumerate(m, n, r).len());
    }
}

#[test]
fn double_cosets_by_brute_force() {
    for (lam, mu) in [(vec![2, 1], vec![1, 2]), (vec![2, 2], vec![3, 1]), (vec![1, 1, 2], vec![2, 2])] {
        let (lam, mu) = (SuperComposition::new(lam, vec![]), SuperComposition::new(mu, vec![]));
        let r = lam.weight();
        let (lf, mf) = (lam.flat(), mu.flat());
        let mut classes = std::collections::BTreeSet::new();
        let (ls, ms) = (lf.subgroup_elements(), mf.subgroup_elements());
        for w in Permutation::all(r) {
            let class: std::collections::BTreeSet<Permutation> = ls
                .iter()
                .flat_map(|x| ms.iter().map(|y| x.compose(&w).compose(y)))
                .collect();
            classes.insert(class);
        }
        assert_eq!(double_coset_reps(&lf, &mf).len(), classes.len());
    }
}

#[test]
fn generator_relations_hold_exactly() {
    let ring = Cyclotomic::new(5);
    let space = TensorSpace::new(ring, 2, 1, 3);
    let id = Endo::identity(&ring, space.dim());
    let g = space.generators();
    for x in g {
        assert_eq!(x.then(x), x.scale(&ring.q_minus_q_inv()).add(&id));
    }
    assert_eq!(g[0].then(&g[1]).then(&g[0]), g[1].then(&g[0]).then(&g[1]));
}

#[test]
fn label_counts_are_frozen() {
    let total = |m, n, r| enumerate_pr(m, n, r, 3).iter().map(|(_, v)| v.len()).sum::<usize>();
    assert_eq!(total(2, 1, 3), 4);
    assert_eq!(total(1, 1, 2), 2);
    assert_eq!(total(2, 2, 3), lambda_pp(2, 2, 3, 3).len());
}

/// Tensoring with the sign representation of `S_r` in characteristic 3:
/// for `r <= 4` the trivial and sign modules swap, as do the two
/// 3-dimensional simples of `S_4`.
#[test]
fn mullineux_matches_sign_twist() {
    let p = |v: &[usize]| Partition::new(v.to_vec());
    let pairs = [
        (p(&[1]), p(&[1])),
        (p(&[2]), p(&[1, 1])),
        (p(&[2, 1]), p(&[1, 1, 1])),
        (p(&[2, 2]), p(&[1, 1, 1, 1])),
        (p(&[3, 1]), p(&[2, 1, 1])),
    ];
    for (a, b) in pairs {
        assert_eq!(mullineux(&a, 3).unwrap(), b);
        assert_eq!(mullineux(&b, 3).unwrap(), a);
    }
    assert_eq!(mullineux(&p(&[3, 1, 1]), 3).unwrap(), p(&[3, 1, 1]));
}
