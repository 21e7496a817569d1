use super::{Composition, Permutation, SuperComposition, YoungSubgroup};
use crate::error::{Error, Result};

/// Whether `d` is the minimal-length element of its right coset `W_lambda d`.
///
/// This holds exactly when `d^-1` is increasing on every block of `lambda`,
/// i.e. the values of each block appear in increasing order in the one-line
/// form of `d`.
pub fn is_min_coset_rep(d: &Permutation, lambda: &Composition) -> bool {
    let dinv = d.inverse();
    lambda
        .blocks()
        .into_iter()
        .all(|b| b.clone().zip(b.skip(1)).all(|(a, c)| dinv.apply(a) < dinv.apply(c)))
}

/// The unique `d` in `D_lambda` with `i_lambda d = target`, where `target`
/// is a rearrangement of `lambda.labels()`. Positions carrying the same label
/// receive consecutive values of that block in increasing order.
pub fn coset_rep_for_labels(lambda: &Composition, target: &[usize]) -> Permutation {
    let mut next: Vec<usize> = lambda.blocks().into_iter().map(|b| b.start).collect();
    let images = target
        .iter()
        .map(|&c| {
            let v = next[c];
            next[c] += 1;
            v
        })
        .collect();
    Permutation::from_images(images)
}

fn arrangements(counts: &mut [usize], prefix: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for c in 0..counts.len() {
        if counts[c] > 0 {
            counts[c] -= 1;
            prefix.push(c);
            arrangements(counts, prefix, len, out);
            prefix.pop();
            counts[c] += 1;
        }
    }
}

/// `D_lambda`, the distinguished right coset representatives of `W_lambda` in `S_r`.
///
/// Representatives correspond to rearrangements of `i_lambda`; the result is
/// ordered by the lexicographic order of those rearrangements.
pub fn min_coset_reps(lambda: &Composition) -> Vec<Permutation> {
    let mut counts = lambda.parts().to_vec();
    let mut words = Vec::new();
    arrangements(&mut counts, &mut Vec::new(), lambda.weight(), &mut words);
    words.iter().map(|w| coset_rep_for_labels(lambda, w)).collect()
}

/// `D_lambda ∩ W_ambient`.
pub fn min_coset_reps_within(lambda: &Composition, ambient: &Composition) -> Result<Vec<Permutation>> {
    if !lambda.is_refinement_of(ambient) {
        return Err(Error::Containment(format!("W_{lambda} is not contained in W_{ambient}")));
    }
    Ok(min_coset_reps(lambda).into_iter().filter(|d| ambient.contains(d)).collect())
}

/// `D_{lambda mu} = D_lambda ∩ D_mu^-1`.
pub fn double_coset_reps(lambda: &Composition, mu: &Composition) -> Vec<Permutation> {
    min_coset_reps(lambda)
        .into_iter()
        .filter(|d| is_min_coset_rep(&d.inverse(), mu))
        .collect()
}

pub fn is_double_coset_rep(d: &Permutation, lambda: &Composition, mu: &Composition) -> bool {
    is_min_coset_rep(d, lambda) && is_min_coset_rep(&d.inverse(), mu)
}

/// The composition `nu = lambda d ∩ mu` with `W_nu = W_lambda^d ∩ W_mu`.
///
/// Block `i` of `mu` is split according to the values of `i_lambda d` on it,
/// giving `len(mu) * len(lambda)` parts (zeros included). Entry
/// `(i, c)` counts the positions of the `i`-th block of `mu` where
/// `i_lambda d` takes the value `c`.
pub fn intersect_composition(lambda: &Composition, d: &Permutation, mu: &Composition) -> Result<Composition> {
    if !is_double_coset_rep(d, lambda, mu) {
        return Err(Error::NotDoubleCosetRep(format!("{d} for ({lambda}, {mu})")));
    }
    let ild = d.act_on(&lambda.labels());
    let mut parts = Vec::with_capacity(mu.len() * lambda.len());
    for block in mu.blocks() {
        let mut counts = vec![0; lambda.len()];
        for k in block {
            counts[ild[k]] += 1;
        }
        parts.extend(counts);
    }
    Ok(Composition::new(parts))
}

/// The four subgroups `W^{ab} = W_{lambda^(a)}^d ∩ W_{mu^(b)}^{d'}` for `a, b` in `{0, 1}`,
/// indexed as `result[a][b]`. Their product is `Stab(i_lambda d, i_mu d')`.
pub fn even_odd_blocks(
    lambda: &SuperComposition,
    d: &Permutation,
    mu: &SuperComposition,
    d_prime: &Permutation,
) -> [[YoungSubgroup; 2]; 2] {
    let m = lambda.m();
    let r = d.degree();
    let first = d.act_on(&lambda.flat().labels());
    let second = d_prime.act_on(&mu.flat().labels());
    let parity = |c: usize| usize::from(c >= m);
    let stab = YoungSubgroup::stabilizer(r, &[&first, &second]);
    let piece = |a: usize, b: usize| {
        let classes = stab
            .orbits()
            .iter()
            .filter(|o| parity(first[o[0]]) == a && parity(second[o[0]]) == b)
            .cloned()
            .collect();
        YoungSubgroup::from_classes(r, classes)
    };
    [[piece(0, 0), piece(0, 1)], [piece(1, 0), piece(1, 1)]]
}

/// Whether `d` in `D_lambda` meets both mixed-parity intersections trivially.
pub fn has_trivial_mixed_intersections(lambda: &SuperComposition, d: &Permutation, mu: &SuperComposition) -> bool {
    let blocks = even_odd_blocks(lambda, d, mu, &Permutation::identity(d.degree()));
    blocks[0][1].is_trivial() && blocks[1][0].is_trivial()
}

/// `D°_{lambda mu}`: the elements of `D_{lambda mu}` with trivial mixed intersections.
pub fn super_double_cosets(lambda: &SuperComposition, mu: &SuperComposition) -> Vec<Permutation> {
    double_coset_reps(&lambda.flat(), &mu.flat())
        .into_iter()
        .filter(|d| has_trivial_mixed_intersections(lambda, d, mu))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min_reps(lambda: &Composition) -> Vec<Permutation> {
        let r = lambda.weight();
        let sub = lambda.subgroup_elements();
        let mut reps: Vec<Permutation> = Permutation::all(r)
            .into_iter()
            .map(|w| sub.iter().map(|u| u.compose(&w)).min_by_key(|x| (x.length(), x.clone())).unwrap())
            .collect();
        reps.sort();
        reps.dedup();
        reps
    }

    #[test]
    fn fast_path_matches_brute_force() {
        for r in 1..=5 {
            for n in 1..=3 {
                for lambda in Composition::all(n, r) {
                    let mut fast = min_coset_reps(&lambda);
                    fast.sort();
                    assert_eq!(fast, brute_min_reps(&lambda), "lambda = {lambda}");
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(min_coset_reps(&Composition::new(vec![3])), vec![Permutation::identity(3)]);
        assert_eq!(min_coset_reps(&Composition::singletons(3)).len(), 6);
        assert_eq!(min_coset_reps(&Composition::new(vec![2, 1])).len(), 3);
        let (a, b) = (Composition::new(vec![2, 1]), Composition::new(vec![1, 2]));
        assert_eq!(double_coset_reps(&a, &b).len(), 2);
        assert_eq!(double_coset_reps(&Composition::singletons(2), &Composition::singletons(2)).len(), 2);
    }

    #[test]
    fn intersection_rejects_non_reps() {
        let lam = Composition::new(vec![2, 1]);
        let bad = Permutation::from_images(vec![1, 0, 2]);
        assert!(intersect_composition(&lam, &bad, &lam).is_err());
    }

    #[test]
    fn super_double_cosets_with_trivial_parabolics() {
        let lam = SuperComposition::new(vec![1], vec![1]);
        assert_eq!(super_double_cosets(&lam, &lam).len(), 2);
        let total: usize = SuperComposition::all(1, 1, 2)
            .iter()
            .flat_map(|a| SuperComposition::all(1, 1, 2).into_iter().map(move |b| (a.clone(), b)))
            .map(|(a, b)| super_double_cosets(&a, &b).len())
            .sum();
        assert_eq!(total, 8);
    }
}
