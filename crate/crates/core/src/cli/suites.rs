use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::{Rng as _, SeedableRng};

use crate::classify::{
    donkin_g, donkin_g_inverse, enumerate_donkin, enumerate_pr, label_of_weight, lambda_pp, lambda_pp_small_rank,
    mullineux, r_splits, small_j, tau, weight_of_label, Partition,
};
use crate::error::Result;
use crate::hecke::HeckeElt;
use crate::qmatrix::{CoactionSign, Gen, QuantumMatrixAlgebra, Strategy, SuperMatrix};
use crate::scalars::{Cyclotomic, Ring};
use crate::schur::{
    brauer_kernel_dims, classical_schur_dimension, dual_basis_endos, even_schur_dimension, filtration_quotient_dims,
    levi_decomposition, norm_element, psi_endo, psi_norm_scalar, relative_norm, relative_norm_of_unit,
    supported_in, symmetry_sides, theorem_sign, Endo, SchurAlgebra,
};
use crate::superspace::{f_image, index_of, sign_hat, TensorSpace};
use crate::symcomb::{
    double_coset_reps, even_odd_blocks, has_trivial_mixed_intersections, min_coset_reps, Composition,
    LParabolicClass, Permutation, SuperComposition, YoungSubgroup,
};

use super::{ReportEntry, RunConfig, Suite};

type E = <Cyclotomic as Ring>::Elem;

fn ring(cfg: &RunConfig) -> Cyclotomic {
    Cyclotomic::new(cfg.l as u32)
}

fn entry(suite: &str, name: &str, anchor: &str, ok: bool, detail: impl Into<String>) -> ReportEntry {
    ReportEntry::new(format!("{suite}.{name}"), anchor, ok, detail)
}

fn count(ok: usize, total: usize) -> String {
    format!("{ok}/{total} instances")
}

/// Runs one suite (not `All`) at the configured parameters.
pub fn run_suite(cfg: &RunConfig, suite: Suite) -> Result<Vec<ReportEntry>> {
    match suite {
        Suite::Action => Ok(action(cfg)),
        Suite::Norms => norms(cfg),
        Suite::Basis => basis(cfg),
        Suite::Vanishing => vanishing(cfg),
        Suite::Psi => psi(cfg),
        Suite::Structure => structure(cfg),
        Suite::Filtration => filtration(cfg),
        Suite::Brauer => brauer(cfg),
        Suite::Qmatrix => qmatrix(cfg),
        Suite::Levi => levi(cfg),
        Suite::Classify => Ok(classify(cfg)),
        Suite::Bijections => bijections(cfg),
        Suite::All => super::cmd_verify(cfg, Suite::All).map(|r| r.entries),
    }
}

fn random_hecke(rng: &mut StdRng, ring: &Cyclotomic, r: usize) -> HeckeElt<E> {
    let perms = Permutation::all(r);
    let mut h = HeckeElt::zero(r);
    for _ in 0..3 {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let c = ring.from_int(rng.gen_range(-2..=2)) * ring.q_pow(rng.gen_range(-1..=1));
        h.add_term(w, c);
    }
    h
}

fn action(cfg: &RunConfig) -> Vec<ReportEntry> {
    let s = "action";
    let ring = ring(cfg);
    let space = TensorSpace::new(ring, cfg.m, cfg.n, cfg.r);
    let gens = space.generators();
    let id = Endo::identity(&ring, space.dim());
    let qq = ring.q_minus_q_inv();
    let quadratic = gens.iter().filter(|g| g.then(g) == g.scale(&qq).add(&id)).count();
    let mut braid = (0, 0);
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            braid.1 += 1;
            let holds = if b == a + 1 {
                gens[a].then(&gens[b]).then(&gens[a]) == gens[b].then(&gens[a]).then(&gens[b])
            } else {
                gens[a].commutes_with(&gens[b])
            };
            braid.0 += usize::from(holds);
        }
    }

    let (m, n) = (cfg.m, cfg.n);
    let mut intertwine = (0, 0);
    for row in 0..space.dim() {
        let i = space.multi_index(row);
        let fi = f_image(&ring, &i, m, n);
        for k in 0..gens.len() {
            intertwine.1 += 1;
            let mut lhs = HeckeElt::zero(cfg.r);
            for (j, c) in space.act_gen_basis(&i, k) {
                lhs = lhs.add(&f_image(&ring, &j, m, n).scale(&c));
            }
            intertwine.0 += usize::from(lhs == fi.mul_gen(&ring, k));
        }
    }

    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let samples = 8;
    let mut module = 0;
    let mut sampled = 0;
    for _ in 0..samples {
        let i = space.multi_index(rng.gen_range(0..space.dim()));
        let (a, b) = (random_hecke(&mut rng, &ring, cfg.r), random_hecke(&mut rng, &ring, cfg.r));
        let v = crate::superspace::TensorVector::basis(&ring, i.clone());
        module += usize::from(space.act(&space.act(&v, &a), &b) == space.act(&v, &a.mul(&ring, &b)));
        let mut lhs = HeckeElt::zero(cfg.r);
        for (j, c) in space.act(&v, &a).terms() {
            lhs = lhs.add(&f_image(&ring, j, m, n).scale(c));
        }
        sampled += usize::from(lhs == f_image(&ring, &i, m, n).mul(&ring, &a));
    }
    vec![
        entry(s, "quadratic", "quadratic relation of the Hecke generators", quadratic == gens.len(), count(quadratic, gens.len())),
        entry(s, "braid", "braid relations of the Hecke generators", braid.0 == braid.1, count(braid.0, braid.1)),
        entry(s, "f_intertwines_generators", "isomorphism onto signed q-permutation modules", intertwine.0 == intertwine.1, count(intertwine.0, intertwine.1)),
        entry(s, "right_module_sampled", "tensor superspace is a right Hecke module", module == samples, format!("{module}/{samples} seeded samples")),
        entry(s, "f_intertwines_sampled", "isomorphism onto signed q-permutation modules", sampled == samples, format!("{sampled}/{samples} seeded samples")),
    ]
}

fn random_endo(rng: &mut StdRng, ring: &Cyclotomic, dim: usize) -> Endo<E> {
    let mut b = Endo::zero(dim);
    for _ in 0..4 {
        let c = ring.from_int(rng.gen_range(1..=3)) * ring.q_pow(rng.gen_range(-1..=1));
        b.add_entry(rng.gen_range(0..dim), rng.gen_range(0..dim), c);
    }
    b
}

fn norms(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "norms";
    let ring = ring(cfg);
    let alg = SchurAlgebra::new(ring, cfg.m, cfg.n, cfg.r, cfg.l);
    let space = alg.space();
    let equivariant = alg.endos().iter().filter(|e| space.is_hecke_equivariant(e)).count();

    let mut sym = 0;
    for b in alg.basis() {
        let (left, right) = symmetry_sides(space, &b.lam, &b.mu, &b.d)?;
        sym += usize::from(left == right);
    }

    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let whole = Composition::new(vec![cfg.r]);
    let compositions: Vec<Composition> = Composition::all(cfg.r, cfg.r).into_iter().map(|c| c.nonzero()).collect();
    let mut nested = Vec::new();
    for lam in &compositions {
        for mu in &compositions {
            if lam.is_refinement_of(mu) {
                nested.push((lam.clone(), mu.clone()));
            }
        }
    }
    nested.sort_by(|a, b| (a.0.parts(), a.1.parts()).cmp(&(b.0.parts(), b.1.parts())));
    nested.dedup();
    let mut transitive = 0;
    for (lam, mu) in &nested {
        let b = random_endo(&mut rng, &ring, space.dim());
        let inner = relative_norm(space, &b, lam, mu)?;
        transitive += usize::from(relative_norm(space, &inner, mu, &whole)? == relative_norm(space, &b, lam, &whole)?);
    }

    let mut lifted = 0;
    for (lam, mu) in &nested {
        let e = random_endo(&mut rng, &ring, space.dim());
        let b = relative_norm(space, &e, &Composition::singletons(cfg.r), lam)?;
        let up = relative_norm(space, &b, lam, mu)?;
        lifted += usize::from(space.commutes_with_parabolic(&up, mu));
    }
    Ok(vec![
        entry(s, "basis_equivariant", "norm basis elements are Hecke-equivariant", equivariant == alg.len(), count(equivariant, alg.len())),
        entry(s, "symmetry", "symmetry of relative norms under inversion", sym == alg.len(), count(sym, alg.len())),
        entry(s, "transitivity_sampled", "transitivity of relative norms", transitive == nested.len(), format!("{transitive}/{} seeded samples", nested.len())),
        entry(s, "lifts_equivariance_sampled", "relative norms lift equivariance", lifted == nested.len(), format!("{lifted}/{} seeded samples", nested.len())),
    ])
}

fn basis(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "basis";
    let ring = ring(cfg);
    let alg = SchurAlgebra::new(ring, cfg.m, cfg.n, cfg.r, cfg.l);
    let matrices = SuperMatrix::enumerate(cfg.m, cfg.n, cfg.r).len();
    let rank = alg.span_rank();
    let mut unit = 0;
    for k in 0..alg.len() {
        let c = alg.expand(alg.endo(k))?;
        unit += usize::from(c.len() == 1 && c.get(&k) == Some(&ring.one()));
    }
    let identity = alg.identity_expansion()?;
    let diagonal: BTreeSet<usize> =
        (0..alg.len()).filter(|&k| alg.basis()[k].lam == alg.basis()[k].mu && alg.basis()[k].d.is_identity()).collect();
    let identity_ok = identity.keys().copied().collect::<BTreeSet<_>>() == diagonal && identity.values().all(|c| *c == ring.one());
    Ok(vec![
        entry(s, "dimension", "dimension of the q-Schur superalgebra", rank == matrices && alg.len() == matrices, format!("rank {rank}, |M(m|n,r)| = {matrices}")),
        entry(s, "expansion_unitriangular", "norm basis expansion is unique", unit == alg.len(), count(unit, alg.len())),
        entry(s, "identity_expansion", "weight projections sum to the identity", identity_ok, format!("{} diagonal units", diagonal.len())),
    ])
}

/// Parabolic subgroups `W_eta` contained in the product of the given Young subgroups.
fn parabolics_inside(r: usize, pieces: &[&YoungSubgroup]) -> Vec<Composition> {
    let classes: Vec<Vec<usize>> = pieces.iter().flat_map(|p| p.orbits().to_vec()).collect();
    let host = YoungSubgroup::from_classes(r, classes);
    Composition::all(r, r)
        .into_iter()
        .map(|c| c.nonzero())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|eta| YoungSubgroup::from_composition(eta).is_subgroup_of(&host))
        .collect()
}

fn vanishing(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "vanishing";
    let ring = ring(cfg);
    let space = TensorSpace::new(ring, cfg.m, cfg.n, cfg.r);
    let whole = Composition::new(vec![cfg.r]);
    let weights = SuperComposition::all(cfg.m, cfg.n, cfg.r);
    let id = Permutation::identity(cfg.r);

    let mut thm = (0, 0);
    for lam in &weights {
        for mu in &weights {
            for d in double_coset_reps(&lam.flat(), &mu.flat()) {
                if has_trivial_mixed_intersections(lam, &d, mu) {
                    continue;
                }
                let blocks = even_odd_blocks(lam, &d, mu, &id);
                let a = space.index(&index_of(mu));
                let b = space.index(&index_of(lam).permuted(&d));
                for eta in parabolics_inside(cfg.r, &[&blocks[0][0], &blocks[1][1]]) {
                    thm.1 += 1;
                    thm.0 += usize::from(relative_norm_of_unit(&space, a, b, &eta, &whole)?.is_zero());
                }
            }
        }
    }

    let mut cor = (0, 0);
    for lam in &weights {
        for mu in &weights {
            for y in min_coset_reps(&lam.flat()) {
                if has_trivial_mixed_intersections(lam, &y, mu) {
                    continue;
                }
                let blocks = even_odd_blocks(lam, &y, mu, &id);
                let a = space.index(&index_of(mu));
                let b = space.index(&index_of(lam).permuted(&y));
                for eta in parabolics_inside(cfg.r, &[&blocks[0][0], &blocks[1][1]]) {
                    cor.1 += 1;
                    cor.0 += usize::from(relative_norm_of_unit(&space, a, b, &eta, &whole)?.is_zero());
                }
            }
        }
    }

    let mut proj = 0;
    let mut total = Endo::zero(space.dim());
    for mu in &weights {
        let a = space.index(&index_of(mu));
        let n = relative_norm_of_unit(&space, a, a, &mu.flat(), &whole)?;
        let mut expected = Endo::zero(space.dim());
        for k in space.weight_component(mu) {
            expected.add_entry(k, k, ring.one());
        }
        proj += usize::from(n == expected);
        total = total.add(&n);
    }
    Ok(vec![
        entry(s, "non_super_double_cosets", "norms vanish off the super double cosets", thm.0 == thm.1, count(thm.0, thm.1)),
        entry(s, "mixed_intersections", "norms from the trivial subgroup vanish on mixed intersections", cor.0 == cor.1, count(cor.0, cor.1)),
        entry(s, "weight_projection", "diagonal norms are weight projections", proj == weights.len(), count(proj, weights.len())),
        entry(s, "projections_sum", "weight projections sum to the identity", total == Endo::identity(&ring, space.dim()), format!("{} weights", weights.len())),
    ])
}

fn psi(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "psi";
    let ring = ring(cfg);
    let alg = SchurAlgebra::new(ring, cfg.m, cfg.n, cfg.r, cfg.l);
    let space = alg.space();
    let qalg = QuantumMatrixAlgebra::new(ring, cfg.m, cfg.n);
    let duals = dual_basis_endos(space, &qalg, CoactionSign::ProofVariant);
    let stated = dual_basis_endos(space, &qalg, CoactionSign::Stated);
    let (mut scalar, mut dual, mut dual_stated, mut corollary) = (0, 0, 0, 0);
    for b in alg.basis() {
        let norm = norm_element(space, &b.lam, &b.mu, &b.d)?;
        let psi = psi_endo(space, &b.lam, &b.mu, &b.d)?;
        scalar += usize::from(norm == psi.scale(&psi_norm_scalar(&ring, &b.lam, &b.d)));
        let a = crate::qmatrix::matrix_of_triple(&b.lam, &b.mu, &b.d)?;
        let sign = theorem_sign(&b.lam, &b.mu, &b.d);
        dual += usize::from(norm == duals[&a].scale(&ring.signed_q_pow(sign, 0)));
        dual_stated += usize::from(norm == stated[&a].scale(&ring.signed_q_pow(sign, 0)));
        let c = ring.signed_q_pow(sign_hat(&b.lam, &b.d) + sign, b.d.length() as i64);
        corollary += usize::from(psi == duals[&a].scale(&c));
    }
    let n = alg.len();
    Ok(vec![
        entry(s, "norm_vs_psi", "norm basis versus the psi basis", scalar == n, count(scalar, n)),
        entry(
            s,
            "norm_vs_dual",
            "norm basis versus the dual basis of the quantum matrix superalgebra",
            dual == n,
            format!("{}; coaction sign with source parities {dual_stated}/{n}", count(dual, n)),
        ),
        entry(s, "psi_vs_dual", "psi basis versus the dual basis", corollary == n, count(corollary, n)),
    ])
}

fn structure(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "structure";
    let alg = SchurAlgebra::new(ring(cfg), cfg.m, cfg.n, cfg.r, cfg.l);
    let table = alg.multiplication_table()?;
    let basis = alg.basis();
    let mut defect = (0, 0);
    for (a, b, coeffs) in &table {
        for k in coeffs.keys() {
            defect.1 += 1;
            defect.0 += usize::from(basis[*k].defect <= basis[*a].defect && basis[*k].defect <= basis[*b].defect);
        }
    }
    let products: BTreeMap<(usize, usize), &BTreeMap<usize, E>> = table.iter().map(|(a, b, c)| ((*a, *b), c)).collect();
    let top = alg.top_class().0;
    let mut ideal = (0, 0);
    let mut chain = true;
    for k in 0..=top {
        let members = alg.ideal_basis(LParabolicClass(k));
        if k < top {
            let next: BTreeSet<usize> = alg.ideal_basis(LParabolicClass(k + 1)).into_iter().collect();
            chain &= members.iter().all(|x| next.contains(x));
        }
        for &y in &members {
            for x in 0..alg.len() {
                for key in [(x, y), (y, x)] {
                    if let Some(c) = products.get(&key) {
                        ideal.1 += 1;
                        ideal.0 += usize::from(supported_in(c, &members));
                    }
                }
            }
        }
    }
    let full = alg.ideal_basis(LParabolicClass(top)).len() == alg.len();
    Ok(vec![
        entry(s, "defect_condition", "defect condition on structure constants", defect.0 == defect.1, format!("{} nonzero coefficients over {} products", defect.1, table.len())),
        entry(s, "ideals", "defect ideals are two-sided", ideal.0 == ideal.1, count(ideal.0, ideal.1)),
        entry(s, "chain", "defect ideals form a chain ending in the algebra", chain && full, format!("{} ideals", top + 1)),
    ])
}

fn filtration(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "filtration";
    let mut out = Vec::new();
    for rbar in r_splits(cfg.r, cfg.l) {
        for k in rbar.1..=cfg.r / cfg.l {
            let a = filtration_quotient_dims(cfg.m, cfg.n, cfg.r, cfg.l, k, rbar, ring(cfg))?;
            let ok = a.quotient_dim == a.image_rank && a.image_rank == a.target_dim;
            out.push(entry(
                s,
                &format!("quotient_k{k}_rbar{}_{}", rbar.0, rbar.1),
                "filtration quotients through the Brauer homomorphism",
                ok,
                format!("quotient {}, image rank {}, target {}", a.quotient_dim, a.image_rank, a.target_dim),
            ));
        }
    }
    Ok(out)
}

fn brauer(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "brauer";
    let mut out = Vec::new();
    for rbar in r_splits(cfg.r, cfg.l) {
        let a = brauer_kernel_dims(cfg.m, cfg.n, cfg.r, cfg.l, rbar, ring(cfg))?;
        let tag = format!("rbar{}_{}", rbar.0, rbar.1);
        out.push(entry(
            s,
            &format!("{tag}.additivity"),
            "kernel of the Brauer homomorphism",
            a.ker_dim + a.image_dim == a.total && a.kernel_is_ideal,
            format!("ker {} + image {} = {}", a.ker_dim, a.image_dim, a.total),
        ));
        out.push(entry(
            s,
            &format!("{tag}.image_basis"),
            "image of the Frobenius morphism",
            a.image_dim == a.image_basis_len && a.image_matches_support,
            format!("image {}, basis {}", a.image_dim, a.image_basis_len),
        ));
        out.push(entry(
            s,
            &format!("{tag}.product_formula"),
            "dimension of the Brauer image",
            a.image_dim == a.formula_image_dim,
            format!("image {}, product formula {}", a.image_dim, a.formula_image_dim),
        ));
    }
    Ok(out)
}

fn all_words(s: usize, r: usize) -> Vec<Vec<Gen>> {
    let gens: Vec<Gen> = (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).collect();
    let mut words = vec![Vec::new()];
    for _ in 0..r {
        words = words
            .into_iter()
            .flat_map(|w: Vec<Gen>| gens.iter().map(move |g| [w.clone(), vec![*g]].concat()))
            .collect();
    }
    words
}

fn qmatrix(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "qmatrix";
    let ring = ring(cfg);
    let (m, n, l) = (cfg.m, cfg.n, cfg.l);
    let size = m + n;
    let qalg = QuantumMatrixAlgebra::new(ring, m, n);
    let words = all_words(size, cfg.r);
    let mut support = BTreeSet::new();
    let mut confluent = 0;
    for w in &words {
        let left = qalg.normal_form_with(w, Strategy::Leftmost);
        confluent += usize::from(left == qalg.normal_form_with(w, Strategy::Rightmost));
        support.extend(left.terms().map(|(a, _)| a.clone()));
    }
    let matrices: BTreeSet<SuperMatrix> = SuperMatrix::enumerate(m, n, cfg.r).into_iter().collect();
    let span_ok = support.is_subset(&matrices)
        && matrices.iter().all(|a| {
            let nf = qalg.normal_form(&a.word());
            nf.terms().count() == 1 && nf.coeff(a) == Some(&ring.one())
        });

    let same_parity: Vec<Gen> =
        (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).filter(|&(i, j)| (i < m) == (j < m)).collect();
    let mut central = 0;
    let mut comul = 0;
    for &(i, j) in &same_parity {
        central += usize::from(qalg.check_central_power(i, j, l)?);
        comul += usize::from(qalg.check_frobenius_comul(i, j, l)?);
    }
    let mut commutator = (0, 0);
    for &(i, j) in &same_parity {
        for k in i + 1..size {
            for jj in j + 1..size {
                for p in 1..=l {
                    commutator.1 += 1;
                    commutator.0 += usize::from(qalg.check_commutator_formula((i, j), (k, jj), p)?);
                }
            }
        }
    }

    let mut coalgebra = 0;
    for a in &matrices {
        let e = qalg.normal_form(&a.word());
        let (lhs, rhs) = qalg.coassociativity_sides(&e);
        let delta = qalg.comul(&e);
        coalgebra += usize::from(lhs == rhs && qalg.counit_left(&delta) == e && qalg.counit_right(&delta) == e);
    }
    let indices = all_words(size, cfg.r.min(2)).into_iter().map(|w| w.into_iter().map(|g| g.0).collect::<Vec<_>>()).collect::<BTreeSet<_>>();
    let comodule = indices.iter().filter(|i| qalg.check_comodule(i, CoactionSign::ProofVariant)).count();
    Ok(vec![
        entry(s, "normal_form_confluence", "straightening is independent of rewrite order", confluent == words.len(), count(confluent, words.len())),
        entry(s, "normal_form_basis", "monomial basis of the homogeneous component", span_ok, format!("{} monomials, |M(m|n,r)| = {}", support.len(), matrices.len())),
        entry(s, "central_powers", "l-th powers of even generators are central", central == same_parity.len(), count(central, same_parity.len())),
        entry(s, "frobenius_comultiplication", "comultiplication of l-th powers", comul == same_parity.len(), count(comul, same_parity.len())),
        entry(s, "commutator_formula", "commutators with powers of generators", commutator.0 == commutator.1, count(commutator.0, commutator.1)),
        entry(s, "bialgebra", "coassociativity and counit", coalgebra == matrices.len(), count(coalgebra, matrices.len())),
        entry(s, "comodule", "tensor superspace is a comodule", comodule == indices.len(), count(comodule, indices.len())),
    ])
}

fn levi(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "levi";
    let r0 = (cfg.r / cfg.l).max(1);
    let alg = SchurAlgebra::new(ring(cfg), cfg.m, cfg.n, r0 * cfg.l, cfg.l);
    let a = levi_decomposition(&alg, r0)?;
    let expected: Vec<usize> =
        (0..=r0).map(|i| classical_schur_dimension(cfg.m, i) * classical_schur_dimension(cfg.n, r0 - i)).collect();
    let sum: usize = a.blocks.iter().sum();
    Ok(vec![
        entry(s, "idempotents", "central idempotents of the top quotient", a.idempotents_sum_to_one && a.orthogonal_idempotents && a.no_cross_terms, format!("r0 = {r0}, {} idempotents", a.blocks.len())),
        entry(s, "block_dimensions", "top quotient is a product of classical Schur algebras", a.blocks == expected && sum == a.quotient_dim && sum == even_schur_dimension(cfg.m, cfg.n, r0), format!("blocks {:?}, quotient {}", a.blocks, a.quotient_dim)),
    ])
}

fn classify(cfg: &RunConfig) -> Vec<ReportEntry> {
    let s = "classify";
    let p = cfg.l;
    let limit = cfg.r.max(10);
    let mut bijective = true;
    let mut involution = true;
    for r in 0..=limit {
        let rp: Vec<Partition> = Partition::all(r).into_iter().filter(|x| x.is_restricted(p)).collect();
        let images: BTreeSet<Partition> = rp.iter().filter_map(|x| mullineux(x, p).ok()).collect();
        bijective &= images.len() == rp.len() && images.iter().all(|x| x.is_restricted(p) && x.size() == r);
        involution &= rp.iter().all(|x| mullineux(x, p).and_then(|y| mullineux(&y, p)).ok().as_ref() == Some(x));
    }
    let mut j_identity = (0, 0);
    for a in 0..=5 {
        for mu in Partition::all(a) {
            for b in 0..=2 {
                for nu in Partition::all(b) {
                    j_identity.1 += 1;
                    j_identity.0 += usize::from(small_j(&mu.plus_scaled(p, &nu), p) == small_j(&mu, p));
                }
            }
        }
    }
    let labels: Vec<_> = enumerate_pr(cfg.m, cfg.n, cfg.r, cfg.l).into_iter().flat_map(|(_, v)| v).collect();
    let images: BTreeSet<_> = labels.iter().map(|t| donkin_g(t, cfg.l)).collect();
    let round_trip = labels
        .iter()
        .all(|t| { let (a, b) = donkin_g(t, cfg.l); donkin_g_inverse(&a, &b, cfg.l, cfg.m, cfg.n).ok().as_ref() == Some(t) });
    let donkin_total =
        enumerate_donkin(cfg.r, cfg.l).into_iter().filter(|t| donkin_g_inverse(&t.0, &t.1, cfg.l, cfg.m, cfg.n).is_ok()).count();
    let mut out = vec![
        entry(s, "mullineux_bijection", "Mullineux map on restricted partitions", bijective, format!("p = {p}, r <= {limit}")),
        entry(s, "mullineux_involution", "Mullineux map on restricted partitions", involution, format!("p = {p}, r <= {limit}")),
        entry(s, "j_identity", "j is unchanged by adding p-multiples", j_identity.0 == j_identity.1, count(j_identity.0, j_identity.1)),
        entry(s, "donkin_round_trip", "Donkin's labelling", round_trip && images.len() == labels.len() && images.len() == donkin_total, format!("{} labels, {donkin_total} Donkin pairs", labels.len())),
    ];
    if cfg.r < cfg.l {
        let regular = Partition::all(cfg.r).into_iter().filter(|x| x.is_l_regular(cfg.l)).count();
        out.push(entry(s, "semisimple_count", "labels when r < l", regular == labels.len(), format!("{} labels, {regular} l-regular partitions", labels.len())));
    }
    if cfg.r <= cfg.m {
        let general: BTreeSet<_> = lambda_pp(cfg.m, cfg.n, cfg.r, p).into_iter().collect();
        let small: BTreeSet<_> = lambda_pp_small_rank(cfg.m, cfg.n, cfg.r, p).into_iter().collect();
        out.push(entry(s, "small_rank_weights", "restricted super weights for r <= m", general == small, format!("{} weights", general.len())));
    }
    out
}

fn bijections(cfg: &RunConfig) -> Result<Vec<ReportEntry>> {
    let s = "bijections";
    let (m, n, r, p) = (cfg.m, cfg.n, cfg.r, cfg.l);
    if r > m + n {
        return Ok(Vec::new());
    }
    let labels: Vec<_> = enumerate_pr(m, n, r, p).into_iter().flat_map(|(_, v)| v).collect();
    let mut images = BTreeSet::new();
    let mut inverse = 0;
    for t in &labels {
        let w = weight_of_label(t, m, n, p)?;
        inverse += usize::from(label_of_weight(&w, m, n, p).ok().as_ref() == Some(t));
        images.insert(w);
    }
    let target: BTreeSet<_> = lambda_pp(m, n, r, p).iter().map(tau).collect();
    Ok(vec![
        entry(s, "injective", "labels versus restricted super weights", images.len() == labels.len(), format!("{} labels, {} images", labels.len(), images.len())),
        entry(s, "onto_weights", "labels versus restricted super weights", images == target, format!("{} images, {} weights", images.len(), target.len())),
        entry(s, "inverse", "explicit inverse of the weight bijection", inverse == labels.len(), count(inverse, labels.len())),
    ])
}
