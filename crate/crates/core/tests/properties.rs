use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use rieszkit::functional::{classify, is_full_codim1, kernel_subspace, max_disjoint_nonvanishing};
use rieszkit::generator::{random_functional, random_pl, random_subspace, random_sublattice, Seed};
use rieszkit::ideal::{
    codim1_ideal_decomposition, codim1_ideals_containing, ideal_at, ideal_chain, is_ideal,
    largest_ideal_in, quotient_by_ideal,
};
use rieszkit::lattice::{e_norm, ENorm, FiniteVectorLattice, LatticeVector};
use rieszkit::oracle;
use rieszkit::pl::{pl_e_norm, residue_in_ideal, PLFunction};
use rieszkit::ratlinalg::{interpolation_equivalence, pre_annihilator, Subspace};
use rieszkit::rational::{int, Rational};
use rieszkit::sublattice::{
    clan_decomposition, factor_into_codim1, is_sublattice, sublattice_closure,
};
use rieszkit::Labels;

/// Seed-stream helper: yields successive random subspaces of ℚ^n, n ≤ max_n.
fn subspaces(seed: u64, count: usize, max_n: i64) -> Vec<Subspace> {
    let mut state = Seed::new(seed);
    (0..count)
        .map(|_| {
            let (n, s) = state.range(1, max_n);
            let (d, s) = s.range(0, n);
            let (y, s) = random_subspace(s, n as usize, d as usize).unwrap();
            state = s;
            y
        })
        .collect()
}

fn sublattices(seed: u64, count: usize, max_n: i64) -> Vec<Subspace> {
    let mut state = Seed::new(seed);
    (0..count)
        .map(|_| {
            let (n, s) = state.range(1, max_n);
            let (y, s) = random_sublattice(s, n as usize).unwrap();
            state = s;
            y
        })
        .collect()
}

fn random_vector(state: &mut Seed, lattice: &FiniteVectorLattice) -> LatticeVector {
    let coords = (0..lattice.dim())
        .map(|_| {
            let (v, s) = state.range(-3, 3);
            *state = s;
            int(v)
        })
        .collect();
    lattice.vector(coords).unwrap()
}

#[test]
fn duality_round_trips() {
    for y in subspaces(101, 1000, 6) {
        let ann = y.annihilator();
        assert_eq!(y.dim() + ann.dim(), y.ambient_dim());
        assert_eq!(ann.annihilator(), y);
        assert_eq!(pre_annihilator(y.labels(), ann.basis()).unwrap(), y);
    }
}

#[test]
fn dimension_formula() {
    let ys = subspaces(202, 600, 6);
    for pair in ys.chunks(2) {
        let (y, z) = (&pair[0], &pair[1]);
        // Re-embed z into y's ambient space when the sizes differ.
        let n = y.ambient_dim();
        let rows: Vec<Vec<Rational>> = z
            .basis()
            .iter()
            .map(|r| r.iter().cloned().cycle().take(n).collect())
            .collect();
        let z = Subspace::span(y.labels(), &rows).unwrap();
        let meet = y.intersect(&z).unwrap();
        let join = y.sum(&z).unwrap();
        assert_eq!(y.dim() + z.dim(), meet.dim() + join.dim());
        assert!(y.contains(&meet).unwrap() && z.contains(&meet).unwrap());
        assert!(join.contains(y).unwrap() && join.contains(&z).unwrap());
    }
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=5).prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=5)))
}

proptest! {
    #[test]
    fn canonical_form_ignores_order_and_is_idempotent((n, rows) in small_matrix(), rotate in 0usize..5) {
        let labels = Labels::numbered(n).unwrap();
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        let y = Subspace::span(&labels, &rows).unwrap();
        let mut shuffled = rows.clone();
        if !shuffled.is_empty() {
            let k = rotate % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
        }
        prop_assert_eq!(&Subspace::span(&labels, &shuffled).unwrap(), &y);
        prop_assert_eq!(&Subspace::span(&labels, y.basis()).unwrap(), &y);
        for r in &rows {
            prop_assert!(y.member(r).unwrap());
        }
    }

    #[test]
    fn join_meet_laws(n in 1usize..=5, seed in any::<u64>()) {
        let lattice = FiniteVectorLattice::new(Labels::numbered(n).unwrap());
        let mut s = Seed::new(seed);
        let x = random_vector(&mut s, &lattice);
        let y = random_vector(&mut s, &lattice);
        let z = random_vector(&mut s, &lattice);
        prop_assert_eq!(x.join(&y).unwrap(), y.join(&x).unwrap());
        prop_assert_eq!(x.meet(&y).unwrap(), y.meet(&x).unwrap());
        prop_assert_eq!(x.join(&y).unwrap().join(&z).unwrap(), x.join(&y.join(&z).unwrap()).unwrap());
        prop_assert_eq!(x.meet(&y).unwrap().meet(&z).unwrap(), x.meet(&y.meet(&z).unwrap()).unwrap());
        prop_assert_eq!(x.meet(&x.join(&y).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(x.join(&x.meet(&y).unwrap()).unwrap(), x.clone());
        prop_assert_eq!(
            x.meet(&y.join(&z).unwrap()).unwrap(),
            x.meet(&y).unwrap().join(&x.meet(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.join(&y).unwrap().add(&x.meet(&y).unwrap()).unwrap(), x.add(&y).unwrap());
    }
}

#[test]
fn lattice_axioms_on_seeded_triples() {
    let mut s = Seed::new(303);
    for _ in 0..500 {
        let (n, next) = s.range(1, 6);
        s = next;
        let lattice = FiniteVectorLattice::new(Labels::numbered(n as usize).unwrap());
        let x = random_vector(&mut s, &lattice);
        let y = random_vector(&mut s, &lattice);
        let z = random_vector(&mut s, &lattice);
        assert_eq!(x.join(&y).unwrap(), y.join(&x).unwrap());
        assert_eq!(x.join(&y).unwrap().join(&z).unwrap(), x.join(&y.join(&z).unwrap()).unwrap());
        assert_eq!(x.meet(&x.join(&y).unwrap()).unwrap(), x);
        assert_eq!(
            x.join(&y.meet(&z).unwrap()).unwrap(),
            x.join(&y).unwrap().meet(&x.join(&z).unwrap()).unwrap()
        );
        assert_eq!(x.pos_part().sub(&x.neg_part()).unwrap(), x);
        assert_eq!(x.abs(), x.join(&x.neg()).unwrap());
    }
}

#[test]
fn e_norm_is_a_lattice_norm() {
    let mut s = Seed::new(404);
    for _ in 0..500 {
        let (n, next) = s.range(1, 6);
        s = next;
        let lattice = FiniteVectorLattice::new(Labels::numbered(n as usize).unwrap());
        let e = random_vector(&mut s, &lattice).abs();
        // Restrict x, y to the support of e so both lie in I_e.
        let support: Vec<&str> = e.support().into_iter().map(|i| lattice.labels().name(i)).collect();
        let x = random_vector(&mut s, &lattice).project(&support).unwrap();
        let y = random_vector(&mut s, &lattice).project(&support).unwrap();
        let nx = e_norm(&x, &e).unwrap();
        let ny = e_norm(&y, &e).unwrap();
        let nxy = e_norm(&x.add(&y).unwrap(), &e).unwrap();
        let (ENorm::Finite(a), ENorm::Finite(b), ENorm::Finite(c)) = (&nx, &ny, &nxy) else {
            panic!("vectors supported inside supp e have finite norm");
        };
        assert_eq!(a.is_zero(), x.is_zero());
        assert!(c <= &(a + b));
        assert!(x.abs().le(&e.scale(a)).unwrap());
        if x.abs().le(&y.abs()).unwrap() {
            assert!(a <= b);
        }
        let outside = lattice.ones().sub(&lattice.ones().project(&support).unwrap()).unwrap();
        if !outside.is_zero() {
            assert_eq!(e_norm(&outside, &e).unwrap(), ENorm::Infinite);
        }
    }
}

#[test]
fn closure_is_a_closure_operator() {
    for y in subspaces(505, 300, 6) {
        let c = sublattice_closure(&y).unwrap();
        assert!(c.contains(&y).unwrap());
        assert_eq!(sublattice_closure(&c).unwrap(), c);
        assert!(is_sublattice(&c).unwrap());
        // Monotone along y ⊆ y + span(e_1).
        let mut e1 = vec![Rational::zero(); y.ambient_dim()];
        e1[0] = int(1);
        let bigger = y.sum(&Subspace::span(y.labels(), &[e1]).unwrap()).unwrap();
        assert!(sublattice_closure(&bigger).unwrap().contains(&c).unwrap());
    }
}

#[test]
fn oracle_is_a_fixed_point() {
    for y in subspaces(606, 200, 5) {
        let g = oracle::generated_by_rows(y.labels(), y.basis()).unwrap();
        assert!(g.contains(&y).unwrap());
        assert_eq!(oracle::generated_by_rows(g.labels(), g.basis()).unwrap(), g);
        assert_eq!(oracle::oracle_is_sublattice(&y).unwrap(), is_sublattice(&y).unwrap());
    }
}

#[test]
fn intersections_of_sublattices_are_sublattices() {
    let mut s = Seed::new(707);
    for _ in 0..300 {
        let (n, next) = s.range(1, 6);
        let (a, next) = random_sublattice(next, n as usize).unwrap();
        let (b, next) = random_sublattice(next, n as usize).unwrap();
        s = next;
        assert!(is_sublattice(&a.intersect(&b).unwrap()).unwrap());
    }
}

#[test]
fn factors_are_sublattice_hyperplanes() {
    for y in sublattices(808, 300, 6) {
        let factors = factor_into_codim1(&y).unwrap();
        assert_eq!(factors.len(), y.codimension());
        let mut meet = Subspace::full(y.labels());
        for c in &factors {
            let k = c.kernel(y.labels());
            assert_eq!(k.codimension(), 1);
            assert!(is_sublattice(&k).unwrap());
            meet = meet.intersect(&k).unwrap();
        }
        assert_eq!(meet, y);
    }
}

#[test]
fn largest_ideal_is_maximal() {
    for y in sublattices(909, 300, 7) {
        let j = largest_ideal_in(&y).unwrap();
        assert!(y.contains(&j.subspace).unwrap());
        assert!(j.codimension() <= 2 * y.codimension());
        // Every unit vector outside J falls outside Y.
        for &i in &j.zero_set {
            let mut e = vec![Rational::zero(); y.ambient_dim()];
            e[i] = int(1);
            assert!(!y.member(&e).unwrap());
        }
    }
}

#[test]
fn quotient_map_is_a_lattice_homomorphism() {
    let mut s = Seed::new(1010);
    for _ in 0..300 {
        let (n, next) = s.range(1, 6);
        let (mask, next) = next.next_u64();
        s = next;
        let labels = Labels::numbered(n as usize).unwrap();
        let zero_set: Vec<usize> = (0..n as usize).filter(|i| mask >> i & 1 == 1).collect();
        let j = ideal_at(&labels, &zero_set);
        let Ok(q) = quotient_by_ideal(&j) else {
            assert!(zero_set.is_empty());
            continue;
        };
        assert_eq!(q.kernel(), j.subspace);
        let lattice = FiniteVectorLattice::new(labels);
        let x = random_vector(&mut s, &lattice);
        let y = random_vector(&mut s, &lattice);
        let (qx, qy) = (q.apply(&x).unwrap(), q.apply(&y).unwrap());
        assert_eq!(q.apply(&x.join(&y).unwrap()).unwrap(), qx.join(&qy).unwrap());
        assert_eq!(q.apply(&x.meet(&y).unwrap()).unwrap(), qx.meet(&qy).unwrap());
    }
}

#[test]
fn every_ideal_is_an_intersection_of_exactly_codim_hyperplanes() {
    for n in 1..=4usize {
        let labels = Labels::numbered(n).unwrap();
        for mask in 0u32..(1 << n) {
            let zero_set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let j = ideal_at(&labels, &zero_set);
            assert_eq!(is_ideal(&j.subspace).unwrap().as_ref(), Some(&j));
            assert!(is_sublattice(&j.subspace).unwrap());
            let containing = codim1_ideals_containing(&j);
            assert_eq!(containing, codim1_ideal_decomposition(&j));
            assert_eq!(containing.len(), j.codimension());
            let chain = ideal_chain(&j);
            assert_eq!(chain.len(), j.codimension() + 1);
            for w in chain.windows(2) {
                assert!(w[1].subspace.contains(&w[0].subspace).unwrap());
                assert_eq!(w[0].codimension(), w[1].codimension() + 1);
            }
        }
    }
}

#[test]
fn ideals_have_singleton_clans() {
    for y in subspaces(1111, 400, 5) {
        if is_ideal(&y).unwrap().is_some() {
            assert!(is_sublattice(&y).unwrap());
            assert!(clan_decomposition(&y, true).unwrap().clans.iter().all(|c| c.len() == 1));
        }
    }
}

#[test]
fn kernel_correspondences_on_random_functionals() {
    let mut s = Seed::new(1212);
    for _ in 0..1000 {
        let (n, next) = s.range(1, 6);
        let (phi, next) = random_functional(next, n as usize).unwrap();
        s = next;
        let c = classify(&phi);
        let (kernel, degenerate) = kernel_subspace(&phi);
        assert_eq!(is_sublattice(&kernel).unwrap(), c.is_diff_of_two_homomorphisms, "{phi:?}");
        if max_disjoint_nonvanishing(&phi) >= 3 {
            assert!(!is_sublattice(&kernel).unwrap());
        }
        if !degenerate {
            let (full, witness) = is_full_codim1(&phi).unwrap();
            assert_eq!(full, c.is_positive || c.is_negative);
            if let Some(w) = witness {
                assert!(w.verify(&phi).unwrap());
            }
        }
    }
}

#[test]
fn interpolation_components_agree() {
    let mut s = Seed::new(1313);
    for _ in 0..300 {
        let (n, next) = s.range(1, 5);
        let (d, next) = next.range(0, n);
        let (f, next) = random_subspace(next, n as usize, d as usize).unwrap();
        let (k, next) = next.range(0, 4);
        let (order, mut next) = next.range(1, 3);
        let mut a = Vec::new();
        for _ in 0..k {
            let (phi, nx) = random_functional(next, n as usize).unwrap();
            next = nx;
            a.push(phi.coeffs().to_vec());
        }
        let (x, nx) = random_functional(next, n as usize).unwrap();
        s = nx;
        let (h, g) = interpolation_equivalence(&f, &a, order as usize, x.coeffs()).unwrap();
        assert_eq!(h, g);
    }
}

fn random_pls(seed: u64, count: usize) -> Vec<PLFunction> {
    let mut s = Seed::new(seed);
    (0..count)
        .map(|_| {
            let (k, next) = s.range(0, 4);
            let (f, next) = random_pl(next, k as usize).unwrap();
            s = next;
            f
        })
        .collect()
}

#[test]
fn pl_lattice_axioms() {
    let fs = random_pls(1414, 1500);
    for t in fs.chunks(3) {
        let (f, g, h) = (&t[0], &t[1], &t[2]);
        assert_eq!(f.join(g), g.join(f));
        assert_eq!(f.meet(g), g.meet(f));
        assert_eq!(f.join(g).join(h), f.join(&g.join(h)));
        assert_eq!(f.meet(g).meet(h), f.meet(&g.meet(h)));
        assert_eq!(f.meet(&f.join(g)), *f);
        assert_eq!(f.join(f), *f);
        assert!(f.le(&f.join(g)) && f.meet(g).le(f));
        assert_eq!(f.join(g).add(&f.meet(g)), f.add(g));
        assert_eq!(f.pos_part().sub(&f.neg_part()), *f);
        // Pointwise check of the join at breakpoints of both and at the midpoints.
        let j = f.join(g);
        for x in f.breakpoints().iter().chain(g.breakpoints()) {
            assert_eq!(j.eval(x).unwrap(), f.eval(x).unwrap().max(g.eval(x).unwrap()));
        }
    }
}

#[test]
fn vanishing_near_zero_is_an_ideal() {
    let fs = random_pls(1515, 600);
    for pair in fs.chunks(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let rf = residue_in_ideal(f);
        let rg = residue_in_ideal(g);
        assert!(rf.vanishes_near_zero() && rg.vanishes_near_zero());
        assert!(PLFunction::linear(&int(2), &rf, &int(-3), &rg).vanishes_near_zero());
        // Anything dominated by |rf| vanishes wherever rf does.
        let dominated = rf.abs().meet(&g.abs());
        assert!(dominated.abs().le(&rf.abs()));
        assert!(dominated.vanishes_near_zero());
        // f is determined modulo J by f(0) and its right slope at 0.
        let rebuilt = rf
            .add(&PLFunction::constant(f.values()[0].clone()))
            .add(&PLFunction::identity().scale(&f.right_slope_at_zero()));
        assert_eq!(rebuilt, *f);
        if rf.vanishes_near_zero() {
            assert!(rf.values()[0].is_zero());
        }
    }
}

#[test]
fn pl_e_norm_matches_dense_sampling_bound() {
    // |f| ≤ ‖f‖_e · e on a fine grid, and the bound is attained at a breakpoint.
    let fs = random_pls(1616, 400);
    for pair in fs.chunks(2) {
        let f = &pair[0];
        let e = pair[1].abs().add(&PLFunction::constant(int(1)));
        let ENorm::Finite(norm) = pl_e_norm(f, &e).unwrap() else {
            panic!("e ≥ 1 gives a finite norm");
        };
        for k in 0..=64 {
            let t = Rational::new(k.into(), 64.into());
            assert!(f.eval(&t).unwrap().abs() <= &norm * e.eval(&t).unwrap());
        }
        let attained = f
            .breakpoints()
            .iter()
            .chain(e.breakpoints())
            .any(|t| f.eval(t).unwrap().abs() == &norm * e.eval(t).unwrap());
        assert!(attained);
    }
}

#[test]
fn support_reduction_commutes_with_lattice_operations() {
    let mut s = Seed::new(1717);
    for _ in 0..200 {
        let mut seqs = Vec::new();
        for _ in 0..3 {
            let mut seq = BTreeMap::new();
            for _ in 0..3 {
                let (k, next) = s.range(0, 20);
                let (v, next) = next.range(-3, 3);
                s = next;
                seq.insert(k as u64, int(v));
            }
            seqs.push(seq);
        }
        let Ok((lattice, vs)) = rieszkit::lattice::restrict_to_support_union(&seqs) else {
            continue;
        };
        let joined = vs[0].join(&vs[1]).unwrap();
        for (i, label) in lattice.labels().iter().enumerate() {
            let k: u64 = label.parse().unwrap();
            let a = seqs[0].get(&k).cloned().unwrap_or_default();
            let b = seqs[1].get(&k).cloned().unwrap_or_default();
            assert_eq!(joined.coords()[i], a.max(b));
        }
        // Every densified coordinate is in some support.
        for i in 0..lattice.dim() {
            assert!(vs.iter().any(|v| v.coords()[i].is_positive() || v.coords()[i].is_negative()));
        }
    }
}
