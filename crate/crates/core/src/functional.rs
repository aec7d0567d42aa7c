//! Linear functionals on `ℚ^Ω` and what their kernels are.
//!
//! Real-valued lattice homomorphisms on `ℚ^Ω` are exactly `c·δ_t` with
//! `c ≥ 0`, so each property below is read off from coefficient signs and
//! supports.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::generator::Seed;
use crate::lattice::{Functional, LatticeVector};
use crate::ratlinalg::{pre_annihilator, Subspace};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalClassification {
    pub is_positive: bool,
    pub is_negative: bool,
    pub is_lattice_homomorphism: bool,
    pub is_diff_of_two_homomorphisms: bool,
    pub is_disjointness_preserving: bool,
    pub support_size: usize,
    /// `(φ⁺, φ⁻)` when both are lattice homomorphisms.
    pub homomorphism_parts: Option<(Functional, Functional)>,
}

pub fn classify(phi: &Functional) -> FunctionalClassification {
    let coeffs = phi.coeffs();
    let is_positive = coeffs.iter().all(|c| !c.is_negative());
    let is_negative = coeffs.iter().all(|c| !c.is_positive());
    let support_size = phi.support().len();
    let plus = phi.pos_part();
    let minus = phi.neg_part();
    let is_diff = plus.support().len() <= 1 && minus.support().len() <= 1;
    FunctionalClassification {
        is_positive,
        is_negative,
        is_lattice_homomorphism: is_positive && support_size <= 1,
        is_diff_of_two_homomorphisms: is_diff,
        is_disjointness_preserving: support_size <= 1,
        support_size,
        homomorphism_parts: is_diff.then_some((plus, minus)),
    }
}

/// `ker φ`, and whether `φ = 0` (in which case the kernel is the whole space
/// rather than a hyperplane).
pub fn kernel_subspace(phi: &Functional) -> (Subspace, bool) {
    let kernel = pre_annihilator(phi.labels(), &[phi.coeffs().to_vec()])
        .expect("functional has ambient length");
    (kernel, phi.is_zero())
}

/// A concrete order interval `[lower, upper]` with endpoints in `ker φ` that
/// contains a point `z` outside `ker φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullnessWitness {
    pub s: usize,
    pub t: usize,
    /// `e_s`, with `φ(x) > 0`.
    pub x: LatticeVector,
    /// A positive multiple of `e_t` with `φ(y) = −φ(x)`.
    pub y: LatticeVector,
    pub alpha: Rational,
    pub beta: Rational,
    pub lower: LatticeVector,
    /// `αx + βy`.
    pub upper: LatticeVector,
    /// `αx`.
    pub z: LatticeVector,
}

impl FullnessWitness {
    /// Re-checks the witness against `φ` with exact arithmetic.
    pub fn verify(&self, phi: &Functional) -> Result<bool> {
        Ok(phi.eval(&self.lower)?.is_zero()
            && phi.eval(&self.upper)?.is_zero()
            && !phi.eval(&self.z)?.is_zero()
            && self.lower.le(&self.z)?
            && self.z.le(&self.upper)?)
    }
}

/// Whether `ker φ` is full (order convex). It is exactly when `φ` is sign
/// definite; otherwise the witness exhibits an interval that leaves the kernel.
pub fn is_full_codim1(phi: &Functional) -> Result<(bool, Option<FullnessWitness>)> {
    if phi.is_zero() {
        return Err(Error::ZeroFunctional);
    }
    let coeffs = phi.coeffs();
    let s = coeffs.iter().position(Signed::is_positive);
    let t = coeffs.iter().position(Signed::is_negative);
    let (Some(s), Some(t)) = (s, t) else {
        return Ok((true, None));
    };
    let labels = phi.labels();
    let n = labels.len();
    let basis = |i: usize, value: Rational| {
        let mut coords = vec![Rational::zero(); n];
        coords[i] = value;
        LatticeVector::new(labels, coords)
    };
    let x = basis(s, rational::int(1))?;
    let y = basis(t, &coeffs[s] / coeffs[t].abs())?;
    let alpha = rational::ratio(1, 2);
    let beta = rational::ratio(1, 2);
    let z = x.scale(&alpha);
    let upper = z.add(&y.scale(&beta))?;
    let lower = basis(s, Rational::zero())?;
    Ok((
        false,
        Some(FullnessWitness {
            s,
            t,
            x,
            y,
            alpha,
            beta,
            lower,
            upper,
            z,
        }),
    ))
}

/// Largest pairwise disjoint family on which `φ` vanishes nowhere.
pub fn max_disjoint_nonvanishing(phi: &Functional) -> usize {
    phi.support().len()
}

/// Best-effort search for a violation of fullness of `y`: an element
/// `0 ≤ z ≤ d` with `d ∈ y` and `z ∉ y`. Samples random combinations of the
/// basis, keeps the sign-definite ones and tries coordinate projections of
/// them. Finding nothing proves nothing.
pub fn fullness_falsifier(
    y: &Subspace,
    seed: Seed,
    trials: usize,
) -> Result<Option<(LatticeVector, LatticeVector)>> {
    y.ensure_primal()?;
    let labels = y.labels();
    let n = labels.len();
    let mut seed = seed;
    for _ in 0..trials {
        let mut d = vec![Rational::zero(); n];
        for row in y.basis() {
            let (c, next) = seed.range(-3, 3);
            seed = next;
            for (di, ri) in d.iter_mut().zip(row) {
                *di += rational::int(c) * ri;
            }
        }
        if d.iter().all(|v| !v.is_positive()) {
            d.iter_mut().for_each(|v| *v = -v.clone());
        }
        if !d.iter().all(|v| !v.is_negative()) {
            continue;
        }
        let (mask, next) = seed.next_u64();
        seed = next;
        let z: Vec<Rational> = d
            .iter()
            .enumerate()
            .map(|(i, v)| if i < 64 && mask >> i & 1 == 1 { v.clone() } else { Rational::zero() })
            .collect();
        if !y.member(&z)? {
            return Ok(Some((LatticeVector::new(labels, z)?, LatticeVector::new(labels, d)?)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::Labels;
    use crate::lattice::FiniteVectorLattice;
    use crate::rational::{int, vector};
    use crate::sublattice::is_sublattice;

    fn phi(coeffs: &[i64]) -> Functional {
        FiniteVectorLattice::new(Labels::numbered(coeffs.len()).unwrap())
            .functional(vector(coeffs))
            .unwrap()
    }

    #[test]
    fn classify_sum_of_two_deltas() {
        let c = classify(&phi(&[1, 1]));
        assert!(c.is_positive && !c.is_negative);
        assert!(!c.is_lattice_homomorphism);
        assert!(!c.is_diff_of_two_homomorphisms);
        assert_eq!(c.homomorphism_parts, None);
        let (kernel, _) = kernel_subspace(&phi(&[1, 1]));
        assert!(!is_sublattice(&kernel).unwrap());
    }

    #[test]
    fn classify_difference_of_deltas() {
        let f = phi(&[1, -2]);
        let c = classify(&f);
        assert!(c.is_diff_of_two_homomorphisms && !c.is_lattice_homomorphism);
        let (plus, minus) = c.homomorphism_parts.unwrap();
        assert_eq!(plus.coeffs(), vector(&[1, 0]));
        assert_eq!(minus.coeffs(), vector(&[0, 2]));
        assert!(is_sublattice(&kernel_subspace(&f).0).unwrap());
    }

    #[test]
    fn classify_scaled_delta() {
        let c = classify(&phi(&[3, 0, 0]));
        assert!(c.is_lattice_homomorphism && c.is_disjointness_preserving);
        assert_eq!(c.support_size, 1);
        let kernel = kernel_subspace(&phi(&[3, 0, 0])).0;
        assert_eq!(crate::ideal::is_ideal(&kernel).unwrap().unwrap().zero_set, vec![0]);
    }

    #[test]
    fn classify_zero() {
        let c = classify(&phi(&[0, 0]));
        assert!(c.is_positive && c.is_negative && c.is_lattice_homomorphism);
        assert!(c.is_diff_of_two_homomorphisms && c.is_disjointness_preserving);
        assert_eq!(c.support_size, 0);
    }

    #[test]
    fn kernel_examples() {
        let l2 = Labels::numbered(2).unwrap();
        let (k, degenerate) = kernel_subspace(&phi(&[1, -1]));
        assert_eq!(k, Subspace::span(&l2, &[vector(&[1, 1])]).unwrap());
        assert!(!degenerate);

        let l3 = Labels::numbered(3).unwrap();
        let (k, _) = kernel_subspace(&phi(&[0, 1, 0]));
        assert_eq!(k, Subspace::span(&l3, &[vector(&[1, 0, 0]), vector(&[0, 0, 1])]).unwrap());

        let (k, _) = kernel_subspace(&phi(&[1, 2, 3]));
        // x1 + 2x2 + 3x3 = 0 in RREF: (1, 0, −1/3), (0, 1, −2/3).
        assert_eq!(
            k.basis(),
            [
                vec![int(1), int(0), rational::ratio(-1, 3)],
                vec![int(0), int(1), rational::ratio(-2, 3)]
            ]
        );
        assert_eq!(k.codimension(), 1);
        assert!(k.member(&vector(&[-2, 1, 0])).unwrap());
        assert!(k.member(&vector(&[-3, 0, 1])).unwrap());

        let (k, degenerate) = kernel_subspace(&phi(&[0, 0]));
        assert!(k.is_full() && degenerate);
    }

    #[test]
    fn fullness_examples() {
        // The line y = −x is full but not an ideal.
        let (full, witness) = is_full_codim1(&phi(&[1, 1])).unwrap();
        assert!(full && witness.is_none());
        assert!(crate::ideal::is_ideal(&kernel_subspace(&phi(&[1, 1])).0).unwrap().is_none());

        let f = phi(&[1, -1]);
        let (full, witness) = is_full_codim1(&f).unwrap();
        assert!(!full);
        let w = witness.unwrap();
        assert_eq!(w.upper.coords(), [rational::ratio(1, 2), rational::ratio(1, 2)]);
        assert_eq!(w.z.coords(), [rational::ratio(1, 2), int(0)]);
        assert!(w.verify(&f).unwrap());

        assert_eq!(is_full_codim1(&phi(&[-2, -3])).unwrap(), (true, None));
        assert_eq!(is_full_codim1(&phi(&[0, 0])), Err(Error::ZeroFunctional));
    }

    #[test]
    fn disjoint_family_examples() {
        assert_eq!(max_disjoint_nonvanishing(&phi(&[1, -1, 1])), 3);
        assert!(!is_sublattice(&kernel_subspace(&phi(&[1, -1, 1])).0).unwrap());
        assert_eq!(max_disjoint_nonvanishing(&phi(&[1, -2])), 2);
        assert_eq!(max_disjoint_nonvanishing(&phi(&[0, 0])), 0);
    }

    #[test]
    fn falsifier_finds_non_full_kernels() {
        let (kernel, _) = kernel_subspace(&phi(&[1, 1, -1]));
        let found = fullness_falsifier(&kernel, Seed::new(3), 200).unwrap();
        let (z, d) = found.expect("ker(δ1 + δ2 − δ3) contains (1,0,1) but not (1,0,0)");
        assert!(kernel.member(d.coords()).unwrap());
        assert!(!kernel.member(z.coords()).unwrap());
        assert!(z.is_positive() && z.le(&d).unwrap());

        let (kernel, _) = kernel_subspace(&phi(&[1, 2, 0]));
        assert_eq!(fullness_falsifier(&kernel, Seed::new(3), 200).unwrap(), None);
    }
}
