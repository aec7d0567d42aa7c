//! Brute-force sublattice generation, straight from the definition.
//!
//! Each round replaces `S` by the span of `S` together with `b⁺`, `b⁻`,
//! `b_i ∨ b_j` and `b_i ∧ b_j` over its basis, and with `v⁺` for every
//! elementary vector `v` of `S` (a nonzero vector of minimal support). The
//! elementary vectors make the stopping rule sound: every `x ∈ S` is a sum of
//! elementary vectors that agree with `x` in sign wherever they are nonzero,
//! so `x⁺` is the sum of their positive parts. A round that adds nothing
//! therefore certifies that `S` is closed under `x ↦ x⁺`, i.e. a sublattice.
//! Every round but the last raises the dimension, so there are at most
//! `|Ω| + 1` rounds.
//!
//! Nothing here uses the two-point constraint machinery.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::lattice::LatticeVector;
use crate::ratlinalg::{null_space, rref, Subspace};
use crate::rational::Rational;

/// Largest ambient dimension the subset enumeration accepts.
pub const MAX_ORACLE_DIM: usize = 16;

pub fn lattice_generated_subspace(labels: &Labels, generators: &[LatticeVector]) -> Result<Subspace> {
    for g in generators {
        labels.ensure_same(g.labels())?;
    }
    let rows: Vec<_> = generators.iter().map(|g| g.coords().to_vec()).collect();
    generated_by_rows(labels, &rows)
}

/// Same as [`lattice_generated_subspace`] for raw coordinate rows.
pub fn generated_by_rows(labels: &Labels, rows: &[Vec<Rational>]) -> Result<Subspace> {
    let n = labels.len();
    if n > MAX_ORACLE_DIM {
        return Err(Error::OutOfRange(format!("oracle supports at most {MAX_ORACLE_DIM} labels")));
    }
    let mut current = Subspace::span(labels, rows)?;
    loop {
        let basis = current.basis();
        let mut candidates: Vec<Vec<Rational>> = basis.to_vec();
        for (i, a) in basis.iter().enumerate() {
            candidates.push(pos(a));
            candidates.push(pos(&negate(a)));
            for b in &basis[i + 1..] {
                candidates.push(zip(a, b, |x, y| x.max(y).clone()));
                candidates.push(zip(a, b, |x, y| x.min(y).clone()));
            }
        }
        candidates.extend(elementary_vectors(&current).iter().map(|v| pos(v)));
        let next = Subspace::span(labels, &candidates)?;
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

pub fn oracle_is_sublattice(y: &Subspace) -> Result<bool> {
    y.ensure_primal()?;
    Ok(generated_by_rows(y.labels(), y.basis())?.dim() == y.dim())
}

/// One representative per minimal support of the nonzero vectors of `y`.
pub fn elementary_vectors(y: &Subspace) -> Vec<Vec<Rational>> {
    let n = y.ambient_dim();
    let equations = null_space(y.basis(), n);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let mut rows = equations.clone();
        for i in (0..n).filter(|i| mask >> i & 1 == 0) {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::from_integer(1.into());
            rows.push(e);
        }
        let solutions = null_space(&rref(rows), n);
        if let [v] = solutions.as_slice() {
            let full_support = (0..n).all(|i| (mask >> i & 1 == 1) == !v[i].is_zero());
            if full_support {
                out.push(v.clone());
            }
        }
    }
    out
}

fn pos(v: &[Rational]) -> Vec<Rational> {
    v.iter()
        .map(|x| if x.is_positive() { x.clone() } else { Rational::zero() })
        .collect()
}

fn negate(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| -x.clone()).collect()
}

fn zip(a: &[Rational], b: &[Rational], f: impl Fn(&Rational, &Rational) -> Rational) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}
