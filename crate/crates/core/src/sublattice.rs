//! Sublattices of `ℚ^Ω` via two-point constraints.
//!
//! A subspace `Y` is pushed through every coordinate pair `(s, t)`. The image
//! in `ℚ²` is replaced by the smallest sublattice of the plane containing it,
//! and that plane sublattice is read back as constraints of the form
//! `f(s) = 0` or `f(s) = α f(t)` with `α > 0`. The subspace cut out by all of
//! these constraints is the sublattice generated by `Y`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::lattice::LatticeVector;
use crate::ratlinalg::{pre_annihilator, rref, Subspace};
use crate::rational::Rational;

/// A functional of the form `δ_s` or `δ_s − α δ_t` vanishing on a sublattice.
///
/// Labels are stored as indices into the ambient label list. In
/// `Proportionality`, `s < t` and `alpha > 0`; the encoded condition is
/// `f(s) = alpha · f(t)`. The derived order sorts by kind, then `s`, then `t`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constraint {
    PointVanish { s: usize },
    Proportionality { s: usize, t: usize, alpha: Rational },
}

impl Constraint {
    /// The coefficient vector of the constraint functional.
    pub fn functional(&self, n: usize) -> Vec<Rational> {
        let mut coeffs = vec![Rational::zero(); n];
        match self {
            Constraint::PointVanish { s } => coeffs[*s] = Rational::one(),
            Constraint::Proportionality { s, t, alpha } => {
                coeffs[*s] = Rational::one();
                coeffs[*t] = -alpha.clone();
            }
        }
        coeffs
    }

    /// The codimension-one subspace `ker μ`.
    pub fn kernel(&self, labels: &Labels) -> Subspace {
        pre_annihilator(labels, &[self.functional(labels.len())])
            .expect("constraint functional has ambient length")
    }
}

/// The full, sorted and deduplicated constraint family of a subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstraintSet {
    labels: Labels,
    constraints: Vec<Constraint>,
}

impl ConstraintSet {
    pub fn new(labels: &Labels, mut constraints: Vec<Constraint>) -> Self {
        constraints.sort();
        constraints.dedup();
        ConstraintSet {
            labels: labels.clone(),
            constraints,
        }
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn functionals(&self) -> Vec<Vec<Rational>> {
        let n = self.labels.len();
        self.constraints.iter().map(|c| c.functional(n)).collect()
    }

    /// The common kernel `M_⊥`.
    pub fn pre_annihilator(&self) -> Subspace {
        pre_annihilator(&self.labels, &self.functionals())
            .expect("constraint functionals have ambient length")
    }
}

/// The kernel, clans and disjoint positive generators of a sublattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClanDecomposition {
    pub labels: Labels,
    /// Labels on which every member vanishes.
    pub kernel: Vec<usize>,
    /// Classes of labels on which all members are positively proportional,
    /// ordered by their minimal label.
    pub clans: Vec<Vec<usize>>,
    /// One positive generator per clan, supported exactly on it and equal to 1
    /// at the clan's minimal label.
    pub generators: Vec<LatticeVector>,
}

/// `{(y_s, y_t) : y ∈ Y}` as a subspace of `ℚ^{s,t}`.
pub fn pair_image(y: &Subspace, s: &str, t: &str) -> Result<Subspace> {
    let i = y.labels().index_of(s)?;
    let j = y.labels().index_of(t)?;
    if i == j {
        return Err(Error::InvalidArgument(format!("pair needs two distinct labels, got `{s}` twice")));
    }
    pair_image_at(y, i, j)
}

fn pair_image_at(y: &Subspace, i: usize, j: usize) -> Result<Subspace> {
    y.ensure_primal()?;
    let labels = Labels::new([y.labels().name(i), y.labels().name(j)])?;
    let rows: Vec<Vec<Rational>> = y
        .basis()
        .iter()
        .map(|row| vec![row[i].clone(), row[j].clone()])
        .collect();
    Subspace::span(&labels, &rows)
}

/// The smallest sublattice of `ℚ²` containing `v`.
///
/// Only a line through an open quadrant of mixed sign grows: the positive part
/// of its direction is a coordinate vector, so it generates the whole plane.
pub fn pair_sublattice_closure(v: &Subspace) -> Result<Subspace> {
    v.ensure_primal()?;
    if v.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: v.ambient_dim(),
        });
    }
    if v.dim() == 1 {
        let row = &v.basis()[0];
        if (&row[0] * &row[1]).is_negative() {
            return Ok(Subspace::full(v.labels()));
        }
    }
    Ok(v.clone())
}

/// Reads a sublattice `w` of the plane over `(s, t)` back as constraints.
fn pair_constraints(s: usize, t: usize, w: &Subspace, out: &mut Vec<Constraint>) {
    match w.dim() {
        0 => {
            out.push(Constraint::PointVanish { s });
            out.push(Constraint::PointVanish { s: t });
        }
        1 => {
            // RREF row: (0, 1), (1, 0) or (1, b) with b > 0.
            let row = &w.basis()[0];
            if row[0].is_zero() {
                out.push(Constraint::PointVanish { s });
            } else if row[1].is_zero() {
                out.push(Constraint::PointVanish { s: t });
            } else {
                debug_assert!(row[1].is_positive());
                out.push(Constraint::Proportionality {
                    s,
                    t,
                    alpha: row[1].recip(),
                });
            }
        }
        _ => {}
    }
}

/// Every constraint `δ_s` or `δ_s − α δ_t` (α > 0) vanishing on the
/// sublattice generated by `y`.
pub fn constraint_set(y: &Subspace) -> Result<ConstraintSet> {
    y.ensure_primal()?;
    let n = y.ambient_dim();
    let mut constraints = Vec::new();
    if n == 1 {
        if y.is_zero() {
            constraints.push(Constraint::PointVanish { s: 0 });
        }
    } else {
        for s in 0..n {
            for t in s + 1..n {
                let w = pair_sublattice_closure(&pair_image_at(y, s, t)?)?;
                pair_constraints(s, t, &w, &mut constraints);
            }
        }
    }
    Ok(ConstraintSet::new(y.labels(), constraints))
}

/// The sublattice generated by `y`.
pub fn sublattice_closure(y: &Subspace) -> Result<Subspace> {
    Ok(constraint_set(y)?.pre_annihilator())
}

pub fn is_sublattice(y: &Subspace) -> Result<bool> {
    Ok(&sublattice_closure(y)? == y)
}

/// A pair of labels whose image under `y` is a line that generates all of
/// `ℚ²`. Present exactly when `y` is not a sublattice.
pub fn non_sublattice_witness(y: &Subspace) -> Result<Option<(usize, usize)>> {
    y.ensure_primal()?;
    let n = y.ambient_dim();
    for s in 0..n {
        for t in s + 1..n {
            let v = pair_image_at(y, s, t)?;
            if pair_sublattice_closure(&v)? != v {
                return Ok(Some((s, t)));
            }
        }
    }
    Ok(None)
}

fn require_sublattice(y: &Subspace) -> Result<()> {
    match non_sublattice_witness(y)? {
        None => Ok(()),
        Some((s, t)) => Err(Error::NotASublattice {
            s: y.labels().name(s).to_string(),
            t: y.labels().name(t).to_string(),
        }),
    }
}

/// `Some(α)` with `col_s = α · col_t` and `α > 0`.
fn positive_ratio(col_s: &[Rational], col_t: &[Rational]) -> Option<Rational> {
    let r = col_t.iter().position(|v| !v.is_zero())?;
    let alpha = &col_s[r] / &col_t[r];
    let proportional = col_s.iter().zip(col_t).all(|(a, b)| *a == &alpha * b);
    (proportional && alpha.is_positive()).then_some(alpha)
}

/// Clan decomposition of `y` when `require_sublattice` is set, otherwise of
/// the sublattice generated by `y`.
pub fn clan_decomposition(y: &Subspace, require_sublattice: bool) -> Result<ClanDecomposition> {
    y.ensure_primal()?;
    let target = if require_sublattice {
        self::require_sublattice(y)?;
        y.clone()
    } else {
        sublattice_closure(y)?
    };
    let n = target.ambient_dim();
    let columns: Vec<Vec<Rational>> = (0..n).map(|j| target.column(j)).collect();

    let mut kernel = Vec::new();
    let mut clans: Vec<Vec<usize>> = Vec::new();
    for j in 0..n {
        if columns[j].iter().all(Zero::is_zero) {
            kernel.push(j);
            continue;
        }
        match clans
            .iter_mut()
            .find(|clan| positive_ratio(&columns[j], &columns[clan[0]]).is_some())
        {
            Some(clan) => clan.push(j),
            None => clans.push(vec![j]),
        }
    }

    let generators = clans
        .iter()
        .map(|clan| {
            let anchor = &columns[clan[0]];
            let mut coords = vec![Rational::zero(); n];
            for &j in clan {
                coords[j] = positive_ratio(&columns[j], anchor).expect("clan members are proportional");
            }
            LatticeVector::new(target.labels(), coords)
        })
        .collect::<Result<_>>()?;

    Ok(ClanDecomposition {
        labels: target.labels().clone(),
        kernel,
        clans,
        generators,
    })
}

/// Disjoint positive vectors spanning the sublattice `y`.
pub fn disjoint_positive_basis(y: &Subspace) -> Result<Vec<LatticeVector>> {
    Ok(clan_decomposition(y, true)?.generators)
}

/// Exactly `codim y` independent constraints whose kernels intersect in `y`,
/// chosen greedily in constraint order.
pub fn factor_into_codim1(y: &Subspace) -> Result<Vec<Constraint>> {
    require_sublattice(y)?;
    let set = constraint_set(y)?;
    let n = y.ambient_dim();
    let m = y.codimension();
    let mut chosen = Vec::with_capacity(m);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for c in set.constraints() {
        if chosen.len() == m {
            break;
        }
        rows.push(c.functional(n));
        if rref(rows.clone()).len() == rows.len() {
            chosen.push(c.clone());
        } else {
            rows.pop();
        }
    }
    debug_assert_eq!(chosen.len(), m);
    Ok(chosen)
}

/// Number of standard unit vectors contained in the sublattice `y`.
pub fn unit_vector_census(y: &Subspace) -> Result<usize> {
    require_sublattice(y)?;
    let n = y.ambient_dim();
    let mut count = 0;
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if y.member(&e)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `(n − 2m, n − m)`, clamped at zero, for a codimension-`m` sublattice of `ℚ^n`.
pub fn unit_vector_bounds(n: usize, m: usize) -> (usize, usize) {
    (n.saturating_sub(2 * m), n - m)
}
