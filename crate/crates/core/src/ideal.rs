//! Ideals of `ℚ^Ω`. Every ideal is a coordinate subspace
//! `J_F = {x : x_i = 0 for i ∈ F}`, so an ideal is described by its zero set.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::lattice::{FiniteVectorLattice, Functional, LatticeVector};
use crate::ratlinalg::Subspace;
use crate::rational::Rational;
use crate::sublattice::clan_decomposition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealDescriptor {
    /// Sorted label indices where every member vanishes.
    pub zero_set: Vec<usize>,
    pub subspace: Subspace,
}

impl IdealDescriptor {
    pub fn labels(&self) -> &Labels {
        self.subspace.labels()
    }

    pub fn codimension(&self) -> usize {
        self.zero_set.len()
    }

    pub fn zero_set_names(&self) -> Vec<String> {
        self.zero_set
            .iter()
            .map(|&i| self.labels().name(i).to_string())
            .collect()
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); n];
    e[i] = Rational::one();
    e
}

/// `J_F` for a set of label indices.
pub fn ideal_at(labels: &Labels, zero_set: &[usize]) -> IdealDescriptor {
    let mut zero_set = zero_set.to_vec();
    zero_set.sort_unstable();
    zero_set.dedup();
    let n = labels.len();
    let units: Vec<_> = (0..n)
        .filter(|i| zero_set.binary_search(i).is_err())
        .map(|i| unit(n, i))
        .collect();
    let subspace = Subspace::span(labels, &units).expect("unit vectors have ambient length");
    IdealDescriptor { zero_set, subspace }
}

/// `J_F = {f : f|_F = 0}`.
pub fn zero_set_ideal(labels: &Labels, zero_set: &[&str]) -> Result<IdealDescriptor> {
    let indices = zero_set
        .iter()
        .map(|l| labels.index_of(l))
        .collect::<Result<Vec<_>>>()?;
    Ok(ideal_at(labels, &indices))
}

/// The descriptor of `y` when `y` is an ideal.
pub fn is_ideal(y: &Subspace) -> Result<Option<IdealDescriptor>> {
    y.ensure_primal()?;
    let kernel: Vec<usize> = (0..y.ambient_dim())
        .filter(|&j| y.column(j).iter().all(Zero::is_zero))
        .collect();
    if y.dim() != y.ambient_dim() - kernel.len() {
        return Ok(None);
    }
    let ideal = ideal_at(y.labels(), &kernel);
    Ok((ideal.subspace == *y).then_some(ideal))
}

/// The largest ideal contained in the sublattice `y`: the span of the unit
/// vectors at its singleton clans. Its codimension is at most `2 · codim y`.
pub fn largest_ideal_in(y: &Subspace) -> Result<IdealDescriptor> {
    let clans = clan_decomposition(y, true)?;
    let mut zero_set = clans.kernel.clone();
    for clan in clans.clans.iter().filter(|c| c.len() > 1) {
        zero_set.extend_from_slice(clan);
    }
    Ok(ideal_at(y.labels(), &zero_set))
}

/// The quotient `ℚ^Ω / J_F`, realized as `ℚ^F` with the restriction map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub lattice: FiniteVectorLattice,
    /// `|F| × |Ω|` selection matrix of the quotient map.
    pub map: Vec<Vec<Rational>>,
    source: Labels,
    coordinates: Vec<usize>,
}

impl Quotient {
    pub fn apply(&self, x: &LatticeVector) -> Result<LatticeVector> {
        self.source.ensure_same(x.labels())?;
        let coords = self.coordinates.iter().map(|&i| x.coords()[i].clone()).collect();
        self.lattice.vector(coords)
    }

    /// `ker Q`, computed from the map matrix.
    pub fn kernel(&self) -> Subspace {
        crate::ratlinalg::pre_annihilator(&self.source, &self.map)
            .expect("map rows have ambient length")
    }
}

pub fn quotient_by_ideal(j: &IdealDescriptor) -> Result<Quotient> {
    if j.zero_set.is_empty() {
        return Err(Error::DegenerateQuotient);
    }
    let source = j.labels().clone();
    let n = source.len();
    Ok(Quotient {
        lattice: FiniteVectorLattice::new(source.select(&j.zero_set)?),
        map: j.zero_set.iter().map(|&i| unit(n, i)).collect(),
        source,
        coordinates: j.zero_set.clone(),
    })
}

/// `J = J_1 ⊊ J_2 ⊊ … ⊊ X`, dropping the largest remaining zero-set label at
/// each step.
pub fn ideal_chain(j: &IdealDescriptor) -> Vec<IdealDescriptor> {
    let mut chain = vec![j.clone()];
    let mut zero_set = j.zero_set.clone();
    while zero_set.pop().is_some() {
        chain.push(ideal_at(j.labels(), &zero_set));
    }
    chain
}

/// The labels `t` whose hyperplanes `ker δ_t` intersect to `J`. These are the
/// only codimension-one ideals containing `J`.
pub fn codim1_ideal_decomposition(j: &IdealDescriptor) -> Vec<usize> {
    j.zero_set.clone()
}

/// All codimension-one ideals `ker δ_t` containing `j`, by exhaustive check.
pub fn codim1_ideals_containing(j: &IdealDescriptor) -> Vec<usize> {
    (0..j.labels().len())
        .filter(|&t| {
            ideal_at(j.labels(), &[t])
                .subspace
                .contains(&j.subspace)
                .expect("same labels")
        })
        .collect()
}

/// `N_φ = {x : φ(|x|) = 0}` for a positive functional.
pub fn null_ideal(phi: &Functional) -> Result<IdealDescriptor> {
    if phi.coeffs().iter().any(Signed::is_negative) {
        return Err(Error::NotPositive(format!("{phi:?}")));
    }
    Ok(ideal_at(phi.labels(), &phi.support()))
}
