//! The vector lattice `ℚ^Ω` with coordinatewise order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::ratlinalg::check_len;
use crate::rational::{self, Rational};

/// `ℚ^Ω` for a finite discrete Ω.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteVectorLattice {
    labels: Labels,
}

impl FiniteVectorLattice {
    pub fn new(labels: Labels) -> Self {
        FiniteVectorLattice { labels }
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn vector(&self, coords: Vec<Rational>) -> Result<LatticeVector> {
        LatticeVector::new(&self.labels, coords)
    }

    pub fn functional(&self, coeffs: Vec<Rational>) -> Result<Functional> {
        Functional::new(&self.labels, coeffs)
    }

    pub fn zero(&self) -> LatticeVector {
        LatticeVector {
            labels: self.labels.clone(),
            coords: vec![Rational::zero(); self.dim()],
        }
    }

    /// The constant-one vector.
    pub fn ones(&self) -> LatticeVector {
        LatticeVector {
            labels: self.labels.clone(),
            coords: vec![rational::int(1); self.dim()],
        }
    }

    pub fn unit(&self, label: &str) -> Result<LatticeVector> {
        let i = self.labels.index_of(label)?;
        let mut v = self.zero();
        v.coords[i] = rational::int(1);
        Ok(v)
    }

    /// Point evaluation at `label`.
    pub fn delta(&self, label: &str) -> Result<Functional> {
        let i = self.labels.index_of(label)?;
        let mut coeffs = vec![Rational::zero(); self.dim()];
        coeffs[i] = rational::int(1);
        Ok(Functional {
            labels: self.labels.clone(),
            coeffs,
        })
    }
}

/// An element of `ℚ^Ω`, stored densely in label order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    labels: Labels,
    coords: Vec<Rational>,
}

impl LatticeVector {
    pub fn new(labels: &Labels, coords: Vec<Rational>) -> Result<Self> {
        check_len(labels.len(), &coords)?;
        Ok(LatticeVector {
            labels: labels.clone(),
            coords,
        })
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn get(&self, label: &str) -> Result<&Rational> {
        Ok(&self.coords[self.labels.index_of(label)?])
    }

    fn zip_with(
        &self,
        other: &LatticeVector,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<LatticeVector> {
        self.labels.ensure_same(&other.labels)?;
        Ok(self.with_coords(self.coords.iter().zip(&other.coords).map(|(a, b)| f(a, b)).collect()))
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> LatticeVector {
        self.with_coords(self.coords.iter().map(f).collect())
    }

    fn with_coords(&self, coords: Vec<Rational>) -> LatticeVector {
        LatticeVector {
            labels: self.labels.clone(),
            coords,
        }
    }

    pub fn join(&self, other: &LatticeVector) -> Result<LatticeVector> {
        self.zip_with(other, |a, b| a.max(b).clone())
    }

    pub fn meet(&self, other: &LatticeVector) -> Result<LatticeVector> {
        self.zip_with(other, |a, b| a.min(b).clone())
    }

    pub fn abs(&self) -> LatticeVector {
        self.map(Signed::abs)
    }

    pub fn pos_part(&self) -> LatticeVector {
        self.map(|a| if a.is_positive() { a.clone() } else { Rational::zero() })
    }

    pub fn neg_part(&self) -> LatticeVector {
        self.map(|a| if a.is_negative() { -a } else { Rational::zero() })
    }

    pub fn add(&self, other: &LatticeVector) -> Result<LatticeVector> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LatticeVector) -> Result<LatticeVector> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> LatticeVector {
        self.map(|a| a * c)
    }

    pub fn neg(&self) -> LatticeVector {
        self.map(|a| -a)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// `self ≥ 0`.
    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|a| !a.is_negative())
    }

    /// Coordinatewise `self ≤ other`.
    pub fn le(&self, other: &LatticeVector) -> Result<bool> {
        self.labels.ensure_same(&other.labels)?;
        Ok(self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b))
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| !self.coords[i].is_zero())
            .collect()
    }

    /// `|x| ∧ |y| = 0`.
    pub fn is_disjoint(&self, other: &LatticeVector) -> Result<bool> {
        Ok(self.abs().meet(&other.abs())?.is_zero())
    }

    /// Agrees with `self` on `subset` and vanishes elsewhere.
    pub fn project(&self, subset: &[&str]) -> Result<LatticeVector> {
        let mut keep = vec![false; self.coords.len()];
        for label in subset {
            keep[self.labels.index_of(label)?] = true;
        }
        Ok(self.with_coords(
            self.coords
                .iter()
                .zip(keep)
                .map(|(a, k)| if k { a.clone() } else { Rational::zero() })
                .collect(),
        ))
    }

    pub fn to_map(&self) -> BTreeMap<String, Rational> {
        self.labels
            .iter()
            .map(str::to_string)
            .zip(self.coords.iter().cloned())
            .collect()
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(rational::format).collect();
        write!(f, "({})", coords.join(", "))
    }
}

/// A linear functional on `ℚ^Ω`, stored as its coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Functional {
    labels: Labels,
    coeffs: Vec<Rational>,
}

impl Functional {
    pub fn new(labels: &Labels, coeffs: Vec<Rational>) -> Result<Self> {
        check_len(labels.len(), &coeffs)?;
        Ok(Functional {
            labels: labels.clone(),
            coeffs,
        })
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &LatticeVector) -> Result<Rational> {
        self.labels.ensure_same(&x.labels)?;
        Ok(crate::ratlinalg::dot(&self.coeffs, &x.coords))
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn pos_part(&self) -> Functional {
        self.map(|a| if a.is_positive() { a.clone() } else { Rational::zero() })
    }

    pub fn neg_part(&self) -> Functional {
        self.map(|a| if a.is_negative() { -a } else { Rational::zero() })
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Functional {
        Functional {
            labels: self.labels.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coeffs.iter().map(rational::format).collect();
        write!(f, "φ({})", coeffs.join(", "))
    }
}

/// Value of an `e`-norm. `Infinite` means the argument is outside the
/// principal ideal generated by `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ENorm {
    Finite(Rational),
    Infinite,
}

impl ENorm {
    pub fn is_finite(&self) -> bool {
        matches!(self, ENorm::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ENorm::Finite(r) => Some(r),
            ENorm::Infinite => None,
        }
    }
}

impl PartialOrd for ENorm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ENorm {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ENorm::Finite(a), ENorm::Finite(b)) => a.cmp(b),
            (ENorm::Finite(_), ENorm::Infinite) => Ordering::Less,
            (ENorm::Infinite, ENorm::Finite(_)) => Ordering::Greater,
            (ENorm::Infinite, ENorm::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ENorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ENorm::Finite(r) => write!(f, "{r}"),
            ENorm::Infinite => f.write_str("inf"),
        }
    }
}

/// `‖x‖_e = inf{λ > 0 : |x| ≤ λe}`.
pub fn e_norm(x: &LatticeVector, e: &LatticeVector) -> Result<ENorm> {
    x.labels.ensure_same(&e.labels)?;
    if !e.is_positive() {
        return Err(Error::NotPositive(format!("weight {e:?} has a negative coordinate")));
    }
    let mut norm = Rational::zero();
    for (xi, ei) in x.coords.iter().zip(&e.coords) {
        if ei.is_zero() {
            if !xi.is_zero() {
                return Ok(ENorm::Infinite);
            }
        } else {
            let ratio = xi.abs() / ei;
            if ratio > norm {
                norm = ratio;
            }
        }
    }
    Ok(ENorm::Finite(norm))
}

/// Densify finitely supported sequences onto the union of their supports.
///
/// Lattice and linear operations on finitely many sequences only see the
/// coordinates in that union, so the induced finite lattice is faithful.
pub fn restrict_to_support_union(
    sparse: &[BTreeMap<u64, Rational>],
) -> Result<(FiniteVectorLattice, Vec<LatticeVector>)> {
    let support: BTreeSet<u64> = sparse
        .iter()
        .flat_map(|v| v.iter().filter(|(_, a)| !a.is_zero()).map(|(&k, _)| k))
        .collect();
    if support.is_empty() {
        return Err(Error::EmptyLabels);
    }
    let keys: Vec<u64> = support.into_iter().collect();
    let lattice = FiniteVectorLattice::new(Labels::new(keys.iter().map(u64::to_string))?);
    let vectors = sparse
        .iter()
        .map(|v| {
            let coords = keys
                .iter()
                .map(|k| v.get(k).cloned().unwrap_or_else(Rational::zero))
                .collect();
            lattice.vector(coords)
        })
        .collect::<Result<_>>()?;
    Ok((lattice, vectors))
}
