//! Exact sublattice, ideal and functional analysis for the finite-dimensional
//! vector lattices `ℚ^Ω`, plus an exact piecewise-affine function lattice on
//! `[0,1]`.
//!
//! Every computation runs over arbitrary-precision rationals. Subspaces are
//! kept in reduced row echelon form, so two subspaces over the same labels
//! are equal exactly when their basis matrices are identical.

pub mod cli;
pub mod error;
pub mod functional;
pub mod generator;
pub mod ideal;
pub mod labels;
pub mod lattice;
pub mod oracle;
pub mod pl;
pub mod ratlinalg;
pub mod rational;
pub mod report;
pub mod sublattice;

pub use error::{Error, Result};
pub use labels::Labels;
pub use lattice::{ENorm, FiniteVectorLattice, Functional, LatticeVector};
pub use pl::PLFunction;
pub use ratlinalg::Subspace;
pub use rational::Rational;
pub use sublattice::{ClanDecomposition, Constraint, ConstraintSet};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
