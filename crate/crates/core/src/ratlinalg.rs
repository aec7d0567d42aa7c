//! Exact linear algebra over `ℚ^Ω`: canonical subspaces, annihilators,
//! pre-annihilators and finite-choice interpolation.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::rational::Rational;

/// A linear subspace of `ℚ^Ω` (or of its dual) in canonical form.
///
/// The basis is in reduced row echelon form with strictly increasing pivot
/// columns and no zero rows, which makes the representation unique: derived
/// equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    labels: Labels,
    basis: Vec<Vec<Rational>>,
    dual: bool,
}

impl Subspace {
    /// The span of `vectors`, canonicalized.
    pub fn span(labels: &Labels, vectors: &[Vec<Rational>]) -> Result<Self> {
        Self::from_rows(labels, vectors.to_vec(), false)
    }

    /// The span of a list of functionals, as a subspace of the dual.
    pub fn span_dual(labels: &Labels, functionals: &[Vec<Rational>]) -> Result<Self> {
        Self::from_rows(labels, functionals.to_vec(), true)
    }

    pub fn from_rows(labels: &Labels, rows: Vec<Vec<Rational>>, dual: bool) -> Result<Self> {
        for row in &rows {
            check_len(labels.len(), row)?;
        }
        Ok(Subspace {
            labels: labels.clone(),
            basis: rref(rows),
            dual,
        })
    }

    pub fn zero(labels: &Labels) -> Self {
        Subspace {
            labels: labels.clone(),
            basis: Vec::new(),
            dual: false,
        }
    }

    pub fn full(labels: &Labels) -> Self {
        Subspace {
            labels: labels.clone(),
            basis: identity(labels.len()),
            dual: false,
        }
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn ambient_dim(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codimension(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|row| leading_index(row)).collect()
    }

    /// Column `j` of the basis matrix: the values of basis vectors at label `j`.
    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.basis.iter().map(|row| row[j].clone()).collect()
    }

    pub fn member(&self, x: &[Rational]) -> Result<bool> {
        check_len(self.ambient_dim(), x)?;
        Ok(residual(&self.basis, x).iter().all(Zero::is_zero))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.ensure_compatible(other)?;
        Ok(other
            .basis
            .iter()
            .all(|row| residual(&self.basis, row).iter().all(Zero::is_zero)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.ensure_compatible(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(self.with_basis(rref(rows)))
    }

    /// Computed as `(Y^⊥ + Z^⊥)_⊥`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.ensure_compatible(other)?;
        let n = self.ambient_dim();
        let mut constraints = null_space(&self.basis, n);
        constraints.extend(null_space(&other.basis, n));
        Ok(self.with_basis(null_space(&rref(constraints), n)))
    }

    /// `{φ : φ(y) = 0 for all y ∈ Y}`, with the duality flag toggled.
    pub fn annihilator(&self) -> Subspace {
        Subspace {
            labels: self.labels.clone(),
            basis: null_space(&self.basis, self.ambient_dim()),
            dual: !self.dual,
        }
    }

    fn with_basis(&self, basis: Vec<Vec<Rational>>) -> Subspace {
        Subspace {
            labels: self.labels.clone(),
            basis,
            dual: self.dual,
        }
    }

    pub(crate) fn ensure_compatible(&self, other: &Subspace) -> Result<()> {
        self.labels.ensure_same(&other.labels)?;
        if self.dual != other.dual {
            return Err(Error::DualityMismatch);
        }
        Ok(())
    }

    pub(crate) fn ensure_primal(&self) -> Result<()> {
        if self.dual {
            Err(Error::DualityMismatch)
        } else {
            Ok(())
        }
    }
}

/// `B_⊥ = ⋂ ker φ` over the given functionals.
pub fn pre_annihilator(labels: &Labels, functionals: &[Vec<Rational>]) -> Result<Subspace> {
    Ok(Subspace::span_dual(labels, functionals)?.annihilator())
}

/// Both sides of the finite-choice interpolation equivalence for `x`.
///
/// The first component tests `x ∈ (Span_n A ∩ F^⊥)_⊥`, where `Span_n A` is the
/// union of the spans of all `n`-element multisets drawn from `A`. The second
/// tests that for every choice `φ_1, …, φ_n ∈ A` some `y ∈ F` agrees with `x`
/// under every `φ_i`. The two always agree.
pub fn interpolation_equivalence(
    f: &Subspace,
    a: &[Vec<Rational>],
    n: usize,
    x: &[Rational],
) -> Result<(bool, bool)> {
    f.ensure_primal()?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let dim = f.ambient_dim();
    check_len(dim, x)?;
    for phi in a {
        check_len(dim, phi)?;
    }
    let f_perp = f.annihilator();

    let mut annihilated = true;
    let mut interpolable = true;
    for choice in multisets(a.len(), n) {
        let chosen: Vec<Vec<Rational>> = choice.iter().map(|&i| a[i].clone()).collect();

        let vanishing = Subspace::span_dual(f.labels(), &chosen)?.intersect(&f_perp)?;
        if vanishing.basis().iter().any(|psi| !dot(psi, x).is_zero()) {
            annihilated = false;
        }

        // T y = (φ_1(y), …, φ_n(y)); ask whether T x ∈ T F.
        let image: Vec<Vec<Rational>> = f
            .basis()
            .iter()
            .map(|y| chosen.iter().map(|phi| dot(phi, y)).collect())
            .collect();
        let target: Vec<Rational> = chosen.iter().map(|phi| dot(phi, x)).collect();
        if !residual(&rref(image), &target).iter().all(Zero::is_zero) {
            interpolable = false;
        }
    }
    Ok((annihilated, interpolable))
}

/// All non-decreasing index sequences of length `n` over `0..k`.
fn multisets(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn extend(k: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            extend(k, n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(k, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

pub(crate) fn check_len(expected: usize, v: &[Rational]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        })
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn leading_index(row: &[Rational]) -> usize {
    row.iter().position(|v| !v.is_zero()).unwrap_or(row.len())
}

/// Reduced row echelon form with zero rows removed.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

/// `x` reduced against an RREF basis; zero iff `x` lies in the span.
fn residual(rref_rows: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    let mut x = x.to_vec();
    for row in rref_rows {
        let p = leading_index(row);
        if x[p].is_zero() {
            continue;
        }
        let factor = x[p].clone();
        for (v, r) in x.iter_mut().zip(row) {
            *v -= &factor * r;
        }
    }
    x
}

/// Basis (in RREF) of `{x : row · x = 0 for every row}` given RREF rows.
pub fn null_space(rref_rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let pivots: Vec<usize> = rref_rows.iter().map(|r| leading_index(r)).collect();
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    let basis = free
        .map(|f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in rref_rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    rref(basis)
}
