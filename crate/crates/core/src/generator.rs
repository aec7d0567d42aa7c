//! Seeded instance generation on top of SplitMix64.
//!
//! Every draw takes a [`Seed`] by value and hands back the value together with
//! the next seed. A bounded draw `range(lo, hi)` is `lo + z mod (hi − lo + 1)`
//! where `z` is the next 64-bit output, so streams are reproducible in any
//! language.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::labels::Labels;
use crate::lattice::Functional;
use crate::pl::PLFunction;
use crate::ratlinalg::{rref, Subspace};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    pub fn new(state: u64) -> Self {
        Seed(state)
    }

    pub fn state(self) -> u64 {
        self.0
    }

    pub fn next_u64(self) -> (u64, Seed) {
        let state = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        (z ^ (z >> 31), Seed(state))
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn range(self, lo: i64, hi: i64) -> (i64, Seed) {
        debug_assert!(lo <= hi);
        let (z, next) = self.next_u64();
        let width = (hi - lo) as u64 + 1;
        (lo + (z % width) as i64, next)
    }
}

/// Mutable cursor over a seed stream, for call sites that draw many values.
struct Stream(Seed);

impl Stream {
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let (v, next) = self.0.range(lo, hi);
        self.0 = next;
        v
    }

    fn rational(&mut self, lo: i64, hi: i64) -> Rational {
        rational::int(self.range(lo, hi))
    }
}

/// Span of `d` random vectors in `ℚ^n` with entries in `-3..=3`, redrawn until
/// the dimension is exactly `d`.
pub fn random_subspace(seed: Seed, n: usize, d: usize) -> Result<(Subspace, Seed)> {
    if n == 0 || n > 8 {
        return Err(Error::OutOfRange(format!("ambient dimension {n} not in 1..=8")));
    }
    if d > n {
        return Err(Error::OutOfRange(format!("dimension {d} exceeds ambient {n}")));
    }
    let labels = Labels::numbered(n)?;
    let mut stream = Stream(seed);
    loop {
        let rows: Vec<Vec<Rational>> = (0..d)
            .map(|_| (0..n).map(|_| stream.rational(-3, 3)).collect())
            .collect();
        if rref(rows.clone()).len() == d {
            return Ok((Subspace::span(&labels, &rows)?, stream.0));
        }
    }
}

/// A sublattice of `ℚ^n` built as the span of disjoint positive vectors.
///
/// Each label is sent to the kernel (draw 0) or to clan `k` (draw `k` in
/// `1..=n`); each nonempty clan, in order of `k`, receives a generator with
/// entries in `1..=4`.
pub fn random_sublattice(seed: Seed, n: usize) -> Result<(Subspace, Seed)> {
    if n == 0 {
        return Err(Error::EmptyLabels);
    }
    let labels = Labels::numbered(n)?;
    let mut stream = Stream(seed);
    let assignment: Vec<usize> = (0..n).map(|_| stream.range(0, n as i64) as usize).collect();
    let mut generators = Vec::new();
    for clan in 1..=n {
        if !assignment.contains(&clan) {
            continue;
        }
        let generator = assignment
            .iter()
            .map(|&a| if a == clan { stream.rational(1, 4) } else { Rational::zero() })
            .collect();
        generators.push(generator);
    }
    Ok((Subspace::span(&labels, &generators)?, stream.0))
}

/// A functional on `ℚ^n` with coefficients in `-3..=3`.
pub fn random_functional(seed: Seed, n: usize) -> Result<(Functional, Seed)> {
    let labels = Labels::numbered(n)?;
    let mut stream = Stream(seed);
    let coeffs = (0..n).map(|_| stream.rational(-3, 3)).collect();
    Ok((Functional::new(&labels, coeffs)?, stream.0))
}

/// A piecewise-affine function with `k` interior breakpoints drawn as distinct
/// multiples of `1 / (4(k+1))` and values in `-2..=2`, canonicalized.
pub fn random_pl(seed: Seed, k: usize) -> Result<(PLFunction, Seed)> {
    let denominator = 4 * (k as i64 + 1);
    let mut stream = Stream(seed);
    let mut numerators: Vec<i64> = Vec::with_capacity(k);
    while numerators.len() < k {
        let p = stream.range(1, denominator - 1);
        if !numerators.contains(&p) {
            numerators.push(p);
        }
    }
    numerators.sort_unstable();
    let breakpoints: Vec<Rational> = std::iter::once(rational::int(0))
        .chain(numerators.iter().map(|&p| rational::ratio(p, denominator)))
        .chain(std::iter::once(rational::int(1)))
        .collect();
    let values = (0..k + 2).map(|_| stream.rational(-2, 2)).collect();
    Ok((PLFunction::new(breakpoints, values)?, stream.0))
}
