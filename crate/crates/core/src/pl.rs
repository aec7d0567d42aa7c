//! Exact piecewise-affine functions on `[0, 1]`.
//!
//! A function is stored by its values at rational breakpoints, with linear
//! interpolation in between. The canonical form has no removable breakpoint,
//! so derived equality is function equality.
//!
//! The subspace `J` of functions that vanish on some `[0, r]` is an ideal of
//! codimension 2 (every `f` is `f(0)·𝟙 + f'(0⁺)·f₀` modulo `J`) that is not
//! uniformly closed: `w_n = (f₀ − 𝟙/n)⁺` lies in `J` and `‖f₀ − w_n‖_𝟙 = 1/n`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::ENorm;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLFunction {
    breakpoints: Vec<Rational>,
    values: Vec<Rational>,
}

impl PLFunction {
    /// Validates and canonicalizes. Breakpoints must increase strictly from 0
    /// to 1.
    pub fn new(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: breakpoints.len(),
                found: values.len(),
            });
        }
        if breakpoints.len() < 2 {
            return Err(Error::InvalidArgument("need at least the breakpoints 0 and 1".into()));
        }
        if !breakpoints[0].is_zero() || !breakpoints[breakpoints.len() - 1].is_one() {
            return Err(Error::InvalidArgument("breakpoints must start at 0 and end at 1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("breakpoints must be strictly increasing".into()));
        }
        Ok(Self::canonical(breakpoints, values))
    }

    fn canonical(breakpoints: Vec<Rational>, values: Vec<Rational>) -> Self {
        let mut xs: Vec<Rational> = Vec::with_capacity(breakpoints.len());
        let mut ys: Vec<Rational> = Vec::with_capacity(values.len());
        for (x, y) in breakpoints.into_iter().zip(values) {
            while xs.len() >= 2 {
                let k = xs.len();
                let collinear =
                    (&ys[k - 1] - &ys[k - 2]) * (&x - &xs[k - 1]) == (&y - &ys[k - 1]) * (&xs[k - 1] - &xs[k - 2]);
                if !collinear {
                    break;
                }
                xs.pop();
                ys.pop();
            }
            xs.push(x);
            ys.push(y);
        }
        PLFunction {
            breakpoints: xs,
            values: ys,
        }
    }

    pub fn affine(at_zero: Rational, at_one: Rational) -> Self {
        PLFunction {
            breakpoints: vec![Rational::zero(), Rational::one()],
            values: vec![at_zero, at_one],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::affine(c.clone(), c)
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    /// The constant function `𝟙`.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `f₀(t) = t`.
    pub fn identity() -> Self {
        Self::affine(Rational::zero(), Rational::one())
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if t.is_negative() || *t > Rational::one() {
            return Err(Error::OutOfRange(format!("{t} is outside [0, 1]")));
        }
        Ok(self.at(t))
    }

    fn at(&self, t: &Rational) -> Rational {
        match self.breakpoints.binary_search(t) {
            Ok(i) => self.values[i].clone(),
            Err(i) => {
                let (x0, x1) = (&self.breakpoints[i - 1], &self.breakpoints[i]);
                let (y0, y1) = (&self.values[i - 1], &self.values[i]);
                y0 + (y1 - y0) * (t - x0) / (x1 - x0)
            }
        }
    }

    /// Union of both breakpoint lists with each function's values on it.
    fn refine(&self, other: &PLFunction) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
        let mut xs: Vec<Rational> = self.breakpoints.iter().chain(&other.breakpoints).cloned().collect();
        xs.sort();
        xs.dedup();
        let a = xs.iter().map(|x| self.at(x)).collect();
        let b = xs.iter().map(|x| other.at(x)).collect();
        (xs, a, b)
    }

    /// `a·f + b·g`.
    pub fn linear(a: &Rational, f: &PLFunction, b: &Rational, g: &PLFunction) -> PLFunction {
        let (xs, fv, gv) = f.refine(g);
        let values = fv.iter().zip(&gv).map(|(x, y)| a * x + b * y).collect();
        Self::canonical(xs, values)
    }

    pub fn add(&self, other: &PLFunction) -> PLFunction {
        Self::linear(&Rational::one(), self, &Rational::one(), other)
    }

    pub fn sub(&self, other: &PLFunction) -> PLFunction {
        Self::linear(&Rational::one(), self, &-Rational::one(), other)
    }

    pub fn scale(&self, c: &Rational) -> PLFunction {
        Self::canonical(self.breakpoints.clone(), self.values.iter().map(|v| v * c).collect())
    }

    /// Pointwise max (`pick_max`) or min, with every crossing point inserted.
    fn envelope(&self, other: &PLFunction, pick_max: bool) -> PLFunction {
        let (xs, fv, gv) = self.refine(other);
        let mut out_x = Vec::with_capacity(xs.len() * 2);
        let mut out_y = Vec::with_capacity(xs.len() * 2);
        let pick = |a: &Rational, b: &Rational| {
            if (a >= b) == pick_max {
                a.clone()
            } else {
                b.clone()
            }
        };
        for i in 0..xs.len() {
            if i > 0 {
                let d0 = &fv[i - 1] - &gv[i - 1];
                let d1 = &fv[i] - &gv[i];
                if (&d0 * &d1).is_negative() {
                    let t = &xs[i - 1] + (&xs[i] - &xs[i - 1]) * &d0 / (&d0 - &d1);
                    let y = self.at(&t);
                    out_x.push(t);
                    out_y.push(y);
                }
            }
            out_x.push(xs[i].clone());
            out_y.push(pick(&fv[i], &gv[i]));
        }
        Self::canonical(out_x, out_y)
    }

    pub fn join(&self, other: &PLFunction) -> PLFunction {
        self.envelope(other, true)
    }

    pub fn meet(&self, other: &PLFunction) -> PLFunction {
        self.envelope(other, false)
    }

    pub fn neg(&self) -> PLFunction {
        self.scale(&-Rational::one())
    }

    pub fn abs(&self) -> PLFunction {
        self.join(&self.neg())
    }

    pub fn pos_part(&self) -> PLFunction {
        self.join(&Self::zero())
    }

    pub fn neg_part(&self) -> PLFunction {
        self.neg().join(&Self::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `f ≥ 0` everywhere.
    pub fn is_positive(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Pointwise `self ≤ other`; checking the common breakpoints suffices.
    pub fn le(&self, other: &PLFunction) -> bool {
        let (_, a, b) = self.refine(other);
        a.iter().zip(&b).all(|(x, y)| x <= y)
    }

    /// `f` vanishes on `[0, r]` for some `r > 0`: its first piece is zero.
    pub fn vanishes_near_zero(&self) -> bool {
        self.values[0].is_zero() && self.values[1].is_zero()
    }

    /// Slope of the first piece.
    pub fn right_slope_at_zero(&self) -> Rational {
        (&self.values[1] - &self.values[0]) / (&self.breakpoints[1] - &self.breakpoints[0])
    }
}

/// `‖f‖_e = inf{λ > 0 : |f| ≤ λe}` for `e ≥ 0`.
///
/// On each piece of the common refinement `f/e` is a linear fractional
/// function, hence monotone where `e > 0`, so the supremum of `|f|/e` is taken
/// at a breakpoint. Where `e` vanishes at a breakpoint `f` must vanish too; if
/// it does, `f/e` is constant on the adjacent pieces and the neighbouring
/// breakpoint already carries the value.
pub fn pl_e_norm(f: &PLFunction, e: &PLFunction) -> Result<ENorm> {
    if !e.is_positive() {
        return Err(Error::NotPositive("weight function takes a negative value".into()));
    }
    let (_, fv, ev) = f.refine(e);
    let mut norm = Rational::zero();
    for (fi, ei) in fv.iter().zip(&ev) {
        if ei.is_zero() {
            if !fi.is_zero() {
                return Ok(ENorm::Infinite);
            }
        } else {
            let ratio = fi.abs() / ei;
            if ratio > norm {
                norm = ratio;
            }
        }
    }
    Ok(ENorm::Finite(norm))
}

/// `w_n = (f₀ − 𝟙/n)⁺`: vanishes on `[0, 1/n]` and is within `1/n` of `f₀`
/// in the `𝟙`-norm.
pub fn counterexample_witness(n: u64) -> Result<PLFunction> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let shift = Rational::new(1.into(), n.into());
    Ok(PLFunction::identity().sub(&PLFunction::constant(shift)).pos_part())
}

/// `f − f(0)·𝟙 − f'(0⁺)·f₀`, which always vanishes near zero.
pub fn residue_in_ideal(f: &PLFunction) -> PLFunction {
    let at_zero = PLFunction::constant(f.values()[0].clone());
    let slope = f.right_slope_at_zero();
    f.sub(&at_zero).sub(&PLFunction::identity().scale(&slope))
}

pub fn format_points(f: &PLFunction) -> (Vec<String>, Vec<String>) {
    (
        f.breakpoints().iter().map(rational::format).collect(),
        f.values().iter().map(rational::format).collect(),
    )
}
