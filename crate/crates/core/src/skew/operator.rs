//! Linear operators `A_r D^r + ... + A_0` with rational-function
//! coefficients, where `D` is either the Euler derivation `theta = z d/dz`
//! or the q-shift `sigma_q f(z) = f(qz)`. Coefficients sit to the left of
//! the powers of `D`.

use std::fmt;

use num_traits::{One, Zero};

use super::tagged::{Offset, TaggedSeries};
use crate::algebra::{RatFunc, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Theta,
    QShift(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewOperator {
    mode: Mode,
    coeffs: Vec<RatFunc>,
}

impl SkewOperator {
    /// Trailing zero coefficients are dropped; the zero operator is rejected.
    /// A q-shift base must satisfy `0 < q < 1`.
    pub fn new(mode: Mode, mut coeffs: Vec<RatFunc>) -> Result<Self> {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::DegenerateOperator("zero operator".into()));
        }
        if let Mode::QShift(q) = &mode {
            if *q <= Rational::zero() || *q >= Rational::one() {
                return Err(Error::InvalidArgument(format!("q = {q} is outside (0, 1)")));
            }
        }
        Ok(SkewOperator { mode, coeffs })
    }

    pub fn theta(coeffs: Vec<RatFunc>) -> Result<Self> {
        SkewOperator::new(Mode::Theta, coeffs)
    }

    pub fn q_shift(q: Rational, coeffs: Vec<RatFunc>) -> Result<Self> {
        SkewOperator::new(Mode::QShift(q), coeffs)
    }

    pub fn mode(&self) -> &Mode {
        &self.mode
    }

    /// The shift base in q-shift mode.
    pub fn base(&self) -> Option<&Rational> {
        match &self.mode {
            Mode::QShift(q) => Some(q),
            Mode::Theta => None,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// `A_j`, zero past the order.
    pub fn coeff(&self, j: usize) -> RatFunc {
        self.coeffs.get(j).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn scale(&self, u: &RatFunc) -> Result<SkewOperator> {
        SkewOperator::new(self.mode.clone(), self.coeffs.iter().map(|a| a * u).collect())
    }

    /// `D` applied to a coefficient: `theta(a)` or `a(qz)`.
    pub fn act_on_coeff(&self, a: &RatFunc, times: i64) -> RatFunc {
        match &self.mode {
            Mode::Theta => {
                assert!(times >= 0, "theta has no inverse on coefficients");
                (0..times).fold(a.clone(), |acc, _| acc.theta())
            }
            Mode::QShift(q) => a.q_shift(q, times),
        }
    }

    fn check_pole_free(&self) -> Result<()> {
        if self.coeffs.iter().any(|a| a.den().coeff(0).is_zero()) {
            return Err(Error::PoleAtOrigin);
        }
        Ok(())
    }

    /// Applies the operator to a tagged series.
    pub fn apply(&self, s: &TaggedSeries) -> Result<TaggedSeries> {
        match (&self.mode, &s.offset) {
            (Mode::Theta, Offset::Exponent(_)) | (Mode::QShift(_), Offset::Eigenvalue(_)) => {}
            _ => return Err(Error::ModeMismatch("operator and series modes differ".into())),
        }
        self.check_pole_free()?;
        let n = s.order();
        let mut power = s.clone();
        let mut acc = s.zero_like();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                power = self.step(&power)?;
            }
            if !a.is_zero() {
                acc = acc.add(&power.mul_series(&a.series(n)?))?;
            }
        }
        Ok(acc)
    }

    /// One application of `D` to a tagged series.
    pub fn step(&self, s: &TaggedSeries) -> Result<TaggedSeries> {
        match &self.mode {
            Mode::Theta => s.theta(),
            Mode::QShift(q) => s.q_shift(q),
        }
    }

    /// Formal adjoint `sum (-theta)^j o A_j`, expanded to standard form with
    /// `theta o a = a o theta + theta(a)`.
    pub fn theta_dual(&self) -> Result<SkewOperator> {
        if self.mode != Mode::Theta {
            return Err(Error::ModeMismatch("theta dual of a q-shift operator".into()));
        }
        let r = self.order();
        let mut total = vec![RatFunc::zero(); r + 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            // (-theta)^j o a, built up one left factor at a time.
            let mut term = vec![a.clone()];
            for _ in 0..j {
                let mut next = vec![RatFunc::zero(); term.len() + 1];
                for (k, b) in term.iter().enumerate() {
                    next[k] = &next[k] - &b.theta();
                    next[k + 1] = &next[k + 1] - b;
                }
                term = next;
            }
            for (k, b) in term.into_iter().enumerate() {
                total[k] = &total[k] + &b;
            }
        }
        SkewOperator::theta(total)
    }

    /// Dual q-shift operator
    /// `sigma^(r-1)(A_0) sigma^r + sigma^(r-2)(A_1) sigma^(r-1) + ... + A_(r-1) sigma + sigma^(-1)(A_r)`.
    pub fn q_dual(&self) -> Result<SkewOperator> {
        let Mode::QShift(q) = &self.mode else {
            return Err(Error::ModeMismatch("q-dual of a theta operator".into()));
        };
        let r = self.order();
        if r == 0 || self.coeffs[0].is_zero() {
            return Err(Error::DegenerateOperator("q-dual needs A_0 != 0 and A_r != 0".into()));
        }
        let coeffs = (0..=r)
            .map(|k| self.coeffs[r - k].q_shift(q, k as i64 - 1))
            .collect();
        SkewOperator::q_shift(q.clone(), coeffs)
    }

    /// Dual in either mode.
    pub fn dual(&self) -> Result<SkewOperator> {
        match self.mode {
            Mode::Theta => self.theta_dual(),
            Mode::QShift(_) => self.q_dual(),
        }
    }

    /// If `self = u * other` for a nonzero constant `u`, returns `u`.
    pub fn unit_multiple_of(&self, other: &SkewOperator) -> Option<Rational> {
        if self.mode != other.mode || self.order() != other.order() {
            return None;
        }
        let lead = self.coeffs.last()?.checked_div(other.coeffs.last()?).ok()?;
        let u = lead.as_constant()?;
        if u.is_zero() {
            return None;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| *a == b.scale(&u))
            .then_some(u)
    }
}

impl fmt::Display for SkewOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.mode {
            Mode::Theta => "theta",
            Mode::QShift(_) => "sigma",
        };
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a}) {d}")?,
                _ => write!(f, "({a}) {d}^{j}")?,
            }
        }
        Ok(())
    }
}

/// Formal adjoint of a theta operator.
pub fn dual_operator(l: &SkewOperator) -> Result<SkewOperator> {
    l.theta_dual()
}

/// Dual of a q-shift operator.
pub fn q_dual_operator(l: &SkewOperator) -> Result<SkewOperator> {
    l.q_dual()
}

/// Applies a theta operator to a tagged series.
pub fn apply_theta(op: &SkewOperator, s: &TaggedSeries) -> Result<TaggedSeries> {
    if op.mode != Mode::Theta {
        return Err(Error::ModeMismatch("apply_theta on a q-shift operator".into()));
    }
    op.apply(s)
}

/// Applies a q-shift operator to a tagged series.
pub fn apply_qshift(op: &SkewOperator, s: &TaggedSeries) -> Result<TaggedSeries> {
    if op.mode == Mode::Theta {
        return Err(Error::ModeMismatch("apply_qshift on a theta operator".into()));
    }
    op.apply(s)
}
