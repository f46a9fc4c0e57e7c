//! Series multiplied by a symbolic power of `z`.
//!
//! `z^c` is never evaluated. In theta mode the exponent `c` is stored, and
//! `theta(z^c) = c z^c`. In q-shift mode only the eigenvalue `mu` of the
//! shift on `z^c` is stored, `sigma_q(z^c) = mu z^c`, which is all the
//! q-difference calculus needs even when `c` is irrational.

use num_traits::{One, Zero};

use crate::algebra::{Rational, Series};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Offset {
    /// Exponent `c` of `z^c` (theta mode).
    Exponent(Rational),
    /// Eigenvalue `mu` with `sigma_q(z^c) = mu z^c` (q-shift mode).
    Eigenvalue(Rational),
}

impl Offset {
    pub fn trivial_exponent() -> Self {
        Offset::Exponent(Rational::zero())
    }

    pub fn trivial_eigenvalue() -> Self {
        Offset::Eigenvalue(Rational::one())
    }

    /// True when `z^c1 * z^c2 = 1`.
    pub fn cancels(&self, other: &Offset) -> bool {
        match (self, other) {
            (Offset::Exponent(a), Offset::Exponent(b)) => (a + b).is_zero(),
            (Offset::Eigenvalue(a), Offset::Eigenvalue(b)) => (a * b).is_one(),
            _ => false,
        }
    }

    pub fn same_kind(&self, other: &Offset) -> bool {
        matches!(
            (self, other),
            (Offset::Exponent(_), Offset::Exponent(_)) | (Offset::Eigenvalue(_), Offset::Eigenvalue(_))
        )
    }
}

/// `scalar * z^offset * body(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedSeries {
    pub offset: Offset,
    pub scalar: Rational,
    pub body: Series,
}

impl TaggedSeries {
    pub fn new(offset: Offset, scalar: Rational, body: Series) -> Self {
        TaggedSeries { offset, scalar, body }
    }

    pub fn with_exponent(c: Rational, body: Series) -> Self {
        TaggedSeries::new(Offset::Exponent(c), Rational::one(), body)
    }

    pub fn with_eigenvalue(mu: Rational, body: Series) -> Self {
        TaggedSeries::new(Offset::Eigenvalue(mu), Rational::one(), body)
    }

    pub fn order(&self) -> usize {
        self.body.order()
    }

    pub fn zero_like(&self) -> Self {
        TaggedSeries::new(self.offset.clone(), Rational::one(), Series::zero(self.order()))
    }

    /// `scalar * body`, dropping the `z^c` factor.
    pub fn folded_body(&self) -> Series {
        if self.scalar.is_one() {
            self.body.clone()
        } else {
            self.body.scale(&self.scalar)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() || self.body.is_zero()
    }

    /// `theta(z^c phi) = z^c (theta + c) phi`.
    pub fn theta(&self) -> Result<Self> {
        let Offset::Exponent(c) = &self.offset else {
            return Err(Error::ModeMismatch("theta applied to a q-shift tagged series".into()));
        };
        let body = &self.body.theta() + &self.body.scale(c);
        Ok(TaggedSeries::new(self.offset.clone(), self.scalar.clone(), body))
    }

    /// `sigma_q(z^c phi) = mu z^c phi(q z)`.
    pub fn q_shift(&self, q: &Rational) -> Result<Self> {
        let Offset::Eigenvalue(mu) = &self.offset else {
            return Err(Error::ModeMismatch("q-shift applied to a theta tagged series".into()));
        };
        Ok(TaggedSeries::new(
            self.offset.clone(),
            &self.scalar * mu,
            self.body.scale_var(q),
        ))
    }

    /// Multiplies the body by a plain series.
    pub fn mul_series(&self, s: &Series) -> Self {
        TaggedSeries::new(self.offset.clone(), self.scalar.clone(), &self.body * s)
    }

    /// Sum of two tagged series with the same offset; scalars are folded.
    pub fn add(&self, other: &TaggedSeries) -> Result<Self> {
        if self.offset != other.offset {
            return Err(Error::OffsetMismatch);
        }
        Ok(TaggedSeries::with_offset_body(
            self.offset.clone(),
            &self.folded_body() + &other.folded_body(),
        ))
    }

    fn with_offset_body(offset: Offset, body: Series) -> Self {
        TaggedSeries::new(offset, Rational::one(), body)
    }

    /// Product of two tagged series whose offsets cancel, as a plain series.
    pub fn pair(&self, other: &TaggedSeries) -> Result<Series> {
        if !self.offset.cancels(&other.offset) {
            return Err(Error::OffsetMismatch);
        }
        let scalar = &self.scalar * &other.scalar;
        Ok((&self.body * &other.body).scale(&scalar))
    }
}
