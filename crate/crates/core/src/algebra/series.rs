//! Power series in `z` truncated at a fixed order.
//!
//! A series of order `N` stores the coefficients of `z^0..=z^N`. Binary
//! operations return the smaller of the two orders; nothing is padded.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{forward_owned, Poly};
use super::rational::{pow, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Order is `coeffs.len() - 1`; an empty vector is rejected.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("series needs at least one coefficient".into()));
        }
        Ok(Series { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Builds `c_0..=c_order` from a coefficient function.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Series with `c_0 = 1` and `c_(n+1) / c_n = num(n) / den(n)`, built
    /// from integer running products and normalized once per coefficient.
    pub fn from_term_ratios(
        order: usize,
        mut ratio: impl FnMut(usize) -> Result<(BigInt, BigInt)>,
    ) -> Result<Series> {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(Rational::one());
        let (mut num, mut den) = (BigInt::one(), BigInt::one());
        for n in 0..order {
            let (a, b) = ratio(n)?;
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            num *= a;
            den *= b;
            coeffs.push(Rational::new(num.clone(), den.clone()));
        }
        Ok(Series { coeffs })
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Series::from_fn(order, |k| p.coeff(k))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every coefficient of `z^1..=z^upto` vanishes.
    pub fn is_constant_through(&self, upto: usize) -> bool {
        self.coeffs[1..=upto.min(self.order())].iter().all(Zero::is_zero)
    }

    /// Index of the first coefficient that differs, up to the common order.
    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `z d/dz`: `c_n -> n c_n`.
    pub fn theta(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * Rational::from_integer(n.into()))
                .collect(),
        }
    }

    /// `f(s z)`: `c_n -> s^n c_n`.
    pub fn scale_var(&self, s: &Rational) -> Series {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &factor);
            factor *= s;
        }
        Series { coeffs: out }
    }

    /// `f(q^k z)`.
    pub fn q_shift(&self, q: &Rational, k: i64) -> Series {
        self.scale_var(&pow(q, k))
    }

    /// Multiplicative inverse through the same order.
    pub fn invert(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(Series { coeffs: out })
    }
}

impl Add<&Series> for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Series> for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Integer numerators over the lcm of the denominators.
fn common_denominator(cs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = cs.iter().map(|c| c.numer() * (&d / c.denom())).collect();
    (nums, d)
}

fn powers(x: &BigInt, n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    for k in 0..n {
        let next = &out[k] * x;
        out.push(next);
    }
    out
}

fn convolve(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            let mut acc = BigInt::zero();
            for i in 0..=k {
                if !a[i].is_zero() && !b[k - i].is_zero() {
                    acc += &a[i] * &b[k - i];
                }
            }
            acc
        })
        .collect()
}

/// A series held as integer numerators over one shared denominator, for
/// sums of many products where normalizing each coefficient would dominate.
#[derive(Clone, Debug)]
pub struct IntegerSeries {
    nums: Vec<BigInt>,
    den: BigInt,
}

impl IntegerSeries {
    /// `scalar * s` in integer form.
    pub fn new(s: &Series, scalar: &Rational) -> Self {
        let (nums, d) = common_denominator(&s.coeffs);
        IntegerSeries {
            nums: nums.into_iter().map(|n| n * scalar.numer()).collect(),
            den: d * scalar.denom(),
        }
    }

    pub fn order(&self) -> usize {
        self.nums.len() - 1
    }

    /// `theta(z^c s) / z^c`: coefficient `n` times `n + c`.
    pub fn theta_with_exponent(&self, c: &Rational) -> Self {
        IntegerSeries {
            nums: self
                .nums
                .iter()
                .enumerate()
                .map(|(n, x)| x * (c.denom() * BigInt::from(n) + c.numer()))
                .collect(),
            den: &self.den * c.denom(),
        }
    }

    /// `mu s(q z)`.
    pub fn q_shift(&self, q: &Rational, mu: &Rational) -> Self {
        let order = self.order();
        let num_pows = powers(q.numer(), order);
        let den_pows = powers(q.denom(), order);
        IntegerSeries {
            nums: self
                .nums
                .iter()
                .enumerate()
                .map(|(n, x)| x * &num_pows[n] * &den_pows[order - n] * mu.numer())
                .collect(),
            den: &self.den * &den_pows[order] * mu.denom(),
        }
    }

    pub fn to_series(&self) -> Series {
        Series {
            coeffs: self.nums.iter().map(|x| Rational::new(x.clone(), self.den.clone())).collect(),
        }
    }

    /// `sum_i w_i a_i b_i`, truncated at the smallest order involved.
    pub fn weighted_product_sum(terms: &[(Rational, &IntegerSeries, &IntegerSeries)]) -> Result<Series> {
        let n = terms
            .iter()
            .map(|(_, a, b)| a.order().min(b.order()))
            .min()
            .ok_or_else(|| Error::InvalidArgument("empty sum".into()))?;
        let dens: Vec<BigInt> = terms
            .iter()
            .map(|(w, a, b)| w.denom() * &a.den * &b.den)
            .collect();
        let common = dens.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
        let mut acc = vec![BigInt::zero(); n + 1];
        for ((w, a, b), d) in terms.iter().zip(&dens) {
            if w.is_zero() {
                continue;
            }
            let factor = w.numer() * (&common / d);
            for (slot, c) in acc.iter_mut().zip(convolve(&a.nums, &b.nums, n)) {
                *slot += c * &factor;
            }
        }
        Series::new(acc.into_iter().map(|c| Rational::new(c, common.clone())).collect())
    }
}

impl Mul<&Series> for &Series {
    type Output = Series;
    /// Convolution over integers, normalized once per output coefficient.
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let (a, da) = common_denominator(&self.coeffs[..=n]);
        let (b, db) = common_denominator(&rhs.coeffs[..=n]);
        let den = da * db;
        Series {
            coeffs: convolve(&a, &b, n)
                .into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned!(Series, Add::add, Sub::sub, Mul::mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}
