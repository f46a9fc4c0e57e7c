//! Square matrices over `Q(z)`.
//!
//! Inversion and determinants clear row denominators and run fraction-free
//! (Bareiss) elimination on the resulting polynomial matrix; every division
//! in the elimination is exact.

use std::fmt;
use std::ops::Mul;

use crate::algebra::{Poly, RatFunc, Series};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFuncMatrix {
    n: usize,
    entries: Vec<RatFunc>,
}

impl RatFuncMatrix {
    pub fn zeros(n: usize) -> Self {
        RatFuncMatrix {
            n,
            entries: vec![RatFunc::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatFuncMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix rows must form a square".into()));
        }
        Ok(RatFuncMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RatFuncMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RatFunc]> {
        self.entries.chunks(self.n)
    }

    pub fn transpose(&self) -> Self {
        RatFuncMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == RatFuncMatrix::identity(self.n)
    }

    /// Entry-wise Maclaurin expansions.
    pub fn series(&self, order: usize) -> Result<Vec<Vec<Series>>> {
        self.rows()
            .map(|row| row.iter().map(|e| e.series(order)).collect())
            .collect()
    }

    /// Each row multiplied by the lcm of its denominators, and those lcms.
    fn clear_denominators(&self) -> (Vec<Vec<Poly>>, Vec<Poly>) {
        let mut polys = Vec::with_capacity(self.n);
        let mut scales = Vec::with_capacity(self.n);
        for row in self.rows() {
            let l = row.iter().fold(Poly::one(), |acc, e| lcm(&acc, e.den()));
            polys.push(
                row.iter()
                    .map(|e| (&l * e.num()).exact_div(e.den()).expect("lcm is a multiple"))
                    .collect(),
            );
            scales.push(l);
        }
        (polys, scales)
    }

    pub fn det(&self) -> RatFunc {
        let (mut a, scales) = self.clear_denominators();
        let Some(sign) = bareiss(&mut a, self.n) else {
            return RatFunc::zero();
        };
        let d = if self.n == 0 { Poly::one() } else { a[self.n - 1][self.n - 1].clone() };
        let denom = scales.iter().fold(Poly::one(), |acc, s| &acc * s);
        RatFunc::new(d.scale(&crate::algebra::int(sign)), denom).expect("nonzero row scales")
    }

    /// Exact inverse. Solves `P X = S` where `P` is the row-cleared matrix
    /// and `S` the diagonal of row scales.
    pub fn inverse(&self) -> Result<RatFuncMatrix> {
        let n = self.n;
        let (polys, scales) = self.clear_denominators();
        let mut aug: Vec<Vec<Poly>> = polys
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| if i == j { scales[i].clone() } else { Poly::zero() }));
                row
            })
            .collect();
        bareiss(&mut aug, n).ok_or(Error::Singular)?;
        let mut x = vec![vec![RatFunc::zero(); n]; n];
        for i in (0..n).rev() {
            let pivot = RatFunc::from(aug[i][i].clone());
            for c in 0..n {
                let mut acc = RatFunc::from(aug[i][n + c].clone());
                for j in i + 1..n {
                    if !aug[i][j].is_zero() {
                        acc = &acc - &(&RatFunc::from(aug[i][j].clone()) * &x[j][c]);
                    }
                }
                x[i][c] = acc.checked_div(&pivot)?;
            }
        }
        RatFuncMatrix::from_rows(x)
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = Poly::gcd(a, b).expect("nonzero denominators");
    (a * b).exact_div(&g).expect("gcd divides").monic()
}

/// Fraction-free forward elimination on the first `n` columns of `a`,
/// applied to every column. Returns the permutation sign, or `None` when a
/// pivot column is entirely zero.
fn bareiss(a: &mut [Vec<Poly>], n: usize) -> Option<i64> {
    let width = a.first().map_or(0, Vec::len);
    let mut prev = Poly::one();
    let mut sign = 1;
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    Some(sign)
}

impl Mul<&RatFuncMatrix> for &RatFuncMatrix {
    type Output = RatFuncMatrix;
    fn mul(self, rhs: &RatFuncMatrix) -> RatFuncMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        RatFuncMatrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(RatFunc::zero(), |acc, k| &acc + &(self.get(i, k) * rhs.get(k, j)))
        })
    }
}

impl fmt::Display for RatFuncMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            for (j, e) in row.iter().enumerate() {
                writeln!(f, "[{i},{j}] {e}")?;
            }
        }
        Ok(())
    }
}

/// Exact inverse over the rational-function field.
pub fn matrix_invert(m: &RatFuncMatrix) -> Result<RatFuncMatrix> {
    m.inverse()
}

/// Determinant of a square matrix of truncated series, by cofactor expansion
/// along the first row.
pub fn series_det(m: &[Vec<Series>]) -> Series {
    let n = m.len();
    match n {
        0 => Series::one(0),
        1 => m[0][0].clone(),
        _ => {
            let order = m.iter().flatten().map(Series::order).min().unwrap_or(0);
            let mut acc = Series::zero(order);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Series>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &series_det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Poly};

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        let p = |v: &[i64]| Poly::new(v.iter().map(|&c| int(c)).collect());
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = RatFuncMatrix::identity(3);
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(id.det(), RatFunc::one());
    }

    #[test]
    fn two_by_two() {
        let m = RatFuncMatrix::from_rows(vec![
            vec![rf(&[1], &[1, -1]), rf(&[0, 1], &[1])],
            vec![rf(&[2], &[1]), rf(&[1, 1], &[1, 2])],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
        // det = (1+z)/((1-z)(1+2z)) - 2z
        let expected = &(&rf(&[1], &[1, -1]) * &rf(&[1, 1], &[1, 2])) - &rf(&[0, 2], &[1]);
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn needs_pivoting() {
        let m = RatFuncMatrix::from_rows(vec![
            vec![RatFunc::zero(), rf(&[1, -1], &[1])],
            vec![rf(&[-1, 1], &[1]), RatFunc::zero()],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(m.det(), rf(&[1, -2, 1], &[1]));
    }

    #[test]
    fn singular_rejected() {
        let m = RatFuncMatrix::from_rows(vec![
            vec![rf(&[1, 1], &[1]), rf(&[2, 2], &[1])],
            vec![rf(&[1], &[1]), rf(&[2], &[1])],
        ])
        .unwrap();
        assert!(matches!(m.inverse(), Err(Error::Singular)));
        assert!(m.det().is_zero());
    }

    #[test]
    fn series_determinant() {
        let s = |v: &[i64]| Series::new(v.iter().map(|&c| int(c)).collect()).unwrap();
        let m = vec![vec![s(&[1, 1]), s(&[2, 0])], vec![s(&[0, 1]), s(&[1, 3])]];
        // (1+z)(1+3z) - 2z = 1 + 2z (order 1)
        assert_eq!(series_det(&m), s(&[1, 2]));
    }
}
