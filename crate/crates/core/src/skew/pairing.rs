//! Bilinear pairings between solutions of an operator and of its dual.
//!
//! For `L f = 0` and `L* g = 0` the pairing
//! `Omega(g, f) = sum_{i,j} Psi[i][j] D^i(g) D^j(f)` is a constant. The
//! pairing matrices are built here; the pairings are evaluated on tagged
//! series.

use num_traits::{One, Zero};

use super::matrix::{series_det, RatFuncMatrix};
use super::operator::{Mode, SkewOperator};
use super::tagged::{Offset, TaggedSeries};
use crate::algebra::{int, IntegerSeries, RatFunc, Rational, Series};
use crate::error::{Error, Result};
use crate::par::{self, Execution};

fn binomial(n: usize, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, t| acc * int((n - t) as i64) / int((t + 1) as i64))
}

/// Pairing matrix of a theta operator of order `r`:
/// `Psi[i][j] = sum_{l=0}^{r-1-i-j} (-1)^(i+l) C(l+i, i) theta^l(A_{i+j+l+1})`,
/// zero for `i + j >= r`.
pub fn psi_matrix(l: &SkewOperator) -> Result<RatFuncMatrix> {
    if *l.mode() != Mode::Theta {
        return Err(Error::ModeMismatch("psi_matrix needs a theta operator".into()));
    }
    let r = l.order();
    // theta^m(A_k) for all needed m, k.
    let iterated: Vec<Vec<RatFunc>> = l
        .coeffs()
        .iter()
        .map(|a| {
            let mut v = vec![a.clone()];
            for _ in 1..r {
                let next = v.last().unwrap().theta();
                v.push(next);
            }
            v
        })
        .collect();
    Ok(RatFuncMatrix::from_fn(r, |i, j| {
        if i + j >= r {
            return RatFunc::zero();
        }
        (0..=r - 1 - i - j).fold(RatFunc::zero(), |acc, m| {
            let mut c = binomial(m + i, i);
            if (i + m) % 2 == 1 {
                c = -c;
            }
            &acc + &iterated[i + j + m + 1][m].scale(&c)
        })
    }))
}

/// Pairing matrix of a q-shift operator of order `r`. Row 0 holds
/// `-sigma^(-1)(A_r)` in the last column; row `k >= 1` holds
/// `sigma^(k-1)(A_0), ..., sigma^(k-1)(A_(r-1-k))` in columns `k-1..=r-2`.
pub fn psi_q_matrix(l: &SkewOperator) -> Result<RatFuncMatrix> {
    let Mode::QShift(q) = l.mode() else {
        return Err(Error::ModeMismatch("psi_q_matrix needs a q-shift operator".into()));
    };
    let r = l.order();
    if r == 0 || l.coeff(0).is_zero() {
        return Err(Error::DegenerateOperator("pairing needs A_0 != 0 and A_r != 0".into()));
    }
    let mut m = RatFuncMatrix::zeros(r);
    m.set(0, r - 1, -l.coeff(r).q_shift(q, -1));
    for k in 1..r {
        for j in 0..=r - 1 - k {
            m.set(k, k - 1 + j, l.coeff(j).q_shift(q, k as i64 - 1));
        }
    }
    Ok(m)
}

/// The pairing matrix matching the operator's mode.
pub fn pairing_matrix(l: &SkewOperator) -> Result<RatFuncMatrix> {
    match l.mode() {
        Mode::Theta => psi_matrix(l),
        Mode::QShift(_) => psi_q_matrix(l),
    }
}

/// `[s, D s, ..., D^(count-1) s]`.
pub fn iterates(l: &SkewOperator, s: &TaggedSeries, count: usize) -> Result<Vec<TaggedSeries>> {
    let mut out = Vec::with_capacity(count);
    let mut cur = s.clone();
    for k in 0..count {
        if k > 0 {
            cur = l.step(&cur)?;
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// `sum_{i,j} Psi[i][j] D^i(g) D^j(f)` as a plain series.
///
/// With `assert_solutions` set, `L f` and `L* g` are also checked to vanish
/// through order `N - r`.
pub fn pairing(
    l: &SkewOperator,
    psi: &RatFuncMatrix,
    g: &TaggedSeries,
    f: &TaggedSeries,
    assert_solutions: bool,
) -> Result<Series> {
    if !g.offset.cancels(&f.offset) {
        return Err(Error::OffsetMismatch);
    }
    let r = l.order();
    let n = g.order().min(f.order());
    if assert_solutions {
        let guard = n.saturating_sub(r);
        let lf = l.apply(f)?;
        let lg = l.dual()?.apply(g)?;
        if !lf.folded_body().truncate(guard).is_zero() || !lg.folded_body().truncate(guard).is_zero() {
            return Err(Error::InvalidArgument("pairing inputs are not solutions".into()));
        }
    }
    let gs = iterates(l, g, r)?;
    let fs = iterates(l, f, r)?;
    let mut acc = Series::zero(n);
    for (i, gi) in gs.iter().enumerate() {
        for (j, fj) in fs.iter().enumerate() {
            let entry = psi.get(i, j);
            if entry.is_zero() {
                continue;
            }
            let prod = gi.pair(fj)?;
            acc = &acc + &(&prod * &entry.series(n)?);
        }
    }
    Ok(acc)
}

/// Theta-mode pairing `Omega(g, f)`.
pub fn omega_pairing(l: &SkewOperator, g: &TaggedSeries, f: &TaggedSeries, assert_solutions: bool) -> Result<Series> {
    pairing(l, &psi_matrix(l)?, g, f, assert_solutions)
}

/// q-shift pairing `(g, Dg, ..) Psi_q (f, Df, ..)^t`.
pub fn omega_q_pairing(l: &SkewOperator, g: &TaggedSeries, f: &TaggedSeries, assert_solutions: bool) -> Result<Series> {
    pairing(l, &psi_q_matrix(l)?, g, f, assert_solutions)
}

/// `[s, D s, ..., D^(count-1) s]` with offsets folded into integer series.
fn integer_iterates(mode: &Mode, s: &TaggedSeries, count: usize) -> Result<Vec<IntegerSeries>> {
    let mut out = Vec::with_capacity(count);
    let mut cur = IntegerSeries::new(&s.body, &s.scalar);
    for k in 0..count {
        if k > 0 {
            cur = match (mode, &s.offset) {
                (Mode::Theta, Offset::Exponent(c)) => cur.theta_with_exponent(c),
                (Mode::QShift(q), Offset::Eigenvalue(mu)) => cur.q_shift(q, mu),
                _ => return Err(Error::ModeMismatch("offset kind does not match the operator".into())),
            };
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// Matrix of `sum_i w_i D^k(f_i) D^l(g_i)` over `0 <= k, l < r`, where each
/// `f_i` and `g_i` have cancelling offsets.
pub fn duality_grid(
    mode: &Mode,
    f: &[TaggedSeries],
    g: &[TaggedSeries],
    weights: &[Rational],
    exec: Execution,
) -> Result<Vec<Vec<Series>>> {
    let r = weights.len();
    if f.len() != r || g.len() != r || r == 0 {
        return Err(Error::InvalidArgument("grid inputs disagree in size".into()));
    }
    if f.iter().zip(g).any(|(fi, gi)| !fi.offset.cancels(&gi.offset)) {
        return Err(Error::OffsetMismatch);
    }
    let fi = f.iter().map(|s| integer_iterates(mode, s, r)).collect::<Result<Vec<_>>>()?;
    let gi = g.iter().map(|s| integer_iterates(mode, s, r)).collect::<Result<Vec<_>>>()?;
    let cells: Vec<(usize, usize)> = (0..r).flat_map(|k| (0..r).map(move |l| (k, l))).collect();
    let sums = par::map(exec, cells, |(k, l)| {
        let terms: Vec<_> = weights
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), &fi[i][k], &gi[i][l]))
            .collect();
        IntegerSeries::weighted_product_sum(&terms)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(sums.chunks(r).map(<[Series]>::to_vec).collect())
}

/// Wronskian of tagged series: row `k` holds `D^k` of each input.
#[derive(Clone, Debug)]
pub struct Wronskian {
    pub entries: Vec<Vec<TaggedSeries>>,
}

impl Wronskian {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Determinant with the column factors `z^(c_j)` removed. Since each
    /// column shares one offset, the full determinant is
    /// `z^(c_1 + ... + c_r)` times this series.
    pub fn det(&self) -> Series {
        let bodies: Vec<Vec<Series>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(TaggedSeries::folded_body).collect())
            .collect();
        series_det(&bodies)
    }
}

/// Wronskian matrix of `inputs` under `mode`. Each input may carry its own
/// offset (it factors out of its column), but all offsets must be of the
/// kind `mode` acts on.
pub fn wronskian_matrix(mode: &Mode, inputs: &[TaggedSeries]) -> Result<Wronskian> {
    let r = inputs.len();
    let first = inputs
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty wronskian".into()))?;
    let expected = match mode {
        Mode::Theta => Offset::trivial_exponent(),
        Mode::QShift(_) => Offset::trivial_eigenvalue(),
    };
    if inputs.iter().any(|s| !s.offset.same_kind(&first.offset)) || !first.offset.same_kind(&expected) {
        return Err(Error::MixedOffsets);
    }
    let mut entries = vec![Vec::with_capacity(r); r];
    for s in inputs {
        let mut cur = s.clone();
        for (k, row) in entries.iter_mut().enumerate() {
            if k > 0 {
                cur = match mode {
                    Mode::Theta => cur.theta()?,
                    Mode::QShift(q) => cur.q_shift(q)?,
                };
            }
            row.push(cur.clone());
        }
    }
    Ok(Wronskian { entries })
}

/// The zero tagged series in the given mode.
pub fn zero_tagged(mode: &Mode, order: usize) -> TaggedSeries {
    let offset = match mode {
        Mode::Theta => Offset::Exponent(Rational::zero()),
        Mode::QShift(_) => Offset::Eigenvalue(Rational::one()),
    };
    TaggedSeries::new(offset, Rational::one(), Series::zero(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Poly};

    fn lin(c0: i64, c1: i64) -> RatFunc {
        RatFunc::from(Poly::linear(int(c0), int(c1)))
    }

    #[test]
    fn psi_order_two_by_hand() {
        let (a0, a1, a2) = (lin(0, -3), lin(2, 5), lin(1, -1));
        let l = SkewOperator::theta(vec![a0, a1.clone(), a2.clone()]).unwrap();
        let psi = psi_matrix(&l).unwrap();
        assert_eq!(psi.get(0, 0), &(&a1 - &a2.theta()));
        assert_eq!(psi.get(0, 1), &a2);
        assert_eq!(psi.get(1, 0), &(-&a2));
        assert!(psi.get(1, 1).is_zero());
    }

    #[test]
    fn psi_q_order_two() {
        let q = rat(1, 2);
        let (a0, a1, a2) = (lin(1, -1), lin(3, 2), lin(5, -7));
        let l = SkewOperator::q_shift(q.clone(), vec![a0.clone(), a1, a2.clone()]).unwrap();
        let psi = psi_q_matrix(&l).unwrap();
        assert!(psi.get(0, 0).is_zero());
        assert_eq!(psi.get(0, 1), &(-a2.q_shift(&q, -1)));
        assert_eq!(psi.get(1, 0), &a0);
        assert!(psi.get(1, 1).is_zero());
    }

    #[test]
    fn zero_inputs_pair_to_zero() {
        let l = SkewOperator::theta(vec![lin(0, -1), lin(1, 2), lin(1, -1)]).unwrap();
        let z = zero_tagged(l.mode(), 6);
        assert!(omega_pairing(&l, &z, &z, false).unwrap().is_zero());
        let lq = SkewOperator::q_shift(rat(1, 3), vec![lin(1, -1), lin(1, 2), lin(1, -1)]).unwrap();
        let zq = zero_tagged(lq.mode(), 6);
        assert!(omega_q_pairing(&lq, &zq, &zq, false).unwrap().is_zero());
    }

    #[test]
    fn wronskian_basics() {
        let one = TaggedSeries::with_exponent(int(0), Series::one(5));
        let w = wronskian_matrix(&Mode::Theta, std::slice::from_ref(&one)).unwrap();
        assert_eq!(w.det(), Series::one(5));
        let f = TaggedSeries::with_exponent(rat(1, 3), Series::from_fn(5, |k| int(k as i64 + 1)));
        let g = TaggedSeries::new(f.offset.clone(), int(2), f.body.clone());
        let w = wronskian_matrix(&Mode::Theta, &[f.clone(), g]).unwrap();
        assert!(w.det().is_zero());
        let e = TaggedSeries::with_eigenvalue(int(2), Series::one(5));
        assert!(matches!(wronskian_matrix(&Mode::Theta, &[f, e]), Err(Error::MixedOffsets)));
    }
}
