//! The order-`r` hypergeometric equation
//! `(theta + b_1 - 1)...(theta + b_r - 1) f = z (theta + a_1)...(theta + a_r) f`
//! with `b_r = 1`, its dual, the standard local solution bases at `z = 0`,
//! and the duality matrix `M = Psi^{-1}` with its series identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{int, Poly, RatFunc, Rational, Series};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::report::{check_cell, pairs, structure, IdentityReport, VerifyReport};
use crate::skew::{duality_grid, psi_matrix, Mode, RatFuncMatrix, SkewOperator, TaggedSeries, Wronskian};

/// Smallest truncation order accepted by the verifiers for order `r`.
pub fn min_order(r: usize) -> usize {
    4 * r + 8
}

pub const DEFAULT_ORDER: usize = 40;

/// Parameters `a_1..a_r`, `b_1..b_r` with `b_r = 1` and the `b_i` pairwise
/// distinct modulo the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HGParams {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

impl HGParams {
    /// `b_head` holds `b_1..b_{r-1}`; `b_r = 1` is appended.
    pub fn new(a: Vec<Rational>, b_head: Vec<Rational>) -> Result<Self> {
        let r = a.len();
        if r < 2 {
            return Err(Error::DegenerateParameters(format!("order r = {r} must be at least 2")));
        }
        if b_head.len() + 1 != r {
            return Err(Error::DegenerateParameters(format!(
                "expected {} lower parameters b_1..b_(r-1), got {}",
                r - 1,
                b_head.len()
            )));
        }
        let mut b = b_head;
        b.push(Rational::one());
        let p = HGParams { a, b };
        if let Some((i, j)) = p.genericity_violation() {
            return Err(Error::DegenerateParameters(format!(
                "b_{} - b_{} = {} is an integer",
                i + 1,
                j + 1,
                &p.b[i] - &p.b[j]
            )));
        }
        Ok(p)
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    /// All `r` lower parameters, `b_r = 1` included.
    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    /// First pair `(i, j)` with `b_i - b_j` an integer.
    pub fn genericity_violation(&self) -> Option<(usize, usize)> {
        let r = self.b.len();
        (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .find(|&(i, j)| (&self.b[i] - &self.b[j]).is_integer())
    }
}

/// Rising factorial `x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, k| acc * (x + int(k as i64)))
}

/// `prod (x + c)` over the given shifts, as a polynomial in `x`.
fn shifted_product(shifts: impl IntoIterator<Item = Rational>) -> Poly {
    shifts
        .into_iter()
        .fold(Poly::one(), |acc, c| &acc * &Poly::linear(c, Rational::one()))
}

/// `L = prod (theta + b_j - 1) - z prod (theta + a_j)`, so `A_r = 1 - z`.
pub fn hg_operator(p: &HGParams) -> SkewOperator {
    let left = shifted_product(p.b.iter().map(|b| b - int(1)));
    let right = shifted_product(p.a.iter().cloned());
    let coeffs = (0..=p.r())
        .map(|j| RatFunc::from(Poly::linear(left.coeff(j), -right.coeff(j))))
        .collect();
    SkewOperator::theta(coeffs).expect("A_r = 1 - z is nonzero")
}

/// `a'_i = 1 - a_i`, `b'_j = 2 - b_j`. Since `b_r = 1`, also `b'_r = 1`.
pub fn hg_dual_params(p: &HGParams) -> HGParams {
    HGParams {
        a: p.a.iter().map(|a| int(1) - a).collect(),
        b: p.b.iter().map(|b| int(2) - b).collect(),
    }
}

/// Checks that the formal adjoint of `L(a, b)` is a constant multiple of
/// `L(a', b')` and returns that constant.
pub fn dual_operator_unit(p: &HGParams) -> Result<Rational> {
    let adjoint = hg_operator(p).theta_dual()?;
    let expected = hg_operator(&hg_dual_params(p));
    adjoint
        .unit_multiple_of(&expected)
        .ok_or_else(|| Error::DegenerateOperator("adjoint is not hypergeometric in the dual parameters".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Primal,
    Dual,
}

#[derive(Clone, Debug)]
pub struct SolutionBasis {
    pub entries: Vec<TaggedSeries>,
    pub which: Which,
}

/// `rF(r-1)(upper; lower; z)` through `z^order`, via the term ratio
/// `c_{n+1} / c_n = prod (alpha + n) / (prod (beta + n) (n + 1))`.
pub fn hypergeometric_series(upper: &[Rational], lower: &[Rational], order: usize) -> Result<Series> {
    // x + n = (num(x) + n den(x)) / den(x)
    let shifted = |x: &Rational, n: &BigInt| x.numer() + n * x.denom();
    Series::from_term_ratios(order, |n| {
        let n = BigInt::from(n);
        let mut num = BigInt::one();
        let mut den = &n + 1;
        for alpha in upper {
            num *= shifted(alpha, &n);
            den *= alpha.denom();
        }
        for beta in lower {
            let t = shifted(beta, &n);
            if t.is_zero() {
                return Err(Error::DegenerateParameters(format!(
                    "lower parameter {beta} is a non-positive integer"
                )));
            }
            num *= beta.denom();
            den *= t;
        }
        Ok((num, den))
    })
}

/// `f_i = z^(1-b_i) rF(r-1)(a_k + 1 - b_i; b_j + 1 - b_i (j != i); z)` or
/// `g_i = z^(b_i-1) rF(r-1)(b_i - a_k; b_i + 1 - b_j (j != i); z)`.
pub fn solution_basis(p: &HGParams, order: usize, which: Which) -> Result<SolutionBasis> {
    if order < 1 {
        return Err(Error::InvalidArgument("truncation order must be at least 1".into()));
    }
    let r = p.r();
    let entries = (0..r)
        .map(|i| {
            let bi = &p.b[i];
            let (offset, upper, lower): (Rational, Vec<Rational>, Vec<Rational>) = match which {
                Which::Primal => (
                    int(1) - bi,
                    p.a.iter().map(|a| a + int(1) - bi).collect(),
                    (0..r).filter(|&j| j != i).map(|j| &p.b[j] + int(1) - bi).collect(),
                ),
                Which::Dual => (
                    bi - int(1),
                    p.a.iter().map(|a| bi - a).collect(),
                    (0..r).filter(|&j| j != i).map(|j| bi + int(1) - &p.b[j]).collect(),
                ),
            };
            Ok(TaggedSeries::with_exponent(
                offset,
                hypergeometric_series(&upper, &lower, order)?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(SolutionBasis { entries, which })
}

/// `C_ii = prod_{j != i} (b_j - b_i)`.
pub fn c_constants(p: &HGParams) -> Vec<Rational> {
    let r = p.r();
    (0..r)
        .map(|i| {
            (0..r)
                .filter(|&j| j != i)
                .map(|j| &p.b[j] - &p.b[i])
                .product()
        })
        .collect()
}

/// Weights `c_i = 1 / C_ii` of the duality sums.
pub fn weights(p: &HGParams) -> Vec<Rational> {
    c_constants(p).iter().map(Rational::recip).collect()
}

/// `M = Psi^{-1}` for the hypergeometric operator.
pub fn duality_matrix(p: &HGParams) -> Result<RatFuncMatrix> {
    psi_matrix(&hg_operator(p))?.inverse()
}

/// Closed form of the anti-diagonal entries `k + l = r - 1` of
/// `sum_i c_i theta^k(f_i) theta^l(g_i)`: `(-1)^l / (1 - z)`.
pub fn anti_diagonal_entry(l: usize) -> RatFunc {
    let sign = if l.is_multiple_of(2) { int(1) } else { int(-1) };
    RatFunc::new(Poly::constant(sign), Poly::linear(int(1), int(-1))).expect("nonzero")
}

/// The full `r x r` matrix of duality sums as series.
pub fn duality_sums(p: &HGParams, order: usize, exec: Execution) -> Result<Vec<Vec<Series>>> {
    let f = solution_basis(p, order, Which::Primal)?;
    let g = solution_basis(p, order, Which::Dual)?;
    duality_grid(&Mode::Theta, &f.entries, &g.entries, &weights(p), exec)
}

pub fn verify_theorem1(p: &HGParams, order: usize) -> Result<VerifyReport> {
    verify_theorem1_with(p, order, Execution::default())
}

/// Checks every cell of `sum_i c_i theta^k(f_i) theta^l(g_i) = (Psi^{-1})_{kl}`
/// exactly through `z^order`, plus the zero pattern `k + l <= r - 2` and the
/// anti-diagonal closed form.
pub fn verify_theorem1_with(p: &HGParams, order: usize, exec: Execution) -> Result<VerifyReport> {
    let r = p.r();
    if order < min_order(r) {
        return Err(Error::PrecisionInsufficient { order, required: min_order(r) });
    }
    let m = duality_matrix(p)?;
    let sums = duality_sums(p, order, exec)?;
    let cells = (0..r)
        .flat_map(|k| (0..r).map(move |l| (k, l)))
        .map(|(k, l)| check_cell(k, l, &sums[k][l], m.get(k, l), r))
        .collect::<Result<Vec<_>>>()?;

    let zero_bad: Vec<String> = pairs(r)
        .filter(|&(k, l)| k + l + 2 <= r && !m.get(k, l).is_zero())
        .map(|(k, l)| format!("({k},{l})"))
        .collect();
    let anti_bad: Vec<String> = pairs(r)
        .filter(|&(k, l)| k + l + 1 == r && *m.get(k, l) != anti_diagonal_entry(l))
        .map(|(k, l)| format!("({k},{l})"))
        .collect();
    let checks = vec![
        structure("zero pattern k+l <= r-2", zero_bad),
        structure("anti-diagonal (-1)^l/(1-z)", anti_bad),
    ];
    Ok(VerifyReport { r, order, cells, checks })
}

/// Wronskian of the primal or dual basis.
pub fn basis_wronskian(p: &HGParams, order: usize, which: Which) -> Result<Wronskian> {
    let basis = solution_basis(p, order, which)?;
    crate::skew::wronskian_matrix(&Mode::Theta, &basis.entries)
}

/// `(1 - z)^e` through `z^order` by the binomial series.
pub fn binomial_series(e: &Rational, order: usize) -> Series {
    let minus_e = -e;
    Series::from_fn(order, |n| {
        let fact: Rational = (1..=n).map(|k| int(k as i64)).product();
        pochhammer(&minus_e, n) / fact
    })
}

/// `2F1(a, b; c; z)` with coefficients computed directly from Pochhammer
/// symbols rather than the term ratio.
fn gauss_direct(a: &Rational, b: &Rational, c: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| {
        let fact: Rational = (1..=n).map(|k| int(k as i64)).product();
        pochhammer(a, n) * pochhammer(b, n) / (pochhammer(c, n) * fact)
    })
}

/// Euler's transformation `2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z)`
/// and the product identity it implies for `k = l = 0`, `r = 2`:
/// `2F1(a1,a2;b1) 2F1(1-a1,1-a2;2-b1) = 2F1(a1+1-b1,a2+1-b1;2-b1) 2F1(b1-a1,b1-a2;b1)`.
pub fn verify_euler_identity(a1: &Rational, a2: &Rational, b1: &Rational, order: usize) -> Result<Vec<IdentityReport>> {
    if (b1 - int(1)).is_integer() {
        return Err(Error::DegenerateParameters(format!("b_1 = {b1} is an integer")));
    }
    let one = int(1);
    let two = int(2);
    let lhs = gauss_direct(a1, a2, b1, order);
    let rhs = &binomial_series(&(b1 - a1 - a2), order) * &gauss_direct(&(b1 - a1), &(b1 - a2), b1, order);
    let prod_l = &lhs * &gauss_direct(&(&one - a1), &(&one - a2), &(&two - b1), order);
    let prod_r = &gauss_direct(&(a1 + &one - b1), &(a2 + &one - b1), &(&two - b1), order)
        * &gauss_direct(&(b1 - a1), &(b1 - a2), b1, order);
    Ok(vec![
        IdentityReport {
            name: "Euler transformation".into(),
            order,
            first_mismatch: lhs.first_mismatch(&rhs),
        },
        IdentityReport {
            name: "r=2 product identity".into(),
            order,
            first_mismatch: prod_l.first_mismatch(&prod_r),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn sample() -> HGParams {
        HGParams::new(vec![rat(1, 2), rat(1, 3)], vec![rat(1, 5)]).unwrap()
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(1), 5), int(120));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn operator_order_two() {
        let p = sample();
        let l = hg_operator(&p);
        let (a1, a2, b1) = (rat(1, 2), rat(1, 3), rat(1, 5));
        assert_eq!(l.coeff(2), RatFunc::from(Poly::linear(int(1), int(-1))));
        assert_eq!(l.coeff(1), RatFunc::from(Poly::linear(&b1 - int(1), -(&a1 + &a2))));
        assert_eq!(l.coeff(0), RatFunc::from(Poly::linear(int(0), -(&a1 * &a2))));
    }

    #[test]
    fn dual_params() {
        let d = hg_dual_params(&sample());
        assert_eq!(d.a(), &[rat(1, 2), rat(2, 3)]);
        assert_eq!(d.b(), &[rat(9, 5), int(1)]);
        assert_eq!(hg_dual_params(&d), sample());
        let half = HGParams::new(vec![rat(1, 2); 3], vec![rat(1, 3), rat(1, 4)]).unwrap();
        assert_eq!(hg_dual_params(&half).a(), half.a());
    }

    #[test]
    fn genericity_gate() {
        assert!(matches!(
            HGParams::new(vec![int(1), int(1)], vec![int(1)]),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(HGParams::new(vec![int(1), int(1)], vec![rat(7, 2)]).is_ok());
        assert!(HGParams::new(vec![int(1), int(1), int(1)], vec![rat(1, 3), rat(4, 3)]).is_err());
        assert!(HGParams::new(vec![int(1)], vec![]).is_err());
    }

    #[test]
    fn basis_first_coefficients() {
        let f = solution_basis(&sample(), 4, Which::Primal).unwrap();
        assert_eq!(f.entries[1].body.coeff(1), &rat(5, 6));
        assert_eq!(f.entries[1].offset, crate::skew::Offset::Exponent(int(0)));
        for e in &f.entries {
            assert_eq!(e.body.coeff(0), &int(1));
        }
    }

    #[test]
    fn c_constants_order_two() {
        assert_eq!(c_constants(&sample()), vec![rat(4, 5), rat(-4, 5)]);
    }

    #[test]
    fn anti_diagonal_signs() {
        assert_eq!(anti_diagonal_entry(0).series(2).unwrap().coeffs(), &[int(1), int(1), int(1)]);
        assert_eq!(anti_diagonal_entry(1).series(1).unwrap().coeffs(), &[int(-1), int(-1)]);
    }
}
