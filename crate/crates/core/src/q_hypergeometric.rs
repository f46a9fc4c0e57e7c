//! The order-`r` basic hypergeometric q-difference equation
//! `(1 - b_1 D/q)...(1 - b_r D/q) f = z (1 - a_1 D)...(1 - a_r D) f`, with
//! `D f(z) = f(qz)` and `b_r = q`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{int, pow, Poly, RatFunc, Rational, Series};
use crate::error::{Error, Result};
use crate::hypergeometric::{min_order, Which};
use crate::par::Execution;
use crate::report::{check_cell, pairs, structure, IdentityReport, VerifyReport};
use crate::skew::{duality_grid, psi_q_matrix, Mode, RatFuncMatrix, SkewOperator, TaggedSeries, Wronskian};

/// `(x; q)_n = (1 - x)(1 - xq)...(1 - xq^(n-1))`.
pub fn q_pochhammer(x: &Rational, q: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = x.clone();
    for _ in 0..n {
        acc *= int(1) - &t;
        t *= q;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QHGParams {
    q: Rational,
    a: Vec<Rational>,
    b: Vec<Rational>,
}

/// A pair `(i, j)` of lower parameters with `b_i / b_j = q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resonance {
    pub i: usize,
    pub j: usize,
    pub k: i64,
}

impl QHGParams {
    /// `b_head` holds `b_1..b_{r-1}`; `b_r = q` is appended.
    pub fn new(q: Rational, a: Vec<Rational>, b_head: Vec<Rational>) -> Result<Self> {
        if !(q.is_positive() && q < int(1)) {
            return Err(Error::DegenerateParameters(format!("base q = {q} must lie in (0, 1)")));
        }
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
        if a.iter().chain(&b_head).any(Zero::is_zero) {
            return Err(Error::DegenerateParameters("parameters must be nonzero".into()));
        }
        let mut b = b_head;
        b.push(q.clone());
        let p = QHGParams { q, a, b };
        if let Some(w) = genericity_check_q(&p) {
            return Err(Error::DegenerateParameters(format!(
                "b_{} / b_{} = q^{}",
                w.i + 1,
                w.j + 1,
                w.k
            )));
        }
        Ok(p)
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    /// All `r` lower parameters, `b_r = q` included.
    pub fn b(&self) -> &[Rational] {
        &self.b
    }
}

/// Exponent `k` with `q^k = ratio`, if any.
fn q_log(ratio: &Rational, q: &Rational) -> Option<i64> {
    if !ratio.is_positive() {
        return None;
    }
    if ratio.is_one() {
        return Some(0);
    }
    let (target, sign) = if *ratio < int(1) { (ratio.clone(), 1) } else { (ratio.recip(), -1) };
    let mut t = q.clone();
    let mut k = 1;
    while t >= target {
        if t == target {
            return Some(sign * k);
        }
        t *= q;
        k += 1;
    }
    None
}

/// First pair of lower parameters whose quotient is an integral power of `q`.
pub fn genericity_check_q(p: &QHGParams) -> Option<Resonance> {
    let r = p.b.len();
    (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .find_map(|(i, j)| q_log(&(&p.b[i] / &p.b[j]), &p.q).map(|k| Resonance { i, j, k }))
}

/// Coefficients of `prod (1 - c X)` in ascending powers of `X`.
fn linear_product(cs: impl IntoIterator<Item = Rational>) -> Poly {
    cs.into_iter()
        .fold(Poly::one(), |acc, c| &acc * &Poly::linear(int(1), -c))
}

/// `L = prod (1 - b_j D/q) - z prod (1 - a_j D)`, so `A_0 = 1 - z`.
pub fn qhg_operator(p: &QHGParams) -> SkewOperator {
    let left = linear_product(p.b.iter().map(|b| b / &p.q));
    let right = linear_product(p.a.iter().cloned());
    let coeffs = (0..=p.r())
        .map(|j| RatFunc::from(Poly::linear(left.coeff(j), -right.coeff(j))))
        .collect();
    SkewOperator::q_shift(p.q.clone(), coeffs).expect("A_0 = 1 - z is nonzero and 0 < q < 1")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDualParams {
    pub params: QHGParams,
    /// The dual equation is the hypergeometric one in the variable `rho z`.
    pub rho: Rational,
}

/// `a'_i = q / a_i`, `b'_i = q^2 / b_i` and `rho = a_1...a_r q^(r-2) / (b_1...b_(r-1))`.
pub fn qhg_dual_params(p: &QHGParams) -> QDualParams {
    let q = &p.q;
    let q2 = q * q;
    let r = p.r();
    let prod_a: Rational = p.a.iter().product();
    let prod_b: Rational = p.b[..r - 1].iter().product();
    QDualParams {
        params: QHGParams {
            q: q.clone(),
            a: p.a.iter().map(|a| q / a).collect(),
            b: p.b.iter().map(|b| &q2 / b).collect(),
        },
        rho: prod_a * pow(q, r as i64 - 2) / prod_b,
    }
}

/// `qhg_operator` of the dual parameters with `z` replaced by `rho z`.
pub fn rescaled_dual_operator(p: &QHGParams) -> SkewOperator {
    let d = qhg_dual_params(p);
    let op = qhg_operator(&d.params);
    let coeffs = op
        .coeffs()
        .iter()
        .map(|c| RatFunc::from(c.as_poly().expect("polynomial coefficient").scale_var(&d.rho)))
        .collect();
    SkewOperator::q_shift(p.q.clone(), coeffs).expect("nonzero operator")
}

/// Checks that the q-dual of `L(a, b)` is a constant multiple of the rescaled
/// dual hypergeometric operator and returns that constant.
pub fn dual_operator_unit(p: &QHGParams) -> Result<Rational> {
    let dual = qhg_operator(p).q_dual()?;
    dual.unit_multiple_of(&rescaled_dual_operator(p))
        .ok_or_else(|| Error::DegenerateOperator("q-dual is not hypergeometric in the dual parameters".into()))
}

/// `r phi (r-1)` through `z^order` from the term ratio
/// `c_(n+1) / c_n = prod (1 - alpha q^n) / prod (1 - beta q^n)`, each
/// coefficient then multiplied by `scale^n`.
pub fn basic_hypergeometric_series(
    upper: &[Rational],
    lower: &[Rational],
    q: &Rational,
    scale: &Rational,
    order: usize,
) -> Result<Series> {
    let (mut qn_num, mut qn_den) = (BigInt::one(), BigInt::one());
    Series::from_term_ratios(order, |_| {
        // 1 - x q^n = (den(x) den(q)^n - num(x) num(q)^n) / (den(x) den(q)^n)
        let factor = |x: &Rational| x.denom() * &qn_den - x.numer() * &qn_num;
        let mut num = scale.numer().clone();
        let mut den = scale.denom().clone();
        for alpha in upper {
            num *= factor(alpha);
            den *= alpha.denom() * &qn_den;
        }
        for beta in lower {
            let t = factor(beta);
            if t.is_zero() {
                return Err(Error::DegenerateParameters(format!(
                    "lower parameter {beta} is a non-positive power of q"
                )));
            }
            num *= beta.denom() * &qn_den;
            den *= t;
        }
        qn_num *= q.numer();
        qn_den *= q.denom();
        Ok((num, den))
    })
}

#[derive(Clone, Debug)]
pub struct QSolutionBasis {
    pub entries: Vec<TaggedSeries>,
    pub which: Which,
}

/// Primal `f_i`: eigenvalue `q/b_i`, upper `q a_k / b_i`, lower `q b_j / b_i`
/// (`j != i`) and `q`. Dual `g_i`: eigenvalue `b_i/q`, upper `b_i / a_k`,
/// lower `q b_i / b_j` (`j != i`) and `q`, in the argument `rho z`.
pub fn q_solution_basis(p: &QHGParams, order: usize, which: Which) -> Result<QSolutionBasis> {
    if order < 1 {
        return Err(Error::InvalidArgument("truncation order must be at least 1".into()));
    }
    let r = p.r();
    let q = &p.q;
    let rho = qhg_dual_params(p).rho;
    let entries = (0..r)
        .map(|i| {
            let bi = &p.b[i];
            let others = (0..r).filter(move |&j| j != i);
            let (mu, upper, lower, scale): (Rational, Vec<Rational>, Vec<Rational>, Rational) = match which {
                Which::Primal => (
                    q / bi,
                    p.a.iter().map(|a| q * a / bi).collect(),
                    others.map(|j| q * &p.b[j] / bi).chain([q.clone()]).collect(),
                    Rational::one(),
                ),
                Which::Dual => (
                    bi / q,
                    p.a.iter().map(|a| bi / a).collect(),
                    others.map(|j| q * bi / &p.b[j]).chain([q.clone()]).collect(),
                    rho.clone(),
                ),
            };
            Ok(TaggedSeries::with_eigenvalue(
                mu,
                basic_hypergeometric_series(&upper, &lower, q, &scale, order)?,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(QSolutionBasis { entries, which })
}

/// `C_ii = prod_{j != i} (b_i - b_j) / (q b_i^(r-2))`.
pub fn q_c_constants(p: &QHGParams) -> Vec<Rational> {
    let r = p.r();
    (0..r)
        .map(|i| {
            let prod: Rational = (0..r).filter(|&j| j != i).map(|j| &p.b[i] - &p.b[j]).product();
            prod / (&p.q * pow(&p.b[i], r as i64 - 2))
        })
        .collect()
}

pub fn q_weights(p: &QHGParams) -> Vec<Rational> {
    q_c_constants(p).iter().map(Rational::recip).collect()
}

/// `M_q = Psi_q^{-1}`.
pub fn q_duality_matrix(p: &QHGParams) -> Result<RatFuncMatrix> {
    psi_q_matrix(&qhg_operator(p))?.inverse()
}

/// `(-1)^(r+1) q^r / (b_1...b_r - a_1...a_r q^(r-1) z)`.
pub fn corner_entry(p: &QHGParams) -> RatFunc {
    let r = p.r() as i64;
    let sign = if r % 2 == 1 { int(1) } else { int(-1) };
    let prod_a: Rational = p.a.iter().product();
    let prod_b: Rational = p.b.iter().product();
    RatFunc::new(
        Poly::constant(sign * pow(&p.q, r)),
        Poly::linear(prod_b, -(prod_a * pow(&p.q, r - 1))),
    )
    .expect("nonzero denominator")
}

/// `1 / (1 - q^k z)`.
pub fn superdiagonal_entry(q: &Rational, k: usize) -> RatFunc {
    RatFunc::new(Poly::one(), Poly::linear(int(1), -pow(q, k as i64))).expect("nonzero denominator")
}

/// `sum_i c_i(q) D^k(f_i) D^l(g_i)` for every cell.
pub fn q_duality_sums(p: &QHGParams, order: usize, exec: Execution) -> Result<Vec<Vec<Series>>> {
    let f = q_solution_basis(p, order, Which::Primal)?;
    let g = q_solution_basis(p, order, Which::Dual)?;
    duality_grid(&Mode::QShift(p.q.clone()), &f.entries, &g.entries, &q_weights(p), exec)
}

pub fn verify_theorem2(p: &QHGParams, order: usize) -> Result<VerifyReport> {
    verify_theorem2_with(p, order, Execution::default())
}

/// Checks every cell of `sum_i c_i(q) D^k(f_i) D^l(g_i) = (Psi_q^{-1})_{kl}`
/// through `z^order`, the zero pattern `l <= k` outside `(r-1, 0)`, and the
/// closed forms of the corner and superdiagonal entries.
pub fn verify_theorem2_with(p: &QHGParams, order: usize, exec: Execution) -> Result<VerifyReport> {
    let r = p.r();
    if order < min_order(r) {
        return Err(Error::PrecisionInsufficient { order, required: min_order(r) });
    }
    let m = q_duality_matrix(p)?;
    let sums = q_duality_sums(p, order, exec)?;
    let cells = pairs(r)
        .map(|(k, l)| check_cell(k, l, &sums[k][l], m.get(k, l), r))
        .collect::<Result<Vec<_>>>()?;

    let zero_bad = pairs(r)
        .filter(|&(k, l)| l <= k && (k, l) != (r - 1, 0) && !m.get(k, l).is_zero())
        .map(|(k, l)| format!("({k},{l})"))
        .collect();
    let corner_bad = if *m.get(r - 1, 0) == corner_entry(p) {
        vec![]
    } else {
        vec![format!("({},0)", r - 1)]
    };
    let super_bad = (0..r - 1)
        .filter(|&k| *m.get(k, k + 1) != superdiagonal_entry(&p.q, k))
        .map(|k| format!("({k},{})", k + 1))
        .collect();
    let checks = vec![
        structure("zero pattern l <= k", zero_bad),
        structure("corner (-1)^(r+1) q^r/(prod b - prod a q^(r-1) z)", corner_bad),
        structure("superdiagonal 1/(1-q^k z)", super_bad),
    ];
    Ok(VerifyReport { r, order, cells, checks })
}

pub fn q_basis_wronskian(p: &QHGParams, order: usize, which: Which) -> Result<Wronskian> {
    let basis = q_solution_basis(p, order, which)?;
    crate::skew::wronskian_matrix(&Mode::QShift(p.q.clone()), &basis.entries)
}

/// `2 phi 1 (a1, a2; b1; q, s z)` from q-shifted factorials directly.
fn phi21_direct(a1: &Rational, a2: &Rational, b1: &Rational, q: &Rational, s: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| {
        q_pochhammer(a1, q, n) * q_pochhammer(a2, q, n) * pow(s, n as i64)
            / (q_pochhammer(b1, q, n) * q_pochhammer(q, q, n))
    })
}

/// Heine's transformation
/// `2phi1(a1,a2;b1;q,z) = (a1 a2 z/b1; q)_inf / (z; q)_inf 2phi1(b1/a1,b1/a2;b1;q,a1 a2 z/b1)`,
/// with the product ratio expanded by the q-binomial theorem, and the product
/// identity it implies for `k = l = 0`, `r = 2`.
pub fn verify_heine_identity(q: &Rational, a1: &Rational, a2: &Rational, b1: &Rational, order: usize) -> Result<Vec<IdentityReport>> {
    let p = QHGParams::new(q.clone(), vec![a1.clone(), a2.clone()], vec![b1.clone()])?;
    let one = int(1);
    let s = a1 * a2 / b1;
    let q2b = q * q / b1;
    let ratio = Series::from_fn(order, |n| q_pochhammer(&s, q, n) / q_pochhammer(q, q, n));
    let lhs = phi21_direct(a1, a2, b1, q, &one, order);
    let rhs = &ratio * &phi21_direct(&(b1 / a1), &(b1 / a2), b1, q, &s, order);
    let prod_l = &lhs * &phi21_direct(&(q / a1), &(q / a2), &q2b, q, &s, order);
    let prod_r = &phi21_direct(&(q * a1 / b1), &(q * a2 / b1), &q2b, q, &one, order)
        * &phi21_direct(&(b1 / a1), &(b1 / a2), b1, q, &s, order);
    debug_assert_eq!(p.r(), 2);
    Ok(vec![
        IdentityReport {
            name: "Heine transformation".into(),
            order,
            first_mismatch: lhs.first_mismatch(&rhs),
        },
        IdentityReport {
            name: "r=2 q-product identity".into(),
            order,
            first_mismatch: prod_l.first_mismatch(&prod_r),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn sample() -> QHGParams {
        QHGParams::new(rat(1, 2), vec![rat(1, 3), rat(1, 7)], vec![rat(1, 5)]).unwrap()
    }

    #[test]
    fn q_pochhammer_values() {
        assert_eq!(q_pochhammer(&rat(3, 4), &rat(1, 2), 0), int(1));
        assert_eq!(q_pochhammer(&rat(1, 2), &rat(1, 2), 2), rat(3, 8));
        assert!(q_pochhammer(&int(1), &rat(2, 3), 4).is_zero());
    }

    #[test]
    fn operator_order_two() {
        let p = sample();
        let l = qhg_operator(&p);
        let q = rat(1, 2);
        let (a1, a2, b1, b2) = (rat(1, 3), rat(1, 7), rat(1, 5), q.clone());
        assert_eq!(l.coeff(0), RatFunc::from(Poly::linear(int(1), int(-1))));
        assert_eq!(l.coeff(1), RatFunc::from(Poly::linear(-(&b1 + &b2) / &q, &a1 + &a2)));
        assert_eq!(l.coeff(2), RatFunc::from(Poly::linear(&b1 * &b2 / (&q * &q), -(&a1 * &a2))));
    }

    #[test]
    fn dual_params_and_rho() {
        let d = qhg_dual_params(&sample());
        assert_eq!(d.rho, rat(5, 21));
        assert_eq!(d.params.b()[1], rat(1, 2));
        assert_eq!(qhg_dual_params(&d.params).params, sample());
    }

    #[test]
    fn resonance_search() {
        assert_eq!(q_log(&rat(2, 5), &rat(1, 2)), None);
        assert_eq!(q_log(&rat(1, 2), &rat(1, 2)), Some(1));
        assert_eq!(q_log(&int(4), &rat(1, 2)), Some(-2));
        assert_eq!(q_log(&int(1), &rat(1, 2)), Some(0));
        assert_eq!(q_log(&rat(-1, 2), &rat(1, 2)), None);
        let err = QHGParams::new(rat(1, 2), vec![int(1), int(1)], vec![rat(1, 4)]).unwrap_err();
        assert!(err.to_string().contains("q^1"), "{err}");
        assert!(QHGParams::new(rat(1, 2), vec![int(1), int(1)], vec![rat(1, 2)]).is_err());
        assert!(QHGParams::new(int(1), vec![int(1), int(1)], vec![rat(1, 3)]).is_err());
        assert!(QHGParams::new(rat(1, 2), vec![int(0), int(1)], vec![rat(1, 3)]).is_err());
    }

    #[test]
    fn primal_first_coefficient() {
        // i = 2: upper (1/3, 1/7), lower (1/5, 1/2).
        let f = q_solution_basis(&sample(), 3, Which::Primal).unwrap();
        assert_eq!(f.entries[1].body.coeff(1), &rat(10, 7));
        assert_eq!(f.entries[1].offset, crate::skew::Offset::Eigenvalue(int(1)));
    }

    #[test]
    fn c_constants_order_two() {
        assert_eq!(q_c_constants(&sample())[0], rat(-3, 5));
    }

    #[test]
    fn closed_form_shapes() {
        let q = rat(1, 2);
        assert_eq!(
            superdiagonal_entry(&q, 2).series(3).unwrap().coeffs(),
            &[int(1), rat(1, 4), rat(1, 16), rat(1, 64)]
        );
        let c = corner_entry(&sample());
        // -q^2 / (b1 b2 - a1 a2 q z) at z = 0
        assert_eq!(c.series(0).unwrap().coeff(0), &(-rat(1, 4) / rat(1, 10)));
    }
}
