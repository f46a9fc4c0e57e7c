//! Closed forms of the duality matrices for orders 2 and 3, in the form they
//! are usually tabulated and in the form that actually equals `Psi^{-1}`.
//!
//! The tabulated forms differ from the true inverses in three places:
//! the off-diagonal signs of the order-2 differential matrix, the constant
//! `A` of the order-3 corner entry, and a factor `1/q` in the `(0, 2)` entry
//! of the order-3 q-matrix.

use crate::algebra::{int, pow, Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::hypergeometric::HGParams;
use crate::q_hypergeometric::QHGParams;
use crate::skew::RatFuncMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    AsPublished,
    Corrected,
}

fn e1(x: &[Rational]) -> Rational {
    x.iter().sum()
}

fn e2(x: &[Rational]) -> Rational {
    let mut acc = Rational::from_integer(0.into());
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc += &x[i] * &x[j];
        }
    }
    acc
}

/// `(1 - c z)^k` as a polynomial.
fn one_minus(c: Rational, k: u32) -> Poly {
    Poly::linear(int(1), -c).pow(k)
}

fn frac(num: Poly, den: Poly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator")
}

fn lin(c0: Rational, c1: Rational) -> Poly {
    Poly::linear(c0, c1)
}

fn order_check(r: usize, want: usize) -> Result<()> {
    if r != want {
        return Err(Error::InvalidArgument(format!("closed form needs order {want}, got {r}")));
    }
    Ok(())
}

/// The order-2 matrix `M` of the differential duality.
pub fn hg_order2(p: &HGParams, variant: Variant) -> Result<RatFuncMatrix> {
    order_check(p.r(), 2)?;
    let (a, b) = (p.a(), p.b());
    let pole = frac(Poly::one(), one_minus(int(1), 1));
    let m11 = frac(
        lin(int(-2) + &b[0] + &b[1], int(1) - &a[0] - &a[1]),
        one_minus(int(1), 2),
    );
    let (m01, m10) = match variant {
        Variant::AsPublished => (pole.clone(), -&pole),
        Variant::Corrected => (-&pole, pole),
    };
    RatFuncMatrix::from_rows(vec![vec![RatFunc::zero(), m01], vec![m10, m11]])
}

/// The order-3 matrix `M` of the differential duality.
pub fn hg_order3(p: &HGParams, variant: Variant) -> Result<RatFuncMatrix> {
    order_check(p.r(), 3)?;
    let (ea1, ea2) = (e1(p.a()), e2(p.a()));
    let (eb1, eb2) = (e1(p.b()), e2(p.b()));
    let pole = frac(Poly::one(), one_minus(int(1), 1));
    let sq = one_minus(int(1), 2);
    let m12 = frac(lin(int(3) - &eb1, int(-2) + &ea1), sq.clone());
    let m21 = frac(lin(int(-3) + &eb1, int(1) - &ea1), sq);
    let shift = match variant {
        Variant::AsPublished => int(1),
        Variant::Corrected => int(2),
    };
    let a_const = (&eb1 - &shift) * (&eb1 - &shift) - &eb2 + int(2);
    let b_lin = &eb2 - int(2) * (&ea1 - Rational::new(1.into(), 2.into())) * (&eb1 - Rational::new(5.into(), 2.into()))
        + &ea2
        - Rational::new(5.into(), 2.into());
    let c_quad = (&ea1 - int(1)) * (&ea1 - int(1)) - &ea2;
    let m22 = frac(Poly::new(vec![a_const, b_lin, c_quad]), one_minus(int(1), 3));
    let zero = RatFunc::zero;
    RatFuncMatrix::from_rows(vec![
        vec![zero(), zero(), pole.clone()],
        vec![zero(), -&pole, m12],
        vec![pole, m21, m22],
    ])
}

/// The order-2 matrix `M_q` of the q-difference duality.
pub fn qhg_order2(p: &QHGParams) -> Result<RatFuncMatrix> {
    order_check(p.r(), 2)?;
    let (a, b, q) = (p.a(), p.b(), p.q());
    let corner = frac(
        Poly::constant(-(q * q)),
        lin(&b[0] * &b[1], -(&a[0] * &a[1] * q)),
    );
    RatFuncMatrix::from_rows(vec![
        vec![RatFunc::zero(), frac(Poly::one(), one_minus(int(1), 1))],
        vec![corner, RatFunc::zero()],
    ])
}

/// The order-3 matrix `M_q` of the q-difference duality.
pub fn qhg_order3(p: &QHGParams, variant: Variant) -> Result<RatFuncMatrix> {
    order_check(p.r(), 3)?;
    let (a, b, q) = (p.a(), p.b(), p.q());
    let both = &one_minus(int(1), 1) * &one_minus(q.clone(), 1);
    let top = lin(e1(b), -(e1(a) * q));
    let m02 = match variant {
        Variant::AsPublished => frac(top, both),
        Variant::Corrected => frac(top, both.scale(q)),
    };
    let prod_a: Rational = a.iter().product();
    let prod_b: Rational = b.iter().product();
    let corner = frac(Poly::constant(pow(q, 3)), lin(prod_b, -(prod_a * pow(q, 2))));
    let zero = RatFunc::zero;
    RatFuncMatrix::from_rows(vec![
        vec![zero(), frac(Poly::one(), one_minus(int(1), 1)), m02],
        vec![zero(), zero(), frac(Poly::one(), one_minus(q.clone(), 1))],
        vec![corner, zero(), zero()],
    ])
}

/// Cells where two matrices of the same size differ.
pub fn mismatches(computed: &RatFuncMatrix, reference: &RatFuncMatrix) -> Vec<(usize, usize)> {
    let n = computed.dim();
    (0..n)
        .flat_map(|k| (0..n).map(move |l| (k, l)))
        .filter(|&(k, l)| computed.get(k, l) != reference.get(k, l))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::hypergeometric::duality_matrix;
    use crate::q_hypergeometric::q_duality_matrix;

    #[test]
    fn corrected_forms_match_inverse() {
        let p2 = HGParams::new(vec![rat(1, 2), rat(1, 3)], vec![rat(1, 5)]).unwrap();
        let m = duality_matrix(&p2).unwrap();
        assert!(mismatches(&m, &hg_order2(&p2, Variant::Corrected).unwrap()).is_empty());
        assert_eq!(mismatches(&m, &hg_order2(&p2, Variant::AsPublished).unwrap()), vec![(0, 1), (1, 0)]);

        let p3 = HGParams::new(vec![rat(1, 2), rat(1, 3), rat(2, 7)], vec![rat(1, 5), rat(3, 11)]).unwrap();
        let m = duality_matrix(&p3).unwrap();
        assert!(mismatches(&m, &hg_order3(&p3, Variant::Corrected).unwrap()).is_empty());
        assert_eq!(mismatches(&m, &hg_order3(&p3, Variant::AsPublished).unwrap()), vec![(2, 2)]);
    }

    #[test]
    fn corrected_q_forms_match_inverse() {
        let p2 = QHGParams::new(rat(1, 2), vec![rat(1, 3), rat(1, 7)], vec![rat(1, 5)]).unwrap();
        assert!(mismatches(&q_duality_matrix(&p2).unwrap(), &qhg_order2(&p2).unwrap()).is_empty());
        let p3 = QHGParams::new(rat(2, 3), vec![rat(1, 3), rat(1, 7), rat(5, 4)], vec![rat(1, 5), rat(3, 11)]).unwrap();
        let m = q_duality_matrix(&p3).unwrap();
        assert!(mismatches(&m, &qhg_order3(&p3, Variant::Corrected).unwrap()).is_empty());
        assert_eq!(mismatches(&m, &qhg_order3(&p3, Variant::AsPublished).unwrap()), vec![(0, 2)]);
    }

    #[test]
    fn wrong_order_rejected() {
        let p3 = HGParams::new(vec![rat(1, 2), rat(1, 3), rat(2, 7)], vec![rat(1, 5), rat(3, 11)]).unwrap();
        assert!(hg_order2(&p3, Variant::Corrected).is_err());
    }
}
