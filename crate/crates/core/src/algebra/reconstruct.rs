//! Rational reconstruction (Padé) from a truncated series, with certification.

use num_traits::{One, Zero};

use super::linsolve::solve;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::series::Series;
use crate::error::{Error, Result};

/// Finds `p/d` with `deg p <= num_deg`, `deg d <= den_deg`, `d(0) = 1`, whose
/// expansion agrees with every coefficient of `a`.
///
/// Denominator degrees are tried from 0 upward, so the returned function has
/// the smallest denominator degree that fits. The candidate is re-expanded
/// and compared against all of `a` before it is returned.
pub fn rational_reconstruct(a: &Series, num_deg: usize, den_deg: usize) -> Result<RatFunc> {
    let n = a.order();
    if n < num_deg + den_deg + 1 {
        return Err(Error::InvalidArgument(format!(
            "order {n} leaves no spare coefficient for bounds ({num_deg}, {den_deg})"
        )));
    }
    let coeff = |k: isize| -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            a.coeff(k as usize).clone()
        }
    };
    for dd in 0..=den_deg {
        // Unknowns d_1..d_dd; rows are the coefficients z^k, k > num_deg, of a*d.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for k in num_deg + 1..=n {
            rows.push((1..=dd).map(|j| coeff(k as isize - j as isize)).collect());
            rhs.push(-coeff(k as isize));
        }
        let Some(tail) = solve(rows, rhs, dd) else {
            continue;
        };
        let mut den = vec![Rational::one()];
        den.extend(tail);
        let num: Vec<Rational> = (0..=num_deg)
            .map(|k| {
                (0..=dd.min(k))
                    .map(|j| &den[j] * coeff(k as isize - j as isize))
                    .sum()
            })
            .collect();
        let f = RatFunc::new(Poly::new(num), Poly::new(den))?;
        if f.series(n)? == *a {
            return Ok(f);
        }
    }
    Err(Error::ReconstructionFailure { num_deg, den_deg })
}
