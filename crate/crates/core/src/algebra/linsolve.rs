//! Exact Gauss-Jordan elimination over the rationals.

use num_traits::Zero;

use super::rational::Rational;

/// Solves `rows * x = rhs` exactly. Returns one solution (free variables set
/// to zero) or `None` when the system is inconsistent.
pub fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>, ncols: usize) -> Option<Vec<Rational>> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        let pivot = rows[r][c..ncols].to_vec();
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for (x, p) in rows[i][c..ncols].iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
            let t = &f * &rhs[r];
            rhs[i] -= t;
        }
        pivots.push(c);
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rhs[i].clone();
    }
    Some(x)
}
