//! Verification reports shared by the differential and q-difference checks.

use crate::algebra::{rational_reconstruct, RatFunc, Rational, Series};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct CellReport {
    pub k: usize,
    pub l: usize,
    pub expected: RatFunc,
    /// Leading coefficients of the computed sum.
    pub got_prefix: Vec<Rational>,
    pub first_mismatch: Option<usize>,
    pub reconstructed: Option<RatFunc>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct StructureCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub r: usize,
    pub order: usize,
    pub cells: Vec<CellReport>,
    pub checks: Vec<StructureCheck>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.cells.iter().all(|c| c.pass) && self.checks.iter().all(|c| c.pass)
    }
}

pub(crate) const PREFIX_LEN: usize = 6;

/// Compares one cell's series with the expansion of the expected entry and
/// certifies it independently by rational reconstruction.
pub(crate) fn check_cell(k: usize, l: usize, sum: &Series, expected: &RatFunc, r: usize) -> Result<CellReport> {
    let order = sum.order();
    let first_mismatch = sum.first_mismatch(&expected.series(order)?);
    let reconstructed = rational_reconstruct(sum, r, r).ok();
    let pass = first_mismatch.is_none() && reconstructed.as_ref() == Some(expected);
    Ok(CellReport {
        k,
        l,
        expected: expected.clone(),
        got_prefix: sum.coeffs()[..=PREFIX_LEN.min(order)].to_vec(),
        first_mismatch,
        reconstructed,
        pass,
    })
}

pub(crate) fn pairs(r: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..r).flat_map(move |k| (0..r).map(move |l| (k, l)))
}

pub(crate) fn structure(name: &str, bad: Vec<String>) -> StructureCheck {
    StructureCheck {
        name: name.to_string(),
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "ok".into()
        } else {
            format!("fails at {}", bad.join(" "))
        },
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub order: usize,
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

