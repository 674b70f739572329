//! Seifert matrix of the canonical surface of a braid closure (three stacked
//! disks, one half-twisted band per standard crossing), and the analytic
//! invariants derived from it: Alexander polynomial, Levine–Tristram
//! signatures and their jumps.

mod alexander;
mod roots;
mod signature;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::word::{BraidWord, Generator};

pub use roots::{unit_circle_jumps, unit_circle_jumps_with_tolerance, Jump, JUMP_TOLERANCE};
pub use signature::{
    gambaudo_ghys_deviation, levine_tristram_at, sigma_hat_and_profile, sigma_hat_and_profile_with, signature_oracle,
    ProfileArc, SignatureProfile,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub matrix: Vec<Vec<i64>>,
    pub alexander: LaurentPoly,
    /// Components of the boundary link.
    pub components: usize,
}

impl SeifertData {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// `det(A − Aᵀ)`; `±1` exactly when the surface boundary is a knot.
    pub fn intersection_determinant(&self) -> i64 {
        let n = self.size();
        let skew: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| self.matrix[i][j] - self.matrix[j][i]).collect()).collect();
        // det(S − tSᵀ) at t = 0 is det(S).
        let p = alexander::det_a_minus_t_at(&skew);
        i64::try_from(p.coeff(0)).expect("determinant fits in i64")
    }
}

/// Seifert matrix of the surface built from the standard-generator expansion.
///
/// One homology class per pair of consecutive crossings of the same
/// generator. Entries follow the usual linking rules for such loops; the sign
/// convention is the one for which the closure of `δ²` (right-handed trefoil)
/// has signature `−2`.
pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertData> {
    let matrix = raw_matrix(w)?;
    let alexander = alexander::det_a_minus_t_at(&matrix).symmetrized();
    Ok(SeifertData { matrix, alexander, components: w.closure_components() })
}

/// `det(A − tAᵀ)` normalized to be symmetric with positive value at `t = 1`.
pub fn alexander_polynomial(s: &SeifertData) -> LaurentPoly {
    alexander::det_a_minus_t_at(&s.matrix).symmetrized()
}

fn raw_matrix(w: &BraidWord) -> Result<Vec<Vec<i64>>> {
    let std = w.expand_to_standard();
    let x: Vec<i64> =
        std.letters().iter().map(|l| l.sign.value() * if l.generator == Generator::A { 1 } else { 2 }).collect();
    for (g, missing) in [(1, 'a'), (2, 'b')] {
        if !x.iter().any(|v| v.abs() == g) {
            return Err(Error::DisconnectedSurface { missing });
        }
    }
    let len = x.len();
    let next: Vec<Option<usize>> = (0..len).map(|i| (i + 1..len).find(|&j| x[j].abs() == x[i].abs())).collect();
    let idx: Vec<usize> = (0..len).filter(|&i| next[i].is_some()).collect();
    let n = idx.len();
    let mut a = vec![vec![0i64; n]; n];
    for ii in 0..n {
        let i = idx[ii];
        let hi = next[i].unwrap();
        for jj in ii..n {
            let j = idx[jj];
            let hj = next[j].unwrap();
            if i == j {
                // self-linking of the loop through crossings i and hi
                a[ii][ii] = -(x[i].signum() + x[hi].signum()).signum();
            } else if hi > hj || hi < j {
                // nested or disjoint loops do not link
            } else if hi == j {
                // consecutive loops of one generator share crossing j
                if x[j] > 0 {
                    a[jj][ii] = 1;
                } else {
                    a[ii][jj] = -1;
                }
            } else if x[i].abs() < x[j].abs() {
                // interlaced loops on neighbouring generators
                a[ii][jj] = 1;
            } else {
                a[jj][ii] = -1;
            }
        }
    }
    Ok(a)
}
