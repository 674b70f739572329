//! Levine–Tristram signatures `σ_ω`, the signature of
//! `(1 − ω)A + (1 − ω̄)Aᵀ`, and their piecewise-constant profile on the upper
//! unit semicircle.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parallel::{self, Execution};
use crate::word::BraidWord;

use super::roots::{unit_circle_jumps, Jump};
use super::{seifert_matrix, SeifertData};

/// Eigenvalues smaller than this multiple of the largest one count as zero.
const EIGEN_GUARD: f64 = 1e-8;
/// `|Δ(ω)|` below this multiple of `Σ|cₖ|` is treated as a root.
const ALEXANDER_GUARD: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileArc {
    pub start: f64,
    pub end: f64,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignatureProfile {
    pub jumps: Vec<Jump>,
    /// Consecutive open arcs covering `(0, ½)`.
    pub arcs: Vec<ProfileArc>,
    pub sigma_hat: i64,
    pub maximizing_arcs: Vec<ProfileArc>,
}

impl SignatureProfile {
    /// `σ_ω` at `ω = e^{2πi·angle}`, by reflection for `angle > ½`. `None` on a jump.
    pub fn value_at(&self, angle: f64) -> Option<i64> {
        let a = angle.rem_euclid(1.0);
        let a = if a > 0.5 { 1.0 - a } else { a };
        if a == 0.0 || self.jumps.iter().any(|j| j.angle == a) {
            return None;
        }
        self.arcs.iter().find(|arc| arc.start < a && a <= arc.end).map(|arc| arc.value)
    }

    /// The classical signature `σ = σ_{−1}`.
    pub fn signature(&self) -> Option<i64> {
        self.value_at(0.5)
    }
}

fn alexander_at(s: &SeifertData, angle: f64) -> (f64, f64) {
    let delta = &s.alexander;
    let mut value = 0.0;
    let mut scale = 0.0;
    for (k, c) in delta.coeffs().iter().enumerate() {
        let exp = delta.low_degree() + k as i64;
        let c = c.to_f64().unwrap_or(f64::INFINITY);
        value += c * (2.0 * PI * angle * exp as f64).cos();
        scale += c.abs();
    }
    (value, scale)
}

/// Signature of `(1 − ω)A + (1 − ω̄)Aᵀ` at `ω = e^{2πi·angle}`.
pub fn levine_tristram_at(s: &SeifertData, angle: f64) -> Result<i64> {
    assert!(angle > 0.0 && angle < 1.0, "angle {angle} outside (0, 1)");
    let (value, scale) = alexander_at(s, angle);
    if value.abs() <= ALEXANDER_GUARD * scale {
        return Err(Error::AtJump { angle });
    }
    let n = s.size();
    if n == 0 {
        return Ok(0);
    }
    let omega = Complex::from_polar(1.0, 2.0 * PI * angle);
    let one = Complex::new(1.0, 0.0);
    let (p, q) = (one - omega, one - omega.conj());
    let h = DMatrix::from_fn(n, n, |i, j| p * s.matrix[i][j] as f64 + q * s.matrix[j][i] as f64);
    let eigen = SymmetricEigen::new(h).eigenvalues;
    let largest = eigen.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let guard = EIGEN_GUARD * largest.max(1.0);
    let mut sig = 0i64;
    for &l in eigen.iter() {
        if l.abs() < guard {
            return Err(Error::AtJump { angle });
        }
        sig += if l > 0.0 { 1 } else { -1 };
    }
    // With no zero eigenvalue the signature has the parity of the size.
    assert_eq!((sig - n as i64).rem_euclid(2), 0, "signature parity check failed at {angle}");
    Ok(sig)
}

fn arc_value(s: &SeifertData, start: f64, end: f64) -> i64 {
    // Midpoint first, then other interior points if it lands within tolerance of a root.
    let fractions = [0.5, 0.25, 0.75, 0.125, 0.875, 0.375, 0.625];
    for f in fractions {
        if let Ok(v) = levine_tristram_at(s, start + f * (end - start)) {
            return v;
        }
    }
    panic!("no evaluable point on arc ({start}, {end})");
}

pub fn sigma_hat_and_profile(s: &SeifertData) -> Result<SignatureProfile> {
    sigma_hat_and_profile_with(s, Execution::default())
}

/// Evaluates one point per arc between consecutive jumps (concurrently in
/// parallel mode) and assembles the profile.
pub fn sigma_hat_and_profile_with(s: &SeifertData, exec: Execution) -> Result<SignatureProfile> {
    if s.components != 1 {
        return Err(Error::NotAKnot { components: s.components });
    }
    let jumps = unit_circle_jumps(s);
    let mut bounds = vec![0.0];
    bounds.extend(jumps.iter().map(|j| j.angle).filter(|&a| a < 0.5));
    bounds.push(0.5);
    let spans: Vec<(f64, f64)> = bounds.windows(2).map(|w| (w[0], w[1])).collect();
    let values = parallel::map(&spans, exec, |&(a, b)| arc_value(s, a, b));
    let arcs: Vec<ProfileArc> =
        spans.iter().zip(values).map(|(&(start, end), value)| ProfileArc { start, end, value }).collect();
    debug_assert_eq!(arcs[0].value, 0, "profile must vanish next to angle 0");
    let sigma_hat = arcs.iter().map(|a| a.value.abs()).max().unwrap_or(0);
    let maximizing_arcs = arcs.iter().filter(|a| a.value.abs() == sigma_hat).copied().collect();
    Ok(SignatureProfile { jumps, arcs, sigma_hat, maximizing_arcs })
}

/// `σ = σ_{−1}` of the closure of a knot-closing word.
pub fn signature_oracle(w: &BraidWord) -> Result<i64> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    levine_tristram_at(&seifert_matrix(w)?, 0.5)
}

/// Largest `|σ_θ + 2·writhe·θ|` over `θ ∈ (0, ⅓)` sampled on a uniform grid
/// of `samples` points and at the arc midpoints, skipping jumps.
pub fn gambaudo_ghys_deviation(w: &BraidWord, samples: usize) -> Result<f64> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let profile = sigma_hat_and_profile(&seifert_matrix(w)?)?;
    let third = 1.0 / 3.0;
    let mut points: Vec<f64> = (1..=samples).map(|j| j as f64 * third / (samples + 1) as f64).collect();
    points.extend(profile.arcs.iter().map(|a| 0.5 * (a.start + a.end)).filter(|&m| m < third));
    let writhe = w.writhe() as f64;
    let mut worst = 0.0f64;
    for theta in points {
        if profile.jumps.iter().any(|j| (j.angle - theta).abs() < 1e-7) {
            continue;
        }
        if let Some(v) = profile.value_at(theta) {
            worst = worst.max((v as f64 + 2.0 * writhe * theta).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(s: &str) -> SeifertData {
        seifert_matrix(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn trefoil_profile() {
        let s = data("d^2");
        assert_eq!(levine_tristram_at(&s, 1.0 / 12.0).unwrap(), 0);
        assert_eq!(levine_tristram_at(&s, 0.5).unwrap(), -2);
        assert!(matches!(levine_tristram_at(&s, 1.0 / 6.0), Err(Error::AtJump { .. })));
        let p = sigma_hat_and_profile(&s).unwrap();
        assert_eq!(p.arcs.len(), 2);
        assert_eq!(p.sigma_hat, 2);
        assert_eq!(p.signature(), Some(-2));
        assert_eq!(p.value_at(0.9), Some(0));
    }

    #[test]
    fn figure_eight_is_flat() {
        let s = data("aB aB");
        for k in 1..10 {
            assert_eq!(levine_tristram_at(&s, k as f64 / 10.0).unwrap(), 0);
        }
        let p = sigma_hat_and_profile(&s).unwrap();
        assert_eq!((p.arcs.len(), p.sigma_hat), (1, 0));
    }

    #[test]
    fn links_are_rejected() {
        let s = data("a b^2 a");
        assert!(matches!(sigma_hat_and_profile(&s), Err(Error::NotAKnot { .. })));
        assert_eq!(signature_oracle(&"a".parse().unwrap()), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn gambaudo_ghys_examples() {
        assert!(gambaudo_ghys_deviation(&"d^2".parse().unwrap(), 100).unwrap() <= 2.0);
        assert!(gambaudo_ghys_deviation(&"aB aB".parse().unwrap(), 100).unwrap() <= 2.0);
    }
}
