//! Roots of a symmetric Laurent polynomial on the upper unit semicircle.
//!
//! `Δ(t)` with `Δ(t⁻¹) = Δ(t)` is a polynomial `P(z)` in `z = t + t⁻¹`, and
//! `t = e^{2πiθ}` maps to `z = 2cos 2πθ`. Roots with `θ ∈ (0, ½]` are the real
//! roots of `P` in `[−2, 2)`. They are counted exactly with Sturm sequences
//! on the square-free factors of `P` and refined by exact bisection at dyadic
//! points.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::laurent::LaurentPoly;

use super::SeifertData;

/// Default width, in fractions of a full turn, of the final bracket around each root.
pub const JUMP_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Jump {
    /// Fraction of a full turn in `(0, ½]`.
    pub angle: f64,
    pub multiplicity: u32,
}

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect())
}

fn sub(p: &Poly, q: &Poly) -> Poly {
    let n = p.len().max(q.len());
    let zero = BigRational::zero();
    trim((0..n).map(|i| p.get(i).unwrap_or(&zero) - q.get(i).unwrap_or(&zero)).collect())
}

fn div_rem(p: &Poly, q: &Poly) -> (Poly, Poly) {
    let mut rem = p.clone();
    let dq = degree(q);
    let lead = q.last().expect("division by zero polynomial").clone();
    if rem.len() < q.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dq];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dq] / &lead;
        if !c.is_zero() {
            for (j, d) in q.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &c * d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dq);
    (trim(quot), trim(rem))
}

fn monic(p: Poly) -> Poly {
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = div_rem(&a, &b).1;
        a = b;
        b = r;
    }
    monic(a)
}

/// Yun's algorithm: `p = c · Π fᵢ^i` with square-free, pairwise coprime `fᵢ`.
fn square_free_factors(p: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if degree(p) == 0 {
        return out;
    }
    let dp = derivative(p);
    let a0 = gcd(p, &dp);
    let mut b = div_rem(p, &a0).0;
    let c = div_rem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while degree(&b) > 0 {
        let a = gcd(&b, &d);
        let next_b = div_rem(&b, &a).0;
        let next_c = div_rem(&d, &a).0;
        if degree(&a) > 0 {
            out.push((a, i));
        }
        d = sub(&next_c, &derivative(&next_b));
        b = next_b;
        i += 1;
    }
    out
}

/// Scales a rational polynomial by a positive constant to integer coefficients.
fn to_integer(p: &Poly) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

/// A point `m / 2^k`.
#[derive(Clone, Debug)]
struct Dyadic {
    m: BigInt,
    k: u32,
}

impl Dyadic {
    fn from_int(v: i64) -> Dyadic {
        Dyadic { m: BigInt::from(v), k: 0 }
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let k = a.k.max(b.k) + 1;
        let m = (&a.m << (k - 1 - a.k)) + (&b.m << (k - 1 - b.k));
        Dyadic { m, k }.reduced()
    }

    fn reduced(mut self) -> Dyadic {
        while self.k > 0 && self.m.is_even() {
            self.m >>= 1;
            self.k -= 1;
        }
        self
    }

    fn to_f64(&self) -> f64 {
        let num: f64 = self.m.to_string().parse().unwrap();
        num / 2f64.powi(self.k as i32)
    }
}

/// Sign of `Σ cᵢ xⁱ` at a dyadic point, exactly.
fn sign_at(p: &[BigInt], x: &Dyadic) -> i32 {
    let d = p.len().saturating_sub(1) as u32;
    let mut acc = BigInt::zero();
    let mut power = BigInt::one();
    for (i, c) in p.iter().enumerate() {
        // c · m^i · 2^{k(d − i)}
        let term = (c * &power) << (x.k * (d - i as u32));
        acc += term;
        power *= &x.m;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

struct Sturm {
    chain: Vec<Vec<BigInt>>,
}

impl Sturm {
    fn new(p: &Poly) -> Sturm {
        let mut seq = vec![p.clone(), derivative(p)];
        while !seq.last().unwrap().is_empty() {
            let n = seq.len();
            let r = div_rem(&seq[n - 2], &seq[n - 1]).1;
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        Sturm { chain: seq.iter().filter(|q| !q.is_empty()).map(to_integer).collect() }
    }

    fn variations(&self, x: &Dyadic) -> usize {
        let signs: Vec<i32> = self.chain.iter().map(|q| sign_at(q, x)).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Dyadic, hi: &Dyadic) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// `P(z)` with `P(t + t⁻¹) = Δ(t)`, constant coefficient first.
pub(crate) fn z_polynomial(delta: &LaurentPoly) -> Vec<BigInt> {
    let d = delta.high_degree().max(0);
    assert!(delta.is_zero() || delta.low_degree() == -d, "polynomial is not symmetric: {delta}");
    for k in 1..=d {
        assert_eq!(delta.coeff(k), delta.coeff(-k), "polynomial is not symmetric: {delta}");
    }
    // V₀ = 2, V₁ = z, V_{k+1} = z V_k − V_{k−1}, with t^k + t^{-k} = V_k(z).
    let mut out = vec![BigInt::zero(); d as usize + 1];
    out[0] = delta.coeff(0);
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for k in 1..=d as usize {
        let c = delta.coeff(k as i64);
        for (i, v) in cur.iter().enumerate() {
            out[i] += &c * v;
        }
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, v) in cur.iter().enumerate() {
            next[i + 1] += v;
        }
        for (i, v) in prev.iter().enumerate() {
            next[i] -= v;
        }
        prev = cur;
        cur = next;
    }
    out
}

fn z_to_angle(z: f64) -> f64 {
    (z / 2.0).clamp(-1.0, 1.0).acos() / (2.0 * PI)
}

/// Roots of `Δ` at `e^{2πiθ}` with `θ ∈ (0, ½]`, increasing in `θ`.
pub fn unit_circle_jumps(s: &SeifertData) -> Vec<Jump> {
    unit_circle_jumps_with_tolerance(&s.alexander, JUMP_TOLERANCE)
}

pub fn unit_circle_jumps_with_tolerance(delta: &LaurentPoly, tolerance: f64) -> Vec<Jump> {
    if delta.is_zero() {
        return Vec::new();
    }
    let p: Poly = trim(z_polynomial(delta).into_iter().map(BigRational::from_integer).collect());
    let mut jumps = Vec::new();
    for (factor, multiplicity) in square_free_factors(&p) {
        let ints = to_integer(&factor);
        let sturm = Sturm::new(&factor);
        let lo = Dyadic::from_int(-2);
        let hi = Dyadic::from_int(2);
        if sign_at(&ints, &lo) == 0 {
            jumps.push(Jump { angle: 0.5, multiplicity });
        }
        // Roots in (−2, 2); z = 2 means θ = 0 and is excluded.
        let mut stack = vec![(lo, hi)];
        while let Some((a, b)) = stack.pop() {
            let mut count = sturm.count(&a, &b);
            if sign_at(&ints, &b) == 0 && b.m == BigInt::from(2) && b.k == 0 {
                count -= 1;
            }
            match count {
                0 => {}
                1 => jumps.push(Jump { angle: refine(&ints, &sturm, a, b, tolerance), multiplicity }),
                _ => {
                    let mid = Dyadic::midpoint(&a, &b);
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }
    jumps.sort_by(|x, y| x.angle.total_cmp(&y.angle));
    jumps
}

/// Shrinks `(a, b]`, known to hold exactly one root, until its image in
/// angle space is narrower than `tolerance`.
fn refine(p: &[BigInt], sturm: &Sturm, mut a: Dyadic, mut b: Dyadic, tolerance: f64) -> f64 {
    loop {
        if sign_at(p, &b) == 0 {
            return z_to_angle(b.to_f64());
        }
        let (ta, tb) = (z_to_angle(a.to_f64()), z_to_angle(b.to_f64()));
        if (ta - tb).abs() < tolerance || b.k > 200 {
            return 0.5 * (ta + tb);
        }
        let mid = Dyadic::midpoint(&a, &b);
        if sturm.count(&a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn angles(delta: &LaurentPoly) -> Vec<f64> {
        unit_circle_jumps_with_tolerance(delta, 1e-12).iter().map(|j| j.angle).collect()
    }

    #[test]
    fn z_substitution() {
        // t − 1 + t⁻¹ = z − 1
        let p = z_polynomial(&LaurentPoly::from_i64(-1, &[1, -1, 1]));
        assert_eq!(p, vec![BigInt::from(-1), BigInt::from(1)]);
        // t² + t⁻² = z² − 2
        let p = z_polynomial(&LaurentPoly::from_i64(-2, &[1, 0, 0, 0, 1]));
        assert_eq!(p, vec![BigInt::from(-2), BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn trefoil_and_figure_eight() {
        let tre = angles(&LaurentPoly::from_i64(-1, &[1, -1, 1]));
        assert_eq!(tre.len(), 1);
        assert!((tre[0] - 1.0 / 6.0).abs() < 1e-10);
        assert!(angles(&LaurentPoly::from_i64(-1, &[-1, 3, -1])).is_empty());
        assert!(angles(&LaurentPoly::one()).is_empty());
    }

    #[test]
    fn torus_two_five() {
        let a = angles(&LaurentPoly::from_i64(-2, &[1, -1, 1, -1, 1]));
        assert_eq!(a.len(), 2);
        assert!((a[0] - 0.1).abs() < 1e-10 && (a[1] - 0.3).abs() < 1e-10, "{a:?}");
    }

    #[test]
    fn repeated_roots_report_multiplicity() {
        let tre = LaurentPoly::from_i64(-1, &[1, -1, 1]);
        let square = &tre * &tre;
        let j = unit_circle_jumps_with_tolerance(&square, 1e-10);
        assert_eq!(j.len(), 1);
        assert_eq!(j[0].multiplicity, 2);
        // (t + 2 + t⁻¹) vanishes at t = −1, i.e. θ = ½
        let at_half = unit_circle_jumps_with_tolerance(&LaurentPoly::from_i64(-1, &[1, 2, 1]), 1e-10);
        assert_eq!(at_half, vec![Jump { angle: 0.5, multiplicity: 1 }]);
    }
}
