//! Exact `det(A − tAᵀ)` for an integer matrix `A`: evaluate at `t = 0, …, N`
//! modulo enough word-sized primes to cover a coefficient bound, interpolate
//! each image and lift with the Chinese remainder theorem.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin; these bases are exact below `3.3 · 10²⁴`.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes just below `2⁶²`, largest first.
fn primes() -> impl Iterator<Item = u64> {
    let mut candidate = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(candidate) {
            candidate -= 2;
        }
        let p = candidate;
        candidate -= 2;
        Some(p)
    })
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[col][col], p);
        let inv = inv_mod(m[col][col], p);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(m[r][col], inv, p);
            for c in col..n {
                let sub = mul_mod(factor, m[col][c], p);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
    }
    det
}

/// Coefficients (constant first) of the polynomial of degree `< xs.len()`
/// through the given points, modulo `p`.
fn interpolate_mod(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let num = (coef[i] + p - coef[i - 1]) % p;
            let den = (xs[i] + p - xs[i - k]) % p;
            coef[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut poly = vec![0u64; n];
    for k in (0..n).rev() {
        // poly = poly · (t − x_k) + coef[k]
        let mut next = vec![0u64; n];
        for d in 0..n {
            if poly[d] == 0 {
                continue;
            }
            if d + 1 < n {
                next[d + 1] = (next[d + 1] + poly[d]) % p;
            }
            let sub = mul_mod(poly[d], xs[k] % p, p);
            next[d] = (next[d] + p - sub) % p;
        }
        next[0] = (next[0] + coef[k]) % p;
        poly = next;
    }
    poly
}

fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// `det(A − tAᵀ)` as a polynomial in `t` (lowest exponent 0 before trimming).
pub(crate) fn det_a_minus_t_at(a: &[Vec<i64>]) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    // Every coefficient is bounded by the maximum of |det| on the unit circle,
    // hence by the product of the row norms of |A| + |Aᵀ|.
    let mut bound = BigInt::one();
    for i in 0..n {
        let row: i64 = (0..n).map(|j| a[i][j].abs() + a[j][i].abs()).sum();
        bound *= BigInt::from(row.max(1));
    }
    let needed = bound * 2;
    let xs: Vec<u64> = (0..=n as u64).collect();
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in primes() {
        let ys: Vec<u64> = xs
            .iter()
            .map(|&t| {
                let m = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let v = reduce(a[i][j], p);
                                let w = mul_mod(t, reduce(a[j][i], p), p);
                                (v + p - w) % p
                            })
                            .collect()
                    })
                    .collect();
                det_mod(m, p)
            })
            .collect();
        let coeffs = interpolate_mod(&xs, &ys, p);
        let pb = BigInt::from(p);
        let inv = BigInt::from(inv_mod((&modulus % &pb).try_into().unwrap(), p));
        for (c, &r) in acc.iter_mut().zip(&coeffs) {
            let diff = (BigInt::from(r) - &*c).mod_floor_big(&pb);
            *c += &modulus * ((diff * &inv) % &pb);
        }
        modulus *= pb;
        if modulus > needed {
            break;
        }
    }
    let half = &modulus / 2;
    let coeffs = acc.into_iter().map(|c| if c > half { c - &modulus } else { c }).collect();
    LaurentPoly::new(0, coeffs)
}

trait ModFloor {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert!(ps.iter().all(|&p| p < 1 << 62 && is_prime(p)));
        assert!(is_prime(2_305_843_009_213_693_951)); // 2⁶¹ − 1
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn small_determinants() {
        // A = [[-1, 1], [0, -1]]: det(A − tAᵀ) = (t − 1)² + t = t² − t + 1
        let a = vec![vec![-1, 1], vec![0, -1]];
        assert_eq!(det_a_minus_t_at(&a), LaurentPoly::from_i64(0, &[1, -1, 1]));
        let big = vec![vec![1_000_000, 3], vec![-7, 2_000_000]];
        // (1e6 − 1e6 t)(2e6 − 2e6 t) − (3 + 7t)(−7 − 3t)
        let expected =
            LaurentPoly::from_i64(0, &[2_000_000_000_000 + 21, -4_000_000_000_000 + 58, 2_000_000_000_000 + 21]);
        assert_eq!(det_a_minus_t_at(&big), expected);
    }
}
