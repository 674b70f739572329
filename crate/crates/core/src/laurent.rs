//! Exact integer Laurent polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// `Σ coeffs[k] · t^(low + k)`, kept trimmed: no zero coefficient at either end,
/// and the zero polynomial has no coefficients and `low = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> LaurentPoly {
        LaurentPoly::new(exp, vec![BigInt::from(coeff)])
    }

    pub fn new(low: i64, coeffs: Vec<BigInt>) -> LaurentPoly {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(low: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> i64 {
        self.low
    }

    pub fn high_degree(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by a polynomial whose lowest and highest coefficients are ±1.
    /// Returns `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero());
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let lead = divisor.coeffs.last().unwrap();
        assert!(lead.abs().is_one(), "divisor must be monic up to sign");
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        if rem.len() < dlen {
            return None;
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dlen - 1] * lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::new(self.low - divisor.low, quot))
    }

    /// Normalizes an Alexander-type polynomial: shifts so the exponents are
    /// symmetric about zero (when the span is even) and fixes the sign so the
    /// value at `t = 1` is positive.
    pub fn symmetrized(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let span = self.coeffs.len() as i64 - 1;
        let mut p = LaurentPoly { low: -(span / 2), coeffs: self.coeffs.clone() };
        if p.eval_at_one().is_negative() {
            p = -p;
        }
        p
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl Serialize for LaurentPoly {
    /// `{"low": k, "coeffs": [...]}`; coefficients outside `i64` become strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<Coeff> = self
            .coeffs
            .iter()
            .map(|c| c.to_i64().map(Coeff::Small).unwrap_or_else(|| Coeff::Big(c.to_string())))
            .collect();
        let mut st = serializer.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("low", &self.low)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().max(rhs.high_degree());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + k] += c;
        }
        LaurentPoly::new(low, coeffs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + rhs.low, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.low + k as i64;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if exp == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{exp}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = LaurentPoly::from_i64(-1, &[1, 2]); // t^-1 + 2
        let q = LaurentPoly::from_i64(0, &[-2, 1]); // -2 + t
        assert_eq!(&p + &q, LaurentPoly::from_i64(-1, &[1, 0, 1]));
        assert_eq!(&p * &q, LaurentPoly::from_i64(-1, &[-2, -3, 2]));
        assert!((&p - &p).is_zero());
        assert_eq!(p.shift(3).low_degree(), 2);
    }

    #[test]
    fn exact_division() {
        let cyclo = LaurentPoly::from_i64(0, &[1, 1, 1]);
        let trefoil = LaurentPoly::from_i64(0, &[1, -1, 1]);
        let prod = &cyclo * &trefoil;
        assert_eq!(prod.div_exact(&cyclo), Some(trefoil.clone()));
        assert_eq!(trefoil.div_exact(&cyclo), None);
    }

    #[test]
    fn symmetrize() {
        let p = LaurentPoly::from_i64(3, &[-1, 1, -1]);
        let s = p.symmetrized();
        assert_eq!(s, LaurentPoly::from_i64(-1, &[1, -1, 1]));
        assert_eq!(s.to_string(), "t - 1 + t^-1");
    }
}
