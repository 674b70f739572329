//! Reduced Burau representation of `B₃` over `ℤ[t, t⁻¹]`. It is faithful on
//! three strands, which makes it the equality oracle for braid words.

use crate::laurent::LaurentPoly;
use crate::word::{BraidWord, Generator, Sign};

/// 2×2 matrix over Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl BurauMatrix {
    pub fn identity() -> BurauMatrix {
        BurauMatrix { entries: [[LaurentPoly::one(), LaurentPoly::zero()], [LaurentPoly::zero(), LaurentPoly::one()]] }
    }

    fn from_i64(m: [[(i64, i64); 2]; 2]) -> BurauMatrix {
        let e = |(c, k): (i64, i64)| if c == 0 { LaurentPoly::zero() } else { LaurentPoly::monomial(c, k) };
        BurauMatrix { entries: [[e(m[0][0]), e(m[0][1])], [e(m[1][0]), e(m[1][1])]] }
    }

    /// `σ₁ ↦ [[-t, 1], [0, 1]]`, `σ₂ ↦ [[1, 0], [t, -t]]` and their inverses.
    fn of_standard(generator: Generator, sign: Sign) -> BurauMatrix {
        match (generator, sign) {
            (Generator::A, Sign::Pos) => BurauMatrix::from_i64([[(-1, 1), (1, 0)], [(0, 0), (1, 0)]]),
            (Generator::A, Sign::Neg) => BurauMatrix::from_i64([[(-1, -1), (1, -1)], [(0, 0), (1, 0)]]),
            (Generator::B, Sign::Pos) => BurauMatrix::from_i64([[(1, 0), (0, 0)], [(1, 1), (-1, 1)]]),
            (Generator::B, Sign::Neg) => BurauMatrix::from_i64([[(1, 0), (0, 0)], [(1, 0), (-1, -1)]]),
            _ => unreachable!("only standard generators have direct images"),
        }
    }

    pub fn mul(&self, rhs: &BurauMatrix) -> BurauMatrix {
        let e = |i: usize, j: usize| {
            &(&self.entries[i][0] * &rhs.entries[0][j]) + &(&self.entries[i][1] * &rhs.entries[1][j])
        };
        BurauMatrix { entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn determinant(&self) -> LaurentPoly {
        let [[a, b], [c, d]] = &self.entries;
        &(a * d) - &(b * c)
    }

    /// `det(I - M)`.
    pub fn det_one_minus(&self) -> LaurentPoly {
        let one = LaurentPoly::one();
        let [[a, b], [c, d]] = &self.entries;
        let a1 = &one - a;
        let d1 = &one - d;
        &(&a1 * &d1) - &(b * c)
    }
}

pub fn burau_matrix(w: &BraidWord) -> BurauMatrix {
    w.expand_to_standard()
        .letters()
        .iter()
        .fold(BurauMatrix::identity(), |m, l| m.mul(&BurauMatrix::of_standard(l.generator, l.sign)))
}

/// Decides `u = v` in `B₃`: writhe, strand permutation, then the Burau images.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> bool {
    if u.writhe() != v.writhe() || u.permutation() != v.permutation() {
        return false;
    }
    let (u, v) = (u.free_reduce(), v.free_reduce());
    if u == v {
        return true;
    }
    burau_matrix(&u) == burau_matrix(&v)
}

/// Alexander polynomial of the closure from `det(I - ψ(β)) = (1 + t + t²)·Δ(t)`,
/// symmetrized with `Δ(1) > 0`. Returns `None` when the division fails, which
/// only happens for multi-component closures with vanishing `Δ`.
pub fn burau_alexander(w: &BraidWord) -> Option<LaurentPoly> {
    let det = burau_matrix(w).det_one_minus();
    let cyclo = LaurentPoly::from_i64(0, &[1, 1, 1]);
    det.div_exact(&cyclo).map(|p| p.symmetrized())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn braid_relation_holds() {
        assert_eq!(burau_matrix(&w("aba")), burau_matrix(&w("bab")));
        assert_eq!(burau_matrix(&w("aA")), BurauMatrix::identity());
        assert_eq!(burau_matrix(&w("Bb")), BurauMatrix::identity());
    }

    #[test]
    fn equality_examples() {
        assert!(braids_equal(&w("aba"), &w("bab")));
        assert!(braids_equal(&w("ax"), &w("ba")));
        assert!(braids_equal(&w("xb"), &w("d")));
        assert!(braids_equal(&w("a^-1 b a"), &w("x")));
        assert!(!braids_equal(&w("a"), &w("b")));
        assert!(!braids_equal(&w("ab"), &w("ba")));
        // The full twist is central.
        assert!(braids_equal(&w("d^3 a"), &w("a d^3")));
    }

    #[test]
    fn alexander_from_burau() {
        let trefoil = burau_alexander(&w("d^2")).unwrap();
        assert_eq!(trefoil, LaurentPoly::from_i64(-1, &[1, -1, 1]));
        let fig8 = burau_alexander(&w("aB aB")).unwrap();
        assert_eq!(fig8, LaurentPoly::from_i64(-1, &[-1, 3, -1]));
        let unknot = burau_alexander(&w("ab")).unwrap();
        assert_eq!(unknot, LaurentPoly::one());
    }
}
