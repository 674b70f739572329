//! Conjugacy normal form in the classical generators, `Δ^ℓ σ₁^{p₁} σ₂^{p₂} …`
//! with `Δ = aba` and alternating syllables, in one of four shapes:
//!
//! * A: `ℓ` even, `r ≤ 1`;
//! * B: `ℓ` even, `Δ^ℓ a^{p₁} b` with `p₁ ∈ {1, 2, 3}`;
//! * C/D: all `pᵢ ≥ 2`, `ℓ ≡ r (mod 2)`, `p` minimal among its cyclic
//!   rotations, C for even and D for odd `ℓ`.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::burau::braids_equal;
use crate::cycling::{maximize_infimum, CyclicNormalForm};
use crate::error::{Error, Result};
use crate::word::{fmt_syllable, BraidWord, Generator, Letter, Sign};
use crate::xu::{is_xu_normal, least_rotation, XuForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GarsideCase {
    A,
    B,
    C,
    D,
}

impl GarsideCase {
    pub fn tag(self) -> char {
        match self {
            GarsideCase::A => 'A',
            GarsideCase::B => 'B',
            GarsideCase::C => 'C',
            GarsideCase::D => 'D',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GarsideForm {
    pub ell: i64,
    pub p: Vec<u32>,
    pub case: GarsideCase,
}

impl GarsideForm {
    pub fn r(&self) -> usize {
        self.p.len()
    }

    pub fn writhe(&self) -> i64 {
        3 * self.ell + self.p.iter().map(|&e| e as i64).sum::<i64>()
    }

    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::garside_delta_power(self.ell);
        for (i, &e) in self.p.iter().enumerate() {
            let g = if i % 2 == 0 { Generator::A } else { Generator::B };
            w.extend_from(&BraidWord::power(g, e as i64));
        }
        w
    }

    /// Checks the shape conditions and that the tag matches them.
    pub fn is_normal(&self) -> bool {
        if self.p.contains(&0) {
            return false;
        }
        let even = self.ell % 2 == 0;
        let r = self.r();
        match self.case {
            GarsideCase::A => even && r <= 1,
            GarsideCase::B => even && r == 2 && (1..=3).contains(&self.p[0]) && self.p[1] == 1,
            GarsideCase::C | GarsideCase::D => {
                (self.case == GarsideCase::C) == even
                    && r >= 1
                    && self.p.iter().all(|&e| e >= 2)
                    && (self.ell - r as i64).rem_euclid(2) == 0
                    && least_rotation(&self.p) == 0
            }
        }
    }

    fn shaped(ell: i64, p: Vec<u32>) -> GarsideForm {
        let case = if ell % 2 == 0 { GarsideCase::C } else { GarsideCase::D };
        let k = least_rotation(&p);
        let mut q = p[k..].to_vec();
        q.extend_from_slice(&p[..k]);
        GarsideForm { ell, p: q, case }
    }
}

impl fmt::Display for GarsideForm {
    /// `D^l` (omitted when `ℓ = 0` and there are syllables) followed by
    /// alternating `a`/`b` syllables, e.g. `D^1 a^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.ell != 0 || self.p.is_empty() {
            write!(f, "D^{}", self.ell)?;
            first = false;
        }
        for (i, &e) in self.p.iter().enumerate() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            fmt_syllable(f, if i % 2 == 0 { 'a' } else { 'b' }, e as i64)?;
        }
        Ok(())
    }
}

/// Left normal form `Δ^inf · P` with `P` a positive word in `a`, `b` that
/// contains no `Δ`; equivalently its syllables other than the first and last
/// have length at least two.
#[derive(Debug, Clone)]
struct GarsideState {
    inf: i64,
    /// `true` for `b`, stored relative to `flip`.
    letters: VecDeque<bool>,
    flip: bool,
}

fn letter_of(is_b: bool) -> Letter {
    Letter::pos(if is_b { Generator::B } else { Generator::A })
}

impl GarsideState {
    fn from_word(w: &BraidWord) -> GarsideState {
        let mut s = GarsideState { inf: 0, letters: VecDeque::new(), flip: false };
        for l in w.expand_to_standard().letters() {
            let is_b = l.generator == Generator::B;
            match l.sign {
                Sign::Pos => s.push(is_b),
                // a⁻¹ = Δ⁻¹ab and b⁻¹ = Δ⁻¹ba
                Sign::Neg => {
                    s.push_delta(-1);
                    s.push(is_b);
                    s.push(!is_b);
                }
            }
        }
        s
    }

    fn actual(&self, i: usize) -> bool {
        self.letters[i] ^ self.flip
    }

    /// `P Δ^e = Δ^e τ^e(P)` where `τ` swaps `a` and `b`.
    fn push_delta(&mut self, e: i64) {
        if e % 2 != 0 {
            self.flip = !self.flip;
        }
        self.inf += e;
    }

    fn push(&mut self, c: bool) {
        let len = self.letters.len();
        if len >= 2 {
            let last = self.actual(len - 1);
            let before = self.actual(len - 2);
            let last_single = len == 2 || self.actual(len - 3) != last;
            if last != c && before == c && last_single {
                self.letters.pop_back();
                self.letters.pop_back();
                self.push_delta(1);
                return;
            }
        }
        self.letters.push_back(c ^ self.flip);
    }

    fn indices(&self) -> Vec<bool> {
        (0..self.letters.len()).map(|i| self.actual(i)).collect()
    }

    fn syllables(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        let mut prev = None;
        for c in self.indices() {
            if prev == Some(c) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
            prev = Some(c);
        }
        out
    }

    /// Moves the first `count` letters to the end, conjugating by their image
    /// under `τ^inf`.
    fn rotate_letters(&mut self, count: usize, conjugator: &mut BraidWord) {
        for _ in 0..count {
            let c = self.actual(0) ^ (self.inf % 2 != 0);
            self.letters.pop_front();
            self.push(c);
            conjugator.push(letter_of(c));
        }
    }

    fn start_with_a(&mut self, conjugator: &mut BraidWord) {
        if !self.letters.is_empty() && self.actual(0) {
            self.flip = !self.flip;
            conjugator.extend_from(&BraidWord::garside_delta_power(1));
        }
    }
}

impl CyclicNormalForm for GarsideState {
    type Key = (i64, Vec<bool>);

    fn infimum(&self) -> i64 {
        self.inf
    }

    fn key(&self) -> Self::Key {
        (self.inf, self.indices())
    }

    /// Moves the first simple factor (`ab`/`ba` when the first syllable is a
    /// single letter, otherwise one letter) to the end.
    fn cycle(&mut self) -> BraidWord {
        let len = self.letters.len();
        if len == 0 {
            return BraidWord::new();
        }
        let count = if len >= 2 && self.actual(0) != self.actual(1) { 2 } else { 1 };
        let mut c = BraidWord::new();
        self.rotate_letters(count, &mut c);
        c
    }
}

#[derive(Debug, Clone)]
pub struct CertifiedGarsideForm {
    pub form: GarsideForm,
    pub conjugator: BraidWord,
}

impl CertifiedGarsideForm {
    pub fn verify(&self, w: &BraidWord) -> bool {
        braids_equal(&w.conjugate_by(&self.conjugator), &self.form.to_word())
    }
}

pub fn garside_normalize_certified(w: &BraidWord) -> CertifiedGarsideForm {
    let mut s = GarsideState::from_word(w);
    let mut g = BraidWord::new();
    // Rotations after maximization never raise the infimum, and cycling again
    // could undo them, so cycling only reruns if the infimum moved.
    let mut maximized = None;
    let form = 'search: loop {
        if maximized != Some(s.inf) {
            maximize_infimum(&mut s, &mut g);
            maximized = Some(s.inf);
        }
        s.start_with_a(&mut g);
        let ell = s.inf;
        let p = s.syllables();
        let r = p.len();
        let even = ell % 2 == 0;
        if r >= 2 && (r as i64 - ell).rem_euclid(2) != 0 {
            // The first syllable lands next to a last syllable of the same letter.
            s.rotate_letters(p[0] as usize, &mut g);
            continue;
        }
        if r >= 2 && p.contains(&1) {
            if r == 2 && p == [1, 1] && even {
                break GarsideForm { ell, p, case: GarsideCase::B };
            }
            for &e in &p {
                s.rotate_letters(e as usize, &mut g);
                if s.inf > ell {
                    continue 'search;
                }
            }
            panic!("no Garside shape for Δ^{ell} with exponents {p:?}");
        }
        match (r, even) {
            (0, true) => break GarsideForm { ell, p, case: GarsideCase::A },
            (1, true) => break GarsideForm { ell, p, case: GarsideCase::A },
            (0, false) => {
                // Δ = a · a²b · a⁻¹
                g.extend_from(&BraidWord::power(Generator::A, -1));
                break GarsideForm { ell: ell - 1, p: vec![2, 1], case: GarsideCase::B };
            }
            (1, false) if p[0] == 1 => {
                // (ba⁻¹)⁻¹ · Δa · ba⁻¹ = a³b
                g.extend_from(&"bA".parse().unwrap());
                break GarsideForm { ell: ell - 1, p: vec![3, 1], case: GarsideCase::B };
            }
            _ => {
                let k = least_rotation(&p);
                for &e in &p[..k] {
                    s.rotate_letters(e as usize, &mut g);
                }
                s.start_with_a(&mut g);
                debug_assert_eq!(s.inf, ell);
                break GarsideForm::shaped(ell, s.syllables());
            }
        }
    };
    debug_assert!(form.is_normal(), "{form} is not normal");
    CertifiedGarsideForm { form, conjugator: g }
}

pub fn garside_normalize(w: &BraidWord) -> GarsideForm {
    garside_normalize_certified(w).form
}

/// Converts a band-generator normal form by the closed-form table, with
/// `n = 3k + m`.
pub fn xu_to_garside(f: &XuForm) -> Result<GarsideForm> {
    if !is_xu_normal(f.n, &f.u) {
        return Err(Error::InvalidForm(format!("n = {}, u = {:?}", f.n, f.u)));
    }
    let k = f.n.div_euclid(3);
    let m = f.n.rem_euclid(3);
    let form = |ell: i64, p: Vec<u32>, case| GarsideForm { ell, p, case };
    Ok(match (f.t(), m) {
        (0, 0) => form(2 * k, vec![], GarsideCase::A),
        (0, 1) => form(2 * k, vec![1, 1], GarsideCase::B),
        (0, _) => form(2 * k, vec![3, 1], GarsideCase::B),
        (1, 0) => form(2 * k, vec![f.u[0]], GarsideCase::A),
        (1, 1) => form(2 * k, vec![2, 1], GarsideCase::B),
        (1, _) => form(2 * k + 1, vec![1 + f.u[0]], GarsideCase::D),
        (t, _) => {
            let ell = (2 * f.n - t as i64) / 3;
            GarsideForm::shaped(ell, f.u.iter().map(|&e| e + 1).collect())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn gf(ell: i64, p: &[u32], case: GarsideCase) -> GarsideForm {
        GarsideForm { ell, p: p.to_vec(), case }
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(garside_normalize(&w("d^2")), gf(0, &[3, 1], GarsideCase::B));
        assert_eq!(garside_normalize(&w("d a^2 b^2")), gf(0, &[3, 3], GarsideCase::C));
        assert_eq!(garside_normalize(&w("aba")), gf(0, &[2, 1], GarsideCase::B));
        assert_eq!(garside_normalize(&w("ab")), gf(0, &[1, 1], GarsideCase::B));
        assert_eq!(garside_normalize(&w("a^5 b")), gf(1, &[3], GarsideCase::D));
        assert_eq!(garside_normalize(&BraidWord::new()), gf(0, &[], GarsideCase::A));
    }

    #[test]
    fn conjugators_certify() {
        for s in ["aba", "d^2", "d^5", "a^5 b", "aB aB", "AbXbDaxB", "d^3 a", "d^4 a", "d a^2 b^2 x"] {
            let word = w(s);
            let c = garside_normalize_certified(&word);
            assert!(c.verify(&word), "{s} -> {}", c.form);
        }
    }

    #[test]
    fn table_examples() {
        let x = |n, u: &[u32]| XuForm::new(n, u.to_vec()).unwrap();
        assert_eq!(xu_to_garside(&x(3, &[2])).unwrap(), gf(2, &[2], GarsideCase::A));
        assert_eq!(xu_to_garside(&x(1, &[])).unwrap(), gf(0, &[1, 1], GarsideCase::B));
        assert_eq!(xu_to_garside(&x(2, &[2])).unwrap(), gf(1, &[3], GarsideCase::D));
        let bad = XuForm { n: 1, u: vec![2] };
        assert!(matches!(xu_to_garside(&bad), Err(Error::InvalidForm(_))));
    }

    #[test]
    fn display() {
        assert_eq!(gf(1, &[3], GarsideCase::D).to_string(), "D^1 a^3");
        assert_eq!(gf(0, &[3, 3], GarsideCase::C).to_string(), "a^3 b^3");
        assert_eq!(gf(0, &[], GarsideCase::A).to_string(), "D^0");
    }
}
