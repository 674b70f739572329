//! Braid words over the letters `a`, `b`, `x = a⁻¹ba` and `δ = ba` of the
//! three-strand braid group, together with the elementary operations that do
//! not need any normal-form machinery.
//!
//! Words act left to right: the strand permutation of `uv` is that of `u`
//! followed by that of `v`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::ParseError;

/// Hard cap on the number of letters a parsed word may expand to.
pub const MAX_LETTERS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
    X,
    Delta,
}

impl Generator {
    /// Abelianisation weight: `δ = ba` counts twice.
    pub fn weight(self) -> i64 {
        match self {
            Generator::Delta => 2,
            _ => 1,
        }
    }

    /// `τ_i`: `a` for `i ≡ 1`, `b` for `i ≡ 2`, `x` for `i ≡ 0 (mod 3)`.
    pub fn tau(i: i64) -> Generator {
        match i.rem_euclid(3) {
            1 => Generator::A,
            2 => Generator::B,
            _ => Generator::X,
        }
    }

    /// Residue of `i` mod 3 with `τ_i = self`, or `None` for `δ`.
    pub fn tau_index(self) -> Option<u8> {
        match self {
            Generator::A => Some(1),
            Generator::B => Some(2),
            Generator::X => Some(0),
            Generator::Delta => None,
        }
    }

    pub(crate) fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
            Generator::X => 'x',
            Generator::Delta => 'd',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub const fn pos(generator: Generator) -> Letter {
        Letter { generator, sign: Sign::Pos }
    }

    pub const fn neg(generator: Generator) -> Letter {
        Letter { generator, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { generator: self.generator, sign: self.sign.flip() }
    }

    pub fn writhe(self) -> i64 {
        self.sign.value() * self.generator.weight()
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Pos
    }
}

/// Permutation of the strand positions `{0, 1, 2}` induced by a braid.
/// `images[i]` is where the strand starting at position `i` ends up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    pub images: [u8; 3],
}

impl StrandPermutation {
    pub const IDENTITY: StrandPermutation = StrandPermutation { images: [0, 1, 2] };

    pub fn of_letter(letter: Letter) -> StrandPermutation {
        let images = match (letter.generator, letter.sign) {
            (Generator::A, _) => [1, 0, 2],
            (Generator::B, _) => [0, 2, 1],
            (Generator::X, _) => [2, 1, 0],
            (Generator::Delta, Sign::Pos) => [1, 2, 0],
            (Generator::Delta, Sign::Neg) => [2, 0, 1],
        };
        StrandPermutation { images }
    }

    /// `self` followed by `other`.
    pub fn then(self, other: StrandPermutation) -> StrandPermutation {
        let mut images = [0u8; 3];
        for (i, img) in images.iter_mut().enumerate() {
            *img = other.images[self.images[i] as usize];
        }
        StrandPermutation { images }
    }

    pub fn cycle_count(self) -> usize {
        let mut seen = [false; 3];
        let mut cycles = 0;
        for start in 0..3 {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
            }
        }
        cycles
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(self) -> Vec<usize> {
        let mut seen = [false; 3];
        let mut lens = Vec::new();
        for start in 0..3 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = self.images[i] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new() -> BraidWord {
        BraidWord { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> BraidWord {
        BraidWord { letters }
    }

    /// A single positive generator raised to `exp` (negative powers give inverses).
    pub fn power(generator: Generator, exp: i64) -> BraidWord {
        let letter = if exp >= 0 { Letter::pos(generator) } else { Letter::neg(generator) };
        BraidWord { letters: vec![letter; exp.unsigned_abs() as usize] }
    }

    /// `τ_i^exp`.
    pub fn tau_power(i: i64, exp: i64) -> BraidWord {
        BraidWord::power(Generator::tau(i), exp)
    }

    pub fn delta_power(exp: i64) -> BraidWord {
        BraidWord::power(Generator::Delta, exp)
    }

    /// Garside's `Δ = aba` raised to `exp`, in standard generators.
    pub fn garside_delta_power(exp: i64) -> BraidWord {
        let unit = if exp >= 0 {
            [Letter::pos(Generator::A), Letter::pos(Generator::B), Letter::pos(Generator::A)]
        } else {
            [Letter::neg(Generator::A), Letter::neg(Generator::B), Letter::neg(Generator::A)]
        };
        let mut letters = Vec::with_capacity(3 * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            letters.extend_from_slice(&unit);
        }
        BraidWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn truncate(&mut self, len: usize) {
        self.letters.truncate(len);
    }

    pub fn extend_from(&mut self, other: &BraidWord) {
        self.letters.extend_from_slice(&other.letters);
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    pub fn repeat(&self, times: usize) -> BraidWord {
        BraidWord { letters: self.letters.repeat(times) }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &BraidWord) -> BraidWord {
        c.inverse().concat(self).concat(c)
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.writhe()).sum()
    }

    pub fn permutation(&self) -> StrandPermutation {
        self.letters.iter().fold(StrandPermutation::IDENTITY, |p, &l| p.then(StrandPermutation::of_letter(l)))
    }

    /// Number of components of the closure; the closure is a knot iff this is 1.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Reads the word backwards and swaps `a` with `b`; `x` and `δ` are fixed.
    pub fn reverse(&self) -> BraidWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| {
                let generator = match l.generator {
                    Generator::A => Generator::B,
                    Generator::B => Generator::A,
                    g => g,
                };
                Letter { generator, sign: l.sign }
            })
            .collect();
        BraidWord { letters }
    }

    /// Expands to standard generators and flips every sign in place.
    pub fn mirror(&self) -> BraidWord {
        let letters = self.expand_to_standard().letters.into_iter().map(|l| l.inverse()).collect();
        BraidWord { letters }
    }

    /// Rewrites `x = a⁻¹ba` and `δ = ba` so only `a^{±1}`, `b^{±1}` remain.
    pub fn expand_to_standard(&self) -> BraidWord {
        use Generator::*;
        let a = Letter::pos(A);
        let b = Letter::pos(B);
        let ai = Letter::neg(A);
        let bi = Letter::neg(B);
        let mut letters = Vec::with_capacity(self.len() * 2);
        for &l in &self.letters {
            match (l.generator, l.sign) {
                (A, _) | (B, _) => letters.push(l),
                (X, Sign::Pos) => letters.extend_from_slice(&[ai, b, a]),
                (X, Sign::Neg) => letters.extend_from_slice(&[ai, bi, a]),
                (Delta, Sign::Pos) => letters.extend_from_slice(&[b, a]),
                (Delta, Sign::Neg) => letters.extend_from_slice(&[ai, bi]),
            }
        }
        BraidWord { letters }
    }

    /// Cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match out.last() {
                Some(&last) if last == l.inverse() => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        BraidWord { letters: out }
    }

    /// Free reduction followed by cancelling inverse pairs across the ends.
    pub fn cyclic_reduce(&self) -> BraidWord {
        let reduced = self.free_reduce().letters;
        let mut lo = 0;
        let mut hi = reduced.len();
        while hi >= lo + 2 && reduced[lo] == reduced[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        BraidWord { letters: reduced[lo..hi].to_vec() }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Maximal runs of identical letters, as `(letter, run length)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match runs.last_mut() {
                Some((last, n)) if *last == l => *n += 1,
                _ => runs.push((l, 1)),
            }
        }
        runs
    }
}

impl FromIterator<Letter> for BraidWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        BraidWord { letters: iter.into_iter().collect() }
    }
}

pub(crate) fn fmt_syllable(f: &mut fmt::Formatter<'_>, symbol: char, exp: i64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{symbol}")
    } else {
        write!(f, "{symbol}^{exp}")
    }
}

impl fmt::Display for BraidWord {
    /// Canonical text: lowercase letters, `^k` run-length powers, one space
    /// between syllables. The empty word prints as `d^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("d^0");
        }
        for (i, (letter, n)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            fmt_syllable(f, letter.generator.symbol(), letter.sign.value() * n as i64)?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid_word(s)
    }
}

/// Parses letters `a b x d` (uppercase for inverses) with optional integer
/// powers `^k` and free whitespace. `^0` deletes the preceding letter.
pub fn parse_braid_word(text: &str) -> Result<BraidWord, ParseError> {
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let letter = match c {
            b'a' => Letter::pos(Generator::A),
            b'b' => Letter::pos(Generator::B),
            b'x' => Letter::pos(Generator::X),
            b'd' => Letter::pos(Generator::Delta),
            b'A' => Letter::neg(Generator::A),
            b'B' => Letter::neg(Generator::B),
            b'X' => Letter::neg(Generator::X),
            b'D' => Letter::neg(Generator::Delta),
            _ => {
                return Err(ParseError::Syntax {
                    offset: i,
                    message: format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                })
            }
        };
        i += 1;
        let mut exp: i64 = 1;
        // Whitespace is allowed between a letter and its power.
        let mut j = i;
        while j < bytes.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j < bytes.len() && bytes[j] == b'^' {
            let caret = j;
            j += 1;
            let mut negative = false;
            if j < bytes.len() && (bytes[j] == b'-' || bytes[j] == b'+') {
                negative = bytes[j] == b'-';
                j += 1;
            }
            let digits_start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if digits_start == j {
                return Err(ParseError::Syntax { offset: caret, message: "expected an integer after '^'".to_string() });
            }
            let magnitude: i64 = text[digits_start..j].parse().map_err(|_| ParseError::Syntax {
                offset: digits_start,
                message: "exponent out of range".to_string(),
            })?;
            exp = if negative { -magnitude } else { magnitude };
            i = j;
        }
        let count = exp.unsigned_abs() as usize;
        if letters.len().saturating_add(count) > MAX_LETTERS {
            return Err(ParseError::TooLong { limit: MAX_LETTERS });
        }
        let letter = if exp < 0 { letter.inverse() } else { letter };
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok(BraidWord { letters })
}
