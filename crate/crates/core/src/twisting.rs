//! Word-level untwisting certificates.
//!
//! A certificate is a start word followed by moves, each carrying the word it
//! produces. Replay recomputes every move and checks the declared result with
//! the group-equality or conjugacy oracle, and the last word must close to the
//! unknot. The resulting bound on the topological 4-genus is the number of
//! twists plus half the number of saddles.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::burau::braids_equal;
use crate::error::{Error, Result};
use crate::word::{BraidWord, Generator, Letter};
use crate::xu::{conjugate_in_b3, unknot_forms, xu_normalize, XuForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum Move {
    /// Same braid, different word.
    Rewrite,
    /// Conjugate braid.
    Conjugate,
    /// Changes the crossing of the band letter at `position`; one twist.
    CrossingChange { position: usize },
    /// Deletes six consecutive letters `τ_i … τ_{i+5}` (a copy of `abxabx` up
    /// to index shift) starting at `position`, using one twist on four
    /// strands and one on two; two twists.
    Annihilate { position: usize },
    /// Deletes the band letter at `position`: a saddle cobordism.
    Saddle { position: usize },
    /// Turns the whole word `τ_i² τ_{i+1} τ_{i+2} τ_i² τ_{i+1} τ_{i+2}` into an
    /// unknot-closing tangle with one twist on four strands and one on two;
    /// two twists, result recorded as `δ`.
    TangleUntwist,
}

impl Move {
    pub fn twists(self) -> u32 {
        match self {
            Move::CrossingChange { .. } => 1,
            Move::Annihilate { .. } | Move::TangleUntwist => 2,
            _ => 0,
        }
    }

    pub fn is_saddle(self) -> bool {
        matches!(self, Move::Saddle { .. })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Rewrite => f.write_str("rewrite"),
            Move::Conjugate => f.write_str("conjugate"),
            Move::CrossingChange { position } => write!(f, "crossing change at {position}"),
            Move::Annihilate { position } => write!(f, "annihilate abxabx at {position}"),
            Move::Saddle { position } => write!(f, "saddle at {position}"),
            Move::TangleUntwist => f.write_str("untwist a^2 b x a^2 b x"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(flatten)]
    pub mv: Move,
    pub result: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("step {step}: {reason}")]
    BadStep { step: usize, reason: String },
    #[error("odd number of saddles ({0})")]
    OddSaddles(usize),
    #[error("final word {0} does not close to the unknot")]
    NotUnknot(BraidWord),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub start: BraidWord,
    pub steps: Vec<Step>,
}

fn band_letter(w: &BraidWord, position: usize) -> Option<Letter> {
    w.letters().get(position).copied().filter(|l| l.generator != Generator::Delta)
}

fn remove(w: &BraidWord, from: usize, len: usize) -> BraidWord {
    let l = w.letters();
    l[..from].iter().chain(&l[from + len..]).copied().collect()
}

fn is_shifted_pattern(letters: &[Letter], exponents: &[usize]) -> bool {
    let Some(first) = letters.first().and_then(|l| l.generator.tau_index()) else {
        return false;
    };
    let expected: Vec<Letter> = exponents
        .iter()
        .enumerate()
        .flat_map(|(k, &e)| std::iter::repeat_n(Letter::pos(Generator::tau(first as i64 + k as i64)), e))
        .collect();
    letters == expected.as_slice()
}

/// The word a move produces from `w`, or why it does not apply.
fn apply(w: &BraidWord, mv: Move) -> std::result::Result<BraidWord, String> {
    match mv {
        Move::Rewrite | Move::Conjugate => Ok(w.clone()),
        Move::CrossingChange { position } => {
            band_letter(w, position).ok_or_else(|| format!("no band letter at {position}"))?;
            let mut letters = w.letters().to_vec();
            letters[position] = letters[position].inverse();
            Ok(BraidWord::from_letters(letters))
        }
        Move::Annihilate { position } => {
            let window = w.letters().get(position..position + 6).ok_or("pattern runs past the end")?;
            if !is_shifted_pattern(window, &[1; 6]) {
                return Err(format!("no abxabx pattern at {position}"));
            }
            Ok(remove(w, position, 6))
        }
        Move::Saddle { position } => {
            band_letter(w, position).ok_or_else(|| format!("no band letter at {position}"))?;
            Ok(remove(w, position, 1))
        }
        Move::TangleUntwist => {
            if !is_shifted_pattern(w.letters(), &[2, 1, 1, 2, 1, 1]) {
                return Err("word is not a^2 b x a^2 b x up to index shift".into());
            }
            Ok(BraidWord::delta_power(1))
        }
    }
}

impl Certificate {
    pub fn twists(&self) -> u32 {
        self.steps.iter().map(|s| s.mv.twists()).sum()
    }

    pub fn saddles(&self) -> usize {
        self.steps.iter().filter(|s| s.mv.is_saddle()).count()
    }

    /// Upper bound on the topological 4-genus of the start closure.
    pub fn bound(&self) -> i64 {
        self.twists() as i64 + self.saddles() as i64 / 2
    }

    pub fn end(&self) -> &BraidWord {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    pub fn replay(&self) -> std::result::Result<(), CertificateError> {
        let mut current = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let bad = |reason: String| CertificateError::BadStep { step: i, reason };
            let produced = apply(&current, step.mv).map_err(bad)?;
            let ok = match step.mv {
                Move::Conjugate => conjugate_in_b3(&produced, &step.result),
                _ => braids_equal(&produced, &step.result),
            };
            if !ok {
                return Err(bad(format!("{} does not give {}", step.mv, step.result)));
            }
            current = step.result.clone();
        }
        if self.saddles() % 2 != 0 {
            return Err(CertificateError::OddSaddles(self.saddles()));
        }
        if !unknot_forms().contains(&xu_normalize(&current)) {
            return Err(CertificateError::NotUnknot(current));
        }
        Ok(())
    }

    /// One line per move, e.g. `crossing change at 3 -> d^2 a^2`.
    pub fn describe(&self) -> Vec<String> {
        self.steps.iter().map(|s| format!("{} -> {}", s.mv, s.result)).collect()
    }
}

/// Families with a scripted untwisting sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScriptedFamily {
    /// `δⁿ`, closing to `T(3, n)`.
    Torus,
    /// `δ^{3ℓ+2} a^u`.
    DeltaA,
    /// `δ^{3ℓ+1} a^{u₁} b^{u₂}`.
    DeltaAB,
    /// Braid-positive forms with `t ≥ 3`, all `uᵢ ≥ 2`, `2n ≥ t`.
    BraidPositive,
    /// `(abx)^{2k} a b x² a b x²`.
    Abx,
}

impl fmt::Display for ScriptedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScriptedFamily::Torus => "torus",
            ScriptedFamily::DeltaA => "delta-a",
            ScriptedFamily::DeltaAB => "delta-ab",
            ScriptedFamily::BraidPositive => "braid-positive",
            ScriptedFamily::Abx => "abx",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistingBound {
    pub family: ScriptedFamily,
    pub bound: i64,
    pub certificate: Certificate,
}

struct Script {
    cert: Certificate,
}

/// `τ_{i₁}^{e₁} τ_{i₂}^{e₂} …`.
fn taus(syllables: &[(i64, usize)]) -> BraidWord {
    syllables.iter().fold(BraidWord::new(), |w, &(i, e)| w.concat(&BraidWord::tau_power(i, e as i64)))
}

fn delta(n: i64) -> BraidWord {
    BraidWord::delta_power(n)
}

fn word(s: &str) -> BraidWord {
    s.parse().expect("script word")
}

impl Script {
    fn new(start: BraidWord) -> Script {
        Script { cert: Certificate { start, steps: Vec::new() } }
    }

    fn current(&self) -> &BraidWord {
        self.cert.end()
    }

    fn push(&mut self, mv: Move, result: BraidWord) {
        self.cert.steps.push(Step { mv, result });
    }

    fn rewrite(&mut self, w: BraidWord) {
        self.push(Move::Rewrite, w);
    }

    fn conjugate(&mut self, w: BraidWord) {
        if &w != self.current() {
            self.push(Move::Conjugate, w);
        }
    }

    fn apply_reduced(&mut self, mv: Move) {
        let next = apply(self.current(), mv).expect("scripted move applies").free_reduce();
        self.push(mv, next);
    }

    fn cross(&mut self, position: usize) {
        self.apply_reduced(Move::CrossingChange { position });
    }

    fn annihilate(&mut self, position: usize) {
        self.apply_reduced(Move::Annihilate { position });
    }

    fn saddle(&mut self, position: usize) {
        self.apply_reduced(Move::Saddle { position });
    }

    /// `δᵐ → δᵐ a⁻¹ a → δᵐ a⁻²`, one crossing change.
    fn cross_off_delta(&mut self, m: i64) {
        self.conjugate(delta(m));
        self.rewrite(delta(m).concat(&word("A a")));
        self.cross(m as usize + 1);
    }

    /// Current word conjugate to `δᵐ`, `m ≢ 0 (mod 3)`: `⌈2m/3⌉` twists.
    fn torus(&mut self, m: i64) {
        match m.rem_euclid(3) {
            _ if m == 1 => self.conjugate(delta(1)),
            2 => {
                self.cross_off_delta(m);
                self.conjugate(delta(m - 1));
                self.torus(m - 1);
            }
            1 => {
                self.cross_off_delta(m);
                self.conjugate(delta(m - 2).concat(&word("a^2")));
                self.delta_a2((m - 4) / 3);
            }
            _ => unreachable!("three-component closure"),
        }
    }

    /// Current word conjugate to `δ^{3ℓ+2} a²`: `2ℓ + 2` twists.
    fn delta_a2(&mut self, l: i64) {
        if l == 0 {
            self.conjugate(word("a b a^4"));
            self.cross(5);
            self.cross(3);
            return;
        }
        let m = 3 * l - 3;
        self.rewrite(delta(m).concat(&word("x^5 b x a b x a^2")));
        self.conjugate(delta(m).concat(&word("b^5 a b x a b x x")));
        self.annihilate(m as usize + 5);
        self.conjugate(delta(3 * l - 1).concat(&word("a^2")));
        self.delta_a2(l - 1);
    }

    /// Current word conjugate to `δ^{3ℓ+1} a² b²`: `2ℓ + 2` twists.
    fn delta_a2b2(&mut self, l: i64) {
        match l {
            0 => {
                self.conjugate(word("d a^2 b^2"));
                self.cross(2);
                self.cross(2);
            }
            1 => {
                self.conjugate(word("a b^4 a b x a b x x"));
                self.annihilate(5);
                self.cross(4);
                self.cross(2);
            }
            _ => {
                let m = 3 * l - 3;
                self.conjugate(delta(m).concat(&word("a b^4 a b x a b x x")));
                self.annihilate(m as usize + 5);
                self.conjugate(delta(m - 3).concat(&word("a^3 b^3 a b x a b x")));
                self.annihilate(m as usize + 3);
                self.conjugate(delta(m - 2).concat(&word("a^2 b^2")));
                self.delta_a2b2(l - 2);
            }
        }
    }

    /// Lowers the exponent of syllable `i` (1-based) of `δⁿ τ₁^{u₁} …` to
    /// `target` by saddles at its first letter.
    fn lower_syllables(&mut self, n: i64, targets: &[usize]) {
        let mut offset = n as usize;
        for (i, &target) in targets.iter().enumerate() {
            let current = self.current().letters()[offset..]
                .iter()
                .take_while(|l| l.generator == Generator::tau(i as i64 + 1))
                .count();
            for _ in target..current {
                self.saddle(offset);
            }
            offset += target;
        }
    }

    /// Replaces the leading `δ = τ_{j+1} τ_j` by `τ_j` with one saddle.
    fn saddle_delta(&mut self, j: i64) {
        let rest: BraidWord = self.current().letters()[1..].iter().copied().collect();
        self.rewrite(taus(&[(j + 1, 1), (j, 1)]).concat(&rest));
        self.saddle(0);
    }
}

/// `τ_{1−r} δ^{3ℓ+r−1} ∏_{i<r−1} τ_i² · τ_{r−1} τ_r τ_{r+1} · ∏_{i>r+1} τ_i²` for `t = 2r`.
fn reduced_even(l: i64, r: i64) -> BraidWord {
    let mut syl: Vec<(i64, usize)> = (1..=r - 2).map(|i| (i, 2)).collect();
    syl.extend([(r - 1, 1), (r, 1), (r + 1, 1)]);
    syl.extend((r + 2..=2 * r).map(|i| (i, 2)));
    taus(&[(1 - r, 1)]).concat(&delta(3 * l + r - 1)).concat(&taus(&syl))
}

/// `τ_{1−r} δ^{3ℓ+r+1} ∏_{i<r} τ_i² · τ_r τ_{r+1} τ_{r+2} · ∏_{i>r+2} τ_i²` for `t = 2r + 1`.
fn reduced_odd(l: i64, r: i64) -> BraidWord {
    let mut syl: Vec<(i64, usize)> = (1..r).map(|i| (i, 2)).collect();
    syl.extend([(r, 1), (r + 1, 1), (r + 2, 1)]);
    syl.extend((r + 3..=2 * r + 1).map(|i| (i, 2)));
    taus(&[(1 - r, 1)]).concat(&delta(3 * l + r + 1)).concat(&taus(&syl))
}

/// `τ₁ τ₂ τ₁ τ₂ τ₃ τ₄ τ₅ τ₆²`, the core containing an `abxabx`.
fn core() -> Vec<(i64, usize)> {
    vec![(1, 1), (2, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 2)]
}

impl Script {
    fn braid_positive_even(&mut self, l: i64, r: i64) {
        if r == 2 {
            self.conjugate(delta(3 * l).concat(&taus(&[(2, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 2)])));
            self.annihilate(3 * l as usize + 1);
            self.conjugate(delta(3 * l + 1));
            self.torus(3 * l + 1);
            return;
        }
        let s = r - 4;
        let prefix: Vec<(i64, usize)> = (1..=r - 3).map(|i| (i - 1 - s, 2)).collect();
        let suffix: Vec<(i64, usize)> = (r + 3..=2 * r).map(|i| (i - s, 2)).collect();
        let x = taus(&[((1 - r) - s, 1)])
            .concat(&delta(3 * l + r - 2))
            .concat(&taus(&prefix))
            .concat(&taus(&core()))
            .concat(&taus(&suffix));
        self.conjugate(x);
        self.annihilate(1 + (3 * l + r - 2) as usize + 2 * (r - 3) as usize + 2);
        self.conjugate(reduced_even(l, r - 1));
        self.braid_positive_even(l, r - 1);
    }

    fn braid_positive_odd(&mut self, l: i64, r: i64) {
        match r {
            1 => {
                self.conjugate(delta(3 * l + 4));
                self.torus(3 * l + 4);
            }
            2 => {
                self.conjugate(taus(&[(0, 1)]).concat(&delta(3 * l + 2)).concat(&taus(&core())));
                self.annihilate(1 + (3 * l + 2) as usize + 2);
                self.conjugate(delta(3 * l + 4));
                self.torus(3 * l + 4);
            }
            _ => {
                let s = r - 3;
                let prefix: Vec<(i64, usize)> = (1..=r - 2).map(|i| (i - 1 - s, 2)).collect();
                let suffix: Vec<(i64, usize)> = (r + 4..=2 * r + 1).map(|i| (i - s, 2)).collect();
                let x = taus(&[((1 - r) - s, 1)])
                    .concat(&delta(3 * l + r))
                    .concat(&taus(&prefix))
                    .concat(&taus(&core()))
                    .concat(&taus(&suffix));
                self.conjugate(x);
                self.annihilate(1 + (3 * l + r) as usize + 2 * (r - 2) as usize + 2);
                self.conjugate(reduced_odd(l, r - 1));
                self.braid_positive_odd(l, r - 1);
            }
        }
    }
}

fn abx_family_k(f: &XuForm) -> Option<usize> {
    let t = f.t();
    if f.n != 0 || t < 6 || t % 6 != 0 {
        return None;
    }
    let mut expected = vec![1u32; t - 4];
    expected.extend([2, 1, 1, 2]);
    (f.u == expected).then_some(t / 6 - 1)
}

fn family_of(f: &XuForm) -> Option<ScriptedFamily> {
    let t = f.t();
    if t == 0 {
        return Some(ScriptedFamily::Torus);
    }
    if abx_family_k(f).is_some() {
        return Some(ScriptedFamily::Abx);
    }
    if f.u.iter().any(|&e| e < 2) || 2 * f.n < t as i64 {
        return None;
    }
    Some(match t {
        1 => ScriptedFamily::DeltaA,
        2 => ScriptedFamily::DeltaAB,
        _ => ScriptedFamily::BraidPositive,
    })
}

/// Builds the untwisting certificate of a scripted family. Panics if the
/// script does not replay, which would be a bug in the script itself.
fn script(f: &XuForm, family: ScriptedFamily) -> Certificate {
    let n = f.n;
    let u: Vec<usize> = f.u.iter().map(|&e| e as usize).collect();
    let mut s = Script::new(f.to_word());
    match family {
        ScriptedFamily::Torus => s.torus(n),
        ScriptedFamily::DeltaA => {
            for _ in 0..(u[0] - 2) / 2 {
                let last = s.current().len() - 1;
                s.cross(last);
            }
            s.delta_a2((n - 2) / 3);
        }
        ScriptedFamily::DeltaAB => {
            for _ in 0..(u[1] - 2) / 2 {
                let last = s.current().len() - 1;
                s.cross(last);
            }
            for k in 0..(u[0] - 2) / 2 {
                s.cross(n as usize + u[0] - 1 - 2 * k);
            }
            s.delta_a2b2((n - 1) / 3);
        }
        ScriptedFamily::BraidPositive => {
            let t = u.len() as i64;
            let r = t / 2;
            let ones = if t % 2 == 0 { [r - 1, r, r + 1] } else { [r, r + 1, r + 2] };
            let targets: Vec<usize> = (1..=t).map(|i| if ones.contains(&i) { 1 } else { 2 }).collect();
            s.lower_syllables(n, &targets);
            s.saddle_delta(1 - r);
            if t % 2 == 0 {
                let l = (n - r) / 3;
                debug_assert_eq!(s.current(), &reduced_even(l, r));
                s.braid_positive_even(l, r);
            } else {
                let l = (n - r - 2) / 3;
                debug_assert_eq!(s.current(), &reduced_odd(l, r));
                s.braid_positive_odd(l, r);
            }
        }
        ScriptedFamily::Abx => {
            for _ in 0..abx_family_k(f).expect("abx family") {
                s.annihilate(0);
            }
            s.conjugate(word("a^2 b x a^2 b x"));
            s.push(Move::TangleUntwist, delta(1));
        }
    }
    if let Err(e) = s.cert.replay() {
        panic!("untwisting script for {f} ({family}) does not replay: {e}");
    }
    s.cert
}

/// Upper bound on the topological 4-genus from a replayed untwisting
/// certificate, when the form belongs to a scripted family.
pub fn g4top_upper_from_twisting(f: &XuForm) -> Result<Option<TwistingBound>> {
    if f.n < 0 {
        return Err(Error::NotStronglyQuasipositive { n: f.n });
    }
    let components = f.to_word().closure_components();
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    Ok(family_of(f).map(|family| {
        let certificate = script(f, family);
        TwistingBound { family, bound: certificate.bound(), certificate }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(n: i64, u: &[u32]) -> XuForm {
        XuForm::new(n, u.to_vec()).unwrap()
    }

    fn bound(n: i64, u: &[u32]) -> i64 {
        g4top_upper_from_twisting(&form(n, u)).unwrap().unwrap().bound
    }

    #[test]
    fn torus_bounds() {
        assert_eq!(bound(1, &[]), 0);
        assert_eq!(bound(2, &[]), 1);
        assert_eq!(bound(4, &[]), 3);
        assert_eq!(bound(5, &[]), 4);
        assert_eq!(bound(7, &[]), 5);
        assert_eq!(bound(13, &[]), 9);
    }

    #[test]
    fn delta_a_and_delta_ab() {
        assert_eq!(bound(2, &[4]), 3);
        assert_eq!(bound(5, &[2]), 4);
        assert_eq!(bound(8, &[6]), 8);
        assert_eq!(bound(1, &[2, 2]), 2);
        assert_eq!(bound(4, &[2, 4]), 5);
        assert_eq!(bound(7, &[2, 4]), 7);
        assert_eq!(bound(10, &[2, 2]), 8);
    }

    #[test]
    fn abx_family() {
        let f = form(0, &[1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2]);
        let b = g4top_upper_from_twisting(&f).unwrap().unwrap();
        assert_eq!((b.family, b.bound), (ScriptedFamily::Abx, 4));
        let anns = b.certificate.steps.iter().filter(|s| matches!(s.mv, Move::Annihilate { .. })).count();
        assert_eq!((anns, b.certificate.twists()), (1, 4));
    }

    #[test]
    fn braid_positive_sweep() {
        let mut seen = 0;
        for t in 3..=8i64 {
            for n in (t + 1) / 2..=t + 6 {
                if (n + t) % 3 != 0 {
                    continue;
                }
                for mask in 0..1u32 << t {
                    let u: Vec<u32> = (0..t).map(|i| 2 + (mask >> i & 1)).collect();
                    let Ok(f) = XuForm::new(n, u.clone()) else { continue };
                    if !f.is_knot() {
                        continue;
                    }
                    let half_sigma = (3 * f.total() + 4 * n - 2 * t) / 6;
                    let expected = if 2 * n == t { half_sigma } else { half_sigma + 1 };
                    assert_eq!(bound(n, &u), expected, "{f}");
                    seen += 1;
                }
            }
        }
        assert!(seen > 10, "only {seen} forms");
    }

    #[test]
    fn unscripted_and_errors() {
        assert_eq!(g4top_upper_from_twisting(&form(0, &[2, 3, 3])).unwrap(), None);
        assert!(matches!(g4top_upper_from_twisting(&form(-2, &[2, 2])), Err(Error::NotStronglyQuasipositive { .. })));
        assert!(matches!(g4top_upper_from_twisting(&form(3, &[])), Err(Error::NotAKnot { .. })));
    }

    #[test]
    fn tampered_certificates_fail() {
        let mut c = g4top_upper_from_twisting(&form(2, &[4])).unwrap().unwrap().certificate;
        assert!(c.replay().is_ok());
        c.steps.pop();
        assert!(matches!(c.replay(), Err(CertificateError::NotUnknot(_))));
        let mut c = g4top_upper_from_twisting(&form(4, &[])).unwrap().unwrap().certificate;
        c.steps[0].result = word("a b");
        assert!(matches!(c.replay(), Err(CertificateError::BadStep { step: 0, .. })));
    }
}
