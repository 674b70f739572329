//! Conjugacy normal form in the band generators `a`, `b`, `x` and `δ = ba`.
//!
//! Every 3-braid is conjugate to a unique word `δⁿ τ₁^{u₁} … τ_t^{u_t}` with
//! `τ_i` equal to `a`, `b`, `x` for `i ≡ 1, 2, 0 (mod 3)`, minimal for the
//! order `(−n, t, u₁, …, u_t)`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::burau::braids_equal;
use crate::cycling::{maximize_infimum, CyclicNormalForm};
use crate::error::{Error, Result};
use crate::word::{fmt_syllable, BraidWord, Generator, Letter, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct XuForm {
    pub n: i64,
    pub u: Vec<u32>,
}

impl XuForm {
    /// Builds a form after checking the normal-form conditions.
    pub fn new(n: i64, u: Vec<u32>) -> Result<XuForm> {
        if !is_xu_normal(n, &u) {
            return Err(Error::InvalidForm(format!("n = {n}, u = {u:?}")));
        }
        Ok(XuForm { n, u })
    }

    pub fn delta_power(n: i64) -> XuForm {
        XuForm { n, u: Vec::new() }
    }

    pub fn t(&self) -> usize {
        self.u.len()
    }

    /// `U = Σ uᵢ`.
    pub fn total(&self) -> i64 {
        self.u.iter().map(|&e| e as i64).sum()
    }

    pub fn writhe(&self) -> i64 {
        2 * self.n + self.total()
    }

    pub fn is_normal(&self) -> bool {
        is_xu_normal(self.n, &self.u)
    }

    /// `δⁿ τ₁^{u₁} … τ_t^{u_t}`.
    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::delta_power(self.n);
        for (i, &e) in self.u.iter().enumerate() {
            w.extend_from(&BraidWord::tau_power(i as i64 + 1, e as i64));
        }
        w
    }

    pub fn is_knot(&self) -> bool {
        self.to_word().is_knot()
    }
}

impl Ord for XuForm {
    fn cmp(&self, other: &Self) -> Ordering {
        other.n.cmp(&self.n).then(self.u.len().cmp(&other.u.len())).then_with(|| self.u.cmp(&other.u))
    }
}

impl PartialOrd for XuForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for XuForm {
    /// `d^n` followed by the syllables, e.g. `d^-2 a^2 b^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.n)?;
        for (i, &e) in self.u.iter().enumerate() {
            f.write_str(" ")?;
            fmt_syllable(f, Generator::tau(i as i64 + 1).symbol(), e as i64)?;
        }
        Ok(())
    }
}

/// The three normal-form conditions: `t = 0`; `t = 1` with `u₁ = 1` when
/// `n ≡ 1 (mod 3)`; `t ≥ 2` with `n + t ≡ 0 (mod 3)` and `u` minimal among
/// its cyclic rotations.
pub fn is_xu_normal(n: i64, u: &[u32]) -> bool {
    if u.contains(&0) {
        return false;
    }
    match u.len() {
        0 => true,
        1 => n.rem_euclid(3) != 1 || u[0] == 1,
        t => (n + t as i64).rem_euclid(3) == 0 && least_rotation(u) == 0,
    }
}

/// Smallest `k` such that `u[k..] ++ u[..k]` is lexicographically minimal.
pub(crate) fn least_rotation(u: &[u32]) -> usize {
    let t = u.len();
    (0..t)
        .min_by(|&i, &j| {
            let ri = u[i..].iter().chain(&u[..i]);
            let rj = u[j..].iter().chain(&u[..j]);
            ri.cmp(rj).then(i.cmp(&j))
        })
        .unwrap_or(0)
}

/// Left normal form `δ^inf · τ_{j₁} τ_{j₂} …` in the band-generator monoid.
/// Consecutive letters are either equal or step the index by one, so the
/// letter list is exactly a sequence of syllables.
#[derive(Debug, Clone)]
pub(crate) struct BandNormalForm {
    inf: i64,
    /// Letter indices mod 3, stored relative to `offset` so that pulling a `δ`
    /// through the whole word is O(1).
    letters: VecDeque<u8>,
    offset: u8,
}

impl BandNormalForm {
    pub(crate) fn from_word(w: &BraidWord) -> BandNormalForm {
        let mut s = BandNormalForm { inf: 0, letters: VecDeque::with_capacity(w.len()), offset: 0 };
        for &l in w.letters() {
            s.push_letter(l);
        }
        s
    }

    fn actual(&self, stored: u8) -> u8 {
        (stored + self.offset) % 3
    }

    fn shift(&mut self, s: i64) {
        self.offset = ((self.offset as i64 + s).rem_euclid(3)) as u8;
    }

    fn push_delta(&mut self, e: i64) {
        self.shift(e);
        self.inf += e;
    }

    /// Right-multiplies by `τ_i`; `τ_{i+1} τ_i = δ` is absorbed into the infimum.
    fn push_tau(&mut self, i: u8) {
        if let Some(&last) = self.letters.back() {
            if self.actual(last) == (i + 1) % 3 {
                self.letters.pop_back();
                self.push_delta(1);
                return;
            }
        }
        self.letters.push_back((i + 3 - self.offset) % 3);
    }

    fn push_letter(&mut self, l: Letter) {
        match (l.generator.tau_index(), l.sign) {
            (Some(i), Sign::Pos) => self.push_tau(i),
            // τ_i⁻¹ = δ⁻¹ τ_{i+1}
            (Some(i), Sign::Neg) => {
                self.push_delta(-1);
                self.push_tau((i + 1) % 3);
            }
            (None, sign) => self.push_delta(sign.value()),
        }
    }

    fn front(&self) -> Option<u8> {
        self.letters.front().map(|&s| self.actual(s))
    }

    pub(crate) fn infimum(&self) -> i64 {
        self.inf
    }

    pub(crate) fn indices(&self) -> Vec<u8> {
        self.letters.iter().map(|&s| self.actual(s)).collect()
    }

    /// Syllable exponents; the indices step by one from syllable to syllable.
    pub(crate) fn syllables(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        let mut prev = None;
        for &s in &self.letters {
            if prev == Some(s) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
            }
            prev = Some(s);
        }
        out
    }

    /// Conjugates by `δ^s` (shifting every index by `+s`) so the word starts with `a`.
    fn start_with_a(&mut self, conjugator: &mut BraidWord) {
        if let Some(j) = self.front() {
            let s = (4 - j as i64) % 3;
            self.shift(s);
            conjugator.extend_from(&BraidWord::delta_power(s));
        }
    }

    fn rotate_letters(&mut self, count: u32, conjugator: &mut BraidWord) {
        for _ in 0..count {
            let c = self.cycle();
            conjugator.extend_from(&c);
        }
    }
}

impl CyclicNormalForm for BandNormalForm {
    type Key = (i64, Vec<u8>);

    fn infimum(&self) -> i64 {
        self.inf
    }

    fn key(&self) -> Self::Key {
        (self.inf, self.indices())
    }

    /// `δ^p τ_j R ↦ δ^p R τ_{j−p}`, conjugating by `τ_{j−p}`.
    fn cycle(&mut self) -> BraidWord {
        let Some(j) = self.front() else {
            return BraidWord::new();
        };
        self.letters.pop_front();
        let k = (j as i64 - self.inf).rem_euclid(3) as u8;
        self.push_tau(k);
        BraidWord::tau_power(k as i64, 1)
    }
}

/// A normal form together with a conjugator `g` such that `g⁻¹ · w · g`
/// equals the serialized form.
#[derive(Debug, Clone)]
pub struct CertifiedXuForm {
    pub form: XuForm,
    pub conjugator: BraidWord,
}

impl CertifiedXuForm {
    /// Re-checks the conjugation identity with the Burau oracle.
    pub fn verify(&self, w: &BraidWord) -> bool {
        braids_equal(&w.conjugate_by(&self.conjugator), &self.form.to_word())
    }
}

pub fn xu_normalize_certified(w: &BraidWord) -> CertifiedXuForm {
    let mut state = BandNormalForm::from_word(w);
    let mut g = BraidWord::new();
    // Rotations after maximization never raise the infimum, and cycling again
    // could undo them, so cycling only reruns if the infimum moved.
    let mut maximized = None;
    loop {
        if maximized != Some(state.infimum()) {
            maximize_infimum(&mut state, &mut g);
            maximized = Some(state.infimum());
        }
        state.start_with_a(&mut g);
        let n = state.infimum();
        let u = state.syllables();
        let t = u.len();
        if t >= 2 && (n + t as i64).rem_euclid(3) != 0 {
            // Moving the first syllable to the end merges it with the last one.
            state.rotate_letters(u[0], &mut g);
            continue;
        }
        assert!(
            !(t == 1 && n.rem_euclid(3) == 1 && u[0] >= 2),
            "cycling left a non-maximal infimum for δ^{n} a^{}",
            u[0]
        );
        if t >= 2 {
            let k = least_rotation(&u);
            for &e in &u[..k] {
                state.rotate_letters(e, &mut g);
            }
            state.start_with_a(&mut g);
            debug_assert_eq!(state.infimum(), n);
        }
        let form = XuForm { n: state.infimum(), u: state.syllables() };
        debug_assert!(form.is_normal(), "{form} is not normal");
        return CertifiedXuForm { form, conjugator: g };
    }
}

pub fn xu_normalize(w: &BraidWord) -> XuForm {
    xu_normalize_certified(w).form
}

pub fn conjugate_in_b3(u: &BraidWord, v: &BraidWord) -> bool {
    u.writhe() == v.writhe() && xu_normalize(u) == xu_normalize(v)
}

/// The smaller of the normal forms of `w` and of its reverse.
pub fn canonical_link_form(w: &BraidWord) -> XuForm {
    let f = xu_normalize(w);
    let r = xu_normalize(&w.reverse());
    f.min(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkRelation {
    Conjugate,
    SameLinkNotConjugate,
    Different,
}

impl fmt::Display for LinkRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkRelation::Conjugate => "conjugate",
            LinkRelation::SameLinkNotConjugate => "same-link-not-conjugate",
            LinkRelation::Different => "different",
        })
    }
}

/// Normal forms of the three unknot-closing braids `ab`, `ab⁻¹`, `a⁻¹b⁻¹`.
pub fn unknot_forms() -> [XuForm; 3] {
    [XuForm::delta_power(1), XuForm { n: -1, u: vec![2] }, XuForm::delta_power(-1)]
}

/// If `f` is conjugate to `aᵏb` or `aᵏb⁻¹` (with `k` forced by the writhe),
/// returns `k` and whether the last letter is positive.
fn two_strand_torus_tag(f: &XuForm) -> Option<(i64, bool)> {
    let a = |k: i64| BraidWord::power(Generator::A, k);
    let w = f.writhe();
    if *f == xu_normalize(&a(w - 1).concat(&BraidWord::power(Generator::B, 1))) {
        return Some((w - 1, true));
    }
    if *f == xu_normalize(&a(w + 1).concat(&BraidWord::power(Generator::B, -1))) {
        return Some((w + 1, false));
    }
    None
}

/// Decides whether the closures are the same oriented link. Closures of
/// 3-braids agree exactly when the braids are conjugate, conjugate up to
/// reversal, or both lie in one of the exceptional families: unknot closures
/// of `ab`, `ab⁻¹`, `a⁻¹b⁻¹`; the pairs `aᵏb`, `aᵏb⁻¹` with `|k| ≠ 1`; and
/// the pretzel pairs `aᵖbᵠxʳ`, `aᵖbʳxᵠ`, which are reverses of each other.
pub fn link_relation(u: &BraidWord, v: &BraidWord) -> LinkRelation {
    let fu = xu_normalize(u);
    let fv = xu_normalize(v);
    if fu == fv {
        return LinkRelation::Conjugate;
    }
    if u.closure_components() != v.closure_components() {
        return LinkRelation::Different;
    }
    let ru = xu_normalize(&u.reverse());
    if ru == fv {
        return LinkRelation::SameLinkNotConjugate;
    }
    let unknots = unknot_forms();
    let is_unknot = |f: &XuForm, r: &XuForm| unknots.contains(f) || unknots.contains(r);
    let rv = xu_normalize(&v.reverse());
    if is_unknot(&fu, &ru) && is_unknot(&fv, &rv) {
        return LinkRelation::SameLinkNotConjugate;
    }
    let tags = |f: &XuForm, r: &XuForm| [two_strand_torus_tag(f), two_strand_torus_tag(r)];
    for tu in tags(&fu, &ru).into_iter().flatten() {
        for tv in tags(&fv, &rv).into_iter().flatten() {
            if tu.0 == tv.0 && tu.1 != tv.1 && tu.0.abs() != 1 {
                return LinkRelation::SameLinkNotConjugate;
            }
        }
    }
    LinkRelation::Different
}

pub fn same_closure_link(u: &BraidWord, v: &BraidWord) -> bool {
    link_relation(u, v) != LinkRelation::Different
}
