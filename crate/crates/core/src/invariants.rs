//! Closed-form invariants of 3-braid closures read off the normal forms:
//! signature, Seifert genus and positivity, recognition of the knots whose
//! topological 4-genus equals their Seifert genus, and defect bounds.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::garside::{GarsideCase, GarsideForm};
use crate::parallel::{self, Execution};
use crate::seifert::{seifert_matrix, sigma_hat_and_profile};
use crate::twisting::g4top_upper_from_twisting;
use crate::word::{BraidWord, Generator};
use crate::xu::{same_closure_link, xu_normalize, XuForm};

fn require_knot(w: &BraidWord) -> Result<()> {
    match w.closure_components() {
        1 => Ok(()),
        components => Err(Error::NotAKnot { components }),
    }
}

fn signature_formula(n: i64, t: i64, total: i64) -> i64 {
    if t > 0 {
        let thrice = -3 * total - 4 * n + 2 * t;
        assert_eq!(thrice % 3, 0, "non-integral signature for n = {n}, t = {t}");
        thrice / 3
    } else if n >= 0 {
        2 - 2 * n + 4 * n.div_euclid(6)
    } else {
        -signature_formula(-n, 0, 0)
    }
}

/// `σ = −U − 4n/3 + 2t/3` for `t > 0`; `2 − 2n + 4⌊n/6⌋` for the torus knots
/// `δⁿ`, `n > 0`, and the negated mirror value for `n < 0`.
///
/// Debug builds compare against the Seifert-matrix signature.
pub fn signature_from_xu(f: &XuForm) -> Result<i64> {
    let w = f.to_word();
    require_knot(&w)?;
    let sigma = signature_formula(f.n, f.t() as i64, f.total());
    #[cfg(debug_assertions)]
    if let Ok(s) = seifert_matrix(&w) {
        let oracle = crate::seifert::levine_tristram_at(&s, 0.5).expect("a knot has Δ(−1) ≠ 0");
        assert_eq!(sigma, oracle, "signature formula disagrees with the Seifert matrix on {f}");
    }
    Ok(sigma)
}

/// `σ = −2ℓ + r − Σ pᵢ`, for Garside cases C and D only.
pub fn signature_from_garside(g: &GarsideForm) -> Result<i64> {
    if matches!(g.case, GarsideCase::A | GarsideCase::B) {
        return Err(Error::UnsupportedCase { case: g.case.tag() });
    }
    require_knot(&g.to_word())?;
    Ok(-2 * g.ell + g.r() as i64 - g.p.iter().map(|&e| e as i64).sum::<i64>())
}

/// `g = U/2 + n − 1` for strongly quasipositive knots (`n ≥ 0`).
pub fn seifert_genus_sqp(f: &XuForm) -> Result<i64> {
    if f.n < 0 {
        return Err(Error::NotStronglyQuasipositive { n: f.n });
    }
    require_knot(&f.to_word())?;
    assert_eq!(f.total() % 2, 0, "odd exponent sum on a knot: {f}");
    Ok(f.total() / 2 + f.n - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositivityClass {
    pub strongly_quasipositive: bool,
    pub braid_positive: bool,
    /// The closure is also the closure of a 2-braid; both criteria are only
    /// established for braid index 3.
    pub braid_index_at_most_two: bool,
}

pub fn positivity_class(f: &XuForm) -> PositivityClass {
    let t = f.t() as i64;
    let w = f.to_word();
    let writhe = f.writhe();
    let two_strand = |k: i64, last: i64| {
        same_closure_link(&w, &BraidWord::power(Generator::A, k).concat(&BraidWord::power(Generator::B, last)))
    };
    PositivityClass {
        strongly_quasipositive: f.n >= 0,
        braid_positive: 2 * f.n >= t || (f.n == 0 && t == 1),
        braid_index_at_most_two: two_strand(writhe - 1, 1) || two_strand(writhe + 1, -1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyVariant {
    /// `T(3, n)`.
    T3Torus {
        n: i64,
    },
    /// `T(2, 2m+1) # T(2, 2n+1)`, closure of `a^{2m+1} b^{2n+1}`.
    T2ConnectedSum {
        m: i64,
        n: i64,
    },
    /// Closure of `a^p b^q x^r` with `p` even and `q ≤ r` odd.
    Pretzel {
        p: i64,
        q: i64,
        r: i64,
    },
    FigureEight,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyTag {
    pub variant: FamilyVariant,
    pub mirrored: bool,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            FamilyVariant::T3Torus { n } => write!(f, "T3Torus({n})")?,
            FamilyVariant::T2ConnectedSum { m, n } => write!(f, "T2ConnectedSum({m},{n})")?,
            FamilyVariant::Pretzel { p, q, r } => write!(f, "Pretzel({p},{q},{r})")?,
            FamilyVariant::FigureEight => f.write_str("FigureEight")?,
            FamilyVariant::None => f.write_str("None")?,
        }
        if self.mirrored {
            f.write_str(" mirrored")?;
        }
        Ok(())
    }
}

impl FamilyVariant {
    fn representative(self) -> BraidWord {
        let p = |g: Generator, e: i64| BraidWord::power(g, e);
        match self {
            FamilyVariant::T3Torus { n } => BraidWord::delta_power(n),
            FamilyVariant::T2ConnectedSum { m, n } => p(Generator::A, 2 * m + 1).concat(&p(Generator::B, 2 * n + 1)),
            FamilyVariant::Pretzel { p: e1, q, r } => {
                p(Generator::A, e1).concat(&p(Generator::B, q)).concat(&p(Generator::X, r))
            }
            FamilyVariant::FigureEight => "aB aB".parse().expect("figure-eight word"),
            FamilyVariant::None => BraidWord::new(),
        }
    }

    fn writhe(self) -> i64 {
        self.representative().writhe()
    }
}

/// Family members whose writhe lies within 2 of `w`; the exceptional
/// closures that are not conjugate up to reversal differ in writhe by at most 2.
fn candidates(w: i64) -> Vec<FamilyTag> {
    let lo = (w.abs() - 2).max(0);
    let hi = w.abs() + 2;
    let mut variants =
        vec![FamilyVariant::FigureEight, FamilyVariant::T3Torus { n: 4 }, FamilyVariant::T3Torus { n: 5 }];
    for total in (lo..=hi).filter(|s| s % 2 == 0 && *s >= 2) {
        let half = total / 2 - 1;
        variants.extend((0..=half / 2).map(|m| FamilyVariant::T2ConnectedSum { m, n: half - m }));
        for p in (2..total).step_by(2) {
            for q in (1..total - p).step_by(2) {
                let r = total - p - q;
                if r >= q {
                    variants.push(FamilyVariant::Pretzel { p, q, r });
                }
            }
        }
    }
    variants.retain(|v| (lo..=hi).contains(&v.writhe()));
    variants.into_iter().flat_map(|variant| [false, true].map(|mirrored| FamilyTag { variant, mirrored })).collect()
}

pub fn recognize_special_family(w: &BraidWord) -> Result<FamilyTag> {
    recognize_special_family_with(w, Execution::default())
}

/// Compares the closure of `w` against every family representative with
/// writhe within 2 of `|writhe(w)|`, and their mirrors.
pub fn recognize_special_family_with(w: &BraidWord, exec: Execution) -> Result<FamilyTag> {
    require_knot(w)?;
    let tags = candidates(w.writhe());
    let hits = parallel::map(&tags, exec, |tag| {
        let rep = tag.variant.representative();
        let rep = if tag.mirrored { rep.mirror() } else { rep };
        same_closure_link(w, &rep)
    });
    Ok(tags
        .into_iter()
        .zip(hits)
        .find(|(_, hit)| *hit)
        .map_or(FamilyTag { variant: FamilyVariant::None, mirrored: false }, |(tag, _)| tag))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Top4GenusClass {
    /// `g₄ᵗᵒᵖ = g`, and `|σ| = 2g`.
    Equal(FamilyTag),
    /// `g₄ᵗᵒᵖ < g`.
    Strict,
    /// The figure-eight knot: `σ = 0` while `g₄ᵗᵒᵖ = g = 1`.
    FigureEight,
}

impl fmt::Display for Top4GenusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Top4GenusClass::Equal(tag) => write!(f, "Equal({tag})"),
            Top4GenusClass::Strict => f.write_str("Strict"),
            Top4GenusClass::FigureEight => f.write_str("FigureEight"),
        }
    }
}

/// Decides whether the topological 4-genus of a 3-braid knot equals its
/// Seifert genus, by membership in the list of knots where it does.
pub fn classify_top4genus(w: &BraidWord) -> Result<Top4GenusClass> {
    let tag = recognize_special_family(w)?;
    Ok(match tag.variant {
        FamilyVariant::FigureEight => Top4GenusClass::FigureEight,
        FamilyVariant::None => Top4GenusClass::Strict,
        _ => {
            let f = if tag.mirrored { xu_normalize(&w.mirror()) } else { xu_normalize(w) };
            if f.n >= 0 {
                let sigma = signature_from_xu(&f)?;
                let genus = seifert_genus_sqp(&f)?;
                assert_eq!(sigma.abs(), 2 * genus, "{tag} fails |σ| = 2g on {w}");
            }
            Top4GenusClass::Equal(tag)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct G4Report {
    pub genus: Option<i64>,
    pub sigma: i64,
    pub sigma_hat: i64,
    /// Bounds on `g − g₄ᵗᵒᵖ` from the closed-form estimates alone.
    pub defect_lower: i64,
    pub defect_upper: i64,
    pub g4top_lower: i64,
    pub g4top_upper: i64,
    pub exact: bool,
    /// Untwisting family whose certificate gave the upper bound, if any.
    pub family: Option<String>,
    pub certificates: Vec<String>,
}

/// Closed-form bounds on `g − g₄ᵗᵒᵖ` for a strongly quasipositive knot.
///
/// For `t = 0` the exact torus-knot value `n − 1 − ⌈2n/3⌉`, clamped at 0 for
/// `n ≤ 2`; otherwise `⌈n/3 + t/6 − 3⌉ ≤ defect ≤ n/3 + t/3 − 1`, the lower
/// one clamped at 0.
pub fn defect_bounds(f: &XuForm) -> Result<(i64, i64)> {
    seifert_genus_sqp(f)?;
    let (n, t) = (f.n, f.t() as i64);
    if t == 0 {
        let d = (n - 1 - (2 * n + 2).div_euclid(3)).max(0);
        return Ok((d, d));
    }
    assert_eq!((n + t) % 3, 0, "t = 1 knots have n ≡ 2 and t ≥ 2 forms n + t ≡ 0 (mod 3)");
    let upper = (n + t) / 3 - 1;
    let lower = (2 * n + t - 18 + 5).div_euclid(6).max(0);
    Ok((lower, upper))
}

pub fn defect_and_g4top_bounds(f: &XuForm) -> Result<G4Report> {
    let genus = seifert_genus_sqp(f)?;
    let sigma = signature_from_xu(f)?;
    let (defect_lower, defect_upper) = defect_bounds(f)?;
    if f.t() > 0 {
        assert_eq!(2 * (genus - defect_upper), sigma.abs(), "g − |σ|/2 ≠ (n + t)/3 − 1 on {f}");
    }
    let sigma_hat = match seifert_matrix(&f.to_word()) {
        Ok(s) => sigma_hat_and_profile(&s)?.sigma_hat,
        // Only the unknot `δ` has no Seifert data here.
        Err(_) => 0,
    };
    let twisting = g4top_upper_from_twisting(f)?;
    let g4top_lower = (genus - defect_upper).max(sigma_hat / 2);
    let mut g4top_upper = genus - defect_lower;
    let mut family = None;
    let mut certificates = Vec::new();
    if let Some(tb) = twisting {
        if tb.bound <= g4top_upper {
            g4top_upper = tb.bound;
            family = Some(tb.family.to_string());
            certificates = tb.certificate.describe();
        }
    }
    assert!(g4top_lower <= g4top_upper, "inconsistent 4-genus bounds on {f}: {g4top_lower} > {g4top_upper}");
    Ok(G4Report {
        genus: Some(genus),
        sigma,
        sigma_hat,
        defect_lower,
        defect_upper,
        g4top_lower,
        g4top_upper,
        exact: g4top_lower == g4top_upper,
        family,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::xu_to_garside;

    fn form(n: i64, u: &[u32]) -> XuForm {
        XuForm::new(n, u.to_vec()).unwrap()
    }

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn signatures() {
        assert_eq!(signature_from_xu(&form(2, &[])), Ok(-2));
        assert_eq!(signature_from_xu(&form(7, &[])), Ok(-8));
        assert_eq!(signature_from_xu(&form(-7, &[])), Ok(8));
        assert_eq!(signature_from_xu(&form(1, &[2, 2])), Ok(-4));
        assert_eq!(signature_from_xu(&form(-2, &[2, 2])), Ok(0));
        assert_eq!(signature_from_xu(&form(3, &[])), Err(Error::NotAKnot { components: 3 }));
        let g = xu_to_garside(&form(1, &[2, 2])).unwrap();
        assert_eq!(signature_from_garside(&g), Ok(-4));
        let t25 = GarsideForm { ell: 1, p: vec![3], case: GarsideCase::D };
        assert_eq!(signature_from_garside(&t25), Ok(-4));
        let b = GarsideForm { ell: 0, p: vec![3, 1], case: GarsideCase::B };
        assert_eq!(signature_from_garside(&b), Err(Error::UnsupportedCase { case: 'B' }));
    }

    #[test]
    fn genus_and_positivity() {
        assert_eq!(seifert_genus_sqp(&form(2, &[])), Ok(1));
        assert_eq!(seifert_genus_sqp(&form(1, &[2, 2])), Ok(2));
        assert_eq!(seifert_genus_sqp(&form(0, &[1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2])), Ok(6));
        assert_eq!(seifert_genus_sqp(&form(-2, &[2, 2])), Err(Error::NotStronglyQuasipositive { n: -2 }));
        let p = positivity_class(&form(1, &[2, 2]));
        assert!(p.strongly_quasipositive && p.braid_positive && !p.braid_index_at_most_two);
        let p = positivity_class(&form(0, &[2, 3, 3]));
        assert!(p.strongly_quasipositive && !p.braid_positive);
        let p = positivity_class(&form(-2, &[2, 2]));
        assert!(!p.strongly_quasipositive && !p.braid_positive);
        assert!(positivity_class(&form(2, &[2])).braid_index_at_most_two);
    }

    #[test]
    fn families() {
        let tag = |s: &str| recognize_special_family(&w(s)).unwrap();
        assert_eq!(tag("a^3 b^5").variant, FamilyVariant::T2ConnectedSum { m: 1, n: 2 });
        assert_eq!(tag("a^4 b^3 x^5").variant, FamilyVariant::Pretzel { p: 4, q: 3, r: 5 });
        assert_eq!(tag("d^3 a^2 b^2 x a b x").variant, FamilyVariant::None);
        assert_eq!(recognize_special_family(&w("d a^2 b^2 x a b")), Err(Error::NotAKnot { components: 2 }));
        let m = tag("A^3 B^5");
        assert_eq!((m.variant, m.mirrored), (FamilyVariant::T2ConnectedSum { m: 1, n: 2 }, true));
        assert_eq!(tag("aB").variant, FamilyVariant::T2ConnectedSum { m: 0, n: 0 });
        assert_eq!(recognize_special_family(&w("a")), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn classification() {
        let c = |s: &str| classify_top4genus(&w(s)).unwrap();
        assert!(matches!(c("d^4"), Top4GenusClass::Equal(t) if t.variant == FamilyVariant::T3Torus { n: 4 }));
        assert!(
            matches!(c("a^2 b^3 x^3"), Top4GenusClass::Equal(t) if t.variant == FamilyVariant::Pretzel { p: 2, q: 3, r: 3 })
        );
        assert_eq!(c("d^7"), Top4GenusClass::Strict);
        assert_eq!(c("aB aB"), Top4GenusClass::FigureEight);
    }

    #[test]
    fn defect_reports() {
        let r = defect_and_g4top_bounds(&form(13, &[])).unwrap();
        assert_eq!((r.genus, r.defect_lower, r.g4top_lower, r.exact), (Some(12), 3, 9, true));
        let r = defect_and_g4top_bounds(&form(0, &[1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2])).unwrap();
        assert_eq!((r.genus, r.defect_lower, r.defect_upper), (Some(6), 0, 3));
        assert_eq!((r.g4top_lower, r.g4top_upper, r.sigma_hat), (4, 4, 8));
        let r = defect_and_g4top_bounds(&form(2, &[2])).unwrap();
        assert_eq!((r.genus, r.g4top_lower, r.exact), (Some(2), 2, true));
        assert_eq!(defect_and_g4top_bounds(&form(1, &[])).unwrap().g4top_upper, 0);
    }
}
