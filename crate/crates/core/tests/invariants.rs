use braid3::{
    defect_and_g4top_bounds, g4top_upper_from_twisting, garside_normalize, positivity_class, recognize_special_family,
    recognize_special_family_with, seifert_genus_sqp, signature_from_garside, signature_from_xu, signature_oracle,
    xu_normalize, BraidWord, Error, Execution, FamilyVariant, GarsideCase, Generator, Letter, XuForm,
};
use proptest::prelude::*;

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn signed_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (0..4usize, any::<bool>()).prop_map(|(g, pos)| {
        let g = [Generator::A, Generator::B, Generator::X, Generator::Delta][g];
        if pos {
            Letter::pos(g)
        } else {
            Letter::neg(g)
        }
    });
    prop::collection::vec(letter, 1..=max_len).prop_map(BraidWord::from_letters)
}

fn positive_word(alphabet: &'static [Generator], max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(prop::sample::select(alphabet), 1..=max_len)
        .prop_map(|gs| gs.into_iter().map(Letter::pos).collect())
}

#[test]
fn garside_signature_on_cases_c_and_d() {
    let mut seen = 0;
    for s in ["d a^2 b^2", "d^2 a^2", "d^4 a^2 b^2", "d^5 a^4", "a^3 b^5", "d^3 a^2 b^2 x a b x", "D^2 a^2 b^3 x^4"] {
        let v = w(s);
        let g = garside_normalize(&v);
        if matches!(g.case, GarsideCase::C | GarsideCase::D) {
            assert_eq!(signature_from_garside(&g), signature_oracle(&v), "{s} -> {g}");
            seen += 1;
        }
    }
    assert!(seen >= 5);
    assert!(matches!(signature_from_garside(&garside_normalize(&w("d^2"))), Err(Error::UnsupportedCase { case: 'B' })));
}

#[test]
fn family_recognition_is_schedule_independent() {
    for s in ["d^4", "D^5", "a^3 b^5", "a^2 b^3 x^3", "a^4 b^5 x^3", "aB aB", "d^7", "d a^2 b^2 x a b x"] {
        let v = w(s);
        assert_eq!(
            recognize_special_family_with(&v, Execution::Parallel),
            recognize_special_family_with(&v, Execution::Sequential),
            "{s}"
        );
    }
    let tag = recognize_special_family(&w("a^4 b^5 x^3")).unwrap();
    assert!(matches!(tag.variant, FamilyVariant::Pretzel { .. }), "{tag}");
}

#[test]
fn torus_knot_reports() {
    for n in (1..=16).filter(|n| n % 3 != 0) {
        let r = defect_and_g4top_bounds(&XuForm::delta_power(n)).unwrap();
        assert_eq!(r.genus, Some(n - 1), "n = {n}");
        assert!(r.exact, "n = {n}");
        let g4 = (n - 1).min((2 * n + 2) / 3);
        assert_eq!(r.g4top_upper, g4, "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn mirror_negates_signature(v in signed_word(14)) {
        prop_assume!(v.is_knot());
        let s = signature_from_xu(&xu_normalize(&v)).unwrap();
        prop_assert_eq!(signature_from_xu(&xu_normalize(&v.mirror())).unwrap(), -s);
        prop_assert_eq!(s.rem_euclid(2), 0);
    }

    #[test]
    fn band_positive_words_are_sqp(v in positive_word(&[Generator::A, Generator::B, Generator::X, Generator::Delta], 12)) {
        let f = xu_normalize(&v);
        prop_assert!(positivity_class(&f).strongly_quasipositive);
        prop_assume!(v.is_knot());
        // Bennequin surface: one disk per strand, one band per band letter.
        let bands = v.letters().iter().map(|l| l.writhe()).sum::<i64>();
        prop_assert_eq!(2 * seifert_genus_sqp(&f).unwrap(), bands - 2);
    }

    #[test]
    fn standard_positive_words_are_braid_positive(v in positive_word(&[Generator::A, Generator::B], 14)) {
        let f = xu_normalize(&v);
        prop_assert!(positivity_class(&f).braid_positive, "{} -> {}", v, f);
    }

    #[test]
    fn reports_are_consistent(v in positive_word(&[Generator::A, Generator::B, Generator::X, Generator::Delta], 10)) {
        prop_assume!(v.is_knot());
        let f = xu_normalize(&v);
        let r = defect_and_g4top_bounds(&f).unwrap();
        let g = r.genus.unwrap();
        prop_assert!(r.g4top_lower <= r.g4top_upper && r.g4top_upper <= g);
        prop_assert!(r.sigma.abs() <= 2 * r.g4top_upper && r.sigma_hat <= 2 * r.g4top_upper);
        prop_assert!(r.defect_lower <= r.defect_upper);
        if let Some(tb) = g4top_upper_from_twisting(&f).unwrap() {
            prop_assert!(tb.certificate.replay().is_ok());
            prop_assert!(tb.bound >= r.g4top_lower);
        }
    }
}
