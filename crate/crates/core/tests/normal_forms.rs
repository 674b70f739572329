use braid3::{
    garside_normalize, garside_normalize_certified, is_xu_normal, xu_normalize, xu_normalize_certified, xu_to_garside,
    BraidWord, Generator, Letter, XuForm,
};
use proptest::prelude::*;

fn letter_strategy() -> impl Strategy<Value = Letter> {
    (0..4usize, any::<bool>()).prop_map(|(g, pos)| {
        let g = [Generator::A, Generator::B, Generator::X, Generator::Delta][g];
        if pos {
            Letter::pos(g)
        } else {
            Letter::neg(g)
        }
    })
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(letter_strategy(), 0..=max_len).prop_map(BraidWord::from_letters)
}

fn compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for rest in compositions(total - first) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// Every normal form with `2|n| + U ≤ bound`.
fn small_forms(bound: i64) -> Vec<XuForm> {
    let mut out = Vec::new();
    for n in -bound / 2..=bound / 2 {
        let room = bound - 2 * n.abs();
        for total in 0..=room as u32 {
            for u in compositions(total) {
                if is_xu_normal(n, &u) {
                    out.push(XuForm::new(n, u).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn conversion_table_commutes_on_small_forms() {
    let forms = small_forms(10);
    assert!(forms.len() > 100);
    for f in &forms {
        let via_table = xu_to_garside(f).unwrap();
        let direct = garside_normalize(&f.to_word());
        assert_eq!(direct, via_table, "{f}");
        assert_eq!(direct.writhe(), f.writhe());
    }
}

#[test]
fn normal_forms_are_fixed_points() {
    for f in small_forms(8) {
        assert_eq!(xu_normalize(&f.to_word()), f);
        let g = garside_normalize(&f.to_word());
        assert_eq!(garside_normalize(&g.to_word()), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_invariance(w in word_strategy(14), c in word_strategy(6)) {
        let conj = w.conjugate_by(&c);
        let f = xu_normalize(&w);
        prop_assert_eq!(&xu_normalize(&conj), &f);
        prop_assert_eq!(garside_normalize(&conj), garside_normalize(&w));
        prop_assert!(f.is_normal());
        prop_assert_eq!(f.writhe(), w.writhe());
    }

    #[test]
    fn certificates_replay(w in word_strategy(14)) {
        prop_assert!(xu_normalize_certified(&w).verify(&w));
        let g = garside_normalize_certified(&w);
        prop_assert!(g.verify(&w));
        prop_assert!(g.form.is_normal());
    }

    #[test]
    fn reverse_and_mirror_keep_components(w in word_strategy(12)) {
        prop_assert_eq!(w.reverse().closure_components(), w.closure_components());
        prop_assert_eq!(w.mirror().closure_components(), w.closure_components());
        prop_assert_eq!(w.reverse().reverse(), w.clone());
        prop_assert_eq!(w.mirror().writhe(), -w.writhe());
    }
}
