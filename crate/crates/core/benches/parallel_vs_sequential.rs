use std::hint::black_box;

use braid3::{recognize_special_family_with, seifert_matrix, sigma_hat_and_profile_with, BraidWord, Execution};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn profiles(c: &mut Criterion) {
    let words = [
        ("k4", w("a^2 b^2").repeat(8).concat(&w("a^5 b^5").repeat(4))),
        ("torus_3_20", BraidWord::delta_power(20)),
        ("abx_k2", w("abx").repeat(4).concat(&w("a b x^2 a b x^2"))),
    ];
    let mut group = c.benchmark_group("signature_profile");
    group.sample_size(10);
    for (name, word) in &words {
        let s = seifert_matrix(word).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &s, |b, s| {
                b.iter(|| sigma_hat_and_profile_with(black_box(s), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn family_search(c: &mut Criterion) {
    let words = [("pretzel", w("a^4 b^5 x^3")), ("strict", w("d^4 a^2 b^2 x a^2 b")), ("torus", w("d^8"))];
    let mut group = c.benchmark_group("family_search");
    for (name, word) in &words {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), word, |b, v| {
                b.iter(|| recognize_special_family_with(black_box(v), exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, profiles, family_search);
criterion_main!(benches);
