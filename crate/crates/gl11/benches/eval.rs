//! Corpus sweeps, parallel vs sequential.
//!
//! `cargo bench` uses the default features (rayon enabled) and benches
//! both code paths; with `--no-default-features` only the sequential
//! path exists and the comparison collapses to it.

use criterion::{criterion_group, criterion_main, Criterion};

use gl11::batch::{alexander_all, alexander_all_seq, skein_all_sites, skein_all_sites_seq};
use gl11::invariant::corpus;
use gl11::tangle::BraidWord;

fn corpus_braids() -> Vec<BraidWord> {
    corpus().iter().map(|e| e.braid()).collect()
}

fn bench_alexander_corpus(c: &mut Criterion) {
    let braids = corpus_braids();
    let mut group = c.benchmark_group("alexander_corpus");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            let out = alexander_all_seq(std::hint::black_box(&braids));
            assert!(out.iter().all(Result::is_ok));
        })
    });
    group.bench_function("par", |b| {
        b.iter(|| {
            let out = alexander_all(std::hint::black_box(&braids));
            assert!(out.iter().all(Result::is_ok));
        })
    });
    group.finish();
}

fn bench_skein_sweep(c: &mut Criterion) {
    let braid = BraidWord::new(3, vec![1, 1, 1, 2, 2, 2]).unwrap();
    let mut group = c.benchmark_group("skein_sweep_granny");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| assert!(skein_all_sites_seq(std::hint::black_box(&braid)).unwrap()))
    });
    group.bench_function("par", |b| {
        b.iter(|| assert!(skein_all_sites(std::hint::black_box(&braid)).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, bench_alexander_corpus, bench_skein_sweep);
criterion_main!(benches);
