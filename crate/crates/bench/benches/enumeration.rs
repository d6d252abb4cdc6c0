use catdpp::trees::{build_level, TreeKind};
use catdpp::{count_dpps, enumerate_catalan_dpps, q_product_formula};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn dpp_enumeration(c: &mut Criterion) {
    c.bench_function("count_dpps(6)", |b| b.iter(|| count_dpps(black_box(6))));
    c.bench_function("catalan dpps order 12", |b| {
        b.iter(|| enumerate_catalan_dpps(black_box(12)).count())
    });
}

fn trees(c: &mut Criterion) {
    for kind in TreeKind::ALL {
        c.bench_function(&format!("{kind} tree level 9"), |b| {
            b.iter(|| build_level(kind, black_box(9)).unwrap().len())
        });
    }
}

fn qpoly(c: &mut Criterion) {
    c.bench_function("q_product_formula(8)", |b| {
        b.iter(|| q_product_formula(black_box(8)).unwrap())
    });
}

criterion_group!(benches, dpp_enumeration, trees, qpoly);
criterion_main!(benches);
