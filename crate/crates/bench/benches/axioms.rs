use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use frobpair::instances::{catalog_instance, random_mor, tensor_product};
use frobpair::{check_duality, FieldSpec, GradedObj};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn axiom_suite(c: &mut Criterion) {
    let q = FieldSpec::Rationals;
    for name in ["sphere2", "exterior3", "truncpoly4", "torus2"] {
        let pair = catalog_instance(name, q).unwrap().pair;
        c.bench_function(&format!("left-axioms/{name}"), |b| {
            b.iter(|| black_box(&pair).check_left_frobenius().unwrap())
        });
        c.bench_function(&format!("duality/{name}"), |b| {
            b.iter(|| check_duality(black_box(&pair)).unwrap())
        });
    }
    let s = catalog_instance("sphere2", q).unwrap().pair;
    c.bench_function("tensor-product/sphere2^2", |b| {
        b.iter(|| tensor_product(black_box(&s), black_box(&s)).unwrap())
    });
}

fn morphisms(c: &mut Criterion) {
    let q = FieldSpec::Rationals;
    let x = GradedObj::new(q, [(0, 2), (1, 2)]);
    let xx = x.tensor(&x);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = random_mor(&mut rng, &xx, &xx);
    let g = random_mor(&mut rng, &xx, &xx);
    c.bench_function("compose/16x16", |b| {
        b.iter(|| black_box(&f).compose(black_box(&g)).unwrap())
    });
    c.bench_function("tensor/16x16", |b| {
        b.iter(|| black_box(&f).tensor(black_box(&g)))
    });
}

criterion_group!(benches, axiom_suite, morphisms);
criterion_main!(benches);
