use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pqtrig::{
    arcsin_pq, gauss_2f1, integrate_de, sin_pq, HypTriple, PqParams,
};

fn bench_gauss_2f1(c: &mut Criterion) {
    let t = HypTriple::new(0.4, 1.0 / 3.0, 4.0 / 3.0).unwrap();
    c.bench_function("gauss_2f1 interior", |b| {
        b.iter(|| gauss_2f1(&t, black_box(0.42)).unwrap().value)
    });
    c.bench_function("gauss_2f1 near unit", |b| {
        b.iter(|| gauss_2f1(&t, black_box(0.97)).unwrap().value)
    });
}

fn bench_arcsin(c: &mut Criterion) {
    let pq = PqParams::new(2.5, 3.0).unwrap();
    c.bench_function("arcsin_pq mid", |b| {
        b.iter(|| arcsin_pq(&pq, black_box(0.5)).unwrap())
    });
    c.bench_function("arcsin_pq near one", |b| {
        b.iter(|| arcsin_pq(&pq, black_box(0.999)).unwrap())
    });
}

fn bench_quadrature(c: &mut Criterion) {
    c.bench_function("integrate_de smooth", |b| {
        b.iter(|| {
            integrate_de(|t| (1.0 + t.powf(3.0)).powf(-0.4), 0.0, black_box(1.0), 1e-12)
                .unwrap()
                .value
        })
    });
}

fn bench_inversion(c: &mut Criterion) {
    let pq = PqParams::new(2.5, 3.0).unwrap();
    c.bench_function("sin_pq mid", |b| {
        b.iter(|| sin_pq(&pq, black_box(0.6)).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_gauss_2f1,
    bench_arcsin,
    bench_quadrature,
    bench_inversion
);
criterion_main!(kernels);
