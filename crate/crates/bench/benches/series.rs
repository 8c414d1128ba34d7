use confluent_core::series::{bessel_j, bessel_sum_rhs, kummer_m, sum_formula_rhs, whittaker_m};
use confluent_core::SeriesControl;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

fn bench_bessel(c: &mut Criterion) {
    let ctl = SeriesControl::default();
    let mut group = c.benchmark_group("bessel_j");
    for z in [1.0, 10.0, 40.0] {
        group.bench_with_input(BenchmarkId::from_parameter(z), &z, |b, &z| {
            b.iter(|| bessel_j(black_box(1.5), Complex64::new(z, 0.0), &ctl))
        });
    }
    group.finish();
}

fn bench_kummer(c: &mut Criterion) {
    let ctl = SeriesControl::default();
    let mut group = c.benchmark_group("kummer_m");
    for z in [-20.0, 1.0, 20.0] {
        group.bench_with_input(BenchmarkId::from_parameter(z), &z, |b, &z| {
            b.iter(|| {
                kummer_m(
                    Complex64::new(0.5, 0.0),
                    Complex64::new(1.75, 0.0),
                    black_box(Complex64::new(z, 0.0)),
                    &ctl,
                )
            })
        });
    }
    group.bench_function("complex", |b| {
        b.iter(|| {
            kummer_m(
                Complex64::new(0.3, 0.2),
                Complex64::new(1.1, -0.4),
                black_box(Complex64::new(-2.0, 0.5)),
                &ctl,
            )
        })
    });
    group.finish();
}

fn bench_whittaker(c: &mut Criterion) {
    let ctl = SeriesControl::default();
    c.bench_function("whittaker_m 0.25 1.5 10", |b| {
        b.iter(|| whittaker_m(black_box(0.25), 1.5, Complex64::new(10.0, 0.0), &ctl))
    });
}

fn bench_summations(c: &mut Criterion) {
    let ctl = SeriesControl::default();
    c.bench_function("sum_formula_rhs 0.5 1.25 5", |b| {
        b.iter(|| {
            sum_formula_rhs(
                Complex64::new(0.5, 0.0),
                Complex64::new(1.25, 0.0),
                black_box(Complex64::new(5.0, 0.0)),
                &ctl,
            )
        })
    });
    c.bench_function("bessel_sum_rhs 1.5 20", |b| {
        b.iter(|| bessel_sum_rhs(black_box(1.5), 20.0, &ctl))
    });
}

criterion_group!(benches, bench_bessel, bench_kummer, bench_whittaker, bench_summations);
criterion_main!(benches);
