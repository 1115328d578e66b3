//! Benchmarks for the hot paths: exact kernel computation, signatures,
//! minimal polynomials, and the catalogue build-and-certify pipeline.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use qlie_core::{build, find, verify_entry, FieldMode, Matrix, Scalar};

fn thirteen_dim_entry() -> qlie_core::QuadraticLieAlgebra {
    build("gcheck-plus", FieldMode::Real).expect("catalogue entry builds")
}

fn bench_kernel(c: &mut Criterion) {
    let q = thirteen_dim_entry();
    // The adjoint of a generic element has a small kernel; its nullspace
    // computation dominates radical and centroid searches.
    let x: Vec<Scalar> = (0..q.dim()).map(|i| qlie_core::s_int(i as i64 % 3 - 1)).collect();
    let ad = q.lie.ad(&x);
    c.bench_function("kernel_basis_13", |b| {
        b.iter_batched(|| ad.clone(), |m| m.kernel_basis(), BatchSize::SmallInput)
    });
}

fn bench_signature(c: &mut Criterion) {
    let killing = thirteen_dim_entry().lie.killing_form();
    c.bench_function("signature_killing_13", |b| {
        b.iter_batched(|| killing.clone(), |m| m.signature(), BatchSize::SmallInput)
    });
}

fn bench_minimal_polynomial(c: &mut Criterion) {
    let q = thirteen_dim_entry();
    let x: Vec<Scalar> = (0..q.dim()).map(|i| qlie_core::s_int((i as i64 % 4) - 2)).collect();
    let ad = q.lie.ad(&x);
    c.bench_function("minimal_polynomial_13", |b| {
        b.iter_batched(|| ad.clone(), |m| m.minimal_polynomial(), BatchSize::SmallInput)
    });
}

fn bench_matrix_inverse(c: &mut Criterion) {
    let n = 13;
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = qlie_core::s_ratio((i * j + 1) as i64, (i + j + 1) as i64);
        }
    }
    c.bench_function("inverse_13", |b| {
        b.iter_batched(|| m.clone(), |m| m.inverse(), BatchSize::SmallInput)
    });
}

fn bench_catalogue(c: &mut Criterion) {
    c.bench_function("build_gcheck_plus", |b| {
        b.iter(|| build("gcheck-plus", FieldMode::Real).unwrap())
    });
    let entry = find("dx-vv", FieldMode::Closed).expect("entry exists");
    c.bench_function("verify_entry_dx_vv", |b| {
        b.iter(|| {
            let report = verify_entry(entry);
            assert!(report.passed());
            report
        })
    });
}

fn bench_fingerprint(c: &mut Criterion) {
    let q = build("dx-nil5", FieldMode::Closed).expect("catalogue entry builds");
    c.bench_function("fingerprint_dx_nil5", |b| b.iter(|| q.fingerprint().unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_kernel,
        bench_signature,
        bench_minimal_polynomial,
        bench_matrix_inverse,
        bench_catalogue,
        bench_fingerprint
}
criterion_main!(benches);
