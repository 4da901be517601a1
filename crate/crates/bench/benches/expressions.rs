use criterion::{black_box, criterion_group, criterion_main, Criterion};

use allroots::expr::Expr;

const FIVE_ROOTS: &str = "(x-0.5)*(x-0.50001)*(x-4)*(x-4.05)*(x-9.3)";

fn parse(c: &mut Criterion) {
    c.bench_function("expr/parse", |b| {
        b.iter(|| Expr::parse(black_box(FIVE_ROOTS)).unwrap())
    });
}

fn eval(c: &mut Criterion) {
    let expr = Expr::parse(FIVE_ROOTS).unwrap();
    c.bench_function("expr/eval", |b| {
        b.iter(|| expr.eval(black_box(3.7)).unwrap())
    });
}

fn differentiate(c: &mut Criterion) {
    let expr = Expr::parse(FIVE_ROOTS).unwrap();
    c.bench_function("expr/differentiate", |b| {
        b.iter(|| expr.differentiate().unwrap())
    });
}

criterion_group!(benches, parse, eval, differentiate);
criterion_main!(benches);
