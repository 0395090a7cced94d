use chainorder::no_body::{classify_type_c, level_space, level_value_set};
use chainorder::{lattice_points, mco_lattice_points, unimodular_equiv, vertices, DominantWeight, Mode, Partition, TypeTag, VarOrder};
use chainorder_bench::{checkerboard, rho_poset};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn polytopes(c: &mut Criterion) {
    let h = checkerboard(TypeTag::A, 3, 2);
    c.bench_function("vertices A3 2rho", |b| b.iter(|| vertices(black_box(&h)).unwrap()));
    c.bench_function("lattice points A3 2rho", |b| b.iter(|| lattice_points(black_box(&h)).unwrap()));
    let p = rho_poset(TypeTag::C, 2);
    c.bench_function("chain-order points C2 rho", |b| {
        b.iter(|| mco_lattice_points(black_box(&p), &Partition::all_chain(4)).unwrap())
    });
    let gt = vertices(&checkerboard(TypeTag::C, 2, 1)).unwrap();
    let other = vertices(&chainorder::mco_hrep(&p, &Partition::all_order(4)).unwrap()).unwrap();
    c.bench_function("unimodular equivalence C2", |b| b.iter(|| unimodular_equiv(black_box(&gt), &other).unwrap()));
}

fn valuations(c: &mut Criterion) {
    let rho = DominantWeight::rho(TypeTag::A, 3);
    let part = Partition::from_mask("010101").unwrap();
    c.bench_function("level space A3 rho", |b| b.iter(|| level_space(TypeTag::A, 3, &rho, &part, 1).unwrap()));
    let space = level_space(TypeTag::A, 3, &rho, &part, 1).unwrap();
    c.bench_function("value set A3 rho", |b| {
        b.iter(|| level_value_set(black_box(&space), &VarOrder::identity(6), Mode::Low).unwrap())
    });
    let ord = VarOrder::from_one_based(&[2, 3, 1, 4]).unwrap();
    c.bench_function("classify one type C cell", |b| b.iter(|| classify_type_c(2, black_box(&ord)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = polytopes, valuations
}
criterion_main!(benches);
