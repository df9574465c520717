use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use minksimplex::equivalence::{planted_generator, verify};
use minksimplex::{
    circumcenters, construct_ag_quasiregular, incenter, PNorm, PlantedKind, PolytopeBall, Rational, Simplex, Strategy,
    TheoremId, Vector,
};
use minksimplex_bench::instances;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("circumcenters");
    for (d, facets) in [(2, 12), (3, 20)] {
        let work = instances(1, d, facets, 8);
        group.bench_with_input(BenchmarkId::new("polytopal", d), &work, |b, work| {
            b.iter(|| work.iter().map(|(t, ball)| circumcenters(t, ball).unwrap().pieces.len()).sum::<usize>())
        });
    }
    let smooth = PNorm::new(3.0, 3).unwrap();
    let t = instances(2, 3, 20, 1)[0].0.to_f64().unwrap();
    group.bench_function("pnorm/3", |b| b.iter(|| circumcenters(&t, &smooth).unwrap()));
    group.finish();
}

fn spheres(c: &mut Criterion) {
    let work = instances(3, 3, 20, 8);
    c.bench_function("incenter/3", |b| b.iter(|| work.iter().map(|(t, ball)| incenter(t, ball).unwrap().1).max()));
}

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for d in [2, 3, 4] {
        let cube = PolytopeBall::cube(d);
        let p0 = Vector::<Rational>::unit(d, 0);
        group.bench_with_input(BenchmarkId::new("cube", d), &d, |b, _| {
            b.iter(|| construct_ag_quasiregular(&cube, &p0, Strategy::Seeded(7)).unwrap())
        });
    }
    group.finish();
}

fn equivalence(c: &mut Criterion) {
    let diamond = PolytopeBall::diamond();
    let t: Simplex<Rational> = planted_generator(PlantedKind::EqualHeights, &diamond, 5).unwrap();
    c.bench_function("verify/41", |b| b.iter(|| verify(TheoremId::Thm41, &t, &diamond).unwrap()));
}

criterion_group!(benches, enumeration, spheres, construction, equivalence);
criterion_main!(benches);
