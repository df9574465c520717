use minksimplex::circumcenter::is_ag_quasiregular;
use minksimplex::construct::{construct_ag_quasiregular, phase2_midpoint_chord, Strategy};
use minksimplex::linear::general_position;
use minksimplex::sample;
use minksimplex::{Norm, PNorm, PolytopeBall, Rational, Scalar, Simplex, Vector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) {
    let d = ball.dim();
    assert!(t.centroid().coords().iter().all(|x| Scalar::is_zero(x)), "centroid {:?}", t.centroid());
    assert!(t.vertices().iter().all(|a| ball.on_sphere(a)));
    assert!(general_position(t.vertices()).unwrap());
    assert!(is_ag_quasiregular(t, ball).unwrap());
    assert_eq!(t.vertices().len(), d + 1);
}

fn sweep<F: Scalar, N: Norm<F>>(ball: &N, rng: &mut ChaCha8Rng) {
    let p0: Vector<F> = sample::sphere_point(rng, ball);
    let (a, _) = construct_ag_quasiregular(ball, &p0, Strategy::Deterministic).unwrap();
    let (b, _) = construct_ag_quasiregular(ball, &p0, Strategy::Deterministic).unwrap();
    assert_eq!(a, b);
    // Float mode renormalizes P0 onto the sphere.
    assert!(a.vertex(0).coords().iter().zip(p0.coords()).all(|(x, y)| x.tol_eq(y)));
    check(&a, ball);
    for seed in 0..2 {
        let (s, trace) = construct_ag_quasiregular(ball, &p0, Strategy::Seeded(seed)).unwrap();
        check(&s, ball);
        assert_eq!(trace.steps.len(), ball.dim() - 1);
    }
}

#[test]
fn polytopal_norms_in_dims_2_to_4() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for d in 2..=4 {
        sweep::<Rational, _>(&PolytopeBall::cube(d), &mut rng);
        sweep::<Rational, _>(&PolytopeBall::cross_polytope(d), &mut rng);
    }
    for _ in 0..4 {
        let b = sample::symmetric_polygon(&mut rng, 12);
        sweep::<Rational, _>(&b, &mut rng);
        let b = sample::symmetric_polytope(&mut rng, 3, 20);
        sweep::<Rational, _>(&b, &mut rng);
    }
}

#[test]
fn smooth_norms_in_dims_2_to_4() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for d in 2..=4 {
        for p in [2.0, 3.0] {
            sweep::<f64, _>(&PNorm::new(p, d).unwrap(), &mut rng);
        }
    }
}

#[test]
fn euclidean_plane_gives_equilateral_triangle() {
    let (t, _) =
        construct_ag_quasiregular(&PNorm::euclidean(2), &Vector::new(vec![1.0, 0.0]), Strategy::Deterministic).unwrap();
    let s = 3f64.sqrt() / 2.0;
    let mut got: Vec<(f64, f64)> = t.vertices().iter().map(|a| (a[0], a[1])).collect();
    got.sort_by(|x, y| x.1.total_cmp(&y.1));
    for (g, w) in got.iter().zip([(-0.5, -s), (1.0, 0.0), (-0.5, s)]) {
        assert!((g.0 - w.0).abs() < 1e-12 && (g.1 - w.1).abs() < 1e-12, "{got:?}");
    }
}

#[test]
fn midpoint_chord_is_bisected() {
    let sq = PolytopeBall::square();
    let c = Vector::new(vec![Rational::from_ratio(1, 3), Rational::from_ratio(-1, 5)]);
    let (r, s) = phase2_midpoint_chord(&sq, &c, &Vector::from_i64s(&[1, 0]), &Vector::from_i64s(&[0, 1])).unwrap();
    assert!(sq.on_sphere(&r) && sq.on_sphere(&s));
    assert_eq!((&r + &s).div_scalar(&Rational::from_i64(2)), c);
}
