use minksimplex::circumcenter::{
    example_2_2_fixture, in_medial_polytope, is_circumcenter, thm21_cone_member, thm21_halfspace_side, thm22_incidence,
    unique_circumcenter_2d, CircumcenterSolver,
};
use minksimplex::construct::{construct_ag_quasiregular, Strategy};
use minksimplex::sample;
use minksimplex::scalar::rat;
use minksimplex::{circumcenters, Classification, Norm, PNorm, PolytopeBall, Rational, Simplex, Vector};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn v(c: &[i64]) -> Vector<Rational> {
    Vector::from_i64s(c)
}

fn instance(seed: u64, d: usize) -> (Simplex<Rational>, PolytopeBall) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ball = match (d, seed % 3) {
        (2, _) => sample::symmetric_polygon(&mut rng, 12),
        (_, 0) => PolytopeBall::cube(d),
        (_, 1) => PolytopeBall::cross_polytope(d),
        _ => sample::symmetric_polytope(&mut rng, d, 20),
    };
    (sample::simplex(&mut rng, d, 4, 4), ball)
}

#[test]
fn euclidean_right_triangle_singleton() {
    let t = Simplex::new(vec![Vector::new(vec![0.0, 0.0]), Vector::new(vec![2.0, 0.0]), Vector::new(vec![0.0, 2.0])])
        .unwrap();
    let set = circumcenters(&t, &PNorm::euclidean(2)).unwrap();
    assert_eq!(set.witnesses.len(), 1);
    let w = &set.witnesses[0];
    assert!(w.center.near(&Vector::new(vec![1.0, 1.0]), 1e-12));
    assert!((w.radius - 2f64.sqrt()).abs() < 1e-12);
}

#[test]
fn max_norm_grid_agrees_with_pieces() {
    // Grid points (i, j) / 80 over [-2, 3]^2; max-norm distances in integers.
    let t = Simplex::new(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
    let sq = PolytopeBall::square();
    let set = circumcenters(&t, &sq).unwrap();
    let verts = [(0i64, 0i64), (80, 0), (0, 80)];
    let mut hits = 0;
    for i in -160..240 {
        for j in -160..240 {
            let dist: Vec<i64> = verts.iter().map(|(x, y)| (x - i).abs().max((y - j).abs())).collect();
            let on_grid = dist[0] > 0 && dist.iter().all(|&x| x == dist[0]);
            // Only exact set membership is cross-checked on a sparse subgrid.
            if on_grid || (i % 20 == 0 && j % 20 == 0) {
                let m = Vector::new(vec![rat(i, 80), rat(j, 80)]);
                let r = rat(dist[0], 80);
                let in_pieces = set.pieces.iter().any(|p| p.contains(&m, &r));
                assert_eq!(in_pieces, on_grid, "grid point ({i}, {j})");
                hits += on_grid as usize;
            }
        }
    }
    assert!(hits > 100);
}

#[test]
fn cube_fixture() {
    let (t, cube) = example_2_2_fixture();
    assert!(t.centroid().is_zero());
    let set = circumcenters(&t, &cube).unwrap();
    assert_eq!(set.classification, Classification::Multiple);
    let o = Vector::zeros(3);
    assert!(set.pieces.iter().any(|p| p.contains(&o, &rat(1, 1))));
    // Translates of the cube along CD by up to 1/2 keep all four vertices.
    let cd = t.vertex(3) - t.vertex(2);
    for s in [rat(1, 2), rat(1, 4), rat(-1, 2)] {
        let m = o.add_scaled(&s, &cd);
        assert!(is_circumcenter(&t, &cube, &m, &rat(1, 1)));
        assert!(set.pieces.iter().any(|p| p.contains(&m, &rat(1, 1))));
    }
    assert!(!is_circumcenter(&t, &cube, &o.add_scaled(&rat(3, 4), &cd), &rat(1, 1)));
}

#[test]
fn medial_side_and_cone_on_euclidean_triangles() {
    let e = PNorm::euclidean(2);
    let right =
        Simplex::new(vec![Vector::new(vec![0.0, 0.0]), Vector::new(vec![2.0, 0.0]), Vector::new(vec![0.0, 2.0])])
            .unwrap();
    let m = Vector::new(vec![1.0, 1.0]);
    let r = 2f64.sqrt();
    assert!(!thm21_halfspace_side(&right, 0, &m).unwrap());
    assert!(thm21_cone_member(&right, 0, &m, &e, &r).unwrap());

    let acute =
        Simplex::new(vec![Vector::new(vec![0.0, 0.0]), Vector::new(vec![4.0, 0.0]), Vector::new(vec![1.0, 3.0])])
            .unwrap();
    let m = Vector::new(vec![2.0, 1.0]);
    let r = 5f64.sqrt();
    // Inside the medial triangle: on the far side of every medial line, and
    // each ray from a vertex through M meets the opposite side inside the
    // circumdisc.
    for i in 0..3 {
        assert!(!thm21_halfspace_side(&acute, i, &m).unwrap());
        assert!(thm21_cone_member(&acute, i, &m, &e, &r).unwrap());
    }
    let obtuse =
        Simplex::new(vec![Vector::new(vec![0.0, 0.0]), Vector::new(vec![4.0, 0.0]), Vector::new(vec![1.0, 1.0])])
            .unwrap();
    // Circumcenter (2, -1) lies beyond the long side: on the apex side of
    // the medial lines of the two short sides, but not of the long one.
    let m = Vector::new(vec![2.0, -1.0]);
    let r = 5f64.sqrt();
    assert!(!thm21_halfspace_side(&obtuse, 2, &m).unwrap());
    assert!(thm21_halfspace_side(&obtuse, 0, &m).unwrap() && thm21_halfspace_side(&obtuse, 1, &m).unwrap());
    for i in 0..3 {
        assert_eq!(thm21_halfspace_side(&obtuse, i, &m).unwrap(), !thm21_cone_member(&obtuse, i, &m, &e, &r).unwrap());
    }
    let v = unique_circumcenter_2d(&acute, &e).unwrap();
    assert!(v.interior_center.is_some() && v.holds);
}

#[test]
fn medial_polytope_membership() {
    let t = Simplex::new(vec![v(&[0, 0, 0]), v(&[4, 0, 0]), v(&[0, 4, 1]), v(&[1, 1, 4])]).unwrap();
    assert!(in_medial_polytope(&t, t.centroid()));
    for a in t.vertices() {
        assert!(!in_medial_polytope(&t, a));
    }
}

#[test]
fn quasiregular_square_triangle_is_unique() {
    let sq = PolytopeBall::square();
    let (t, _) = construct_ag_quasiregular(&sq, &v(&[1, 1]), Strategy::Deterministic).unwrap();
    let verdict = unique_circumcenter_2d(&t, &sq).unwrap();
    assert_eq!(verdict.classification, Classification::Singleton);
    assert!(verdict.interior_center.is_some() && verdict.holds);
}

#[test]
fn side_parallel_to_long_edge() {
    // Hexagon with long horizontal edges; the triangle's top side is
    // horizontal and its apex sits on a bottom edge of the translates.
    let hex =
        PolytopeBall::from_vertices(&[v(&[2, 1]), v(&[-2, 1]), v(&[-3, 0]), v(&[-2, -1]), v(&[2, -1]), v(&[3, 0])])
            .unwrap();
    let t = Simplex::new(vec![v(&[0, 0]), v(&[1, 0]), Vector::new(vec![rat(1, 2), rat(-2, 1)])]).unwrap();
    let set = circumcenters(&t, &hex).unwrap();
    assert_eq!(set.classification, Classification::Multiple);
    assert!(hex.center_inside_medial(&t, &set).unwrap().is_none());
    let verdict = unique_circumcenter_2d(&t, &hex).unwrap();
    assert!(verdict.interior_center.is_none() && verdict.holds);
}

#[test]
fn smooth_witnesses_have_small_residuals() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in [1.5, 3.0, 4.0] {
        for d in 2..=3 {
            let b = PNorm::new(p, d).unwrap();
            for _ in 0..10 {
                let t = sample::simplex(&mut rng, d, 4, 4).to_f64().unwrap();
                let set = circumcenters(&t, &b).unwrap();
                assert_eq!(set.classification, Classification::Unknown);
                assert!(!set.is_empty());
                for w in &set.witnesses {
                    for a in t.vertices() {
                        assert!((b.gauge(&(a - &w.center)) - w.radius).abs() <= 1e-9 * w.radius);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn location_predicates(seed in any::<u64>(), d in 2usize..=3) {
        let (t, ball) = instance(seed, d);
        let set = circumcenters(&t, &ball).unwrap();
        for w in &set.witnesses {
            for a in t.vertices() {
                prop_assert_eq!(ball.gauge(&(a - &w.center)), w.radius.clone());
            }
            for i in 0..=d {
                let side = thm21_halfspace_side(&t, i, &w.center).unwrap();
                let cone = thm21_cone_member(&t, i, &w.center, &ball, &w.radius).unwrap();
                prop_assert_eq!(side, !cone);
                if d == 2 {
                    prop_assert_ne!(thm22_incidence(&t, i, &w.center, &ball, &w.radius).unwrap(), Some(false));
                }
            }
            if t.contains(&w.center) {
                prop_assert!(in_medial_polytope(&t, &w.center));
            }
        }
        for piece in &set.pieces {
            // A vertex of T is never a circumcenter, so extremes stay off them.
            let dir = t.vertex(1) - t.vertex(0);
            for c in piece.extremes_along(&dir).unwrap() {
                prop_assert!(is_circumcenter(&t, &ball, &c.center, &c.radius));
            }
        }
        if d == 2 {
            let verdict = unique_circumcenter_2d(&t, &ball).unwrap();
            prop_assert!(verdict.holds);
        }
    }
}
