use minksimplex::equivalence::{
    bridge_holds, planted_generator, random_negative, verify, verify_thm41, verify_thm43, PlantedKind, TheoremId,
};
use minksimplex::norm::radon_hexagon;
use minksimplex::sample;
use minksimplex::{Norm, PolytopeBall, Rational, Simplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn planar_balls() -> Vec<PolytopeBall> {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut balls = vec![PolytopeBall::square(), PolytopeBall::diamond(), sample::disc_approximant()];
    balls.extend((0..3).map(|_| sample::symmetric_polygon(&mut rng, 10)));
    balls
}

/// Planted instances report all true, negatives all false, and every report
/// agrees with itself.
fn campaign(theorem: TheoremId, kind: PlantedKind, ball: &PolytopeBall, seeds: std::ops::Range<u64>) {
    for seed in seeds {
        let t: Simplex<Rational> = planted_generator(kind, ball, seed).unwrap();
        let reports = verify(theorem, &t, ball).unwrap();
        assert!(reports.iter().all(|r| r.agreement), "{reports:?}");
        let focus = reports.iter().find(|r| r.theorem == theorem).unwrap();
        assert!(focus.all_true(), "{} seed {seed}: {focus:?}", ball.describe());

        let t = random_negative(theorem, ball, seed).unwrap();
        for r in verify(theorem, &t, ball).unwrap() {
            assert!(r.agreement && !r.any_true(), "{r:?}");
        }
    }
}

#[test]
fn thm41_and_thm43_in_the_plane_and_space() {
    for ball in planar_balls() {
        campaign(TheoremId::Thm41, PlantedKind::EqualHeights, &ball, 0..3);
        campaign(TheoremId::Thm43, PlantedKind::AgQuasiregular, &ball, 0..3);
    }
    for ball in [PolytopeBall::cube(3), PolytopeBall::cross_polytope(3)] {
        campaign(TheoremId::Thm41, PlantedKind::EqualHeights, &ball, 0..2);
        campaign(TheoremId::Thm43, PlantedKind::AgQuasiregular, &ball, 0..2);
    }
}

#[test]
fn planar_theorems() {
    for ball in planar_balls() {
        campaign(TheoremId::Thm42, PlantedKind::EqualHeights, &ball, 0..3);
        campaign(TheoremId::Thm44First, PlantedKind::AgQuasiregular, &ball, 0..3);
        campaign(TheoremId::Thm44Second, PlantedKind::Equilateral, &ball, 0..3);
    }
}

#[test]
fn radon_remark() {
    let hex = radon_hexagon();
    assert!(hex.is_radon().unwrap());
    campaign(TheoremId::Remark41, PlantedKind::AgQuasiregular, &hex, 0..5);
    let err = verify(TheoremId::Remark41, &random_triangle(), &PolytopeBall::square());
    assert!(err.is_err());
}

fn random_triangle() -> Simplex<Rational> {
    sample::simplex(&mut ChaCha8Rng::seed_from_u64(1), 2, 4, 4)
}

#[test]
fn duality_bridge_on_planted_instances() {
    let mut balls = planar_balls();
    balls.push(PolytopeBall::cube(3));
    for ball in &balls {
        let dual = ball.dual();
        for seed in 0..3 {
            for kind in [PlantedKind::EqualHeights, PlantedKind::AgQuasiregular] {
                let t: Simplex<Rational> = planted_generator(kind, ball, seed).unwrap();
                let a = verify_thm41(&t, ball).unwrap();
                let b = verify_thm43(&t.dual_simplex().unwrap(), &dual).unwrap();
                assert!(bridge_holds(&a, &b), "{a:?} {b:?}");
            }
        }
    }
}

#[test]
fn planting_is_deterministic() {
    let dm = PolytopeBall::diamond();
    for kind in [PlantedKind::EqualHeights, PlantedKind::AgQuasiregular, PlantedKind::Equilateral] {
        let a: Simplex<Rational> = planted_generator(kind, &dm, 9).unwrap();
        let b: Simplex<Rational> = planted_generator(kind, &dm, 9).unwrap();
        assert_eq!(a, b);
    }
}
