//! Seeded random instances: rationals, simplices and symmetric unit balls.

use rand::Rng;

use crate::error::Result;
use crate::limits::Limits;
use crate::linear::general_position;
use crate::norm::{Norm, PolytopeBall};
use crate::scalar::{Rational, Scalar};
use crate::simplex::Simplex;
use crate::vector::{Point, Vector};

/// Uniform over `{k / den : lo <= k / den <= hi}`.
pub fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    Rational::from_ratio(rng.random_range(lo * den..=hi * den), den)
}

pub fn point<R: Rng>(rng: &mut R, d: usize, bound: i64, den: i64) -> Point<Rational> {
    Vector::new((0..d).map(|_| rational(rng, -bound, bound, den)).collect())
}

/// A nonzero integer vector with entries in `[-bound, bound]`.
pub fn direction<R: Rng>(rng: &mut R, d: usize, bound: i64) -> Vector<Rational> {
    loop {
        let v: Vector<Rational> =
            Vector::new((0..d).map(|_| Rational::from_i64(rng.random_range(-bound..=bound))).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

/// A simplex with vertices in `[-bound, bound]^d` on the grid `1/den`.
pub fn simplex<R: Rng>(rng: &mut R, d: usize, bound: i64, den: i64) -> Simplex<Rational> {
    loop {
        let pts: Vec<Point<Rational>> = (0..=d).map(|_| point(rng, d, bound, den)).collect();
        if general_position(&pts).unwrap_or(false) {
            return Simplex::new(pts).expect("vertices in general position");
        }
    }
}

/// Convex hull of `k` random points and their negatives.
fn symmetric_hull<R: Rng>(rng: &mut R, d: usize, k: usize, max_facets: usize) -> Option<PolytopeBall> {
    let mut pts = Vec::with_capacity(2 * k);
    for _ in 0..k {
        let p = point(rng, d, 2, 4);
        if p.is_zero() {
            return None;
        }
        pts.push(-&p);
        pts.push(p);
    }
    let limits = Limits { max_facets, ..Limits::default() };
    PolytopeBall::from_vertices_with(&pts, &limits).ok()
}

/// A centrally symmetric polygon with at most `max_vertices` vertices.
pub fn symmetric_polygon<R: Rng>(rng: &mut R, max_vertices: usize) -> PolytopeBall {
    let half = (max_vertices / 2).max(2);
    loop {
        let k = rng.random_range(2..=half);
        if let Some(b) = symmetric_hull(rng, 2, k, max_vertices) {
            return b;
        }
    }
}

/// A centrally symmetric polytope in `R^d` with at most `max_facets` facets.
pub fn symmetric_polytope<R: Rng>(rng: &mut R, d: usize, max_facets: usize) -> PolytopeBall {
    loop {
        let k = rng.random_range(d..=d + 2);
        if let Some(b) = symmetric_hull(rng, d, k, max_facets) {
            return b;
        }
    }
}

/// Twelve points of the unit circle with Pythagorean coordinates.
pub fn disc_approximant() -> PolytopeBall {
    let mut pts = Vec::new();
    for (x, y) in [(5, 0), (4, 3), (3, 4), (0, 5), (-3, 4), (-4, 3)] {
        let p = Vector::new(vec![Rational::from_ratio(x, 5), Rational::from_ratio(y, 5)]);
        pts.push(-&p);
        pts.push(p);
    }
    PolytopeBall::from_vertices(&pts).expect("twelve points on a circle")
}

/// A point of the unit sphere in a random integer direction.
pub fn sphere_point<F: Scalar, N: Norm<F>, R: Rng>(rng: &mut R, ball: &N) -> Point<F> {
    let v: Vector<F> = loop {
        let v = Vector::new((0..ball.dim()).map(|_| F::from_i64(rng.random_range(-3..=3))).collect());
        if !v.is_zero() {
            break v;
        }
    };
    let g = ball.gauge(&v);
    v.div_scalar(&g)
}

/// Random affine change that keeps every norm property of the simplex:
/// a translation by a grid vector and a positive scaling.
pub fn jiggle<F: Scalar, R: Rng>(rng: &mut R, t: &Simplex<F>) -> Result<Simplex<F>> {
    let d = t.dim();
    let shift: Vector<F> = Vector::new((0..d).map(|_| F::from_ratio(rng.random_range(-8..=8), 4)).collect());
    let lambda = F::from_ratio(rng.random_range(1..=8), rng.random_range(1..=4));
    t.scale_about(&Vector::zeros(d), &lambda)?.translate(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_caps() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert!(symmetric_polygon(&mut rng, 12).vertices().len() <= 12);
            assert!(symmetric_polytope(&mut rng, 3, 20).facet_count() <= 20);
        }
        assert_eq!(disc_approximant().vertices().len(), 12);
    }

    #[test]
    fn sphere_point_is_on_sphere() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let b = PolytopeBall::cross_polytope(3);
        for _ in 0..10 {
            let p: Point<Rational> = sphere_point(&mut rng, &b);
            assert!(b.on_sphere(&p));
        }
    }
}
