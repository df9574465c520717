use super::{Norm, PolytopeBall};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::vector::{Point, Vector};

/// A Radon polygon glued from a convex arc and its turned polar arc.
///
/// `arc` runs counterclockwise from `(1, 0)` to `(0, 1)` inside the closed
/// first quadrant. The second-quadrant arc consists of the quarter-turned
/// normals of the arc's edges; the rest follows by central symmetry.
pub fn radon_polygon(arc: &[Point<Rational>]) -> Result<PolytopeBall> {
    let zero = Rational::zero();
    let one = Rational::one();
    let e1 = Vector::new(vec![one.clone(), zero.clone()]);
    let e2 = Vector::new(vec![zero.clone(), one.clone()]);
    if arc.len() < 2 || arc[0] != e1 || arc[arc.len() - 1] != e2 {
        return Err(Error::InvalidBall("arc must run from (1, 0) to (0, 1)".into()));
    }
    if arc.iter().any(|p| p.dim() != 2 || p[0] < zero || p[1] < zero) {
        return Err(Error::InvalidBall("arc must lie in the first quadrant".into()));
    }
    let mut points: Vec<Point<Rational>> = arc.to_vec();
    for pair in arc.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        // Normal n of the edge line {<n, x> = 1}.
        let det = a[0].clone() * &b[1] - a[1].clone() * &b[0];
        if !Scalar::is_positive(&det) {
            return Err(Error::InvalidBall("arc is not counterclockwise around the origin".into()));
        }
        let n = Vector::new(vec![(b[1].clone() - &a[1]) / &det, (a[0].clone() - &b[0]) / &det]);
        points.push(n.rotate_quarter());
    }
    let negated: Vec<Point<Rational>> = points.iter().map(|p| -p).collect();
    points.extend(negated);
    let ball = PolytopeBall::from_vertices(&points)?;
    if ball.is_radon()? {
        Ok(ball)
    } else {
        Err(Error::NotRadon)
    }
}

/// `conv{±(1, 0), ±(0, 1), ±(1, 1)}`.
pub fn radon_hexagon() -> PolytopeBall {
    radon_polygon(&[Vector::from_i64s(&[1, 0]), Vector::from_i64s(&[1, 1]), Vector::from_i64s(&[0, 1])])
        .expect("the affine regular hexagon is Radon")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn hexagon_is_radon_square_is_not() {
        let h = radon_hexagon();
        assert_eq!(h.vertices().len(), 6);
        assert!(h.is_radon().unwrap());
        assert!(!PolytopeBall::square().is_radon().unwrap());
        assert!(!PolytopeBall::diamond().is_radon().unwrap());
    }

    #[test]
    fn glued_octagon() {
        let arc = [Vector::from_i64s(&[1, 0]), Vector::new(vec![rat(3, 4), rat(3, 4)]), Vector::from_i64s(&[0, 1])];
        let b = radon_polygon(&arc).unwrap();
        assert!(b.is_radon().unwrap());
    }
}
