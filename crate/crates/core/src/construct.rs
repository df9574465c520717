//! Simplices inscribed in the unit sphere whose centroid is the origin.
//!
//! The construction recurses over sections of the ball. At level `l > 2` a
//! chord through the current target centroid `G` fixes one vertex `P`, and
//! the remaining `l` vertices are placed in a hyperplane of the section
//! through `G' = G + (G - P) / l`. At level 2 a chord through `G` that `G`
//! does not split in ratio 1:2 gives `P`, and the last two vertices are the
//! ends of the chord with midpoint `G' = G + (G - P) / 2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circumcenter::is_ag_quasiregular;
use crate::error::{Error, Result};
use crate::linear::{general_position, orthogonal_complement_in};
use crate::norm::Norm;
use crate::scalar::Scalar;
use crate::simplex::Simplex;
use crate::vector::{Point, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Chords and section hyperplanes from a fixed priority order.
    Deterministic,
    /// Chords and section hyperplanes drawn from a seeded generator.
    Seeded(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep<F: Scalar> {
    pub level: usize,
    /// Spanning vectors of the current section through `centroid`.
    pub frame: Vec<Vector<F>>,
    pub centroid: Point<F>,
    /// Chosen chord `[P, Q]` through `centroid`, `P` being the new vertex.
    pub chord: (Point<F>, Point<F>),
    /// Level above 2: normal, inside the frame, of the next section.
    pub section_normal: Option<Vector<F>>,
    /// Level 2: chord with midpoint `G' = G + (G - P) / 2`.
    pub midpoint_chord: Option<(Point<F>, Point<F>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionTrace<F: Scalar> {
    pub strategy: Strategy,
    pub steps: Vec<TraceStep<F>>,
}

/// Combination coefficients tried, in order, for the level 2 chord.
const PRIORITY: [(i64, i64); 12] =
    [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1), (1, 3), (3, 1), (1, -3), (3, -1)];

enum Chooser {
    Fixed,
    Random(ChaCha8Rng),
}

impl Chooser {
    /// A nonzero integer combination of the frame.
    fn direction<F: Scalar>(&mut self, frame: &[Vector<F>], attempt: usize) -> Vector<F> {
        let d = frame[0].dim();
        match self {
            Chooser::Fixed => {
                if frame.len() == 2 {
                    let (a, b) = PRIORITY[attempt % PRIORITY.len()];
                    let k = F::from_i64(1 + (attempt / PRIORITY.len()) as i64);
                    frame[0].scale(&(F::from_i64(a) * &k)).add_scaled(&F::from_i64(b), &frame[1])
                } else {
                    let mut v = frame[attempt % frame.len()].clone();
                    for (j, f) in frame.iter().enumerate().take(attempt / frame.len()) {
                        v = v.add_scaled(&F::from_i64(j as i64 + 1), f);
                    }
                    v
                }
            }
            Chooser::Random(rng) => loop {
                let mut v = Vector::zeros(d);
                for f in frame {
                    let c: i64 = rng.random_range(-3..=3);
                    v = v.add_scaled(&F::from_i64(c), f);
                }
                if !v.is_zero() {
                    return v;
                }
            },
        }
    }
}

/// Chord of the ball through interior `g` along `v`, labeled so that the
/// first endpoint is at most as far from `g` as the second; ties go to the
/// lexicographically smaller point.
fn labeled_chord<F: Scalar, N: Norm<F>>(ball: &N, g: &Point<F>, v: &Vector<F>) -> Result<(Point<F>, Point<F>, F, F)> {
    let tp = ball.ray_exit(g, v)?;
    let tm = ball.ray_exit(g, &-v)?;
    let x = g.add_scaled(&tp, v);
    let y = g.add_scaled(&(-tm.clone()), v);
    // Gauge distances to g are tp * |v| and tm * |v|.
    let swap = if tp.tol_eq(&tm) { y.lex_cmp(&x).is_lt() } else { tm < tp };
    Ok(if swap { (y, x, tm, tp) } else { (x, y, tp, tm) })
}

fn split_one_to_two<F: Scalar>(near: &F, far: &F) -> bool {
    (near.clone() * F::from_i64(2)).tol_eq(far)
}

/// Level 2 step: the chord through `g` and the midpoint chord through `g'`.
fn phase2<F: Scalar, N: Norm<F>>(
    ball: &N,
    g: &Point<F>,
    frame: &[Vector<F>],
    prescribed: Option<&Point<F>>,
    chooser: &mut Chooser,
) -> Result<TraceStep<F>> {
    let (p, q) = match prescribed {
        Some(p0) => {
            let v = p0 - g;
            let tm = ball.ray_exit(g, &-&v)?;
            // P0 is at parameter 1 from g.
            if split_one_to_two(&F::one(), &tm) || split_one_to_two(&tm, &F::one()) {
                return Err(Error::Degenerate("the chord through the prescribed vertex is split 1:2".into()));
            }
            (p0.clone(), g.add_scaled(&(-tm), &v))
        }
        None => {
            let mut found = None;
            for attempt in 0..4 * PRIORITY.len() {
                let v = chooser.direction(frame, attempt);
                let (p, q, tp, tq) = labeled_chord(ball, g, &v)?;
                if !split_one_to_two(&tp, &tq) {
                    found = Some((p, q));
                    break;
                }
            }
            found.ok_or_else(|| Error::RootFinding("no chord avoids the 1:2 split".into()))?
        }
    };
    let gp = g.add_scaled(&F::from_ratio(1, 2), &(g - &p));
    let (r, s) = ball.section_midpoint_chord(&gp, &frame[0], &frame[1])?;
    Ok(TraceStep {
        level: 2,
        frame: frame.to_vec(),
        centroid: g.clone(),
        chord: (p, q),
        section_normal: None,
        midpoint_chord: Some((r, s)),
    })
}

/// An AG-quasiregular simplex inscribed in the unit sphere with `P0` as
/// vertex 0 and the origin as centroid.
pub fn construct_ag_quasiregular<F: Scalar, N: Norm<F>>(
    ball: &N,
    p0: &Point<F>,
    strategy: Strategy,
) -> Result<(Simplex<F>, ConstructionTrace<F>)> {
    let d = ball.dim();
    if d < 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: d });
    }
    ball.check_dim(p0)?;
    let norm0 = ball.gauge(p0);
    if !norm0.tol_eq(&F::one()) {
        return Err(Error::NotOnSphere(norm0.to_string()));
    }
    // Float noise: put P0 exactly on the sphere.
    let p0 = if F::is_exact() { p0.clone() } else { p0.div_scalar(&norm0) };
    let mut chooser = match strategy {
        Strategy::Deterministic => Chooser::Fixed,
        Strategy::Seeded(seed) => Chooser::Random(ChaCha8Rng::seed_from_u64(seed)),
    };

    let mut frame: Vec<Vector<F>> = (0..d).map(|k| Vector::unit(d, k)).collect();
    let mut g = Vector::zeros(d);
    let mut steps = Vec::with_capacity(d - 1);
    let mut vertices = Vec::with_capacity(d + 1);
    for l in (3..=d).rev() {
        if !ball.gauge(&g).tol_lt(&F::one()) {
            return Err(Error::Invariant(format!("level {l} centroid is not interior")));
        }
        let (p, q) = if l == d {
            let v = &p0 - &g;
            let tm = ball.ray_exit(&g, &-&v)?;
            (p0.clone(), g.add_scaled(&(-tm), &v))
        } else {
            let v = chooser.direction(&frame, 0);
            let (p, q, _, _) = labeled_chord(ball, &g, &v)?;
            (p, q)
        };
        let gp = g.add_scaled(&(F::one() / F::from_i64(l as i64)), &(&g - &p));
        let normal = match chooser {
            Chooser::Fixed => &q - &p,
            Chooser::Random(_) => {
                // Any normal inside the frame that separates G from G'.
                let mut n = chooser.direction(&frame, 0);
                while n.dot(&(&g - &gp)).is_zero() {
                    n = chooser.direction(&frame, 0);
                }
                n
            }
        };
        let next = orthogonal_complement_in(&frame, &normal);
        if next.len() != l - 1 {
            return Err(Error::Invariant(format!("section at level {l} lost dimension")));
        }
        steps.push(TraceStep {
            level: l,
            frame: frame.clone(),
            centroid: g.clone(),
            chord: (p.clone(), q),
            section_normal: Some(normal),
            midpoint_chord: None,
        });
        vertices.push(p);
        frame = next;
        g = gp;
    }
    if !ball.gauge(&g).tol_lt(&F::one()) {
        return Err(Error::Invariant("level 2 centroid is not interior".into()));
    }
    let step = phase2(ball, &g, &frame, (d == 2).then_some(&p0), &mut chooser)?;
    let (r, s) = step.midpoint_chord.clone().expect("level 2 records a midpoint chord");
    vertices.push(step.chord.0.clone());
    vertices.push(r);
    vertices.push(s);
    steps.push(step);

    let t = Simplex::new(vertices)?;
    check_output(&t, ball)?;
    Ok((t, ConstructionTrace { strategy, steps }))
}

fn check_output<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<()> {
    if !t.centroid().iter().all(Scalar::is_zero) {
        return Err(Error::Invariant(format!("centroid {} is not the origin", t.centroid())));
    }
    if let Some(a) = t.vertices().iter().find(|a| !ball.on_sphere(a)) {
        return Err(Error::Invariant(format!("vertex {a} is off the unit sphere")));
    }
    if !general_position(t.vertices())? {
        return Err(Error::Invariant("vertices are not in general position".into()));
    }
    if !is_ag_quasiregular(t, ball)? {
        return Err(Error::Invariant("centroid is not a circumcenter".into()));
    }
    Ok(())
}

/// A chord of the 2-dimensional section `c + span{u, w}` of the ball with
/// midpoint `c`.
pub fn phase2_midpoint_chord<F: Scalar, N: Norm<F>>(
    ball: &N,
    c: &Point<F>,
    u: &Vector<F>,
    w: &Vector<F>,
) -> Result<(Point<F>, Point<F>)> {
    if !ball.gauge(c).tol_lt(&F::one()) {
        return Err(Error::NotInterior);
    }
    ball.section_midpoint_chord(c, u, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::{PNorm, PolytopeBall};
    use crate::scalar::Rational;

    #[test]
    fn euclidean_triangle() {
        let e = PNorm::euclidean(2);
        let (t, trace) = construct_ag_quasiregular(&e, &Vector::new(vec![1.0, 0.0]), Strategy::Deterministic).unwrap();
        let s = 3f64.sqrt() / 2.0;
        let want = [[1.0, 0.0], [-0.5, s], [-0.5, -s]];
        for w in want {
            assert!(t.vertices().iter().any(|a| (a[0] - w[0]).abs() < 1e-12 && (a[1] - w[1]).abs() < 1e-12));
        }
        assert_eq!(trace.steps.len(), 1);
    }

    #[test]
    fn square_from_a_corner() {
        let sq = PolytopeBall::square();
        let p0 = Vector::from_i64s(&[1, 1]);
        let (t, _) = construct_ag_quasiregular(&sq, &p0, Strategy::Deterministic).unwrap();
        assert_eq!(t.vertex(0), &p0);
        assert!(is_ag_quasiregular(&t, &sq).unwrap());
    }

    #[test]
    fn seeded_is_reproducible() {
        let e = PNorm::euclidean(3);
        let p0 = Vector::new(vec![1.0, 0.0, 0.0]);
        let (a, _) = construct_ag_quasiregular(&e, &p0, Strategy::Seeded(42)).unwrap();
        let (b, _) = construct_ag_quasiregular(&e, &p0, Strategy::Seeded(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cube_d4() {
        let c = PolytopeBall::cube(4);
        let p0: Vector<Rational> = Vector::from_i64s(&[1, 0, 0, 0]);
        for strategy in [Strategy::Deterministic, Strategy::Seeded(5)] {
            let (t, trace) = construct_ag_quasiregular(&c, &p0, strategy).unwrap();
            assert!(t.centroid().is_zero());
            assert_eq!(trace.steps.iter().map(|s| s.level).collect::<Vec<_>>(), vec![4, 3, 2]);
        }
    }

    #[test]
    fn off_sphere_rejected() {
        let sq = PolytopeBall::square();
        let p0 = Vector::from_i64s(&[0, 0]);
        assert!(matches!(construct_ag_quasiregular(&sq, &p0, Strategy::Deterministic), Err(Error::NotOnSphere(_))));
    }
}
