use super::{Circumcenter, CircumcenterSet, Classification};
use crate::error::{Error, Result};
use crate::linear::{solve_linear, LinearSystem, Solution};
use crate::norm::{Norm, PNorm};
use crate::simplex::Simplex;
use crate::vector::{Point, Vector};

const MAX_ITER: usize = 100;

fn defects(t: &Simplex<f64>, ball: &PNorm, m: &Point<f64>) -> Vec<f64> {
    let g0 = ball.gauge(&(t.vertex(0) - m));
    t.vertices()[1..].iter().map(|a| ball.gauge(&(a - m)) - g0).collect()
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// Damped Newton on `gauge(A_i - M) - gauge(A_0 - M) = 0`, `i = 1..d`.
fn newton(t: &Simplex<f64>, ball: &PNorm, start: Point<f64>, scale: f64) -> Option<Point<f64>> {
    let d = t.dim();
    let tol = 1e-14 * scale;
    let mut m = start;
    let mut f = defects(t, ball, &m);
    for _ in 0..MAX_ITER {
        if max_abs(&f) <= tol {
            return Some(m);
        }
        let diffs: Vec<Vector<f64>> = t.vertices().iter().map(|a| a - &m).collect();
        if diffs.iter().any(|x| ball.gauge(x) <= tol) {
            return None;
        }
        let g0 = ball.gradient(&diffs[0]);
        let mut sys = LinearSystem::new(d);
        for (x, fi) in diffs[1..].iter().zip(&f) {
            let row: Vec<f64> = (&g0 - &ball.gradient(x)).into_coords();
            sys.push(row, -fi).ok()?;
        }
        let Solution::Unique(step) = solve_linear(&sys) else { return None };
        let current = max_abs(&f);
        let mut lambda = 1.0;
        let mut accepted = false;
        while lambda > 1e-8 {
            let trial = m.add_scaled(&lambda, &step);
            let ft = defects(t, ball, &trial);
            if max_abs(&ft) < current {
                m = trial;
                f = ft;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return (current <= 1e-11 * scale).then_some(m);
        }
    }
    (max_abs(&f) <= 1e-11 * scale).then_some(m)
}

pub(super) fn newton_circumcenters(t: &Simplex<f64>, ball: &PNorm) -> Result<CircumcenterSet<f64>> {
    let d = t.dim();
    if ball.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: ball.dim() });
    }
    let scale = t
        .vertices()
        .iter()
        .flat_map(|a| t.vertices().iter().map(move |b| (a - b).norm_sq().sqrt()))
        .fold(0.0f64, f64::max);
    let g = t.centroid().clone();
    let mut starts = vec![g.clone()];
    for k in 0..d {
        for s in [-0.25, 0.25] {
            starts.push(g.add_scaled(&(s * scale), &Vector::unit(d, k)));
        }
    }
    for c in t.facet_centroids() {
        starts.push(g.midpoint(c));
    }
    let mut found: Vec<Point<f64>> = Vec::new();
    let mut failed = 0;
    for s in starts {
        match newton(t, ball, s, scale) {
            Some(m) => {
                if !found.iter().any(|q| (q - &m).norm_sq().sqrt() <= 1e-7 * scale) {
                    found.push(m);
                }
            }
            None => failed += 1,
        }
    }
    found.sort_by(|a, b| a.lex_cmp(b));
    let witnesses = found
        .into_iter()
        .map(|m| {
            let radius = ball.gauge(&(t.vertex(0) - &m));
            Circumcenter { center: m, radius }
        })
        .collect::<Vec<_>>();
    // Euclidean circumcenters solve a nonsingular linear system.
    let classification =
        if ball.is_euclidean() && witnesses.len() == 1 { Classification::Singleton } else { Classification::Unknown };
    Ok(CircumcenterSet { witnesses, pieces: Vec::new(), classification, failed_starts: failed })
}
