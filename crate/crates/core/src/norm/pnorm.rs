use std::f64::consts::PI;

use super::{require_planar, Norm};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, EPS_REL};
use crate::vector::{Point, Vector};

/// The `l_p` unit ball, `1 < p < ∞`, evaluated in `f64`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PNorm {
    p: f64,
    dim: usize,
}

const ANGLE_STEPS: usize = 720;

impl PNorm {
    pub fn new(p: f64, dim: usize) -> Result<Self> {
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::InvalidBall(format!("p must satisfy 1 < p < inf, got {p}")));
        }
        if dim == 0 {
            return Err(Error::InvalidBall("dimension zero".into()));
        }
        Ok(PNorm { p, dim })
    }

    pub fn euclidean(dim: usize) -> Self {
        PNorm { p: 2.0, dim }
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Hölder conjugate exponent.
    pub fn conjugate(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    pub fn is_euclidean(&self) -> bool {
        self.p == 2.0
    }

    /// Gradient of the gauge at `x != 0`.
    pub fn gradient(&self, x: &Vector<f64>) -> Vector<f64> {
        let g = self.gauge(x);
        Vector::new(x.iter().map(|c| c.signum() * (c.abs() / g).powf(self.p - 1.0)).collect())
    }

    fn boundary_point(&self, c: &Point<f64>, dir: &Vector<f64>) -> Result<Point<f64>> {
        let t = self.ray_exit(c, dir)?;
        Ok(c.add_scaled(&t, dir))
    }
}

fn lp(x: &Vector<f64>, p: f64) -> f64 {
    let m = x.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    if m == 0.0 {
        return 0.0;
    }
    if p == 2.0 {
        return m * x.iter().map(|c| (c / m) * (c / m)).sum::<f64>().sqrt();
    }
    m * x.iter().map(|c| (c.abs() / m).powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Bisection for a sign change of `f` on `[lo, hi]` with `f(lo) < 0 < f(hi)`.
fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

impl Norm<f64> for PNorm {
    fn dim(&self) -> usize {
        self.dim
    }

    fn gauge(&self, x: &Vector<f64>) -> f64 {
        lp(x, self.p)
    }

    fn support(&self, a: &Vector<f64>) -> Result<f64> {
        self.check_dim(a)?;
        if a.iter().all(|c| *c == 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(lp(a, self.conjugate()))
    }

    fn dual(&self) -> Self {
        PNorm { p: self.conjugate(), dim: self.dim }
    }

    fn isoperimetrix(&self) -> Result<Self> {
        require_planar(self.dim)?;
        // l_q balls are invariant under the quarter turn.
        Ok(self.dual())
    }

    fn ray_exit(&self, p: &Point<f64>, v: &Vector<f64>) -> Result<f64> {
        self.check_dim(p)?;
        self.check_dim(v)?;
        if v.iter().all(|c| *c == 0.0) {
            return Err(Error::ZeroVector);
        }
        let g0 = self.gauge(p);
        if g0 >= 1.0 {
            return Err(Error::NotInterior);
        }
        if self.is_euclidean() {
            let vv = v.norm_sq();
            let pv = p.dot(v);
            let disc = pv * pv + vv * (1.0 - p.norm_sq());
            let root = disc.max(0.0).sqrt();
            // Stable form of (-pv + root) / vv.
            return Ok(if pv <= 0.0 { (root - pv) / vv } else { (1.0 - p.norm_sq()) / (root + pv) });
        }
        let f = |t: f64| self.gauge(&p.add_scaled(&t, v)) - 1.0;
        let mut hi = (1.0 - g0) / self.gauge(v);
        let mut guard = 0;
        while f(hi) < 0.0 {
            hi *= 2.0;
            guard += 1;
            if guard > 200 {
                return Err(Error::RootFinding("ray exit bracket".into()));
            }
        }
        Ok(bisect(0.0, hi, f))
    }

    fn birkhoff_orthogonal(&self, x: &Vector<f64>, y: &Vector<f64>) -> Result<bool> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        if x.iter().all(|c| *c == 0.0) || y.iter().all(|c| *c == 0.0) {
            return Err(Error::ZeroVector);
        }
        let g = self.gradient(x);
        let pairing = g.dot(y);
        let scale: f64 = g.iter().zip(y.iter()).map(|(a, b)| (a * b).abs()).sum();
        Ok(pairing.abs() <= EPS_REL * scale.max(1e-300))
    }

    fn is_radon(&self) -> Result<bool> {
        require_planar(self.dim)?;
        Ok((self.p - 2.0).abs() <= EPS_REL)
    }

    fn section_midpoint_chord(
        &self,
        c: &Point<f64>,
        u: &Vector<f64>,
        w: &Vector<f64>,
    ) -> Result<(Point<f64>, Point<f64>)> {
        self.check_dim(c)?;
        if self.gauge(c) >= 1.0 {
            return Err(Error::NotInterior);
        }
        let dir = |theta: f64| u.scale(&theta.cos()).add_scaled(&theta.sin(), w);
        let g = |theta: f64| -> f64 {
            match self.boundary_point(c, &dir(theta)) {
                Ok(r) => self.gauge(&(&(c + c) - &r)) - 1.0,
                Err(_) => f64::NAN,
            }
        };
        let step = 2.0 * PI / ANGLE_STEPS as f64;
        let mut prev = g(0.0);
        if prev.abs() <= EPS_REL {
            let r = self.boundary_point(c, &dir(0.0))?;
            return Ok((r.clone(), &(c + c) - &r));
        }
        for k in 1..=ANGLE_STEPS {
            let theta = k as f64 * step;
            let cur = g(theta);
            if cur.is_nan() || prev.is_nan() {
                return Err(Error::RootFinding("degenerate section".into()));
            }
            if cur == 0.0 || (prev < 0.0) != (cur < 0.0) {
                let (lo, hi) = (theta - step, theta);
                let root = if prev < 0.0 { bisect(lo, hi, g) } else { bisect(lo, hi, |t| -g(t)) };
                let r = self.boundary_point(c, &dir(root))?;
                return Ok((r.clone(), &(c + c) - &r));
            }
            prev = cur;
        }
        // A symmetric section centered at c: every chord through c works.
        if prev.abs() <= 1e-6 {
            let r = self.boundary_point(c, &dir(0.0))?;
            return Ok((r.clone(), &(c + c) - &r));
        }
        Err(Error::RootFinding("no sign change of the midpoint defect".into()))
    }

    fn unit_circle_intersection(&self, u: &Vector<f64>) -> Result<Point<f64>> {
        require_planar(self.dim)?;
        self.check_dim(u)?;
        if !self.on_sphere(u) {
            return Err(Error::NotOnSphere(self.gauge(u).to_string()));
        }
        let o = Vector::zeros(2);
        let perp = u.rotate_quarter();
        // Along the arc from u (defect -1) to -u (defect +1).
        let h = |theta: f64| -> f64 {
            let d = u.scale(&theta.cos()).add_scaled(&theta.sin(), &perp);
            match self.boundary_point(&o, &d) {
                Ok(x) => self.gauge(&(&x - u)) - 1.0,
                Err(_) => f64::NAN,
            }
        };
        let theta = bisect(0.0, PI, h);
        let d = u.scale(&theta.cos()).add_scaled(&theta.sin(), &perp);
        self.boundary_point(&o, &d)
    }

    fn describe(&self) -> String {
        format!("pnorm[p={},d={}]", self.p, self.dim)
    }
}
