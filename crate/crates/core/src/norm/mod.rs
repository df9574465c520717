//! Unit balls of Minkowski spaces.
//!
//! A [`Norm`] is a centrally symmetric convex body with the origin in its
//! interior. Two implementations exist: [`PolytopeBall`] works over exact
//! rationals, [`PNorm`] covers the smooth `l_p` balls in floating point.
//! Polarity is taken with respect to the standard dot product.

mod pnorm;
mod polytope;
mod radon;

pub use pnorm::PNorm;
pub use polytope::PolytopeBall;
pub use radon::{radon_hexagon, radon_polygon};

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::scalar::{Rational, Scalar};
use crate::vector::{Hyperplane, Point, Vector};

pub trait Norm<F: Scalar>: Clone + fmt::Debug + Send + Sync {
    fn dim(&self) -> usize;

    /// Minkowski functional `inf{t > 0 : x ∈ tB}`.
    fn gauge(&self, x: &Vector<F>) -> F;

    /// `max{<a, x> : x ∈ B}`; the dual norm of `a`.
    fn support(&self, a: &Vector<F>) -> Result<F>;

    /// Polar body `{y : <x, y> <= 1 for all x ∈ B}`.
    fn dual(&self) -> Self;

    /// Planar only: the polar body turned by a quarter.
    fn isoperimetrix(&self) -> Result<Self>;

    /// The `t > 0` with `gauge(p + t v) = 1`, for `p` strictly inside.
    fn ray_exit(&self, p: &Point<F>, v: &Vector<F>) -> Result<F>;

    /// `gauge(x) <= gauge(x + a y)` for every real `a`.
    fn birkhoff_orthogonal(&self, x: &Vector<F>, y: &Vector<F>) -> Result<bool>;

    /// Planar only: is the isoperimetrix a positive multiple of the ball?
    fn is_radon(&self) -> Result<bool>;

    /// A chord of `B ∩ (c + span{u, w})` whose midpoint is `c`.
    fn section_midpoint_chord(&self, c: &Point<F>, u: &Vector<F>, w: &Vector<F>) -> Result<(Point<F>, Point<F>)>;

    /// Planar only: a unit vector `x` with `gauge(x - u) = 1`, turning
    /// counterclockwise from the unit vector `u`.
    fn unit_circle_intersection(&self, u: &Vector<F>) -> Result<Point<F>>;

    /// Stable textual description used in fingerprints.
    fn describe(&self) -> String;

    fn on_sphere(&self, x: &Vector<F>) -> bool {
        self.gauge(x).tol_eq(&F::one())
    }

    fn check_dim(&self, x: &Vector<F>) -> Result<()> {
        x.check_dim(self.dim())
    }
}

/// Description of a unit ball as supplied by a user, before the arithmetic
/// mode is fixed.
#[derive(Clone, Debug, PartialEq)]
pub enum UnitBall {
    PolytopeV(Vec<Point<Rational>>),
    /// Halfspaces `<a, x> <= b`.
    PolytopeH(Vec<(Vector<Rational>, Rational)>),
    SmoothP {
        p: f64,
        dim: usize,
    },
}

impl UnitBall {
    pub fn dim(&self) -> usize {
        match self {
            UnitBall::PolytopeV(v) => v.first().map(|p| p.dim()).unwrap_or(0),
            UnitBall::PolytopeH(h) => h.first().map(|(a, _)| a.dim()).unwrap_or(0),
            UnitBall::SmoothP { dim, .. } => *dim,
        }
    }

    pub fn is_polytopal(&self) -> bool {
        !matches!(self, UnitBall::SmoothP { .. })
    }

    pub fn to_exact(&self, limits: &Limits) -> Result<PolytopeBall> {
        match self {
            UnitBall::PolytopeV(v) => PolytopeBall::from_vertices_with(v, limits),
            UnitBall::PolytopeH(h) => PolytopeBall::from_halfspaces_with(h, limits),
            UnitBall::SmoothP { .. } => {
                Err(Error::MixedModes("a smooth p-norm ball cannot drive exact arithmetic".into()))
            }
        }
    }

    pub fn to_float(&self) -> Result<PNorm> {
        match self {
            UnitBall::SmoothP { p, dim } => PNorm::new(*p, *dim),
            _ => Err(Error::MixedModes("polytopal balls are evaluated in exact arithmetic only".into())),
        }
    }
}

/// `B(X, r) = X + r B`.
#[derive(Clone, Debug)]
pub struct Ball<F: Scalar, N: Norm<F>> {
    pub norm: N,
    pub center: Point<F>,
    pub radius: F,
}

impl<F: Scalar, N: Norm<F>> Ball<F, N> {
    pub fn new(norm: N, center: Point<F>, radius: F) -> Result<Self> {
        norm.check_dim(&center)?;
        if !radius.is_positive() {
            return Err(Error::Degenerate(format!("ball radius must be positive, got {radius}")));
        }
        Ok(Ball { norm, center, radius })
    }

    /// Scaled distance `gauge(x - X) / r`.
    pub fn relative_gauge(&self, x: &Point<F>) -> F {
        self.norm.gauge(&(x - &self.center)) / &self.radius
    }

    pub fn contains(&self, x: &Point<F>) -> bool {
        self.relative_gauge(x).tol_le(&F::one())
    }

    pub fn on_sphere(&self, x: &Point<F>) -> bool {
        self.relative_gauge(x).tol_eq(&F::one())
    }

    /// The two boundary points of the line `p + t v`, ordered by `t`.
    pub fn chord_through(&self, p: &Point<F>, v: &Vector<F>) -> Result<(Point<F>, Point<F>)> {
        self.norm.check_dim(p)?;
        self.norm.check_dim(v)?;
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let q = (p - &self.center).div_scalar(&self.radius);
        let vr = v.div_scalar(&self.radius);
        let t_plus = self.norm.ray_exit(&q, &vr)?;
        let t_minus = self.norm.ray_exit(&q, &-&vr)?;
        Ok((p.add_scaled(&-t_minus, v), p.add_scaled(&t_plus, v)))
    }
}

/// Radius of the smallest ball around `p` touching `h`: `|<a, p> - b| / h_B(a)`.
pub fn point_hyperplane_distance<F: Scalar, N: Norm<F>>(norm: &N, p: &Point<F>, h: &Hyperplane<F>) -> Result<F> {
    norm.check_dim(p)?;
    Ok(h.eval(p).abs() / norm.support(&h.normal)?)
}

/// `gauge(y - x)`.
pub fn distance<F: Scalar, N: Norm<F>>(norm: &N, x: &Point<F>, y: &Point<F>) -> F {
    norm.gauge(&(y - x))
}

pub(crate) fn require_planar(d: usize) -> Result<()> {
    if d == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { required: 2, found: d })
    }
}
