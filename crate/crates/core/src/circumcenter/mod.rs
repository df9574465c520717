//! Circumcenter sets and the location predicates built on them.
//!
//! For a polytopal ball the set `{(M, r) : gauge(A_i - M) = r for all i}` is
//! a finite union of polyhedra, one per assignment of vertices to ball
//! facets. Smooth balls only get the isolated solutions found by Newton's
//! method, so completeness is never claimed there.

mod enumerate;
mod fixture;
mod smooth;

pub use enumerate::CircumcenterPiece;
pub use fixture::example_2_2_fixture;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::norm::{Norm, PNorm, PolytopeBall};
use crate::scalar::{Rational, Scalar};
use crate::simplex::Simplex;
use crate::vector::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Empty,
    Singleton,
    /// More than one circumcenter, possibly a positive-dimensional set.
    Multiple,
    /// Smooth mode: the listed solutions were found, others may exist.
    Unknown,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::Empty => "empty",
            Classification::Singleton => "singleton",
            Classification::Multiple => "multiple",
            Classification::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circumcenter<F: Scalar> {
    pub center: Point<F>,
    pub radius: F,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CircumcenterSet<F: Scalar> {
    /// One witness per piece (exact) or per isolated solution (smooth).
    pub witnesses: Vec<Circumcenter<F>>,
    /// Exact mode only: the maximal polyhedral pieces, in assignment order.
    pub pieces: Vec<CircumcenterPiece>,
    pub classification: Classification,
    /// Smooth mode: Newton starts that did not converge.
    pub failed_starts: usize,
}

impl<F: Scalar> CircumcenterSet<F> {
    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn singleton(&self) -> Option<&Circumcenter<F>> {
        match self.classification {
            Classification::Singleton => self.witnesses.first(),
            _ => None,
        }
    }
}

/// Norms for which circumcenters can be computed.
pub trait CircumcenterSolver<F: Scalar>: Norm<F> {
    fn circumcenter_set(&self, t: &Simplex<F>, limits: &Limits) -> Result<CircumcenterSet<F>>;

    /// Is `M` in the cone with apex `A_i` over `aff(F_i) ∩ B(M, r)`?
    fn cone_member(&self, t: &Simplex<F>, i: usize, m: &Point<F>, r: &F) -> Result<bool>;

    /// Some member of `set` strictly inside the medial polytope of `t`.
    fn center_inside_medial(&self, t: &Simplex<F>, set: &CircumcenterSet<F>) -> Result<Option<Circumcenter<F>>> {
        let medial = t.medial_polytope();
        Ok(set.witnesses.iter().find(|c| medial.contains_strictly(&c.center)).cloned())
    }
}

impl CircumcenterSolver<Rational> for PolytopeBall {
    fn circumcenter_set(&self, t: &Simplex<Rational>, limits: &Limits) -> Result<CircumcenterSet<Rational>> {
        enumerate::enumerate(t, self, limits)
    }

    fn cone_member(&self, t: &Simplex<Rational>, i: usize, m: &Point<Rational>, r: &Rational) -> Result<bool> {
        enumerate::cone_member_exact(t, self, i, m, r)
    }

    fn center_inside_medial(
        &self,
        t: &Simplex<Rational>,
        set: &CircumcenterSet<Rational>,
    ) -> Result<Option<Circumcenter<Rational>>> {
        let medial = t.medial_polytope();
        for piece in &set.pieces {
            if let Some((center, radius)) = piece.point_in_open(medial.halfspaces())? {
                return Ok(Some(Circumcenter { center, radius }));
            }
        }
        Ok(None)
    }
}

impl CircumcenterSolver<f64> for PNorm {
    fn circumcenter_set(&self, t: &Simplex<f64>, _limits: &Limits) -> Result<CircumcenterSet<f64>> {
        smooth::newton_circumcenters(t, self)
    }

    fn cone_member(&self, t: &Simplex<f64>, i: usize, m: &Point<f64>, r: &f64) -> Result<bool> {
        Ok(match ray_facet_hit(t, i, m) {
            Some(z) => self.gauge(&(&z - m)).tol_le(r),
            None => false,
        })
    }
}

pub fn circumcenters<F: Scalar, N: CircumcenterSolver<F>>(t: &Simplex<F>, ball: &N) -> Result<CircumcenterSet<F>> {
    ball.circumcenter_set(t, &Limits::default())
}

/// `gauge(A_i - M) = r` for every vertex.
pub fn is_circumcenter<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N, m: &Point<F>, r: &F) -> bool {
    r.is_positive() && t.vertices().iter().all(|a| ball.gauge(&(a - m)).tol_eq(r))
}

/// Point where the ray from `A_i` through `M` meets the hyperplane of facet
/// `i`, if it does so beyond `A_i`.
pub fn ray_facet_hit<F: Scalar>(t: &Simplex<F>, i: usize, m: &Point<F>) -> Option<Point<F>> {
    let a = t.vertex(i);
    let f = t.facet(i);
    let dir = m - a;
    let rate = f.normal.dot(&dir);
    if !rate.is_positive() {
        return None;
    }
    let mu = (f.offset.clone() - f.normal.dot(a)) / rate;
    Some(a.add_scaled(&mu, &dir))
}

/// Is `M` strictly on the side of medial hyperplane `i` that contains `A_i`?
pub fn thm21_halfspace_side<F: Scalar>(t: &Simplex<F>, i: usize, m: &Point<F>) -> Result<bool> {
    let e = t.medial_hyperplane(i)?;
    Ok(e.eval(m).tol_lt(&F::zero()))
}

/// Cone membership at vertex `i` for a verified circumcenter `(M, r)`.
pub fn thm21_cone_member<F: Scalar, N: CircumcenterSolver<F>>(
    t: &Simplex<F>,
    i: usize,
    m: &Point<F>,
    ball: &N,
    r: &F,
) -> Result<bool> {
    t.check_index(i)?;
    if !is_circumcenter(t, ball, m, r) {
        return Err(Error::NotCircumcenter);
    }
    ball.cone_member(t, i, m, r)
}

/// Planar incidence check at vertex `i`: when `M` lies in the cone over the
/// part of `aff(F_i) ∩ B(M, r)` outside the facet, `M` must lie on the medial
/// line. Returns `None` when that premise fails.
pub fn thm22_incidence<F: Scalar, N: Norm<F>>(
    t: &Simplex<F>,
    i: usize,
    m: &Point<F>,
    ball: &N,
    r: &F,
) -> Result<Option<bool>> {
    if t.dim() != 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: t.dim() });
    }
    t.check_index(i)?;
    if !is_circumcenter(t, ball, m, r) {
        return Err(Error::NotCircumcenter);
    }
    let Some(z) = ray_facet_hit(t, i, m) else { return Ok(None) };
    let in_ball = ball.gauge(&(&z - m)).tol_le(r);
    if !in_ball || t.contains(&z) {
        return Ok(None);
    }
    Ok(Some(t.medial_hyperplane(i)?.contains(m)))
}

pub fn in_medial_polytope<F: Scalar>(t: &Simplex<F>, m: &Point<F>) -> bool {
    t.medial_polytope().contains(m)
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniquenessVerdict<F: Scalar> {
    /// Some circumcenter lies strictly inside the medial triangle.
    pub interior_center: Option<Circumcenter<F>>,
    pub classification: Classification,
    /// No interior circumcenter, or the set is a singleton. Smooth mode
    /// accepts a single found solution.
    pub holds: bool,
}

/// Planar uniqueness check: a circumcenter strictly inside the medial
/// triangle must be the only one.
pub fn unique_circumcenter_2d<F: Scalar, N: CircumcenterSolver<F>>(
    t: &Simplex<F>,
    ball: &N,
) -> Result<UniquenessVerdict<F>> {
    if t.dim() != 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: t.dim() });
    }
    let set = circumcenters(t, ball)?;
    let interior = ball.center_inside_medial(t, &set)?;
    let holds = interior.is_none()
        || match set.classification {
            Classification::Singleton => true,
            Classification::Unknown => set.witnesses.len() == 1,
            _ => false,
        };
    Ok(UniquenessVerdict { interior_center: interior, classification: set.classification, holds })
}

/// Does the centroid serve as a circumcenter?
pub fn is_ag_quasiregular<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    if ball.dim() != t.dim() {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: ball.dim() });
    }
    let g = t.centroid();
    let r = ball.gauge(&(t.vertex(0) - g));
    Ok(is_circumcenter(t, ball, g, &r))
}
