//! Elementary geometry of simplices in finite-dimensional normed spaces.
//!
//! Polytopal unit balls are handled in exact rational arithmetic, smooth
//! `l_p` balls in `f64`. Supported computations include circumcenter sets,
//! Euler-line points and Feuerbach spheres, incenters and exspheres,
//! construction of simplices whose centroid is a circumcenter, and checks of
//! the classical equivalences between these notions.

pub mod centers;
pub mod circumcenter;
pub mod construct;
pub mod equivalence;
pub mod error;
pub mod feasibility;
pub mod limits;
pub mod linear;
pub mod norm;
pub mod sample;
pub mod scalar;
pub mod simplex;
pub mod vector;

pub use centers::{euler_points, exspheres, feuerbach_sphere, incenter, EulerData, InExData};
pub use circumcenter::{circumcenters, Circumcenter, CircumcenterSet, CircumcenterSolver, Classification};
pub use construct::{construct_ag_quasiregular, ConstructionTrace, Strategy};
pub use equivalence::{EquivalenceReport, PlantedKind, TheoremId};
pub use error::{Error, Result};
pub use limits::Limits;
pub use norm::{Ball, Norm, PNorm, PolytopeBall, UnitBall};
pub use scalar::{Mode, Rational, Scalar};
pub use simplex::{MedialPolytope, QuasiMedial, Simplex};
pub use vector::{Hyperplane, Point, Vector};
