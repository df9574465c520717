use crate::norm::{Norm, PolytopeBall};
use crate::scalar::{rat, Rational};
use crate::simplex::Simplex;
use crate::vector::Vector;

/// A cube-norm tetrahedron inscribed in `[-1, 1]^3` whose centroid is the
/// origin and which has a segment of circumcenters.
///
/// `A = (1, 1, 0)` is the midpoint of the edge `{x = 1, y = 1}`. The plane
/// through `A` and the midpoints of the edges parallel to it is `{z = 0}`.
/// With `{y = 1}` as the top face, the cutting plane at two thirds of the way
/// down is `{y = -1/3}`. `B` lies on both planes in the facet `{x = 1}`, and
/// `C`, `D` lie in the opposite facet `{x = -1}` on `{y = -1/3}`, symmetric
/// about `{z = 0}` at height `1/2`. Vertex order is `A, B, C, D`.
pub fn example_2_2_fixture() -> (Simplex<Rational>, PolytopeBall) {
    let p = |x: Rational, y: Rational, z: Rational| Vector::new(vec![x, y, z]);
    let one = rat(1, 1);
    let third = rat(-1, 3);
    let a = p(one.clone(), one.clone(), rat(0, 1));
    let b = p(one.clone(), third.clone(), rat(0, 1));
    let c = p(-one.clone(), third.clone(), rat(1, 2));
    let d = p(-one, third, rat(-1, 2));
    let t = Simplex::new(vec![a, b, c, d]).expect("fixture vertices are independent");
    let cube = PolytopeBall::cube(3);
    debug_assert!(t.vertices().iter().all(|v| cube.on_sphere(v)));
    (t, cube)
}
