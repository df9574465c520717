//! Simplices and their affine anatomy.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linear::{affine_dimension, general_position, hyperplane_through, solve_linear, LinearSystem, Solution};
use crate::norm::Norm;
use crate::scalar::Scalar;
use crate::vector::{Hyperplane, Point, Vector};

/// `d + 1` affinely independent points of `R^d`.
///
/// Facet `i` is the one opposite vertex `i`. Its hyperplane `<a_i, x> = b_i`
/// is oriented outward: the simplex lies in `<a_i, x> <= b_i` and
/// `<a_i, A_i> < b_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Simplex<F: Scalar> {
    vertices: Vec<Point<F>>,
    facets: Vec<Hyperplane<F>>,
    facet_centroids: Vec<Point<F>>,
    centroid: Point<F>,
}

/// The hyperplane through the ridge opposite edge `{A_i, A_j}` and the
/// midpoint of that edge.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiMedial<F: Scalar> {
    pub edge: (usize, usize),
    pub plane: Hyperplane<F>,
}

impl<F: Scalar> Simplex<F> {
    pub fn new(vertices: Vec<Point<F>>) -> Result<Self> {
        if !general_position(&vertices)? {
            return Err(Error::Degenerate("vertices are not in general position".into()));
        }
        let d = vertices[0].dim();
        if d == 0 {
            return Err(Error::Degenerate("zero-dimensional simplex".into()));
        }
        let mut facets = Vec::with_capacity(d + 1);
        let mut facet_centroids = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let others: Vec<Point<F>> =
                vertices.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
            let h = hyperplane_through(&others)?;
            let h = if h.eval(&vertices[i]) > F::zero() { h.flipped() } else { h };
            facets.push(h);
            facet_centroids.push(Vector::centroid(others.iter()));
        }
        let centroid = Vector::centroid(vertices.iter());
        Ok(Simplex { vertices, facets, facet_centroids, centroid })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Point<F>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Point<F> {
        &self.vertices[i]
    }

    pub fn facets(&self) -> &[Hyperplane<F>] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> &Hyperplane<F> {
        &self.facets[i]
    }

    pub fn centroid(&self) -> &Point<F> {
        &self.centroid
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.vertices.len() })
        }
    }

    /// Centroid `A'_i` of the facet opposite `A_i`.
    pub fn facet_centroid(&self, i: usize) -> Result<&Point<F>> {
        self.check_index(i)?;
        Ok(&self.facet_centroids[i])
    }

    pub fn facet_centroids(&self) -> &[Point<F>] {
        &self.facet_centroids
    }

    /// `A'_i - A_i` for every `i`.
    pub fn median_vectors(&self) -> Vec<Vector<F>> {
        self.vertices.iter().zip(&self.facet_centroids).map(|(a, c)| c - a).collect()
    }

    pub fn median_lengths<N: Norm<F>>(&self, norm: &N) -> Result<Vec<F>> {
        self.check_norm(norm)?;
        Ok(self.median_vectors().iter().map(|m| norm.gauge(m)).collect())
    }

    /// `gauge(A_j - A_i)` for `i < j`, in lexicographic pair order.
    pub fn edge_lengths<N: Norm<F>>(&self, norm: &N) -> Result<Vec<F>> {
        self.check_norm(norm)?;
        Ok((0..self.vertices.len())
            .tuple_combinations()
            .map(|(i, j)| norm.gauge(&(&self.vertices[j] - &self.vertices[i])))
            .collect())
    }

    /// Hyperplane through the midpoints of the edges at `A_i`, parallel to
    /// facet `i`.
    pub fn medial_hyperplane(&self, i: usize) -> Result<Hyperplane<F>> {
        self.check_index(i)?;
        let f = &self.facets[i];
        let offset = (f.normal.dot(&self.vertices[i]) + &f.offset).half();
        Hyperplane::new(f.normal.clone(), offset)
    }

    pub fn medial_polytope(&self) -> MedialPolytope<F> {
        let mut halfspaces = self.facets.clone();
        for i in 0..=self.dim() {
            let m = self.medial_hyperplane(i).expect("index in range");
            halfspaces.push(m.flipped());
        }
        MedialPolytope { dim: self.dim(), halfspaces }
    }

    pub fn quasi_medial_hyperplanes(&self) -> Result<Vec<QuasiMedial<F>>> {
        let d = self.dim();
        if d < 2 {
            return Err(Error::UnsupportedDimension { required: 2, found: d });
        }
        (0..=d)
            .tuple_combinations()
            .map(|(i, j)| {
                let mut pts: Vec<Point<F>> =
                    (0..=d).filter(|&k| k != i && k != j).map(|k| self.vertices[k].clone()).collect();
                pts.push(self.vertices[i].midpoint(&self.vertices[j]));
                Ok(QuasiMedial { edge: (i, j), plane: hyperplane_through(&pts)? })
            })
            .collect()
    }

    /// Minkowskian distance from `A_i` to the hyperplane of facet `i`.
    pub fn height<N: Norm<F>>(&self, i: usize, norm: &N) -> Result<F> {
        self.check_index(i)?;
        self.check_norm(norm)?;
        let f = &self.facets[i];
        Ok((f.offset.clone() - f.normal.dot(&self.vertices[i])) / norm.support(&f.normal)?)
    }

    pub fn heights<N: Norm<F>>(&self, norm: &N) -> Result<Vec<F>> {
        (0..=self.dim()).map(|i| self.height(i, norm)).collect()
    }

    /// `(b_i - <a_i, p>) / h_B(a_i)`: positive inside the simplex.
    pub fn inward_distance<N: Norm<F>>(&self, i: usize, p: &Point<F>, norm: &N) -> Result<F> {
        self.check_index(i)?;
        let f = &self.facets[i];
        Ok(-f.eval(p) / norm.support(&f.normal)?)
    }

    /// Polar of `T - G`, expressed with the origin at `G`. Vertex `i` is dual
    /// to facet `i`.
    pub fn dual_simplex(&self) -> Result<Simplex<F>> {
        let g = &self.centroid;
        let verts: Vec<Point<F>> =
            self.facets.iter().map(|f| f.normal.div_scalar(&(f.offset.clone() - f.normal.dot(g)))).collect();
        Simplex::new(verts)
    }

    /// The triangle whose sides are translates of the medians, with its
    /// centroid at the centroid of `self`.
    pub fn median_triangle(&self) -> Result<Simplex<F>> {
        if self.dim() != 2 {
            return Err(Error::UnsupportedDimension { required: 2, found: self.dim() });
        }
        let m = self.median_vectors();
        let shift = (&m[0].scale(&F::from_i64(2)) + &m[1]).div_scalar(&F::from_i64(3));
        let x = &self.centroid - &shift;
        let y = &x + &m[0];
        let z = &y + &m[1];
        Simplex::new(vec![x, y, z])
    }

    /// Width of the simplex between the two supporting hyperplanes with
    /// normal `a`, measured in the norm.
    pub fn width_along<N: Norm<F>>(&self, a: &Vector<F>, norm: &N) -> Result<F> {
        self.check_norm(norm)?;
        let values: Vec<F> = self.vertices.iter().map(|v| a.dot(v)).collect();
        let hi = values.iter().cloned().reduce(F::max_of).expect("nonempty");
        let lo = values.into_iter().reduce(F::min_of).expect("nonempty");
        Ok((hi - lo) / norm.support(a)?)
    }

    /// Minimal width; for a simplex it is attained at a facet normal.
    pub fn min_width<N: Norm<F>>(&self, norm: &N) -> Result<F> {
        let widths = self.facets.iter().map(|f| self.width_along(&f.normal, norm)).collect::<Result<Vec<F>>>()?;
        Ok(widths.into_iter().reduce(F::min_of).expect("nonempty"))
    }

    pub fn contains(&self, p: &Point<F>) -> bool {
        self.facets.iter().all(|f| f.eval(p).tol_le(&F::zero()))
    }

    pub fn contains_strictly(&self, p: &Point<F>) -> bool {
        self.facets.iter().all(|f| f.eval(p).tol_lt(&F::zero()))
    }

    pub fn translate(&self, t: &Vector<F>) -> Result<Simplex<F>> {
        Simplex::new(self.vertices.iter().map(|v| v + t).collect())
    }

    /// Image under `x -> c + λ (x - c)`.
    pub fn scale_about(&self, c: &Point<F>, lambda: &F) -> Result<Simplex<F>> {
        Simplex::new(self.vertices.iter().map(|v| c.add_scaled(lambda, &(v - c))).collect())
    }

    /// Same simplex with vertex `i` replaced.
    pub fn with_vertex(&self, i: usize, p: Point<F>) -> Result<Simplex<F>> {
        self.check_index(i)?;
        let mut v = self.vertices.clone();
        v[i] = p;
        Simplex::new(v)
    }

    pub fn to_f64(&self) -> Result<Simplex<f64>> {
        Simplex::new(self.vertices.iter().map(Vector::to_f64).collect())
    }

    fn check_norm<N: Norm<F>>(&self, norm: &N) -> Result<()> {
        if norm.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: norm.dim() })
        }
    }
}

/// The simplex truncated at the edge midpoints, as halfspaces
/// `<a, x> <= b`.
#[derive(Clone, Debug, PartialEq)]
pub struct MedialPolytope<F: Scalar> {
    dim: usize,
    halfspaces: Vec<Hyperplane<F>>,
}

impl<F: Scalar> MedialPolytope<F> {
    pub fn halfspaces(&self) -> &[Hyperplane<F>] {
        &self.halfspaces
    }

    pub fn contains(&self, p: &Point<F>) -> bool {
        self.halfspaces.iter().all(|h| h.eval(p).tol_le(&F::zero()))
    }

    pub fn contains_strictly(&self, p: &Point<F>) -> bool {
        self.halfspaces.iter().all(|h| h.eval(p).tol_lt(&F::zero()))
    }

    /// Vertex enumeration over `d`-subsets of the bounding hyperplanes.
    pub fn vertices(&self) -> Vec<Point<F>> {
        let mut out: Vec<Point<F>> = Vec::new();
        for combo in self.halfspaces.iter().combinations(self.dim) {
            let mut sys = LinearSystem::new(self.dim);
            for h in &combo {
                sys.push(h.normal.coords().to_vec(), h.offset.clone()).expect("consistent width");
            }
            if let Solution::Unique(x) = solve_linear(&sys) {
                if self.contains(&x) && !out.iter().any(|y| y.tol_eq(&x)) {
                    out.push(x);
                }
            }
        }
        out.sort_by(|a, b| a.lex_cmp(b));
        out
    }

    /// Bounding hyperplanes that carry a facet.
    pub fn facets(&self) -> Vec<Hyperplane<F>> {
        let verts = self.vertices();
        let mut out: Vec<Hyperplane<F>> = Vec::new();
        for h in &self.halfspaces {
            let on: Vec<Point<F>> = verts.iter().filter(|v| h.contains(v)).cloned().collect();
            if on.len() >= self.dim && affine_dimension(&on) + 1 == self.dim && !out.contains(h) {
                out.push(h.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::{PNorm, PolytopeBall};
    use crate::scalar::{rat, Rational};

    fn v(c: &[i64]) -> Vector<Rational> {
        Vector::from_i64s(c)
    }

    fn q(c: &[(i64, i64)]) -> Vector<Rational> {
        Vector::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn right() -> Simplex<Rational> {
        Simplex::new(vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2])]).unwrap()
    }

    #[test]
    fn centroids() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(t.centroid(), &q(&[(1, 3), (1, 3)]));
        assert_eq!(t.facet_centroid(0).unwrap(), &q(&[(1, 2), (1, 2)]));
        assert!(t.facet_centroid(3).is_err());
        let u = Simplex::new(vec![v(&[0, 0, 0]), v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(u.centroid(), &q(&[(1, 4), (1, 4), (1, 4)]));
        assert_eq!(u.facet_centroid(0).unwrap(), &q(&[(1, 3), (1, 3), (1, 3)]));
    }

    #[test]
    fn facets_point_outward() {
        let t = right();
        for i in 0..3 {
            let f = t.facet(i);
            assert!(f.eval(t.vertex(i)) < Rational::zero());
            for j in (0..3).filter(|&j| j != i) {
                assert!(Scalar::is_zero(&f.eval(t.vertex(j))));
            }
        }
    }

    #[test]
    fn medial_objects() {
        let t = right();
        let m = t.medial_hyperplane(0).unwrap();
        assert_eq!(m, Hyperplane::new(v(&[1, 1]), rat(1, 1)).unwrap());
        assert_eq!(t.medial_polytope().vertices(), vec![v(&[0, 1]), v(&[1, 0]), v(&[1, 1])]);
        let u = Simplex::new(vec![v(&[0, 0, 0]), v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let mp = u.medial_polytope();
        assert_eq!(mp.vertices().len(), 6);
        assert_eq!(mp.facets().len(), 8);
        assert!(mp.contains_strictly(u.centroid()));
    }

    #[test]
    fn heights_in_two_norms() {
        let t = right();
        assert_eq!(t.height(0, &PolytopeBall::square()).unwrap(), rat(1, 1));
        let e = t.to_f64().unwrap();
        assert!((e.height(0, &PNorm::euclidean(2)).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn dual_is_an_involution() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[5, 1]), v(&[1, 3])]).unwrap();
        let dd = t.dual_simplex().unwrap().dual_simplex().unwrap();
        assert_eq!(dd, t.translate(&-t.centroid()).unwrap());
        assert!(t.dual_simplex().unwrap().centroid().is_zero());
    }

    #[test]
    fn median_triangle_closes() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[5, 1]), v(&[1, 3])]).unwrap();
        let m = t.median_vectors();
        assert!((&(&m[0] + &m[1]) + &m[2]).is_zero());
        let tm = t.median_triangle().unwrap();
        assert_eq!(tm.centroid(), t.centroid());
    }

    #[test]
    fn median_triangle_twice_scales_sides_by_three_quarters() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[5, 1]), v(&[1, 3])]).unwrap();
        let tmm = t.median_triangle().unwrap().median_triangle().unwrap();
        let edges = |s: &Simplex<Rational>| -> Vec<Vector<Rational>> {
            (0..3).map(|i| s.vertex((i + 1) % 3) - s.vertex(i)).collect()
        };
        let scaled: Vec<_> = edges(&t).iter().map(|e| e.scale(&rat(3, 4))).collect();
        for e in edges(&tmm) {
            assert!(scaled.iter().any(|s| *s == e || *s == -&e), "{e}");
        }
    }

    #[test]
    fn max_norm_medians() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(t.median_lengths(&PolytopeBall::square()).unwrap(), vec![rat(1, 2), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Simplex::new(vec![v(&[0, 0]), v(&[1, 1]), v(&[2, 2])]).is_err());
        assert!(Simplex::new(vec![v(&[0, 0]), v(&[1, 1])]).is_err());
    }
}
