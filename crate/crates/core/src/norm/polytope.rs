use std::cmp::Ordering;
use std::collections::HashSet;

use itertools::Itertools;

use super::{require_planar, Norm};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linear::{affine_dimension, hyperplane_through, rank, solve_linear, LinearSystem, Solution};
use crate::scalar::{Rational, Scalar};
use crate::vector::{Point, Vector};

/// A centrally symmetric polytope `{x : <n_j, x> <= 1 for all j}` holding both
/// its vertex and facet descriptions.
///
/// Vertices and facet normals are kept in lexicographic order, so two balls
/// describing the same body compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeBall {
    dim: usize,
    vertices: Vec<Point<Rational>>,
    normals: Vec<Vector<Rational>>,
    facet_vertices: Vec<Vec<usize>>,
    adjacency: Vec<Vec<usize>>,
}

impl PolytopeBall {
    pub fn from_vertices(points: &[Point<Rational>]) -> Result<Self> {
        Self::from_vertices_with(points, &Limits::default())
    }

    /// Convex hull of a symmetric point set. Points that are not vertices are
    /// discarded.
    pub fn from_vertices_with(points: &[Point<Rational>], limits: &Limits) -> Result<Self> {
        let d = points.first().map(|p| p.dim()).ok_or_else(|| Error::InvalidBall("no vertices".into()))?;
        limits.check_dim(d)?;
        if d == 0 {
            return Err(Error::InvalidBall("dimension zero".into()));
        }
        for p in points {
            p.check_dim(d)?;
        }
        let pts: Vec<Point<Rational>> = points.iter().cloned().unique().collect();
        let set: HashSet<&Point<Rational>> = pts.iter().collect();
        if pts.iter().any(|p| !set.contains(&-p)) {
            return Err(Error::InvalidBall("vertex set is not closed under negation".into()));
        }
        if rank(&pts) < d {
            return Err(Error::InvalidBall("vertices do not span the space".into()));
        }
        let mut normals: Vec<Vector<Rational>> = Vec::new();
        for combo in pts.iter().combinations(d) {
            let owned: Vec<Point<Rational>> = combo.into_iter().cloned().collect();
            let Ok(h) = hyperplane_through(&owned) else { continue };
            if Scalar::is_zero(&h.offset) {
                continue;
            }
            let n = h.normal.div_scalar(&h.offset);
            if normals.contains(&n) {
                continue;
            }
            if pts.iter().all(|p| n.dot(p) <= Rational::one()) {
                limits.check_facets(normals.len() + 1)?;
                normals.push(n);
            }
        }
        let vertices: Vec<Point<Rational>> = pts
            .into_iter()
            .filter(|p| {
                let on: Vec<Vector<Rational>> =
                    normals.iter().filter(|n| n.dot(p) == Rational::one()).cloned().collect();
                rank(&on) == d
            })
            .collect();
        Ok(Self::from_parts(d, vertices, normals))
    }

    pub fn from_halfspaces(halfspaces: &[(Vector<Rational>, Rational)]) -> Result<Self> {
        Self::from_halfspaces_with(halfspaces, &Limits::default())
    }

    /// Intersection of halfspaces `<a, x> <= b` with `b > 0`.
    pub fn from_halfspaces_with(halfspaces: &[(Vector<Rational>, Rational)], limits: &Limits) -> Result<Self> {
        let d = halfspaces.first().map(|(a, _)| a.dim()).ok_or_else(|| Error::InvalidBall("no halfspaces".into()))?;
        limits.check_dim(d)?;
        let mut normals: Vec<Vector<Rational>> = Vec::new();
        for (a, b) in halfspaces {
            a.check_dim(d)?;
            if a.is_zero() {
                return Err(Error::ZeroVector);
            }
            if !Scalar::is_positive(b) {
                return Err(Error::InvalidBall("origin is not strictly inside every halfspace".into()));
            }
            let n = a.div_scalar(b);
            if !normals.contains(&n) {
                normals.push(n);
            }
        }
        let set: HashSet<&Vector<Rational>> = normals.iter().collect();
        if normals.iter().any(|n| !set.contains(&-n)) {
            return Err(Error::InvalidBall("halfspace set is not symmetric".into()));
        }
        if rank(&normals) < d {
            return Err(Error::InvalidBall("halfspaces do not bound a body".into()));
        }
        let mut vertices: Vec<Point<Rational>> = Vec::new();
        for combo in normals.iter().combinations(d) {
            let mut sys = LinearSystem::new(d);
            for n in &combo {
                sys.push(n.coords().to_vec(), Rational::one())?;
            }
            if let Solution::Unique(x) = solve_linear(&sys) {
                if !vertices.contains(&x) && normals.iter().all(|n| n.dot(&x) <= Rational::one()) {
                    vertices.push(x);
                }
            }
        }
        Self::from_vertices_with(&vertices, limits)
    }

    /// `[-1, 1]^d`.
    pub fn cube(d: usize) -> Self {
        let vertices: Vec<Point<Rational>> =
            (0..d).map(|_| [-1i64, 1]).multi_cartesian_product().map(|c| Vector::from_i64s(&c)).collect();
        Self::from_vertices(&vertices).expect("cube is a valid ball")
    }

    /// `conv{±e_i}`.
    pub fn cross_polytope(d: usize) -> Self {
        Self::cube(d).dual()
    }

    pub fn square() -> Self {
        Self::cube(2)
    }

    pub fn diamond() -> Self {
        Self::cross_polytope(2)
    }

    fn from_parts(dim: usize, mut vertices: Vec<Point<Rational>>, mut normals: Vec<Vector<Rational>>) -> Self {
        vertices.sort_by(|a, b| a.lex_cmp(b));
        normals.sort_by(|a, b| a.lex_cmp(b));
        let facet_vertices: Vec<Vec<usize>> = normals
            .iter()
            .map(|n| (0..vertices.len()).filter(|&i| n.dot(&vertices[i]) == Rational::one()).collect())
            .collect();
        let m = normals.len();
        let mut adjacency = vec![Vec::new(); m];
        for j in 0..m {
            for k in (j + 1)..m {
                let common: Vec<Point<Rational>> = facet_vertices[j]
                    .iter()
                    .filter(|i| facet_vertices[k].contains(i))
                    .map(|&i| vertices[i].clone())
                    .collect();
                let ridge =
                    if dim == 1 { false } else { common.len() >= dim - 1 && affine_dimension(&common) == dim - 2 };
                if ridge {
                    adjacency[j].push(k);
                    adjacency[k].push(j);
                }
            }
        }
        PolytopeBall { dim, vertices, normals, facet_vertices, adjacency }
    }

    pub fn vertices(&self) -> &[Point<Rational>] {
        &self.vertices
    }

    /// Facet `j` lies in `{<n_j, x> = 1}`.
    pub fn normals(&self) -> &[Vector<Rational>] {
        &self.normals
    }

    pub fn facet_count(&self) -> usize {
        self.normals.len()
    }

    pub fn facet_vertices(&self, j: usize) -> &[usize] {
        &self.facet_vertices[j]
    }

    /// Facets sharing a ridge with facet `j`.
    pub fn adjacent_facets(&self, j: usize) -> &[usize] {
        &self.adjacency[j]
    }

    /// Facets attaining the gauge at `x` (`x != 0`).
    pub fn active_facets(&self, x: &Vector<Rational>) -> Vec<usize> {
        let g = self.gauge(x);
        (0..self.normals.len()).filter(|&j| self.normals[j].dot(x) == g).collect()
    }

    /// Image of the body under the linear map with the given rows.
    pub fn linear_image(&self, rows: &[Vec<Rational>]) -> Result<Self> {
        if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, found: rows.len() });
        }
        let m: Vec<Vector<Rational>> = rows.iter().map(|r| Vector::new(r.clone())).collect();
        if rank(&m) < self.dim {
            return Err(Error::InvalidBall("singular linear map".into()));
        }
        let image: Vec<Point<Rational>> =
            self.vertices.iter().map(|v| Vector::new(m.iter().map(|r| r.dot(v)).collect())).collect();
        Self::from_vertices(&image)
    }

    /// `Some(λ)` with `other = λ · self`, if the bodies are homothetic about
    /// the origin.
    pub fn homothety_ratio(&self, other: &Self) -> Option<Rational> {
        if self.dim != other.dim || self.vertices.len() != other.vertices.len() {
            return None;
        }
        let lambda = self.gauge(&other.vertices[0]);
        let own: HashSet<&Point<Rational>> = self.vertices.iter().collect();
        let all = other.vertices.iter().all(|v| own.contains(&v.div_scalar(&lambda)));
        all.then_some(lambda)
    }

    /// Planar vertices in counterclockwise order, starting from the smallest
    /// polar angle in `[0, 2π)`.
    pub fn polygon_ccw(&self) -> Result<Vec<Point<Rational>>> {
        require_planar(self.dim)?;
        let mut v = self.vertices.clone();
        v.sort_by(|a, b| angle_cmp(&a[0], &a[1], &b[0], &b[1]));
        Ok(v)
    }

    /// The section `B ∩ (c + span{u, w})` in the coordinates `(s, t)` of
    /// `c + s u + t w`: polygon vertices in counterclockwise order together
    /// with the normals `m` of its edges, `{m . z <= 1}`.
    pub fn section_polygon(
        &self,
        c: &Point<Rational>,
        u: &Vector<Rational>,
        w: &Vector<Rational>,
    ) -> Result<(Vec<[Rational; 2]>, Vec<[Rational; 2]>)> {
        self.check_dim(c)?;
        self.check_dim(u)?;
        self.check_dim(w)?;
        if self.gauge(c) >= Rational::one() {
            return Err(Error::NotInterior);
        }
        if rank(&[u.clone(), w.clone()]) < 2 {
            return Err(Error::Degenerate("section directions are dependent".into()));
        }
        let mut rows: Vec<[Rational; 2]> = Vec::new();
        for n in &self.normals {
            let gamma = Rational::one() - n.dot(c);
            let row = [n.dot(u) / &gamma, n.dot(w) / &gamma];
            if !(Scalar::is_zero(&row[0]) && Scalar::is_zero(&row[1])) && !rows.contains(&row) {
                rows.push(row);
            }
        }
        let mut verts: Vec<[Rational; 2]> = Vec::new();
        for (a, b) in rows.iter().tuple_combinations() {
            let det = a[0].clone() * &b[1] - a[1].clone() * &b[0];
            if Scalar::is_zero(&det) {
                continue;
            }
            let s = (b[1].clone() - &a[1]) / &det;
            let t = (a[0].clone() - &b[0]) / &det;
            let z = [s, t];
            if !verts.contains(&z) && rows.iter().all(|m| dot2(m, &z) <= Rational::one()) {
                verts.push(z);
            }
        }
        verts.sort_by(|a, b| angle_cmp(&a[0], &a[1], &b[0], &b[1]));
        let edge_rows: Vec<[Rational; 2]> =
            rows.into_iter().filter(|m| verts.iter().filter(|z| dot2(m, z) == Rational::one()).count() >= 2).collect();
        if verts.len() < 3 {
            return Err(Error::Invariant("section polygon has fewer than three vertices".into()));
        }
        Ok((verts, edge_rows))
    }
}

fn dot2(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    a[0].clone() * &b[0] + a[1].clone() * &b[1]
}

fn cross2(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    a[0].clone() * &b[1] - a[1].clone() * &b[0]
}

/// Exact comparison of polar angles in `[0, 2π)` for nonzero vectors.
fn angle_cmp(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Ordering {
    let half = |x: &Rational, y: &Rational| -> u8 {
        let zero = Rational::zero();
        if *y > zero || (*y == zero && *x > zero) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(ax, ay), half(bx, by));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let cross = ax.clone() * by - ay.clone() * bx;
    cross.cmp(&Rational::zero()).reverse()
}

fn section_gauge(rows: &[[Rational; 2]], z: &[Rational; 2]) -> Rational {
    rows.iter().map(|m| dot2(m, z)).fold(Rational::zero(), Scalar::max_of)
}

impl Norm<Rational> for PolytopeBall {
    fn dim(&self) -> usize {
        self.dim
    }

    fn gauge(&self, x: &Vector<Rational>) -> Rational {
        self.normals.iter().map(|n| n.dot(x)).fold(Rational::zero(), Scalar::max_of)
    }

    fn support(&self, a: &Vector<Rational>) -> Result<Rational> {
        self.check_dim(a)?;
        if a.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.vertices.iter().map(|v| v.dot(a)).reduce(Scalar::max_of).expect("ball has vertices"))
    }

    fn dual(&self) -> Self {
        Self::from_parts(self.dim, self.normals.clone(), self.vertices.clone())
    }

    fn isoperimetrix(&self) -> Result<Self> {
        require_planar(self.dim)?;
        let vertices = self.normals.iter().map(Vector::rotate_quarter).collect();
        let normals = self.vertices.iter().map(Vector::rotate_quarter).collect();
        Ok(Self::from_parts(2, vertices, normals))
    }

    fn ray_exit(&self, p: &Point<Rational>, v: &Vector<Rational>) -> Result<Rational> {
        self.check_dim(p)?;
        self.check_dim(v)?;
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        if self.gauge(p) >= Rational::one() {
            return Err(Error::NotInterior);
        }
        self.normals
            .iter()
            .filter_map(|n| {
                let rate = n.dot(v);
                Scalar::is_positive(&rate).then(|| (Rational::one() - n.dot(p)) / rate)
            })
            .reduce(Scalar::min_of)
            .ok_or_else(|| Error::Invariant("unbounded ray in a bounded ball".into()))
    }

    fn birkhoff_orthogonal(&self, x: &Vector<Rational>, y: &Vector<Rational>) -> Result<bool> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        if x.is_zero() || y.is_zero() {
            return Err(Error::ZeroVector);
        }
        // Orthogonal iff some supporting functional at x vanishes on y; the
        // supporting functionals are the convex hull of the active normals.
        let values: Vec<Rational> = self.active_facets(x).into_iter().map(|j| self.normals[j].dot(y)).collect();
        let zero = Rational::zero();
        Ok(values.iter().any(|v| *v >= zero) && values.iter().any(|v| *v <= zero))
    }

    fn is_radon(&self) -> Result<bool> {
        let iso = self.isoperimetrix()?;
        Ok(self.homothety_ratio(&iso).is_some())
    }

    fn section_midpoint_chord(
        &self,
        c: &Point<Rational>,
        u: &Vector<Rational>,
        w: &Vector<Rational>,
    ) -> Result<(Point<Rational>, Point<Rational>)> {
        let (verts, rows) = self.section_polygon(c, u, w)?;
        let n = verts.len();
        let one = Rational::one();
        let zero = Rational::zero();
        let lift = |z: &[Rational; 2]| -> (Point<Rational>, Point<Rational>) {
            let r = c.add_scaled(&z[0], u).add_scaled(&z[1], w);
            let s = &(c + c) - &r;
            (r, s)
        };
        for a in 0..n {
            let va = &verts[a];
            let neg = [-va[0].clone(), -va[1].clone()];
            if section_gauge(&rows, &neg) == one {
                return Ok(lift(va));
            }
            let wa = &verts[(a + 1) % n];
            let da = [wa[0].clone() - &va[0], wa[1].clone() - &va[1]];
            for b in 0..n {
                let vb = &verts[b];
                let wb = &verts[(b + 1) % n];
                let db = [wb[0].clone() - &vb[0], wb[1].clone() - &vb[1]];
                // va + α da = -(vb + β db)
                let det = cross2(&da, &db);
                if Scalar::is_zero(&det) {
                    continue;
                }
                let rhs = [-va[0].clone() - &vb[0], -va[1].clone() - &vb[1]];
                let alpha = cross2(&rhs, &db) / &det;
                let beta = cross2(&da, &rhs) / &det;
                if alpha >= zero && alpha <= one && beta >= zero && beta <= one {
                    let z = [va[0].clone() + alpha.clone() * &da[0], va[1].clone() + alpha * &da[1]];
                    return Ok(lift(&z));
                }
            }
        }
        Err(Error::Invariant("no chord bisected by an interior point".into()))
    }

    fn unit_circle_intersection(&self, u: &Vector<Rational>) -> Result<Point<Rational>> {
        self.check_dim(u)?;
        require_planar(self.dim)?;
        if self.gauge(u) != Rational::one() {
            return Err(Error::NotOnSphere(self.gauge(u).to_string()));
        }
        let poly = self.polygon_ccw()?;
        let n = poly.len();
        let zero = Rational::zero();
        let start = (0..n)
            .find(|&k| {
                let v = &poly[k];
                let e = &poly[(k + 1) % n] - v;
                let rel = u - v;
                let cross = e[0].clone() * &rel[1] - e[1].clone() * &rel[0];
                let along = e.dot(&rel);
                Scalar::is_zero(&cross) && along >= zero && along < e.norm_sq()
            })
            .ok_or_else(|| Error::Invariant("unit vector on no edge".into()))?;
        let mut cur = u.clone();
        for step in 0..=n {
            let target = &poly[(start + step + 1) % n];
            if *target == cur {
                continue;
            }
            let dir = target - &cur;
            let t = self.ray_exit(&(&cur - u), &dir)?;
            if t <= Rational::one() {
                return Ok(cur.add_scaled(&t, &dir));
            }
            cur = target.clone();
        }
        Err(Error::Invariant("walk around the unit circle found no intersection".into()))
    }

    fn describe(&self) -> String {
        let verts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        format!("polytope[{}]", verts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(c: &[i64]) -> Vector<Rational> {
        Vector::from_i64s(c)
    }

    #[test]
    fn square_and_diamond_are_polar() {
        let sq = PolytopeBall::square();
        assert_eq!(sq.vertices().len(), 4);
        assert_eq!(sq.facet_count(), 4);
        assert_eq!(sq.dual(), PolytopeBall::diamond());
        assert_eq!(sq.dual().dual(), sq);
        for j in 0..4 {
            assert_eq!(sq.adjacent_facets(j).len(), 2);
        }
    }

    #[test]
    fn cube_structure() {
        let c = PolytopeBall::cube(3);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facet_count(), 6);
        for j in 0..6 {
            assert_eq!(c.facet_vertices(j).len(), 4);
            assert_eq!(c.adjacent_facets(j).len(), 4);
        }
        let o = PolytopeBall::cross_polytope(3);
        assert_eq!(o.vertices().len(), 6);
        assert_eq!(o.facet_count(), 8);
        assert_eq!(PolytopeBall::cube(4).facet_count(), 8);
    }

    #[test]
    fn halfspace_construction_matches_vertices() {
        let h = vec![
            (v(&[1, 0]), rat(1, 1)),
            (v(&[-1, 0]), rat(1, 1)),
            (v(&[0, 2]), rat(2, 1)),
            (v(&[0, -2]), rat(2, 1)),
            (v(&[1, 1]), rat(5, 1)),
            (v(&[-1, -1]), rat(5, 1)),
        ];
        assert_eq!(PolytopeBall::from_halfspaces(&h).unwrap(), PolytopeBall::square());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(PolytopeBall::from_vertices(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0])]).is_err());
        assert!(PolytopeBall::from_vertices(&[v(&[1, 0]), v(&[-1, 0])]).is_err());
        assert!(PolytopeBall::from_halfspaces(&[(v(&[1, 0]), rat(0, 1)), (v(&[-1, 0]), rat(0, 1))]).is_err());
    }

    #[test]
    fn interior_points_are_dropped() {
        let b = PolytopeBall::from_vertices(&[
            v(&[1, 1]),
            v(&[-1, -1]),
            v(&[1, -1]),
            v(&[-1, 1]),
            v(&[0, 0]),
            Vector::new(vec![rat(1, 2), rat(0, 1)]),
            Vector::new(vec![rat(-1, 2), rat(0, 1)]),
        ])
        .unwrap();
        assert_eq!(b, PolytopeBall::square());
    }

    #[test]
    fn facet_cap() {
        let limits = Limits { max_facets: 3, ..Limits::default() };
        assert!(matches!(
            PolytopeBall::from_vertices_with(PolytopeBall::square().vertices(), &limits),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn polygon_order_is_counterclockwise() {
        let p = PolytopeBall::square().polygon_ccw().unwrap();
        assert_eq!(p, vec![v(&[1, 1]), v(&[-1, 1]), v(&[-1, -1]), v(&[1, -1])]);
    }

    #[test]
    fn square_section_chord() {
        let sq = PolytopeBall::square();
        let c = Vector::new(vec![rat(1, 4), rat(0, 1)]);
        let (r, s) = sq.section_midpoint_chord(&c, &v(&[1, 0]), &v(&[0, 1])).unwrap();
        assert_eq!(r.midpoint(&s), c);
        assert_eq!(sq.gauge(&r), rat(1, 1));
        assert_eq!(sq.gauge(&s), rat(1, 1));
        let o = v(&[0, 0]);
        let (r0, s0) = sq.section_midpoint_chord(&o, &v(&[1, 0]), &v(&[0, 1])).unwrap();
        assert_eq!(r0, v(&[1, 1]));
        assert_eq!(s0, v(&[-1, -1]));
    }

    #[test]
    fn equilateral_intersection_on_square() {
        let sq = PolytopeBall::square();
        let u = Vector::new(vec![rat(1, 1), rat(1, 3)]);
        let x = sq.unit_circle_intersection(&u).unwrap();
        assert_eq!(sq.gauge(&x), rat(1, 1));
        assert_eq!(sq.gauge(&(&x - &u)), rat(1, 1));
        assert!(u[0].clone() * &x[1] - u[1].clone() * &x[0] > Rational::zero());
    }
}
