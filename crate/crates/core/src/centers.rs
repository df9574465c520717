//! Euler-line points, the Feuerbach sphere, Minkowskian bisectors, the
//! incenter and the exspheres of a simplex.

use crate::circumcenter::is_circumcenter;
use crate::error::{Error, Result};
use crate::linear::{rank, solve_linear, LinearSystem, Solution};
use crate::norm::{Ball, Norm};
use crate::scalar::Scalar;
use crate::simplex::Simplex;
use crate::vector::{Hyperplane, Point, Vector};

/// Points on the Euler line attached to a circumcenter `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerData<F: Scalar> {
    pub circumcenter: Point<F>,
    pub radius: F,
    pub centroid: Point<F>,
    /// Monge point `M + ((d+1)/(d-1)) (G - M)`.
    pub monge: Point<F>,
    /// Common point of the lines `A_i + t (M - A'_i)`. `None` when `M`
    /// equals a facet centroid and those lines are undefined.
    pub complementary: Option<Point<F>>,
    /// Center of the sphere through the facet centroids.
    pub feuerbach: Point<F>,
    pub feuerbach_radius: F,
}

impl<F: Scalar> EulerData<F> {
    /// `M, G, N_M, F_M` and, when defined, `P_M` lie on one line.
    pub fn collinear(&self) -> bool {
        let g = &self.centroid;
        let mut diffs = vec![&self.circumcenter - g, &self.monge - g, &self.feuerbach - g];
        if let Some(p) = &self.complementary {
            diffs.push(p - g);
        }
        rank(&diffs) <= 1
    }

    /// All listed points are equal.
    pub fn collapsed(&self) -> bool {
        let g = &self.centroid;
        self.circumcenter.tol_eq(g)
            && self.monge.tol_eq(g)
            && self.feuerbach.tol_eq(g)
            && self.complementary.as_ref().is_none_or(|p| p.tol_eq(g))
    }
}

pub fn euler_points<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N, m: &Point<F>, r: &F) -> Result<EulerData<F>> {
    let d = t.dim();
    if d < 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: d });
    }
    m.check_dim(d)?;
    if !is_circumcenter(t, ball, m, r) {
        return Err(Error::NotCircumcenter);
    }
    let g = t.centroid();
    let df = F::from_i64(d as i64);
    let d1 = F::from_i64(d as i64 + 1);
    let monge = m.add_scaled(&(d1.clone() / F::from_i64(d as i64 - 1)), &(g - m));
    let feuerbach = (&g.scale(&d1) - m).div_scalar(&df);

    let degenerate = t.facet_centroids().iter().any(|c| c.tol_eq(m));
    let complementary = if degenerate {
        None
    } else {
        let p = &g.scale(&d1) - &m.scale(&df);
        for (a, c) in t.vertices().iter().zip(t.facet_centroids()) {
            if rank(&[&p - a, m - c]) > 1 {
                return Err(Error::Invariant(format!("line through vertex {a} misses the complementary point")));
            }
        }
        Some(p)
    };
    Ok(EulerData {
        circumcenter: m.clone(),
        radius: r.clone(),
        centroid: g.clone(),
        monge,
        complementary,
        feuerbach,
        feuerbach_radius: r.clone() / df,
    })
}

/// `Ball(F_M, r/d)`, checked to pass through every facet centroid.
pub fn feuerbach_sphere<F: Scalar, N: Norm<F>>(t: &Simplex<F>, m: &Point<F>, r: &F, ball: &N) -> Result<Ball<F, N>> {
    let e = euler_points(t, ball, m, r)?;
    for c in t.facet_centroids() {
        if !ball.gauge(&(c - &e.feuerbach)).tol_eq(&e.feuerbach_radius) {
            return Err(Error::Invariant(format!("facet centroid {c} is off the Feuerbach sphere")));
        }
    }
    Ball::new(ball.clone(), e.feuerbach, e.feuerbach_radius)
}

/// `{x : s1 (<a1, x> - b1) / h(a1) = s2 (<a2, x> - b2) / h(a2)}`.
pub fn bisector<F: Scalar, N: Norm<F>>(
    h1: &Hyperplane<F>,
    h2: &Hyperplane<F>,
    ball: &N,
    signs: (i8, i8),
) -> Result<Hyperplane<F>> {
    if h1.is_parallel(h2) {
        return Err(Error::Parallel);
    }
    let s1 = F::from_i64(signs.0.signum() as i64) / ball.support(&h1.normal)?;
    let s2 = F::from_i64(signs.1.signum() as i64) / ball.support(&h2.normal)?;
    let normal = &h1.normal.scale(&s1) - &h2.normal.scale(&s2);
    let offset = h1.offset.clone() * &s1 - h2.offset.clone() * &s2;
    Hyperplane::new(normal, offset)
}

/// The bisector of the two angular regions containing `reference`.
pub fn bisector_toward<F: Scalar, N: Norm<F>>(
    h1: &Hyperplane<F>,
    h2: &Hyperplane<F>,
    ball: &N,
    reference: &Point<F>,
) -> Result<Hyperplane<F>> {
    let (s1, s2) = (h1.eval(reference).sign(), h2.eval(reference).sign());
    if s1 == 0 || s2 == 0 {
        return Err(Error::Degenerate("reference point lies on a hyperplane".into()));
    }
    bisector(h1, h2, ball, (s1, s2))
}

/// Interior bisector of facets `i < j`, in lexicographic pair order.
pub fn interior_bisectors<F: Scalar, N: Norm<F>>(
    t: &Simplex<F>,
    ball: &N,
) -> Result<Vec<((usize, usize), Hyperplane<F>)>> {
    let n = t.dim() + 1;
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(((i, j), bisector_toward(t.facet(i), t.facet(j), ball, t.centroid())?));
        }
    }
    Ok(out)
}

/// Support values `h(a)` of the facet normals; the only way the norm
/// enters the in- and exsphere equations.
fn facet_supports<F: Scalar>(t: &Simplex<F>, support: &dyn Fn(&Vector<F>) -> Result<F>) -> Result<Vec<F>> {
    t.facets().iter().map(|f| support(&f.normal)).collect()
}

/// Solves `s_i (b_i - <a_i, x>) / h_i = ρ` for all facets.
fn equal_distance_point<F: Scalar>(t: &Simplex<F>, h: &[F], signs: &[i8]) -> Result<Option<(Point<F>, F)>> {
    let d = t.dim();
    let mut sys = LinearSystem::new(d + 1);
    for ((f, s), hf) in t.facets().iter().zip(signs).zip(h) {
        let w = F::from_i64(*s as i64) / hf;
        let mut row: Vec<F> = f.normal.iter().map(|c| c.clone() * &w).collect();
        row.push(F::one());
        sys.push(row, f.offset.clone() * &w)?;
    }
    Ok(match solve_linear(&sys) {
        Solution::Unique(x) => {
            let mut c = x.into_coords();
            let rho = c.pop().expect("d + 1 unknowns");
            Some((Vector::new(c), rho))
        }
        _ => None,
    })
}

fn check_dims<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<()> {
    if ball.dim() != t.dim() {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: ball.dim() });
    }
    Ok(())
}

fn incenter_from<F: Scalar>(t: &Simplex<F>, h: &[F]) -> Result<(Point<F>, F)> {
    let signs = vec![1i8; t.dim() + 1];
    match equal_distance_point(t, h, &signs)? {
        Some((x, rho)) if rho.is_positive() && t.contains_strictly(&x) => Ok((x, rho)),
        _ => Err(Error::Invariant("incenter system has no interior solution".into())),
    }
}

fn exspheres_from<F: Scalar>(t: &Simplex<F>, h: &[F]) -> Result<Vec<Exsphere<F>>> {
    let n = t.dim() + 1;
    (0..n)
        .map(|k| {
            let signs: Vec<i8> = (0..n).map(|i| if i == k { -1 } else { 1 }).collect();
            let solution = equal_distance_point(t, h, &signs)?
                .filter(|(x, rho)| rho.is_positive() && t.facet(k).eval(x).is_positive());
            Ok(Exsphere { flipped: k, signs, solution })
        })
        .collect()
}

/// Center and radius of the largest ball inside `T`, touching every facet.
pub fn incenter<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<(Point<F>, F)> {
    check_dims(t, ball)?;
    incenter_from(t, &facet_supports(t, &|a| ball.support(a))?)
}

/// Escribed ball across facet `flipped`, when it exists.
#[derive(Clone, Debug, PartialEq)]
pub struct Exsphere<F: Scalar> {
    pub flipped: usize,
    /// `+1` for facets seen from inside, `-1` for the flipped one.
    pub signs: Vec<i8>,
    pub solution: Option<(Point<F>, F)>,
}

/// One entry per facet, in facet order.
pub fn exspheres<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<Vec<Exsphere<F>>> {
    check_dims(t, ball)?;
    exspheres_from(t, &facet_supports(t, &|a| ball.support(a))?)
}

/// Incenter, inradius and exspheres together.
#[derive(Clone, Debug, PartialEq)]
pub struct InExData<F: Scalar> {
    pub incenter: Point<F>,
    pub inradius: F,
    pub exspheres: Vec<Exsphere<F>>,
}

impl<F: Scalar> InExData<F> {
    /// Exradii in facet order, `None` where the exsphere does not exist.
    pub fn exradii(&self) -> Vec<Option<F>> {
        self.exspheres.iter().map(|e| e.solution.as_ref().map(|(_, r)| r.clone())).collect()
    }
}

pub fn in_ex_spheres<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<InExData<F>> {
    check_dims(t, ball)?;
    in_ex_spheres_with(t, |a| ball.support(a))
}

/// As [`in_ex_spheres`], for a norm given only by its support function on
/// the facet normals of `t`. Useful when those values are known exactly
/// although the norm is not polytopal.
pub fn in_ex_spheres_with<F: Scalar>(t: &Simplex<F>, support: impl Fn(&Vector<F>) -> Result<F>) -> Result<InExData<F>> {
    let h = facet_supports(t, &support)?;
    let (incenter, inradius) = incenter_from(t, &h)?;
    Ok(InExData { incenter, inradius, exspheres: exspheres_from(t, &h)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::{point_hyperplane_distance, PNorm, PolytopeBall};
    use crate::scalar::{rat, Rational};

    fn v(c: &[i64]) -> Vector<Rational> {
        Vector::from_i64s(c)
    }

    #[test]
    fn right_triangle_in_ex() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[4, 0]), v(&[0, 3])]).unwrap();
        let e = PNorm::euclidean(2);
        let tf = t.to_f64().unwrap();
        let (c, r) = incenter(&tf, &e).unwrap();
        assert!(c.near(&Vector::new(vec![1.0, 1.0]), 1e-12) && (r - 1.0).abs() < 1e-12);
        let mut radii: Vec<f64> = exspheres(&tf, &e).unwrap().iter().map(|x| x.solution.as_ref().unwrap().1).collect();
        radii.sort_by(f64::total_cmp);
        for (a, b) in radii.iter().zip([2.0, 3.0, 6.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn square_bisector_is_diagonal() {
        let h1 = Hyperplane::new(v(&[1, 0]), rat(0, 1)).unwrap();
        let h2 = Hyperplane::new(v(&[0, 1]), rat(0, 1)).unwrap();
        let b = bisector_toward(&h1, &h2, &PolytopeBall::square(), &v(&[1, 1])).unwrap();
        assert!(b.contains(&v(&[3, 3])) && !b.contains(&v(&[1, -1])));
        assert_eq!(bisector(&h1, &h1.flipped(), &PolytopeBall::square(), (1, 1)), Err(Error::Parallel));
    }

    #[test]
    fn max_norm_incenter_is_on_every_bisector() {
        let t = Simplex::new(vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2])]).unwrap();
        let sq = PolytopeBall::square();
        let (c, r) = incenter(&t, &sq).unwrap();
        for f in t.facets() {
            assert_eq!(point_hyperplane_distance(&sq, &c, f).unwrap(), r);
        }
        for (_, b) in interior_bisectors(&t, &sq).unwrap() {
            assert!(b.contains(&c));
        }
    }

    #[test]
    fn equilateral_collapses() {
        let s = 3f64.sqrt() / 2.0;
        let t =
            Simplex::new(vec![Vector::new(vec![1.0, 0.0]), Vector::new(vec![-0.5, s]), Vector::new(vec![-0.5, -s])])
                .unwrap();
        let e = euler_points(&t, &PNorm::euclidean(2), &Vector::zeros(2), &1.0).unwrap();
        assert!(e.collapsed() && e.collinear());
        assert!((e.feuerbach_radius - 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_complementary_lines() {
        // Max-norm right triangle: M = (1/2, 1/2) is the midpoint of the
        // hypotenuse, a facet centroid.
        let t = Simplex::new(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])]).unwrap();
        let m = Vector::new(vec![rat(1, 2), rat(1, 2)]);
        let e = euler_points(&t, &PolytopeBall::square(), &m, &rat(1, 2)).unwrap();
        assert!(e.complementary.is_none());
        assert_eq!(e.feuerbach_radius, rat(1, 4));
    }
}
