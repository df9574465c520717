//! SVG rendering of planar scenes and of planar projections.
//!
//! World coordinates are written unchanged; the group `scene` maps them to
//! the canvas with `matrix(s 0 0 -s tx ty)`, that is
//! `(x, y) -> (s x + tx, ty - s y)`. Labels are placed in canvas
//! coordinates so that text is not mirrored.

use std::fmt::Write;

use minksimplex::{euler_points, CircumcenterSolver, Norm, PNorm, PolytopeBall, Rational, Scalar, Vector};

use crate::error::{CliError, Result};
use crate::scene::Scene;

const CANVAS: f64 = 600.0;
const MARGIN: f64 = 40.0;

type P2 = [f64; 2];

/// Boundary of the unit ball (or of its planar projection), counterclockwise.
pub trait Outline {
    fn outline(&self, projection: Option<&[Vec<Rational>]>) -> Result<Vec<P2>>;
}

impl Outline for PolytopeBall {
    fn outline(&self, projection: Option<&[Vec<Rational>]>) -> Result<Vec<P2>> {
        let ball = match projection {
            Some(rows) => {
                let image: Vec<Vector<Rational>> = self
                    .vertices()
                    .iter()
                    .map(|v| Vector::new(rows.iter().map(|r| Vector::new(r.clone()).dot(v)).collect()))
                    .collect();
                PolytopeBall::from_vertices(&image)?
            }
            None => self.clone(),
        };
        Ok(ball.polygon_ccw()?.iter().map(|v| [v[0].to_f64(), v[1].to_f64()]).collect())
    }
}

impl Outline for PNorm {
    fn outline(&self, projection: Option<&[Vec<Rational>]>) -> Result<Vec<P2>> {
        if projection.is_some() || self.dim() != 2 {
            return Err(CliError::Input("p-norm scenes are rendered in the plane only".into()));
        }
        let n = 256;
        Ok((0..n)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / n as f64;
                let v = Vector::new(vec![a.cos(), a.sin()]);
                let g = self.gauge(&v);
                [v[0] / g, v[1] / g]
            })
            .collect())
    }
}

/// The planar image of `p`.
pub fn project<F: Scalar>(p: &Vector<F>, projection: Option<&[Vec<Rational>]>) -> P2 {
    match projection {
        Some(rows) => {
            let row = |r: &[Rational]| r.iter().zip(p.iter()).map(|(a, x)| a.to_f64() * x.to_f64()).sum();
            [row(&rows[0]), row(&rows[1])]
        }
        None => [p[0].to_f64(), p[1].to_f64()],
    }
}

fn cross(o: &P2, a: &P2, b: &P2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Convex hull, counterclockwise, by the monotone chain.
pub fn hull(points: &[P2]) -> Vec<P2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<P2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Circumcenters to draw: every witness and, for positive-dimensional
/// exact pieces, the extremes along the coordinate axes.
fn drawn_centers<F: Scalar, N: CircumcenterSolver<F>>(scene: &Scene<F, N>) -> Result<Vec<(Vec<f64>, f64)>> {
    let t = scene.simplex("render")?;
    let set = scene.ball.circumcenter_set(t, &minksimplex::Limits::from_env()?)?;
    let mut out: Vec<(Vec<f64>, f64)> =
        set.witnesses.iter().map(|w| (w.center.iter().map(Scalar::to_f64).collect(), w.radius.to_f64())).collect();
    let d = t.dim();
    for piece in set.pieces.iter().filter(|p| p.dimension > 0) {
        for k in 0..d {
            for c in piece.extremes_along(&Vector::unit(d, k))? {
                out.push((c.center.iter().map(Scalar::to_f64).collect(), c.radius.to_f64()));
            }
        }
    }
    let mut unique: Vec<(Vec<f64>, f64)> = Vec::new();
    for c in out {
        let seen = unique
            .iter()
            .any(|u| u.0.iter().zip(&c.0).all(|(a, b)| (a - b).abs() <= 1e-12) && (u.1 - c.1).abs() <= 1e-12);
        if !seen {
            unique.push(c);
        }
    }
    Ok(unique)
}

fn fmt_points(points: &[P2]) -> String {
    points.iter().map(|p| format!("{},{}", p[0], p[1])).collect::<Vec<_>>().join(" ")
}

struct Viewport {
    s: f64,
    tx: f64,
    ty: f64,
}

impl Viewport {
    fn fit(points: &[P2]) -> Viewport {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        let s = (CANVAS - 2.0 * MARGIN) / span;
        Viewport { s, tx: MARGIN - s * lo[0], ty: CANVAS - MARGIN + s * lo[1] }
    }

    fn canvas(&self, p: &P2) -> P2 {
        [self.s * p[0] + self.tx, self.ty - self.s * p[1]]
    }
}

pub fn render<F: Scalar, N: CircumcenterSolver<F> + Outline>(scene: &Scene<F, N>) -> Result<String> {
    let t = scene.simplex("render")?;
    let proj = scene.projection.as_deref();
    if t.dim() != 2 && proj.is_none() {
        return Err(CliError::Input(format!("projection: required to render a scene of dimension {}", t.dim())));
    }
    let unit = scene.ball.outline(proj)?;
    let vertices: Vec<P2> = t.vertices().iter().map(|a| project(a, proj)).collect();
    let medial: Vec<P2> = hull(&t.medial_polytope().vertices().iter().map(|p| project(p, proj)).collect::<Vec<_>>());
    // Distinct circumcenters may share a projection.
    let mut projected: Vec<(P2, f64)> = Vec::new();
    for (c, r) in drawn_centers(scene)? {
        let c = project(&Vector::new(c), proj);
        if !projected
            .iter()
            .any(|(q, s)| (q[0] - c[0]).abs() <= 1e-12 && (q[1] - c[1]).abs() <= 1e-12 && (s - r).abs() <= 1e-12)
        {
            projected.push((c, r));
        }
    }
    let translates: Vec<Vec<P2>> =
        projected.iter().map(|(c, r)| unit.iter().map(|u| [c[0] + r * u[0], c[1] + r * u[1]]).collect()).collect();
    let mut markers: Vec<(&str, P2)> = vec![("G", project(t.centroid(), proj))];
    let set = scene.ball.circumcenter_set(t, &minksimplex::Limits::from_env()?)?;
    if let Some(w) = set.witnesses.first() {
        let e = euler_points(t, &scene.ball, &w.center, &w.radius)?;
        markers.push(("M", project(&e.circumcenter, proj)));
        markers.push(("N", project(&e.monge, proj)));
        markers.push(("F", project(&e.feuerbach, proj)));
        if let Some(p) = &e.complementary {
            markers.push(("P", project(p, proj)));
        }
    }

    let mut all: Vec<P2> = vertices.clone();
    translates.iter().for_each(|b| all.extend(b));
    let vp = Viewport::fit(&all);
    let dot = 3.0 / vp.s;

    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(w, "<!-- world (x, y) maps to ({} x + {}, {} - {} y) -->", vp.s, vp.tx, vp.ty, vp.s);
    let _ = writeln!(w, r#"<g id="scene" transform="matrix({} 0 0 {} {} {})">"#, vp.s, -vp.s, vp.tx, vp.ty);
    let _ = writeln!(w, r##"<polygon id="medial" points="{}" fill="#dbe7f3" stroke="none"/>"##, fmt_points(&medial));
    for (k, b) in translates.iter().enumerate() {
        let _ = writeln!(
            w,
            r##"<polygon id="ball-{k}" class="ball" points="{}" fill="none" stroke="#7a7a7a" stroke-width="1" vector-effect="non-scaling-stroke"/>"##,
            fmt_points(b)
        );
    }
    let _ = writeln!(
        w,
        r##"<polygon id="simplex" points="{}" fill="none" stroke="#1b1b1b" stroke-width="1.5" vector-effect="non-scaling-stroke"/>"##,
        fmt_points(&hull(&vertices))
    );
    for (i, v) in vertices.iter().enumerate() {
        let _ =
            writeln!(w, r##"<circle id="A{i}" class="vertex" cx="{}" cy="{}" r="{dot}" fill="#1b1b1b"/>"##, v[0], v[1]);
    }
    for (name, p) in &markers {
        let _ = writeln!(
            w,
            r##"<circle id="{name}" class="euler" cx="{}" cy="{}" r="{dot}" fill="#c0392b"/>"##,
            p[0], p[1]
        );
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, r#"<g id="labels" font-family="sans-serif" font-size="12">"#);
    let labels = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (format!("A{i}"), *v))
        .chain(markers.iter().map(|(n, p)| (n.to_string(), *p)));
    for (name, p) in labels {
        let c = vp.canvas(&p);
        let _ = writeln!(w, r#"<text x="{}" y="{}">{name}</text>"#, c[0] + 5.0, c[1] - 5.0);
    }
    let _ = writeln!(w, "</g>");
    let _ = writeln!(w, "</svg>");
    Ok(out)
}
