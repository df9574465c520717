//! Checks that the characterizations of equal heights, AG-quasiregularity,
//! reducedness and equilaterality agree on concrete instances.
//!
//! Every report lists the verdict of each condition. The conditions of one
//! report are equivalent, so a report whose verdicts differ points to a bug
//! in this crate. Exact mode compares scalars exactly; float mode uses
//! [`VERDICT_REL`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::centers::{exspheres, incenter, interior_bisectors};
use crate::construct::{construct_ag_quasiregular, Strategy};
use crate::error::{Error, Result};
use crate::norm::Norm;
use crate::sample;
use crate::scalar::{Mode, Rational, Scalar, VERDICT_REL};
use crate::simplex::Simplex;
use crate::vector::{Hyperplane, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Thm41,
    Thm42,
    Thm43,
    /// Conditions centered on AG-quasiregularity of `T`.
    Thm44First,
    /// Conditions centered on equilaterality of `T`.
    Thm44Second,
    Remark41,
}

impl TheoremId {
    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Thm41 => "41",
            TheoremId::Thm42 => "42",
            TheoremId::Thm43 => "43",
            TheoremId::Thm44First => "44a",
            TheoremId::Thm44Second => "44b",
            TheoremId::Remark41 => "r41",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub label: &'static str,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport {
    pub theorem: TheoremId,
    pub verdicts: Vec<Verdict>,
    /// All verdicts are equal.
    pub agreement: bool,
    pub mode: Mode,
    pub fingerprint: String,
}

impl EquivalenceReport {
    fn new(theorem: TheoremId, mode: Mode, fingerprint: String, verdicts: Vec<Verdict>) -> Self {
        let agreement = verdicts.windows(2).all(|w| w[0].holds == w[1].holds);
        EquivalenceReport { theorem, verdicts, agreement, mode, fingerprint }
    }

    pub fn holds(&self) -> Vec<bool> {
        self.verdicts.iter().map(|v| v.holds).collect()
    }

    pub fn all_true(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn any_true(&self) -> bool {
        self.verdicts.iter().any(|v| v.holds)
    }
}

/// SHA-256 over the norm description, the vertices and the seed.
pub fn fingerprint<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N, seed: Option<u64>) -> String {
    let mut h = Sha256::new();
    h.update(ball.describe().as_bytes());
    for v in t.vertices() {
        h.update(b"|");
        h.update(v.to_string().as_bytes());
    }
    if let Some(s) = seed {
        h.update(format!("|seed={s}").as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn same<F: Scalar>(a: &F, b: &F) -> bool {
    a.near(b, VERDICT_REL)
}

fn all_same<F: Scalar>(xs: &[F]) -> bool {
    xs.windows(2).all(|w| same(&w[0], &w[1])) && xs.iter().all(|x| same(x, &xs[0]))
}

fn same_point<F: Scalar>(a: &Point<F>, b: &Point<F>) -> bool {
    a.near(b, VERDICT_REL)
}

/// Two-sided containment of hyperplane classes.
fn same_class<F: Scalar>(a: &[Hyperplane<F>], b: &[Hyperplane<F>]) -> bool {
    let inside = |x: &[Hyperplane<F>], y: &[Hyperplane<F>]| x.iter().all(|h| y.iter().any(|k| h.near(k, VERDICT_REL)));
    inside(a, b) && inside(b, a)
}

fn equal_heights<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    Ok(all_same(&t.heights(ball)?))
}

fn equal_medians<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    Ok(all_same(&t.median_lengths(ball)?))
}

fn equilateral<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    Ok(all_same(&t.edge_lengths(ball)?))
}

/// The centroid is at equal gauge distance from all vertices.
fn ag_quasiregular<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    let g = t.centroid();
    let r: Vec<F> = t.vertices().iter().map(|a| ball.gauge(&(a - g))).collect();
    Ok(all_same(&r))
}

fn bisectors_are_quasi_medial<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    let q: Vec<Hyperplane<F>> = t.quasi_medial_hyperplanes()?.into_iter().map(|q| q.plane).collect();
    let b: Vec<Hyperplane<F>> = interior_bisectors(t, ball)?.into_iter().map(|(_, h)| h).collect();
    Ok(same_class(&q, &b))
}

fn centroid_is_incenter<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    let (c, _) = incenter(t, ball)?;
    Ok(same_point(&c, t.centroid()))
}

/// All exspheres exist and have one radius.
fn equal_exradii<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    let radii: Option<Vec<F>> = exspheres(t, ball)?.into_iter().map(|e| e.solution.map(|(_, r)| r)).collect();
    Ok(radii.is_some_and(|r| all_same(&r)))
}

/// Decided as equal heights, audited by a necessary condition: moving any
/// vertex toward its opposite side must shrink the minimal width.
pub fn is_reduced<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<bool> {
    if t.dim() != 2 {
        return Err(Error::UnsupportedDimension { required: 2, found: t.dim() });
    }
    if !equal_heights(t, ball)? {
        return Ok(false);
    }
    let w = t.min_width(ball)?;
    for i in 0..=2 {
        let a = t.vertex(i);
        let toward = t.facet_centroid(i)? - a;
        for delta in [F::from_ratio(1, 8), F::from_ratio(1, 16)] {
            let shrunk = t.with_vertex(i, a.add_scaled(&delta, &toward))?;
            let ws = shrunk.min_width(ball)?;
            if same(&ws, &w) || ws > w {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn v(label: &'static str, holds: bool) -> Verdict {
    Verdict { label, holds }
}

pub fn verify_thm41<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<EquivalenceReport> {
    let dual = ball.dual();
    let td = t.dual_simplex()?;
    let verdicts = vec![
        v("equal heights", equal_heights(t, ball)?),
        v("quasi-medial hyperplanes are the interior bisectors", bisectors_are_quasi_medial(t, ball)?),
        v("centroid is the incenter", centroid_is_incenter(t, ball)?),
        v("equal exradii", equal_exradii(t, ball)?),
        v("dual simplex has equal medians in the dual norm", equal_medians(&td, &dual)?),
        v("dual simplex is AG-quasiregular in the dual norm", ag_quasiregular(&td, &dual)?),
    ];
    Ok(EquivalenceReport::new(TheoremId::Thm41, F::MODE, fingerprint(t, ball, None), verdicts))
}

pub fn verify_thm43<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<EquivalenceReport> {
    let dual = ball.dual();
    let td = t.dual_simplex()?;
    let verdicts = vec![
        v("AG-quasiregular", ag_quasiregular(t, ball)?),
        v("equal medians", equal_medians(t, ball)?),
        v("dual simplex has equal heights in the dual norm", equal_heights(&td, &dual)?),
        v("dual simplex: quasi-medial hyperplanes are the interior bisectors", bisectors_are_quasi_medial(&td, &dual)?),
        v("dual simplex: centroid is the incenter", centroid_is_incenter(&td, &dual)?),
        v("dual simplex has equal exradii", equal_exradii(&td, &dual)?),
    ];
    Ok(EquivalenceReport::new(TheoremId::Thm43, F::MODE, fingerprint(t, ball, None), verdicts))
}

/// For the pair `(T, B)` and `(T*, B*)`, condition `k` of
/// [`verify_thm41`] on the first matches condition `BRIDGE[k]` of
/// [`verify_thm43`] on the second.
pub const BRIDGE: [usize; 6] = [2, 3, 4, 5, 1, 0];

/// Checks the index correspondence between the two reports.
pub fn bridge_holds(thm41: &EquivalenceReport, thm43_of_dual: &EquivalenceReport) -> bool {
    let a = thm41.holds();
    let b = thm43_of_dual.holds();
    a.len() == 6 && b.len() == 6 && BRIDGE.iter().enumerate().all(|(k, &j)| a[k] == b[j])
}

fn require_planar<F: Scalar>(t: &Simplex<F>) -> Result<()> {
    if t.dim() == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { required: 2, found: t.dim() })
    }
}

pub fn verify_thm42<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<EquivalenceReport> {
    require_planar(t)?;
    let iso = ball.isoperimetrix()?;
    let verdicts = vec![
        v("reduced", is_reduced(t, ball)?),
        v("equal heights", equal_heights(t, ball)?),
        v("equilateral in the antinorm", equilateral(t, &iso)?),
    ];
    Ok(EquivalenceReport::new(TheoremId::Thm42, F::MODE, fingerprint(t, ball, None), verdicts))
}

pub fn verify_thm44<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<(EquivalenceReport, EquivalenceReport)> {
    require_planar(t)?;
    let iso = ball.isoperimetrix()?;
    let tm = t.median_triangle()?;
    let fp = fingerprint(t, ball, None);
    let first = vec![
        v("AG-quasiregular", ag_quasiregular(t, ball)?),
        v("median triangle is equilateral", equilateral(&tm, ball)?),
        v("median triangle is reduced in the antinorm", is_reduced(&tm, &iso)?),
        v("median triangle has equal heights in the antinorm", equal_heights(&tm, &iso)?),
    ];
    let second = vec![
        v("equilateral", equilateral(t, ball)?),
        v("median triangle is AG-quasiregular", ag_quasiregular(&tm, ball)?),
        v("reduced in the antinorm", is_reduced(t, &iso)?),
        v("equal heights in the antinorm", equal_heights(t, &iso)?),
    ];
    Ok((
        EquivalenceReport::new(TheoremId::Thm44First, F::MODE, fp.clone(), first),
        EquivalenceReport::new(TheoremId::Thm44Second, F::MODE, fp, second),
    ))
}

pub fn verify_remark41<F: Scalar, N: Norm<F>>(t: &Simplex<F>, ball: &N) -> Result<EquivalenceReport> {
    require_planar(t)?;
    if !ball.is_radon()? {
        return Err(Error::NotRadon);
    }
    let tm = t.median_triangle()?;
    let verdicts = vec![
        v("AG-quasiregular", ag_quasiregular(t, ball)?),
        v("median triangle is equilateral", equilateral(&tm, ball)?),
        v("median triangle is reduced", is_reduced(&tm, ball)?),
        v("median triangle: centroid is the incenter", centroid_is_incenter(&tm, ball)?),
    ];
    Ok(EquivalenceReport::new(TheoremId::Remark41, F::MODE, fingerprint(t, ball, None), verdicts))
}

/// Every report of the given theorem on `(t, ball)`. Thm 4.4 yields two.
pub fn verify<F: Scalar, N: Norm<F>>(theorem: TheoremId, t: &Simplex<F>, ball: &N) -> Result<Vec<EquivalenceReport>> {
    Ok(match theorem {
        TheoremId::Thm41 => vec![verify_thm41(t, ball)?],
        TheoremId::Thm42 => vec![verify_thm42(t, ball)?],
        TheoremId::Thm43 => vec![verify_thm43(t, ball)?],
        TheoremId::Thm44First | TheoremId::Thm44Second => {
            let (a, b) = verify_thm44(t, ball)?;
            vec![a, b]
        }
        TheoremId::Remark41 => vec![verify_remark41(t, ball)?],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlantedKind {
    AgQuasiregular,
    EqualHeights,
    /// Planar only.
    Equilateral,
}

/// A simplex satisfying `kind` in `ball`, moved by a random translation
/// and positive scaling. Deterministic in `seed`.
pub fn planted_generator<F: Scalar, N: Norm<F>>(kind: PlantedKind, ball: &N, seed: u64) -> Result<Simplex<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = match kind {
        PlantedKind::AgQuasiregular => {
            let p0 = sample::sphere_point(&mut rng, ball);
            construct_ag_quasiregular(ball, &p0, Strategy::Seeded(seed))?.0
        }
        PlantedKind::EqualHeights => {
            let dual = ball.dual();
            let p0 = sample::sphere_point(&mut rng, &dual);
            let s = construct_ag_quasiregular(&dual, &p0, Strategy::Seeded(seed))?.0;
            s.dual_simplex()?
        }
        PlantedKind::Equilateral => {
            if ball.dim() != 2 {
                return Err(Error::UnsupportedDimension { required: 2, found: ball.dim() });
            }
            let u = sample::sphere_point(&mut rng, ball);
            let x = ball.unit_circle_intersection(&u)?;
            Simplex::new(vec![Point::zeros(2), u, x])?
        }
    };
    sample::jiggle(&mut rng, &t)
}

/// A random simplex on a coarse grid for which none of the conditions of
/// `theorem` holds, resampled until that is the case.
pub fn random_negative<N: Norm<Rational>>(theorem: TheoremId, ball: &N, seed: u64) -> Result<Simplex<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = ball.dim();
    for _ in 0..1000 {
        let t = sample::simplex(&mut rng, d, 4, 4);
        let reports = verify(theorem, &t, ball)?;
        if reports.iter().all(|r| !r.any_true()) {
            return Ok(t);
        }
    }
    Err(Error::Invariant("no negative instance after 1000 draws".into()))
}
