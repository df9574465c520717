//! The subcommands, each generic over the arithmetic mode.

use minksimplex::centers::in_ex_spheres;
use minksimplex::circumcenter::{in_medial_polytope, is_ag_quasiregular};
use minksimplex::equivalence::{
    bridge_holds, fingerprint, planted_generator, random_negative, verify, verify_thm41, verify_thm43,
};
use minksimplex::linear::general_position;
use minksimplex::sample;
use minksimplex::{
    construct_ag_quasiregular, euler_points, CircumcenterSolver, EquivalenceReport, Limits, Norm, PlantedKind, Point,
    Rational, Scalar, Simplex, Strategy, TheoremId, Vector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::args::{StrategyArg, TheoremArg};
use crate::document::*;
use crate::error::Result;
use crate::scene::{nums, Num, Scene};

pub fn gauge<F: Scalar, N: Norm<F>>(scene: &Scene<F, N>) -> Result<GaugeReport> {
    let ball = &scene.ball;
    let points = scene.points.iter().map(|(k, p)| (k.clone(), Num::of(&ball.gauge(p)))).collect();
    let mut report = GaugeReport { points, edges: Vec::new(), heights: Vec::new(), medians: Vec::new() };
    if let Some(t) = &scene.simplex {
        let n = t.vertices().len();
        for i in 0..n {
            for j in i + 1..n {
                let length = ball.gauge(&(t.vertex(j) - t.vertex(i)));
                report.edges.push(EdgeLength { i, j, length: Num::of(&length) });
            }
        }
        report.heights = t.heights(ball)?.iter().map(Num::of).collect();
        report.medians = t.median_lengths(ball)?.iter().map(Num::of).collect();
    }
    Ok(report)
}

pub fn circumcenters<F: Scalar, N: CircumcenterSolver<F>>(
    scene: &Scene<F, N>,
    limits: &Limits,
) -> Result<CircumcenterReport> {
    let t = scene.simplex("circumcenters")?;
    let set = scene.ball.circumcenter_set(t, limits)?;
    let witnesses = set
        .witnesses
        .iter()
        .map(|w| CircumcenterEntry {
            center: nums(&w.center),
            radius: Num::of(&w.radius),
            in_simplex: t.contains(&w.center),
            in_medial_polytope: in_medial_polytope(t, &w.center),
        })
        .collect();
    let pieces = set
        .pieces
        .iter()
        .enumerate()
        .map(|(k, p)| PieceEntry { assignment: p.assignment.clone(), dimension: p.dimension, witness: k })
        .collect();
    Ok(CircumcenterReport {
        classification: set.classification.as_str().to_string(),
        witnesses,
        pieces,
        failed_starts: (!F::is_exact()).then_some(set.failed_starts),
    })
}

pub fn centers<F: Scalar, N: CircumcenterSolver<F>>(scene: &Scene<F, N>, limits: &Limits) -> Result<CentersReport> {
    let t = scene.simplex("centers")?;
    let ball = &scene.ball;
    let data = in_ex_spheres(t, ball)?;
    let exspheres = data
        .exspheres
        .iter()
        .map(|e| ExsphereEntry {
            flipped: e.flipped,
            center: e.solution.as_ref().map(|(c, _)| nums(c)),
            radius: e.solution.as_ref().map(|(_, r)| Num::of(r)),
        })
        .collect();
    let set = ball.circumcenter_set(t, limits)?;
    let euler = set
        .witnesses
        .iter()
        .map(|w| {
            let e = euler_points(t, ball, &w.center, &w.radius)?;
            Ok(EulerEntry {
                circumcenter: nums(&e.circumcenter),
                radius: Num::of(&e.radius),
                centroid: nums(&e.centroid),
                monge: nums(&e.monge),
                complementary: e.complementary.as_ref().map(nums),
                feuerbach: nums(&e.feuerbach),
                feuerbach_radius: Num::of(&e.feuerbach_radius),
                collinear: e.collinear(),
                collapsed: e.collapsed(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CentersReport { incenter: nums(&data.incenter), inradius: Num::of(&data.inradius), exspheres, euler })
}

fn pair<F: Scalar>(c: &(Point<F>, Point<F>)) -> [Coords; 2] {
    [nums(&c.0), nums(&c.1)]
}

pub fn construct<F: Scalar, N: Norm<F>>(
    scene: &Scene<F, N>,
    strategy: StrategyArg,
    seed: u64,
) -> Result<ConstructReport> {
    let ball = &scene.ball;
    let p0 = match scene.points.get("p0") {
        Some(p) => p.clone(),
        None => {
            let e1: Vector<F> = Vector::unit(ball.dim(), 0);
            let g = ball.gauge(&e1);
            e1.div_scalar(&g)
        }
    };
    let strategy = match strategy {
        StrategyArg::Deterministic => Strategy::Deterministic,
        StrategyArg::Seeded => Strategy::Seeded(seed),
    };
    let (t, trace) = construct_ag_quasiregular(ball, &p0, strategy)?;
    let steps = trace
        .steps
        .iter()
        .map(|s| StepEntry {
            level: s.level,
            frame: s.frame.iter().map(nums).collect(),
            centroid: nums(&s.centroid),
            chord: pair(&s.chord),
            section_normal: s.section_normal.as_ref().map(nums),
            midpoint_chord: s.midpoint_chord.as_ref().map(pair),
        })
        .collect();
    let checks = ConstructChecks {
        centroid_at_origin: t.centroid().iter().all(Scalar::is_zero),
        on_sphere: t.vertices().iter().all(|a| ball.on_sphere(a)),
        general_position: general_position(t.vertices())?,
        ag_quasiregular: is_ag_quasiregular(&t, ball)?,
    };
    Ok(ConstructReport {
        strategy: match strategy {
            Strategy::Deterministic => "deterministic".into(),
            Strategy::Seeded(_) => "seeded".into(),
        },
        p0: nums(&p0),
        vertices: t.vertices().iter().map(nums).collect(),
        steps,
        checks,
    })
}

/// Random instances on which every condition of the theorem fails.
pub trait NegativeSampler: Scalar {
    fn negative<N: Norm<Self>>(theorem: TheoremId, ball: &N, seed: u64) -> minksimplex::Result<Simplex<Self>>;
}

impl NegativeSampler for Rational {
    fn negative<N: Norm<Self>>(theorem: TheoremId, ball: &N, seed: u64) -> minksimplex::Result<Simplex<Self>> {
        random_negative(theorem, ball, seed)
    }
}

impl NegativeSampler for f64 {
    fn negative<N: Norm<Self>>(theorem: TheoremId, ball: &N, seed: u64) -> minksimplex::Result<Simplex<Self>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let t = sample::simplex(&mut rng, ball.dim(), 4, 4).to_f64()?;
            if verify(theorem, &t, ball)?.iter().all(|r| !r.any_true()) {
                return Ok(t);
            }
        }
        Err(minksimplex::Error::Invariant("no negative instance after 1000 draws".into()))
    }
}

pub fn theorem_id(t: TheoremArg) -> TheoremId {
    match t {
        TheoremArg::T41 => TheoremId::Thm41,
        TheoremArg::T42 => TheoremId::Thm42,
        TheoremArg::T43 => TheoremId::Thm43,
        TheoremArg::T44 => TheoremId::Thm44First,
        TheoremArg::R41 => TheoremId::Remark41,
    }
}

/// The planted condition for trial `k`, and the report it makes all true.
fn planted_kind(theorem: TheoremId, k: usize) -> (PlantedKind, TheoremId) {
    match theorem {
        TheoremId::Thm41 | TheoremId::Thm42 => (PlantedKind::EqualHeights, theorem),
        TheoremId::Thm44First | TheoremId::Thm44Second if k % 2 == 1 => {
            (PlantedKind::Equilateral, TheoremId::Thm44Second)
        }
        TheoremId::Thm44First | TheoremId::Thm44Second => (PlantedKind::AgQuasiregular, TheoremId::Thm44First),
        TheoremId::Thm43 | TheoremId::Remark41 => (PlantedKind::AgQuasiregular, theorem),
    }
}

#[derive(Clone, Copy)]
enum Branch {
    Scene,
    Planted(usize),
    Negative(usize),
}

fn entry(r: &EquivalenceReport) -> ReportEntry {
    ReportEntry {
        theorem: r.theorem.as_str().to_string(),
        mode: r.mode.to_string(),
        fingerprint: r.fingerprint.clone(),
        agreement: r.agreement,
        verdicts: r.verdicts.iter().map(|v| VerdictEntry { label: v.label.to_string(), holds: v.holds }).collect(),
    }
}

fn corrupt(r: &mut EquivalenceReport) {
    if let Some(v) = r.verdicts.first_mut() {
        v.holds = !v.holds;
    }
    r.agreement = r.verdicts.iter().all(|v| v.holds == r.verdicts[0].holds);
}

pub struct Campaign {
    pub theorem: TheoremId,
    pub trials: usize,
    pub seed: u64,
    pub inject_fault: bool,
}

pub fn campaign<F: NegativeSampler, N: Norm<F>>(scene: &Scene<F, N>, c: &Campaign) -> Result<VerifyReport> {
    let ball = &scene.ball;
    let mut jobs = Vec::with_capacity(2 * c.trials + 1);
    if scene.simplex.is_some() {
        jobs.push(Branch::Scene);
    }
    jobs.extend((0..c.trials).map(Branch::Planted));
    jobs.extend((0..c.trials).map(Branch::Negative));

    let run = |index: usize, branch: Branch| -> Result<TrialEntry> {
        let (t, seed, name) = match branch {
            Branch::Scene => (scene.simplex("verify")?.clone(), None, "scene"),
            Branch::Planted(k) => {
                let s = c.seed.wrapping_add(k as u64);
                (planted_generator(planted_kind(c.theorem, k).0, ball, s)?, Some(s), "planted")
            }
            Branch::Negative(k) => {
                let s = c.seed.wrapping_add(k as u64);
                (F::negative(c.theorem, ball, s)?, Some(s), "negative")
            }
        };
        let mut reports = verify(c.theorem, &t, ball)?;
        if c.inject_fault {
            reports.iter_mut().for_each(corrupt);
        }
        let branch_ok = match branch {
            Branch::Scene => None,
            Branch::Planted(k) => {
                let focus = planted_kind(c.theorem, k).1;
                Some(reports.iter().filter(|r| r.theorem == focus).all(|r| r.all_true()))
            }
            Branch::Negative(_) => Some(reports.iter().all(|r| !r.any_true())),
        };
        let bridge = match branch {
            Branch::Planted(_) if matches!(c.theorem, TheoremId::Thm41 | TheoremId::Thm43) => {
                let a = verify_thm41(&t, ball)?;
                let b = verify_thm43(&t.dual_simplex()?, &ball.dual())?;
                Some(bridge_holds(&a, &b))
            }
            _ => None,
        };
        Ok(TrialEntry {
            index,
            branch: name.to_string(),
            seed,
            fingerprint: fingerprint(&t, ball, seed),
            simplex: t.vertices().iter().map(nums).collect(),
            reports: reports.iter().map(entry).collect(),
            bridge,
            branch_ok,
        })
    };
    let instances = jobs.par_iter().enumerate().map(|(i, b)| run(i, *b)).collect::<Result<Vec<_>>>()?;
    let disagreements = instances
        .iter()
        .filter(|e| e.reports.iter().any(|r| !r.agreement) || e.bridge == Some(false))
        .map(|e| e.fingerprint.clone())
        .collect();
    Ok(VerifyReport { theorem: c.theorem.as_str().to_string(), trials: c.trials, instances, disagreements })
}
