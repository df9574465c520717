//! Scene files.
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "ball": { "type": "polytope-v", "vertices": [["1", "1"], ["-1", "1"], ["-1", "-1"], ["1", "-1"]] },
//!   "simplex": [["0", "0"], ["2", "0"], ["0", "2"]],
//!   "points": { "p0": ["1", "1/2"] }
//! }
//! ```
//!
//! Coordinates are `"p/q"` strings or JSON integers. Floating-point
//! literals are accepted only with `"pnorm"` balls, `{"type": "pnorm", "p": 3}`.
//! Halfspace balls use `{"type": "polytope-h", "halfspaces": [{"normal": [..], "offset": ".."}]}`.
//! The optional `projection` is a `2 x d` matrix used by `render` for `d > 2`.

use std::collections::BTreeMap;

use minksimplex::limits::Limits;
use minksimplex::norm::UnitBall;
use minksimplex::scalar::parse_rational;
use minksimplex::{Norm, PNorm, Point, PolytopeBall, Rational, Scalar, Simplex, Vector};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::args::ModeArg;
use crate::error::{CliError, Result};

/// A JSON scalar: an exact `"p/q"` string or a JSON number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Number(serde_json::Number),
}

impl Num {
    pub fn of<F: Scalar>(x: &F) -> Num {
        if F::is_exact() {
            Num::Text(x.to_string())
        } else {
            Num::Number(serde_json::Number::from_f64(x.to_f64()).unwrap_or_else(|| 0.into()))
        }
    }

    pub fn exact(&self, path: &str) -> Result<Rational> {
        match self {
            Num::Text(s) => parse_rational(s).map_err(|e| CliError::Input(format!("{path}: {e}"))),
            Num::Number(n) => match (n.as_i64(), n.as_u64()) {
                (Some(i), _) => Ok(Rational::from_i64(i)),
                (None, Some(u)) => Ok(Rational::from_integer(u.into())),
                _ => Err(CliError::Input(format!(
                    "{path}: floating-point literal {n} in an exact scene; write it as a \"p/q\" string"
                ))),
            },
        }
    }

    pub fn float(&self, path: &str) -> Result<f64> {
        match self {
            Num::Text(s) => parse_rational(s).map(|r| r.to_f64()).map_err(|e| CliError::Input(format!("{path}: {e}"))),
            Num::Number(n) => n.as_f64().ok_or_else(|| CliError::Input(format!("{path}: not a number"))),
        }
    }
}

pub fn nums<F: Scalar>(p: &Vector<F>) -> Vec<Num> {
    p.iter().map(Num::of).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub dimension: usize,
    pub ball: BallSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simplex: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub points: BTreeMap<String, Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<Vec<Vec<Num>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum BallSpec {
    #[serde(rename = "polytope-v")]
    PolytopeV { vertices: Vec<Vec<Num>> },
    #[serde(rename = "polytope-h")]
    PolytopeH { halfspaces: Vec<HalfspaceSpec> },
    #[serde(rename = "pnorm")]
    PNorm { p: Num },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceSpec {
    pub normal: Vec<Num>,
    pub offset: Num,
}

impl SceneFile {
    /// Parses JSON, reporting syntax and schema errors with line and column.
    pub fn parse(text: &str) -> Result<SceneFile> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("scene: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenes serialize")
    }

    /// SHA-256 of the canonical serialization.
    pub fn fingerprint(&self) -> String {
        let canonical = serde_json::to_string(self).expect("scenes serialize");
        Sha256::digest(canonical.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn is_polytopal(&self) -> bool {
        !matches!(self.ball, BallSpec::PNorm { .. })
    }

    /// The arithmetic mode: the one implied by the ball, which `--mode`
    /// may only confirm.
    pub fn mode(&self, requested: Option<ModeArg>) -> Result<ModeArg> {
        let natural = if self.is_polytopal() { ModeArg::Exact } else { ModeArg::Float };
        match requested {
            Some(m) if m != natural => Err(CliError::Input(format!(
                "--mode {}: {} balls are evaluated in {} arithmetic",
                if m == ModeArg::Exact { "exact" } else { "float" },
                if self.is_polytopal() { "polytopal" } else { "p-norm" },
                if natural == ModeArg::Exact { "exact" } else { "float" },
            ))),
            _ => Ok(natural),
        }
    }

    fn unit_ball(&self) -> Result<UnitBall> {
        let d = self.dimension;
        Ok(match &self.ball {
            BallSpec::PolytopeV { vertices } => {
                let pts = vertices
                    .iter()
                    .enumerate()
                    .map(|(i, v)| exact_point(v, d, &format!("ball.vertices[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                UnitBall::PolytopeV(pts)
            }
            BallSpec::PolytopeH { halfspaces } => {
                let hs = halfspaces
                    .iter()
                    .enumerate()
                    .map(|(i, h)| {
                        let path = format!("ball.halfspaces[{i}]");
                        Ok((
                            exact_point(&h.normal, d, &format!("{path}.normal"))?,
                            h.offset.exact(&format!("{path}.offset"))?,
                        ))
                    })
                    .collect::<Result<Vec<_>>>()?;
                UnitBall::PolytopeH(hs)
            }
            BallSpec::PNorm { p } => UnitBall::SmoothP { p: p.float("ball.p")?, dim: d },
        })
    }

    fn check_shape(&self) -> Result<()> {
        if self.dimension < 2 {
            return Err(CliError::Input(format!("dimension: must be at least 2, got {}", self.dimension)));
        }
        if let Some(s) = &self.simplex {
            if s.len() != self.dimension + 1 {
                return Err(CliError::Input(format!(
                    "simplex: expected {} vertices, got {}",
                    self.dimension + 1,
                    s.len()
                )));
            }
        }
        if let Some(p) = &self.projection {
            if p.len() != 2 || p.iter().any(|r| r.len() != self.dimension) {
                return Err(CliError::Input(format!("projection: expected a 2 x {} matrix", self.dimension)));
            }
        }
        Ok(())
    }

    pub fn exact(&self, limits: &Limits) -> Result<Scene<Rational, PolytopeBall>> {
        self.check_shape()?;
        limits.check_dim(self.dimension)?;
        let ball = self.unit_ball()?.to_exact(limits)?;
        self.resolve(ball, exact_point)
    }

    pub fn float(&self, limits: &Limits) -> Result<Scene<f64, PNorm>> {
        self.check_shape()?;
        limits.check_dim(self.dimension)?;
        let ball = self.unit_ball()?.to_float()?;
        self.resolve(ball, float_point)
    }

    fn resolve<F: Scalar, N: Norm<F>>(
        &self,
        ball: N,
        point: fn(&[Num], usize, &str) -> Result<Point<F>>,
    ) -> Result<Scene<F, N>> {
        let d = self.dimension;
        let simplex = match &self.simplex {
            Some(vs) => {
                let pts = vs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| point(v, d, &format!("simplex[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(Simplex::new(pts)?)
            }
            None => None,
        };
        let points = self
            .points
            .iter()
            .map(|(k, v)| Ok((k.clone(), point(v, d, &format!("points.{k}"))?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let projection = match &self.projection {
            Some(rows) => Some(
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| exact_point(r, d, &format!("projection[{i}]")).map(Vector::into_coords))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Ok(Scene { ball, simplex, points, projection })
    }
}

fn check_len(v: &[Num], d: usize, path: &str) -> Result<()> {
    if v.len() != d {
        return Err(CliError::Input(format!("{path}: expected {d} coordinates, got {}", v.len())));
    }
    Ok(())
}

fn exact_point(v: &[Num], d: usize, path: &str) -> Result<Point<Rational>> {
    check_len(v, d, path)?;
    let c = v.iter().enumerate().map(|(k, x)| x.exact(&format!("{path}[{k}]"))).collect::<Result<Vec<_>>>()?;
    Ok(Vector::new(c))
}

fn float_point(v: &[Num], d: usize, path: &str) -> Result<Point<f64>> {
    check_len(v, d, path)?;
    let c = v.iter().enumerate().map(|(k, x)| x.float(&format!("{path}[{k}]"))).collect::<Result<Vec<_>>>()?;
    Ok(Vector::new(c))
}

/// A scene with its arithmetic mode fixed.
#[derive(Debug, Clone)]
pub struct Scene<F: Scalar, N: Norm<F>> {
    pub ball: N,
    pub simplex: Option<Simplex<F>>,
    pub points: BTreeMap<String, Point<F>>,
    /// Always exact; applied to the exact or float geometry alike.
    pub projection: Option<Vec<Vec<Rational>>>,
}

impl<F: Scalar, N: Norm<F>> Scene<F, N> {
    pub fn simplex(&self, command: &str) -> Result<&Simplex<F>> {
        self.simplex.as_ref().ok_or_else(|| CliError::Input(format!("simplex: required by `{command}`")))
    }
}

impl SceneFile {
    /// A scene with an exact simplex, for tests and examples.
    pub fn from_exact(ball: &PolytopeBall, simplex: Option<&Simplex<Rational>>) -> SceneFile {
        SceneFile {
            dimension: ball.dim(),
            ball: BallSpec::PolytopeV { vertices: ball.vertices().iter().map(nums).collect() },
            simplex: simplex.map(|t| t.vertices().iter().map(nums).collect()),
            points: BTreeMap::new(),
            projection: None,
        }
    }
}
