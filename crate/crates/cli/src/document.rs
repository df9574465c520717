//! Result documents. Field order is the serialization order, so output is
//! stable and diffable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::scene::Num;

pub type Coords = Vec<Num>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    /// Tool name and version; the only line allowed to differ between
    /// builds for the same input.
    pub version: String,
    pub command: String,
    pub mode: String,
    /// SHA-256 of the canonical input scene.
    pub scene: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub result: CommandResult,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> serde_json::Result<ResultDocument> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CommandResult {
    Gauge(GaugeReport),
    Circumcenters(CircumcenterReport),
    Centers(CentersReport),
    Construct(ConstructReport),
    Verify(VerifyReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaugeReport {
    pub points: BTreeMap<String, Num>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeLength>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub heights: Vec<Num>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub medians: Vec<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeLength {
    pub i: usize,
    pub j: usize,
    pub length: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircumcenterReport {
    pub classification: String,
    pub witnesses: Vec<CircumcenterEntry>,
    /// Exact mode: maximal pieces; `witness` indexes `witnesses`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<PieceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_starts: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircumcenterEntry {
    pub center: Coords,
    pub radius: Num,
    pub in_simplex: bool,
    pub in_medial_polytope: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PieceEntry {
    pub assignment: Vec<usize>,
    pub dimension: usize,
    pub witness: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentersReport {
    pub incenter: Coords,
    pub inradius: Num,
    pub exspheres: Vec<ExsphereEntry>,
    pub euler: Vec<EulerEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExsphereEntry {
    /// The facet whose bisector sign is flipped.
    pub flipped: usize,
    pub center: Option<Coords>,
    pub radius: Option<Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerEntry {
    pub circumcenter: Coords,
    pub radius: Num,
    pub centroid: Coords,
    pub monge: Coords,
    pub complementary: Option<Coords>,
    pub feuerbach: Coords,
    pub feuerbach_radius: Num,
    pub collinear: bool,
    pub collapsed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub strategy: String,
    pub p0: Coords,
    pub vertices: Vec<Coords>,
    pub steps: Vec<StepEntry>,
    pub checks: ConstructChecks,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepEntry {
    pub level: usize,
    pub frame: Vec<Coords>,
    pub centroid: Coords,
    pub chord: [Coords; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_normal: Option<Coords>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub midpoint_chord: Option<[Coords; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructChecks {
    pub centroid_at_origin: bool,
    pub on_sphere: bool,
    pub general_position: bool,
    pub ag_quasiregular: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub trials: usize,
    pub instances: Vec<TrialEntry>,
    /// Fingerprints of instances with a self-disagreeing report or a failed
    /// duality bridge.
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialEntry {
    pub index: usize,
    /// `scene`, `planted` or `negative`.
    pub branch: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub fingerprint: String,
    pub simplex: Vec<Coords>,
    pub reports: Vec<ReportEntry>,
    /// Planted instances of the first and third theorems against the dual
    /// pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bridge: Option<bool>,
    /// Planted: the targeted report is all true. Negative: all reports are
    /// all false.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub theorem: String,
    pub mode: String,
    pub fingerprint: String,
    pub agreement: bool,
    pub verdicts: Vec<VerdictEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub label: String,
    pub holds: bool,
}
