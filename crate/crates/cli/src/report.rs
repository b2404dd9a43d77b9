//! JSON report types. Integers are exact and written as JSON numbers of
//! any length; Gaussian integers are `{re, im}` objects.

use std::str::FromStr;

use knotinv_core::gauss::GaussInt;
use knotinv_core::laurent::{LaurentPoly, Var};
use knotinv_core::matrix::IntMatrix;
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub const SCHEMA: u32 = 1;

/// An arbitrary-precision integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map(Int).map_err(serde::de::Error::custom)
    }
}

impl From<&BigInt> for Int {
    fn from(x: &BigInt) -> Self {
        Int(x.clone())
    }
}

impl From<i64> for Int {
    fn from(x: i64) -> Self {
        Int(BigInt::from(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gauss {
    pub re: Int,
    pub im: Int,
}

impl From<&GaussInt> for Gauss {
    fn from(g: &GaussInt) -> Self {
        Gauss { re: Int(g.re.clone()), im: Int(g.im.clone()) }
    }
}

/// A Laurent polynomial as `[exponent, coefficient]` pairs in ascending
/// order, with a readable rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poly {
    pub var: String,
    pub terms: Vec<(i64, Int)>,
    pub text: String,
}

impl Poly {
    pub fn new(p: &LaurentPoly, var: Var) -> Self {
        Poly {
            var: var.name().to_string(),
            terms: p.to_pairs().iter().map(|(e, c)| (*e, Int(c.clone()))).collect(),
            text: p.render(var.name()),
        }
    }
}

pub fn matrix(m: &IntMatrix) -> Vec<Vec<Int>> {
    m.rows().iter().map(|r| r.iter().map(Int::from).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub format: String,
    pub text: String,
    /// Canonical PD code of the diagram that was analysed.
    pub pd: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub input: InputEcho,
    pub crossings: usize,
    pub components: usize,
    pub writhe: i64,
    pub determinant: Gauss,
    pub det_abs: Int,
    pub signature: i64,
    pub nullity: usize,
    pub conway: Poly,
    pub alexander: Poly,
    /// Omitted above the bracket crossing cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Poly>,
    /// Seifert-surface genus of this diagram; absent for split projections.
    pub genus_diagram: Option<i64>,
    pub seifert_circle_count: Option<usize>,
    pub alternating: bool,
    pub turaev_genus_diagram: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzReport {
    pub schema: u32,
    pub input: InputEcho,
    pub unbounded_face: usize,
    pub white_faces: Vec<usize>,
    pub goeritz: Vec<Vec<Int>>,
    pub goeritz_unreduced: Vec<Vec<Int>>,
    pub crossing_types: Vec<String>,
    pub eta: Vec<i8>,
    pub mu: i64,
    pub beta: usize,
    pub generalized: Vec<Vec<Int>>,
    pub signature: i64,
    pub nullity: usize,
    pub determinant: Gauss,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertReport {
    pub schema: u32,
    pub input: InputEcho,
    pub circles: Vec<Vec<u32>>,
    pub genus_diagram: i64,
    pub matrix: Vec<Vec<Int>>,
    /// Each basis cycle as `[crossing, direction]` steps.
    pub basis: Vec<Vec<(usize, i8)>>,
    pub potential: Poly,
    pub conway: Poly,
    pub alexander: Poly,
    pub signature: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    pub schema: u32,
    pub input: InputEcho,
    pub writhe: i64,
    pub bracket: Poly,
    pub determinant: Gauss,
    pub all_a_circles: usize,
    pub all_b_circles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectionValue {
    pub a: i64,
    pub b: i64,
    pub signature: i64,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpReport {
    /// Bounds on `Re psi` as exact fractions.
    pub re_lo: String,
    pub re_hi: String,
    pub multiplicity: usize,
    /// Value at the jump, or `[min, max]` when only bracketed.
    pub value: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureFunctionReport {
    pub jumps: Vec<JumpReport>,
    pub interval_values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    pub schema: u32,
    pub input: InputEcho,
    pub signature: i64,
    pub nullity: usize,
    pub directions: Vec<DirectionValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub function: Option<SignatureFunctionReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateNode {
    pub pd: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossing: Option<usize>,
    /// `[|Det|, |Det L0|, |Det L_inf|]` at internal nodes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dets: Option<[Int; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CertificateNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaReportJson {
    pub schema: u32,
    pub input: InputEcho,
    pub status: String,
    pub det_abs: Int,
    pub qacti_lower: usize,
    pub qacti_upper: Option<usize>,
    pub det_bound_upper: Int,
    pub nodes_explored: usize,
    pub budget_exhausted: bool,
    pub certificate: Option<CertificateNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub schema: u32,
    pub vertices: usize,
    pub edges: Vec<(usize, usize, i8)>,
    pub rotation: Option<Vec<Vec<usize>>>,
    pub kirchhoff: Vec<Vec<Int>>,
    pub spanning_trees: Int,
    /// Medial diagram, when the graph is connected with a rotation system.
    pub medial_pd: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub schema: u32,
    pub ok: bool,
    pub word: String,
    pub edges: usize,
    pub right_angles: usize,
    pub plane_changes: usize,
    /// Positive and negative step counts per axis, `x` then `y` then `z`.
    pub axis_steps: [(usize, usize); 3],
    pub planar: bool,
    pub area: Option<i64>,
    pub pd: String,
    pub det_abs: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub schema: u32,
    pub word: String,
    pub area: i64,
    pub steps: Vec<ReductionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionEntry {
    #[serde(rename = "move")]
    pub mv: String,
    pub word: String,
    pub area: i64,
}
