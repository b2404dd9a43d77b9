//! Quasi-alternating crossings and certificates, the determinant and
//! signature criterion for a crossing, and the pretzel classification.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagram::{LinkDiagram, Smoothing};
use crate::goeritz::{link_determinant, signature_and_nullity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QaError {
    UnknownCrossing(usize),
    /// A smoothing has determinant zero, so the criterion does not apply.
    ZeroChildDeterminant,
    InvalidParameter(&'static str),
}

impl fmt::Display for QaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QaError::UnknownCrossing(p) => write!(f, "no crossing {}", p),
            QaError::ZeroChildDeterminant => f.write_str("a smoothing has zero determinant"),
            QaError::InvalidParameter(m) => write!(f, "invalid parameter: {}", m),
        }
    }
}

/// `|Det|` of a diagram.
pub fn abs_det(d: &LinkDiagram) -> BigInt {
    let g = link_determinant(d);
    g.axis_abs().expect("link determinants lie on an axis")
}

/// The two smoothings at `p`: `(L0, L_inf)` with `L0` the oriented one.
fn smoothings(d: &LinkDiagram, p: usize) -> Result<(LinkDiagram, LinkDiagram), QaError> {
    if p >= d.crossing_count() {
        return Err(QaError::UnknownCrossing(p));
    }
    let (z, inf) = if d.sign(p) > 0 { (Smoothing::Zero, Smoothing::Infinity) } else { (Smoothing::Infinity, Smoothing::Zero) };
    Ok((d.smooth(p, z).expect("crossing exists"), d.smooth(p, inf).expect("crossing exists")))
}

/// Determinant triple at a crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingDets {
    pub whole: BigInt,
    pub zero: BigInt,
    pub infinity: BigInt,
}

impl CrossingDets {
    /// Additivity with both children nonzero.
    pub fn is_qa(&self) -> bool {
        !self.zero.is_zero() && !self.infinity.is_zero() && self.whole == &self.zero + &self.infinity
    }
}

/// `|Det|` of the diagram and of both smoothings at `p`.
pub fn crossing_dets(d: &LinkDiagram, p: usize) -> Result<CrossingDets, QaError> {
    let (l0, linf) = smoothings(d, p)?;
    Ok(CrossingDets { whole: abs_det(d), zero: abs_det(&l0), infinity: abs_det(&linf) })
}

/// Whether `p` is a quasi-alternating crossing, with the determinants.
pub fn is_qa_crossing(d: &LinkDiagram, p: usize) -> Result<(bool, CrossingDets), QaError> {
    let dets = crossing_dets(d, p)?;
    Ok((dets.is_qa(), dets))
}

/// A resolving tree whose internal nodes are quasi-alternating crossings
/// and whose leaves are crossingless unknots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QaCertificate {
    Leaf {
        pd: String,
    },
    Node {
        /// PD code of the reduced diagram at this node.
        pd: String,
        crossing: usize,
        dets: CrossingDets,
        zero: Box<QaCertificate>,
        infinity: Box<QaCertificate>,
    },
}

impl QaCertificate {
    pub fn depth(&self) -> usize {
        match self {
            QaCertificate::Leaf { .. } => 0,
            QaCertificate::Node { zero, infinity, .. } => 1 + zero.depth().max(infinity.depth()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            QaCertificate::Leaf { .. } => 1,
            QaCertificate::Node { zero, infinity, .. } => zero.leaf_count() + infinity.leaf_count(),
        }
    }

    /// Checks additivity at every node and that leaves are unknots.
    pub fn verify(&self) -> bool {
        match self {
            QaCertificate::Leaf { pd } => {
                crate::diagram::parse_pd(pd).is_ok_and(|d| d.crossing_count() == 0 && d.component_count() == 1)
            }
            QaCertificate::Node { dets, zero, infinity, .. } => dets.is_qa() && zero.verify() && infinity.verify(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QaStatus {
    Certified,
    /// No certificate found within the budgets; says nothing either way.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QaReport {
    pub status: QaStatus,
    pub certificate: Option<QaCertificate>,
    pub det: BigInt,
    /// Depth of the certificate found.
    pub qacti_upper: Option<usize>,
    /// `ceil(log2 |Det|)`.
    pub qacti_lower: usize,
    /// `|Det| - 1`.
    pub det_bound_upper: BigInt,
    pub nodes_explored: usize,
    pub budget_exhausted: bool,
}

fn ceil_log2(x: &BigInt) -> usize {
    if x <= &BigInt::one() {
        return 0;
    }
    let y: BigInt = x - 1;
    y.bits() as usize
}

struct Search {
    node_budget: usize,
    nodes: usize,
    exhausted: bool,
    /// Largest depth known to admit no certificate, per reduced diagram.
    failed: BTreeMap<String, usize>,
    found: BTreeMap<String, QaCertificate>,
}

impl Search {
    fn certify(&mut self, d: &LinkDiagram, k: usize) -> Option<QaCertificate> {
        let pd = d.to_pd_string();
        if d.crossing_count() == 0 {
            return (d.component_count() == 1).then_some(QaCertificate::Leaf { pd });
        }
        if let Some(c) = self.found.get(&pd) {
            if c.depth() <= k {
                return Some(c.clone());
            }
        }
        if k == 0 || self.failed.get(&pd).is_some_and(|&f| f >= k) || self.exhausted {
            return None;
        }
        if self.nodes >= self.node_budget {
            self.exhausted = true;
            return None;
        }
        self.nodes += 1;
        let whole = abs_det(d);
        if whole.is_zero() || ceil_log2(&whole) > k {
            self.failed.insert(pd, k);
            return None;
        }
        // quasi-alternating crossings, most balanced first
        let mut options = Vec::new();
        for p in 0..d.crossing_count() {
            let (l0, linf) = smoothings(d, p).expect("crossing exists");
            let (l0, linf) = (l0.simplify(), linf.simplify());
            let dets = CrossingDets { whole: whole.clone(), zero: abs_det(&l0), infinity: abs_det(&linf) };
            if dets.is_qa() {
                let balance = (&dets.zero - &dets.infinity).abs();
                options.push((balance, p, dets, l0, linf));
            }
        }
        options.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        for (_, p, dets, l0, linf) in options {
            let Some(c0) = self.certify(&l0, k - 1) else { continue };
            let Some(c1) = self.certify(&linf, k - 1) else { continue };
            let cert = QaCertificate::Node { pd: pd.clone(), crossing: p, dets, zero: Box::new(c0), infinity: Box::new(c1) };
            self.found.insert(pd, cert.clone());
            return Some(cert);
        }
        if !self.exhausted {
            self.failed.insert(pd, k);
        }
        None
    }
}

/// Searches for a quasi-alternating certificate of depth at most
/// `depth_budget`, expanding at most `node_budget` diagrams. Returns the
/// shallowest certificate reachable by smoothing and reduction.
pub fn qa_certify(d: &LinkDiagram, depth_budget: usize, node_budget: usize) -> Result<QaReport, QaError> {
    if node_budget == 0 {
        return Err(QaError::InvalidParameter("node budget must be positive"));
    }
    let d = d.simplify();
    let det = abs_det(&d);
    let mut search = Search { node_budget, nodes: 0, exhausted: false, failed: BTreeMap::new(), found: BTreeMap::new() };
    let mut certificate = None;
    for k in 0..=depth_budget {
        if let Some(c) = search.certify(&d, k) {
            certificate = Some(c);
            break;
        }
        if search.exhausted {
            break;
        }
    }
    let det_bound_upper = if det.is_zero() { BigInt::zero() } else { &det - 1 };
    Ok(QaReport {
        status: if certificate.is_some() { QaStatus::Certified } else { QaStatus::Unknown },
        qacti_upper: certificate.as_ref().map(|c| c.depth()),
        certificate,
        qacti_lower: ceil_log2(&det),
        det_bound_upper,
        det,
        nodes_explored: search.nodes,
        budget_exhausted: search.exhausted,
    })
}

/// Both sides of the determinant/signature criterion at one crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingCriterion {
    pub sign: i8,
    pub dets: CrossingDets,
    pub sigma: i64,
    pub sigma_zero: i64,
    pub sigma_infinity: i64,
    pub writhe_zero: i64,
    pub writhe_infinity: i64,
    /// `|Det L| = |Det L0| + |Det L_inf|`.
    pub a_holds: bool,
    /// `sigma = sigma_0 - sign` and `sigma = sigma_inf - (w_0 - w_inf)/2`.
    /// The second equation is the same for both crossing signs, as the
    /// mirror image shows.
    pub b_holds: bool,
}

/// Evaluates the additivity condition and the signature condition at `p`.
pub fn crossing_criterion(d: &LinkDiagram, p: usize) -> Result<CrossingCriterion, QaError> {
    let (l0, linf) = smoothings(d, p)?;
    let dets = CrossingDets { whole: abs_det(d), zero: abs_det(&l0), infinity: abs_det(&linf) };
    if dets.zero.is_zero() || dets.infinity.is_zero() {
        return Err(QaError::ZeroChildDeterminant);
    }
    let sign = d.sign(p);
    let sigma = signature_and_nullity(d).sigma;
    let sigma_zero = signature_and_nullity(&l0).sigma;
    let sigma_infinity = signature_and_nullity(&linf).sigma;
    let (writhe_zero, writhe_infinity) = (l0.writhe(), linf.writhe());
    let e = sign as i64;
    let half = writhe_zero - writhe_infinity;
    let b_holds = sigma == sigma_zero - e && 2 * sigma == 2 * sigma_infinity - half;
    let a_holds = dets.whole == &dets.zero + &dets.infinity;
    Ok(CrossingCriterion { sign, dets, sigma, sigma_zero, sigma_infinity, writhe_zero, writhe_infinity, a_holds, b_holds })
}

/// Classification of quasi-alternating pretzel links
/// `P(1,...,1, p_1,...,p_n, -q_1,...,-q_m)` with `e` ones, `p_i >= 2` and
/// `q_j >= 3`. With no unit columns the mirror image swaps the roles of the
/// two lists, and both readings are accepted.
pub fn pretzel_qa_expected(e: usize, p: &[u64], q: &[u64]) -> Result<bool, QaError> {
    if p.iter().any(|&x| x < 2) {
        return Err(QaError::InvalidParameter("positive columns must be at least 2"));
    }
    if q.iter().any(|&x| x < 3) {
        return Err(QaError::InvalidParameter("negative columns must be at least 3 in absolute value"));
    }
    if e + p.len() + q.len() == 0 {
        return Err(QaError::InvalidParameter("at least one column"));
    }
    let holds = |p: &[u64], q: &[u64]| {
        let (n, m) = (p.len(), q.len());
        let min = |xs: &[u64]| xs.iter().copied().min();
        e >= m
            || (m >= 1 && e == m - 1 && e > 0)
            || (e == 0 && n == 1 && min(q).is_some_and(|mq| p[0] > mq))
            || (e == 0 && m == 1 && min(p).is_some_and(|mp| q[0] > mp))
    };
    Ok(holds(p, q) || (e == 0 && holds(q, p)))
}
