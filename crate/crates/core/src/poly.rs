//! Polynomial invariants: the potential function and Conway/Alexander
//! polynomials from a Seifert matrix, a skein-recursion oracle for the
//! Conway polynomial, the Kauffman bracket, Kauffman states, Traczyk's
//! signature formulas, and closed forms for standard families.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagram::{LinkDiagram, Smoothing};
use crate::gauss::GaussInt;
use crate::graph::SignedPlanarGraph;
use crate::laurent::{LaurentPoly, TaggedPoly, Var};
use crate::matrix::{IntMatrix, Matrix};
use crate::ring::Ring;
use crate::util::UnionFind;

/// Largest diagram the bracket state sum accepts by default.
pub const DEFAULT_BRACKET_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// The potential function is not a polynomial in `x^-1 - x`.
    ZRewrite,
    CapExceeded { crossings: usize, cap: usize },
    /// The bracket value at a primitive eighth root left `Z[i]`.
    NotGaussian,
    NotAlternating,
    NotReduced { crossing: usize },
    Disconnected,
    /// The two signature formulas disagree.
    FormulaMismatch { first: i64, second: i64 },
    InvalidParameter(&'static str),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZRewrite => f.write_str("potential function is not a polynomial in z = x^-1 - x"),
            PolyError::CapExceeded { crossings, cap } => {
                write!(f, "diagram has {} crossings, the state-sum cap is {}", crossings, cap)
            }
            PolyError::NotGaussian => f.write_str("bracket evaluation did not land in Z[i]"),
            PolyError::NotAlternating => f.write_str("diagram is not alternating"),
            PolyError::NotReduced { crossing } => write!(f, "crossing {} is nugatory", crossing),
            PolyError::Disconnected => f.write_str("projection is disconnected"),
            PolyError::FormulaMismatch { first, second } => {
                write!(f, "signature formulas disagree: {} vs {}", first, second)
            }
            PolyError::InvalidParameter(m) => write!(f, "invalid parameter: {}", m),
        }
    }
}

/// `Omega(x)`, `Conway(z)` and `Alexander(t^(1/2))` of one Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialBundle {
    pub omega: TaggedPoly,
    pub conway: TaggedPoly,
    pub alexander: TaggedPoly,
}

/// `det(x V - x^-1 V^T)`.
pub fn potential_omega(v: &IntMatrix) -> LaurentPoly {
    let x = LaurentPoly::monomial(1, 1);
    let xinv = LaurentPoly::monomial(-1, 1);
    let m: Matrix<LaurentPoly> = Matrix::from_fn(v.dim(), |i, j| {
        x.scale(v.get(i, j)).sub(&xinv.scale(v.get(j, i)))
    });
    m.det()
}

/// Rewrites a potential function as a polynomial in `z = x^-1 - x`.
pub fn omega_to_conway(omega: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let z_in_x = LaurentPoly::from_terms([(-1, 1), (1, -1)]);
    let mut rest = omega.clone();
    let mut out = LaurentPoly::new();
    while let Some(d) = rest.max_degree() {
        if d < 0 {
            return Err(PolyError::ZRewrite);
        }
        let c = rest.coeff(d);
        let c = if d % 2 == 0 { c } else { -c };
        rest = rest.sub(&z_in_x.pow(d as u32).scale(&c));
        out.add_term(d, c);
    }
    Ok(out)
}

/// Potential function, Conway and Alexander polynomials of `V`.
pub fn potential_bundle(v: &IntMatrix) -> Result<PotentialBundle, PolyError> {
    let omega = potential_omega(v);
    let conway = omega_to_conway(&omega)?;
    // x = -t^(1/2)
    let alexander = omega.negate_var();
    Ok(PotentialBundle {
        omega: TaggedPoly { var: Var::X, poly: omega },
        conway: TaggedPoly { var: Var::Z, poly: conway },
        alexander: TaggedPoly { var: Var::THalf, poly: alexander },
    })
}

/// `Conway(-2i)`, which equals the link determinant.
pub fn conway_at_minus_two_i(conway: &LaurentPoly) -> GaussInt {
    conway.eval_gauss(&GaussInt::new(0, -2)).expect("Conway polynomials have no negative powers")
}

/// Conway polynomial by skein recursion towards descending diagrams.
///
/// Components are traversed in order from their first edge; at the first
/// crossing met from below the skein relation
/// `C(D+) - C(D-) = z C(D0)` switches it. A descending diagram is an
/// unlink, worth 1 for one component and 0 otherwise.
pub fn conway_via_skein(d: &LinkDiagram) -> LaurentPoly {
    let mut memo = BTreeMap::new();
    skein(&d.simplify(), &mut memo)
}

fn skein(d: &LinkDiagram, memo: &mut BTreeMap<String, LaurentPoly>) -> LaurentPoly {
    if d.crossing_count() == 0 {
        return LaurentPoly::constant(if d.component_count() == 1 { 1 } else { 0 });
    }
    if d.free_loops() > 0 {
        return LaurentPoly::new();
    }
    let key = d.to_pd_string();
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let result = match first_ascending_crossing(d) {
        None => LaurentPoly::constant(if d.component_count() == 1 { 1 } else { 0 }),
        Some(p) => {
            let switched = d.crossing_change(p).expect("crossing exists");
            let smoothed = d.smooth(p, Smoothing::Oriented).expect("crossing exists").simplify();
            let a = skein(&switched, memo);
            let b = skein(&smoothed, memo).shift(1);
            if d.sign(p) > 0 {
                a.add(&b)
            } else {
                a.sub(&b)
            }
        }
    };
    memo.insert(key, result.clone());
    result
}

/// First crossing reached on its under strand when every component is
/// walked in order from its first edge.
fn first_ascending_crossing(d: &LinkDiagram) -> Option<usize> {
    let mut met = vec![false; d.crossing_count()];
    for comp in d.component_edges() {
        for e in comp {
            let (_, h) = d.edge_slots(e).expect("edge exists");
            let p = h / 4;
            if !met[p] {
                met[p] = true;
                if h % 2 == 0 {
                    return Some(p);
                }
            }
        }
    }
    None
}

/// A Kauffman state: `+1` (A-smoothing, joining `a-b` and `c-d`) or `-1`
/// (B-smoothing) at each crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateAssignment(pub Vec<i8>);

/// Named states.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateTag {
    /// Every marker `+1`.
    AllA,
    /// Every marker `-1`.
    AllB,
    /// The Seifert state: `+1` at positive, `-1` at negative crossings.
    Oriented,
}

impl StateAssignment {
    pub fn of(d: &LinkDiagram, tag: StateTag) -> Self {
        StateAssignment(match tag {
            StateTag::AllA => vec![1; d.crossing_count()],
            StateTag::AllB => vec![-1; d.crossing_count()],
            StateTag::Oriented => d.signs().to_vec(),
        })
    }

    /// Sum of the markers.
    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&m| m as i64).sum()
    }
}

/// State graph and circle data of one state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateInfo {
    /// Vertices are state circles, one edge per crossing signed by its
    /// marker.
    pub graph: SignedPlanarGraph,
    pub circle_count: usize,
    /// No edge of the state graph is a loop.
    pub adequate: bool,
}

/// Circle index of every slot and the number of circles (crossingless
/// components included).
pub(crate) fn state_circles(d: &LinkDiagram, markers: &[i8]) -> (Vec<usize>, usize) {
    let n = d.crossing_count();
    let mut uf = UnionFind::new(4 * n);
    for s in 0..4 * n {
        uf.union(s, d.partner(s));
    }
    for (p, &m) in markers.iter().enumerate() {
        let b = 4 * p;
        if m > 0 {
            uf.union(b, b + 1);
            uf.union(b + 2, b + 3);
        } else {
            uf.union(b, b + 3);
            uf.union(b + 1, b + 2);
        }
    }
    let groups = uf.groups();
    let mut circle = vec![0; 4 * n];
    for (i, g) in groups.iter().enumerate() {
        for &s in g {
            circle[s] = i;
        }
    }
    (circle, groups.len() + d.free_loops())
}

pub fn state_tools(d: &LinkDiagram, s: &StateAssignment) -> Result<StateInfo, PolyError> {
    if s.0.len() != d.crossing_count() || s.0.iter().any(|&m| m != 1 && m != -1) {
        return Err(PolyError::InvalidParameter("state must give a +1/-1 marker for every crossing"));
    }
    let (circle, count) = state_circles(d, &s.0);
    let edges: Vec<(usize, usize, i8)> = s
        .0
        .iter()
        .enumerate()
        .map(|(p, &m)| (circle[4 * p], circle[4 * p + if m > 0 { 2 } else { 1 }], m))
        .collect();
    let adequate = edges.iter().all(|&(u, v, _)| u != v);
    Ok(StateInfo { graph: SignedPlanarGraph { vertex_count: count, edges, rotation: None }, circle_count: count, adequate })
}

/// Number of circles of a state.
pub fn circle_count(d: &LinkDiagram, tag: StateTag) -> usize {
    state_circles(d, &StateAssignment::of(d, tag).0).1
}

/// Kauffman bracket `sum_s A^(sum s) (-A^2 - A^-2)^(|D_s| - 1)`,
/// normalized so that the crossingless circle has bracket 1.
pub fn kauffman_bracket(d: &LinkDiagram, cap: usize) -> Result<LaurentPoly, PolyError> {
    let n = d.crossing_count();
    if n > cap || n >= 63 {
        return Err(PolyError::CapExceeded { crossings: n, cap });
    }
    // histogram over (number of B markers, circles)
    let max_circles = 2 * n + d.free_loops() + 1;
    let mut hist = vec![vec![0u64; max_circles + 1]; n + 1];
    let mut markers = vec![1i8; n];
    for bits in 0u64..(1u64 << n) {
        for (p, m) in markers.iter_mut().enumerate() {
            *m = if bits >> p & 1 == 1 { -1 } else { 1 };
        }
        let (_, c) = state_circles(d, &markers);
        hist[bits.count_ones() as usize][c] += 1;
    }
    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut delta_pow = vec![LaurentPoly::constant(1)];
    for k in 1..=max_circles {
        delta_pow.push(delta_pow[k - 1].mul(&delta));
    }
    let mut out = LaurentPoly::new();
    for (b, row) in hist.iter().enumerate() {
        for (c, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let sigma = n as i64 - 2 * b as i64;
            out = out.add(&delta_pow[c - 1].shift(sigma).scale(&BigInt::from(count)));
        }
    }
    Ok(out)
}

/// `A^w <D>` at `A = e^(-i pi/4)` (so `A^2 = -i`), the link determinant.
pub fn determinant_via_bracket(d: &LinkDiagram, cap: usize) -> Result<GaussInt, PolyError> {
    bracket_determinant(&kauffman_bracket(d, cap)?, d.writhe())
}

/// Determinant from an already computed bracket.
pub fn bracket_determinant(bracket: &LaurentPoly, writhe: i64) -> Result<GaussInt, PolyError> {
    bracket.shift(writhe).eval_zeta8().to_gauss().ok_or(PolyError::NotGaussian)
}

/// `(2 + c - |D_{s+}| - |D_{s-}|) / 2` for a connected projection.
pub fn turaev_genus_diagram(d: &LinkDiagram) -> Result<i64, PolyError> {
    if !d.is_connected_projection() {
        return Err(PolyError::Disconnected);
    }
    let c = d.crossing_count() as i64;
    let a = circle_count(d, StateTag::AllA) as i64;
    let b = circle_count(d, StateTag::AllB) as i64;
    Ok((2 + c - a - b) / 2)
}

/// A crossing is nugatory when one face meets it in opposite quadrants.
pub fn nugatory_crossings(d: &LinkDiagram) -> Vec<usize> {
    let Ok(fs) = d.faces() else {
        return Vec::new();
    };
    (0..d.crossing_count())
        .filter(|&p| fs.quadrant_face(p, 0) == fs.quadrant_face(p, 2) || fs.quadrant_face(p, 1) == fs.quadrant_face(p, 3))
        .collect()
}

/// Both sides of Traczyk's signature formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraczykReport {
    pub sigma: i64,
    pub writhe: i64,
    /// Positive and negative edges of a spanning tree of the Seifert graph.
    pub d_plus: i64,
    pub d_minus: i64,
    /// Circles of the all-A and all-B states.
    pub s_plus: i64,
    pub s_minus: i64,
    /// `-w + d+ - d-`.
    pub tree_form: i64,
    /// `-(w - |D_{s+}| + |D_{s-}|) / 2`.
    pub state_form: i64,
}

/// Tree edge counts `(d+, d-)` of the Seifert graph, edges taken in
/// crossing order.
pub fn seifert_tree_signs(d: &LinkDiagram) -> (i64, i64) {
    let (circle, count) = state_circles(d, d.signs());
    let mut uf = UnionFind::new(count);
    let (mut dp, mut dm) = (0, 0);
    for p in 0..d.crossing_count() {
        let other = if d.sign(p) > 0 { 2 } else { 1 };
        if uf.union(circle[4 * p], circle[4 * p + other]) {
            if d.sign(p) > 0 {
                dp += 1;
            } else {
                dm += 1;
            }
        }
    }
    (dp, dm)
}

/// Signature of a reduced alternating connected diagram by both of
/// Traczyk's formulas; errors if they disagree.
pub fn traczyk_signature(d: &LinkDiagram) -> Result<TraczykReport, PolyError> {
    if !d.is_connected_projection() {
        return Err(PolyError::Disconnected);
    }
    if !d.is_alternating() {
        return Err(PolyError::NotAlternating);
    }
    if let Some(&p) = nugatory_crossings(d).first() {
        return Err(PolyError::NotReduced { crossing: p });
    }
    let w = d.writhe();
    let (d_plus, d_minus) = seifert_tree_signs(d);
    let s_plus = circle_count(d, StateTag::AllA) as i64;
    let s_minus = circle_count(d, StateTag::AllB) as i64;
    let tree_form = -w + d_plus - d_minus;
    let twice = -(w - s_plus + s_minus);
    if twice % 2 != 0 || twice / 2 != tree_form {
        return Err(PolyError::FormulaMismatch { first: tree_form, second: twice });
    }
    Ok(TraczykReport { sigma: tree_form, writhe: w, d_plus, d_minus, s_plus, s_minus, tree_form, state_form: twice / 2 })
}

/// Chebyshev polynomial `T_n(q)`: `T_0 = 2`, `T_1 = q`,
/// `T_i = q T_(i-1) - T_(i-2)`.
pub fn chebyshev_t(n: u32, q: &BigRational) -> BigRational {
    chebyshev(n, q, BigRational::from_integer(BigInt::from(2)))
}

/// Chebyshev polynomial `S_n(q)`: `S_0 = 1`, `S_1 = q`, same recursion.
pub fn chebyshev_s(n: u32, q: &BigRational) -> BigRational {
    chebyshev(n, q, BigRational::one())
}

fn chebyshev(n: u32, q: &BigRational, first: BigRational) -> BigRational {
    let (mut a, mut b) = (first, q.clone());
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = q * &b - &a;
        a = b;
        b = c;
    }
    b
}

/// `|Det|` of the Turk's head link: `T_n(3) - 2`.
pub fn turks_head_det(n: u32) -> BigInt {
    let t = chebyshev_t(n, &BigRational::from_integer(BigInt::from(3)));
    t.to_integer() - BigInt::from(2)
}

/// Generalized wheel determinant `b^n (T_n(2 + a/b) - 2)`.
pub fn wheel_det(a: i64, b: i64, n: u32) -> Result<BigRational, PolyError> {
    if b == 0 {
        return Err(PolyError::InvalidParameter("b must be nonzero"));
    }
    let q = BigRational::from_integer(BigInt::from(2)) + BigRational::new(BigInt::from(a), BigInt::from(b));
    let bn = BigRational::from_integer(BigInt::from(b).pow(n));
    Ok(bn * (chebyshev_t(n, &q) - BigRational::from_integer(BigInt::from(2))))
}

/// Conway polynomial of the two-strand torus link with `n >= 0` half
/// twists: `C_0 = 0`, `C_1 = 1`, `C_n = z C_(n-1) + C_(n-2)`.
pub fn torus2_conway(n: u32) -> LaurentPoly {
    let (mut a, mut b) = (LaurentPoly::new(), LaurentPoly::constant(1));
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = b.shift(1).add(&a);
        a = b;
        b = c;
    }
    b
}

/// Conway polynomial of the pretzel link with columns `2k_i + 1`:
/// `sum_j e_j(k) z^j C_(m-j)` with `e_j` elementary symmetric and `C`
/// the torus link polynomials above.
pub fn pretzel_conway(ks: &[i64]) -> Result<LaurentPoly, PolyError> {
    let m = ks.len();
    if m == 0 {
        return Err(PolyError::InvalidParameter("at least one column"));
    }
    // elementary symmetric polynomials e_0..e_m
    let mut e = vec![BigInt::zero(); m + 1];
    e[0] = BigInt::one();
    for &k in ks {
        for j in (1..=m).rev() {
            let prev = e[j - 1].clone();
            e[j] += prev * BigInt::from(k);
        }
    }
    let mut out = LaurentPoly::new();
    for (j, ej) in e.iter().enumerate().take(m) {
        out = out.add(&torus2_conway((m - j) as u32).shift(j as i64).scale(ej));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, torus2, turks_head};

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn potential_of_small_matrices() {
        let tref = IntMatrix::from_i64(&[&[-1, 0], &[1, -1]]);
        assert_eq!(potential_bundle(&tref).unwrap().conway.poly, lp(&[(0, 1), (2, 1)]));
        let fig8 = IntMatrix::from_i64(&[&[1, -1], &[0, -1]]);
        assert_eq!(potential_bundle(&fig8).unwrap().conway.poly, lp(&[(0, 1), (2, -1)]));
        let empty = IntMatrix::from_i64(&[]);
        assert_eq!(potential_bundle(&empty).unwrap().omega.poly, LaurentPoly::constant(1));
        assert_eq!(omega_to_conway(&lp(&[(1, 1)])), Err(PolyError::ZRewrite));
    }

    #[test]
    fn brackets() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unknot(), 24).unwrap(), LaurentPoly::constant(1));
        assert_eq!(kauffman_bracket(&parse_pd("X(2,2,1,1)").unwrap(), 24).unwrap(), lp(&[(3, -1)]));
        assert_eq!(kauffman_bracket(&torus2(3), 24).unwrap(), lp(&[(-7, 1), (-3, -1), (5, -1)]));
        let left = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(kauffman_bracket(&left, 24).unwrap(), lp(&[(7, 1), (3, -1), (-5, -1)]));
        assert_eq!(determinant_via_bracket(&torus2(3), 24).unwrap(), GaussInt::new(-3, 0));
        assert_eq!(determinant_via_bracket(&turks_head(2), 24).unwrap(), GaussInt::new(5, 0));
        assert!(matches!(kauffman_bracket(&torus2(5), 4), Err(PolyError::CapExceeded { .. })));
    }

    #[test]
    fn skein_small_cases() {
        assert_eq!(conway_via_skein(&torus2(3)), lp(&[(0, 1), (2, 1)]));
        assert_eq!(conway_via_skein(&torus2(2)), lp(&[(1, 1)]));
        assert_eq!(conway_via_skein(&LinkDiagram::unlink(2)), LaurentPoly::new());
        assert_eq!(conway_via_skein(&turks_head(2)), lp(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn states_and_traczyk() {
        let t3 = torus2(3);
        assert_eq!(circle_count(&t3, StateTag::AllA), 2);
        assert_eq!(circle_count(&t3, StateTag::AllB), 3);
        let r = traczyk_signature(&t3).unwrap();
        assert_eq!((r.sigma, r.d_plus, r.d_minus), (-2, 1, 0));
        let hopf = torus2(2);
        let info = state_tools(&hopf, &StateAssignment::of(&hopf, StateTag::AllA)).unwrap();
        assert_eq!((info.circle_count, info.adequate), (2, true));
        let kink = parse_pd("X(2,2,1,1)").unwrap();
        let a = state_tools(&kink, &StateAssignment::of(&kink, StateTag::AllA)).unwrap();
        let b = state_tools(&kink, &StateAssignment::of(&kink, StateTag::AllB)).unwrap();
        assert!(!(a.adequate && b.adequate));
        assert_eq!(turaev_genus_diagram(&t3), Ok(0));
        assert_eq!(traczyk_signature(&turks_head(2)).unwrap().sigma, 0);
    }

    #[test]
    fn closed_forms() {
        let dets: Vec<BigInt> = (2..=8).map(turks_head_det).collect();
        let want: Vec<BigInt> = [5, 16, 45, 121, 320, 841, 2205].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(dets, want);
        assert_eq!(chebyshev_t(6, &BigRational::from_integer(BigInt::from(3))), BigRational::from_integer(BigInt::from(322)));
        assert_eq!(torus2_conway(3), lp(&[(0, 1), (2, 1)]));
        assert_eq!(pretzel_conway(&[2, 3, -2]).unwrap(), LaurentPoly::constant(1));
        assert_eq!(pretzel_conway(&[0, 0, 0]).unwrap(), lp(&[(0, 1), (2, 1)]));
        // wheel with a = b = 1 is the Turk's head
        assert_eq!(wheel_det(1, 1, 5).unwrap(), BigRational::from_integer(BigInt::from(121)));
    }
}
