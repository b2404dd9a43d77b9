//! Tristram–Levine signatures at rational unit directions, the signature
//! step function of a knot, and the phase law tying signatures to the
//! potential function.
//!
//! A direction `(a, b)` stands for `psi = (a + bi) / |a + bi|`. The form
//! evaluated is `(a - bi) V + (a + bi) V^T`, a positive multiple of
//! `conj(psi) V + psi V^T`. Since the parameter only enters through
//! `-psi^2`, directions are normalized to `Re psi >= 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gauss::GaussInt;
use crate::goeritz::SignatureNullity;
use crate::matrix::{hermitian_inertia, GaussMatrix, IntMatrix};
use crate::poly::{potential_bundle, potential_omega};
use crate::realroots::{isolate_roots, QPoly};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignatureError {
    ZeroDirection,
    /// The Seifert form is not that of a knot.
    NotAKnot,
    /// `Omega(i psi) = 0`: `psi` is a jump point.
    OmegaVanishes,
}

impl fmt::Display for SignatureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureError::ZeroDirection => f.write_str("direction (0, 0) is not on the unit circle"),
            SignatureError::NotAKnot => f.write_str("signature function requires a knot (V - V^T unimodular)"),
            SignatureError::OmegaVanishes => f.write_str("potential function vanishes at i*psi"),
        }
    }
}

/// A rational direction on the unit circle, gcd-reduced with `a > 0`, or
/// `a = 0` and `b > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnitDirection {
    pub a: i64,
    pub b: i64,
}

impl UnitDirection {
    pub fn new(a: i64, b: i64) -> Result<Self, SignatureError> {
        if a == 0 && b == 0 {
            return Err(SignatureError::ZeroDirection);
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / g, b / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        Ok(UnitDirection { a, b })
    }

    /// `psi = 1`.
    pub fn one() -> Self {
        UnitDirection { a: 1, b: 0 }
    }

    /// `psi = i`.
    pub fn i() -> Self {
        UnitDirection { a: 0, b: 1 }
    }

    pub fn conj(self) -> Self {
        UnitDirection::new(self.a, -self.b).expect("nonzero")
    }

    /// `(Re psi)^2 = a^2 / (a^2 + b^2)`.
    pub fn re_squared(&self) -> BigRational {
        let (a, b) = (BigInt::from(self.a), BigInt::from(self.b));
        BigRational::new(&a * &a, &a * &a + &b * &b)
    }
}

/// `(a - bi) V + (a + bi) V^T`.
pub fn tristram_levine_form(v: &IntMatrix, psi: UnitDirection) -> GaussMatrix {
    let w = GaussInt::new(psi.a, -psi.b);
    let wc = w.conj();
    GaussMatrix::from_fn(v.dim(), |i, j| {
        let x = w.mul_int(v.get(i, j));
        let y = wc.mul_int(v.get(j, i));
        GaussInt::new(&x.re + &y.re, &x.im + &y.im)
    })
}

/// Signature and nullity of the Tristram–Levine form at `psi`.
pub fn tl_signature(v: &IntMatrix, psi: UnitDirection) -> SignatureNullity {
    let inr = hermitian_inertia(&tristram_levine_form(v, psi)).expect("the form is Hermitian by construction");
    SignatureNullity { sigma: inr.signature(), nullity: inr.nullity() }
}

/// Signature of `V + V^T`.
pub fn classical_signature(v: &IntMatrix) -> i64 {
    tl_signature(v, UnitDirection::one()).sigma
}

/// `r^n Omega(i psi)` with `r = |a + bi|` and `n = dim V`, an exact
/// Gaussian integer with the same phase as `Omega(i psi)`.
pub fn scaled_omega_at(v: &IntMatrix, psi: UnitDirection) -> GaussInt {
    let omega = potential_omega(v);
    let n = v.dim() as i64;
    let g = GaussInt::new(psi.a, psi.b);
    let r2 = BigInt::from(psi.a * psi.a + psi.b * psi.b);
    let mut out = GaussInt::new(0, 0);
    for (k, c) in omega.terms() {
        // degrees share the parity of n and lie in [-n, n]
        let m = k.unsigned_abs() as u32;
        let base = if k >= 0 { GaussInt::i_pow(k).mul(&g.pow(m)) } else { GaussInt::i_pow(k).mul(&g.conj().pow(m)) };
        let scale = r2.pow(((n - m as i64) / 2) as u32) * c;
        let t = base.mul_int(&scale);
        out = GaussInt::new(&out.re + &t.re, &out.im + &t.im);
    }
    out
}

/// Whether `i^sigma_psi` is the phase of `Omega(i psi)`.
pub fn phase_consistency(v: &IntMatrix, psi: UnitDirection) -> Result<bool, SignatureError> {
    let w = scaled_omega_at(v, psi);
    if w.re.is_zero() && w.im.is_zero() {
        return Err(SignatureError::OmegaVanishes);
    }
    let sigma = tl_signature(v, psi).sigma;
    Ok(w.phase_quarter() == Some(sigma.rem_euclid(4) as u8))
}

/// Value of the signature function at a jump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JumpValue {
    /// Average of the neighbouring values, at a simple root.
    Exact(i64),
    /// Only bracketed by its neighbours (multiple root).
    Between { min: i64, max: i64 },
}

/// A jump location: the root of `poly` (ascending coefficients in
/// `u = (Re psi)^2`) isolated in `[u_lo, u_hi]`, with rational bounds
/// `re_lo <= Re psi <= re_hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jump {
    pub poly: Vec<BigInt>,
    pub u_lo: BigRational,
    pub u_hi: BigRational,
    pub re_lo: BigRational,
    pub re_hi: BigRational,
    pub multiplicity: usize,
}

/// Signature of a knot as a step function of `Re psi` in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureFunction {
    pub jumps: Vec<Jump>,
    /// Values on the open intervals between jumps, left to right; one
    /// more entry than `jumps`.
    pub interval_values: Vec<i64>,
    pub jump_values: Vec<JumpValue>,
    /// Rational directions at which the interval values were sampled.
    pub samples: Vec<UnitDirection>,
    /// Value at `psi = 1`.
    pub classical: i64,
}

impl SignatureFunction {
    /// Value at a rational direction away from the jumps, read off the
    /// step function.
    pub fn value_at(&self, psi: UnitDirection) -> Option<i64> {
        let u = psi.re_squared();
        if u.is_zero() {
            return Some(0);
        }
        if u.is_one() {
            return Some(self.classical);
        }
        let mut k = 0;
        for j in &self.jumps {
            if u > j.u_hi {
                k += 1;
            } else if u >= j.u_lo {
                return None;
            }
        }
        Some(self.interval_values[k])
    }
}

/// `u`-polynomial `sum_j c_2j (-4u)^j` from the Conway coefficients.
fn jump_polynomial(conway: &crate::laurent::LaurentPoly) -> Vec<BigInt> {
    let deg = conway.max_degree().unwrap_or(0).max(0) as usize;
    let mut q = vec![BigInt::zero(); deg / 2 + 1];
    let mut p4 = BigInt::one();
    for (j, qj) in q.iter_mut().enumerate() {
        *qj = conway.coeff(2 * j as i64) * &p4;
        p4 *= -4;
    }
    while q.len() > 1 && q.last().unwrap().is_zero() {
        q.pop();
    }
    q
}

/// A rational direction with `lo < (Re psi)^2 < hi`, `0 <= lo < hi <= 1`.
fn direction_between(lo: &BigRational, hi: &BigRational) -> UnitDirection {
    let (lp, lq) = (lo.numer().clone(), lo.denom().clone());
    let mut b = BigInt::one();
    loop {
        // least a with a^2 (1 - lo) > lo b^2
        let v = (&lp * &b * &b).div_floor(&(&lq - &lp).max(BigInt::one()));
        let a = v.sqrt() + BigInt::one();
        let u = BigRational::new(&a * &a, &a * &a + &b * &b);
        if &u > lo && &u < hi {
            use num_traits::ToPrimitive;
            if let (Some(a), Some(b)) = (a.to_i64(), b.to_i64()) {
                return UnitDirection::new(a, b).expect("nonzero");
            }
        }
        b *= 2;
    }
}

/// Rational bounds on `sqrt(x)` for `x` in `[0, 1]`, denominator `2^32`.
fn sqrt_bounds(lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let den = BigInt::one() << 32u32;
    let den2 = &den * &den;
    let l = (lo * BigRational::from_integer(den2.clone())).floor().to_integer().sqrt();
    let h = (hi * BigRational::from_integer(den2)).ceil().to_integer().sqrt() + BigInt::one();
    (BigRational::new(l, den.clone()), BigRational::new(h, den))
}

/// The signature function of a knot.
pub fn signature_function(v: &IntMatrix) -> Result<SignatureFunction, SignatureError> {
    let skew = v.sub(&v.transpose());
    if v.dim() % 2 == 1 || skew.det_bareiss().abs() != BigInt::one() {
        return Err(SignatureError::NotAKnot);
    }
    let conway = potential_bundle(v).expect("Seifert matrices have a Conway polynomial").conway.poly;
    let q = jump_polynomial(&conway);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 20));
    let roots = isolate_roots(&QPoly::from_ints(&q), &zero, &one, &width);
    let mut bounds = vec![zero.clone()];
    for r in &roots {
        bounds.push(r.lo.clone());
        bounds.push(r.hi.clone());
    }
    bounds.push(one.clone());
    let mut samples = Vec::new();
    let mut interval_values = Vec::new();
    for k in 0..=roots.len() {
        let psi = direction_between(&bounds[2 * k], &bounds[2 * k + 1]);
        interval_values.push(tl_signature(v, psi).sigma);
        samples.push(psi);
    }
    let mut jumps = Vec::new();
    let mut jump_values = Vec::new();
    for (k, r) in roots.iter().enumerate() {
        let (l, h) = (interval_values[k], interval_values[k + 1]);
        jump_values.push(if r.multiplicity == 1 && (l + h) % 2 == 0 {
            JumpValue::Exact((l + h) / 2)
        } else {
            JumpValue::Between { min: l.min(h), max: l.max(h) }
        });
        let (re_lo, re_hi) = sqrt_bounds(&r.lo, &r.hi);
        jumps.push(Jump { poly: q.clone(), u_lo: r.lo.clone(), u_hi: r.hi.clone(), re_lo, re_hi, multiplicity: r.multiplicity });
    }
    Ok(SignatureFunction { jumps, interval_values, jump_values, samples, classical: classical_signature(v) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroots::rat;

    fn trefoil() -> IntMatrix {
        IntMatrix::from_i64(&[&[-1, 0], &[1, -1]])
    }

    fn fig8() -> IntMatrix {
        IntMatrix::from_i64(&[&[1, -1], &[0, -1]])
    }

    #[test]
    fn directions_normalize() {
        assert_eq!(UnitDirection::new(-2, -4).unwrap(), UnitDirection { a: 1, b: 2 });
        assert_eq!(UnitDirection::new(0, -3).unwrap(), UnitDirection::i());
        assert_eq!(UnitDirection::new(0, 0), Err(SignatureError::ZeroDirection));
    }

    #[test]
    fn pointwise_signatures() {
        assert_eq!(classical_signature(&trefoil()), -2);
        assert_eq!(tl_signature(&trefoil(), UnitDirection::i()).sigma, 0);
        for (a, b) in [(1, 0), (1, 1), (1, 5), (3, 1), (0, 1)] {
            assert_eq!(tl_signature(&fig8(), UnitDirection::new(a, b).unwrap()).sigma, 0);
        }
        assert_eq!(scaled_omega_at(&trefoil(), UnitDirection::one()), GaussInt::new(-3, 0));
        assert_eq!(phase_consistency(&trefoil(), UnitDirection::one()), Ok(true));
    }

    #[test]
    fn trefoil_step_function() {
        let f = signature_function(&trefoil()).unwrap();
        assert_eq!(f.interval_values, vec![0, -2]);
        assert_eq!(f.jump_values, vec![JumpValue::Exact(-1)]);
        let j = &f.jumps[0];
        assert!(j.u_lo <= rat(1, 4) && rat(1, 4) <= j.u_hi);
        assert!(j.re_lo <= rat(1, 2) && rat(1, 2) <= j.re_hi);
        assert_eq!(signature_function(&fig8()).unwrap().jumps.len(), 0);
        let link = IntMatrix::from_i64(&[&[-1]]);
        assert_eq!(signature_function(&link), Err(SignatureError::NotAKnot));
    }
}
