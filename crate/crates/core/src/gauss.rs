//! Gaussian integers and the cyclotomic ring of eighth roots of unity.

use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::ring::Ring;

/// An element `re + im*i` of Z[i].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn from_int(re: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: BigInt::zero() }
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `Some(k)` when `self = r * i^k` for a positive integer `r`.
    pub fn phase_quarter(&self) -> Option<u8> {
        match (self.re.sign(), self.im.sign()) {
            (num_bigint::Sign::Plus, num_bigint::Sign::NoSign) => Some(0),
            (num_bigint::Sign::NoSign, num_bigint::Sign::Plus) => Some(1),
            (num_bigint::Sign::Minus, num_bigint::Sign::NoSign) => Some(2),
            (num_bigint::Sign::NoSign, num_bigint::Sign::Minus) => Some(3),
            _ => None,
        }
    }

    /// Modulus when `self` lies on a coordinate axis.
    pub fn axis_abs(&self) -> Option<BigInt> {
        if self.im.is_zero() {
            Some(self.re.abs())
        } else if self.re.is_zero() {
            Some(self.im.abs())
        } else {
            None
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        GaussInt { re: &self.re * k, im: &self.im * k }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussInt::one_elt();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Ring for GaussInt {
    fn zero_elt() -> Self {
        GaussInt::new(0, 0)
    }
    fn one_elt() -> Self {
        GaussInt::new(1, 0)
    }
    fn add(&self, o: &Self) -> Self {
        GaussInt { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        GaussInt { re: -&self.re, im: -&self.im }
    }
    fn is_zero_elt(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Element `c0 + c1 w + c2 w^2 + c3 w^3` of Z[w] with `w^4 = -1`.
///
/// The generator is fixed as `w = e^{-i pi/4}`, so `w^2 = -i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zeta8(pub [BigInt; 4]);

impl Zeta8 {
    /// `w^k` for any integer `k`.
    pub fn w_pow(k: i64) -> Self {
        let r = k.rem_euclid(8);
        let mut c = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        if r < 4 {
            c[r as usize] = BigInt::from(1);
        } else {
            c[(r - 4) as usize] = BigInt::from(-1);
        }
        Zeta8(c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Zeta8([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k, &self.0[3] * k])
    }

    /// Projection to Z[i] when the odd-power part vanishes.
    pub fn to_gauss(&self) -> Option<GaussInt> {
        if self.0[1].is_zero() && self.0[3].is_zero() {
            // w^2 = -i
            Some(GaussInt { re: self.0[0].clone(), im: -&self.0[2] })
        } else {
            None
        }
    }
}

impl Ring for Zeta8 {
    fn zero_elt() -> Self {
        Zeta8::w_pow(0).scale(&BigInt::zero())
    }
    fn one_elt() -> Self {
        Zeta8::w_pow(0)
    }
    fn add(&self, o: &Self) -> Self {
        Zeta8([
            &self.0[0] + &o.0[0],
            &self.0[1] + &o.0[1],
            &self.0[2] + &o.0[2],
            &self.0[3] + &o.0[3],
        ])
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let mut c = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
        for i in 0..4 {
            for j in 0..4 {
                let p = &self.0[i] * &o.0[j];
                if i + j < 4 {
                    c[i + j] += p;
                } else {
                    c[i + j - 4] -= p;
                }
            }
        }
        Zeta8(c)
    }
    fn neg(&self) -> Self {
        Zeta8([-&self.0[0], -&self.0[1], -&self.0[2], -&self.0[3]])
    }
    fn is_zero_elt(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}
