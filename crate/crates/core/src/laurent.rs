//! Integer Laurent polynomials in one variable.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::gauss::{GaussInt, Zeta8};
use crate::ring::Ring;

/// Name of the formal variable a polynomial is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Z,
    /// `t^{1/2}`; exponent `k` means `t^{k/2}`.
    THalf,
    A,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Z => "z",
            Var::THalf => "t_half",
            Var::A => "A",
        }
    }
}

/// Sparse Laurent polynomial with arbitrary-precision coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn new() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::new();
        p.add_term(exp, c.into());
        p
    }

    /// Builds from `(exponent, coefficient)` pairs, combining repeats.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::new();
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::new();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Substitutes `v -> -v`.
    pub fn negate_var(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Substitutes `v -> v^{-1}`.
    pub fn invert_var(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::constant(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a Gaussian integer; negative exponents require
    /// a unit argument (`1, i, -1, -i`).
    pub fn eval_gauss(&self, x: &GaussInt) -> Option<GaussInt> {
        let inv = if self.min_degree().is_some_and(|d| d < 0) {
            let n = x.norm();
            if !n.is_one() {
                return None;
            }
            Some(x.conj())
        } else {
            None
        };
        let mut acc = GaussInt::zero_elt();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                x.pow(e as u32)
            } else {
                inv.as_ref().unwrap().pow((-e) as u32)
            };
            acc = acc.add(&p.mul(&GaussInt::from_int(c.clone())));
        }
        Some(acc)
    }

    /// Exact evaluation at `w = e^{-i pi/4}`.
    pub fn eval_zeta8(&self) -> Zeta8 {
        let mut acc = Zeta8::zero_elt();
        for (e, c) in self.terms() {
            acc = acc.add(&Zeta8::w_pow(e).scale(c));
        }
        acc
    }

    /// Human-readable rendering using `var` as the variable name.
    pub fn render(&self, var: &str) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            match *e {
                0 => {
                    let _ = write!(s, "{}", a);
                }
                _ => {
                    if !a.is_one() {
                        let _ = write!(s, "{}*", a);
                    }
                    if *e == 1 {
                        let _ = write!(s, "{}", var);
                    } else {
                        let _ = write!(s, "{}^{}", var, e);
                    }
                }
            }
        }
        s
    }

    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c.clone())).collect()
    }
}

impl Ring for LaurentPoly {
    fn zero_elt() -> Self {
        LaurentPoly::new()
    }
    fn one_elt() -> Self {
        LaurentPoly::constant(1)
    }
    fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in o.terms.iter() {
            r.add_term(*e, c.clone());
        }
        r
    }
    fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in o.terms.iter() {
            r.add_term(*e, -c);
        }
        r
    }
    fn mul(&self, o: &Self) -> Self {
        let mut r = LaurentPoly::new();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in o.terms.iter() {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
    fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    fn is_zero_elt(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("v"))
    }
}

/// A polynomial together with the variable it is written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedPoly {
    pub var: Var,
    pub poly: LaurentPoly,
}

impl fmt::Display for TaggedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.render(self.var.name()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_cancellation() {
        let p = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let q = p.mul(&p);
        assert_eq!(q, LaurentPoly::from_terms([(2, 1), (0, -2), (-2, 1)]));
        assert!(p.sub(&p).is_zero_elt());
        assert_eq!(p.render("x"), "-x^-1 + x");
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_terms([(2, 1), (0, 1)]);
        assert_eq!(p.eval_gauss(&GaussInt::new(0, -2)), Some(GaussInt::new(-3, 0)));
        let q = LaurentPoly::from_terms([(-1, 1)]);
        assert_eq!(q.eval_gauss(&GaussInt::new(0, 1)), Some(GaussInt::new(0, -1)));
        assert_eq!(q.eval_gauss(&GaussInt::new(2, 0)), None);
    }
}
