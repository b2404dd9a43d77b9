//! Exact real-root isolation for integer polynomials via Sturm sequences.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn from_ints(c: &[BigInt]) -> Self {
        let mut p = QPoly(c.iter().map(|x| BigRational::from_integer(x.clone())).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut p = QPoly(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect(),
        );
        p.trim();
        p
    }

    /// Remainder of polynomial division.
    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0[dd].clone();
        if r.len() <= dd {
            return (QPoly(vec![]), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] / &lead;
            if !coef.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k + j] = &r[k + j] - &coef * dj;
                }
            }
            q[k] = coef;
        }
        let mut qp = QPoly(q);
        qp.trim();
        let mut rp = QPoly(r);
        rp.trim();
        (qp, rp)
    }

    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Square-free part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> QPoly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        let neg = QPoly(r.0.iter().map(|c| -c).collect());
        chain.push(neg);
    }
    chain.pop();
    chain
}

fn variations(chain: &[QPoly], x: &BigRational) -> usize {
    let mut n = 0;
    let mut last = 0i8;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// A real root located in `[lo, hi]` (a single point when `lo == hi`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

/// Isolates every root of `p` in the open interval `(a, b)`; intervals are
/// ordered, pairwise disjoint and narrower than `width`.
pub fn isolate_roots(p: &QPoly, a: &BigRational, b: &BigRational, width: &BigRational) -> Vec<IsolatedRoot> {
    if p.degree().is_none_or(|d| d == 0) {
        return vec![];
    }
    let sf = p.squarefree();
    let chain = sturm_chain(&sf);
    let count = |lo: &BigRational, hi: &BigRational| variations(&chain, lo) - variations(&chain, hi);
    let mut out = Vec::new();
    // Work stack of half-open intervals (lo, hi]; the right end is excluded
    // from the top level by checking b separately.
    let mut stack = vec![(a.clone(), b.clone())];
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        let mut k = count(&lo, &hi);
        if hi == *b && sf.eval(&hi).is_zero() {
            k -= 1;
        }
        if k == 0 {
            continue;
        }
        if k == 1 && &hi - &lo < *width && !sf.eval(&hi).is_zero() {
            out.push(IsolatedRoot { lo, hi, multiplicity: 0 });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if sf.eval(&mid).is_zero() {
            out.push(IsolatedRoot { lo: mid.clone(), hi: mid.clone(), multiplicity: 0 });
            // exclude mid from both halves
            let eps = (&hi - &lo) / BigRational::from_integer(BigInt::from(1u64 << 20));
            let mut e = eps;
            while !count(&(&mid - &e), &(&mid + &e)).is_one() || sf.eval(&(&mid - &e)).is_zero() {
                e /= &two;
            }
            stack.push((lo, &mid - &e));
            stack.push((&mid + &e, hi));
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    for r in out.iter_mut() {
        r.multiplicity = multiplicity_in(p, &r.lo, &r.hi);
    }
    out
}

fn multiplicity_in(p: &QPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let mut q = p.clone();
    let mut m = 0;
    loop {
        let has = if lo == hi {
            q.eval(lo).is_zero()
        } else {
            let sf = q.squarefree();
            let ch = sturm_chain(&sf);
            variations(&ch, lo) > variations(&ch, hi)
        };
        if !has {
            return m;
        }
        m += 1;
        q = q.derivative();
        if q.is_zero() {
            return m;
        }
    }
}

/// True when `p` has no root in `[a, b]`.
pub fn no_roots_in_closed(p: &QPoly, a: &BigRational, b: &BigRational) -> bool {
    if p.is_zero() {
        return false;
    }
    if p.eval(a).is_zero() || p.eval(b).is_zero() {
        return false;
    }
    let sf = p.squarefree();
    let ch = sturm_chain(&sf);
    variations(&ch, a) == variations(&ch, b)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> BigRational {
    BigRational::one()
}
