//! Parameters `(r, s)` and the sign data shared by the algebra and the knot.
//!
//! Everything here is sign arithmetic: the quantum integers `[n]` at
//! `q = exp(i pi s / r)` only ever enter through their signs
//! `eps_n = (-1)^floor(ns/r)`, so quotients of factorials become products
//! of +-1.

use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pair of coprime odd integers `0 < s < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Params {
    r: u32,
    s: u32,
}

impl Params {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidParams { r, s, reason });
        if r < 3 || r % 2 == 0 {
            return bad("r must be an odd integer >= 3");
        }
        if s <= 0 || s >= r {
            return bad("s must satisfy 0 < s < r");
        }
        if s % 2 == 0 {
            return bad("s must be odd");
        }
        if r.gcd(&s) != 1 {
            return bad("r and s must be coprime");
        }
        if r > u32::MAX as i64 {
            return bad("r too large");
        }
        Ok(Params {
            r: r as u32,
            s: s as u32,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Dimension of the even part, `(r - 1) / 2`.
    pub fn dim_plus(&self) -> usize {
        (self.r as usize - 1) / 2
    }

    /// Every valid pair with `r <= r_max`, ordered by `r` then `s`.
    pub fn grid(r_min: u32, r_max: u32) -> Vec<Params> {
        let mut out = Vec::new();
        let mut r = r_min.max(3);
        if r.is_multiple_of(2) {
            r += 1;
        }
        while r <= r_max {
            out.extend(
                (1..r)
                    .step_by(2)
                    .filter_map(|s| Params::new(r as i64, s as i64).ok()),
            );
            r += 2;
        }
        out
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// `eps_1 .. eps_{r-1}` together with the signs of `[n]!`.
///
/// `eps_0 = eps_r = 0` are not stored; [`SignSeq::eps`] returns 0 for any
/// index outside `1..r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSeq {
    params: Params,
    eps: Vec<i8>,
    fact: Vec<i8>,
}

/// Builds the sign sequence `eps_n = (-1)^floor(ns/r)`.
pub fn epsilon_seq(p: Params) -> SignSeq {
    let (r, s) = (p.r as u64, p.s as u64);
    let eps: Vec<i8> = (1..r)
        .map(|n| if (n * s / r) % 2 == 0 { 1 } else { -1 })
        .collect();
    let mut fact = Vec::with_capacity(eps.len() + 1);
    fact.push(1i8);
    for &e in &eps {
        fact.push(fact.last().unwrap() * e);
    }
    SignSeq {
        params: p,
        eps,
        fact,
    }
}

impl SignSeq {
    pub fn params(&self) -> Params {
        self.params
    }

    pub fn r(&self) -> u32 {
        self.params.r
    }

    /// `eps_1 .. eps_{r-1}`.
    pub fn as_slice(&self) -> &[i8] {
        &self.eps
    }

    /// `eps_n`, with 0 outside `1..r`.
    pub fn eps(&self, n: i64) -> i8 {
        if n >= 1 && (n as usize) <= self.eps.len() {
            self.eps[n as usize - 1]
        } else {
            0
        }
    }

    /// Sign of `[n]! = [n][n-1]...[1]`; the empty product is +1.
    pub fn factorial_sign(&self, n: usize) -> Result<i8> {
        self.fact.get(n).copied().ok_or(Error::OutOfRange {
            index: n,
            bound: self.r() as usize,
        })
    }

    /// Sign of `<i, j, k>` for admissible triples, 0 otherwise.
    pub fn triple_sign(&self, i: usize, j: usize, k: usize) -> Result<i8> {
        if !is_admissible(i, j, k, self.r())? {
            return Ok(0);
        }
        Ok(self.triple_sign_admissible(i, j, k))
    }

    pub(crate) fn triple_sign_admissible(&self, i: usize, j: usize, k: usize) -> i8 {
        // i = b + c, j = a + c, k = a + b
        let a = (j + k - i) / 2;
        let b = (i + k - j) / 2;
        let c = (i + j - k) / 2;
        let f = |n: usize| self.fact[n];
        let parity = if (a + b + c).is_multiple_of(2) { 1 } else { -1 };
        parity * f(a + b + c + 1) * f(a) * f(b) * f(c) * f(a + b) * f(a + c) * f(b + c)
    }
}

/// Triangle inequalities, even sum and `i + j + k <= 2r - 4`.
pub fn is_admissible(i: usize, j: usize, k: usize, r: u32) -> Result<bool> {
    let top = r as usize - 2;
    for c in [i, j, k] {
        if c > top {
            return Err(Error::OutOfRange {
                index: c,
                bound: top + 1,
            });
        }
    }
    let sum = i + j + k;
    Ok(
        i <= j + k
            && j <= i + k
            && k <= i + j
            && sum.is_multiple_of(2)
            && sum + 4 <= 2 * r as usize,
    )
}

/// `sum eps_n`, taken as the signature of the knot `K(r, s)`.
pub fn knot_signature(seq: &SignSeq) -> i64 {
    seq.eps.iter().map(|&e| e as i64).sum()
}

/// Inverse of `s` modulo `r`, with a flag telling whether it is odd (and so
/// a valid parameter on its own).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SStar {
    pub inverse: u32,
    pub params: Option<Params>,
}

impl SStar {
    pub fn is_odd(&self) -> bool {
        self.inverse % 2 == 1
    }
}

pub fn s_star(p: Params) -> SStar {
    let (r, s) = (p.r as i64, p.s as i64);
    let ext = s.extended_gcd(&r);
    let inverse = ext.x.rem_euclid(r);
    SStar {
        inverse: inverse as u32,
        params: Params::new(r, inverse).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(r: i64, s: i64) -> SignSeq {
        epsilon_seq(Params::new(r, s).unwrap())
    }

    #[test]
    fn rejects_bad_params() {
        assert!(Params::new(4, 2).is_err());
        assert!(Params::new(9, 3).is_err());
        assert!(Params::new(7, 2).is_err());
        assert!(Params::new(7, 7).is_err());
        assert!(Params::new(1, 1).is_err());
        assert!(Params::new(3, 1).is_ok());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(seq(5, 1).as_slice(), &[1, 1, 1, 1]);
        assert_eq!(seq(5, 3).as_slice(), &[1, -1, -1, 1]);
        assert_eq!(seq(7, 3).as_slice(), &[1, 1, -1, -1, 1, 1]);
        let s = seq(7, 3);
        assert_eq!((s.eps(0), s.eps(7), s.eps(-1)), (0, 0, 0));
    }

    #[test]
    fn factorial_sign_examples() {
        let s = seq(5, 3);
        assert_eq!(s.factorial_sign(0).unwrap(), 1);
        assert_eq!(s.factorial_sign(3).unwrap(), 1);
        assert_eq!(s.factorial_sign(2).unwrap(), -1);
        assert!(s.factorial_sign(5).is_err());
        let t = seq(5, 1);
        assert!((0..5).all(|n| t.factorial_sign(n).unwrap() == 1));
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(0, 0, 0, 5).unwrap());
        assert!(!is_admissible(1, 1, 1, 5).unwrap());
        assert!(!is_admissible(3, 3, 3, 5).unwrap());
        assert!(is_admissible(2, 2, 2, 5).unwrap());
        assert!(!is_admissible(3, 3, 2, 5).unwrap()); // sum 8 > 2r - 4
        assert!(!is_admissible(0, 1, 3, 7).unwrap()); // triangle
        assert!(is_admissible(4, 0, 0, 5).is_err());
    }

    /// Direct evaluation of the factorial-quotient sign with every factor
    /// spelled out, for comparison with the packed implementation.
    fn triple_sign_oracle(s: &SignSeq, i: usize, j: usize, k: usize) -> i8 {
        if !is_admissible(i, j, k, s.r()).unwrap() {
            return 0;
        }
        let a = (j + k - i) / 2;
        let b = (i + k - j) / 2;
        let c = (i + j - k) / 2;
        let fs = |n: usize| -> i8 { (1..=n).map(|m| s.eps(m as i64)).product() };
        let num = fs(a + b + c + 1) * fs(a) * fs(b) * fs(c);
        let den = fs(a + b) * fs(a + c) * fs(b + c);
        let parity = if (a + b + c).is_multiple_of(2) { 1 } else { -1 };
        // den is +-1, so dividing equals multiplying
        parity * num / den
    }

    #[test]
    fn triple_sign_examples() {
        let s = seq(5, 3);
        assert_eq!(s.triple_sign(0, 0, 0).unwrap(), 1);
        // a = b = c = 1: (-1)^3 f(4) f(1)^3 / f(2)^3 = (-1)(1)/(-1) with f = (1, 1, -1, 1, 1)
        assert_eq!(triple_sign_oracle(&s, 2, 2, 2), 1);
        assert_eq!(s.triple_sign(2, 2, 2).unwrap(), 1);
        assert_eq!(s.triple_sign(1, 1, 1).unwrap(), 0);
        for (r, sv) in [(5, 3), (7, 3), (11, 7), (13, 5)] {
            let s = seq(r, sv);
            let top = r as usize - 2;
            for i in 0..=top {
                for j in 0..=top {
                    for k in 0..=top {
                        assert_eq!(
                            s.triple_sign(i, j, k).unwrap(),
                            triple_sign_oracle(&s, i, j, k)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn knot_signature_examples() {
        assert_eq!(knot_signature(&seq(9, 1)), 8);
        assert_eq!(knot_signature(&seq(5, 3)), 0);
        assert_eq!(knot_signature(&seq(7, 3)), 2);
    }

    #[test]
    fn s_star_examples() {
        let a = s_star(Params::new(5, 3).unwrap());
        assert_eq!(a.inverse, 2);
        assert!(!a.is_odd() && a.params.is_none());
        let b = s_star(Params::new(7, 5).unwrap());
        assert_eq!(b.inverse, 3);
        assert_eq!(b.params, Some(Params::new(7, 3).unwrap()));
        assert_eq!(
            s_star(Params::new(11, 1).unwrap()).params,
            Some(Params::new(11, 1).unwrap())
        );
    }

    #[test]
    fn grid_enumeration() {
        let g: Vec<_> = Params::grid(3, 5).iter().map(|p| (p.r(), p.s())).collect();
        assert_eq!(g, vec![(3, 1), (5, 1), (5, 3)]);
        assert_eq!(Params::grid(3, 23).len(), 58);
    }
}
