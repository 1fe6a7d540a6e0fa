//! Cheap algebra invariants of `V_q^+` used to compare `(r, s)` with
//! `(r, s*)`. Equal fingerprints are necessary for an isomorphism, not
//! sufficient.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::factor::factor_over_q;
use super::sturm::sturm_real_roots;
use crate::arith::Integer;
use crate::error::{Error, Result};
use crate::riley::chi_via_w;
use crate::twobridge::Params;

/// Trial-division limit for stripping square factors from discriminants.
const SMALL_PRIME_LIMIT: u32 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FactorPrint {
    pub degree: usize,
    pub real_roots: usize,
    /// The discriminant with square factors `d^2`, `d < 100000`, removed,
    /// and a remaining perfect-square cofactor replaced by 1.
    pub disc_class: Integer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub params: Params,
    pub factors: Vec<FactorPrint>,
}

/// Removes square factors `d^2` with `d` below the trial-division limit;
/// if what remains of the large part is itself a square, drops it as well.
pub fn strip_small_squares(n: &Integer) -> Integer {
    if n.is_zero() {
        return Integer::zero();
    }
    let sign = if n.is_negative() {
        -Integer::one()
    } else {
        Integer::one()
    };
    let mut rest = n.abs();
    let mut kept = Integer::one();
    let mut d = 2u32;
    while d < SMALL_PRIME_LIMIT {
        let dd = Integer::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut odd = false;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            odd = !odd;
        }
        if odd {
            kept *= &dd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        rest = Integer::one();
    }
    sign * kept * rest
}

pub fn involution_fingerprint(p: Params) -> Result<Fingerprint> {
    let (_, chi) = chi_via_w(p);
    let fac = factor_over_q(&chi)?;
    let mut factors = Vec::new();
    for (f, m) in &fac.factors {
        let disc = f.discriminant()?;
        if !disc.is_integer() {
            return Err(Error::NonInteger);
        }
        let print = FactorPrint {
            degree: f.degree().unwrap_or(0),
            real_roots: sturm_real_roots(f)?,
            disc_class: strip_small_squares(&disc.to_integer()),
        };
        factors.extend(std::iter::repeat_n(print, *m));
    }
    factors.sort();
    Ok(Fingerprint { params: p, factors })
}

fn is_square(n: &Integer) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

/// Same factor degrees and real-root counts, and discriminants in the same
/// square class factor by factor.
pub fn compare_fingerprints(a: &Fingerprint, b: &Fingerprint) -> bool {
    a.factors.len() == b.factors.len()
        && a.factors.iter().zip(&b.factors).all(|(x, y)| {
            x.degree == y.degree
                && x.real_roots == y.real_roots
                && (x.disc_class == y.disc_class || is_square(&(&x.disc_class * &y.disc_class)))
        })
}
