//! Routh-Hurwitz with entries in `Q(eps)`.
//!
//! A zero pivot is replaced by the formal variable `eps`, and every later
//! entry is kept as an exact rational function of `eps`. Signs are read as
//! `eps -> 0+`, i.e. from the lowest-order nonzero coefficients.

use num_traits::Zero;

use super::sturm::count_distinct_real_roots;
use crate::arith::{sign_of, RatPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    fn constant(c: Rational) -> Self {
        RatFunc {
            num: RatPoly::constant(c),
            den: RatPoly::one(),
        }
    }

    fn eps() -> Self {
        RatFunc {
            num: RatPoly::x(),
            den: RatPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(num: RatPoly, den: RatPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: RatPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).expect("nonzero").0;
        let den = den.divrem(&g).expect("nonzero").0;
        let lc = den.lc().unwrap().clone();
        let inv = lc.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    /// `(a d - b c) / a` for the Routh recurrence `a, b / c, d`.
    fn routh(a: &RatFunc, b: &RatFunc, c: &RatFunc, d: &RatFunc) -> RatFunc {
        // (a d - c b) / a with a = an/ad etc.
        let ad = &(&a.num * &d.num) * &(&c.den * &b.den);
        let cb = &(&c.num * &b.num) * &(&a.den * &d.den);
        let num = &(&ad - &cb) * &a.den;
        let den = &(&(&a.den * &d.den) * &(&c.den * &b.den)) * &a.num;
        RatFunc::reduce(num, den)
    }

    fn sign_near_zero(&self) -> i32 {
        fn low(f: &RatPoly) -> i32 {
            f.coeffs()
                .iter()
                .find(|c| !c.is_zero())
                .map(sign_of)
                .unwrap_or(0)
        }
        low(&self.num) * low(&self.den)
    }
}

/// First column of the Routh array of `f`, or `None` if a whole row
/// vanishes.
fn routh_first_column(f: &RatPoly) -> Option<Vec<RatFunc>> {
    let n = f.degree()?;
    let c = |k: usize| RatFunc::constant(f.coeff(k));
    let mut prev: Vec<RatFunc> = (0..=n).rev().step_by(2).map(c).collect();
    let mut cur: Vec<RatFunc> = (0..n).rev().step_by(2).map(c).collect();
    let mut first = vec![prev[0].clone()];
    for _ in 0..n {
        if cur.iter().all(RatFunc::is_zero) {
            return None;
        }
        if cur[0].is_zero() {
            cur[0] = RatFunc::eps();
        }
        first.push(cur[0].clone());
        let zero = RatFunc::constant(Rational::zero());
        let get = |v: &[RatFunc], i: usize| v.get(i).cloned().unwrap_or_else(|| zero.clone());
        let len = prev.len().max(cur.len()).saturating_sub(1);
        let next: Vec<RatFunc> = (0..len)
            .map(|i| RatFunc::routh(&cur[0], &get(&cur, i + 1), &prev[0], &get(&prev, i + 1)))
            .collect();
        prev = cur;
        cur = next;
        if first.len() == n + 1 {
            break;
        }
    }
    Some(first)
}

/// Number of roots of `f` with positive real part, from sign changes in the
/// first column. `None` when a row of zeros appears.
pub fn routh_rhp_count(f: &RatPoly) -> Option<usize> {
    let col = routh_first_column(f)?;
    let signs: Vec<i32> = col.iter().map(RatFunc::sign_near_zero).collect();
    Some(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// `f(iy) = A(y) + i B(y)`; roots on the imaginary axis are the common real
/// roots of `A` and `B`.
fn has_imaginary_axis_root(f: &RatPoly) -> bool {
    let mut re = Vec::new();
    let mut im = Vec::new();
    for (k, c) in f.coeffs().iter().enumerate() {
        // i^k
        let (target, sign) = match k % 4 {
            0 => (&mut re, 1),
            1 => (&mut im, 1),
            2 => (&mut re, -1),
            _ => (&mut im, -1),
        };
        target.resize(k + 1, Rational::zero());
        target[k] = if sign > 0 { c.clone() } else { -c };
    }
    let g = RatPoly::new(re).gcd(&RatPoly::new(im));
    count_distinct_real_roots(&g) > 0
}

/// Whether every root of `f` has strictly positive real part, by the
/// Routh-Hurwitz test on `f(-t)`.
pub fn routh_positive_real_parts(f: &RatPoly) -> Result<bool> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    if has_imaginary_axis_root(f) {
        return Err(Error::ImaginaryAxisRoot);
    }
    let g = f.reflect();
    let g = if sign_of(g.lc().unwrap()) < 0 { -g } else { g };
    Ok(routh_rhp_count(&g) == Some(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn quadratics() {
        assert!(routh_positive_real_parts(&p(&[1, -1, 1])).unwrap());
        assert!(!routh_positive_real_parts(&p(&[1, 1, 1])).unwrap());
        assert_eq!(
            routh_positive_real_parts(&p(&[1, 0, 1])),
            Err(Error::ImaginaryAxisRoot)
        );
        assert_eq!(
            routh_positive_real_parts(&p(&[0, 1])),
            Err(Error::ImaginaryAxisRoot)
        );
    }

    #[test]
    fn counts() {
        // (t - 1)(t - 2)(t + 3)
        assert_eq!(routh_rhp_count(&p(&[6, -7, 0, 1])), Some(2));
        // (t + 1)(t + 2)(t + 3)
        assert_eq!(routh_rhp_count(&p(&[6, 11, 6, 1])), Some(0));
    }

    #[test]
    fn zero_pivot_uses_eps() {
        // t^4 + t^3 + 2 t^2 + 2 t + 3: the third row starts with 0 and the
        // polynomial has two roots with positive real part
        assert_eq!(routh_rhp_count(&p(&[3, 2, 2, 1, 1])), Some(2));
        // t^3 - 3t + 2 = (t - 1)^2 (t + 2) has a zero first entry in row 2
        assert_eq!(routh_rhp_count(&p(&[2, -3, 0, 1])), Some(2));
    }

    #[test]
    fn symmetric_roots_give_zero_row() {
        // (t^2 - 1)(t + 2)
        assert_eq!(routh_rhp_count(&p(&[-2, -1, 2, 1])), None);
        assert!(!routh_positive_real_parts(&p(&[-2, -1, 2, 1]).reflect()).unwrap());
    }
}
