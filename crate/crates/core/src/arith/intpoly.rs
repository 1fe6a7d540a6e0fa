use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, ModPoly, RatPoly, Rational};

/// Dense polynomial over Z. Used for the remainder sequences behind the
/// rational gcd, for SL2 words, and for Hensel lifting modulo `p^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Integer::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Integer::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![Integer::zero(), Integer::one()])
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Splits `f = c * g` with `g` primitive over Z with positive leading
    /// coefficient. The zero polynomial gives `(0, 0)`.
    pub fn from_rat_primitive(f: &RatPoly) -> (Rational, IntPoly) {
        if f.is_zero() {
            return (Rational::zero(), IntPoly::zero());
        }
        let den = f
            .coeffs()
            .iter()
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Integer> = f
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let g = IntPoly::new(ints);
        let mut cont = g.content();
        if g.lc().unwrap().is_negative() {
            cont = -cont;
        }
        let prim = g.div_scalar(&cont);
        (Rational::new(cont, den), prim)
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> Integer {
        self.coeffs
            .iter()
            .fold(Integer::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides by the content and normalises the leading coefficient to be
    /// positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn div_scalar(&self, c: &Integer) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    pub fn scale(&self, c: &Integer) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Integer::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) a = q b + r`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero");
        let Some(da) = self.degree() else {
            return IntPoly::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.coeffs[db].clone();
        let mut rem = self.coeffs.clone();
        for k in (0..=da - db).rev() {
            let c = rem[k + db].clone();
            for r in rem.iter_mut() {
                *r *= &lb;
            }
            if !c.is_zero() {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * bj;
                }
            }
        }
        rem.truncate(db);
        IntPoly::new(rem)
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division over Z, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let Some(da) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if da < dd {
            return None;
        }
        let ld = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let (c, r) = rem[k + dd].div_rem(ld);
            if !r.is_zero() {
                return None;
            }
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    pub fn max_abs(&self) -> Integer {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Integer::zero)
    }

    pub fn norm2_sq(&self) -> Integer {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    // ---- arithmetic modulo a (not necessarily prime) modulus ----

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: &Integer) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Coefficients reduced into `(-m/2, m/2]`.
    pub fn symmetric_mod(&self, m: &Integer) -> IntPoly {
        let half = m / 2u32;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub fn mul_mod(&self, other: &IntPoly, m: &Integer) -> IntPoly {
        (self * other).reduce_mod(m)
    }

    /// Division by a polynomial whose leading coefficient is 1 mod `m`.
    pub fn divrem_monic_mod(&self, b: &IntPoly, m: &Integer) -> (IntPoly, IntPoly) {
        let db = b.degree().expect("division by zero polynomial");
        debug_assert!(b.lc().unwrap().mod_floor(m).is_one());
        let a = self.reduce_mod(m);
        let Some(da) = a.degree() else {
            return (IntPoly::zero(), IntPoly::zero());
        };
        if da < db {
            return (IntPoly::zero(), a);
        }
        let mut rem = a.coeffs;
        let mut quot = vec![Integer::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = rem[k + db].mod_floor(m);
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &c * bj).mod_floor(m);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn to_mod(&self, p: u64) -> ModPoly {
        let pi = Integer::from(p);
        let cs = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pi);
                u64::try_from(&r).expect("residue fits in u64")
            })
            .collect();
        ModPoly::new(p, cs)
    }

    pub fn from_mod(f: &ModPoly) -> IntPoly {
        IntPoly::new(f.coeffs().iter().map(|&c| Integer::from(c)).collect())
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_split() {
        let f = RatPoly::new(vec![
            Rational::new(2.into(), 3.into()),
            Rational::new((-4).into(), 3.into()),
        ]);
        let (c, g) = IntPoly::from_rat_primitive(&f);
        assert_eq!(g, IntPoly::from_i64s(&[-1, 2]));
        assert_eq!(g.to_rat().scale(&c), f);
    }

    #[test]
    fn integer_gcd() {
        let a = &IntPoly::from_i64s(&[1, 1]) * &IntPoly::from_i64s(&[-2, 3]);
        let b = &IntPoly::from_i64s(&[-2, 3]) * &IntPoly::from_i64s(&[5, 0, 1]);
        assert_eq!(a.scale(&6.into()).gcd(&b), IntPoly::from_i64s(&[-2, 3]));
    }

    #[test]
    fn exact_division() {
        let a = &IntPoly::from_i64s(&[1, 1]) * &IntPoly::from_i64s(&[-2, 3]);
        assert_eq!(
            a.div_exact(&IntPoly::from_i64s(&[-2, 3])),
            Some(IntPoly::from_i64s(&[1, 1]))
        );
        assert_eq!(a.div_exact(&IntPoly::from_i64s(&[1, 2])), None);
    }

    #[test]
    fn modular_division() {
        let m = Integer::from(9);
        let a = IntPoly::from_i64s(&[5, 7, 3, 1]);
        let b = IntPoly::from_i64s(&[2, 1]);
        let (q, r) = a.divrem_monic_mod(&b, &m);
        assert_eq!((&q.mul_mod(&b, &m) + &r).reduce_mod(&m), a.reduce_mod(&m));
        assert_eq!(
            IntPoly::from_i64s(&[8, 5]).symmetric_mod(&m),
            IntPoly::from_i64s(&[-1, -4])
        );
    }
}
