use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Dense polynomial over `Z/p` for a prime `p < 2^32`.
///
/// Coefficients are stored in `[0, p)` without trailing zeros. Leading
/// coefficients are arbitrary; `gcd` and the factorisation routines
/// return monic results.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn invm(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powm(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        assert!(
            (2..(1 << 32)).contains(&p),
            "modulus out of supported range"
        );
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn from_i64s(p: u64, c: &[i64]) -> Self {
        Self::new(
            p,
            c.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect(),
        )
    }

    pub fn zero(p: u64) -> Self {
        ModPoly {
            p,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check(&self, other: &ModPoly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        let c = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(0);
                let b = other.coeffs.get(k).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        Ok(ModPoly::new(p, c))
    }

    pub fn sub(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check(other)?;
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModPoly {
        let p = self.p;
        ModPoly::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        ModPoly::new(
            self.p,
            self.coeffs.iter().map(|&a| mulm(a, c, self.p)).collect(),
        )
    }

    pub fn mul(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(ModPoly::zero(self.p));
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                // p < 2^32, so a*b < 2^64 and the running sum cannot overflow u128
                acc[i + j] += (a as u128) * (b as u128);
            }
        }
        Ok(ModPoly::new(
            self.p,
            acc.into_iter().map(|c| (c % p) as u64).collect(),
        ))
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(invm(self.lc(), self.p))
    }

    pub fn divrem(&self, b: &ModPoly) -> Result<(ModPoly, ModPoly)> {
        self.check(b)?;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let Some(da) = self.degree() else {
            return Ok((ModPoly::zero(p), ModPoly::zero(p)));
        };
        if da < db {
            return Ok((ModPoly::zero(p), self.clone()));
        }
        let inv = invm(b.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; da - db + 1];
        for k in (0..=da - db).rev() {
            let c = mulm(rem[k + db], inv, p);
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mulm(c, bj, p)) % p;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((ModPoly::new(p, quot), ModPoly::new(p, rem)))
    }

    pub fn rem(&self, b: &ModPoly) -> Result<ModPoly> {
        Ok(self.divrem(b)?.1)
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.p;
        ModPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mulm(c, k as u64 % p, p))
                .collect(),
        )
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &ModPoly) -> Result<ModPoly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `(g, s, t)` with `s self + t other = g` monic.
    pub fn ext_gcd(&self, other: &ModPoly) -> Result<(ModPoly, ModPoly, ModPoly)> {
        self.check(other)?;
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1)?)?;
            let t2 = t0.sub(&q.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = invm(r0.lc(), p);
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// `self^e mod m` by square-and-multiply on the bits of `e`.
    pub fn pow_mod(&self, e: &BigUint, m: &ModPoly) -> Result<ModPoly> {
        self.check(m)?;
        let mut result = ModPoly::one(self.p).rem(m)?;
        let base = self.rem(m)?;
        for i in (0..e.bits()).rev() {
            result = result.mul(&result)?.rem(m)?;
            if e.bit(i) {
                result = result.mul(&base)?.rem(m)?;
            }
        }
        Ok(result)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_detected_mod_two() {
        // X^2 + 1 = (X + 1)^2 over F_2, and its derivative vanishes
        let f = ModPoly::from_i64s(2, &[1, 0, 1]);
        assert_eq!(
            ModPoly::from_i64s(2, &[1, 1])
                .mul(&ModPoly::from_i64s(2, &[1, 1]))
                .unwrap(),
            f
        );
        assert!(!f.is_squarefree().unwrap());
    }

    #[test]
    fn fermat_polynomial_splits() {
        for p in [3u64, 5, 7, 11] {
            let mut f = ModPoly::from_i64s(p, &[0, -1]);
            f = f
                .add(&ModPoly::new(p, {
                    let mut v = vec![0; p as usize + 1];
                    v[p as usize] = 1;
                    v
                }))
                .unwrap();
            let mut prod = ModPoly::one(p);
            for a in 0..p {
                prod = prod.mul(&ModPoly::new(p, vec![(p - a) % p, 1])).unwrap();
            }
            assert_eq!(prod, f, "X^p - X over F_{p}");
        }
    }

    #[test]
    fn reduction_of_p4_mod_two() {
        let f = crate::arith::IntPoly::from_i64s(&[1, 0, -1, 0, 1]).to_mod(2);
        assert_eq!(f, ModPoly::from_i64s(2, &[1, 0, 1, 0, 1]));
    }

    #[test]
    fn modulus_mismatch() {
        let a = ModPoly::one(3);
        let b = ModPoly::one(5);
        assert_eq!(a.add(&b), Err(Error::ModulusMismatch(3, 5)));
        assert!(a.gcd(&b).is_err());
    }

    #[test]
    fn pow_mod_matches_repeated_product() {
        let m = ModPoly::from_i64s(7, &[3, 1, 0, 1]);
        let a = ModPoly::from_i64s(7, &[1, 2]);
        let mut expect = ModPoly::one(7);
        for _ in 0..23 {
            expect = expect.mul(&a).unwrap().rem(&m).unwrap();
        }
        assert_eq!(a.pow_mod(&BigUint::from(23u32), &m).unwrap(), expect);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = ModPoly::from_i64s(5, &[1, 2, 3, 1]);
        let b = ModPoly::from_i64s(5, &[4, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(s.mul(&a).unwrap().add(&t.mul(&b).unwrap()).unwrap(), g);
    }
}
