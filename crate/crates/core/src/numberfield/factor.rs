//! Factorisation over Q: squarefree decomposition, factoring modulo a small
//! prime, Hensel lifting and Zassenhaus recombination.

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::{IntPoly, Integer, ModPoly, RatPoly, Rational};
use crate::error::{Error, Result};

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// How many usable primes are tried before settling on the one giving the
/// fewest modular factors.
const PRIMES_TRIED: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub input: RatPoly,
    /// `input = unit * prod factor^mult`.
    #[serde(serialize_with = "crate::arith::serialize_rational")]
    pub unit: Rational,
    /// Monic irreducible factors with multiplicities, sorted by degree and
    /// then by coefficients.
    pub factors: Vec<(RatPoly, usize)>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m))
            .collect();
        d.sort_unstable();
        d
    }

    /// `unit * prod factor^mult`.
    pub fn expand(&self) -> RatPoly {
        let mut out = RatPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                out = &out * f;
            }
        }
        out
    }
}

pub fn factor_over_q(f: &RatPoly) -> Result<Factorization> {
    factor_over_q_seeded(f, DEFAULT_SEED)
}

/// Complete factorisation over Q. The seed drives the random splitting in
/// the equal-degree step; the result does not depend on it.
pub fn factor_over_q_seeded(f: &RatPoly, seed: u64) -> Result<Factorization> {
    let lc = f
        .lc()
        .cloned()
        .ok_or(Error::Undefined("cannot factor the zero polynomial"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        let (_, prim) = IntPoly::from_rat_primitive(&g);
        for h in factor_squarefree(&prim, &mut rng) {
            factors.push((h.to_rat().monic(), mult));
        }
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization {
        input: f.clone(),
        unit: lc,
        factors,
    })
}

/// Yun's algorithm: monic `(g_i, i)` with `f = lc * prod g_i^i`, the `g_i`
/// squarefree and pairwise coprime. Trivial `g_i` are left out.
pub fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let b = f.gcd(&df);
    let mut c = f.divrem(&b).expect("nonzero").0;
    let mut d = &df.divrem(&b).expect("nonzero").0 - &c.derivative();
    let mut i = 1;
    while c.degree() != Some(0) {
        let a = c.gcd(&d);
        c = c.divrem(&a).expect("nonzero").0;
        d = &d.divrem(&a).expect("nonzero").0 - &c.derivative();
        if a.degree() != Some(0) {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Factors a primitive squarefree integer polynomial into primitive
/// irreducibles with positive leading coefficients.
fn factor_squarefree(f: &IntPoly, rng: &mut ChaCha8Rng) -> Vec<IntPoly> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return if n == 1 { vec![f.clone()] } else { Vec::new() };
    }
    let lc = f.lc().unwrap().clone();

    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in odd_primes() {
        if tried == PRIMES_TRIED {
            break;
        }
        if (&lc % Integer::from(p)).is_zero() {
            continue;
        }
        let fp = f.to_mod(p);
        if !fp.is_squarefree().expect("same modulus") {
            continue;
        }
        tried += 1;
        let facs = factor_mod_p(&fp.monic(), rng);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, modular) = best.expect("some prime is usable");

    // Any factor of f, scaled to leading coefficient lc(f), has
    // coefficients below |lc| * B with B the Mignotte-style bound.
    let norm = f.norm2_sq().sqrt() + Integer::one();
    let bound = Integer::from(2u32) * lc.abs() * norm * (Integer::one() << n);
    let pi = Integer::from(p);
    let mut m = pi.clone();
    while m <= bound {
        m = &m * &m;
    }
    let lifted = hensel_lift(f, &modular, p, &m);
    recombine(f, lifted, &m)
}

fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        (3..)
            .step_by(2)
            .take_while(|d| d * d <= n)
            .all(|d| n % d != 0)
    })
}

/// Monic irreducible factors of a monic squarefree polynomial over `F_p`.
pub fn factor_mod_p(f: &ModPoly, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, rng, &mut out);
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    out
}

/// `(g_d, d)` with `g_d` the product of the degree-`d` irreducible factors.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.modulus();
    let pe = BigUint::from(p);
    let x = ModPoly::x(p);
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while f.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&pe, &f).expect("same modulus");
        let g = h.sub(&x).and_then(|hx| hx.gcd(&f)).expect("same modulus");
        if !g.is_one() {
            f = f.divrem(&g).expect("nonzero").0;
            h = h.rem(&f).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(k) = f.degree().filter(|&k| k > 0) {
        out.push((f.monic(), k));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of degree-`d` irreducibles
/// (`p` odd).
fn equal_degree(g: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = g.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(g.monic());
        return;
    }
    let p = g.modulus();
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.random_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a
            .pow_mod(&e, g)
            .and_then(|b| b.sub(&ModPoly::one(p)))
            .expect("same modulus");
        let u = b.gcd(g).expect("same modulus");
        let k = u.degree().unwrap_or(0);
        if k > 0 && k < n {
            let v = g.divrem(&u).expect("nonzero").0;
            equal_degree(&u, d, rng, out);
            equal_degree(&v, d, rng, out);
            return;
        }
    }
}

fn inv_mod(a: &Integer, m: &Integer) -> Integer {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f = lc(f) * prod g_i (mod p)` to monic factors modulo `m`, a power
/// of `p` obtained by repeated squaring.
fn hensel_lift(f: &IntPoly, modular: &[ModPoly], p: u64, m: &Integer) -> Vec<IntPoly> {
    let lc_inv = inv_mod(f.lc().unwrap(), m);
    let monic = f.scale(&lc_inv).reduce_mod(m);
    let mut out = Vec::with_capacity(modular.len());
    lift_tree(&monic, modular, p, m, &mut out);
    out
}

fn lift_tree(f: &IntPoly, facs: &[ModPoly], p: u64, m: &Integer, out: &mut Vec<IntPoly>) {
    if facs.len() == 1 {
        out.push(f.reduce_mod(m));
        return;
    }
    let (left, right) = facs.split_at(facs.len() / 2);
    let prod = |fs: &[ModPoly]| {
        fs.iter()
            .fold(ModPoly::one(p), |acc, g| acc.mul(g).expect("same modulus"))
    };
    let g0 = prod(left);
    let h0 = prod(right);
    let (_, s0, t0) = g0.ext_gcd(&h0).expect("same modulus");
    let (mut g, mut h) = (IntPoly::from_mod(&g0), IntPoly::from_mod(&h0));
    let (mut s, mut t) = (IntPoly::from_mod(&s0), IntPoly::from_mod(&t0));
    let mut q = Integer::from(p);
    while &q < m {
        q = &q * &q;
        (g, h, s, t) = hensel_step(&f.reduce_mod(&q), &g, &h, &s, &t, &q);
    }
    lift_tree(&g, left, p, m, out);
    lift_tree(&h, right, p, m, out);
}

/// One quadratic Hensel step for monic `f = g h`, `s g + t h = 1` modulo
/// `sqrt(q)`, producing the same relations modulo `q`.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    q: &Integer,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = (f - &g.mul_mod(h, q)).reduce_mod(q);
    let (qu, r) = s.mul_mod(&e, q).divrem_monic_mod(h, q);
    let g1 = (&(g + &t.mul_mod(&e, q)) + &qu.mul_mod(g, q)).reduce_mod(q);
    let h1 = (h + &r).reduce_mod(q);
    let b = (&(&s.mul_mod(&g1, q) + &t.mul_mod(&h1, q)) - &IntPoly::one()).reduce_mod(q);
    let (c, d) = s.mul_mod(&b, q).divrem_monic_mod(&h1, q);
    let s1 = (s - &d).reduce_mod(q);
    let t1 = (&(t - &t.mul_mod(&b, q)) - &c.mul_mod(&g1, q)).reduce_mod(q);
    (g1, h1, s1, t1)
}

/// Zassenhaus subset search over the lifted factors.
fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, m: &Integer) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.lc().unwrap().clone();
        for subset in Combinations::new(lifted.len(), size) {
            let cand = subset
                .iter()
                .fold(IntPoly::constant(lc.clone()), |acc, &i| {
                    acc.mul_mod(&lifted[i], m)
                })
                .symmetric_mod(m)
                .primitive_part();
            if let Some(q) = f.div_exact(&cand) {
                out.push(cand);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.degree().unwrap_or(0) > 0 {
        out.push(f.primitive_part());
    }
    out
}

/// Index subsets of `0..n` of a fixed size, in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn combinations() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
    }

    #[test]
    fn squarefree_parts() {
        // (X - 1)^2 (X + 2)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(
            squarefree_decomposition(&f),
            vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]
        );
    }

    #[test]
    fn modular_factorisation() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // X^4 - 1 over F_5 splits into linear factors
        let f = ModPoly::from_i64s(5, &[-1, 0, 0, 0, 1]);
        let facs = factor_mod_p(&f, &mut rng);
        assert_eq!(facs.len(), 4);
        let prod = facs.iter().fold(ModPoly::one(5), |a, g| a.mul(g).unwrap());
        assert_eq!(prod, f);
        // X^2 + 1 is irreducible over F_7
        assert_eq!(
            factor_mod_p(&ModPoly::from_i64s(7, &[1, 0, 1]), &mut rng).len(),
            1
        );
    }

    #[test]
    fn examples() {
        let f = factor_over_q(&p(&[1, 0, -3, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(p(&[-1, -1, 1]), 1), (p(&[-1, 1, 1]), 1)]);
        assert!(factor_over_q(&p(&[1, -1, 1])).unwrap().is_irreducible());
        let g = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 0, 2]);
        let fg = factor_over_q(&g.scale(&Rational::new(5.into(), 7.into()))).unwrap();
        assert_eq!(
            fg.factors,
            vec![
                (p(&[-1, 1]), 2),
                (
                    RatPoly::new(vec![
                        Rational::new(3.into(), 2.into()),
                        Rational::zero(),
                        Rational::one()
                    ]),
                    1
                )
            ]
        );
        assert_eq!(fg.expand(), fg.input);
        assert!(factor_over_q(&RatPoly::zero()).is_err());
        assert!(factor_over_q(&p(&[4])).unwrap().factors.is_empty());
    }

    #[test]
    fn swinnerton_dyer_like() {
        // X^4 - 10 X^2 + 1 is irreducible over Q but splits mod every prime
        let f = factor_over_q(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert!(f.is_irreducible());
        // a product of many small factors
        let mut g = RatPoly::one();
        for k in 1..=6 {
            g = &g * &p(&[k, 0, 1]);
        }
        g = &g * &p(&[-2, 3]);
        let fg = factor_over_q(&g).unwrap();
        assert_eq!(fg.degrees(), vec![1, 2, 2, 2, 2, 2, 2]);
        assert_eq!(fg.expand(), g);
    }

    #[test]
    fn seed_does_not_matter() {
        let f = p(&[6, 11, 6, 1, 7, 3, 1]);
        let a = factor_over_q_seeded(&f, 1).unwrap();
        let b = factor_over_q_seeded(&f, 99).unwrap();
        assert_eq!(a, b);
    }
}
