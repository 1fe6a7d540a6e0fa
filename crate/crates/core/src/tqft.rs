//! Genus invariants `<S_g> = eps(Omega^g) = tr(Omega^(g-1))` and signatures
//! of colored surfaces, with the residue form of the counit as a
//! cross-check.

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{int, rat, RatPoly, Rational};
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::frobenius::{
    build_vq, build_vq_plus, omega_element, special_elements, AlgElement, FrobAlg,
};
use crate::riley::{chi_via_w, orth_polys};
use crate::twobridge::{epsilon_seq, Params};

/// A closed surface of genus `g` with colored marked points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub colors: Vec<usize>,
    /// Work in the even part with `Omega^+`; all colors must be even.
    pub so3: bool,
}

fn algebra(p: Params, so3: bool) -> Result<FrobAlg> {
    let v = build_vq(p);
    if so3 {
        build_vq_plus(&v)
    } else {
        Ok(v)
    }
}

/// `<S_g>` on `V_q`, or on `V_q^+` with `Omega^+` when `so3` is set.
pub fn genus_invariant(p: Params, g: u32, so3: bool) -> Result<Rational> {
    let v = algebra(p, so3)?;
    if g == 0 {
        return v.epsilon(&v.one());
    }
    v.mult_matrix(&omega_element(&v))?.pow(g - 1)?.trace()
}

/// `eps(Omega^g e_{l_1} ... e_{l_n})`.
pub fn surface_signature(p: Params, spec: &SurfaceSpec) -> Result<Rational> {
    let v = algebra(p, spec.so3)?;
    let top = p.r() as usize - 2;
    let mut acc = v.pow(&omega_element(&v), spec.genus)?;
    for &c in &spec.colors {
        if c > top {
            return Err(Error::OutOfRange {
                index: c,
                bound: top + 1,
            });
        }
        if spec.so3 && c % 2 == 1 {
            return Err(Error::OddColor { color: c });
        }
        let e = v.basis_color(c).expect("color in range");
        acc = v.mult(&acc, &e)?;
    }
    v.epsilon(&acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerlindeCheck {
    pub r: u32,
    pub genus: u32,
    #[serde(serialize_with = "crate::arith::serialize_rational")]
    pub exact: Rational,
    pub float: f64,
    pub agree: bool,
}

/// Exact `<S_g>` at `s = 1` against
/// `(r/2)^(g-1) sum_{k=1}^{r-1} sin(k pi / r)^(2-2g)` in floating point.
pub fn verlinde_crosscheck(r: u32, g: u32) -> Result<VerlindeCheck> {
    let p = Params::new(r as i64, 1)?;
    let exact = genus_invariant(p, g, false)?;
    let rf = r as f64;
    let sum: f64 = (1..r)
        .map(|k| {
            (k as f64 * std::f64::consts::PI / rf)
                .sin()
                .powi(2 - 2 * g as i32)
        })
        .sum();
    let float = (rf / 2.0).powi(g as i32 - 1) * sum;
    let e = exact.to_f64().unwrap_or(f64::NAN);
    let agree = (e - float).abs() / e.abs().max(1.0) < 1e-9;
    Ok(VerlindeCheck {
        r,
        genus: g,
        exact,
        float,
        agree,
    })
}

/// Power sums `s_0, ..., s_{count-1}` of the roots of a monic polynomial,
/// by Newton's identities. `s_k` is the trace of `X^k` in `Q[X]/(f)`.
pub fn power_sums(f: &RatPoly, count: usize) -> Vec<Rational> {
    let n = f.degree().unwrap_or(0);
    let c = |j: usize| f.coeff(j);
    let mut s = vec![int(n as i64)];
    for k in 1..count {
        let mut acc = if k <= n {
            int(k as i64) * c(n - k)
        } else {
            Rational::zero()
        };
        for i in 1..k.min(n + 1) {
            acc += c(n - i) * &s[k - i];
        }
        s.push(-acc);
    }
    s.truncate(count);
    s
}

/// `tr_{Q[X]/(m)}(h)` for monic `m`.
pub fn quotient_trace(h: &RatPoly, m: &RatPoly) -> Result<Rational> {
    let h = h.rem(m)?;
    let s = power_sums(m, m.degree().unwrap_or(0));
    Ok(h.coeffs().iter().zip(&s).map(|(a, b)| a * b).sum())
}

/// Compares `eps(f(x))` in `V_q` with the residue sum
/// `sum Res P_{r-2} f / P_{r-1} = tr(P_{r-2} f / P'_{r-1})` over `Q[X]/P_{r-1}`.
pub fn residue_crosscheck(p: Params, f: &RatPoly) -> Result<bool> {
    let (lhs, rhs) = residue_pair(p, f)?;
    Ok(lhs == rhs)
}

/// `(eps(f(x)), residue sum)`.
pub fn residue_pair(p: Params, f: &RatPoly) -> Result<(Rational, Rational)> {
    Residues::full(p)?.pair(f)
}

/// SO(3) variant on `V_q^+ = Q[w]`: `eps(f(w))` against
/// `-2 tr_{Q[t]/chi}(f / (chi'(t) chi(-t)))`.
pub fn residue_crosscheck_so3(p: Params, f: &RatPoly) -> Result<bool> {
    let (lhs, rhs) = Residues::so3(p)?.pair(f)?;
    Ok(lhs == rhs)
}

/// The algebra, its generator and the values `tr(weight X^k)` of the
/// trace formula `eps(f(gen)) = tr_{Q[X]/(modulus)}(weight f)` on
/// monomials below the degree of `modulus`.
struct Residues {
    alg: FrobAlg,
    gen: AlgElement,
    modulus: RatPoly,
    moments: Vec<Rational>,
}

fn moments(weight: &RatPoly, modulus: &RatPoly) -> Vec<Rational> {
    let n = modulus.degree().unwrap_or(0);
    let s = power_sums(modulus, 2 * n);
    (0..n)
        .map(|k| {
            weight
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, w)| w * &s[j + k])
                .sum()
        })
        .collect()
}

impl Residues {
    fn full(p: Params) -> Result<Self> {
        let alg = build_vq(p);
        let polys = orth_polys(p);
        let r = p.r() as usize;
        let modulus = polys[r - 1].clone();
        let inv = modulus.derivative().inverse_mod(&modulus)?;
        let weight = (&polys[r - 2] * &inv).rem(&modulus)?;
        let gen = alg.basis(1);
        Ok(Residues {
            moments: moments(&weight, &modulus),
            alg,
            gen,
            modulus,
        })
    }

    fn so3(p: Params) -> Result<Self> {
        let v = build_vq(p);
        let alg = build_vq_plus(&v)?;
        let gen = w_plus(p, &v, &alg)?;
        let (_, modulus) = chi_via_w(p);
        let den = &modulus.derivative() * &modulus.reflect();
        let weight = den.inverse_mod(&modulus)?.scale(&int(-2));
        Ok(Residues {
            moments: moments(&weight, &modulus),
            alg,
            gen,
            modulus,
        })
    }

    fn pair(&self, f: &RatPoly) -> Result<(Rational, Rational)> {
        let lhs = self.alg.epsilon(&self.alg.eval_poly(f, &self.gen)?)?;
        let h = f.rem(&self.modulus)?;
        let rhs = h
            .coeffs()
            .iter()
            .zip(&self.moments)
            .map(|(a, b)| a * b)
            .sum();
        Ok((lhs, rhs))
    }
}

fn w_plus(p: Params, v: &FrobAlg, plus: &FrobAlg) -> Result<AlgElement> {
    Ok(match special_elements(v)?.w_plus {
        Some(w) => w,
        None => plus.one().scale(&int(epsilon_seq(p).eps(2) as i64)),
    })
}

/// `Omega^+` as the orthogonal-basis sum, as half of `Omega` (restricted),
/// and as `-chi'(w) chi(-w) / 2`.
pub fn omega_plus_three_ways(p: Params) -> CheckReport {
    let mut rep = CheckReport::new(format!("{p} omega+"));
    let outcome = (|| -> Result<(bool, bool)> {
        let v = build_vq(p);
        let plus = build_vq_plus(&v)?;
        let direct = omega_element(&plus);
        let half = plus.restrict_from(&v, &omega_element(&v).scale(&rat(1, 2)))?;
        let w = w_plus(p, &v, &plus)?;
        let (_, chi) = chi_via_w(p);
        let a = plus.eval_poly(&chi.derivative(), &w)?;
        let b = plus.eval_poly(&chi.reflect(), &w)?;
        let via_chi = plus.mult(&a, &b)?.scale(&rat(-1, 2));
        Ok((direct == half, direct == via_chi))
    })();
    match outcome {
        Ok((h, c)) => {
            rep.push("half_omega", h, "");
            rep.push("chi_formula", c, "");
        }
        Err(e) => rep.push("omega_plus", false, e.to_string()),
    }
    rep
}

/// Genus invariants and residue checks for one parameter pair.
pub fn verify_tqft(p: Params) -> CheckReport {
    let mut rep = CheckReport::new(format!("{p} tqft"));
    let r = p.r() as usize;
    let residues = Residues::full(p)
        .map_err(|e| e.to_string())
        .and_then(|ctx| {
            orth_polys(p)
                .iter()
                .take(r - 1)
                .enumerate()
                .try_for_each(|(n, f)| {
                    let (lhs, rhs) = ctx.pair(f).map_err(|e| e.to_string())?;
                    let expect = if n == 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    if lhs == expect && rhs == expect {
                        Ok(())
                    } else {
                        Err(format!("P_{n}: eps = {lhs}, residue = {rhs}"))
                    }
                })
        });
    rep.record("residue_basis", residues);
    let so3 = Residues::so3(p).map_err(|e| e.to_string()).and_then(|ctx| {
        (0..p.dim_plus()).try_for_each(|k| {
            let f = RatPoly::monomial(Rational::one(), k);
            match ctx.pair(&f) {
                Ok((a, b)) if a == b => Ok(()),
                Ok((a, b)) => Err(format!("t^{k}: {a} vs {b}")),
                Err(e) => Err(e.to_string()),
            }
        })
    });
    rep.record("residue_so3", so3);
    rep.extend(omega_plus_three_ways(p));
    rep
}
