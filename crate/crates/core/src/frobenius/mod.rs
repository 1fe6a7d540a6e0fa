//! The signed Verlinde algebras `V_q` and their even parts `V_q^+`.
//!
//! The basis `e_0, ..., e_{r-2}` is orthogonal for `eta` with
//! `eta(e_i, e_i) = (-1)^i eps_{i+1}`, and the product is the one making
//! `omega(x, y, z) = eta(xy, z)` equal to the sign of `<i, j, k>`. Since the
//! basis is orthonormal up to sign, `e_i e_j = sum_k omega(i, j, k) eta_kk e_k`
//! and every structure constant is -1, 0 or 1.

mod dump;
mod element;
mod verify;

pub use dump::AlgebraDump;
pub use element::AlgElement;
pub use verify::verify_algebra;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{RatMatrix, RatPoly, Rational};
use crate::error::{Error, Result};
use crate::twobridge::{epsilon_seq, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    /// `V_q`, basis `e_0 .. e_{r-2}`.
    Full,
    /// `V_q^+`, basis `e_0, e_2, .., e_{r-3}`.
    Even,
}

/// A finite-dimensional commutative Q-algebra with a distinguished basis,
/// integer structure constants and a diagonal +-1 pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobAlg {
    params: Params,
    kind: AlgebraKind,
    labels: Vec<usize>,
    eta: Vec<i8>,
    /// Dense `c[(i * dim + j) * dim + k]`.
    consts: Vec<i8>,
    /// Nonzero `(k, c_ij^k)` for each `(i, j)`, sorted by `k`.
    rows: Vec<Vec<(usize, i8)>>,
    /// `tr(L_{e_i}) = sum_j c_ij^j`.
    traces: Vec<i64>,
}

/// Builds `V_q` for `q = exp(i pi s / r)`.
pub fn build_vq(p: Params) -> FrobAlg {
    let seq = epsilon_seq(p);
    let r = p.r() as usize;
    let dim = r - 1;
    let eta: Vec<i8> = (0..dim)
        .map(|i| if i % 2 == 0 { 1 } else { -1 } * seq.eps(i as i64 + 1))
        .collect();
    let mut consts = vec![0i8; dim * dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let lo = i.abs_diff(j);
            let hi = (i + j).min(2 * r - 4 - i - j);
            let mut k = lo;
            while k <= hi {
                let w = seq.triple_sign_admissible(i, j, k);
                consts[(i * dim + j) * dim + k] = w * eta[k];
                k += 2;
            }
        }
    }
    FrobAlg::assemble(p, AlgebraKind::Full, (0..dim).collect(), eta, consts)
}

/// The even part of a full algebra, closed under the product.
pub fn build_vq_plus(v: &FrobAlg) -> Result<FrobAlg> {
    if v.kind != AlgebraKind::Full {
        return Err(Error::Undefined("build_vq_plus expects a full V_q"));
    }
    let full = v.dim();
    let evens: Vec<usize> = (0..full).step_by(2).collect();
    let dim = evens.len();
    let mut consts = vec![0i8; dim * dim * dim];
    for (a, &i) in evens.iter().enumerate() {
        for (b, &j) in evens.iter().enumerate() {
            for &(k, c) in v.basis_product(i, j) {
                if k % 2 == 1 {
                    return Err(Error::ClosureViolation { i, j });
                }
                consts[(a * dim + b) * dim + k / 2] = c;
            }
        }
    }
    let eta = evens.iter().map(|&i| v.eta[i]).collect();
    Ok(FrobAlg::assemble(
        v.params,
        AlgebraKind::Even,
        evens,
        eta,
        consts,
    ))
}

impl FrobAlg {
    fn assemble(
        params: Params,
        kind: AlgebraKind,
        labels: Vec<usize>,
        eta: Vec<i8>,
        consts: Vec<i8>,
    ) -> FrobAlg {
        let dim = labels.len();
        let mut rows = Vec::with_capacity(dim * dim);
        for ij in 0..dim * dim {
            rows.push(
                (0..dim)
                    .filter_map(|k| {
                        let c = consts[ij * dim + k];
                        (c != 0).then_some((k, c))
                    })
                    .collect(),
            );
        }
        let traces = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| consts[(i * dim + j) * dim + j] as i64)
                    .sum()
            })
            .collect();
        FrobAlg {
            params,
            kind,
            labels,
            eta,
            consts,
            rows,
            traces,
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// The color of each basis vector.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn eta_diag(&self) -> &[i8] {
        &self.eta
    }

    /// `c_ij^k` in basis-index coordinates.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> i8 {
        let d = self.dim();
        self.consts[(i * d + j) * d + k]
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, i8)] {
        &self.rows[i * self.dim() + j]
    }

    /// Basis index of color `c`, if present.
    pub fn index_of_color(&self, c: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == c)
    }

    /// A copy with one structure constant overwritten. Used to exercise the
    /// verification suites on deliberately broken tables.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, c: i8) -> FrobAlg {
        let mut consts = self.consts.clone();
        let d = self.dim();
        consts[(i * d + j) * d + k] = c;
        FrobAlg::assemble(
            self.params,
            self.kind,
            self.labels.clone(),
            self.eta.clone(),
            consts,
        )
    }

    // ---- elements ----

    pub fn element(&self, coords: Vec<Rational>) -> Result<AlgElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a {}-dimensional algebra",
                coords.len(),
                self.dim()
            )));
        }
        Ok(AlgElement::new(self.tag(), coords))
    }

    pub(crate) fn tag(&self) -> (Params, AlgebraKind) {
        (self.params, self.kind)
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement::new(self.tag(), vec![Rational::zero(); self.dim()])
    }

    pub fn one(&self) -> AlgElement {
        self.basis(0)
    }

    /// `e_i` by basis index.
    pub fn basis(&self, i: usize) -> AlgElement {
        let mut c = vec![Rational::zero(); self.dim()];
        c[i] = Rational::one();
        AlgElement::new(self.tag(), c)
    }

    /// `e_c` by color, `None` if `c` is not a basis color.
    pub fn basis_color(&self, c: usize) -> Option<AlgElement> {
        self.index_of_color(c).map(|i| self.basis(i))
    }

    fn check(&self, a: &AlgElement) -> Result<()> {
        if a.tag() != self.tag() || a.coords().len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn mult(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        self.check(a)?;
        self.check(b)?;
        if let Some((j, c)) = b.as_scaled_basis() {
            return Ok(self.mul_basis(a, j).scale(&c));
        }
        if let Some((i, c)) = a.as_scaled_basis() {
            return Ok(self.mul_basis(b, i).scale(&c));
        }
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords().iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let ab = ai * bj;
                for &(k, c) in self.basis_product(i, j) {
                    if c > 0 {
                        out[k] += &ab;
                    } else {
                        out[k] -= &ab;
                    }
                }
            }
        }
        Ok(AlgElement::new(self.tag(), out))
    }

    /// `a * e_j`, touching only the nonzero terms of each `e_i e_j`.
    pub(crate) fn mul_basis(&self, a: &AlgElement, j: usize) -> AlgElement {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for &(k, c) in self.basis_product(i, j) {
                if c > 0 {
                    out[k] += ai;
                } else {
                    out[k] -= ai;
                }
            }
        }
        AlgElement::new(self.tag(), out)
    }

    pub fn pow(&self, a: &AlgElement, n: u32) -> Result<AlgElement> {
        self.check(a)?;
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mult(&acc, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mult(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// Matrix of `b -> a b`; column `j` holds the coordinates of `a e_j`.
    pub fn mult_matrix(&self, a: &AlgElement) -> Result<RatMatrix> {
        self.check(a)?;
        let d = self.dim();
        let mut m = RatMatrix::zeros(d, d);
        for j in 0..d {
            for (k, v) in self.mul_basis(a, j).into_coords().into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        Ok(m)
    }

    /// `tr(L_a)`.
    pub fn trace_of(&self, a: &AlgElement) -> Result<Rational> {
        self.check(a)?;
        Ok(a.coords()
            .iter()
            .zip(&self.traces)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, &t)| c * Rational::from_integer(t.into()))
            .sum())
    }

    /// The counit: the coordinate on `e_0`.
    pub fn epsilon(&self, a: &AlgElement) -> Result<Rational> {
        self.check(a)?;
        Ok(a.coords()[0].clone())
    }

    /// `eta(a, b) = epsilon(a b)`.
    pub fn eta(&self, a: &AlgElement, b: &AlgElement) -> Result<Rational> {
        self.epsilon(&self.mult(a, b)?)
    }

    pub fn inverse(&self, a: &AlgElement) -> Result<AlgElement> {
        let m = self.mult_matrix(a)?;
        let mut rhs = vec![Rational::zero(); self.dim()];
        rhs[0] = Rational::one();
        let x = m.solve(&rhs)?;
        Ok(AlgElement::new(self.tag(), x))
    }

    /// `f(a)` by Horner's rule.
    pub fn eval_poly(&self, f: &RatPoly, a: &AlgElement) -> Result<AlgElement> {
        self.check(a)?;
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mult(&acc, a)?;
            acc.coords_mut()[0] += c;
        }
        Ok(acc)
    }

    /// Characteristic polynomial of `L_a`.
    pub fn char_poly(&self, a: &AlgElement) -> Result<RatPoly> {
        self.mult_matrix(a)?.char_poly()
    }

    /// Monic minimal polynomial of `a`, read off the first linear relation
    /// among `1, a, a^2, ...` (equal to that of `L_a` since the algebra is
    /// unital and commutative).
    pub fn min_poly(&self, a: &AlgElement) -> Result<RatPoly> {
        self.check(a)?;
        let d = self.dim();
        // (pivot, reduced vector, expression in powers of a)
        let mut echelon: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
        let mut power = self.one();
        for k in 0..=d {
            let mut v = power.coords().to_vec();
            let mut e = vec![Rational::zero(); k + 1];
            e[k] = Rational::one();
            for (piv, bv, be) in &echelon {
                if v[*piv].is_zero() {
                    continue;
                }
                let f = &v[*piv] / &bv[*piv];
                for (x, y) in v.iter_mut().zip(bv) {
                    *x -= &f * y;
                }
                for (x, y) in e.iter_mut().zip(be) {
                    *x -= &f * y;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Ok(RatPoly::new(e)),
                Some(piv) => echelon.push((piv, v, e)),
            }
            power = self.mult(&power, a)?;
        }
        unreachable!("a relation exists in degree <= dim")
    }

    /// Embeds an element of the even part into the full algebra.
    pub fn embed_even(&self, full: &FrobAlg, a: &AlgElement) -> Result<AlgElement> {
        self.check(a)?;
        if self.kind != AlgebraKind::Even
            || full.kind != AlgebraKind::Full
            || full.params != self.params
        {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = full.zero();
        for (i, c) in a.coords().iter().enumerate() {
            out.coords_mut()[self.labels[i]] = c.clone();
        }
        Ok(out)
    }

    /// Restricts a full-algebra element with no odd components to the even
    /// part `self`.
    pub fn restrict_from(&self, full: &FrobAlg, a: &AlgElement) -> Result<AlgElement> {
        full.check(a)?;
        if self.kind != AlgebraKind::Even || full.params != self.params {
            return Err(Error::AlgebraMismatch);
        }
        if a.coords()
            .iter()
            .enumerate()
            .any(|(c, v)| c % 2 == 1 && !v.is_zero())
        {
            return Err(Error::Undefined("element has odd components"));
        }
        Ok(AlgElement::new(
            self.tag(),
            self.labels.iter().map(|&c| a.coords()[c].clone()).collect(),
        ))
    }
}

/// `x = e_1, y = e_2, w = eps_2 e_{r-3}, iota = e_{r-2}` in `V_q`.
///
/// `y` and `w` are left out for `r = 3`, where `e_2` does not exist and
/// `e_{r-3}` is the unit.
#[derive(Clone, Debug)]
pub struct SpecialElements {
    pub x: AlgElement,
    pub y: Option<AlgElement>,
    pub w: Option<AlgElement>,
    pub iota: AlgElement,
    /// `y` and `w` seen in the even part.
    pub y_plus: Option<AlgElement>,
    pub w_plus: Option<AlgElement>,
}

pub fn special_elements(v: &FrobAlg) -> Result<SpecialElements> {
    if v.kind != AlgebraKind::Full {
        return Err(Error::Undefined("special elements live in the full V_q"));
    }
    let r = v.params.r() as usize;
    let eps2 = epsilon_seq(v.params).eps(2);
    let x = v.basis(1);
    let iota = v.basis(r - 2);
    if r == 3 {
        return Ok(SpecialElements {
            x,
            y: None,
            w: None,
            iota,
            y_plus: None,
            w_plus: None,
        });
    }
    let plus = build_vq_plus(v)?;
    let y = v.basis(2);
    let w = v.basis(r - 3).scale(&Rational::from_integer(eps2.into()));
    let y_plus = plus.restrict_from(v, &y)?;
    let w_plus = plus.restrict_from(v, &w)?;
    Ok(SpecialElements {
        x,
        y: Some(y),
        w: Some(w),
        iota,
        y_plus: Some(y_plus),
        w_plus: Some(w_plus),
    })
}

/// `Omega = sum_i e_i^2 / eta(e_i, e_i)` over the algebra's own basis; for
/// the even part this is `Omega^+`.
pub fn omega_element(v: &FrobAlg) -> AlgElement {
    let mut out = vec![Rational::zero(); v.dim()];
    for i in 0..v.dim() {
        for &(k, c) in v.basis_product(i, i) {
            out[k] += Rational::from_integer(((c * v.eta[i]) as i64).into());
        }
    }
    AlgElement::new(v.tag(), out)
}

/// Counit of an element.
pub fn epsilon_functional(v: &FrobAlg, a: &AlgElement) -> Result<Rational> {
    v.epsilon(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn vq(r: i64, s: i64) -> FrobAlg {
        build_vq(Params::new(r, s).unwrap())
    }

    fn coords(a: &AlgElement) -> Vec<i64> {
        a.coords()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn unit_axiom() {
        let v = vq(7, 3);
        for j in 0..v.dim() {
            assert_eq!(v.mult(&v.basis(0), &v.basis(j)).unwrap(), v.basis(j));
        }
    }

    #[test]
    fn intro_algebras_r5() {
        // s = 1: every [n] > 0, so <2,2,2> = -[4]!/[2]!^3 < 0 and e_2^2 = e_0 - e_2
        let v = vq(5, 1);
        assert_eq!(
            coords(&v.mult(&v.basis(2), &v.basis(2)).unwrap()),
            vec![1, 0, -1, 0]
        );
        let v = vq(5, 3);
        assert_eq!(
            coords(&v.mult(&v.basis(2), &v.basis(2)).unwrap()),
            vec![-1, 0, -1, 0]
        );
        let plus = build_vq_plus(&v).unwrap();
        assert_eq!(plus.dim(), 2);
        assert_eq!(
            plus.min_poly(&plus.basis(1)).unwrap(),
            RatPoly::from_ints(&[1, 1, 1])
        );
    }

    #[test]
    fn even_part_eta() {
        let plus = build_vq_plus(&vq(7, 3)).unwrap();
        assert_eq!(plus.eta_diag(), &[1, -1, 1]);
        assert_eq!(plus.labels(), &[0, 2, 4]);
        assert!(build_vq_plus(&plus).is_err());
    }

    #[test]
    fn products_and_traces() {
        let v = vq(5, 3);
        let x = v.basis(1);
        // x^2 = e_2 - eps_2 e_0 = e_2 + e_0
        assert_eq!(coords(&v.mult(&x, &x).unwrap()), vec![1, 0, 1, 0]);
        assert_eq!(v.trace_of(&v.one()).unwrap(), int(4));
        let m = v.mult_matrix(&x).unwrap();
        let b = v.element(vec![int(1), int(2), int(-1), int(3)]).unwrap();
        assert_eq!(
            m.mul_vec(b.coords()).unwrap(),
            v.mult(&x, &b).unwrap().coords()
        );
        assert_eq!(
            v.trace_of(&b).unwrap(),
            m.trace().unwrap() * int(0) + v.mult_matrix(&b).unwrap().trace().unwrap()
        );
    }

    #[test]
    fn counit_examples() {
        let v = vq(5, 3);
        assert_eq!(v.epsilon(&v.one()).unwrap(), int(1));
        assert!((1..4).all(|n| v.epsilon(&v.basis(n)).unwrap().is_zero()));
        let x = v.basis(1);
        assert_eq!(v.epsilon(&v.mult(&x, &x).unwrap()).unwrap(), int(1));
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j {
                    int(v.eta_diag()[i] as i64)
                } else {
                    int(0)
                };
                assert_eq!(v.eta(&v.basis(i), &v.basis(j)).unwrap(), expect);
            }
        }
    }

    #[test]
    fn min_poly_examples() {
        let v = vq(7, 3);
        assert_eq!(v.min_poly(&v.one()).unwrap(), RatPoly::from_ints(&[-1, 1]));
        let plus = build_vq_plus(&vq(5, 1)).unwrap();
        assert_eq!(
            plus.min_poly(&plus.basis(1)).unwrap(),
            RatPoly::from_ints(&[-1, 1, 1])
        );
    }

    #[test]
    fn special_element_identities() {
        for (r, s) in [(5, 3), (7, 3), (9, 5), (11, 7)] {
            let v = vq(r, s);
            let se = special_elements(&v).unwrap();
            let minus_one = v.one().scale(&int(-1));
            assert_eq!(v.mult(&se.iota, &se.iota).unwrap(), minus_one);
            let w = se.w.unwrap();
            let xx = v.mult(&se.x, &se.x).unwrap();
            assert_eq!(v.mult(&w, &w).unwrap(), xx.scale(&int(-1)));
        }
        let v = vq(3, 1);
        let se = special_elements(&v).unwrap();
        assert!(se.y.is_none() && se.w.is_none());
    }

    #[test]
    fn omega_is_twice_omega_plus() {
        let v = vq(9, 5);
        let plus = build_vq_plus(&v).unwrap();
        let om = omega_element(&v);
        let om_plus = plus.embed_even(&v, &omega_element(&plus)).unwrap();
        assert_eq!(om, om_plus.scale(&int(2)));
        // epsilon(Omega) = tr(1) = dim
        assert_eq!(vq(5, 1).epsilon(&omega_element(&vq(5, 1))).unwrap(), int(4));
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = vq(5, 3);
        let b = vq(5, 1);
        assert_eq!(a.mult(&a.one(), &b.one()), Err(Error::AlgebraMismatch));
        assert!(a.element(vec![int(1)]).is_err());
    }
}
