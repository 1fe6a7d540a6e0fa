//! The polynomial side: `P_n`, the tridiagonal matrix, continuants,
//! continued fractions, the Riley polynomial of `K(r, s)` and `chi`.

use num_traits::{One, Signed, Zero};

use crate::arith::{int, IntPoly, Integer, RatMatrix, RatPoly};
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::frobenius::{build_vq, build_vq_plus};
use crate::twobridge::{epsilon_seq, Params, SignSeq};

fn eps_prod(seq: &SignSeq, n: usize) -> i64 {
    (seq.eps(n as i64) * seq.eps(n as i64 + 1)) as i64
}

/// `P_0, ..., P_{r-1}` with `P_{n+1} = X P_n + eps_n eps_{n+1} P_{n-1}`.
pub fn orth_polys(p: Params) -> Vec<RatPoly> {
    let seq = epsilon_seq(p);
    let r = p.r() as usize;
    let x = RatPoly::x();
    let mut out = vec![RatPoly::one(), x.clone()];
    for n in 1..r - 1 {
        let next = &(&x * &out[n]) + &out[n - 1].scale(&int(eps_prod(&seq, n)));
        out.push(next);
    }
    out
}

/// The constant part `S` of `M = X I - S`: subdiagonal -1, superdiagonal
/// `eps_n eps_{n+1}` in row `n - 1`. The leading `n x n` block has
/// characteristic polynomial `P_n`.
pub fn tridiag_matrix(p: Params) -> RatMatrix {
    let seq = epsilon_seq(p);
    let d = p.r() as usize - 1;
    let mut s = RatMatrix::zeros(d, d);
    for i in 0..d - 1 {
        s.set(i + 1, i, int(-1));
        s.set(i, i + 1, int(eps_prod(&seq, i + 1)));
    }
    s
}

/// `det(X I_n - S_n)` for the leading block of size `n`.
pub fn leading_minor_poly(p: Params, n: usize) -> Result<RatPoly> {
    tridiag_matrix(p).leading(n).char_poly()
}

/// `K_n(x_1, ..., x_n)` by `K_n = x_1 K_{n-1}(x_2..) + K_{n-2}(x_3..)`.
pub fn continuant(xs: &[RatPoly]) -> RatPoly {
    // fold from the right: (K of suffix starting at i, K of suffix at i + 1)
    let mut cur = RatPoly::one();
    let mut next = RatPoly::zero();
    for x in xs.iter().rev() {
        let k = &(x * &cur) + &next;
        next = cur;
        cur = k;
    }
    cur
}

/// The same continuant as the top-left entry of
/// `prod [[x_i, 1], [1, 0]]`.
pub fn continuant_product(xs: &[RatPoly]) -> RatPoly {
    let mut m = [
        RatPoly::one(),
        RatPoly::zero(),
        RatPoly::zero(),
        RatPoly::one(),
    ];
    for x in xs {
        m = [
            &(&m[0] * x) + &m[1],
            m[0].clone(),
            &(&m[2] * x) + &m[3],
            m[2].clone(),
        ];
    }
    m[0].clone()
}

/// Convergents `A_k / B_k` of `X + a_1 / (X + a_2 / (X + ...))` with
/// `a_k = eps_k eps_{k+1}`, for depths `1..=r-1`.
///
/// The numerators are `P_1, ..., P_{r-1}`. The denominators are the
/// associated polynomials built from `a_2, a_3, ...`; only the last one is
/// `P_{r-2}`, thanks to `eps_n = eps_{r-n}`.
pub fn cf_convergents(p: Params) -> Vec<(RatPoly, RatPoly)> {
    let seq = epsilon_seq(p);
    let r = p.r() as usize;
    let x = RatPoly::x();
    let (mut a_prev, mut a_cur) = (RatPoly::one(), x.clone());
    let (mut b_prev, mut b_cur) = (RatPoly::zero(), RatPoly::one());
    let mut out = vec![(a_cur.clone(), b_cur.clone())];
    for k in 1..r - 1 {
        let a = int(eps_prod(&seq, k));
        let a_next = &(&x * &a_cur) + &a_prev.scale(&a);
        let b_next = &(&x * &b_cur) + &b_prev.scale(&a);
        a_prev = std::mem::replace(&mut a_cur, a_next);
        b_prev = std::mem::replace(&mut b_cur, b_next);
        out.push((a_cur.clone(), b_cur.clone()));
    }
    out
}

/// `X + a_k / (X + a_{k-1} / (... + a_1 / X))` as unreduced fractions,
/// which equal `P_{k+1} / P_k` for every `k`.
pub fn cf_tails(p: Params) -> Vec<(RatPoly, RatPoly)> {
    let seq = epsilon_seq(p);
    let r = p.r() as usize;
    let x = RatPoly::x();
    let mut out = vec![(x.clone(), RatPoly::one())];
    for k in 1..r - 1 {
        let (num, den) = out.last().unwrap();
        // X + a / (num / den) = (X num + a den) / num
        let a = int(eps_prod(&seq, k));
        out.push((&(&x * num) + &den.scale(&a), num.clone()));
    }
    out
}

/// A 2x2 matrix over `Z[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2IntPoly {
    pub a: IntPoly,
    pub b: IntPoly,
    pub c: IntPoly,
    pub d: IntPoly,
}

impl SL2IntPoly {
    pub fn identity() -> Self {
        SL2IntPoly {
            a: IntPoly::one(),
            b: IntPoly::zero(),
            c: IntPoly::zero(),
            d: IntPoly::one(),
        }
    }

    /// `rho(u)^e = [[1, e], [0, 1]]` for `e = +-1`.
    pub fn u(e: i8) -> Self {
        SL2IntPoly {
            b: IntPoly::from_i64s(&[e as i64]),
            ..Self::identity()
        }
    }

    /// `rho(v)^e = [[1, 0], [e t, 1]]` for `e = +-1`.
    pub fn v(e: i8) -> Self {
        SL2IntPoly {
            c: IntPoly::from_i64s(&[0, e as i64]),
            ..Self::identity()
        }
    }

    pub fn mul(&self, o: &SL2IntPoly) -> SL2IntPoly {
        SL2IntPoly {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn det(&self) -> IntPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }
}

/// `rho(u)^{eps_1} rho(v)^{eps_2} ... rho(u)^{eps_{r-2}} rho(v)^{eps_{r-1}}`.
pub fn wirtinger_product(p: Params) -> SL2IntPoly {
    let seq = epsilon_seq(p);
    seq.as_slice()
        .iter()
        .enumerate()
        .fold(SL2IntPoly::identity(), |acc, (i, &e)| {
            let g = if i % 2 == 0 {
                SL2IntPoly::u(e)
            } else {
                SL2IntPoly::v(e)
            };
            acc.mul(&g)
        })
}

/// The raw `(1, 1)` entry of the word product.
pub fn riley_raw(p: Params) -> IntPoly {
    wirtinger_product(p).a
}

/// The Riley polynomial `R(t)`, the `(1, 1)` entry of the word product,
/// made monic by a sign if needed (the raw entry is already monic for every
/// parameter we have tried, and `verify_poly_identities` checks this).
pub fn riley_via_sl2(p: Params) -> RatPoly {
    let raw = riley_raw(p);
    let neg = raw.lc().is_some_and(Signed::is_negative);
    let raw = if neg { -&raw } else { raw };
    raw.to_rat()
}

/// `R` with `R(X^2) = P` for an even polynomial `P`.
#[allow(non_snake_case)]
pub fn riley_from_P(poly: &RatPoly) -> Result<RatPoly> {
    if let Some(k) = poly
        .coeffs()
        .iter()
        .enumerate()
        .position(|(k, c)| k % 2 == 1 && !c.is_zero())
    {
        return Err(Error::NotEven(k));
    }
    Ok(RatPoly::new(
        poly.coeffs().iter().step_by(2).cloned().collect(),
    ))
}

/// The matrix `W` of `w` on the basis `e_0, e_2, ..., e_{r-3}` of the even
/// part, and `chi(t) = det(t I - W)`.
///
/// Row 1 has `eps_{r-1}` in the last column; row `rho >= 2` has
/// `eps_{r+1-2 rho}` in column `m + 1 - rho` and `-eps_{r+2-2 rho}` in column
/// `m + 2 - rho` (1-indexed, `m = (r - 1) / 2`). For `r = 3` this is the
/// 1x1 matrix `[eps_2]`, i.e. `w = eps_2 e_0`.
pub fn chi_via_w(p: Params) -> (RatMatrix, RatPoly) {
    let seq = epsilon_seq(p);
    let r = p.r() as i64;
    let m = p.dim_plus();
    let mut w = RatMatrix::zeros(m, m);
    w.set(0, m - 1, int(seq.eps(r - 1) as i64));
    for rho in 2..=m {
        let rr = rho as i64;
        w.set(rho - 1, m - rho, int(seq.eps(r + 1 - 2 * rr) as i64));
        w.set(rho - 1, m + 1 - rho, int(-seq.eps(r + 2 - 2 * rr) as i64));
    }
    let chi = w.char_poly().expect("square");
    (w, chi)
}

/// `f(X, Y)` sampled on the grid `{0..n} x {0..n}` given `f` through the
/// tables of `P_k(a)` at integer points.
fn eval_int_table(polys: &[IntPoly], pts: &[Integer]) -> Vec<Vec<Integer>> {
    polys
        .iter()
        .map(|f| pts.iter().map(|a| f.eval(a)).collect())
        .collect()
}

/// Runs identities (a)-(f) plus the matrix, continuant and continued
/// fraction descriptions of `P_{r-1}`.
pub fn verify_poly_identities(p: Params) -> CheckReport {
    let mut rep = CheckReport::new(format!("{p} polys"));
    let seq = epsilon_seq(p);
    let r = p.r() as usize;
    let polys = orth_polys(p);
    let top = &polys[r - 1];
    let prev = &polys[r - 2];

    let shape = polys.iter().enumerate().try_for_each(|(n, f)| {
        let parity_ok = if n % 2 == 0 {
            f.is_even_poly()
        } else {
            f.is_odd_poly()
        };
        if f.degree() == Some(n) && f.is_monic() && parity_ok && f.has_integer_coeffs() {
            Ok(())
        } else {
            Err(format!("P_{n} = {f}"))
        }
    });
    rep.record("p_monic_parity", shape);

    let s = tridiag_matrix(p);
    let minors = s
        .leading_char_polys()
        .map_err(|e| e.to_string())
        .and_then(|all| {
            (1..r).try_for_each(|n| {
                if all[n] == polys[n] {
                    Ok(())
                } else {
                    Err(format!("minor {n} = {}", all[n]))
                }
            })
        });
    rep.record("leading_minors", minors);

    let xs: Vec<RatPoly> = (1..r)
        .map(|i| RatPoly::x().scale(&int(seq.eps(i as i64) as i64)))
        .collect();
    let sign: i64 = seq.as_slice().iter().map(|&e| e as i64).product();
    let k = continuant(&xs);
    let cont_ok = k.scale(&int(sign)) == *top && continuant_product(&xs) == k;
    rep.push(
        "continuant",
        cont_ok,
        if cont_ok {
            String::new()
        } else {
            format!("K = {k}")
        },
    );

    let conv = cf_convergents(p);
    let nums_ok = conv
        .iter()
        .enumerate()
        .all(|(k, (a, _))| *a == polys[k + 1]);
    let last = conv.last().unwrap();
    let tails_ok = cf_tails(p)
        .iter()
        .enumerate()
        .all(|(k, (a, b))| *a == polys[k + 1] && *b == polys[k]);
    rep.push(
        "continued_fraction",
        nums_ok && last.0 == *top && last.1 == *prev && tails_ok,
        if nums_ok {
            ""
        } else {
            "numerators differ from P_k"
        },
    );
    let g = top.gcd(prev);
    rep.push(
        "coprime",
        g == RatPoly::one(),
        if g == RatPoly::one() {
            String::new()
        } else {
            format!("gcd = {g}")
        },
    );

    // (a)
    let raw = riley_raw(p);
    let raw_monic = raw.lc().is_some_and(One::is_one);
    rep.push(
        "riley_raw_monic",
        raw_monic,
        if raw_monic {
            String::new()
        } else {
            format!("raw = {}", raw.to_rat())
        },
    );
    let riley = riley_via_sl2(p);
    rep.record(
        "riley_p",
        if riley.subs_square() == *top && riley.degree() == Some(p.dim_plus()) {
            Ok(())
        } else {
            Err(format!("R = {riley}"))
        },
    );

    // (b)
    let (_, chi) = chi_via_w(p);
    let lhs = &chi * &chi.reflect();
    let rhs = riley.compose(&RatPoly::from_ints(&[0, 0, -1]));
    rep.record(
        "chi_product",
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!("chi = {chi}"))
        },
    );
    let c0 = chi.coeff(0);
    rep.push("chi_unit", c0.abs().is_one(), format!("chi(0) = {c0}"));

    // (c) sum (-1)^n eps_{n+1} P_n^2 = -(P'_{r-1} P_{r-2} - P_{r-1} P'_{r-2})
    let mut sum = RatPoly::zero();
    for (n, f) in polys.iter().take(r - 1).enumerate() {
        let h = if n % 2 == 0 { 1 } else { -1 } * seq.eps(n as i64 + 1) as i64;
        sum = &sum + &(f * f).scale(&int(h));
    }
    let cd = -(&(&top.derivative() * prev) - &(top * &prev.derivative()));
    rep.record(
        "christoffel_darboux_confluent",
        if sum == cd {
            Ok(())
        } else {
            Err("sum != rhs".into())
        },
    );

    // (d) (X - Y) sum h_n P_n(X) P_n(Y) = -(P_{r-1}(X) P_{r-2}(Y) - P_{r-2}(X) P_{r-1}(Y))
    // on the (r + 1) x (r + 1) integer grid; each side has degree < r + 1 in
    // each variable.
    let ints: Vec<IntPoly> = polys
        .iter()
        .map(|f| IntPoly::from_rat_primitive(f).1)
        .collect();
    let pts: Vec<Integer> = (0..=r as i64).map(Integer::from).collect();
    let table = eval_int_table(&ints, &pts);
    let hs: Vec<i64> = (0..r - 1)
        .map(|n| if n % 2 == 0 { 1 } else { -1 } * seq.eps(n as i64 + 1) as i64)
        .collect();
    let cd2 = (|| {
        for (ia, a) in pts.iter().enumerate() {
            for (ib, b) in pts.iter().enumerate() {
                let mut s = Integer::zero();
                for (n, &h) in hs.iter().enumerate() {
                    let t = &table[n][ia] * &table[n][ib];
                    if h > 0 {
                        s += t;
                    } else {
                        s -= t;
                    }
                }
                let lhs = (a - b) * s;
                let rhs = -(&table[r - 1][ia] * &table[r - 2][ib]
                    - &table[r - 2][ia] * &table[r - 1][ib]);
                if lhs != rhs {
                    return Err(format!("at (X, Y) = ({a}, {b})"));
                }
            }
        }
        Ok(())
    })();
    rep.record("christoffel_darboux", cd2);

    // (e)
    let u = orth_polys(Params::new(r as i64, 1).expect("(r, 1) is valid"));
    let mod2 = ints[r - 1].to_mod(2) == IntPoly::from_rat_primitive(&u[r - 1]).1.to_mod(2);
    rep.push("same_mod_2", mod2, "");

    // (f)
    let v = build_vq(p);
    let from_alg = build_vq_plus(&v).and_then(|plus| {
        let x = v.basis(1);
        let xx = plus.restrict_from(&v, &v.mult(&x, &x)?)?;
        plus.char_poly(&xx)
    });
    rep.record(
        "riley_char_poly",
        match from_alg {
            Ok(f) if f == riley => Ok(()),
            Ok(f) => Err(format!("det(t - x^2) = {f}")),
            Err(e) => Err(e.to_string()),
        },
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(r: i64, s: i64) -> Params {
        Params::new(r, s).unwrap()
    }

    #[test]
    fn orth_poly_examples() {
        assert_eq!(orth_polys(pr(3, 1))[2], RatPoly::from_ints(&[1, 0, 1]));
        let p = orth_polys(pr(5, 3));
        assert_eq!(p[2], RatPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(p[3], RatPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(p[4], RatPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(
            orth_polys(pr(5, 1))[4],
            RatPoly::from_ints(&[1, 0, 3, 0, 1])
        );
    }

    #[test]
    fn minors() {
        assert_eq!(leading_minor_poly(pr(5, 3), 1).unwrap(), RatPoly::x());
        assert_eq!(
            leading_minor_poly(pr(5, 3), 4).unwrap(),
            RatPoly::from_ints(&[1, 0, -1, 0, 1])
        );
        let s = tridiag_matrix(pr(7, 1));
        assert!((0..5).all(|i| *s.get(i, i + 1) == int(1) && *s.get(i + 1, i) == int(-1)));
    }

    #[test]
    fn continuant_examples() {
        let x = RatPoly::x();
        assert_eq!(continuant(std::slice::from_ref(&x)), x);
        let y = RatPoly::from_ints(&[2, 1]);
        assert_eq!(
            continuant(&[x.clone(), y.clone()]),
            &(&x * &y) + &RatPoly::one()
        );
        assert_eq!(continuant(&[]), RatPoly::one());
        let xs = vec![x.clone(), y.clone(), x.clone(), RatPoly::from_ints(&[3])];
        assert_eq!(continuant(&xs), continuant_product(&xs));
    }

    #[test]
    fn convergents() {
        let c = cf_convergents(pr(5, 3));
        assert_eq!(c[0], (RatPoly::x(), RatPoly::one()));
        assert_eq!(c.last().unwrap().0, RatPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(c.last().unwrap().1, RatPoly::from_ints(&[0, 0, 0, 1]));
        // an intermediate denominator that is not P_k
        let c = cf_convergents(pr(7, 3));
        assert_eq!(c[2].1, RatPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(orth_polys(pr(7, 3))[2], RatPoly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn riley_examples() {
        assert_eq!(riley_via_sl2(pr(3, 1)), RatPoly::from_ints(&[1, 1]));
        assert_eq!(riley_via_sl2(pr(5, 3)), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(riley_via_sl2(pr(5, 1)), RatPoly::from_ints(&[1, 3, 1]));
        assert_eq!(wirtinger_product(pr(9, 5)).det(), IntPoly::one());
    }

    #[test]
    fn riley_from_even_poly() {
        assert_eq!(
            riley_from_P(&RatPoly::from_ints(&[1, 0, -1, 0, 1])).unwrap(),
            RatPoly::from_ints(&[1, -1, 1])
        );
        assert_eq!(
            riley_from_P(&RatPoly::from_ints(&[1, 0, 1])).unwrap(),
            RatPoly::from_ints(&[1, 1])
        );
        assert_eq!(
            riley_from_P(&RatPoly::from_ints(&[0, 1, 1])),
            Err(Error::NotEven(1))
        );
    }

    #[test]
    fn chi_examples() {
        let (w, chi) = chi_via_w(pr(5, 3));
        assert_eq!(w, RatMatrix::from_ints(&[vec![0, 1], vec![-1, 1]]).unwrap());
        assert_eq!(chi, RatPoly::from_ints(&[1, -1, 1]));
        let (_, chi) = chi_via_w(pr(5, 1));
        let both = &chi * &chi.reflect();
        assert_eq!(both, RatPoly::from_ints(&[1, 0, -3, 0, 1]));
        let (w, chi) = chi_via_w(pr(3, 1));
        assert_eq!((w.rows(), chi), (1, RatPoly::from_ints(&[-1, 1])));
    }

    #[test]
    fn identity_suite_small() {
        for (r, s) in [(3, 1), (5, 1), (5, 3), (7, 3), (9, 5), (11, 3)] {
            let rep = verify_poly_identities(pr(r, s));
            assert!(rep.passed(), "{rep}");
        }
    }
}
