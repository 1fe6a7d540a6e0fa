use num_traits::Zero;

use crate::arith::{sign_of, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::frobenius::{AlgElement, FrobAlg};
use crate::twobridge::{epsilon_seq, Params};

/// `(signature, rank)` of a symmetric rational matrix by congruence
/// reduction. Nonzero diagonal pivots are used first; when the remaining
/// diagonal vanishes, an off-diagonal entry `a` gives a hyperbolic block
/// `[[0, a], [a, 0]]`, which contributes rank 2 and signature 0.
pub fn symmetric_signature(m: &RatMatrix) -> Result<(i64, usize)> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(Error::DimensionMismatch("matrix is not symmetric".into()));
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;
    let mut rank = 0usize;
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let i = active.remove(pos);
            let piv = a[i][i].clone();
            sig += sign_of(&piv) as i64;
            rank += 1;
            for &j in &active {
                if a[j][i].is_zero() {
                    continue;
                }
                let f = &a[j][i] / &piv;
                for &k in &active {
                    let d = &f * &a[i][k];
                    a[j][k] -= d;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(pi, &i)| {
            active
                .iter()
                .enumerate()
                .skip(pi + 1)
                .find(|&(_, &l)| !a[i][l].is_zero())
                .map(|(pl, _)| (pi, pl))
        });
        let Some((pi, pl)) = pair else { break };
        let (i, l) = (active[pi], active[pl]);
        active.remove(pl);
        active.remove(pi);
        let inv = a[i][l].recip();
        rank += 2;
        // Schur complement of the block: A_jk -= (A_ji A_lk + A_jl A_ik) / a
        let snapshot: Vec<(usize, Rational, Rational)> = active
            .iter()
            .map(|&j| (j, a[j][i].clone(), a[j][l].clone()))
            .collect();
        for (j, aji, ajl) in &snapshot {
            for (k, aki, akl) in &snapshot {
                let d = (aji * akl + ajl * aki) * &inv;
                a[*j][*k] -= d;
            }
        }
    }
    Ok((sig, rank))
}

/// Gram matrix `G_ij = tr_V(e_i e_j t)`.
pub fn trace_form_gram(v: &FrobAlg, t: &AlgElement) -> Result<RatMatrix> {
    let d = v.dim();
    // T_ik = tr(e_i e_k)
    let traces: Vec<Rational> = (0..d)
        .map(|l| v.trace_of(&v.basis(l)))
        .collect::<Result<_>>()?;
    let mut tmat = vec![vec![Rational::zero(); d]; d];
    for (i, row) in tmat.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate() {
            for &(l, c) in v.basis_product(i, k) {
                if c > 0 {
                    *slot += &traces[l];
                } else {
                    *slot -= &traces[l];
                }
            }
        }
    }
    let u = v.mult_matrix(t)?;
    let mut g = RatMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let s: Rational = (0..d)
                .filter(|&k| !u.get(k, j).is_zero())
                .map(|k| &tmat[i][k] * u.get(k, j))
                .sum();
            g.set(i, j, s);
        }
    }
    Ok(g)
}

/// Signature of `x -> tr_V(x^2 t)`; a degenerate form is an error.
pub fn signature_trace_form(v: &FrobAlg, t: &AlgElement) -> Result<i64> {
    let g = trace_form_gram(v, t)?;
    let (sig, rank) = symmetric_signature(&g)?;
    if rank < v.dim() {
        return Err(Error::DegenerateForm { rank, dim: v.dim() });
    }
    Ok(sig)
}

/// `sum_i eps_{2i+1}`, the signature of the diagonal pairing on the even
/// part.
pub fn sig_eta_plus(p: Params) -> i64 {
    let seq = epsilon_seq(p);
    (0..p.dim_plus())
        .map(|i| seq.eps(2 * i as i64 + 1) as i64)
        .sum()
}

/// Signature of the full diagonal `(-1)^i eps_{i+1}`, which vanishes by the
/// symmetry `eps_n = eps_{r-n}`.
pub fn sig_eta_full(p: Params) -> i64 {
    let seq = epsilon_seq(p);
    (0..p.r() as i64 - 1)
        .map(|i| if i % 2 == 0 { 1 } else { -1 } * seq.eps(i + 1) as i64)
        .sum()
}
