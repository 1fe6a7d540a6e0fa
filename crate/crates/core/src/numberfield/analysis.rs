use serde::Serialize;

use super::disc_odd_check;
use super::factor::{factor_over_q_seeded, Factorization, DEFAULT_SEED};
use super::signature::{sig_eta_full, sig_eta_plus, signature_trace_form};
use super::sturm::sturm_real_roots;
use crate::arith::RatPoly;
use crate::error::Result;
use crate::frobenius::{build_vq, build_vq_plus, omega_element, special_elements};
use crate::riley::{chi_via_w, riley_via_sl2};
use crate::twobridge::{epsilon_seq, knot_signature, Params};

/// Everything the signature table records about one knot, plus the
/// internal cross-checks that went into it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub params: Params,
    pub riley: RatPoly,
    pub chi: RatPoly,
    pub chi_factors: Factorization,
    /// `V_q^+` is a field, i.e. `chi` is irreducible.
    pub simple: bool,
    pub factor_degrees: Vec<usize>,
    /// Real embeddings of `V_q^+`: real roots of `chi`.
    pub r1: usize,
    pub sig_eta_plus: i64,
    /// Signature of the alternating diagonal on all of `V_q`.
    pub sig_eta_full: i64,
    pub knot_sig: i64,
    /// `|sig(eta^+)| < r1`.
    pub inequality_strict: bool,
    pub disc_odd: bool,
    /// `sig(eta^+)` recomputed as the signature of `tr(x^2 / Omega^+)`.
    pub sig_trace_form: i64,
    /// `sig(tr(x^2))` on `V_q^+`, which must equal `r1`.
    pub sig_trace_one: i64,
    /// The minimal polynomial of `w` on `V_q^+` has full degree.
    pub w_generates: bool,
}

pub fn analyze(p: Params) -> Result<AnalysisReport> {
    analyze_seeded(p, DEFAULT_SEED)
}

pub fn analyze_seeded(p: Params, seed: u64) -> Result<AnalysisReport> {
    let riley = riley_via_sl2(p);
    let (_, chi) = chi_via_w(p);
    let chi_factors = factor_over_q_seeded(&chi, seed)?;
    let simple = chi_factors.is_irreducible();
    let factor_degrees = chi_factors.degrees();
    let r1 = chi_factors
        .factors
        .iter()
        .map(|(f, m)| sturm_real_roots(f).map(|n| n * m))
        .sum::<Result<usize>>()?;
    let sig = sig_eta_plus(p);

    let v = build_vq(p);
    let plus = build_vq_plus(&v)?;
    let alpha = plus.inverse(&omega_element(&plus))?;
    let sig_trace_form = signature_trace_form(&plus, &alpha)?;
    let sig_trace_one = signature_trace_form(&plus, &plus.one())?;
    let w_generates = match special_elements(&v)?.w_plus {
        Some(w) => plus.min_poly(&w)?.degree() == Some(plus.dim()),
        None => true,
    };

    Ok(AnalysisReport {
        params: p,
        disc_odd: disc_odd_check(&riley)?,
        riley,
        chi,
        chi_factors,
        simple,
        factor_degrees,
        r1,
        sig_eta_plus: sig,
        sig_eta_full: sig_eta_full(p),
        knot_sig: knot_signature(&epsilon_seq(p)),
        inequality_strict: (sig.unsigned_abs() as usize) < r1,
        sig_trace_form,
        sig_trace_one,
        w_generates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_eight() {
        let a = analyze(Params::new(5, 3).unwrap()).unwrap();
        assert!(a.simple);
        assert_eq!((a.r1, a.sig_eta_plus, a.inequality_strict), (0, 0, false));
        assert_eq!(a.sig_trace_form, a.sig_eta_plus);
        assert_eq!(a.sig_trace_one, 0);
        assert!(a.disc_odd && a.w_generates);
    }

    #[test]
    fn non_simple_cells() {
        assert!(!analyze(Params::new(9, 1).unwrap()).unwrap().simple);
        let a = analyze(Params::new(15, 11).unwrap()).unwrap();
        assert!(!a.simple);
        assert_eq!(a.sig_eta_plus, 1);
        assert_eq!(a.knot_sig, 2 * a.sig_eta_plus);
    }
}
