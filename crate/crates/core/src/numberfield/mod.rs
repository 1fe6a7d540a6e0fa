//! Arithmetic of `Q[P(r, s)]`: factorisation, real embeddings, signatures
//! of trace forms, and the per-knot analysis built on them.

mod analysis;
mod factor;
mod fingerprint;
mod routh;
mod signature;
mod sturm;

pub use analysis::{analyze, analyze_seeded, AnalysisReport};
pub use factor::{
    factor_mod_p, factor_over_q, factor_over_q_seeded, squarefree_decomposition, Factorization,
    DEFAULT_SEED,
};
pub use fingerprint::{
    compare_fingerprints, involution_fingerprint, strip_small_squares, FactorPrint, Fingerprint,
};
pub use routh::{routh_positive_real_parts, routh_rhp_count};
pub use signature::{
    sig_eta_full, sig_eta_plus, signature_trace_form, symmetric_signature, trace_form_gram,
};
pub use sturm::{sturm_chain, sturm_real_roots, sturm_roots_in};

use num_integer::Integer as _;

use crate::arith::RatPoly;
use crate::error::{Error, Result};

/// `gcd(f, f') = 1`; constants are not squarefree polynomials here.
pub fn is_squarefree(f: &RatPoly) -> bool {
    f.degree().unwrap_or(0) >= 1 && f.is_squarefree()
}

/// Whether `disc(f)` is an odd integer (a linear polynomial has
/// discriminant 1).
pub fn disc_odd_check(f: &RatPoly) -> Result<bool> {
    if !f.has_integer_coeffs() {
        return Err(Error::NonInteger);
    }
    let d = f.discriminant()?;
    if !d.is_integer() {
        return Ok(false);
    }
    Ok(d.to_integer().is_odd())
}
