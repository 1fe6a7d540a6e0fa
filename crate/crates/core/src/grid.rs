//! Evaluation over the `(r, s)` grid. Cells are independent; results come
//! back in input order whatever the scheduling, so output never depends on
//! the worker count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::check::CheckReport;
use crate::frobenius::{build_vq, build_vq_plus, verify_algebra};
use crate::numberfield::{analyze_seeded, AnalysisReport};
use crate::riley::verify_poly_identities;
use crate::tqft::verify_tqft;
use crate::twobridge::Params;
use crate::Result;

/// Applies `f` to every cell, in parallel when the `parallel` feature is on.
pub fn map_cells<T, F>(cells: &[Params], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Params) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        cells.par_iter().map(|&p| f(p)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_cells_sequential(cells, f)
    }
}

pub fn map_cells_sequential<T, F>(cells: &[Params], f: F) -> Vec<T>
where
    F: Fn(Params) -> T,
{
    cells.iter().map(|&p| f(p)).collect()
}

pub fn analyze_grid(r_min: u32, r_max: u32, seed: u64) -> Result<Vec<AnalysisReport>> {
    let cells = Params::grid(r_min, r_max);
    map_cells(&cells, |p| analyze_seeded(p, seed))
        .into_iter()
        .collect()
}

/// A deliberate corruption for exercising the failure path of the
/// verification suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fault {
    pub target: Params,
}

/// The full identity suite for one cell: both algebras, the polynomial
/// identities and the residue/TQFT checks.
pub fn verify_cell(p: Params, fault: Option<Fault>) -> CheckReport {
    let mut v = build_vq(p);
    if fault.is_some_and(|f| f.target == p) && v.dim() > 2 {
        // flip the sign of the e_2 coefficient in e_1 e_1
        let c = v.structure_constant(1, 1, 2);
        v = v.with_structure_constant(1, 1, 2, -c);
    }
    let mut rep = CheckReport::new(p.to_string());
    let mut parts = vec![verify_algebra(&v)];
    match build_vq_plus(&v) {
        Ok(plus) => parts.push(verify_algebra(&plus)),
        Err(e) => rep.push(format!("{p} even_part"), false, e.to_string()),
    }
    parts.push(verify_poly_identities(p));
    parts.push(verify_tqft(p));
    for mut part in parts {
        for c in &mut part.checks {
            c.name = format!("{} {}", part.subject, c.name);
        }
        rep.extend(part);
    }
    rep
}

pub fn verify_grid(r_max: u32, fault: Option<Fault>) -> Vec<CheckReport> {
    map_cells(&Params::grid(3, r_max), |p| verify_cell(p, fault))
}
