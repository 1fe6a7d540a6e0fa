use serde::{Deserialize, Serialize};

use super::{AlgebraKind, FrobAlg};
use crate::error::{Error, Result};
use crate::twobridge::Params;

pub const ALGEBRA_SCHEMA: u32 = 1;

/// Serialisable form of a structure-constant table. Constants are listed as
/// `[i, j, k, c_ij^k]` for the nonzero entries in lexicographic order, so the
/// output is byte-for-byte reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDump {
    pub schema_version: u32,
    pub r: u32,
    pub s: u32,
    pub kind: AlgebraKind,
    pub dim: usize,
    pub labels: Vec<usize>,
    pub eta_diag: Vec<i8>,
    pub struct_consts: Vec<[i64; 4]>,
}

impl FrobAlg {
    pub fn to_dump(&self) -> AlgebraDump {
        let d = self.dim();
        let mut struct_consts = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in self.basis_product(i, j) {
                    struct_consts.push([i as i64, j as i64, k as i64, c as i64]);
                }
            }
        }
        AlgebraDump {
            schema_version: ALGEBRA_SCHEMA,
            r: self.params.r(),
            s: self.params.s(),
            kind: self.kind,
            dim: d,
            labels: self.labels.clone(),
            eta_diag: self.eta.clone(),
            struct_consts,
        }
    }

    /// Rebuilds a table from a dump. Only the shape is validated; the
    /// algebra axioms are left to [`super::verify_algebra`].
    pub fn from_dump(dump: &AlgebraDump) -> Result<FrobAlg> {
        if dump.schema_version != ALGEBRA_SCHEMA {
            return Err(Error::DimensionMismatch(format!(
                "unknown schema version {}",
                dump.schema_version
            )));
        }
        let params = Params::new(dump.r as i64, dump.s as i64)?;
        let d = dump.dim;
        if dump.labels.len() != d || dump.eta_diag.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "dim {d} with {} labels and {} pairing entries",
                dump.labels.len(),
                dump.eta_diag.len()
            )));
        }
        let mut consts = vec![0i8; d * d * d];
        for &[i, j, k, c] in &dump.struct_consts {
            let idx = [i, j, k];
            if let Some(&bad) = idx.iter().find(|&&x| x < 0 || x as usize >= d) {
                return Err(Error::OutOfRange {
                    index: bad.max(0) as usize,
                    bound: d,
                });
            }
            let c = i8::try_from(c).map_err(|_| Error::NonInteger)?;
            consts[((i as usize) * d + j as usize) * d + k as usize] = c;
        }
        Ok(FrobAlg::assemble(
            params,
            dump.kind,
            dump.labels.clone(),
            dump.eta_diag.clone(),
            consts,
        ))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dump()).expect("dump serialises")
    }

    pub fn from_json(s: &str) -> Result<FrobAlg> {
        let dump: AlgebraDump = serde_json::from_str(s)
            .map_err(|e| Error::DimensionMismatch(format!("bad algebra json: {e}")))?;
        FrobAlg::from_dump(&dump)
    }
}
