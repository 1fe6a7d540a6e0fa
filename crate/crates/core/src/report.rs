//! Table output: CSV, JSON and a markdown grid.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::arith::RatPoly;
use crate::frobenius::{build_vq, build_vq_plus, AlgebraDump};
use crate::numberfield::AnalysisReport;
use crate::riley::{chi_via_w, orth_polys, riley_via_sl2};
use crate::twobridge::Params;
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub r: u32,
    pub s: u32,
    pub dim_plus: usize,
    pub sig_eta_plus: i64,
    pub simple: bool,
    pub r1: usize,
    pub factor_degrees: Vec<usize>,
    pub inequality_strict: bool,
    pub knot_sig: i64,
}

impl From<&AnalysisReport> for TableRow {
    fn from(a: &AnalysisReport) -> Self {
        TableRow {
            r: a.params.r(),
            s: a.params.s(),
            dim_plus: a.params.dim_plus(),
            sig_eta_plus: a.sig_eta_plus,
            simple: a.simple,
            r1: a.r1,
            factor_degrees: a.factor_degrees.clone(),
            inequality_strict: a.inequality_strict,
            knot_sig: a.knot_sig,
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    r: u32,
    s: u32,
    dim_plus: usize,
    sig_eta_plus: i64,
    simple: bool,
    r1: usize,
    factor_degrees: &'a str,
    inequality_strict: bool,
}

/// One header row, then one row per cell; factor degrees are joined by `;`.
pub fn write_csv<W: io::Write>(rows: &[TableRow], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        let degrees = row
            .factor_degrees
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(";");
        w.serialize(CsvRow {
            r: row.r,
            s: row.s,
            dim_plus: row.dim_plus,
            sig_eta_plus: row.sig_eta_plus,
            simple: row.simple,
            r1: row.r1,
            factor_degrees: &degrees,
            inequality_strict: row.inequality_strict,
        })?;
    }
    w.flush()
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to a Vec");
    String::from_utf8(buf).expect("csv output is utf-8")
}

#[derive(Serialize)]
struct JsonTable<'a> {
    schema_version: u32,
    so3: bool,
    rows: &'a [TableRow],
}

pub fn to_json(rows: &[TableRow], so3: bool) -> String {
    let table = JsonTable {
        schema_version: SCHEMA_VERSION,
        so3,
        rows,
    };
    serde_json::to_string_pretty(&table).expect("table serializes") + "\n"
}

/// Lower-triangular grid with `r` down and `s` across. Each cell holds
/// `sig(eta^+)` when `so3` is set and the knot signature otherwise; a `*`
/// marks cells where `V_q^+` is not a field.
pub fn to_markdown(rows: &[TableRow], so3: bool) -> String {
    let r_max = rows.iter().map(|c| c.r).max().unwrap_or(3);
    let cols: Vec<u32> = (1..r_max).step_by(2).collect();
    let mut out = String::new();
    out.push_str("| r \\ s |");
    for s in &cols {
        let _ = write!(out, " {s} |");
    }
    out.push_str("\n|---|");
    out.push_str(&"---:|".repeat(cols.len()));
    out.push('\n');
    let mut rs: Vec<u32> = rows.iter().map(|c| c.r).collect();
    rs.dedup();
    for r in rs {
        let _ = write!(out, "| {r} |");
        for &s in &cols {
            match rows.iter().find(|c| c.r == r && c.s == s) {
                Some(c) => {
                    let v = if so3 { c.sig_eta_plus } else { c.knot_sig };
                    let mark = if c.simple { "" } else { "*" };
                    let _ = write!(out, " {v}{mark} |");
                }
                None => out.push_str("  |"),
            }
        }
        out.push('\n');
    }
    out
}

/// Both algebras of one knot together with its polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotDump {
    pub schema_version: u32,
    pub r: u32,
    pub s: u32,
    pub algebra: AlgebraDump,
    pub even: AlgebraDump,
    pub orth_polys: Vec<RatPoly>,
    pub riley: RatPoly,
    pub chi: RatPoly,
}

pub fn knot_dump(p: Params) -> Result<KnotDump> {
    let v = build_vq(p);
    let even = build_vq_plus(&v)?.to_dump();
    Ok(KnotDump {
        schema_version: SCHEMA_VERSION,
        r: p.r(),
        s: p.s(),
        algebra: v.to_dump(),
        even,
        orth_polys: orth_polys(p),
        riley: riley_via_sl2(p),
        chi: chi_via_w(p).1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::analyze_grid;
    use crate::numberfield::DEFAULT_SEED;

    fn rows(r_max: u32) -> Vec<TableRow> {
        analyze_grid(3, r_max, DEFAULT_SEED)
            .unwrap()
            .iter()
            .map(TableRow::from)
            .collect()
    }

    #[test]
    fn csv_layout() {
        let csv = to_csv(&rows(5));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "r,s,dim_plus,sig_eta_plus,simple,r1,factor_degrees,inequality_strict"
        );
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("3,1,1,1,true,1,1,"));
        assert!(lines[3].starts_with("5,3,2,0,true,0,2,"));
    }

    #[test]
    fn markdown_grid() {
        let md = to_markdown(&rows(9), true);
        assert!(md.contains("| 9 | 4* |"));
        assert!(md.contains("| 5 | 2 | 0 |"));
        let json = to_json(&rows(3), true);
        assert!(json.contains("\"schema_version\": 1"));
    }

    #[test]
    fn dump_round_trip() {
        let d = knot_dump(Params::new(5, 3).unwrap()).unwrap();
        assert_eq!(d.even.dim, 2);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<KnotDump>(&text).unwrap(), d);
    }
}
