//! Tables of dimensions, multiplet spectra, Clebsch–Gordan series and
//! induced-representation multiplicities, as CSV or JSON.

use serde::Serialize;

use schwinger_core::catalog::{self, half_str, third_str, IrrepLabel, Subgroup};
use schwinger_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Dims,
    Spectra,
    Cg,
    Mult,
}

impl TableKind {
    pub fn parse(s: &str) -> Result<TableKind> {
        match s {
            "dims" => Ok(TableKind::Dims),
            "spectra" => Ok(TableKind::Spectra),
            "cg" => Ok(TableKind::Cg),
            "mult" => Ok(TableKind::Mult),
            _ => Err(Error::Argument(format!(
                "unknown table {s:?} (expected dims, spectra, cg or mult)"
            ))),
        }
    }
}

#[derive(Serialize)]
pub struct DimRow {
    pub p: u32,
    pub q: u32,
    pub dim: u64,
    pub k2: u32,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
pub struct SpectrumRow {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub s: u32,
    pub I2: u32,
    pub Y3: i32,
    pub I: String,
    pub Y: String,
    pub size: u64,
}

#[derive(Serialize)]
pub struct CgRow {
    pub p: u32,
    pub q: u32,
    pub rho: u32,
    pub p_out: u32,
    pub q_out: u32,
    pub dim_out: u64,
}

#[derive(Serialize)]
pub struct MultRow {
    pub subgroup: &'static str,
    pub p: u32,
    pub q: u32,
    pub multiplicity: u32,
}

fn reps(max_p: u32, max_q: u32) -> impl Iterator<Item = IrrepLabel> {
    (0..=max_p).flat_map(move |p| (0..=max_q).map(move |q| IrrepLabel::new(p, q)))
}

pub fn dim_rows(max_p: u32, max_q: u32) -> Vec<DimRow> {
    reps(max_p, max_q)
        .map(|r| DimRow {
            p: r.p,
            q: r.q,
            dim: r.dim(),
            k2: r.k2(),
        })
        .collect()
}

pub fn spectrum_rows(rep: IrrepLabel) -> Vec<SpectrumRow> {
    catalog::iy_spectrum(rep)
        .into_iter()
        .map(|e| SpectrumRow {
            p: rep.p,
            q: rep.q,
            r: e.r,
            s: e.s,
            I2: e.i2,
            Y3: e.y3,
            I: half_str(e.i2 as i32),
            Y: third_str(e.y3),
            size: e.size(),
        })
        .collect()
}

pub fn cg_rows(p: u32, q: u32) -> Vec<CgRow> {
    catalog::cg_series(p, q)
        .into_iter()
        .enumerate()
        .map(|(rho, out)| CgRow {
            p,
            q,
            rho: rho as u32,
            p_out: out.p,
            q_out: out.q,
            dim_out: out.dim(),
        })
        .collect()
}

pub fn mult_rows(subgroups: &[Subgroup], max_p: u32, max_q: u32) -> Vec<MultRow> {
    let mut out = Vec::new();
    for rep in reps(max_p, max_q) {
        for &g in subgroups {
            out.push(MultRow {
                subgroup: g.name(),
                p: rep.p,
                q: rep.q,
                multiplicity: catalog::induced_multiplicity(g, rep),
            });
        }
    }
    out
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::Consistency(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Consistency(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Consistency(format!("csv: {e}")))
}

pub fn to_json<T: Serialize>(rows: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows always serialize");
    s.push('\n');
    s
}
