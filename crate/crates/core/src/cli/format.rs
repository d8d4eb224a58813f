//! Text serialisation of catalogs and field grids.

use serde::{Deserialize, Serialize};

use crate::modes::{FieldGrid, ModeRecord};

/// CSV header of the mode catalog, in column order.
pub const MODES_HEADER: [&str; 11] = [
    "i",
    "l",
    "paper_parity",
    "beta_w_per_um",
    "beta_s_per_um",
    "h_per_um",
    "m",
    "p_rad",
    "n_eff",
    "r_av_um",
    "physical",
];

pub const PROFILE_HEADER: [&str; 3] = ["r_um", "z_um", "E"];

/// `printf("%.6g")`-style: six significant digits, trailing zeros
/// stripped, scientific notation outside `1e-4 <= |v| < 1e6`.
pub fn fmt_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (5 - exp) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Value as it appears after a trip through [`fmt_sig6`].
pub fn round_sig6(v: f64) -> f64 {
    fmt_sig6(v).parse().expect("formatted float parses")
}

/// One catalog row exactly as serialised.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeRow {
    pub i: usize,
    pub l: usize,
    pub paper_parity: String,
    pub beta_w_per_um: f64,
    pub beta_s_per_um: f64,
    pub h_per_um: f64,
    pub m: f64,
    pub p_rad: f64,
    pub n_eff: f64,
    pub r_av_um: f64,
    pub physical: bool,
}

impl From<&ModeRecord> for ModeRow {
    fn from(r: &ModeRecord) -> Self {
        ModeRow {
            i: r.i,
            l: r.l,
            paper_parity: r.family.as_str().to_string(),
            beta_w_per_um: round_sig6(r.beta_w),
            beta_s_per_um: round_sig6(r.beta_s),
            h_per_um: round_sig6(r.h),
            m: round_sig6(r.m),
            p_rad: round_sig6(r.p),
            n_eff: round_sig6(r.n_eff),
            r_av_um: round_sig6(r.r_av),
            physical: r.physical,
        }
    }
}

impl ModeRow {
    fn fields(&self) -> [String; 11] {
        [
            self.i.to_string(),
            self.l.to_string(),
            self.paper_parity.clone(),
            fmt_sig6(self.beta_w_per_um),
            fmt_sig6(self.beta_s_per_um),
            fmt_sig6(self.h_per_um),
            fmt_sig6(self.m),
            fmt_sig6(self.p_rad),
            fmt_sig6(self.n_eff),
            fmt_sig6(self.r_av_um),
            self.physical.to_string(),
        ]
    }
}

pub fn catalog_rows(records: &[ModeRecord]) -> Vec<ModeRow> {
    let mut rows: Vec<ModeRow> = records.iter().map(ModeRow::from).collect();
    rows.sort_by_key(|r| (r.i, r.l));
    rows
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("in-memory writer");
    String::from_utf8(bytes).expect("ASCII output")
}

pub fn catalog_csv(rows: &[ModeRow]) -> String {
    let mut w = csv_writer();
    w.write_record(MODES_HEADER).expect("in-memory write");
    for row in rows {
        w.write_record(row.fields()).expect("in-memory write");
    }
    finish(w)
}

pub fn catalog_json(rows: &[ModeRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialise");
    s.push('\n');
    s
}

pub fn parse_catalog_csv(text: &str) -> Result<Vec<ModeRow>, csv::Error> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

pub fn parse_catalog_json(text: &str) -> Result<Vec<ModeRow>, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn profile_csv(grid: &FieldGrid) -> String {
    let mut w = csv_writer();
    w.write_record(PROFILE_HEADER).expect("in-memory write");
    for (iz, &z) in grid.z_samples.iter().enumerate() {
        for (ir, &r) in grid.r_samples.iter().enumerate() {
            w.write_record([fmt_sig6(r), fmt_sig6(z), fmt_sig6(grid.at(ir, iz))])
                .expect("in-memory write");
        }
    }
    finish(w)
}
