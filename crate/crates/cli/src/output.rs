//! Boundary samples as CSV, JSON and SVG.

use std::io::{Read, Write};

use karpelevich::BoundaryPoint;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const CSV_HEADER: [&str; 9] = ["theta", "rho", "re", "im", "alpha", "q", "s", "type", "j0"];

/// One boundary sample. `theta` is in radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub theta: f64,
    pub rho: f64,
    pub re: f64,
    pub im: f64,
    pub alpha: f64,
    pub q: u64,
    pub s: u64,
    #[serde(rename = "type")]
    pub arc_type: String,
    pub j0: u64,
}

impl From<&BoundaryPoint> for OutputRecord {
    fn from(b: &BoundaryPoint) -> Self {
        Self {
            theta: b.theta,
            rho: b.rho,
            re: b.value.re,
            im: b.value.im,
            alpha: b.alpha,
            q: b.params.q,
            s: b.params.s,
            arc_type: b.params.arc_type.name().to_string(),
            j0: b.params.j0,
        }
    }
}

/// 17 significant digits, enough to read back the same `f64`.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(records: &[OutputRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            fmt_f64(r.theta),
            fmt_f64(r.rho),
            fmt_f64(r.re),
            fmt_f64(r.im),
            fmt_f64(r.alpha),
            r.q.to_string(),
            r.s.to_string(),
            r.arc_type.clone(),
            r.j0.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<OutputRecord>, CliError> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != CSV_HEADER {
        return Err(CliError::Usage(format!("unexpected CSV header {header:?}")));
    }
    r.deserialize().map(|row| row.map_err(CliError::from)).collect()
}

pub fn write_json<W: Write>(records: &[OutputRecord], mut out: W) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)?;
    Ok(())
}

const VIEW: f64 = 1000.0;
const SCALE: f64 = 450.0;

fn to_view(re: f64, im: f64) -> (f64, f64) {
    (VIEW / 2.0 + SCALE * re, VIEW / 2.0 - SCALE * im)
}

/// Unit circle, axes and the closed boundary polygon on a 1000×1000 canvas.
pub fn write_svg<W: Write>(records: &[OutputRecord], n: u64, mut out: W) -> Result<(), CliError> {
    let c = VIEW / 2.0;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" height="{VIEW}" viewBox="0 0 {VIEW} {VIEW}">"#
    )?;
    writeln!(out, "  <title>Eigenvalue region of order {n}</title>")?;
    writeln!(out, r##"  <rect width="{VIEW}" height="{VIEW}" fill="#ffffff"/>"##)?;
    writeln!(
        out,
        r##"  <line x1="0" y1="{c}" x2="{VIEW}" y2="{c}" stroke="#bbbbbb" stroke-width="1"/>"##
    )?;
    writeln!(
        out,
        r##"  <line x1="{c}" y1="0" x2="{c}" y2="{VIEW}" stroke="#bbbbbb" stroke-width="1"/>"##
    )?;
    writeln!(
        out,
        r##"  <circle cx="{c}" cy="{c}" r="{SCALE}" fill="none" stroke="#888888" stroke-width="1.5"/>"##
    )?;
    let mut d = String::new();
    for (i, r) in records.iter().enumerate() {
        let (x, y) = to_view(r.re, r.im);
        d.push_str(if i == 0 { "M" } else { " L" });
        d.push_str(&format!("{x:.3},{y:.3}"));
    }
    d.push_str(" Z");
    writeln!(
        out,
        r##"  <path d="{d}" fill="#4477aa" fill-opacity="0.35" stroke="#224477" stroke-width="1.5"/>"##
    )?;
    writeln!(out, "</svg>")?;
    Ok(())
}
