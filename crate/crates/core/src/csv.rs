//! CSV output with fixed 12-significant-digit floats.

use std::io::{self, Write};

use crate::markov::{FigureRow, TrajectoryRecord};

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// exponent form when the decimal exponent is below -4 or at least 12.
pub fn g12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let m = trim_fraction(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        trim_fraction(&format!("{:.*}", (11 - exp) as usize, x)).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(g12).unwrap_or_default()
}

/// Column layouts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    /// `t,gamma,alpha,...`
    Markov,
    /// `t,p_abs,alpha,...`
    NonMarkov,
    /// `series,` followed by the Markov columns.
    Sweep,
}

const TAIL: &str = "min_engine,gd_engine,min_pred,gd_pred,res_min,res_gd";

impl Schema {
    pub fn header(self) -> String {
        match self {
            Schema::Markov => format!("t,gamma,alpha,{TAIL}"),
            Schema::NonMarkov => format!("t,p_abs,alpha,{TAIL}"),
            Schema::Sweep => format!("series,t,gamma,alpha,{TAIL}"),
        }
    }
}

/// One data line without the series column.
pub fn record_line(alpha: Option<f64>, r: &TrajectoryRecord) -> String {
    [
        g12(r.t),
        g12(r.strength),
        opt(alpha),
        g12(r.min_engine),
        g12(r.gd_engine),
        opt(r.min_predicted),
        opt(r.gd_predicted),
        opt(r.residual_min),
        opt(r.residual_gd),
    ]
    .join(",")
}

/// Header plus one line per record.
pub fn write_records<W: Write>(
    mut w: W,
    schema: Schema,
    alpha: Option<f64>,
    records: &[TrajectoryRecord],
) -> io::Result<()> {
    writeln!(w, "{}", schema.header())?;
    for r in records {
        writeln!(w, "{}", record_line(alpha, r))?;
    }
    w.flush()
}

/// Header plus one line per figure row; the series column is written only
/// for [`Schema::Sweep`].
pub fn write_rows<W: Write>(mut w: W, schema: Schema, rows: &[FigureRow]) -> io::Result<()> {
    writeln!(w, "{}", schema.header())?;
    for row in rows {
        let line = record_line(row.alpha, &row.record);
        if schema == Schema::Sweep {
            writeln!(w, "{},{line}", row.series)?;
        } else {
            writeln!(w, "{line}")?;
        }
    }
    w.flush()
}
