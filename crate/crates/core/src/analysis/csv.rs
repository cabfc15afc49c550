//! CSV rendering of [`Table`]s: `,` delimiter, `.` decimal point, header
//! row, LF line endings, reals to 12 significant digits.

use std::fmt::Write;

use super::figures::{Cell, Table};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats a real to 12 significant digits.
///
/// Integral values print as integers (`1`, `0`). Otherwise trailing zeros are
/// kept so every value shows its full precision (`0.157299207050`), and
/// magnitudes outside `[1e-5, 1e12)` switch to exponent form
/// (`1.10475325529e-10`).
pub fn format_real(v: f64) -> String {
    if v.is_nan() {
        return "nan".to_owned();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    if v == v.trunc() && v.abs() < 1e15 {
        return format!("{}", v as i64);
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        return format!("{mantissa}e{exp}");
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    format!("{:.*}", decimals, v)
}

pub fn format_cell(c: &Cell) -> String {
    match *c {
        Cell::Int(i) => i.to_string(),
        Cell::Real(v) => format_real(v),
        Cell::Empty => String::new(),
    }
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(format_cell).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }
}
