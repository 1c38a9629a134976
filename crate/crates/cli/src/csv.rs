//! CSV emission with pinned headers, canonical row order, six-significant-
//! digit floats, and LF line endings.

use coordsim::experiments::{HeatmapRow, RobustnessReport, SweepRow};
use std::io;
use std::path::Path;

/// Render a float with six significant digits, trailing zeros trimmed but a
/// decimal point always present (`0.0`, `0.2`, `10.0`, `1.80385`).
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.push('0');
        }
    } else {
        s.push_str(".0");
    }
    s
}

/// A row type bound to one CSV schema.
pub trait CsvRecord {
    const HEADER: &'static str;
    fn write_row(&self, out: &mut String);
}

impl CsvRecord for SweepRow {
    const HEADER: &'static str =
        "regime,K_A,output,output_index,gini_economy,gini_managers,gap,top10_share,unemployment,employed";

    fn write_row(&self, out: &mut String) {
        let m = &self.metrics;
        out.push_str(self.regime.name());
        for v in [
            self.k_a,
            m.output,
            m.output_index,
            m.gini_economy,
            m.gini_managers,
            m.gap,
            m.top10_share,
            m.unemployment,
        ] {
            out.push(',');
            out.push_str(&format_float(v));
        }
        out.push(',');
        out.push_str(&m.employed.to_string());
    }
}

impl CsvRecord for HeatmapRow {
    const HEADER: &'static str = "beta,delta,gini_managers,output";

    fn write_row(&self, out: &mut String) {
        out.push_str(&format_float(self.beta));
        for v in [self.delta, self.gini_managers, self.output] {
            out.push(',');
            out.push_str(&format_float(v));
        }
    }
}

/// Robustness rows flattened for CSV: each (alpha, regime) row repeats its
/// alpha's five qualitative check outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct RobustnessCsvRow {
    pub alpha: f64,
    pub regime: &'static str,
    pub mgr_gini: f64,
    pub gap: f64,
    pub employed: usize,
    pub checks: [bool; 5],
}

pub fn robustness_csv_rows(report: &RobustnessReport) -> Vec<RobustnessCsvRow> {
    report
        .rows
        .iter()
        .map(|row| {
            let checks = report
                .checks
                .iter()
                .find(|c| c.alpha == row.alpha)
                .map(|c| c.as_array())
                .unwrap_or([false; 5]);
            RobustnessCsvRow {
                alpha: row.alpha,
                regime: row.regime.name(),
                mgr_gini: row.mgr_gini,
                gap: row.gap,
                employed: row.employed,
                checks,
            }
        })
        .collect()
}

impl CsvRecord for RobustnessCsvRow {
    const HEADER: &'static str =
        "alpha,regime,mgr_gini,gap,employed,check1,check2,check3,check4,check5";

    fn write_row(&self, out: &mut String) {
        out.push_str(&format_float(self.alpha));
        out.push(',');
        out.push_str(self.regime);
        out.push(',');
        out.push_str(&format_float(self.mgr_gini));
        out.push(',');
        out.push_str(&format_float(self.gap));
        out.push(',');
        out.push_str(&self.employed.to_string());
        for check in self.checks {
            out.push(',');
            out.push_str(if check { "true" } else { "false" });
        }
    }
}

/// Render header plus rows to a string with LF endings.
pub fn to_csv_string<R: CsvRecord>(rows: &[R]) -> String {
    let mut text = String::with_capacity(64 * (rows.len() + 1));
    text.push_str(R::HEADER);
    text.push('\n');
    for row in rows {
        row.write_row(&mut text);
        text.push('\n');
    }
    text
}

pub fn write_csv<R: CsvRecord>(rows: &[R], path: &Path) -> io::Result<()> {
    std::fs::write(path, to_csv_string(rows))
}
