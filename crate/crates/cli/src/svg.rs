//! Dependency-free SVG line charts of sweep results: one chart per metric,
//! four polylines (one per regime) with distinct colors and dash patterns,
//! axis ticks, and a legend.

use crate::csv::format_float;
use coordsim::experiments::{Regime, SweepRow};
use std::fmt::Write as _;
use std::io;
use std::path::Path;

const WIDTH: f64 = 760.0;
const HEIGHT: f64 = 440.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 185.0;
const MARGIN_TOP: f64 = 34.0;
const MARGIN_BOTTOM: f64 = 52.0;
const TICKS: usize = 5;

/// The metric a chart plots, one per [`coordsim::metrics::MetricRow`]
/// field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMetric {
    Output,
    OutputIndex,
    GiniEconomy,
    GiniManagers,
    Gap,
    Top10Share,
    Unemployment,
    Employed,
}

impl SweepMetric {
    /// The six dashboard metrics charted by the sweep command.
    pub const CHARTED: [SweepMetric; 6] = [
        SweepMetric::OutputIndex,
        SweepMetric::GiniEconomy,
        SweepMetric::GiniManagers,
        SweepMetric::Gap,
        SweepMetric::Top10Share,
        SweepMetric::Unemployment,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            SweepMetric::Output => "output",
            SweepMetric::OutputIndex => "output_index",
            SweepMetric::GiniEconomy => "gini_economy",
            SweepMetric::GiniManagers => "gini_managers",
            SweepMetric::Gap => "gap",
            SweepMetric::Top10Share => "top10_share",
            SweepMetric::Unemployment => "unemployment",
            SweepMetric::Employed => "employed",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SweepMetric::Output => "Total output",
            SweepMetric::OutputIndex => "Output index (K_A = 0 baseline)",
            SweepMetric::GiniEconomy => "Economy-wide Gini",
            SweepMetric::GiniManagers => "Manager Gini",
            SweepMetric::Gap => "Manager-worker wage gap",
            SweepMetric::Top10Share => "Top 10% income share",
            SweepMetric::Unemployment => "Unemployment rate",
            SweepMetric::Employed => "Employed workers",
        }
    }

    pub fn value(self, row: &SweepRow) -> f64 {
        let m = &row.metrics;
        match self {
            SweepMetric::Output => m.output,
            SweepMetric::OutputIndex => m.output_index,
            SweepMetric::GiniEconomy => m.gini_economy,
            SweepMetric::GiniManagers => m.gini_managers,
            SweepMetric::Gap => m.gap,
            SweepMetric::Top10Share => m.top10_share,
            SweepMetric::Unemployment => m.unemployment,
            SweepMetric::Employed => m.employed as f64,
        }
    }
}

fn regime_style(regime: Regime) -> (&'static str, &'static str) {
    match regime {
        Regime::GentleCompression => ("#1f77b4", ""),
        Regime::RisingTide => ("#d62728", "7 4"),
        Regime::WinnerTakesAll => ("#2ca02c", "2 3"),
        Regime::CreativeDestruction => ("#9467bd", "9 4 2 4"),
    }
}

/// Build the chart as a self-contained SVG document.
pub fn sweep_chart(rows: &[SweepRow], metric: SweepMetric) -> String {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;

    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for row in rows {
        x_min = x_min.min(row.k_a);
        x_max = x_max.max(row.k_a);
        let v = metric.value(row);
        y_min = y_min.min(v);
        y_max = y_max.max(v);
    }
    if rows.is_empty() {
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    // Degenerate ranges (single point, constant series) get padded so the
    // projection stays finite.
    if x_max - x_min < 1e-12 {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if y_max - y_min < 1e-12 {
        let pad = (y_max.abs() * 0.1).max(0.5);
        y_min -= pad;
        y_max += pad;
    }
    let px = |x: f64| MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w;
    let py = |y: f64| MARGIN_TOP + plot_h - (y - y_min) / (y_max - y_min) * plot_h;

    let mut svg = String::with_capacity(8192);
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(
        svg,
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"20\" font-family=\"sans-serif\" font-size=\"15\" \
         font-weight=\"bold\">{}</text>",
        MARGIN_LEFT,
        metric.label()
    );

    // Axes.
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    let _ = writeln!(
        svg,
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>",
        x0 + plot_w
    );
    let _ = writeln!(
        svg,
        "  <line x1=\"{x0:.2}\" y1=\"{:.2}\" x2=\"{x0:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>",
        MARGIN_TOP
    );

    // Ticks and grid labels.
    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let xv = x_min + f * (x_max - x_min);
        let xp = px(xv);
        let _ = writeln!(
            svg,
            "  <line x1=\"{xp:.2}\" y1=\"{y0:.2}\" x2=\"{xp:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
            y0 + 5.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{xp:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"middle\">{}</text>",
            y0 + 18.0,
            format_float(xv)
        );
        let yv = y_min + f * (y_max - y_min);
        let yp = py(yv);
        let _ = writeln!(
            svg,
            "  <line x1=\"{:.2}\" y1=\"{yp:.2}\" x2=\"{x0:.2}\" y2=\"{yp:.2}\" stroke=\"black\"/>",
            x0 - 5.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"end\">{}</text>",
            x0 - 8.0,
            yp + 4.0,
            format_float(yv)
        );
    }
    let _ = writeln!(
        svg,
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">agent capital K_A</text>",
        x0 + plot_w / 2.0,
        HEIGHT - 12.0
    );

    // One polyline per regime, canonical order.
    let mut legend_y = MARGIN_TOP + 10.0;
    for regime in Regime::ALL {
        let series: Vec<&SweepRow> = rows.iter().filter(|r| r.regime == regime).collect();
        if series.is_empty() {
            continue;
        }
        let (color, dash) = regime_style(regime);
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(" stroke-dasharray=\"{dash}\"")
        };
        let mut points = String::new();
        for row in &series {
            let _ = write!(points, "{:.2},{:.2} ", px(row.k_a), py(metric.value(row)));
        }
        let _ = writeln!(
            svg,
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.8\"{dash_attr} \
             points=\"{}\"/>",
            points.trim_end()
        );
        if series.len() == 1 {
            // A single grid point would be an invisible polyline.
            let row = series[0];
            let _ = writeln!(
                svg,
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>",
                px(row.k_a),
                py(metric.value(row))
            );
        }

        let lx = MARGIN_LEFT + plot_w + 14.0;
        let _ = writeln!(
            svg,
            "  <line x1=\"{lx:.2}\" y1=\"{legend_y:.2}\" x2=\"{:.2}\" y2=\"{legend_y:.2}\" \
             stroke=\"{color}\" stroke-width=\"1.8\"{dash_attr}/>",
            lx + 26.0
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" \
             font-size=\"11\">{}</text>",
            lx + 32.0,
            legend_y + 4.0,
            regime.name()
        );
        legend_y += 20.0;
    }

    svg.push_str("</svg>\n");
    svg
}

pub fn render_sweep_svg(rows: &[SweepRow], metric: SweepMetric, path: &Path) -> io::Result<()> {
    std::fs::write(path, sweep_chart(rows, metric))
}
